//! Command-line front end behind the `qsd` binary.
//!
//! Exit codes: 0 success, 1 verification found a violation, 2 usage or
//! parse error, 3 domain error, 4 I/O error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::differential::differential_skew_divergence;
use crate::divergence::{
    fidelity, relative_entropy, skew_divergence, trace_distance, von_neumann_entropy, DivergenceValue, SkewParameter,
};
use crate::ensemble::{holevo_chi, mixing_rate, Ensemble, MixingExperiment};
use crate::error::{QsdError, Result};
use crate::frechet::chi2_log;
use crate::hermitian::PositiveOperator;
use crate::io::{read_ensemble, read_operator, read_state, write_json, ChannelFile, EnsembleFile, StateFile};
use crate::random::{random_cptp, random_hamiltonian, random_state, random_weights};
use crate::verify::{run_verification, SuiteSelection, VerifyConfig, DEFAULT_SEED, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "qsd", version, about = "Skew divergences, their differential form and ensemble bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a measure on states read from JSON files.
    Compute {
        #[arg(long, value_enum)]
        measure: Measure,
        /// Skewing parameter for sd and dsd.
        #[arg(long)]
        alpha: Option<f64>,
        /// Time for mixing-rate.
        #[arg(long)]
        t: Option<f64>,
        /// States, or an ensemble followed by one Hamiltonian per member.
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Write a seeded random object as JSON.
    Random {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// Members of an ensemble, or Kraus operators of a channel.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, env = "QSD_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Run the randomized inequality checks and write a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: SuiteSelection,
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = "QSD_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Entropy,
    Re,
    Sd,
    Dsd,
    TraceDist,
    Fidelity,
    Chi,
    MixingRate,
    Chi2log,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    State,
    Ensemble,
    Hamiltonian,
    Channel,
}

pub fn exit_code(e: &QsdError) -> i32 {
    match e {
        QsdError::Format(_) => EXIT_USAGE,
        QsdError::Io(_) => EXIT_IO,
        _ => EXIT_DOMAIN,
    }
}

fn arity(inputs: &[PathBuf], n: usize, measure: Measure) -> Result<()> {
    if inputs.len() != n {
        return Err(QsdError::Format(format!("{measure:?} takes {n} input file(s), got {}", inputs.len())));
    }
    Ok(())
}

fn positive(path: &PathBuf) -> Result<PositiveOperator> {
    PositiveOperator::new(read_operator(path)?).map_err(|e| QsdError::Format(format!("{}: {e}", path.display())))
}

fn alpha_of(alpha: Option<f64>) -> Result<f64> {
    alpha.ok_or_else(|| QsdError::Format("--alpha is required for this measure".into()))
}

/// Evaluates `measure` and formats the result.
pub fn compute(measure: Measure, alpha: Option<f64>, t: Option<f64>, inputs: &[PathBuf]) -> Result<String> {
    let value = match measure {
        Measure::Entropy => {
            arity(inputs, 1, measure)?;
            let rho = read_state(&inputs[0])?;
            DivergenceValue::Finite(von_neumann_entropy(&rho))
        }
        Measure::Re => {
            arity(inputs, 2, measure)?;
            relative_entropy(&positive(&inputs[0])?, &positive(&inputs[1])?)?
        }
        Measure::Sd => {
            arity(inputs, 2, measure)?;
            let a = SkewParameter::new(alpha_of(alpha)?)?;
            DivergenceValue::Finite(skew_divergence(&positive(&inputs[0])?, &positive(&inputs[1])?, a)?)
        }
        Measure::Dsd => {
            arity(inputs, 2, measure)?;
            let a = alpha_of(alpha)?;
            DivergenceValue::Finite(differential_skew_divergence(&positive(&inputs[0])?, &positive(&inputs[1])?, a)?)
        }
        Measure::TraceDist => {
            arity(inputs, 2, measure)?;
            let (rho, sigma) = (read_state(&inputs[0])?, read_state(&inputs[1])?);
            DivergenceValue::Finite(trace_distance(&rho, &sigma)?)
        }
        Measure::Fidelity => {
            arity(inputs, 2, measure)?;
            let (rho, sigma) = (read_state(&inputs[0])?, read_state(&inputs[1])?);
            DivergenceValue::Finite(fidelity(&rho, &sigma)?)
        }
        Measure::Chi => {
            arity(inputs, 1, measure)?;
            DivergenceValue::Finite(holevo_chi(&read_ensemble(&inputs[0])?))
        }
        Measure::MixingRate => {
            let e: Ensemble =
                read_ensemble(inputs.first().ok_or_else(|| QsdError::Format("missing ensemble".into()))?)?;
            arity(inputs, 1 + e.len(), measure)?;
            let hs = inputs[1..].iter().map(read_operator).collect::<Result<Vec<_>>>()?;
            let t = t.ok_or_else(|| QsdError::Format("--t is required for mixing-rate".into()))?;
            DivergenceValue::Finite(mixing_rate(&MixingExperiment::new(e, hs, t)?)?)
        }
        Measure::Chi2log => {
            arity(inputs, 2, measure)?;
            DivergenceValue::Finite(chi2_log(&positive(&inputs[0])?, &positive(&inputs[1])?)?)
        }
    };
    Ok(value.to_string())
}

pub fn random(kind: Kind, dim: usize, n: usize, seed: u64, out: &str) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        Kind::State => write_json(out, &StateFile::from_operator(&random_state(dim, &mut rng))),
        Kind::Hamiltonian => write_json(out, &StateFile::from_operator(&random_hamiltonian(dim, &mut rng))),
        Kind::Ensemble => {
            let w = random_weights(n, &mut rng);
            let states = (0..n).map(|_| random_state(dim, &mut rng)).collect();
            write_json(out, &EnsembleFile::from_ensemble(&Ensemble::new(w, states)?))
        }
        Kind::Channel => write_json(out, &ChannelFile::from_channel(&random_cptp(dim, n, &mut rng))),
    }
}

/// Runs the suite, writes the report and returns the exit code.
pub fn verify(cfg: &VerifyConfig, out: &str) -> Result<i32> {
    let report = run_verification(cfg)?;
    write_json(out, &report)?;
    for c in report.checks.iter().filter(|c| !c.passed()) {
        eprintln!(
            "FAIL {}: {} violation(s), {} error(s), worst slack {:?}{}",
            c.check_id,
            c.violations,
            c.errors,
            c.worst_slack,
            c.first_error.as_deref().map(|e| format!(", {e}")).unwrap_or_default()
        );
    }
    eprintln!(
        "{} checks, {} violations, {} errors, {:.1}s",
        report.checks.len(),
        report.violations,
        report.errors,
        report.wall_time
    );
    Ok(if report.passed { EXIT_OK } else { EXIT_VIOLATION })
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Compute { measure, alpha, t, inputs } => {
            println!("{}", compute(measure, alpha, t, &inputs)?);
            Ok(EXIT_OK)
        }
        Command::Random { kind, dim, n, seed, out } => {
            random(kind, dim as usize, n as usize, seed, &out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite, dims, trials, seed, tol, out } => {
            if dims.is_empty() || dims.contains(&0) {
                return Err(QsdError::Format("--dims must list positive integers".into()));
            }
            if !(tol.is_finite() && tol >= 0.0) {
                return Err(QsdError::Format("--tol must be finite and non-negative".into()));
            }
            let cfg = VerifyConfig { suite, dims, trials: trials as usize, seed, tolerance: tol };
            verify(&cfg, &out)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qsd: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_verify_flags() {
        let cli = Cli::try_parse_from(["qsd", "verify", "--suite", "core", "--dims", "2,6", "--trials", "3"]).unwrap();
        match cli.command {
            Command::Verify { suite, dims, trials, .. } => {
                assert_eq!(suite, "core".parse().unwrap());
                assert_eq!(dims, vec![2, 6]);
                assert_eq!(trials, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["qsd", "verify", "--trials", "0"]), EXIT_USAGE);
        assert_eq!(run(["qsd", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["qsd", "verify", "--suite", "nope"]), EXIT_USAGE);
    }

    #[test]
    fn error_classes_map_to_codes() {
        assert_eq!(exit_code(&QsdError::Format("x".into())), EXIT_USAGE);
        assert_eq!(exit_code(&QsdError::InvalidSkew(2.0)), EXIT_DOMAIN);
        assert_eq!(exit_code(&QsdError::Io(std::io::Error::other("x"))), EXIT_IO);
    }
}
