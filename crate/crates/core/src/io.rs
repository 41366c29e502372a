//! JSON file formats.
//!
//! * `qsd-state-v1`: `{"format","dim","re","im"}` with row-major real and
//!   imaginary parts. Used for states and for Hamiltonians.
//! * `qsd-ensemble-v1`: `{"format","weights","states"}` with state objects inline.
//! * `qsd-channel-v1`: `{"format","dim","kraus"}`, each Kraus operator an
//!   `{"re","im"}` pair of square row-major matrices.
//!
//! Readers reject matrices whose Hermitian asymmetry exceeds 1e-9.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::channel::KrausChannel;
use crate::ensemble::Ensemble;
use crate::error::{QsdError, Result};
use crate::hermitian::{CMatrix, DensityMatrix, HermitianOperator};

pub const STATE_FORMAT: &str = "qsd-state-v1";
pub const ENSEMBLE_FORMAT: &str = "qsd-ensemble-v1";
pub const CHANNEL_FORMAT: &str = "qsd-channel-v1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub format: String,
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleFile {
    pub format: String,
    pub weights: Vec<f64>,
    pub states: Vec<StateFile>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixParts {
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChannelFile {
    pub format: String,
    pub dim: usize,
    pub kraus: Vec<MatrixParts>,
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(QsdError::Format(format!("expected format \"{expected}\", found \"{found}\"")));
    }
    Ok(())
}

fn check_shape(rows: &[Vec<f64>], dim: usize, what: &str) -> Result<()> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(QsdError::Format(format!("{what} is not a {dim}x{dim} array")));
    }
    Ok(())
}

fn as_format_error(e: QsdError) -> QsdError {
    match e {
        QsdError::Io(_) | QsdError::Format(_) => e,
        other => QsdError::Format(other.to_string()),
    }
}

impl StateFile {
    pub fn from_operator(op: &HermitianOperator) -> Self {
        Self { format: STATE_FORMAT.into(), dim: op.dim(), re: op.re_rows(), im: op.im_rows() }
    }

    pub fn to_operator(&self) -> Result<HermitianOperator> {
        check_format(&self.format, STATE_FORMAT)?;
        if self.dim == 0 {
            return Err(QsdError::Format("dim must be positive".into()));
        }
        check_shape(&self.re, self.dim, "re")?;
        check_shape(&self.im, self.dim, "im")?;
        HermitianOperator::from_parts(&self.re, &self.im).map_err(as_format_error)
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        DensityMatrix::new(self.to_operator()?).map_err(as_format_error)
    }
}

impl EnsembleFile {
    pub fn from_ensemble(e: &Ensemble) -> Self {
        Self {
            format: ENSEMBLE_FORMAT.into(),
            weights: e.weights().to_vec(),
            states: e.states().iter().map(|s| StateFile::from_operator(s)).collect(),
        }
    }

    pub fn to_ensemble(&self) -> Result<Ensemble> {
        check_format(&self.format, ENSEMBLE_FORMAT)?;
        let states = self.states.iter().map(StateFile::to_density).collect::<Result<Vec<_>>>()?;
        Ensemble::new(self.weights.clone(), states).map_err(as_format_error)
    }
}

impl ChannelFile {
    pub fn from_channel(c: &KrausChannel) -> Self {
        let kraus = c
            .kraus()
            .iter()
            .map(|k| MatrixParts {
                re: k.row_iter().map(|r| r.iter().map(|z| z.re).collect()).collect(),
                im: k.row_iter().map(|r| r.iter().map(|z| z.im).collect()).collect(),
            })
            .collect();
        Self { format: CHANNEL_FORMAT.into(), dim: c.dim(), kraus }
    }

    pub fn to_channel(&self) -> Result<KrausChannel> {
        check_format(&self.format, CHANNEL_FORMAT)?;
        let n = self.dim;
        let mut kraus = Vec::with_capacity(self.kraus.len());
        for k in &self.kraus {
            check_shape(&k.re, n, "re")?;
            check_shape(&k.im, n, "im")?;
            kraus.push(CMatrix::from_fn(n, n, |i, j| Complex64::new(k.re[i][j], k.im[i][j])));
        }
        KrausChannel::new(kraus).map_err(as_format_error)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| QsdError::Format(e.to_string()))
}

pub fn parse_operator(text: &str) -> Result<HermitianOperator> {
    parse::<StateFile>(text)?.to_operator()
}

pub fn parse_state(text: &str) -> Result<DensityMatrix> {
    parse::<StateFile>(text)?.to_density()
}

pub fn parse_ensemble(text: &str) -> Result<Ensemble> {
    parse::<EnsembleFile>(text)?.to_ensemble()
}

pub fn parse_channel(text: &str) -> Result<KrausChannel> {
    parse::<ChannelFile>(text)?.to_channel()
}

pub fn read_operator(path: impl AsRef<Path>) -> Result<HermitianOperator> {
    parse_operator(&fs::read_to_string(path)?)
}

pub fn read_state(path: impl AsRef<Path>) -> Result<DensityMatrix> {
    parse_state(&fs::read_to_string(path)?)
}

pub fn read_ensemble(path: impl AsRef<Path>) -> Result<Ensemble> {
    parse_ensemble(&fs::read_to_string(path)?)
}

pub fn read_channel(path: impl AsRef<Path>) -> Result<KrausChannel> {
    parse_channel(&fs::read_to_string(path)?)
}

/// Compact JSON followed by a newline.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("file types serialize infallibly");
    s.push('\n');
    s
}

/// Writes `value` to `path`, or to standard output when `path` is `-`.
pub fn write_json<T: Serialize>(path: &str, value: &T) -> Result<()> {
    let text = to_json_line(value);
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_cptp, random_state, random_weights};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn state_round_trip_is_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let rho = random_state(3, &mut rng);
        let text = to_json_line(&StateFile::from_operator(&rho));
        assert!(text.starts_with("{\"format\":\"qsd-state-v1\",\"dim\":3,"));
        let back = parse_state(&text).unwrap();
        assert_eq!(back.matrix(), rho.matrix());
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(parse_state("{"), Err(QsdError::Format(_))));
        let wrong_tag = r#"{"format":"other","dim":1,"re":[[1]],"im":[[0]]}"#;
        assert!(matches!(parse_state(wrong_tag), Err(QsdError::Format(_))));
        let asym = r#"{"format":"qsd-state-v1","dim":2,"re":[[0.5,0.1],[0.0,0.5]],"im":[[0,0],[0,0]]}"#;
        assert!(matches!(parse_state(asym), Err(QsdError::Format(_))));
        let shape = r#"{"format":"qsd-state-v1","dim":2,"re":[[1,0]],"im":[[0,0],[0,0]]}"#;
        assert!(matches!(parse_state(shape), Err(QsdError::Format(_))));
        let not_state = r#"{"format":"qsd-state-v1","dim":1,"re":[[2]],"im":[[0]]}"#;
        assert!(matches!(parse_state(not_state), Err(QsdError::Format(_))));
        assert!(parse_operator(not_state).is_ok());
    }

    #[test]
    fn ensemble_and_channel_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let w = random_weights(3, &mut rng);
        let states = (0..3).map(|_| random_state(2, &mut rng)).collect();
        let e = Ensemble::new(w, states).unwrap();
        let back = parse_ensemble(&to_json_line(&EnsembleFile::from_ensemble(&e))).unwrap();
        assert_eq!(back, e);

        let ch = random_cptp(2, 3, &mut rng);
        let back = parse_channel(&to_json_line(&ChannelFile::from_channel(&ch))).unwrap();
        assert_eq!(back.kraus(), ch.kraus());
    }
}
