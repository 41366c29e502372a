//! The differential skew divergence and the ways of recovering SD from it.
//!
//! `cargo run --example differential`

use qsd::differential::{differential_skew_divergence, differential_skew_divergence_trace_form, sd_by_averaging};
use qsd::divergence::{skew_divergence, skewed_relative_entropy, SkewParameter};
use qsd::quadrature::QuadratureScheme;
use qsd::random::random_state;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let rho = random_state(3, &mut rng);
    let sigma = random_state(3, &mut rng);

    println!("{:>5} {:>12} {:>12} {:>12} {:>12}", "alpha", "D_a", "D_{1-a}(s|r)", "trace form", "-a dS/da");
    for a in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let d = differential_skew_divergence(&rho, &sigma, a)?;
        let swapped = differential_skew_divergence(&sigma, &rho, 1.0 - a)?;
        let trace_form = differential_skew_divergence_trace_form(&rho, &sigma, a)?;
        let h = 1e-5;
        let fd = -a
            * (skewed_relative_entropy(&rho, &sigma, SkewParameter::new(a + h)?)?
                - skewed_relative_entropy(&rho, &sigma, SkewParameter::new(a - h)?)?)
            / (2.0 * h);
        println!("{a:>5} {d:>12.8} {swapped:>12.8} {trace_form:>12.8} {fd:>12.8}");
    }

    let al = SkewParameter::new(0.25)?;
    let direct = skew_divergence(&rho, &sigma, al)?;
    let averaged = sd_by_averaging(&rho, &sigma, al, &QuadratureScheme::default())?;
    println!("\nSD_0.25 directly {direct:.12}, by averaging D {averaged:.12}");
    Ok(())
}
