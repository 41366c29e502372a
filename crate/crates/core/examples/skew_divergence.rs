//! Skew divergence next to the relative entropy and the trace distance.
//!
//! `cargo run --example skew_divergence`

use qsd::divergence::{fidelity, relative_entropy, skew_divergence, trace_distance, SkewParameter};
use qsd::hermitian::DensityMatrix;
use qsd::random::random_state;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rho = random_state(3, &mut rng);
    let sigma = random_state(3, &mut rng);

    println!("T(rho, sigma) = {:.6}", trace_distance(&rho, &sigma)?);
    println!("F(rho, sigma) = {:.6}", fidelity(&rho, &sigma)?);
    println!("S(rho||sigma) = {}", relative_entropy(&rho, &sigma)?);
    for a in [0.01, 0.1, 0.5, 0.9, 0.99] {
        let v = skew_divergence(&rho, &sigma, SkewParameter::new(a)?)?;
        println!("SD_{a:<4} = {v:.6}");
    }

    // orthogonal pure states: S is infinite, SD saturates at 1
    let up = DensityMatrix::from_diagonal(&[1.0, 0.0])?;
    let down = DensityMatrix::from_diagonal(&[0.0, 1.0])?;
    println!("\northogonal pair:");
    println!("S  = {}", relative_entropy(&up, &down)?);
    println!("SD = {:.12}", skew_divergence(&up, &down, SkewParameter::new(0.5)?)?);
    Ok(())
}
