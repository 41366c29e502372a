//! Continuity of SD in its second argument, and the state family that
//! attains the bound.
//!
//! `cargo run --example continuity`

use qsd::continuity::sd_first_argument_fixed;
use qsd::divergence::{skew_divergence, trace_distance, SkewParameter};
use qsd::hermitian::DensityMatrix;
use qsd::random::random_state;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let al = SkewParameter::new(0.5)?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);

    println!("random triples: |SD(r||s1) - SD(r||s2)| against the bound");
    for _ in 0..5 {
        let rho = random_state(3, &mut rng);
        let s1 = random_state(3, &mut rng);
        let s2 = random_state(3, &mut rng);
        let t = trace_distance(&s1, &s2)?;
        let lhs = (skew_divergence(&rho, &s1, al)? - skew_divergence(&rho, &s2, al)?).abs();
        println!("  t = {t:.4}  lhs = {lhs:.6}  bound = {:.6}", sd_first_argument_fixed(t, al));
    }

    println!("rho orthogonal to s1, s2 = t rho + (1-t) s1: equality");
    let rho = DensityMatrix::from_diagonal(&[1.0, 0.0])?;
    let s1 = DensityMatrix::from_diagonal(&[0.0, 1.0])?;
    for t in [0.1, 0.5, 0.9] {
        let s2 = DensityMatrix::from_diagonal(&[t, 1.0 - t])?;
        let lhs = (skew_divergence(&rho, &s1, al)? - skew_divergence(&rho, &s2, al)?).abs();
        println!("  t = {t}  lhs = {lhs:.12}  bound = {:.12}", sd_first_argument_fixed(t, al));
    }
    Ok(())
}
