//! First and second Frechet derivatives of the matrix logarithm, checked
//! against the resolvent integrals.
//!
//! `cargo run --example frechet_log`

use qsd::frechet::{frechet_log_quadrature, second_frechet_log_quadrature, LogDerivative};
use qsd::hermitian::{spectrum, HermitianOperator};
use qsd::quadrature::QuadratureScheme;
use qsd::random::{random_hermitian, random_unitary};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> qsd::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    // condition number 1e5, with a repeated eigenvalue
    let u = random_unitary(4, &mut rng);
    let a = HermitianOperator::from_real_diagonal(&[1.0, 1e-2, 1e-2, 1e-5]).conjugate_by(&u)?;
    let delta = random_hermitian(4, &mut rng);
    println!("spectrum of A: {:?}", spectrum(&a));

    let d = LogDerivative::new(&a)?;
    let t = d.first(delta.matrix());
    let t_quad = frechet_log_quadrature(&a, delta.matrix(), &QuadratureScheme::default())?;
    println!("T_A(D): relative gap to quadrature {:.2e}", (&t - &t_quad).norm() / t.norm());

    let r = d.second(delta.matrix(), delta.matrix());
    let r_quad = second_frechet_log_quadrature(&a, delta.matrix(), delta.matrix(), &QuadratureScheme::default())?;
    println!("R_A(D, D): relative gap to quadrature {:.2e}", (&r - &r_quad).norm() / r.norm());

    // R_A(A, D) = T_A(D)
    let gap = (d.second(a.matrix(), delta.matrix()) - &t).norm() / t.norm();
    println!("R_A(A, D) against T_A(D): relative gap {gap:.2e}");
    println!("M_A(D, D) = {:.6}", d.metric_diagonal(&delta));
    Ok(())
}
