//! The differential skew divergence
//! `𝒟_α(A‖B) = α(1−α) M_{αA+(1−α)B}(A−B, A−B)` and the averaging formula that
//! recovers the skew divergence from it:
//! `SD_α(A‖B) = (1/−log α) ∫_0^{−log α} 𝒟_{e^{−b}}(A‖B) db`.

use crate::divergence::{restrict_to_joint_support, SkewParameter};
use crate::error::{QsdError, Result};
use crate::frechet::LogDerivative;
use crate::hermitian::{HermitianOperator, PositiveOperator};
use crate::quadrature::QuadratureScheme;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(QsdError::InvalidSkew(alpha));
    }
    Ok(())
}

/// `𝒟_α(A‖B)` on `supp(A + B)`; identically 0 at `α ∈ {0, 1}`.
pub fn differential_skew_divergence(a: &PositiveOperator, b: &PositiveOperator, alpha: f64) -> Result<f64> {
    a.same_dim(b)?;
    check_alpha(alpha)?;
    let (a_r, b_r) = restrict_to_joint_support(a, b)?;
    restricted_dsd(&a_r, &b_r, alpha)
}

fn restricted_dsd(a: &HermitianOperator, b: &HermitianOperator, alpha: f64) -> Result<f64> {
    if alpha == 0.0 || alpha == 1.0 {
        return Ok(0.0);
    }
    let tau = &a.scale(alpha) + &b.scale(1.0 - alpha);
    let diff = a - b;
    Ok(alpha * (1.0 - alpha) * LogDerivative::new(&tau)?.metric_diagonal(&diff))
}

/// `𝒟_α(A‖B)` through the trace form
/// `α/(1−α)·trace A𝒯_τ(A) − α/(1−α)·trace A − α·trace(A−B)`.
///
/// Mathematically identical to [`differential_skew_divergence`]; kept as an
/// independent evaluation for cross-checks.
pub fn differential_skew_divergence_trace_form(a: &PositiveOperator, b: &PositiveOperator, alpha: f64) -> Result<f64> {
    a.same_dim(b)?;
    check_alpha(alpha)?;
    let (a_r, b_r) = restrict_to_joint_support(a, b)?;
    if alpha == 0.0 || alpha == 1.0 {
        return Ok(0.0);
    }
    let tau = &a_r.scale(alpha) + &b_r.scale(1.0 - alpha);
    let ta = LogDerivative::new(&tau)?.metric_diagonal(&a_r);
    let k = alpha / (1.0 - alpha);
    Ok(k * ta - k * a_r.trace() - alpha * (a_r.trace() - b_r.trace()))
}

/// Scalar `𝒟_α(b|c) = α(1−α)(b−c)²/(αb + (1−α)c)`; 0 when both vanish or at the endpoints.
pub fn scalar_differential_sd(b: f64, c: f64, alpha: f64) -> f64 {
    if alpha <= 0.0 || alpha >= 1.0 {
        return 0.0;
    }
    let mix = alpha * b + (1.0 - alpha) * c;
    if mix <= 0.0 {
        return 0.0;
    }
    alpha * (1.0 - alpha) * (b - c) * (b - c) / mix
}

/// `SD_α(A‖B)` reconstructed by integrating `𝒟_{α'}` over `b = −log α' ∈ [0, −log α]`.
///
/// The integration variable is rescaled to `u = b/(−log α) ∈ [0, 1]`; the graded
/// panels cluster at `u = 0` (`α' → 1`), where `𝒟_{α'}` can vary on the scale
/// of the smallest eigenvalue of `B` outside `supp A`.
pub fn sd_by_averaging(
    a: &PositiveOperator,
    b: &PositiveOperator,
    alpha: SkewParameter,
    quad: &QuadratureScheme,
) -> Result<f64> {
    a.same_dim(b)?;
    // supp(α'A + (1−α')B) = supp(A + B) for every α' in (0, 1)
    let (a_r, b_r) = restrict_to_joint_support(a, b)?;
    let l = alpha.neg_log();
    let (value, _) = quad.refine_until_stable(
        |q| q.integrate_unit(|u| restricted_dsd(&a_r, &b_r, (-l * u).exp())),
        |x, y| (x - y).abs(),
    )?;
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divergence::{skew_divergence, skewed_relative_entropy};
    use crate::hermitian::DensityMatrix;
    use crate::random::{random_positive, random_pure_state, random_state};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn scalar(x: f64) -> PositiveOperator {
        PositiveOperator::new(HermitianOperator::from_real_diagonal(&[x])).unwrap()
    }

    #[test]
    fn examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let rho = random_state(3, &mut rng);
        assert!(differential_skew_divergence(&rho, &rho, 0.3).unwrap().abs() < 1e-14);
        for al in [0.1, 0.5, 0.8] {
            let d = differential_skew_divergence(&scalar(1.0), &scalar(0.0), al).unwrap();
            assert!((d - (1.0 - al)).abs() < 1e-14);
            let d = differential_skew_divergence(&scalar(0.0), &scalar(1.0), al).unwrap();
            assert!((d - al).abs() < 1e-14);
        }
        let sigma = random_state(3, &mut rng);
        assert_eq!(differential_skew_divergence(&rho, &sigma, 0.0).unwrap(), 0.0);
        assert_eq!(differential_skew_divergence(&rho, &sigma, 1.0).unwrap(), 0.0);
        assert!(matches!(differential_skew_divergence(&rho, &sigma, 1.5), Err(QsdError::InvalidSkew(_))));
        let zero = PositiveOperator::new(HermitianOperator::zeros(3)).unwrap();
        assert!(differential_skew_divergence(&zero, &zero, 0.5).is_err());
    }

    #[test]
    fn scalar_forms_agree() {
        assert_eq!(scalar_differential_sd(0.7, 0.7, 0.4), 0.0);
        assert!((scalar_differential_sd(1.0, 0.0, 0.5) - 0.5).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..1000 {
            let b: f64 = rng.random_range(0.0..3.0);
            let c: f64 = rng.random_range(0.0..3.0);
            let al: f64 = rng.random_range(0.01..0.99);
            let second_form = al / (1.0 - al) * (b * b / (al * b + (1.0 - al) * c) - b) - al * (b - c);
            let d = scalar_differential_sd(b, c, al);
            assert!((d - second_form).abs() < 1e-12 * (1.0 + b + c), "{b} {c} {al}");
        }
    }

    #[test]
    fn trace_form_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in 1..6 {
            let a = random_positive(dim, 2.0, &mut rng);
            let b = random_positive(dim, 2.0, &mut rng);
            let al = rng.random_range(0.05..0.95);
            let x = differential_skew_divergence(&a, &b, al).unwrap();
            let y = differential_skew_divergence_trace_form(&a, &b, al).unwrap();
            assert!((x - y).abs() < 1e-9, "{x} {y}");
        }
    }

    #[test]
    fn averaging_reconstructs_skew_divergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let q = QuadratureScheme::default();
        let half = SkewParameter::new(0.5).unwrap();
        let rho = random_state(3, &mut rng);
        assert!(sd_by_averaging(&rho, &rho, half, &q).unwrap().abs() < 1e-12);
        for al in [0.01, 0.5, 0.99] {
            let al = SkewParameter::new(al).unwrap();
            let a = random_positive(4, 1.5, &mut rng);
            let b = random_positive(4, 1.5, &mut rng);
            let avg = sd_by_averaging(&a, &b, al, &q).unwrap();
            let direct = skew_divergence(&a, &b, al).unwrap();
            assert!((avg - direct).abs() < 1e-6, "{avg} {direct}");
        }
        // orthogonal pure states
        let p = DensityMatrix::from_diagonal(&[1.0, 0.0]).unwrap();
        let s = DensityMatrix::from_diagonal(&[0.0, 1.0]).unwrap();
        assert!((sd_by_averaging(&p, &s, half, &q).unwrap() - 1.0).abs() < 1e-6);
        let psi = random_pure_state(3, &mut rng);
        let phi = random_pure_state(3, &mut rng);
        let avg = sd_by_averaging(&psi, &phi, half, &q).unwrap();
        assert!((avg - skew_divergence(&psi, &phi, half).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn derivative_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let a = random_state(3, &mut rng);
        let b = random_state(3, &mut rng);
        let al = 0.3;
        let h = 1e-5;
        let s = |x: f64| skewed_relative_entropy(&a, &b, SkewParameter::new(x).unwrap()).unwrap();
        let fd = -al * (s(al + h) - s(al - h)) / (2.0 * h);
        let d = differential_skew_divergence(&a, &b, al).unwrap();
        assert!((fd - d).abs() < 1e-6, "{fd} {d}");
    }
}
