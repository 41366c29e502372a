//! Entropies and divergences between positive operators.
//!
//! All logarithms are natural. Relative entropies follow the support
//! convention: the first argument is compressed onto the support of the second
//! and `0 log 0 = 0`; if the first argument has weight outside that support the
//! result is [`DivergenceValue::Infinite`].

use std::fmt;

use crate::eigen::eigendecompose;
use crate::error::{QsdError, Result};
use crate::hermitian::{
    default_support_threshold, restrict, spectrum, support_defect_threshold, support_from_decomposition, trace_norm,
    HermitianOperator, PositiveOperator,
};

/// Smallest distance of the skewing parameter from 0 and 1.
pub const SKEW_MARGIN: f64 = 1e-12;

/// The skewing parameter `α`, strictly inside `(0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct SkewParameter(f64);

impl SkewParameter {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(SKEW_MARGIN..=1.0 - SKEW_MARGIN).contains(&alpha) {
            return Err(QsdError::InvalidSkew(alpha));
        }
        Ok(Self(alpha))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `−log α`, the normalization of the skew divergence.
    pub fn neg_log(self) -> f64 {
        -self.0.ln()
    }

    /// `1 − α`.
    pub fn complement(self) -> Self {
        Self(1.0 - self.0)
    }
}

impl TryFrom<f64> for SkewParameter {
    type Error = QsdError;
    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

/// A relative entropy, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DivergenceValue {
    Finite(f64),
    /// The first argument carries `support_defect` trace outside the support of the second.
    Infinite {
        support_defect: f64,
    },
}

impl DivergenceValue {
    /// The value, with `f64::INFINITY` for the infinite case.
    pub fn value(self) -> f64 {
        match self {
            DivergenceValue::Finite(v) => v,
            DivergenceValue::Infinite { .. } => f64::INFINITY,
        }
    }

    pub fn support_defect(self) -> f64 {
        match self {
            DivergenceValue::Finite(_) => 0.0,
            DivergenceValue::Infinite { support_defect } => support_defect,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, DivergenceValue::Infinite { .. })
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            DivergenceValue::Finite(v) => Some(v),
            DivergenceValue::Infinite { .. } => None,
        }
    }
}

impl fmt::Display for DivergenceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivergenceValue::Finite(v) => write!(f, "{v:.17e}"),
            DivergenceValue::Infinite { .. } => f.write_str("inf"),
        }
    }
}

/// `x log x` with `0 log 0 = 0`; nonpositive inputs count as zero.
pub(crate) fn xlogx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// `−Σ λ log λ`.
pub fn von_neumann_entropy(rho: &PositiveOperator) -> f64 {
    -spectrum(rho).into_iter().map(xlogx).sum::<f64>()
}

/// Shannon entropy `−Σ p log p` (natural log).
pub fn shannon_entropy(p: &[f64]) -> f64 {
    -p.iter().copied().map(xlogx).sum::<f64>()
}

/// `S(A‖B) = trace A(log A − log B) − trace(A − B)` with the support convention.
pub fn relative_entropy(a: &PositiveOperator, b: &PositiveOperator) -> Result<DivergenceValue> {
    a.same_dim(b)?;
    let dec_b = eigendecompose(b)?;
    let support = support_from_decomposition(&dec_b, None);
    let trace_a = a.trace();
    let defect_threshold = support_defect_threshold(trace_a.max(dec_b.max()));

    if support.rank == 0 {
        return Ok(if trace_a > defect_threshold {
            DivergenceValue::Infinite { support_defect: trace_a }
        } else {
            DivergenceValue::Finite(0.0)
        });
    }

    let a_r = restrict(a, &support)?;
    let defect = (trace_a - a_r.trace()).max(0.0);
    if defect > defect_threshold {
        return Ok(DivergenceValue::Infinite { support_defect: defect });
    }

    // on its own support B is diagonal in the retained eigenbasis
    let kept: Vec<f64> = dec_b.eigenvalues.iter().copied().filter(|l| *l > support.threshold).collect();
    let cross: f64 = kept.iter().enumerate().map(|(k, l)| a_r.matrix()[(k, k)].re * l.ln()).sum();
    let entropy_term: f64 = spectrum(&a_r).into_iter().map(xlogx).sum();
    let trace_b: f64 = kept.iter().sum();
    Ok(DivergenceValue::Finite(entropy_term - cross - (a_r.trace() - trace_b)))
}

/// `S(A‖αA + (1−α)B)` evaluated on the support of `A + B`.
pub fn skewed_relative_entropy(a: &PositiveOperator, b: &PositiveOperator, alpha: SkewParameter) -> Result<f64> {
    a.same_dim(b)?;
    let (a_r, b_r) = restrict_to_joint_support(a, b)?;
    let al = alpha.value();
    let tau = &a_r.scale(al) + &b_r.scale(1.0 - al);
    let dec = eigendecompose(&tau)?;
    let log_tau = dec.map(|l| l.max(f64::MIN_POSITIVE).ln())?;
    let entropy_term: f64 = spectrum(&a_r).into_iter().map(xlogx).sum();
    Ok(entropy_term - a_r.trace_product(&log_tau) - (1.0 - al) * (a_r.trace() - b_r.trace()))
}

/// Compresses `A` and `B` onto the support of `A + B`.
pub(crate) fn restrict_to_joint_support(
    a: &HermitianOperator,
    b: &HermitianOperator,
) -> Result<(HermitianOperator, HermitianOperator)> {
    let sum = a + b;
    let dec = eigendecompose(&sum)?;
    let p = support_from_decomposition(&dec, None);
    if p.rank == 0 {
        return Err(QsdError::domain("A + B = 0 has empty support"));
    }
    if p.is_full() {
        return Ok((a.clone(), b.clone()));
    }
    Ok((restrict(a, &p)?, restrict(b, &p)?))
}

/// Quantum skew divergence `SD_α(A‖B) = S(A‖αA + (1−α)B)/(−log α)`.
///
/// Always finite; lies in `[0, 1]` for unit-trace arguments.
pub fn skew_divergence(a: &PositiveOperator, b: &PositiveOperator, alpha: SkewParameter) -> Result<f64> {
    Ok(skewed_relative_entropy(a, b, alpha)? / alpha.neg_log())
}

/// `S(a|b) = a(log a − log b) − (a − b)`; `S(0|b) = b`, `S(a|0) = ∞` for `a > 0`.
pub fn scalar_relative_entropy(a: f64, b: f64) -> f64 {
    if a <= 0.0 {
        return b;
    }
    if b <= 0.0 {
        return f64::INFINITY;
    }
    a * (a.ln() - b.ln()) - (a - b)
}

/// Scalar skew divergence `SD_α(b|c)`, with `b log b → 0` at `b = 0`.
/// Both arguments zero gives 0.
pub fn scalar_skew_divergence(b: f64, c: f64, alpha: SkewParameter) -> f64 {
    let al = alpha.value();
    let mix = al * b + (1.0 - al) * c;
    let log_term = if b > 0.0 { b * (b.ln() - mix.ln()) } else { 0.0 };
    (log_term - (1.0 - al) * (b - c)) / alpha.neg_log()
}

/// `T(ρ, σ) = ½‖ρ − σ‖₁`.
pub fn trace_distance(rho: &HermitianOperator, sigma: &HermitianOperator) -> Result<f64> {
    rho.same_dim(sigma)?;
    Ok(0.5 * trace_norm(&(rho - sigma)))
}

/// `trace X₊`, the sum of the positive eigenvalues.
pub fn positive_part_trace(x: &HermitianOperator) -> f64 {
    spectrum(x).into_iter().filter(|l| *l > 0.0).sum()
}

/// Uhlmann fidelity `trace √(√ρ σ √ρ)`.
pub fn fidelity(rho: &PositiveOperator, sigma: &PositiveOperator) -> Result<f64> {
    rho.same_dim(sigma)?;
    // eigenvalues at rounding level are dropped before taking square roots
    let dec = eigendecompose(rho)?;
    let thr = default_support_threshold(rho.dim(), dec.max());
    let sqrt_rho = dec.map(|l| if l > thr { l.sqrt() } else { 0.0 })?;
    let inner = HermitianOperator::from_hermitian_part(sqrt_rho.matrix() * sigma.matrix() * sqrt_rho.matrix())?;
    let ev = spectrum(&inner);
    let thr = default_support_threshold(rho.dim(), ev.last().copied().unwrap_or(0.0));
    let f: f64 = ev.into_iter().filter(|l| *l > thr).map(f64::sqrt).sum();
    Ok(f.min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::DensityMatrix;
    use crate::random::{random_pure_state, random_state, random_unitary};
    use num_complex::Complex64;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn diag(p: &[f64]) -> DensityMatrix {
        DensityMatrix::from_diagonal(p).unwrap()
    }

    fn alpha(a: f64) -> SkewParameter {
        SkewParameter::new(a).unwrap()
    }

    #[test]
    fn skew_parameter_bounds() {
        assert!(SkewParameter::new(0.0).is_err());
        assert!(SkewParameter::new(1.0).is_err());
        assert!(SkewParameter::new(1e-13).is_err());
        assert!(SkewParameter::new(-0.2).is_err());
        assert!(SkewParameter::new(f64::NAN).is_err());
        assert!(SkewParameter::new(1e-12).is_ok());
        assert!(SkewParameter::new(0.5).is_ok());
    }

    #[test]
    fn entropy_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(von_neumann_entropy(&random_pure_state(4, &mut rng)).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(5);
        assert!((von_neumann_entropy(&mixed) - 5f64.ln()).abs() < 1e-14);
        assert!((von_neumann_entropy(&diag(&[0.5, 0.5, 0.0])) - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn relative_entropy_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_state(3, &mut rng);
        assert!(relative_entropy(&rho, &rho).unwrap().value().abs() < 1e-13);

        let v = relative_entropy(&diag(&[1.0, 0.0]), &diag(&[0.5, 0.5])).unwrap();
        assert!((v.value() - 2f64.ln()).abs() < 1e-15);

        let inf = relative_entropy(&diag(&[0.5, 0.5]), &diag(&[1.0, 0.0])).unwrap();
        assert!(inf.is_infinite());
        assert!((inf.support_defect() - 0.5).abs() < 1e-15);
        assert_eq!(inf.to_string(), "inf");
    }

    #[test]
    fn relative_entropy_of_pure_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let psi = random_pure_state(3, &mut rng);
        let phi = random_pure_state(3, &mut rng);
        assert!(relative_entropy(&psi, &phi).unwrap().is_infinite());
        let same = relative_entropy(&psi, &psi).unwrap();
        assert!(same.finite().unwrap().abs() < 1e-12);
    }

    #[test]
    fn unnormalized_relative_entropy_is_scalar_formula_on_multiples() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let x = random_state(3, &mut rng);
        let a = PositiveOperator::new(x.scale(0.7)).unwrap();
        let b = PositiveOperator::new(x.scale(1.9)).unwrap();
        let v = relative_entropy(&a, &b).unwrap().value();
        assert!((v - scalar_relative_entropy(0.7, 1.9)).abs() < 1e-13);
    }

    #[test]
    fn scalar_relative_entropy_examples() {
        assert_eq!(scalar_relative_entropy(1.0, 1.0), 0.0);
        let e = std::f64::consts::E;
        assert!((scalar_relative_entropy(1.0, e) - (e - 2.0)).abs() < 1e-15);
        assert_eq!(scalar_relative_entropy(0.0, 3.5), 3.5);
        assert_eq!(scalar_relative_entropy(1.0, 0.0), f64::INFINITY);
    }

    #[test]
    fn skew_divergence_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let rho = random_state(4, &mut rng);
        for a in [0.01, 0.5, 0.99] {
            assert!(skew_divergence(&rho, &rho, alpha(a)).unwrap().abs() < 1e-12);
        }
        let e0 = diag(&[1.0, 0.0]);
        let e1 = diag(&[0.0, 1.0]);
        for a in [0.01, 0.3, 0.5, 0.99] {
            assert!((skew_divergence(&e0, &e1, alpha(a)).unwrap() - 1.0).abs() < 1e-12);
        }
        let r = diag(&[0.3, 0.0, 0.7]);
        let s = diag(&[0.0, 0.3, 0.7]);
        assert!((skew_divergence(&r, &s, alpha(0.5)).unwrap() - 0.3).abs() < 1e-14);
    }

    #[test]
    fn skew_divergence_rejects_zero_sum() {
        let z = PositiveOperator::new(HermitianOperator::zeros(2)).unwrap();
        assert!(matches!(skew_divergence(&z, &z, alpha(0.5)), Err(QsdError::Domain(_))));
    }

    #[test]
    fn scalar_skew_divergence_examples() {
        for a in [0.1, 0.5, 0.9] {
            assert_eq!(scalar_skew_divergence(1.0, 1.0, alpha(a)), 0.0);
            assert_eq!(scalar_skew_divergence(0.37, 0.37, alpha(a)), 0.0);
            // direct substitution: (−log α − (1−α))/(−log α)
            let expected: f64 = (-a.ln() - (1.0 - a)) / -a.ln();
            assert!((scalar_skew_divergence(1.0, 0.0, alpha(a)) - expected).abs() < 1e-15);
        }
        let v = scalar_skew_divergence(0.0, 1.0, alpha(0.5));
        assert!((v - 0.5 / 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn matrix_skew_divergence_matches_scalar_on_commuting_multiples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let x = random_state(3, &mut rng);
        let a = alpha(0.3);
        let b = PositiveOperator::new(x.scale(1.4)).unwrap();
        let c = PositiveOperator::new(x.scale(0.2)).unwrap();
        let m = skew_divergence(&b, &c, a).unwrap();
        assert!((m - scalar_skew_divergence(1.4, 0.2, a)).abs() < 1e-12);
    }

    #[test]
    fn trace_distance_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let rho = random_state(3, &mut rng);
        let sigma = random_state(3, &mut rng);
        assert_eq!(trace_distance(&rho, &rho).unwrap(), 0.0);
        assert!((trace_distance(&diag(&[1.0, 0.0]), &diag(&[0.0, 1.0])).unwrap() - 1.0).abs() < 1e-15);
        for t in [0.1, 0.45, 0.9] {
            let d = trace_distance(&diag(&[t, 0.0, 1.0 - t]), &diag(&[0.0, t, 1.0 - t])).unwrap();
            assert!((d - t).abs() < 1e-15);
        }
        let t = trace_distance(&rho, &sigma).unwrap();
        assert!((t - positive_part_trace(&(rho.operator() - sigma.operator()))).abs() < 1e-12);
        assert!(trace_distance(&rho, &diag(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn fidelity_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let rho = random_state(4, &mut rng);
        assert!((fidelity(&rho, &rho).unwrap() - 1.0).abs() < 1e-10);
        assert!(fidelity(&diag(&[1.0, 0.0]), &diag(&[0.0, 1.0])).unwrap() < 1e-12);

        let u = random_unitary(3, &mut rng);
        let psi: Vec<Complex64> = u.column(0).iter().copied().collect();
        let phi: Vec<Complex64> = (0..3).map(|i| u[(i, 0)] * 0.6 + u[(i, 1)] * 0.8).collect();
        let overlap = psi.iter().zip(&phi).map(|(a, b)| a.conj() * b).sum::<Complex64>().norm();
        let f = fidelity(&DensityMatrix::pure(&psi).unwrap(), &DensityMatrix::pure(&phi).unwrap()).unwrap();
        assert!((f - overlap).abs() < 1e-12, "f={f} overlap={overlap}");
    }
}
