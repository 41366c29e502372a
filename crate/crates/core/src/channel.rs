//! Quantum channels in Kraus form.

use num_complex::Complex64;

use crate::error::{QsdError, Result};
use crate::hermitian::{CMatrix, DensityMatrix, HermitianOperator, PositiveOperator};

/// Accepted deviation of `Σ K_i* K_i` from the identity (Frobenius norm).
pub const COMPLETENESS_TOLERANCE: f64 = 1e-9;

/// A completely positive trace-preserving map `ρ ↦ Σ K_i ρ K_i*`.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    kraus: Vec<CMatrix>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let Some(first) = kraus.first() else {
            return Err(QsdError::domain("a channel needs at least one Kraus operator"));
        };
        let n = first.ncols();
        for k in &kraus {
            if k.nrows() != n || k.ncols() != n {
                return Err(QsdError::DimensionMismatch(n, k.ncols().max(k.nrows())));
            }
        }
        let defect = completeness_defect(&kraus);
        if defect > COMPLETENESS_TOLERANCE {
            return Err(QsdError::domain(format!("Kraus operators are not trace preserving (defect {defect:.3e})")));
        }
        Ok(Self { kraus })
    }

    pub(crate) fn new_unchecked(kraus: Vec<CMatrix>) -> Self {
        Self { kraus }
    }

    /// Unitary conjugation `ρ ↦ U ρ U*`.
    pub fn unitary(u: CMatrix) -> Result<Self> {
        Self::new(vec![u])
    }

    /// The fully depolarizing channel `ρ ↦ trace(ρ) 𝟙/d`, with Kraus operators `|i⟩⟨j|/√d`.
    pub fn fully_depolarizing(dim: usize) -> Self {
        let w = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
        let mut kraus = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut k = CMatrix::zeros(dim, dim);
                k[(i, j)] = w;
                kraus.push(k);
            }
        }
        Self { kraus }
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn dim(&self) -> usize {
        self.kraus[0].ncols()
    }

    /// `‖Σ K_i* K_i − 𝟙‖_F`.
    pub fn completeness_defect(&self) -> f64 {
        completeness_defect(&self.kraus)
    }

    pub fn apply_operator(&self, x: &HermitianOperator) -> Result<HermitianOperator> {
        if x.dim() != self.dim() {
            return Err(QsdError::DimensionMismatch(self.dim(), x.dim()));
        }
        let n = self.dim();
        let mut out = CMatrix::zeros(n, n);
        for k in &self.kraus {
            out += k * x.matrix() * k.adjoint();
        }
        HermitianOperator::from_hermitian_part(out)
    }

    pub fn apply_positive(&self, a: &PositiveOperator) -> Result<PositiveOperator> {
        Ok(PositiveOperator::new_unchecked(self.apply_operator(a)?))
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        Ok(DensityMatrix::new_unchecked(self.apply_operator(rho)?))
    }
}

fn completeness_defect(kraus: &[CMatrix]) -> f64 {
    let n = kraus[0].ncols();
    let mut sum = CMatrix::zeros(n, n);
    for k in kraus {
        sum += k.adjoint() * k;
    }
    (sum - CMatrix::identity(n, n)).norm()
}

/// `Σ K_i ρ K_i*`, after checking the completeness relation.
pub fn apply_channel(kraus: &[CMatrix], rho: &DensityMatrix) -> Result<DensityMatrix> {
    KrausChannel::new(kraus.to_vec())?.apply(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::spectrum;
    use crate::random::{random_cptp, random_state, random_unitary};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn unitary_channel_conjugates() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = random_unitary(3, &mut rng);
        let rho = random_state(3, &mut rng);
        let out = apply_channel(std::slice::from_ref(&u), &rho).unwrap();
        let direct = rho.conjugate_by(&u).unwrap();
        assert!((out.matrix() - direct.matrix()).norm() < 1e-14);
    }

    #[test]
    fn fully_depolarizing_gives_maximally_mixed() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_state(4, &mut rng);
        let ch = KrausChannel::fully_depolarizing(4);
        assert!(ch.completeness_defect() < 1e-14);
        let out = ch.apply(&rho).unwrap();
        let target = DensityMatrix::maximally_mixed(4);
        assert!((out.matrix() - target.matrix()).norm() < 1e-14);
    }

    #[test]
    fn random_channel_preserves_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (din, denv) in [(2, 1), (2, 3), (4, 2), (3, 5)] {
            let ch = random_cptp(din, denv, &mut rng);
            assert_eq!(ch.kraus().len(), denv);
            assert!(ch.completeness_defect() < 1e-10);
            let rho = random_state(din, &mut rng);
            let out = ch.apply(&rho).unwrap();
            assert!((out.trace() - 1.0).abs() < 1e-10);
            assert!(spectrum(&out)[0] > -1e-10);
        }
    }

    #[test]
    fn single_environment_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let ch = random_cptp(3, 1, &mut rng);
        let k = &ch.kraus()[0];
        assert!((k * k.adjoint() - CMatrix::identity(3, 3)).norm() < 1e-12);
    }

    #[test]
    fn rejects_incomplete_kraus_set() {
        let rho = DensityMatrix::maximally_mixed(2);
        let half = CMatrix::identity(2, 2) * Complex64::new(0.5, 0.0);
        assert!(matches!(apply_channel(&[half], &rho), Err(QsdError::Domain(_))));
    }
}
