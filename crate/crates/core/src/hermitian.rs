//! Dense Hermitian operators, positive operators and density matrices.
//!
//! [`HermitianOperator`] is the carrier for every matrix in the crate: states,
//! Hamiltonians and perturbations. [`PositiveOperator`] adds positivity and
//! [`DensityMatrix`] adds unit trace; each dereferences to the weaker type so a
//! density matrix can be passed wherever a positive operator is accepted.

use std::ops::{Add, Deref, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::eigen::{eigendecompose, SpectralDecomposition};
use crate::error::{QsdError, Result};

/// Dense complex matrix.
pub type CMatrix = DMatrix<Complex64>;

/// Relative asymmetry accepted by [`HermitianOperator::new`] before symmetrizing.
pub const HERMITIAN_TOLERANCE: f64 = 1e-9;
/// Most negative eigenvalue accepted for a positive operator.
pub const PSD_TOLERANCE: f64 = -1e-10;
/// Accepted deviation of the trace of a density matrix from 1.
pub const TRACE_TOLERANCE: f64 = 1e-10;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A dense complex Hermitian matrix.
///
/// The stored entries satisfy `a[(i, j)] == a[(j, i)].conj()` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    m: CMatrix,
}

impl HermitianOperator {
    /// Validates Hermitian symmetry (relative to the Frobenius norm) and
    /// symmetrizes away the residual rounding.
    pub fn new(m: CMatrix) -> Result<Self> {
        check_square_finite(&m)?;
        let scale = m.norm().max(1.0);
        let asym = (&m - m.adjoint()).norm() / scale;
        if asym > HERMITIAN_TOLERANCE {
            return Err(QsdError::NotHermitian(asym));
        }
        Ok(Self::symmetrized(m))
    }

    /// Takes the Hermitian part `(M + M*)/2` of any square matrix.
    pub fn from_hermitian_part(m: CMatrix) -> Result<Self> {
        check_square_finite(&m)?;
        Ok(Self::symmetrized(m))
    }

    pub(crate) fn symmetrized(m: CMatrix) -> Self {
        let n = m.nrows();
        let mut out = m;
        for i in 0..n {
            out[(i, i)] = Complex64::new(out[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let v = (out[(i, j)] + out[(j, i)].conj()) * 0.5;
                out[(i, j)] = v;
                out[(j, i)] = v.conj();
            }
        }
        Self { m: out }
    }

    /// Builds an operator from row-major real and imaginary parts.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let n = re.len();
        if im.len() != n {
            return Err(QsdError::DimensionMismatch(n, im.len()));
        }
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            if re[i].len() != n {
                return Err(QsdError::NotSquare(n, re[i].len()));
            }
            if im[i].len() != n {
                return Err(QsdError::NotSquare(n, im[i].len()));
            }
            for j in 0..n {
                m[(i, j)] = Complex64::new(re[i][j], im[i][j]);
            }
        }
        Self::new(m)
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = CMatrix::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(*d, 0.0);
        }
        Self { m }
    }

    pub fn identity(dim: usize) -> Self {
        Self { m: CMatrix::identity(dim, dim) }
    }

    pub fn zeros(dim: usize) -> Self {
        Self { m: CMatrix::zeros(dim, dim) }
    }

    /// `|ψ⟩⟨ψ|` for an arbitrary (not necessarily normalized) vector.
    pub fn outer(psi: &[Complex64]) -> Self {
        let n = psi.len();
        let m = CMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj());
        Self::symmetrized(m)
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> CMatrix {
        self.m
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.m[(i, i)].re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.norm()
    }

    /// `U A U*`.
    pub fn conjugate_by(&self, u: &CMatrix) -> Result<Self> {
        if u.ncols() != self.dim() {
            return Err(QsdError::DimensionMismatch(u.ncols(), self.dim()));
        }
        Ok(Self::symmetrized(u * &self.m * u.adjoint()))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { m: &self.m * Complex64::new(s, 0.0) }
    }

    /// `trace(self · other)`, real for Hermitian arguments.
    pub fn trace_product(&self, other: &HermitianOperator) -> f64 {
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            for k in 0..n {
                acc += (self.m[(i, k)] * other.m[(k, i)]).re;
            }
        }
        acc
    }

    pub fn eigendecompose(&self) -> Result<SpectralDecomposition> {
        eigendecompose(self)
    }

    /// Real parts, row-major.
    pub fn re_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.m[(i, j)].re).collect()).collect()
    }

    /// Imaginary parts, row-major.
    pub fn im_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.m[(i, j)].im).collect()).collect()
    }

    pub(crate) fn same_dim(&self, other: &HermitianOperator) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(QsdError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }
}

fn check_square_finite(m: &CMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(QsdError::NotSquare(m.nrows(), m.ncols()));
    }
    if m.nrows() == 0 {
        return Err(QsdError::domain("operator dimension must be at least 1"));
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(QsdError::domain("non-finite matrix entry"));
    }
    Ok(())
}

impl Add for &HermitianOperator {
    type Output = HermitianOperator;
    fn add(self, rhs: &HermitianOperator) -> HermitianOperator {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in operator sum");
        HermitianOperator { m: &self.m + &rhs.m }
    }
}

impl Sub for &HermitianOperator {
    type Output = HermitianOperator;
    fn sub(self, rhs: &HermitianOperator) -> HermitianOperator {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in operator difference");
        HermitianOperator { m: &self.m - &rhs.m }
    }
}

impl Mul<f64> for &HermitianOperator {
    type Output = HermitianOperator;
    fn mul(self, rhs: f64) -> HermitianOperator {
        self.scale(rhs)
    }
}

/// `Σ|λ_i(X)|`.
pub fn trace_norm(x: &HermitianOperator) -> f64 {
    spectrum(x).iter().map(|l| l.abs()).sum()
}

/// `max_i |λ_i(X)|`.
pub fn operator_norm(x: &HermitianOperator) -> f64 {
    spectrum(x).iter().fold(0.0_f64, |m, l| m.max(l.abs()))
}

/// Ascending eigenvalues.
pub fn spectrum(x: &HermitianOperator) -> Vec<f64> {
    eigendecompose(x).expect("Jacobi iteration converges on finite Hermitian input").eigenvalues
}

/// A positive semidefinite operator of arbitrary trace.
#[derive(Clone, Debug, PartialEq)]
pub struct PositiveOperator {
    op: HermitianOperator,
}

impl PositiveOperator {
    /// Accepts eigenvalues down to [`PSD_TOLERANCE`]; slightly negative ones are
    /// clipped to zero.
    pub fn new(op: HermitianOperator) -> Result<Self> {
        let dec = op.eigendecompose()?;
        let min = dec.min();
        if min < PSD_TOLERANCE {
            return Err(QsdError::NotPositive(min));
        }
        if min < 0.0 {
            let clipped = dec.map(|l| l.max(0.0))?;
            return Ok(Self { op: clipped });
        }
        Ok(Self { op })
    }

    /// Wraps an operator that is positive by construction.
    pub(crate) fn new_unchecked(op: HermitianOperator) -> Self {
        Self { op }
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }

    pub fn into_operator(self) -> HermitianOperator {
        self.op
    }
}

impl Deref for PositiveOperator {
    type Target = HermitianOperator;
    fn deref(&self) -> &HermitianOperator {
        &self.op
    }
}

/// A positive semidefinite operator with unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    pos: PositiveOperator,
}

impl DensityMatrix {
    pub fn new(op: HermitianOperator) -> Result<Self> {
        let tr = op.trace();
        if (tr - 1.0).abs() > TRACE_TOLERANCE {
            return Err(QsdError::InvalidTrace(tr));
        }
        Ok(Self { pos: PositiveOperator::new(op)? })
    }

    /// Checks positivity, clips small negative eigenvalues and divides by the trace.
    pub fn normalized(op: HermitianOperator) -> Result<Self> {
        let pos = PositiveOperator::new(op)?;
        let tr = pos.trace();
        if tr <= 0.0 {
            return Err(QsdError::InvalidTrace(tr));
        }
        Ok(Self { pos: PositiveOperator::new_unchecked(pos.op.scale(1.0 / tr)) })
    }

    pub fn from_positive(pos: PositiveOperator) -> Result<Self> {
        let tr = pos.trace();
        if (tr - 1.0).abs() > TRACE_TOLERANCE {
            return Err(QsdError::InvalidTrace(tr));
        }
        Ok(Self { pos })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let op = HermitianOperator::identity(dim).scale(1.0 / dim as f64);
        Self { pos: PositiveOperator::new_unchecked(op) }
    }

    /// Pure state `|ψ⟩⟨ψ|/⟨ψ|ψ⟩`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        if norm2 <= 0.0 || !norm2.is_finite() {
            return Err(QsdError::domain("state vector must be nonzero"));
        }
        let op = HermitianOperator::outer(psi).scale(1.0 / norm2);
        Ok(Self { pos: PositiveOperator::new_unchecked(op) })
    }

    /// Diagonal state; the entries must be nonnegative and sum to 1.
    pub fn from_diagonal(p: &[f64]) -> Result<Self> {
        if let Some(neg) = p.iter().find(|x| **x < 0.0) {
            return Err(QsdError::NotPositive(*neg));
        }
        Self::new(HermitianOperator::from_real_diagonal(p))
    }

    /// Wraps an operator that is a state by construction (e.g. a channel output).
    pub(crate) fn new_unchecked(op: HermitianOperator) -> Self {
        Self { pos: PositiveOperator::new_unchecked(op) }
    }

    pub fn positive(&self) -> &PositiveOperator {
        &self.pos
    }

    pub fn into_operator(self) -> HermitianOperator {
        self.pos.op
    }
}

impl Deref for DensityMatrix {
    type Target = PositiveOperator;
    fn deref(&self) -> &PositiveOperator {
        &self.pos
    }
}

/// Orthonormal basis of the span of eigenvectors whose eigenvalue exceeds `threshold`.
#[derive(Clone, Debug)]
pub struct SupportProjection {
    pub rank: usize,
    pub basis: CMatrix,
    pub threshold: f64,
}

impl SupportProjection {
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.dim()
    }

    /// The orthogonal projector `P P*` onto the support.
    pub fn projector(&self) -> CMatrix {
        &self.basis * self.basis.adjoint()
    }
}

/// `dim · ε_machine · λ_max`.
pub fn default_support_threshold(dim: usize, lambda_max: f64) -> f64 {
    dim as f64 * f64::EPSILON * lambda_max.max(0.0)
}

/// Relative weight a first argument may carry outside the support of a
/// second before a divergence counts it as a genuine support violation.
/// Rounding in the compression alone leaves weight of order
/// `dim·ε·λ_max/α` when `B ≥ αA`, far above [`default_support_threshold`].
pub const SUPPORT_DEFECT_TOLERANCE: f64 = 1e-10;

pub fn support_defect_threshold(scale: f64) -> f64 {
    SUPPORT_DEFECT_TOLERANCE * scale.max(0.0)
}

/// Support of a positive operator, using [`default_support_threshold`] when
/// `threshold` is `None`.
pub fn support_of(a: &HermitianOperator, threshold: Option<f64>) -> Result<SupportProjection> {
    let dec = a.eigendecompose()?;
    Ok(support_from_decomposition(&dec, threshold))
}

pub(crate) fn support_from_decomposition(dec: &SpectralDecomposition, threshold: Option<f64>) -> SupportProjection {
    let n = dec.eigenvalues.len();
    let threshold = threshold.unwrap_or_else(|| default_support_threshold(n, dec.max()));
    let keep: Vec<usize> = (0..n).filter(|&i| dec.eigenvalues[i] > threshold).collect();
    let mut basis = CMatrix::zeros(n, keep.len());
    for (c, &i) in keep.iter().enumerate() {
        basis.set_column(c, &dec.eigenvectors.column(i));
    }
    SupportProjection { rank: keep.len(), basis, threshold }
}

/// `P* A P`, the compression of `A` onto the support `P`.
pub fn restrict(a: &HermitianOperator, p: &SupportProjection) -> Result<HermitianOperator> {
    if a.dim() != p.dim() {
        return Err(QsdError::DimensionMismatch(a.dim(), p.dim()));
    }
    if p.rank == 0 {
        return Err(QsdError::domain("cannot restrict to an empty support"));
    }
    Ok(HermitianOperator::symmetrized(p.basis.adjoint() * a.matrix() * &p.basis))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert!(matches!(HermitianOperator::new(m), Err(QsdError::NotHermitian(_))));
    }

    #[test]
    fn symmetrization_is_exact() {
        let m = CMatrix::from_row_slice(2, 2, &[c(1.0, 1e-13), c(0.3, 0.7), c(0.3 + 1e-12, -0.7), c(2.0, 0.0)]);
        let h = HermitianOperator::new(m).unwrap();
        assert_eq!(h.matrix()[(0, 1)], h.matrix()[(1, 0)].conj());
        assert_eq!(h.matrix()[(0, 0)].im, 0.0);
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm(&HermitianOperator::zeros(3)), 0.0);
        let x = HermitianOperator::from_real_diagonal(&[1.0, -1.0]);
        assert!((trace_norm(&x) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn operator_norm_examples() {
        assert!((operator_norm(&HermitianOperator::identity(4)) - 1.0).abs() < 1e-15);
        let x = HermitianOperator::from_real_diagonal(&[-3.0, 2.0]);
        assert!((operator_norm(&x) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn rank_one_norms_coincide() {
        let psi = [c(0.3, -0.1), c(-0.5, 0.2), c(0.1, 0.9)];
        let x = HermitianOperator::outer(&psi).scale(-1.7);
        assert!((trace_norm(&x) - operator_norm(&x)).abs() < 1e-12);
    }

    #[test]
    fn support_of_diagonal() {
        let a = HermitianOperator::from_real_diagonal(&[0.5, 0.5, 0.0]);
        let p = support_of(&a, None).unwrap();
        assert_eq!(p.rank, 2);
        let proj = p.projector();
        assert!((proj[(0, 0)].re - 1.0).abs() < 1e-12);
        assert!((proj[(1, 1)].re - 1.0).abs() < 1e-12);
        assert!(proj[(2, 2)].norm() < 1e-12);
    }

    #[test]
    fn support_of_full_rank_and_zero() {
        let a = HermitianOperator::from_real_diagonal(&[0.2, 0.3, 0.5]);
        assert!(support_of(&a, None).unwrap().is_full());
        let z = HermitianOperator::zeros(3);
        assert_eq!(support_of(&z, None).unwrap().rank, 0);
    }

    #[test]
    fn support_of_projector() {
        let psi = [c(0.6, 0.0), c(0.0, 0.8)];
        let a = HermitianOperator::outer(&psi);
        let p = support_of(&a, None).unwrap();
        assert_eq!(p.rank, 1);
        let overlap = p.basis[(0, 0)].conj() * psi[0] + p.basis[(1, 0)].conj() * psi[1];
        assert!((overlap.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn restrict_examples() {
        let a = HermitianOperator::from_real_diagonal(&[2.0, 3.0, 5.0]);
        let p = support_of(&HermitianOperator::from_real_diagonal(&[1.0, 1.0, 0.0]), None).unwrap();
        let r = restrict(&a, &p).unwrap();
        let mut ev = spectrum(&r);
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 2.0).abs() < 1e-12 && (ev[1] - 3.0).abs() < 1e-12);

        let id = restrict(&HermitianOperator::identity(3), &p).unwrap();
        assert!((id.matrix() - CMatrix::identity(2, 2)).norm() < 1e-12);

        let full = support_of(&HermitianOperator::from_real_diagonal(&[1.0, 2.0, 3.0]), None).unwrap();
        let ra = restrict(&a, &full).unwrap();
        let e = spectrum(&ra);
        assert!((e[0] - 2.0).abs() < 1e-12 && (e[2] - 5.0).abs() < 1e-12);

        let wrong = support_of(&HermitianOperator::identity(2), None).unwrap();
        assert!(matches!(restrict(&a, &wrong), Err(QsdError::DimensionMismatch(3, 2))));
    }

    #[test]
    fn density_matrix_validation() {
        assert!(DensityMatrix::from_diagonal(&[0.5, 0.6]).is_err());
        assert!(DensityMatrix::from_diagonal(&[1.2, -0.2]).is_err());
        let tiny_negative = HermitianOperator::from_real_diagonal(&[1.0 + 5e-11, -5e-11]);
        let rho = DensityMatrix::new(tiny_negative).unwrap();
        assert!(spectrum(&rho)[0] >= 0.0);
    }
}
