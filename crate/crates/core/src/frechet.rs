//! First and second Fréchet derivatives of the operator logarithm and the
//! monotone metric they induce.
//!
//! For `A = V diag(λ) V* > 0` the derivatives act entrywise in the eigenbasis
//! (Daleckii–Krein):
//!
//! * `𝒯_A(Δ) = V (log^[1](λ_i, λ_j) · Δ̃_ij) V*`, the derivative `d/dt log(A + tΔ)`;
//! * `ℛ_A(Δ₁, Δ₂)_ij = −Σ_k (Δ̃₁_ik Δ̃₂_kj + Δ̃₂_ik Δ̃₁_kj) · log^[2](λ_i, λ_k, λ_j)`,
//!   minus the mixed second derivative;
//!
//! with `Δ̃ = V* Δ V`. The resolvent integrals
//! `𝒯_A(Δ) = ∫ (A+s)^{-1} Δ (A+s)^{-1} ds` and its second-order analogue are
//! available through [`frechet_log_quadrature`] and
//! [`second_frechet_log_quadrature`] as independent cross-checks; they use LU
//! inverses rather than the eigendecomposition.

use std::sync::OnceLock;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::eigen::{eigendecompose, SpectralDecomposition};
use crate::error::{QsdError, Result};
use crate::hermitian::{
    default_support_threshold, restrict, support_defect_threshold, support_from_decomposition, CMatrix,
    HermitianOperator, PositiveOperator,
};
use crate::quadrature::QuadratureScheme;

/// Below this relative gap two eigenvalues are treated as coincident.
pub const CONFLUENCE_GAP: f64 = 1e-7;

/// `log^[1](x, y) = (log x − log y)/(x − y)`, with `2/(x+y)` for nearly equal arguments.
pub fn log_first_divided_difference(x: f64, y: f64) -> f64 {
    // fixed argument order keeps the result exactly symmetric
    let (x, y) = if x >= y { (x, y) } else { (y, x) };
    let d = x - y;
    if d.abs() < CONFLUENCE_GAP * x.max(y) {
        return 2.0 / (x + y);
    }
    // log(x/y) = 2 atanh((x−y)/(x+y)) avoids cancelling two logarithms
    2.0 * (d / (x + y)).atanh() / d
}

/// `log^[2](x, y, z)`, symmetric in its arguments; `−1/(2x²)` on the diagonal.
pub fn log_second_divided_difference(x: f64, y: f64, z: f64) -> f64 {
    let mut v = [x, y, z];
    v.sort_by(f64::total_cmp);
    let [lo, mid, hi] = v;
    if hi - lo < CONFLUENCE_GAP * hi {
        let m = (lo + mid + hi) / 3.0;
        return -0.5 / (m * m);
    }
    (log_first_divided_difference(mid, hi) - log_first_divided_difference(lo, mid)) / (hi - lo)
}

/// First and (lazily) second divided differences of `log` on a positive spectrum.
#[derive(Debug)]
pub struct DividedDifferenceTable {
    eigenvalues: Vec<f64>,
    first: DMatrix<f64>,
    second: OnceLock<Vec<f64>>,
}

impl DividedDifferenceTable {
    pub fn new(eigenvalues: Vec<f64>) -> Result<Self> {
        if let Some(bad) = eigenvalues.iter().find(|l| l.is_nan() || **l <= 0.0) {
            return Err(QsdError::domain(format!("operator is not positive definite (eigenvalue {bad:e})")));
        }
        let n = eigenvalues.len();
        let first = DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                1.0 / eigenvalues[i]
            } else {
                log_first_divided_difference(eigenvalues[i], eigenvalues[j])
            }
        });
        Ok(Self { eigenvalues, first, second: OnceLock::new() })
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn first(&self, i: usize, j: usize) -> f64 {
        self.first[(i, j)]
    }

    pub fn first_matrix(&self) -> &DMatrix<f64> {
        &self.first
    }

    pub fn second(&self, i: usize, j: usize, k: usize) -> f64 {
        let n = self.dim();
        self.second_tensor()[(i * n + j) * n + k]
    }

    fn second_tensor(&self) -> &[f64] {
        self.second.get_or_init(|| {
            let n = self.dim();
            let l = &self.eigenvalues;
            let mut t = vec![0.0; n * n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        t[(i * n + j) * n + k] = if i == j && j == k {
                            -0.5 / (l[i] * l[i])
                        } else {
                            log_second_divided_difference(l[i], l[j], l[k])
                        };
                    }
                }
            }
            t
        })
    }
}

/// Derivatives of `log` at a fixed positive definite operator.
///
/// Building one of these costs an eigendecomposition; every application after
/// that is `O(n³)` matrix arithmetic.
#[derive(Debug)]
pub struct LogDerivative {
    spectral: SpectralDecomposition,
    table: DividedDifferenceTable,
}

impl LogDerivative {
    /// Fails unless every eigenvalue exceeds the default support threshold.
    pub fn new(a: &HermitianOperator) -> Result<Self> {
        let spectral = eigendecompose(a)?;
        let thr = default_support_threshold(a.dim(), spectral.max());
        if spectral.min() <= thr {
            return Err(QsdError::domain(format!(
                "operator is not positive definite (min eigenvalue {:e})",
                spectral.min()
            )));
        }
        let table = DividedDifferenceTable::new(spectral.eigenvalues.clone())?;
        Ok(Self { spectral, table })
    }

    pub fn spectral(&self) -> &SpectralDecomposition {
        &self.spectral
    }

    pub fn table(&self) -> &DividedDifferenceTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    /// `𝒯_A(Δ)` in the eigenbasis of `A`.
    pub fn first_in_eigenbasis(&self, delta_tilde: &CMatrix) -> CMatrix {
        let n = self.dim();
        CMatrix::from_fn(n, n, |i, j| delta_tilde[(i, j)] * self.table.first(i, j))
    }

    /// `𝒯_A(Δ)` for any square matrix `Δ`.
    pub fn first(&self, delta: &CMatrix) -> CMatrix {
        let dt = self.spectral.to_eigenbasis(delta);
        self.spectral.from_eigenbasis(&self.first_in_eigenbasis(&dt))
    }

    /// `𝒯_A(Δ)` for Hermitian `Δ`.
    pub fn first_hermitian(&self, delta: &HermitianOperator) -> HermitianOperator {
        HermitianOperator::symmetrized(self.first(delta.matrix()))
    }

    /// `ℛ_A(Δ₁, Δ₂)`.
    pub fn second(&self, d1: &CMatrix, d2: &CMatrix) -> CMatrix {
        let n = self.dim();
        let x = self.spectral.to_eigenbasis(d1);
        let y = self.spectral.to_eigenbasis(d2);
        let mut r = CMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    acc += (x[(i, k)] * y[(k, j)] + y[(i, k)] * x[(k, j)]) * self.table.second(i, k, j);
                }
                r[(i, j)] = -acc;
            }
        }
        self.spectral.from_eigenbasis(&r)
    }

    pub fn second_hermitian(&self, d1: &HermitianOperator, d2: &HermitianOperator) -> HermitianOperator {
        HermitianOperator::symmetrized(self.second(d1.matrix(), d2.matrix()))
    }

    /// `M_A(B, C) = trace B* 𝒯_A(C)`.
    pub fn metric(&self, b: &CMatrix, c: &CMatrix) -> Complex64 {
        let n = self.dim();
        let bt = self.spectral.to_eigenbasis(b);
        let ct = self.spectral.to_eigenbasis(c);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += bt[(i, j)].conj() * ct[(i, j)] * self.table.first(i, j);
            }
        }
        acc
    }

    /// `M_A(X, X)` for Hermitian `X`, a real number.
    pub fn metric_diagonal(&self, x: &HermitianOperator) -> f64 {
        self.metric(x.matrix(), x.matrix()).re
    }
}

/// `𝒯_A(Δ) = d/dt log(A + tΔ)` at `t = 0`.
pub fn frechet_log(a: &HermitianOperator, delta: &HermitianOperator) -> Result<HermitianOperator> {
    a.same_dim(delta)?;
    Ok(LogDerivative::new(a)?.first_hermitian(delta))
}

/// `M_A(B, C) = trace B* 𝒯_A(C)`.
pub fn metric_m(a: &HermitianOperator, b: &CMatrix, c: &CMatrix) -> Result<Complex64> {
    if b.shape() != (a.dim(), a.dim()) || c.shape() != (a.dim(), a.dim()) {
        return Err(QsdError::DimensionMismatch(a.dim(), b.nrows().max(c.nrows())));
    }
    Ok(LogDerivative::new(a)?.metric(b, c))
}

/// `ℛ_A(Δ₁, Δ₂) = −∂²/∂t₁∂t₂ log(A + t₁Δ₁ + t₂Δ₂)` at zero.
pub fn second_frechet_log(
    a: &HermitianOperator,
    d1: &HermitianOperator,
    d2: &HermitianOperator,
) -> Result<HermitianOperator> {
    a.same_dim(d1)?;
    a.same_dim(d2)?;
    Ok(LogDerivative::new(a)?.second_hermitian(d1, d2))
}

/// `χ²_log(A, B) = M_B(A − B, A − B)`, evaluated on the support of `B`.
pub fn chi2_log(a: &PositiveOperator, b: &PositiveOperator) -> Result<f64> {
    a.same_dim(b)?;
    let dec = eigendecompose(b)?;
    let p = support_from_decomposition(&dec, None);
    if p.rank == 0 {
        return Err(QsdError::domain("second argument of chi2_log is zero"));
    }
    let (a_r, b_r) = if p.is_full() {
        (a.operator().clone(), b.operator().clone())
    } else {
        let a_r = restrict(a, &p)?;
        let defect = a.trace() - a_r.trace();
        if defect > support_defect_threshold(dec.max().max(a.trace())) {
            return Err(QsdError::domain(format!(
                "first argument has weight {defect:e} outside the support of the second"
            )));
        }
        (a_r, restrict(b, &p)?)
    };
    let diff = &a_r - &b_r;
    Ok(LogDerivative::new(&b_r)?.metric_diagonal(&diff))
}

fn resolvents(a: &HermitianOperator, s: f64) -> Result<CMatrix> {
    let n = a.dim();
    let shifted = a.matrix() + CMatrix::identity(n, n) * Complex64::new(s, 0.0);
    // nalgebra inverts n ≤ 4 by cofactors, which loses accuracy on
    // ill-conditioned input; LU with partial pivoting does not
    shifted.lu().try_inverse().ok_or_else(|| QsdError::domain(format!("A + {s:e}·I is singular")))
}

fn relative_distance(x: &CMatrix, y: &CMatrix) -> f64 {
    (x - y).norm() / y.norm().max(f64::MIN_POSITIVE)
}

/// Integration scale `trace A ≥ λ_max`, and the scheme graded down to
/// `λ_min/trace A` using the bound `λ_min ≥ 1/‖A⁻¹‖_F`.
fn integration_setup(a: &HermitianOperator, scheme: &QuadratureScheme) -> Result<(f64, QuadratureScheme)> {
    let tr = a.trace();
    let scale = if tr > 0.0 { tr } else { 1.0 };
    let lambda_lower = 1.0 / resolvents(a, 0.0)?.norm();
    Ok((scale, scheme.graded_to(lambda_lower / scale)))
}

/// `∫_0^∞ (A+s)^{-1} Δ (A+s)^{-1} ds` by refined graded quadrature.
pub fn frechet_log_quadrature(a: &HermitianOperator, delta: &CMatrix, scheme: &QuadratureScheme) -> Result<CMatrix> {
    let (scale, scheme) = integration_setup(a, scheme)?;
    let (value, _) = scheme.refine_until_stable(
        |q| {
            let mut acc = CMatrix::zeros(a.dim(), a.dim());
            for (s, w) in q.half_line_nodes(scale) {
                let r = resolvents(a, s)?;
                acc += (&r * delta * &r) * Complex64::new(w, 0.0);
            }
            Ok(acc)
        },
        relative_distance,
    )?;
    Ok(value)
}

/// `∫_0^∞ (A+s)^{-1}(Δ₁(A+s)^{-1}Δ₂ + Δ₂(A+s)^{-1}Δ₁)(A+s)^{-1} ds` by refined
/// graded quadrature; equals `ℛ_A(Δ₁, Δ₂)`.
pub fn second_frechet_log_quadrature(
    a: &HermitianOperator,
    d1: &CMatrix,
    d2: &CMatrix,
    scheme: &QuadratureScheme,
) -> Result<CMatrix> {
    let (scale, scheme) = integration_setup(a, scheme)?;
    let (value, _) = scheme.refine_until_stable(
        |q| {
            let mut acc = CMatrix::zeros(a.dim(), a.dim());
            for (s, w) in q.half_line_nodes(scale) {
                let r = resolvents(a, s)?;
                let term = &r * (d1 * &r * d2 + d2 * &r * d1) * &r;
                acc += term * Complex64::new(w, 0.0);
            }
            Ok(acc)
        },
        relative_distance,
    )?;
    Ok(value)
}

/// Outcome of [`metric_epsilon_limit_check`].
#[derive(Clone, Debug)]
pub struct EpsilonLimitRecord {
    /// `(ε, M_{B+εC}(A, A))` in the order supplied.
    pub values: Vec<(f64, f64)>,
    /// `M_{B|_B}(A|_B, A|_B)`.
    pub limit: f64,
    /// Values do not decrease as `ε` decreases.
    pub monotone: bool,
    /// `|M_{B+ε_min C}(A, A) − limit|`.
    pub final_gap: f64,
    /// `final_gap ≤ 1e-6`.
    pub converged: bool,
}

/// Tracks `M_{B+εC}(A, A)` along a decreasing sequence of `ε` and compares it
/// with the metric computed on the support of `B`.
pub fn metric_epsilon_limit_check(
    a: &PositiveOperator,
    b: &PositiveOperator,
    c: &PositiveOperator,
    eps_sequence: &[f64],
) -> Result<EpsilonLimitRecord> {
    a.same_dim(b)?;
    a.same_dim(c)?;
    if eps_sequence.is_empty() || eps_sequence.iter().any(|e| e.is_nan() || *e <= 0.0) {
        return Err(QsdError::domain("epsilon sequence must be nonempty and positive"));
    }
    if eps_sequence.windows(2).any(|w| w[1] >= w[0]) {
        return Err(QsdError::domain("epsilon sequence must be strictly decreasing"));
    }
    let dec_b = eigendecompose(b)?;
    let p = support_from_decomposition(&dec_b, None);
    if p.rank == 0 {
        return Err(QsdError::domain("B = 0 has empty support"));
    }
    let a_r = restrict(a, &p)?;
    let defect = a.trace() - a_r.trace();
    if defect > support_defect_threshold(dec_b.max().max(a.trace())) {
        return Err(QsdError::domain(format!("supp A is not contained in supp B (defect {defect:e})")));
    }
    let b_r = restrict(b, &p)?;
    let limit = LogDerivative::new(&b_r)?.metric_diagonal(&a_r);
    if LogDerivative::new(&(b.operator() + c.operator())).is_err() {
        return Err(QsdError::domain("B + C is not positive definite"));
    }

    let mut values = Vec::with_capacity(eps_sequence.len());
    for &eps in eps_sequence {
        let base = b.operator() + &c.scale(eps);
        values.push((eps, LogDerivative::new(&base)?.metric_diagonal(a)));
    }
    let slack = 1e-10 * limit.abs().max(1.0);
    let monotone = values.windows(2).all(|w| w[1].1 >= w[0].1 - slack);
    let final_gap = (values.last().map(|v| v.1).unwrap_or(limit) - limit).abs();
    Ok(EpsilonLimitRecord { values, limit, monotone, final_gap, converged: final_gap <= 1e-6 })
}
