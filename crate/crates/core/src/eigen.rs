//! Cyclic Jacobi eigendecomposition for complex Hermitian matrices and the
//! spectral functional calculus built on it.

use num_complex::Complex64;

use crate::error::{QsdError, Result};
use crate::hermitian::{CMatrix, HermitianOperator, ZERO};

/// Maximum number of full Jacobi sweeps.
pub const MAX_SWEEPS: usize = 30;

/// Ascending eigenvalues and the unitary whose columns are the matching eigenvectors.
#[derive(Clone, Debug)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// `V diag(λ) V*`.
    pub fn reconstruct(&self) -> HermitianOperator {
        self.with_values(&self.eigenvalues)
    }

    /// `V diag(f(λ)) V*`; fails if `f` is not finite at some eigenvalue.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<HermitianOperator> {
        let mut values = Vec::with_capacity(self.dim());
        for &l in &self.eigenvalues {
            let v = f(l);
            if !v.is_finite() {
                return Err(QsdError::domain(format!("function is undefined at eigenvalue {l:e}")));
            }
            values.push(v);
        }
        Ok(self.with_values(&values))
    }

    pub(crate) fn with_values(&self, values: &[f64]) -> HermitianOperator {
        let mut scaled = self.eigenvectors.clone();
        for (j, v) in values.iter().enumerate() {
            scaled.column_mut(j).scale_mut(*v);
        }
        HermitianOperator::symmetrized(scaled * self.eigenvectors.adjoint())
    }

    /// Expresses `X` in the eigenbasis: `V* X V`.
    pub fn to_eigenbasis(&self, x: &CMatrix) -> CMatrix {
        self.eigenvectors.adjoint() * x * &self.eigenvectors
    }

    /// Inverse of [`Self::to_eigenbasis`]: `V X V*`.
    pub fn from_eigenbasis(&self, x: &CMatrix) -> CMatrix {
        &self.eigenvectors * x * self.eigenvectors.adjoint()
    }
}

fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += m[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi with a threshold test.
///
/// A pivot `a_pq` is annihilated without rotating once it is below
/// `ε·sqrt(|a_pp a_qq|)` or an absolute floor of `0.01·ε·‖A‖_F`; the relative test
/// keeps small eigenvalues of positive definite matrices accurate to working
/// precision.
pub fn eigendecompose(a: &HermitianOperator) -> Result<SpectralDecomposition> {
    let n = a.dim();
    let mut m = a.matrix().clone();
    let mut v = CMatrix::identity(n, n);
    let eps = f64::EPSILON;
    let floor = 0.01 * eps * m.norm();

    let mut converged = n == 1;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let g = apq.norm();
                if g == 0.0 {
                    continue;
                }
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                if g <= floor || g <= eps * (app.abs() * aqq.abs()).sqrt() {
                    m[(p, q)] = ZERO;
                    m[(q, p)] = ZERO;
                    continue;
                }
                rotated = true;
                rotate(&mut m, &mut v, p, q, apq, g, app, aqq);
            }
        }
        converged = !rotated;
    }

    if !converged {
        let residual = off_diagonal_norm(&m);
        if residual > 1e-12 * m.norm().max(1.0) {
            return Err(QsdError::NoConvergence { sweeps: MAX_SWEEPS, residual });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut eigenvectors = CMatrix::zeros(n, n);
    for (c, &i) in order.iter().enumerate() {
        eigenvectors.set_column(c, &v.column(i));
    }
    Ok(SpectralDecomposition { eigenvalues, eigenvectors })
}

/// Applies `A ← J* A J`, `V ← V J` with the complex rotation that zeroes `a_pq`.
#[allow(clippy::too_many_arguments)]
fn rotate(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize, apq: Complex64, g: f64, app: f64, aqq: f64) {
    let n = m.nrows();
    // phase e^{-iφ} turns a_pq into the real number g
    let phase = apq.conj() / g;
    let theta = (aqq - app) / (2.0 * g);
    let t =
        if theta.abs() > 1e150 { 0.5 / theta } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = phase * (-s);
    let j_qq = phase * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        let new_pk = j_pp.conj() * apk + j_qp.conj() * aqk;
        let new_qk = j_pq.conj() * apk + j_qq.conj() * aqk;
        m[(p, k)] = new_pk;
        m[(q, k)] = new_qk;
        m[(k, p)] = new_pk.conj();
        m[(k, q)] = new_qk.conj();
    }
    m[(p, p)] = Complex64::new(app - t * g, 0.0);
    m[(q, q)] = Complex64::new(aqq + t * g, 0.0);
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
}

/// `f(A) = V diag(f(λ)) V*`.
pub fn spectral_fn(a: &HermitianOperator, f: impl Fn(f64) -> f64) -> Result<HermitianOperator> {
    eigendecompose(a)?.map(f)
}
