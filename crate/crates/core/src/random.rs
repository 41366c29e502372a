//! Seeded generation of states, Hamiltonians, unitaries and channels.
//!
//! Every generator takes the random stream explicitly; there is no global
//! state. [`trial_rng`] derives independent, reproducible streams from a master
//! seed and a list of indices.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channel::KrausChannel;
use crate::hermitian::{operator_norm, CMatrix, DensityMatrix, HermitianOperator, PositiveOperator};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// A stream determined by `(seed, parts)` and nothing else.
pub fn trial_rng(seed: u64, parts: &[u64]) -> ChaCha8Rng {
    let mut h = splitmix64(seed);
    for p in parts {
        h = splitmix64(h ^ splitmix64(*p));
    }
    ChaCha8Rng::seed_from_u64(h)
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `rows × cols` matrix of independent standard complex Gaussians.
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    // filled row by row so the draw order does not depend on storage layout
    let mut m = CMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = complex_gaussian(rng);
        }
    }
    m
}

/// Hilbert–Schmidt random state `G G* / trace(G G*)`.
pub fn random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    random_state_with_rank(dim, dim, rng)
}

/// Random state of rank at most `rank` (Wishart with `rank` columns).
pub fn random_state_with_rank<R: Rng + ?Sized>(dim: usize, rank: usize, rng: &mut R) -> DensityMatrix {
    assert!(dim >= 1 && rank >= 1, "dimension and rank must be positive");
    let g = gaussian_matrix(dim, rank.min(dim), rng);
    let w = HermitianOperator::symmetrized(&g * g.adjoint());
    let tr = w.trace();
    DensityMatrix::new_unchecked(w.scale(1.0 / tr))
}

pub fn random_pure_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> DensityMatrix {
    random_state_with_rank(dim, 1, rng)
}

/// Random positive operator with trace drawn uniformly from `(0, max_trace]`
/// and random rank.
pub fn random_positive<R: Rng + ?Sized>(dim: usize, max_trace: f64, rng: &mut R) -> PositiveOperator {
    let rank = rng.random_range(1..=dim);
    let tr = max_trace * (1.0 - rng.random::<f64>());
    let rho = random_state_with_rank(dim, rank, rng);
    PositiveOperator::new_unchecked(rho.operator().scale(tr))
}

/// `G G* + I/dim`, well conditioned and positive definite.
pub fn random_positive_definite<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let g = gaussian_matrix(dim, dim, rng);
    let w = HermitianOperator::symmetrized(&g * g.adjoint());
    &w + &HermitianOperator::identity(dim).scale(1.0 / dim as f64)
}

/// `(G + G*)/2` without normalization.
pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let g = gaussian_matrix(dim, dim, rng);
    HermitianOperator::symmetrized(&g + g.adjoint())
}

/// `(G + G*)/2` rescaled to unit operator norm.
pub fn random_hamiltonian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> HermitianOperator {
    let h = random_hermitian(dim, rng);
    let norm = operator_norm(&h);
    h.scale(1.0 / norm)
}

/// Haar unitary from the QR factorization of a Gaussian matrix, with the
/// phases of `diag(R)` absorbed into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> CMatrix {
    let g = gaussian_matrix(dim, dim, rng);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        q.column_mut(j).iter_mut().for_each(|z| *z *= phase);
    }
    q
}

/// Random channel from a Stinespring isometry: the first `dim_in` columns of a
/// Haar unitary on `dim_in · dim_env` dimensions, cut into `dim_env` Kraus blocks.
pub fn random_cptp<R: Rng + ?Sized>(dim_in: usize, dim_env: usize, rng: &mut R) -> KrausChannel {
    assert!(dim_in >= 1 && dim_env >= 1, "dimensions must be positive");
    let total = dim_in * dim_env;
    let u = random_unitary(total, rng);
    let kraus = (0..dim_env).map(|e| u.view((e * dim_in, 0), (dim_in, dim_in)).into_owned()).collect();
    KrausChannel::new_unchecked(kraus)
}

/// Uniform (Dirichlet(1,…,1)) probability vector.
pub fn random_weights<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln() + 1e-12).collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / sum).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermitian::spectrum;

    #[test]
    fn state_invariants_many_draws() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for i in 0..10_000 {
            let dim = 1 + i % 6;
            let rho = random_state(dim, &mut rng);
            assert!((rho.trace() - 1.0).abs() <= 1e-12);
            assert!(spectrum(&rho)[0] >= -1e-10);
        }
    }

    #[test]
    fn one_dimensional_state_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_state(1, &mut rng);
        assert!((rho.matrix()[(0, 0)].re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identical_seeds_identical_states() {
        let a = random_state(4, &mut trial_rng(9, &[1, 2]));
        let b = random_state(4, &mut trial_rng(9, &[1, 2]));
        assert_eq!(a, b);
        let c = random_state(4, &mut trial_rng(9, &[2, 1]));
        assert_ne!(a, c);
    }

    #[test]
    fn hamiltonian_has_unit_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for dim in 1..6 {
            let h = random_hamiltonian(dim, &mut rng);
            assert!((operator_norm(&h) - 1.0).abs() < 1e-12);
            assert_eq!(h.matrix()[(0, dim - 1)], h.matrix()[(dim - 1, 0)].conj());
        }
        let h1 = random_hamiltonian(1, &mut rng);
        assert!((h1.matrix()[(0, 0)].re.abs() - 1.0).abs() < 1e-15);
        let a = random_hamiltonian(3, &mut trial_rng(4, &[]));
        let b = random_hamiltonian(3, &mut trial_rng(4, &[]));
        assert_eq!(a, b);
    }

    #[test]
    fn unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let u = random_unitary(6, &mut rng);
        assert!((u.adjoint() * &u - CMatrix::identity(6, 6)).norm() < 1e-13);
    }

    #[test]
    fn weights_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..8 {
            let w = random_weights(n, &mut rng);
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            assert!(w.iter().all(|x| *x > 0.0));
        }
    }
}
