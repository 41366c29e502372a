//! Ensembles of states: Holevo χ, complementary states, bounds on χ, and
//! Hamiltonian mixing of binary ensembles.

use num_complex::Complex64;

use crate::continuity::sd_unitary_bound;
use crate::divergence::{
    fidelity, relative_entropy, shannon_entropy, skew_divergence, trace_distance, von_neumann_entropy, SkewParameter,
};
use crate::eigen::{eigendecompose, spectral_fn};
use crate::error::{QsdError, Result};
use crate::hermitian::{
    operator_norm, restrict, support_from_decomposition, CMatrix, DensityMatrix, HermitianOperator,
};

/// Accepted deviation of the weights from a probability vector before they
/// are renormalized.
pub const WEIGHT_TOLERANCE: f64 = 1e-9;

/// `{(p_i, ρ_i)}` with strictly positive weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct Ensemble {
    weights: Vec<f64>,
    states: Vec<DensityMatrix>,
}

impl Ensemble {
    /// Members with zero weight are dropped.
    pub fn new(weights: Vec<f64>, states: Vec<DensityMatrix>) -> Result<Self> {
        if weights.len() != states.len() {
            return Err(QsdError::domain(format!("{} weights for {} states", weights.len(), states.len())));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(QsdError::domain("weights must be finite and non-negative"));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_TOLERANCE {
            return Err(QsdError::domain(format!("weights sum to {total}, not 1")));
        }
        // renormalize only when the sum is visibly off, so files round-trip exactly
        let total = if (total - 1.0).abs() > 1e-12 { total } else { 1.0 };
        let (weights, states): (Vec<f64>, Vec<DensityMatrix>) =
            weights.into_iter().zip(states).filter(|(w, _)| *w > 0.0).map(|(w, s)| (w / total, s)).unzip();
        let Some(first) = states.first() else {
            return Err(QsdError::domain("ensemble has no member with positive weight"));
        };
        let dim = first.dim();
        if let Some(bad) = states.iter().find(|s| s.dim() != dim) {
            return Err(QsdError::DimensionMismatch(dim, bad.dim()));
        }
        Ok(Self { weights, states })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn states(&self) -> &[DensityMatrix] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }
}

fn mixture<'a>(terms: impl Iterator<Item = (f64, &'a DensityMatrix)>, dim: usize) -> HermitianOperator {
    let mut acc = HermitianOperator::zeros(dim);
    for (w, s) in terms {
        acc = &acc + &s.scale(w);
    }
    acc
}

/// `ρ₀ = Σ p_i ρ_i`.
pub fn average_state(e: &Ensemble) -> DensityMatrix {
    let sum = mixture(e.weights.iter().copied().zip(&e.states), e.dim());
    DensityMatrix::new_unchecked(sum)
}

/// `ρ̄_i = (ρ₀ − p_i ρ_i)/(1 − p_i)`, formed directly from the other members.
pub fn complementary_state(e: &Ensemble, i: usize) -> Result<DensityMatrix> {
    if i >= e.len() {
        return Err(QsdError::domain(format!("member {i} out of range for {} states", e.len())));
    }
    if e.len() < 2 {
        return Err(QsdError::domain("complementary state needs at least two members"));
    }
    let rest: f64 = e.weights.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, w)| w).sum();
    let terms = e.weights.iter().zip(&e.states).enumerate().filter(|(j, _)| *j != i).map(|(_, (w, s))| (w / rest, s));
    Ok(DensityMatrix::new_unchecked(mixture(terms, e.dim())))
}

/// `χ = S(ρ₀) − Σ p_i S(ρ_i)`.
pub fn holevo_chi(e: &Ensemble) -> f64 {
    let avg = von_neumann_entropy(&average_state(e));
    let parts: f64 = e.weights.iter().zip(&e.states).map(|(p, s)| p * von_neumann_entropy(s)).sum();
    avg - parts
}

/// `χ = Σ p_i S(ρ_i‖ρ₀)`.
pub fn holevo_chi_relative_entropy_form(e: &Ensemble) -> Result<f64> {
    let avg = average_state(e);
    let mut acc = 0.0;
    for (p, s) in e.weights.iter().zip(&e.states) {
        let v = relative_entropy(s, &avg)?;
        let Some(v) = v.finite() else {
            return Err(QsdError::domain("member not supported on the average state"));
        };
        acc += p * v;
    }
    Ok(acc)
}

/// `χ = −Σ p_i log p_i · SD_{p_i}(ρ_i‖ρ̄_i)`; 0 for a single member.
pub fn holevo_chi_skew_form(e: &Ensemble) -> Result<f64> {
    if e.len() < 2 {
        return Ok(0.0);
    }
    let mut acc = 0.0;
    for (i, (p, s)) in e.weights.iter().zip(&e.states).enumerate() {
        let bar = complementary_state(e, i)?;
        let al = SkewParameter::new(*p)?;
        acc += -p * p.ln() * skew_divergence(s, &bar, al)?;
    }
    Ok(acc)
}

/// χ together with its upper bounds, in increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiBounds {
    pub chi: f64,
    /// `−Σ p_i log p_i · T(ρ_i, ρ̄_i)`.
    pub complementary_bound: f64,
    /// `−Σ p_i log p_i · Σ_{j≠i} p_j t_ij/(1−p_i)`.
    pub pairwise_bound: f64,
    /// `H(p)·max t_ij`.
    pub entropy_times_t: f64,
    /// Binary ensembles only: entropy of `[[p, √(p(1−p))F], [√(p(1−p))F, 1−p]]`.
    pub roga_bound: Option<f64>,
    /// Binary ensembles only: `H(p)·√(1−F²)`.
    pub entropy_times_fidelity_distance: Option<f64>,
}

#[allow(clippy::needless_range_loop)]
pub fn chi_upper_bounds(e: &Ensemble) -> Result<ChiBounds> {
    let chi = holevo_chi(e);
    let n = e.len();
    let mut t = vec![vec![0.0; n]; n];
    let mut t_max: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = trace_distance(&e.states[i], &e.states[j])?;
            t[i][j] = d;
            t[j][i] = d;
            t_max = t_max.max(d);
        }
    }
    let mut complementary_bound = 0.0;
    let mut pairwise_bound = 0.0;
    if n >= 2 {
        for i in 0..n {
            let p = e.weights[i];
            let h = -p * p.ln();
            let bar = complementary_state(e, i)?;
            complementary_bound += h * trace_distance(&e.states[i], &bar)?;
            let avg_t: f64 = (0..n).filter(|j| *j != i).map(|j| e.weights[j] * t[i][j]).sum::<f64>() / (1.0 - p);
            pairwise_bound += h * avg_t;
        }
    }
    let h = shannon_entropy(&e.weights);
    let (roga_bound, entropy_times_fidelity_distance) = if n == 2 {
        let f = fidelity(&e.states[0], &e.states[1])?;
        let p = e.weights[0];
        let off = (p * (1.0 - p)).sqrt() * f;
        let sigma = HermitianOperator::from_parts(&[vec![p, off], vec![off, 1.0 - p]], &[vec![0.0; 2], vec![0.0; 2]])?;
        let sigma = DensityMatrix::new(sigma)?;
        (Some(von_neumann_entropy(&sigma)), Some(h * (1.0 - f * f).max(0.0).sqrt()))
    } else {
        (None, None)
    };
    Ok(ChiBounds {
        chi,
        complementary_bound,
        pairwise_bound,
        entropy_times_t: h * t_max,
        roga_bound,
        entropy_times_fidelity_distance,
    })
}

/// Change of χ between two ensembles with equal weights, and its bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct ChiContinuity {
    pub delta_chi: f64,
    /// `t_i = T(ρ_i, ρ'_i)`.
    pub distances: Vec<f64>,
    /// `t̄_i = T(ρ̄_i, ρ̄'_i)`; empty for a single member.
    pub complementary_distances: Vec<f64>,
    /// `max_i t_i`.
    pub t: f64,
    /// `Σ p_i t log(1 + (1−p_i)/(p_i t)) + Σ p_i log(1 + (1−p_i)t/p_i)`.
    pub weighted_bound: f64,
    /// `t log(1 + (n−1)/t) + log(1 + (n−1)t)`.
    pub dimension_free_bound: f64,
}

pub fn chi_continuity_bound(e: &Ensemble, f: &Ensemble) -> Result<ChiContinuity> {
    if e.len() != f.len() || e.weights.iter().zip(&f.weights).any(|(p, q)| (p - q).abs() > 1e-12) {
        return Err(QsdError::domain("ensembles must share their weights"));
    }
    if e.dim() != f.dim() {
        return Err(QsdError::DimensionMismatch(e.dim(), f.dim()));
    }
    let n = e.len();
    let distances = e.states.iter().zip(&f.states).map(|(a, b)| trace_distance(a, b)).collect::<Result<Vec<_>>>()?;
    let complementary_distances = if n >= 2 {
        (0..n)
            .map(|i| {
                let (a, b) = (complementary_state(e, i)?, complementary_state(f, i)?);
                trace_distance(&a, &b)
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let t = distances.iter().copied().fold(0.0, f64::max);
    let (weighted_bound, dimension_free_bound) = if t > 0.0 {
        let w: f64 = e
            .weights
            .iter()
            .map(|p| p * t * (1.0 + (1.0 - p) / (p * t)).ln() + p * (1.0 + (1.0 - p) * t / p).ln())
            .sum();
        let m = (n - 1) as f64;
        (w, t * (1.0 + m / t).ln() + (1.0 + m * t).ln())
    } else {
        (0.0, 0.0)
    };
    Ok(ChiContinuity {
        delta_chi: (holevo_chi(e) - holevo_chi(f)).abs(),
        distances,
        complementary_distances,
        t,
        weighted_bound,
        dimension_free_bound,
    })
}

/// `exp(itH)`.
pub fn unitary_exp(h: &HermitianOperator, t: f64) -> Result<CMatrix> {
    let dec = eigendecompose(h)?;
    let v = &dec.eigenvectors;
    let n = h.dim();
    let phases = CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::from_polar(1.0, t * dec.eigenvalues[i])
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(v * phases * v.adjoint())
}

/// `U(t) ρ U(t)*` with `U(t) = exp(itH)`.
pub fn evolve(rho: &DensityMatrix, h: &HermitianOperator, t: f64) -> Result<DensityMatrix> {
    rho.same_dim(h)?;
    let u = unitary_exp(h, t)?;
    Ok(DensityMatrix::new_unchecked(rho.conjugate_by(&u)?))
}

/// An ensemble whose members evolve under their own Hamiltonians.
#[derive(Clone, Debug)]
pub struct MixingExperiment {
    ensemble: Ensemble,
    hamiltonians: Vec<HermitianOperator>,
    time: f64,
}

impl MixingExperiment {
    pub fn new(ensemble: Ensemble, hamiltonians: Vec<HermitianOperator>, time: f64) -> Result<Self> {
        if hamiltonians.len() != ensemble.len() {
            return Err(QsdError::domain(format!(
                "{} Hamiltonians for {} members",
                hamiltonians.len(),
                ensemble.len()
            )));
        }
        if let Some(h) = hamiltonians.iter().find(|h| h.dim() != ensemble.dim()) {
            return Err(QsdError::DimensionMismatch(ensemble.dim(), h.dim()));
        }
        if !(time.is_finite() && time >= 0.0) {
            return Err(QsdError::domain(format!("time must be finite and non-negative, got {time}")));
        }
        Ok(Self { ensemble, hamiltonians, time })
    }

    pub fn binary(ensemble: Ensemble, h1: HermitianOperator, h2: HermitianOperator, time: f64) -> Result<Self> {
        if ensemble.len() != 2 {
            return Err(QsdError::domain(format!("expected a binary ensemble, got {} members", ensemble.len())));
        }
        Self::new(ensemble, vec![h1, h2], time)
    }

    pub fn ensemble(&self) -> &Ensemble {
        &self.ensemble
    }

    pub fn hamiltonians(&self) -> &[HermitianOperator] {
        &self.hamiltonians
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// The ensemble `{(p_j, ρ_j(s))}` at time `s`.
    pub fn ensemble_at(&self, s: f64) -> Result<Ensemble> {
        let states = self
            .ensemble
            .states
            .iter()
            .zip(&self.hamiltonians)
            .map(|(rho, h)| evolve(rho, h, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ensemble { weights: self.ensemble.weights.clone(), states })
    }

    /// `S(ρ₀(s))`.
    pub fn average_entropy_at(&self, s: f64) -> Result<f64> {
        Ok(von_neumann_entropy(&average_state(&self.ensemble_at(s)?)))
    }
}

/// `Λ = d/dt S(ρ₀(t)) = −trace(ρ₀′ log ρ₀)` with `ρ₀′ = Σ p_j i[H_j, ρ_j(t)]`,
/// evaluated on the support of `ρ₀(t)`.
pub fn mixing_rate(m: &MixingExperiment) -> Result<f64> {
    let now = m.ensemble_at(m.time)?;
    let n = now.dim();
    let mut deriv = CMatrix::zeros(n, n);
    let i = Complex64::new(0.0, 1.0);
    for ((p, rho), h) in now.weights.iter().zip(&now.states).zip(&m.hamiltonians) {
        let comm = h.matrix() * rho.matrix() - rho.matrix() * h.matrix();
        deriv += comm * (i * *p);
    }
    let deriv = HermitianOperator::from_hermitian_part(deriv)?;
    let avg = average_state(&now);
    let dec = eigendecompose(&avg)?;
    let support = support_from_decomposition(&dec, None);
    let (deriv, avg) = if support.is_full() {
        (deriv, avg.into_operator())
    } else {
        (restrict(&deriv, &support)?, restrict(&avg, &support)?)
    };
    let log_avg = spectral_fn(&avg, |l| l.max(f64::MIN_POSITIVE).ln())?;
    Ok(-deriv.trace_product(&log_avg))
}

/// Central difference `(S(ρ₀(t+h)) − S(ρ₀(t−h)))/2h`.
pub fn mixing_rate_finite_difference(m: &MixingExperiment, h: f64) -> Result<f64> {
    let plus = m.average_entropy_at(m.time + h)?;
    let minus = m.average_entropy_at(m.time - h)?;
    Ok((plus - minus) / (2.0 * h))
}

/// One unitary-perturbation inequality `SD_α(ρ‖UσU*) − SD_α(ρ‖σ) ≤ 2‖tH‖`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitaryPerturbation {
    pub alpha: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Entropy gain of a binary mixing experiment and the bounds on it.
#[derive(Clone, Debug, PartialEq)]
pub struct SimRecord {
    /// `S(ρ₀(t)) − S(ρ₀)` for the experiment with `H₁ = 0`, `H = H₂ − H₁`.
    pub entropy_gain: f64,
    /// `2t·h(p₁, p₂)·‖H‖`.
    pub sim_bound: f64,
    /// The gain rebuilt from two skew-divergence differences.
    pub sd_representation: f64,
    pub sd_representation_residual: f64,
    /// At `α = p₁` and `α = p₂`.
    pub unitary_perturbations: [UnitaryPerturbation; 2],
}

/// Evaluates the small incremental mixing bound after moving all dynamics
/// onto the second member (`H₁ = 0`, `H = H₂ − H₁`).
pub fn sim_bound_check(m: &MixingExperiment) -> Result<SimRecord> {
    let e = &m.ensemble;
    if e.len() != 2 {
        return Err(QsdError::domain(format!("expected a binary ensemble, got {} members", e.len())));
    }
    let h = &m.hamiltonians[1] - &m.hamiltonians[0];
    let t = m.time;
    let (p1, p2) = (e.weights[0], e.weights[1]);
    let (rho1, rho2) = (&e.states[0], &e.states[1]);
    let u = unitary_exp(&h, t)?;
    let rho2_t = DensityMatrix::new_unchecked(rho2.conjugate_by(&u)?);
    let rho1_back = DensityMatrix::new_unchecked(rho1.conjugate_by(&u.adjoint())?);

    let before = von_neumann_entropy(&average_state(e));
    let later = Ensemble { weights: e.weights.clone(), states: vec![rho1.clone(), rho2_t.clone()] };
    let entropy_gain = von_neumann_entropy(&average_state(&later)) - before;

    let (a1, a2) = (SkewParameter::new(p1)?, SkewParameter::new(p2)?);
    let d1 = skew_divergence(rho1, &rho2_t, a1)? - skew_divergence(rho1, rho2, a1)?;
    let d2 = skew_divergence(rho2, &rho1_back, a2)? - skew_divergence(rho2, rho1, a2)?;
    let sd_representation = -p1 * p1.ln() * d1 - p2 * p2.ln() * d2;

    let h_norm = operator_norm(&h);
    let rhs = sd_unitary_bound(t * h_norm);
    Ok(SimRecord {
        entropy_gain,
        sim_bound: 2.0 * t * shannon_entropy(&e.weights) * h_norm,
        sd_representation,
        sd_representation_residual: (entropy_gain - sd_representation).abs(),
        unitary_perturbations: [
            UnitaryPerturbation { alpha: p1, lhs: d1, rhs },
            UnitaryPerturbation { alpha: p2, lhs: d2, rhs },
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_hamiltonian, random_pure_state, random_state, random_weights};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    fn diag(p: &[f64]) -> DensityMatrix {
        DensityMatrix::from_diagonal(p).unwrap()
    }

    #[test]
    fn construction() {
        let a = diag(&[1.0, 0.0]);
        let b = diag(&[0.0, 1.0]);
        let e = Ensemble::new(vec![0.5, 0.0, 0.5], vec![a.clone(), a.clone(), b.clone()]).unwrap();
        assert_eq!(e.len(), 2);
        assert!(Ensemble::new(vec![0.5, 0.4], vec![a.clone(), b.clone()]).is_err());
        assert!(Ensemble::new(vec![1.0], vec![]).is_err());
        assert!(Ensemble::new(vec![0.5, 0.5], vec![a, diag(&[0.5, 0.25, 0.25])]).is_err());
    }

    #[test]
    fn averages_and_complements() {
        let mut r = rng(1);
        let rho = random_state(3, &mut r);
        let single = Ensemble::new(vec![1.0], vec![rho.clone()]).unwrap();
        assert_eq!(average_state(&single).matrix(), rho.matrix());
        assert!(complementary_state(&single, 0).is_err());

        let twice = Ensemble::new(vec![0.5, 0.5], vec![rho.clone(), rho.clone()]).unwrap();
        assert!((average_state(&twice).matrix() - rho.matrix()).norm() < 1e-15);

        let orth = Ensemble::new(vec![0.5, 0.5], vec![diag(&[1.0, 0.0]), diag(&[0.0, 1.0])]).unwrap();
        assert!((average_state(&orth).matrix() - diag(&[0.5, 0.5]).matrix()).norm() < 1e-15);

        let sigma = random_state(3, &mut r);
        let omega = random_state(3, &mut r);
        let w = 1.0 / 3.0;
        let three = Ensemble::new(vec![w, w, w], vec![rho.clone(), sigma.clone(), omega.clone()]).unwrap();
        let bar = complementary_state(&three, 0).unwrap();
        let expected = (sigma.matrix() + omega.matrix()) * Complex64::new(0.5, 0.0);
        assert!((bar.matrix() - expected).norm() < 1e-14);
        let pair = Ensemble::new(vec![0.3, 0.7], vec![rho, sigma.clone()]).unwrap();
        assert!((complementary_state(&pair, 0).unwrap().matrix() - sigma.matrix()).norm() < 1e-15);
    }

    #[test]
    fn chi_examples() {
        let mut r = rng(2);
        let rho = random_state(3, &mut r);
        let same = Ensemble::new(vec![0.2, 0.8], vec![rho.clone(), rho.clone()]).unwrap();
        assert!(holevo_chi(&same).abs() < 1e-14);
        let single = Ensemble::new(vec![1.0], vec![rho]).unwrap();
        assert_eq!(holevo_chi(&single), 0.0);

        let p = [0.2, 0.3, 0.5];
        let states = vec![diag(&[1.0, 0.0, 0.0]), diag(&[0.0, 1.0, 0.0]), diag(&[0.0, 0.0, 1.0])];
        let e = Ensemble::new(p.to_vec(), states).unwrap();
        assert!((holevo_chi(&e) - shannon_entropy(&p)).abs() < 1e-14);
    }

    #[test]
    fn chi_three_ways() {
        let mut r = rng(3);
        for n in 1..5 {
            let w = random_weights(n, &mut r);
            let states = (0..n).map(|_| random_state(4, &mut r)).collect();
            let e = Ensemble::new(w, states).unwrap();
            let chi = holevo_chi(&e);
            assert!((holevo_chi_relative_entropy_form(&e).unwrap() - chi).abs() < 1e-9);
            assert!((holevo_chi_skew_form(&e).unwrap() - chi).abs() < 1e-9);
        }
    }

    #[test]
    fn orthogonal_binary_bounds_are_tight() {
        let e = Ensemble::new(vec![0.5, 0.5], vec![diag(&[1.0, 0.0]), diag(&[0.0, 1.0])]).unwrap();
        let b = chi_upper_bounds(&e).unwrap();
        let ln2 = 2f64.ln();
        assert!((b.chi - ln2).abs() < 1e-14);
        assert!((b.entropy_times_t - ln2).abs() < 1e-14);
        assert!((b.pairwise_bound - ln2).abs() < 1e-14);
        assert!((b.roga_bound.unwrap() - ln2).abs() < 1e-14);
    }

    #[test]
    fn continuity_examples() {
        let mut r = rng(4);
        let w = random_weights(3, &mut r);
        let states: Vec<_> = (0..3).map(|_| random_state(4, &mut r)).collect();
        let e = Ensemble::new(w.clone(), states.clone()).unwrap();
        let c = chi_continuity_bound(&e, &e).unwrap();
        assert_eq!((c.delta_chi, c.weighted_bound, c.dimension_free_bound), (0.0, 0.0, 0.0));

        let f = Ensemble::new(w, (0..3).map(|_| random_state(4, &mut r)).collect()).unwrap();
        let c = chi_continuity_bound(&e, &f).unwrap();
        assert!(c.delta_chi <= c.weighted_bound + 1e-8);
        assert!(c.weighted_bound <= c.dimension_free_bound + 1e-8);
        for (i, tb) in c.complementary_distances.iter().enumerate() {
            let others = c.distances.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, d)| *d);
            assert!(*tb <= others.fold(0.0, f64::max) + 1e-12);
        }
        let g = Ensemble::new(vec![0.5, 0.5], states[..2].to_vec()).unwrap();
        assert!(chi_continuity_bound(&e, &g).is_err());
    }

    #[test]
    fn evolution_examples() {
        let mut r = rng(5);
        let rho = random_state(3, &mut r);
        let h = random_hamiltonian(3, &mut r);
        assert!((evolve(&rho, &h, 0.0).unwrap().matrix() - rho.matrix()).norm() < 1e-14);
        let d = diag(&[0.2, 0.3, 0.5]);
        let hd = HermitianOperator::from_real_diagonal(&[1.0, -0.5, 0.3]);
        assert!((evolve(&d, &hd, 0.7).unwrap().matrix() - d.matrix()).norm() < 1e-14);
        for t in [0.1, 0.5, 2.0] {
            let out = evolve(&rho, &h, t).unwrap();
            assert!((out.trace() - 1.0).abs() < 1e-10);
            let s0 = crate::hermitian::spectrum(&rho);
            let s1 = crate::hermitian::spectrum(&out);
            assert!(s0.iter().zip(&s1).all(|(a, b)| (a - b).abs() < 1e-10));
            assert!(trace_distance(&out, &rho).unwrap() <= t * operator_norm(&h) + 1e-8);
        }
    }

    #[test]
    fn mixing_rate_examples() {
        let mut r = rng(6);
        let e = Ensemble::new(vec![0.4, 0.6], vec![random_state(3, &mut r), random_state(3, &mut r)]).unwrap();
        let zero = HermitianOperator::zeros(3);
        let m = MixingExperiment::binary(e.clone(), zero.clone(), zero, 0.0).unwrap();
        assert!(mixing_rate(&m).unwrap().abs() < 1e-14);

        let rho = random_state(3, &mut r);
        let same = Ensemble::new(vec![0.4, 0.6], vec![rho.clone(), rho]).unwrap();
        let h = random_hamiltonian(3, &mut r);
        let m = MixingExperiment::binary(same, h.clone(), h, 0.3).unwrap();
        assert!(mixing_rate(&m).unwrap().abs() < 1e-12);

        let m = MixingExperiment::binary(e, random_hamiltonian(3, &mut r), random_hamiltonian(3, &mut r), 0.2).unwrap();
        let exact = mixing_rate(&m).unwrap();
        let fd = mixing_rate_finite_difference(&m, 1e-5).unwrap();
        assert!((exact - fd).abs() < 1e-5, "{exact} {fd}");
    }

    #[test]
    fn mixing_rate_on_singular_average() {
        let mut r = rng(7);
        let e =
            Ensemble::new(vec![0.5, 0.5], vec![random_pure_state(4, &mut r), random_pure_state(4, &mut r)]).unwrap();
        let m = MixingExperiment::binary(e, random_hamiltonian(4, &mut r), random_hamiltonian(4, &mut r), 0.3).unwrap();
        let exact = mixing_rate(&m).unwrap();
        let fd = mixing_rate_finite_difference(&m, 1e-5).unwrap();
        assert!((exact - fd).abs() < 1e-5, "{exact} {fd}");
    }

    #[test]
    fn sim_examples() {
        let mut r = rng(8);
        let e = Ensemble::new(vec![0.3, 0.7], vec![random_state(3, &mut r), random_state(3, &mut r)]).unwrap();
        let h = random_hamiltonian(3, &mut r);
        let m = MixingExperiment::binary(e.clone(), HermitianOperator::zeros(3), h.clone(), 0.0).unwrap();
        let rec = sim_bound_check(&m).unwrap();
        assert!(rec.entropy_gain.abs() < 1e-14 && rec.sim_bound == 0.0);

        let m = MixingExperiment::binary(e.clone(), h.clone(), h, 0.8).unwrap();
        assert!(sim_bound_check(&m).unwrap().entropy_gain.abs() < 1e-14);

        let m = MixingExperiment::binary(e, random_hamiltonian(3, &mut r), random_hamiltonian(3, &mut r), 0.6).unwrap();
        let rec = sim_bound_check(&m).unwrap();
        assert!(rec.entropy_gain <= rec.sim_bound + 1e-8);
        assert!(rec.sd_representation_residual < 1e-8);
        for up in rec.unitary_perturbations {
            assert!(up.lhs <= up.rhs + 1e-8);
        }

        let three = Ensemble::new(vec![0.2, 0.3, 0.5], (0..3).map(|_| random_state(2, &mut r)).collect()).unwrap();
        let hs = (0..3).map(|_| random_hamiltonian(2, &mut r)).collect();
        let m = MixingExperiment::new(three, hs, 0.5).unwrap();
        assert!(sim_bound_check(&m).is_err());
    }
}
