//! The registered checks. Each function draws one random instance and
//! returns the smallest margin among the statements it tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{CheckSpec, Suite, Tolerance, Trial, TrialInputs};
use crate::continuity::{
    dsd_first_argument_fixed, dsd_joint_shift_bounds, dsd_second_argument_bounds, dsd_second_argument_fixed,
    dsd_unitary_bound, re_joint_shift_bounds, re_second_argument_bounds, sd_first_argument_fixed,
    sd_joint_shift_bounds, sd_second_argument_bounds, sd_second_argument_fixed, sd_unitary_bound,
};
use crate::differential::{differential_skew_divergence, differential_skew_divergence_trace_form, sd_by_averaging};
use crate::divergence::{
    fidelity, relative_entropy, restrict_to_joint_support, scalar_skew_divergence, skew_divergence,
    skewed_relative_entropy, trace_distance, SkewParameter,
};
use crate::eigen::{eigendecompose, spectral_fn};
use crate::ensemble::{
    chi_continuity_bound, chi_upper_bounds, evolve, holevo_chi, holevo_chi_relative_entropy_form, holevo_chi_skew_form,
    mixing_rate, mixing_rate_finite_difference, sim_bound_check, unitary_exp, Ensemble, MixingExperiment,
};
use crate::error::{QsdError, Result};
use crate::frechet::{
    chi2_log, frechet_log_quadrature, metric_epsilon_limit_check, second_frechet_log_quadrature, LogDerivative,
};
use crate::hermitian::{
    operator_norm, spectrum, trace_norm, CMatrix, DensityMatrix, HermitianOperator, PositiveOperator,
};
use crate::quadrature::QuadratureScheme;
use crate::random::{
    random_cptp, random_hamiltonian, random_hermitian, random_positive, random_positive_definite, random_state,
    random_state_with_rank, random_unitary, random_weights,
};

const ALPHAS: [f64; 5] = [0.01, 0.1, 0.5, 0.9, 0.99];

fn skew(a: f64) -> SkewParameter {
    SkewParameter::new(a).expect("listed skew parameters are valid")
}

fn pick<T: Copy>(rng: &mut ChaCha8Rng, xs: &[T]) -> T {
    xs[rng.random_range(0..xs.len())]
}

/// State of random rank.
fn state(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    let rank = rng.random_range(1..=dim);
    random_state_with_rank(dim, rank, rng)
}

fn positive(op: HermitianOperator) -> PositiveOperator {
    PositiveOperator::new_unchecked(op)
}

fn lambda_min(x: &HermitianOperator) -> f64 {
    spectrum(x)[0]
}

fn lambda_max(x: &HermitianOperator) -> f64 {
    *spectrum(x).last().expect("dimension is positive")
}

fn op(x: &HermitianOperator) -> HermitianOperator {
    x.clone()
}

fn rel_distance(x: &CMatrix, y: &CMatrix) -> f64 {
    (x - y).norm() / y.norm().max(f64::MIN_POSITIVE)
}

fn embed(x: &HermitianOperator, dim: usize, offset: usize) -> HermitianOperator {
    let mut m = CMatrix::zeros(dim, dim);
    let k = x.dim();
    m.view_mut((offset, offset), (k, k)).copy_from(x.matrix());
    HermitianOperator::symmetrized(m)
}

/// States with orthogonal supports in a random basis.
fn orthogonal_pair(rng: &mut ChaCha8Rng, dim: usize) -> Result<(DensityMatrix, DensityMatrix)> {
    let k = rng.random_range(1..dim);
    let r1 = state(rng, k);
    let r2 = state(rng, dim - k);
    let u = random_unitary(dim, rng);
    let rho = embed(&r1, dim, 0).conjugate_by(&u)?;
    let sigma = embed(&r2, dim, k).conjugate_by(&u)?;
    Ok((DensityMatrix::new_unchecked(rho), DensityMatrix::new_unchecked(sigma)))
}

/// Eigenvalues with condition number up to 1e6, sometimes repeated or split
/// by a relative 1e-9.
fn conditioned_spectrum(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    let log_kappa: f64 = rng.random_range(0.0..=6.0);
    let scale = 10f64.powf(rng.random_range(-1.0..=1.0));
    let mut l: Vec<f64> = (0..dim)
        .map(|i| match i {
            0 => 1.0,
            1 => 10f64.powf(-log_kappa),
            _ => 10f64.powf(-log_kappa * rng.random::<f64>()),
        })
        .collect();
    if dim >= 2 {
        match rng.random_range(0..3) {
            0 => {
                let (i, j) = (rng.random_range(0..dim), rng.random_range(0..dim));
                l[i] = l[j];
            }
            1 => {
                let (i, j) = (rng.random_range(0..dim), rng.random_range(0..dim));
                l[i] = l[j] * (1.0 + 1e-9);
            }
            _ => {}
        }
    }
    l.into_iter().map(|x| x * scale).collect()
}

fn from_spectrum(l: &[f64], v: &CMatrix) -> Result<HermitianOperator> {
    HermitianOperator::from_real_diagonal(l).conjugate_by(v)
}

fn member_ensemble(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Result<Ensemble> {
    let w = random_weights(n, rng);
    let states = (0..n).map(|_| state(rng, dim)).collect();
    Ensemble::new(w, states)
}

fn ensemble_inputs(e: &Ensemble) -> TrialInputs {
    const NAMES: [&str; 4] = ["rho_1", "rho_2", "rho_3", "rho_4"];
    let mut v: Vec<_> = e.states().iter().zip(NAMES).map(|(s, n)| (n, op(s))).collect();
    v.push(("weights", HermitianOperator::from_real_diagonal(e.weights())));
    v
}

fn binary_experiment(rng: &mut ChaCha8Rng, dim: usize, full_rank: bool) -> Result<MixingExperiment> {
    let p: f64 = rng.random_range(0.01..0.99);
    let (r1, r2) =
        if full_rank { (random_state(dim, rng), random_state(dim, rng)) } else { (state(rng, dim), state(rng, dim)) };
    let e = Ensemble::new(vec![p, 1.0 - p], vec![r1, r2])?;
    let h1 = random_hamiltonian(dim, rng);
    let h2 = random_hamiltonian(dim, rng);
    let t = 1.0 - rng.random::<f64>();
    MixingExperiment::binary(e, h1, h2, t)
}

fn experiment_inputs(m: &MixingExperiment) -> TrialInputs {
    let mut v = ensemble_inputs(m.ensemble());
    v.push(("h_1", m.hamiltonians()[0].clone()));
    v.push(("h_2", m.hamiltonians()[1].clone()));
    v.push(("time", HermitianOperator::from_real_diagonal(&[m.time()])));
    v
}

fn finite(v: crate::divergence::DivergenceValue) -> Result<f64> {
    v.finite().ok_or_else(|| QsdError::domain("unexpected infinite relative entropy"))
}

// hermitian-core

fn eig_reconstruction(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_hermitian(dim, rng);
    let dec = eigendecompose(&a)?;
    let residual = (dec.reconstruct().matrix() - a.matrix()).norm();
    Ok(Trial::new(-residual / a.frobenius_norm().max(1.0), vec![("a", a)]))
}

fn spectral_identity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_hermitian(dim, rng);
    let same = spectral_fn(&a, |x| x)?;
    Ok(Trial::new(-(same.matrix() - a.matrix()).norm(), vec![("a", a)]))
}

fn trace_norm_is_norm(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let x = random_hermitian(dim, rng);
    let y = random_hermitian(dim, rng);
    let c: f64 = rng.random_range(-3.0..3.0);
    let triangle = trace_norm(&x) + trace_norm(&y) - trace_norm(&(&x + &y));
    let homogeneity = -(trace_norm(&x.scale(c)) - c.abs() * trace_norm(&x)).abs();
    Ok(Trial::new(triangle.min(homogeneity), vec![("x", x), ("y", y)]))
}

fn state_margin(rho: &HermitianOperator) -> f64 {
    (-(rho.trace() - 1.0).abs()).min(lambda_min(rho))
}

fn random_state_valid(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = random_state(dim, rng);
    Ok(Trial::new(state_margin(&rho), vec![("rho", op(&rho))]))
}

fn channel_maps_states(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let env = rng.random_range(1..=3);
    let ch = random_cptp(dim, env, rng);
    let rho = state(rng, dim);
    let out = ch.apply(&rho)?;
    Ok(Trial::new(state_margin(&out), vec![("rho", op(&rho))]))
}

// divergence-measures

fn sd_range(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let mut slack = f64::INFINITY;
    for a in ALPHAS {
        let v = skew_divergence(&rho, &sigma, skew(a))?;
        slack = slack.min(v).min(1.0 - v);
    }
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_orthogonal_pairs(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let (rho, sigma) = orthogonal_pair(rng, dim)?;
    let mut slack = -rho.trace_product(&sigma).abs();
    for a in ALPHAS {
        slack = slack.min(-(skew_divergence(&rho, &sigma, skew(a))? - 1.0).abs());
    }
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_overlapping_pairs(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = random_state(dim, rng);
    let overlap = rho.trace_product(&sigma);
    let mut slack = overlap - 1e-9;
    for a in ALPHAS {
        slack = slack.min(1.0 - 1e-9 - skew_divergence(&rho, &sigma, skew(a))?);
    }
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_scaling(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let x = random_positive(dim, 2.0, rng);
    let y = random_positive(dim, 2.0, rng);
    let b = 2.0 * (1.0 - rng.random::<f64>());
    let c = 2.0 * (1.0 - rng.random::<f64>());
    let al = skew(pick(rng, &ALPHAS));
    let bx = positive(x.scale(b));
    let by = positive(y.scale(b));
    let cx = positive(x.scale(c));
    let first = skew_divergence(&bx, &by, al)? - b * skew_divergence(&x, &y, al)?;
    let second = skew_divergence(&bx, &cx, al)? - scalar_skew_divergence(b, c, al) * x.trace();
    Ok(Trial::new(-first.abs().max(second.abs()), vec![("x", op(&x)), ("y", op(&y))]))
}

fn sd_unitary_invariance(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let u = random_unitary(dim, rng);
    let al = skew(pick(rng, &ALPHAS));
    let moved = skew_divergence(&positive(rho.conjugate_by(&u)?), &positive(sigma.conjugate_by(&u)?), al)?;
    let diff = moved - skew_divergence(&rho, &sigma, al)?;
    Ok(Trial::new(-diff.abs(), vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_contractivity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let env = rng.random_range(1..=3);
    let ch = random_cptp(dim, env, rng);
    let al = skew(pick(rng, &ALPHAS));
    let before = skew_divergence(&rho, &sigma, al)?;
    let (r, s) = (ch.apply(&rho)?, ch.apply(&sigma)?);
    let after = skew_divergence(&r, &s, al)?;
    Ok(Trial::new(before - after, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_joint_convexity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let w = random_weights(3, rng);
    let rhos: Vec<_> = (0..3).map(|_| state(rng, dim)).collect();
    let sigmas: Vec<_> = (0..3).map(|_| state(rng, dim)).collect();
    let al = skew(pick(rng, &ALPHAS));
    let mut mix_r = HermitianOperator::zeros(dim);
    let mut mix_s = HermitianOperator::zeros(dim);
    let mut rhs = 0.0;
    for k in 0..3 {
        mix_r = &mix_r + &rhos[k].scale(w[k]);
        mix_s = &mix_s + &sigmas[k].scale(w[k]);
        rhs += w[k] * skew_divergence(&rhos[k], &sigmas[k], al)?;
    }
    let lhs = skew_divergence(&positive(mix_r.clone()), &positive(mix_s.clone()), al)?;
    Ok(Trial::new(rhs - lhs, vec![("rho_mix", mix_r), ("sigma_mix", mix_s)]))
}

fn sd_trace_norm_sandwich(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let a = pick(rng, &ALPHAS);
    let t = trace_distance(&rho, &sigma)?;
    let v = skew_divergence(&rho, &sigma, skew(a))?;
    let lower = 2.0 * (1.0 - a) * (1.0 - a) / (-a.ln()) * t * t;
    Ok(Trial::new((v - lower).min(t - v), vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_trace_norm_tightness(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let t = pick(rng, &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]);
    let a = pick(rng, &[0.1, 0.5, 0.9]);
    let mut p = vec![0.0; dim];
    let mut q = vec![0.0; dim];
    (p[0], p[2]) = (t, 1.0 - t);
    (q[1], q[2]) = (t, 1.0 - t);
    let u = random_unitary(dim, rng);
    let rho = DensityMatrix::new_unchecked(HermitianOperator::from_real_diagonal(&p).conjugate_by(&u)?);
    let sigma = DensityMatrix::new_unchecked(HermitianOperator::from_real_diagonal(&q).conjugate_by(&u)?);
    let v = skew_divergence(&rho, &sigma, skew(a))?;
    Ok(Trial::new(-(v - t).abs(), vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn skewed_re_upper_bound(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let mut slack = f64::INFINITY;
    for a in ALPHAS {
        let s = skewed_relative_entropy(&rho, &sigma, skew(a))?;
        slack = slack.min(-a.ln() - s);
    }
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn fidelity_trace_distance(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let f = fidelity(&rho, &sigma)?;
    let t = trace_distance(&rho, &sigma)?;
    Ok(Trial::new((1.0 - f * f).max(0.0).sqrt() - t, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

// frechet-calculus

fn frechet_order(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive_definite(dim, rng);
    let x = random_hermitian(dim, rng);
    let gap = random_positive(dim, 1.0, rng);
    let y = &x + &gap;
    let d = LogDerivative::new(&a)?;
    let diff = &d.first_hermitian(&y) - &d.first_hermitian(&x);
    Ok(Trial::new(lambda_min(&diff), vec![("a", a), ("x", x), ("y", y)]))
}

fn frechet_sum_lemma(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let (ar, br) = restrict_to_joint_support(&a, &b)?;
    let t = LogDerivative::new(&(&ar + &br))?.first_hermitian(&ar);
    Ok(Trial::new(1.0 - lambda_max(&t), vec![("a", op(&a)), ("b", op(&b))]))
}

fn second_derivative_sum_lemma(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let (ar, br) = restrict_to_joint_support(&a, &b)?;
    let r = LogDerivative::new(&(&ar + &br))?.second_hermitian(&ar, &ar);
    Ok(Trial::new(1.0 - lambda_max(&r), vec![("a", op(&a)), ("b", op(&b))]))
}

fn second_derivative_identity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive_definite(dim, rng);
    let delta = random_hermitian(dim, rng);
    let d = LogDerivative::new(&a)?;
    let err = (d.second(a.matrix(), delta.matrix()) - d.first(delta.matrix())).norm();
    Ok(Trial::new(-err, vec![("a", a), ("delta", delta)]))
}

fn metric_increment(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_state(dim, rng).scale(2.0 * (1.0 - rng.random::<f64>()));
    let c = random_positive(dim, 2.0, rng);
    let ab = &a.operator().clone() + &b;
    let abc = &ab + &c;
    let diff = LogDerivative::new(&ab)?.metric_diagonal(&a) - LogDerivative::new(&abc)?.metric_diagonal(&a);
    let (ta, tc) = (a.trace(), c.trace());
    let upper = ta - ta * ta / (ta + tc);
    Ok(Trial::new(diff.min(upper - diff), vec![("a", op(&a)), ("b", b), ("c", op(&c))]))
}

fn dsd_symmetry(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let al: f64 = rng.random_range(0.01..0.99);
    let x = differential_skew_divergence(&a, &b, al)?;
    let y = differential_skew_divergence(&b, &a, 1.0 - al)?;
    Ok(Trial::new(-(x - y).abs(), vec![("a", op(&a)), ("b", op(&b))]))
}

fn dsd_derivative(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_state(dim, rng);
    let b = random_state(dim, rng);
    let al: f64 = rng.random_range(0.05..0.95);
    let h = 1e-5;
    let s_plus = skewed_relative_entropy(&a, &b, skew(al + h))?;
    let s_minus = skewed_relative_entropy(&a, &b, skew(al - h))?;
    let fd = -al * (s_plus - s_minus) / (2.0 * h);
    let d = differential_skew_divergence(&a, &b, al)?;
    Ok(Trial::new(-(fd - d).abs(), vec![("a", op(&a)), ("b", op(&b))]))
}

fn dsd_trace_bounds(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let al: f64 = rng.random_range(0.01..0.99);
    let t = trace_distance(&rho, &sigma)?;
    let d = differential_skew_divergence(&rho, &sigma, al)?;
    let lower = 4.0 * al * (1.0 - al) * t * t;
    Ok(Trial::new((d - lower).min(t - d), vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn dsd_contractivity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let env = rng.random_range(1..=3);
    let ch = random_cptp(dim, env, rng);
    let al: f64 = rng.random_range(0.01..0.99);
    let before = differential_skew_divergence(&rho, &sigma, al)?;
    let (r, s) = (ch.apply(&rho)?, ch.apply(&sigma)?);
    let after = differential_skew_divergence(&r, &s, al)?;
    Ok(Trial::new(before - after, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

/// Central difference of `log` taken in the known eigenbasis of `A`, with
/// the perturbation scaled to `λ_min` so the step is small relative to every
/// eigenvalue.
fn frechet_finite_difference(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let l = conditioned_spectrum(rng, dim);
    let v = random_unitary(dim, rng);
    let a = from_spectrum(&l, &v)?;
    let delta = random_hermitian(dim, rng);
    let lmin = l.iter().copied().fold(f64::INFINITY, f64::min);
    let dt = HermitianOperator::symmetrized(v.adjoint() * delta.matrix() * &v);
    let dt = dt.scale(lmin / operator_norm(&dt));
    let h = 1e-5;
    let lam = HermitianOperator::from_real_diagonal(&l);
    let plus = spectral_fn(&(&lam + &dt.scale(h)), f64::ln)?;
    let minus = spectral_fn(&(&lam + &dt.scale(-h)), f64::ln)?;
    let fd = (plus.matrix() - minus.matrix()) / num_complex::Complex64::new(2.0 * h, 0.0);
    let fd = &v * fd * v.adjoint();
    let scaled = dt.conjugate_by(&v)?;
    let exact = LogDerivative::new(&a)?.first(scaled.matrix());
    Ok(Trial::new(-rel_distance(&exact, &fd), vec![("a", a), ("delta", scaled)]))
}

fn frechet_quadrature(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let l = conditioned_spectrum(rng, dim);
    let v = random_unitary(dim, rng);
    let a = from_spectrum(&l, &v)?;
    let delta = random_hermitian(dim, rng);
    let exact = LogDerivative::new(&a)?.first(delta.matrix());
    let quad = frechet_log_quadrature(&a, delta.matrix(), &QuadratureScheme::default())?;
    Ok(Trial::new(-rel_distance(&exact, &quad), vec![("a", a), ("delta", delta)]))
}

fn second_derivative_quadrature(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let l = conditioned_spectrum(rng, dim);
    let v = random_unitary(dim, rng);
    let a = from_spectrum(&l, &v)?;
    let delta = random_hermitian(dim, rng);
    let exact = LogDerivative::new(&a)?.second(delta.matrix(), delta.matrix());
    let quad = second_frechet_log_quadrature(&a, delta.matrix(), delta.matrix(), &QuadratureScheme::default())?;
    Ok(Trial::new(-rel_distance(&exact, &quad), vec![("a", a), ("delta", delta)]))
}

fn dsd_trace_form(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let al: f64 = rng.random_range(0.01..0.99);
    let x = differential_skew_divergence(&a, &b, al)?;
    let y = differential_skew_divergence_trace_form(&a, &b, al)?;
    Ok(Trial::new(-(x - y).abs(), vec![("a", op(&a)), ("b", op(&b))]))
}

fn chi2_relation(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let al: f64 = rng.random_range(0.01..0.99);
    let tau = positive(&a.scale(al) + &b.scale(1.0 - al));
    let d = differential_skew_divergence(&a, &b, al)?;
    let via_chi2 = al / (1.0 - al) * chi2_log(&a, &tau)?;
    Ok(Trial::new(-(d - via_chi2).abs(), vec![("a", op(&a)), ("b", op(&b))]))
}

fn chi2_trace_norm(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = random_state(dim, rng);
    let tn = trace_norm(&(rho.operator() - sigma.operator()));
    let c = chi2_log(&rho, &sigma)?;
    Ok(Trial::new(c - tn * tn, vec![("rho", op(&rho)), ("sigma", op(&sigma))]))
}

fn sd_averaging(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let al = skew(pick(rng, &ALPHAS));
    let avg = sd_by_averaging(&a, &b, al, &QuadratureScheme::default())?;
    let direct = skew_divergence(&a, &b, al)?;
    Ok(Trial::new(-(avg - direct).abs(), vec![("a", op(&a)), ("b", op(&b))]))
}

fn metric_epsilon_limit(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rank = rng.random_range(1..dim);
    let u = random_unitary(dim, rng);
    // the gap at ε closes like ε/λ² for the smallest support eigenvalue λ of
    // B, so the support spectrum is kept in [0.1, 1]
    let l: Vec<f64> = (0..rank).map(|_| rng.random_range(0.1..=1.0)).collect();
    let b_small = from_spectrum(&l, &random_unitary(rank, rng))?;
    let b = positive(embed(&b_small, dim, 0).conjugate_by(&u)?);
    let a_small = random_positive(rank, 1.0, rng);
    let a = positive(embed(&a_small, dim, 0).conjugate_by(&u)?);
    let c = positive(random_state(dim, rng).into_operator());
    let eps = [1e-1, 1e-2, 1e-4, 1e-6, 1e-8];
    let rec = metric_epsilon_limit_check(&a, &b, &c, &eps)?;
    let slack = if rec.monotone { -rec.final_gap } else { f64::NEG_INFINITY };
    Ok(Trial::new(slack, vec![("a", op(&a)), ("b", op(&b)), ("c", op(&c))]))
}

// ensemble-analysis

fn proposition_bounds(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let c = random_positive(dim, 2.0, rng);
    let al = skew(pick(rng, &ALPHAS));
    let (ta, tc) = (a.trace(), c.trace());
    let ab = positive(a.operator() + b.operator());
    let abc = positive(ab.operator() + c.operator());
    let bc = positive(b.operator() + c.operator());

    let x1 = skew_divergence(&a, &ab, al)? - skew_divergence(&a, &abc, al)?;
    let x2 = finite(relative_entropy(&a, &ab)?)? - finite(relative_entropy(&a, &abc)?)?;
    let x3 = skew_divergence(&b, &ab, al)? - skew_divergence(&bc, &abc, al)?;
    let x4 = finite(relative_entropy(&b, &ab)?)? - finite(relative_entropy(&bc, &abc)?)?;
    let slack = sd_second_argument_bounds(ta, tc, al)
        .slack(x1)
        .min(re_second_argument_bounds(ta, tc).slack(x2))
        .min(sd_joint_shift_bounds(ta, tc, al).slack(x3))
        .min(re_joint_shift_bounds(ta, tc).slack(x4));
    Ok(Trial::new(slack, vec![("a", op(&a)), ("b", op(&b)), ("c", op(&c))]))
}

fn dsd_increment_bounds(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let a = random_positive(dim, 2.0, rng);
    let b = random_positive(dim, 2.0, rng);
    let c = random_positive(dim, 2.0, rng);
    let al: f64 = rng.random_range(0.01..0.99);
    let (ta, tc) = (a.trace(), c.trace());
    let bc = positive(b.operator() + c.operator());
    let ab = positive(a.operator() + b.operator());
    let abc = positive(ab.operator() + c.operator());
    let x1 = differential_skew_divergence(&a, &b, al)? - differential_skew_divergence(&a, &bc, al)?;
    let x2 = differential_skew_divergence(&b, &ab, al)? - differential_skew_divergence(&bc, &abc, al)?;
    let slack = dsd_second_argument_bounds(ta, tc, al).slack(x1).min(dsd_joint_shift_bounds(ta, tc, al).slack(x2));
    Ok(Trial::new(slack, vec![("a", op(&a)), ("b", op(&b)), ("c", op(&c))]))
}

fn continuity_bounds(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let s1 = state(rng, dim);
    let s2 = state(rng, dim);
    let a = pick(rng, &ALPHAS);
    let t = trace_distance(&s1, &s2)?;
    let d = |x: &DensityMatrix, y: &DensityMatrix| differential_skew_divergence(x, y, a);
    let sd = |x: &DensityMatrix, y: &DensityMatrix| skew_divergence(x, y, skew(a));
    let slack = (dsd_first_argument_fixed(t, a) - (d(&rho, &s1)? - d(&rho, &s2)?).abs())
        .min(dsd_second_argument_fixed(t, a) - (d(&s1, &rho)? - d(&s2, &rho)?).abs())
        .min(sd_first_argument_fixed(t, skew(a)) - (sd(&rho, &s1)? - sd(&rho, &s2)?).abs())
        .min(sd_second_argument_fixed(t, skew(a)) - (sd(&s1, &rho)? - sd(&s2, &rho)?).abs());
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma_1", op(&s1)), ("sigma_2", op(&s2))]))
}

fn continuity_equality(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let (rho, s1) = orthogonal_pair(rng, dim)?;
    let t = 1.0 - rng.random::<f64>();
    let s2 = DensityMatrix::new_unchecked(&rho.scale(t) + &s1.scale(1.0 - t));
    let al = skew(pick(rng, &ALPHAS));
    let lhs = (skew_divergence(&rho, &s1, al)? - skew_divergence(&rho, &s2, al)?).abs();
    let rhs = sd_first_argument_fixed(trace_distance(&s1, &s2)?, al);
    Ok(Trial::new(-(lhs - rhs).abs(), vec![("rho", op(&rho)), ("sigma_1", op(&s1)), ("sigma_2", op(&s2))]))
}

fn triangle_bound_shape(rng: &mut ChaCha8Rng, _dim: usize) -> Result<Trial> {
    let al = skew(rng.random_range(0.01..0.99));
    let f: Vec<f64> = (1..=99).map(|k| sd_first_argument_fixed(k as f64 / 100.0, al)).collect();
    let increasing = f.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let concave = f.windows(3).map(|w| w[1] - 0.5 * (w[0] + w[2])).fold(f64::INFINITY, f64::min);
    let alpha = HermitianOperator::from_real_diagonal(&[al.value()]);
    Ok(Trial::new(increasing.min(concave), vec![("alpha", alpha)]))
}

fn chi_three_ways(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let n = rng.random_range(1..=4);
    let e = member_ensemble(rng, n, dim)?;
    let chi = holevo_chi(&e);
    let re_form = holevo_chi_relative_entropy_form(&e)?;
    let sd_form = holevo_chi_skew_form(&e)?;
    Ok(Trial::new(-(chi - re_form).abs().max((chi - sd_form).abs()), ensemble_inputs(&e)))
}

fn chi_bound_chain(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let n = rng.random_range(2..=4);
    let e = member_ensemble(rng, n, dim)?;
    let b = chi_upper_bounds(&e)?;
    let slack = (b.complementary_bound - b.chi)
        .min(b.pairwise_bound - b.complementary_bound)
        .min(b.entropy_times_t - b.pairwise_bound);
    Ok(Trial::new(slack, ensemble_inputs(&e)))
}

fn chi_roga(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let e = member_ensemble(rng, 2, dim)?;
    let b = chi_upper_bounds(&e)?;
    let (Some(roga), Some(alt)) = (b.roga_bound, b.entropy_times_fidelity_distance) else {
        return Err(QsdError::domain("binary ensemble expected"));
    };
    Ok(Trial::new((roga - b.chi).min(alt - roga), ensemble_inputs(&e)))
}

fn perturbed_pair(rng: &mut ChaCha8Rng, dim: usize) -> Result<(Ensemble, Ensemble)> {
    let n = rng.random_range(2..=4);
    let e = member_ensemble(rng, n, dim)?;
    let s: f64 = rng.random();
    let moved = e
        .states()
        .iter()
        .map(|r| {
            let w = state(rng, dim);
            DensityMatrix::new_unchecked(&r.scale(1.0 - s) + &w.scale(s))
        })
        .collect();
    let f = Ensemble::new(e.weights().to_vec(), moved)?;
    Ok((e, f))
}

fn chi_continuity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let (e, f) = perturbed_pair(rng, dim)?;
    let c = chi_continuity_bound(&e, &f)?;
    let slack = (c.weighted_bound - c.delta_chi).min(c.dimension_free_bound - c.weighted_bound);
    let mut inputs = ensemble_inputs(&e);
    inputs.extend(f.states().iter().map(|s| ("perturbed", op(s))));
    Ok(Trial::new(slack, inputs))
}

fn complementary_distance(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let (e, f) = perturbed_pair(rng, dim)?;
    let c = chi_continuity_bound(&e, &f)?;
    let mut slack = f64::INFINITY;
    for (i, tb) in c.complementary_distances.iter().enumerate() {
        let others = c.distances.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, d)| *d);
        slack = slack.min(others.fold(0.0, f64::max) - tb);
    }
    let mut inputs = ensemble_inputs(&e);
    inputs.extend(f.states().iter().map(|s| ("perturbed", op(s))));
    Ok(Trial::new(slack, inputs))
}

fn evolve_distance(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let h = random_hamiltonian(dim, rng).scale(1.0 - rng.random::<f64>());
    let t: f64 = rng.random_range(0.0..2.0);
    let out = evolve(&rho, &h, t)?;
    let slack = t * operator_norm(&h) - trace_distance(&out, &rho)?;
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("h", h)]))
}

fn evolve_spectrum(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let h = random_hamiltonian(dim, rng);
    let t: f64 = rng.random_range(0.0..2.0);
    let out = evolve(&rho, &h, t)?;
    let drift = spectrum(&rho)
        .iter()
        .zip(spectrum(&out))
        .map(|(a, b)| (a - b).abs())
        .fold((out.trace() - rho.trace()).abs(), f64::max);
    Ok(Trial::new(-drift, vec![("rho", op(&rho)), ("h", h)]))
}

fn mixing_rate_check(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let m = binary_experiment(rng, dim, true)?;
    let exact = mixing_rate(&m)?;
    let fd = mixing_rate_finite_difference(&m, 1e-5)?;
    Ok(Trial::new(-(exact - fd).abs(), experiment_inputs(&m)))
}

fn sim_bound(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let m = binary_experiment(rng, dim, false)?;
    let rec = sim_bound_check(&m)?;
    Ok(Trial::new(rec.sim_bound - rec.entropy_gain, experiment_inputs(&m)))
}

fn svsd_identity(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let m = binary_experiment(rng, dim, false)?;
    let rec = sim_bound_check(&m)?;
    Ok(Trial::new(-rec.sd_representation_residual, experiment_inputs(&m)))
}

fn sd_unitary_perturbation(rng: &mut ChaCha8Rng, dim: usize) -> Result<Trial> {
    let rho = state(rng, dim);
    let sigma = state(rng, dim);
    let h = random_hamiltonian(dim, rng).scale(1.0 - rng.random::<f64>());
    let u = unitary_exp(&h, 1.0)?;
    let moved = DensityMatrix::new_unchecked(sigma.conjugate_by(&u)?);
    let norm = operator_norm(&h);
    let mut slack = f64::INFINITY;
    for a in [0.1, 0.5, 0.9] {
        let sd = skew_divergence(&rho, &moved, skew(a))? - skew_divergence(&rho, &sigma, skew(a))?;
        let d = differential_skew_divergence(&rho, &moved, a)? - differential_skew_divergence(&rho, &sigma, a)?;
        slack = slack.min(sd_unitary_bound(norm) - sd).min(dsd_unitary_bound(a, norm) - d);
    }
    Ok(Trial::new(slack, vec![("rho", op(&rho)), ("sigma", op(&sigma)), ("h", h)]))
}

const fn check(
    id: &'static str,
    label: &'static str,
    suite: Suite,
    tolerance: Tolerance,
    covers: &'static [&'static str],
    min_dim: usize,
    run: super::CheckFn,
) -> CheckSpec {
    CheckSpec { id, label, suite, tolerance, covers, min_dim, run }
}

use Suite::{Core, Ensemble as Ens, Frechet, Sim};
use Tolerance::{Fixed, Global};

pub static CHECKS: &[CheckSpec] = &[
    check(
        "eig-reconstruction",
        "||V diag(l) V* - A||_F / max(1, ||A||_F) <= 1e-12",
        Core,
        Fixed(1e-12),
        &["eig-reconstruction"],
        1,
        eig_reconstruction,
    ),
    check(
        "spectral-identity",
        "||spectral_fn(A, id) - A||_F <= 1e-12",
        Core,
        Fixed(1e-12),
        &["spectral-identity"],
        1,
        spectral_identity,
    ),
    check(
        "trace-norm-is-norm",
        "||X+Y||_1 <= ||X||_1 + ||Y||_1, ||cX||_1 = |c| ||X||_1",
        Core,
        Fixed(1e-10),
        &["trace-norm-is-norm"],
        1,
        trace_norm_is_norm,
    ),
    check(
        "random-state-valid",
        "trace rho = 1, rho >= 0",
        Core,
        Fixed(1e-10),
        &["random-state-valid"],
        1,
        random_state_valid,
    ),
    check(
        "channel-maps-states",
        "trace Phi(rho) = 1, Phi(rho) >= 0",
        Core,
        Fixed(1e-10),
        &["channel-maps-states"],
        1,
        channel_maps_states,
    ),
    check("sd-range", "0 <= SD_a(rho||sigma) <= 1", Core, Fixed(1e-9), &["sd-range"], 1, sd_range),
    check(
        "sd-orthogonal-pairs",
        "rho orthogonal to sigma => SD_a(rho||sigma) = 1",
        Core,
        Fixed(1e-9),
        &["sd-orthogonality"],
        2,
        sd_orthogonal_pairs,
    ),
    check(
        "sd-overlapping-pairs",
        "trace rho sigma > 1e-9 => SD_a(rho||sigma) < 1 - 1e-9",
        Core,
        Fixed(0.0),
        &["sd-orthogonality"],
        1,
        sd_overlapping_pairs,
    ),
    check(
        "sd-scaling",
        "SD_a(bX||bY) = b SD_a(X||Y), SD_a(bX||cX) = SD_a(b|c) tr X",
        Core,
        Fixed(1e-9),
        &["sd-scaling"],
        1,
        sd_scaling,
    ),
    check(
        "sd-unitary-invariance",
        "SD_a(U rho U*||U sigma U*) = SD_a(rho||sigma)",
        Core,
        Fixed(1e-9),
        &["sd-unitary-invariance"],
        1,
        sd_unitary_invariance,
    ),
    check(
        "sd-contractivity",
        "SD_a(Phi(rho)||Phi(sigma)) <= SD_a(rho||sigma)",
        Core,
        Global,
        &["sd-contractivity"],
        1,
        sd_contractivity,
    ),
    check(
        "sd-joint-convexity",
        "SD_a(sum w rho_k||sum w sigma_k) <= sum w SD_a(rho_k||sigma_k)",
        Core,
        Global,
        &["sd-joint-convexity"],
        1,
        sd_joint_convexity,
    ),
    check(
        "sd-trace-norm-sandwich",
        "2(1-a)^2/(-log a) T^2 <= SD_a(rho||sigma) <= T",
        Core,
        Global,
        &["sd-trace-norm-sandwich"],
        1,
        sd_trace_norm_sandwich,
    ),
    check(
        "sd-trace-norm-tightness",
        "SD_a(diag(t,0,1-t)||diag(0,t,1-t)) = t",
        Core,
        Fixed(1e-9),
        &["sd-trace-norm-sandwich"],
        3,
        sd_trace_norm_tightness,
    ),
    check(
        "skewed-re-upper-bound",
        "S(rho||a rho + (1-a) sigma) <= -log a",
        Core,
        Fixed(1e-9),
        &["skewed-re-upper-bound"],
        1,
        skewed_re_upper_bound,
    ),
    check(
        "fidelity-trace-distance",
        "T(rho, sigma) <= sqrt(1 - F(rho, sigma)^2)",
        Core,
        Global,
        &["fidelity-trace-distance"],
        1,
        fidelity_trace_distance,
    ),
    check(
        "frechet-order",
        "lambda_min(T_A(Y) - T_A(X)) >= 0 for X <= Y",
        Frechet,
        Fixed(1e-9),
        &["frechet-order"],
        1,
        frechet_order,
    ),
    check(
        "frechet-sum-lemma",
        "lambda_max(T_{A+B}(A)) <= 1",
        Frechet,
        Fixed(1e-9),
        &["frechet-sum-lemma"],
        1,
        frechet_sum_lemma,
    ),
    check(
        "second-derivative-sum-lemma",
        "lambda_max(R_{A+B}(A, A)) <= 1",
        Frechet,
        Fixed(1e-9),
        &["second-derivative-sum-lemma"],
        1,
        second_derivative_sum_lemma,
    ),
    check(
        "second-derivative-identity",
        "||R_A(A, D) - T_A(D)||_F <= 1e-8",
        Frechet,
        Fixed(1e-8),
        &["second-derivative-identity"],
        1,
        second_derivative_identity,
    ),
    check(
        "metric-increment",
        "0 <= M_{A+B}(A,A) - M_{A+B+C}(A,A) <= a - a^2/(a+c)",
        Frechet,
        Global,
        &["metric-increment"],
        1,
        metric_increment,
    ),
    check("dsd-symmetry", "D_a(A||B) = D_{1-a}(B||A)", Frechet, Fixed(1e-10), &["dsd-symmetry"], 1, dsd_symmetry),
    check(
        "dsd-derivative",
        "D_a(A||B) = -a d/da S(A||aA + (1-a)B), central difference h = 1e-5",
        Frechet,
        Fixed(1e-6),
        &["dsd-derivative"],
        1,
        dsd_derivative,
    ),
    check(
        "dsd-trace-bounds",
        "4a(1-a) T^2 <= D_a(rho||sigma) <= T",
        Frechet,
        Global,
        &["dsd-trace-bounds"],
        1,
        dsd_trace_bounds,
    ),
    check(
        "dsd-contractivity",
        "D_a(Phi(rho)||Phi(sigma)) <= D_a(rho||sigma)",
        Frechet,
        Global,
        &["dsd-contractivity"],
        1,
        dsd_contractivity,
    ),
    check(
        "frechet-finite-difference",
        "relative error of T_A(D) against the central difference of log <= 1e-6, cond(A) <= 1e6",
        Frechet,
        Fixed(1e-6),
        &["frechet-finite-difference"],
        1,
        frechet_finite_difference,
    ),
    check(
        "frechet-quadrature",
        "relative error of T_A(D) against the resolvent integral <= 1e-6, cond(A) <= 1e6",
        Frechet,
        Fixed(1e-6),
        &["frechet-quadrature"],
        1,
        frechet_quadrature,
    ),
    check(
        "second-derivative-quadrature",
        "relative error of R_A(D, D) against the resolvent integral <= 1e-6",
        Frechet,
        Fixed(1e-6),
        &["second-derivative-quadrature"],
        1,
        second_derivative_quadrature,
    ),
    check(
        "dsd-trace-form",
        "a(1-a) M_tau(A-B, A-B) = a/(1-a) tr A T_tau(A) - a/(1-a) tr A - a tr(A-B)",
        Frechet,
        Fixed(1e-9),
        &["dsd-trace-form"],
        1,
        dsd_trace_form,
    ),
    check(
        "chi2-relation",
        "D_a(A||B) = a/(1-a) chi2_log(A, aA + (1-a)B)",
        Frechet,
        Fixed(1e-9),
        &["chi2-relation"],
        1,
        chi2_relation,
    ),
    check(
        "chi2-trace-norm",
        "chi2_log(rho, sigma) >= ||rho - sigma||_1^2",
        Frechet,
        Global,
        &["chi2-trace-norm"],
        1,
        chi2_trace_norm,
    ),
    check(
        "sd-averaging",
        "(1/-log a) int_0^{-log a} D_{e^-b}(A||B) db = SD_a(A||B)",
        Frechet,
        Fixed(1e-6),
        &["sd-averaging"],
        1,
        sd_averaging,
    ),
    check(
        "metric-epsilon-limit",
        "M_{B+eC}(A,A) increases to M_{B|B}(A|B, A|B), gap at e = 1e-8 <= 1e-6 for B with support spectrum in [0.1, 1]",
        Frechet,
        Fixed(1e-6),
        &["metric-epsilon-limit"],
        2,
        metric_epsilon_limit,
    ),
    check(
        "proposition-bounds",
        "trace-only bounds on SD_a and S for A+B -> A+B+C and joint shifts",
        Ens,
        Global,
        &["proposition-bounds"],
        1,
        proposition_bounds,
    ),
    check(
        "dsd-increment-bounds",
        "-D_a(0|c) <= D_a(A||B) - D_a(A||B+C) <= D_a(a|0) - D_a(a|c) and joint-shift analogue",
        Ens,
        Global,
        &["dsd-increment-bounds"],
        1,
        dsd_increment_bounds,
    ),
    check(
        "continuity-bounds",
        "|X(rho||s1) - X(rho||s2)| and |X(s1||rho) - X(s2||rho)| bounded by t = T(s1, s2), X = D_a, SD_a",
        Ens,
        Global,
        &["continuity-bounds"],
        1,
        continuity_bounds,
    ),
    check(
        "continuity-equality",
        "rho orthogonal to s1, s2 = t rho + (1-t) s1 attains SD_a(1|0) - SD_a(1|t) + SD_a(0|t)",
        Ens,
        Fixed(1e-9),
        &["continuity-equality", "continuity-bounds"],
        2,
        continuity_equality,
    ),
    check(
        "triangle-bound-shape",
        "t -> SD_a(1|0) - SD_a(1|t) + SD_a(0|t) increasing and midpoint concave on t = 0.01..0.99",
        Ens,
        Fixed(1e-10),
        &["triangle-bound-shape"],
        1,
        triangle_bound_shape,
    ),
    check(
        "chi-three-ways",
        "S(rho_0) - sum p S(rho_i) = sum p S(rho_i||rho_0) = -sum p log p SD_p(rho_i||bar rho_i)",
        Ens,
        Fixed(1e-9),
        &["chi-three-ways"],
        1,
        chi_three_ways,
    ),
    check(
        "chi-bound-chain",
        "chi <= -sum p log p T(rho_i, bar rho_i) <= pairwise bound <= H(p) t",
        Ens,
        Global,
        &["chi-bound-chain"],
        1,
        chi_bound_chain,
    ),
    check("chi-roga", "chi <= S(sigma_F) <= H(p) sqrt(1 - F^2)", Ens, Global, &["chi-roga"], 1, chi_roga),
    check(
        "chi-continuity",
        "|chi(E) - chi(E')| <= weighted bound <= t log(1 + (n-1)/t) + log(1 + (n-1)t)",
        Ens,
        Global,
        &["chi-continuity"],
        1,
        chi_continuity,
    ),
    check(
        "complementary-distance",
        "T(bar rho_i, bar rho'_i) <= max_{j != i} t_j",
        Ens,
        Fixed(1e-12),
        &["complementary-distance"],
        1,
        complementary_distance,
    ),
    check(
        "evolve-distance",
        "T(U(t) rho U(t)*, rho) <= t ||H||",
        Ens,
        Global,
        &["evolve-distance"],
        1,
        evolve_distance,
    ),
    check(
        "evolve-spectrum",
        "U(t) rho U(t)* has the trace and spectrum of rho",
        Ens,
        Fixed(1e-10),
        &["evolve-spectrum"],
        1,
        evolve_spectrum,
    ),
    check(
        "mixing-rate",
        "-tr(rho_0' log rho_0) = central difference of S(rho_0(t)), h = 1e-5",
        Sim,
        Fixed(1e-5),
        &["mixing-rate"],
        1,
        mixing_rate_check,
    ),
    check("sim-bound", "S(rho_0(t)) - S(rho_0) <= 2t h(p1, p2) ||H||", Sim, Global, &["sim-bound"], 1, sim_bound),
    check(
        "svsd-identity",
        "entropy gain = -p1 log p1 dSD_p1 - p2 log p2 dSD_p2",
        Sim,
        Fixed(1e-8),
        &["svsd-identity"],
        1,
        svsd_identity,
    ),
    check(
        "sd-unitary-perturbation",
        "SD_a(rho||U sigma U*) - SD_a(rho||sigma) <= 2||H||, D_a version <= min(1/a, 1/(1-a)) ||H||",
        Sim,
        Global,
        &["sd-unitary-perturbation"],
        1,
        sd_unitary_perturbation,
    ),
];
