//! Scalar right-hand sides of the continuity inequalities for `S`, `SD_α` and
//! `𝒟_α`. Every bound depends only on traces (`a = trace A`, `c = trace C`) or
//! on a trace distance `t`, and on `α`.
//!
//! For `A, B, C ≥ 0`:
//!
//! * `−𝒟_α(0|c) ≤ 𝒟_α(A‖B) − 𝒟_α(A‖B+C) ≤ 𝒟_α(a|0) − 𝒟_α(a|c)`
//! * `0 ≤ 𝒟_α(B‖A+B) − 𝒟_α(B+C‖A+B+C) ≤ 𝒟_α(0|a) − 𝒟_α(c|a+c)`
//! * `−SD_α(0|c) ≤ SD_α(A‖A+B) − SD_α(A‖A+B+C) ≤ −SD_α(a|a+c)`, likewise for `S`
//! * `0 ≤ SD_α(B‖A+B) − SD_α(B+C‖A+B+C) ≤ SD_α(0|a) − SD_α(c|a+c)`, likewise for `S`
//!
//! For states with `T(σ₁, σ₂) = t`, `|X(ρ‖σ₁) − X(ρ‖σ₂)|` is bounded by
//! `X(1|0) − X(1|t) + X(0|t)` and `|X(σ₁‖ρ) − X(σ₂‖ρ)|` by `X(0|1) − X(t|1) + X(t|0)`,
//! for `X` either `𝒟_α` or `SD_α`.

use crate::differential::scalar_differential_sd as dsd;
use crate::divergence::{scalar_relative_entropy as s, scalar_skew_divergence as sd, SkewParameter};

/// Lower and upper bound of a two-sided inequality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    /// Smallest margin `min(x − lower, upper − x)`; negative outside the interval.
    pub fn slack(&self, x: f64) -> f64 {
        (x - self.lower).min(self.upper - x)
    }
}

/// Bounds on `𝒟_α(A‖B) − 𝒟_α(A‖B+C)`.
pub fn dsd_second_argument_bounds(a: f64, c: f64, alpha: f64) -> Interval {
    Interval { lower: -dsd(0.0, c, alpha), upper: dsd(a, 0.0, alpha) - dsd(a, c, alpha) }
}

/// Bounds on `𝒟_α(B‖A+B) − 𝒟_α(B+C‖A+B+C)`.
pub fn dsd_joint_shift_bounds(a: f64, c: f64, alpha: f64) -> Interval {
    Interval { lower: 0.0, upper: dsd(0.0, a, alpha) - dsd(c, a + c, alpha) }
}

/// Bounds on `SD_α(A‖A+B) − SD_α(A‖A+B+C)`.
pub fn sd_second_argument_bounds(a: f64, c: f64, alpha: SkewParameter) -> Interval {
    Interval { lower: -sd(0.0, c, alpha), upper: -sd(a, a + c, alpha) }
}

/// Bounds on `S(A‖A+B) − S(A‖A+B+C)`.
pub fn re_second_argument_bounds(a: f64, c: f64) -> Interval {
    Interval { lower: -s(0.0, c), upper: -s(a, a + c) }
}

/// Bounds on `SD_α(B‖A+B) − SD_α(B+C‖A+B+C)`.
pub fn sd_joint_shift_bounds(a: f64, c: f64, alpha: SkewParameter) -> Interval {
    Interval { lower: 0.0, upper: sd(0.0, a, alpha) - sd(c, a + c, alpha) }
}

/// Bounds on `S(B‖A+B) − S(B+C‖A+B+C)`.
pub fn re_joint_shift_bounds(a: f64, c: f64) -> Interval {
    Interval { lower: 0.0, upper: s(0.0, a) - s(c, a + c) }
}

/// `𝒟_α(1|0) − 𝒟_α(1|t) + 𝒟_α(0|t)`, which simplifies to `t/(α + (1−α)t)`.
pub fn dsd_first_argument_fixed(t: f64, alpha: f64) -> f64 {
    dsd(1.0, 0.0, alpha) - dsd(1.0, t, alpha) + dsd(0.0, t, alpha)
}

/// `𝒟_α(0|1) − 𝒟_α(t|1) + 𝒟_α(t|0)`.
pub fn dsd_second_argument_fixed(t: f64, alpha: f64) -> f64 {
    dsd(0.0, 1.0, alpha) - dsd(t, 1.0, alpha) + dsd(t, 0.0, alpha)
}

/// `SD_α(1|0) − SD_α(1|t) + SD_α(0|t)`: bound on `|SD_α(ρ‖σ₁) − SD_α(ρ‖σ₂)|`.
pub fn sd_first_argument_fixed(t: f64, alpha: SkewParameter) -> f64 {
    sd(1.0, 0.0, alpha) - sd(1.0, t, alpha) + sd(0.0, t, alpha)
}

/// `SD_α(0|1) − SD_α(t|1) + SD_α(t|0)`: bound on `|SD_α(σ₁‖ρ) − SD_α(σ₂‖ρ)|`.
pub fn sd_second_argument_fixed(t: f64, alpha: SkewParameter) -> f64 {
    sd(0.0, 1.0, alpha) - sd(t, 1.0, alpha) + sd(t, 0.0, alpha)
}

/// `min(1/α, 1/(1−α))·‖H‖`, the bound on `𝒟_α(ρ‖UσU*) − 𝒟_α(ρ‖σ)` for `U = exp(iH)`.
pub fn dsd_unitary_bound(alpha: f64, h_norm: f64) -> f64 {
    (1.0 / alpha).min(1.0 / (1.0 - alpha)) * h_norm
}

/// `2‖H‖`, the bound on `SD_α(ρ‖UσU*) − SD_α(ρ‖σ)` for `U = exp(iH)`.
pub fn sd_unitary_bound(h_norm: f64) -> f64 {
    2.0 * h_norm
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_of_dsd_bound() {
        for al in [0.1, 0.4, 0.9] {
            for t in [0.0, 0.05, 0.5, 1.0] {
                let closed = t / (al + (1.0 - al) * t);
                assert!((dsd_first_argument_fixed(t, al) - closed).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn bounds_vanish_at_zero_distance() {
        let al = SkewParameter::new(0.3).unwrap();
        assert!(sd_first_argument_fixed(0.0, al).abs() < 1e-15);
        assert!(sd_second_argument_fixed(0.0, al).abs() < 1e-15);
        assert!(dsd_second_argument_fixed(0.0, 0.3).abs() < 1e-15);
    }

    #[test]
    fn full_distance_gives_full_range() {
        // t = 1: ρ ⊥ σ₁ and σ₂ = ρ, so the bound must be SD_α(ρ‖σ₁) − SD_α(ρ‖ρ) = 1
        for al in [0.01, 0.5, 0.99] {
            let al = SkewParameter::new(al).unwrap();
            assert!((sd_first_argument_fixed(1.0, al) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn scalar_bounds_are_ordered() {
        for (a, c) in [(0.5, 0.2), (1.0, 3.0), (0.0, 1.0)] {
            let al = SkewParameter::new(0.4).unwrap();
            for iv in [
                sd_second_argument_bounds(a, c, al),
                re_second_argument_bounds(a, c),
                sd_joint_shift_bounds(a, c, al),
                re_joint_shift_bounds(a, c),
                dsd_second_argument_bounds(a, c, 0.4),
                dsd_joint_shift_bounds(a, c, 0.4),
            ] {
                assert!(iv.lower <= iv.upper + 1e-15, "{iv:?}");
            }
        }
    }
}
