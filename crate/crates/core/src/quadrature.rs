//! Composite Gauss–Legendre quadrature on `[0, 1]` with panels graded
//! geometrically toward 0, and its image on `[0, ∞)` under `s = c·u/(1−u)`.
//!
//! The grading resolves integrands whose mass sits at scale `λ_min ≪ 1`, as
//! happens for the resolvent integrals of ill-conditioned operators.

use crate::error::{QsdError, Result};

/// Minimum number of nodes in a scheme.
pub const MIN_NODES: usize = 64;
/// Upper bound on the number of nodes reached by refinement.
pub const MAX_NODES: usize = 1 << 10;
/// Refinement stops when successive estimates differ by less than this.
pub const REFINEMENT_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureScheme {
    panels: usize,
    nodes_per_panel: usize,
}

impl Default for QuadratureScheme {
    fn default() -> Self {
        Self { panels: 8, nodes_per_panel: 16 }
    }
}

impl QuadratureScheme {
    pub fn new(panels: usize, nodes_per_panel: usize) -> Result<Self> {
        if panels == 0 || nodes_per_panel == 0 || panels * nodes_per_panel < MIN_NODES {
            return Err(QsdError::domain(format!(
                "quadrature needs at least {MIN_NODES} nodes, got {panels}x{nodes_per_panel}"
            )));
        }
        Ok(Self { panels, nodes_per_panel })
    }

    pub fn panels(&self) -> usize {
        self.panels
    }

    pub fn nodes_per_panel(&self) -> usize {
        self.nodes_per_panel
    }

    pub fn total_nodes(&self) -> usize {
        self.panels * self.nodes_per_panel
    }

    /// The same rule with twice as many panels, or `None` past [`MAX_NODES`].
    pub fn refined(&self) -> Option<Self> {
        let next = Self { panels: self.panels * 2, nodes_per_panel: self.nodes_per_panel };
        (next.total_nodes() <= MAX_NODES).then_some(next)
    }

    /// This rule with enough panels that the innermost breakpoint lies below
    /// `feature / 16`, for integrands that vary on the scale `u ≈ feature`.
    /// Never exceeds [`MAX_NODES`].
    pub fn graded_to(&self, feature: f64) -> Self {
        let cap = (MAX_NODES / self.nodes_per_panel).max(self.panels);
        let need =
            if feature > 0.0 && feature < 1.0 { ((16.0 / feature).log2().ceil() as usize + 1).min(cap) } else { 0 };
        Self { panels: self.panels.max(need), nodes_per_panel: self.nodes_per_panel }
    }

    /// `(point, weight)` pairs on `[0, 1]`. Panel breakpoints are
    /// `0, 2^{-(P-1)}, …, 1/4, 1/2, 1`.
    pub fn unit_nodes(&self) -> Vec<(f64, f64)> {
        let (x, w) = gauss_legendre(self.nodes_per_panel);
        let mut out = Vec::with_capacity(self.total_nodes());
        let mut edges = Vec::with_capacity(self.panels + 1);
        edges.push(0.0);
        for k in (0..self.panels).rev() {
            edges.push(0.5_f64.powi(k as i32));
        }
        for pair in edges.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for (xi, wi) in x.iter().zip(&w) {
                out.push((mid + half * xi, half * wi));
            }
        }
        out
    }

    /// `(s, weight)` pairs for `∫_0^∞ g(s) ds` via `s = scale·u/(1−u)`.
    pub fn half_line_nodes(&self, scale: f64) -> Vec<(f64, f64)> {
        self.unit_nodes()
            .into_iter()
            .map(|(u, w)| {
                let one_minus = 1.0 - u;
                (scale * u / one_minus, w * scale / (one_minus * one_minus))
            })
            .collect()
    }

    /// `∫_0^1 f(u) du`.
    pub fn integrate_unit(&self, mut f: impl FnMut(f64) -> Result<f64>) -> Result<f64> {
        let mut acc = 0.0;
        for (u, w) in self.unit_nodes() {
            acc += w * f(u)?;
        }
        Ok(acc)
    }

    /// Evaluates `eval` on this scheme and on successive refinements until two
    /// consecutive results are within [`REFINEMENT_TOLERANCE`] under `distance`,
    /// or the node cap is reached. Returns the last estimate and the scheme used.
    pub fn refine_until_stable<T>(
        &self,
        eval: impl Fn(&QuadratureScheme) -> Result<T>,
        distance: impl Fn(&T, &T) -> f64,
    ) -> Result<(T, QuadratureScheme)> {
        let mut scheme = self.clone();
        let mut current = eval(&scheme)?;
        while let Some(next_scheme) = scheme.refined() {
            let next = eval(&next_scheme)?;
            let d = distance(&current, &next);
            scheme = next_scheme;
            current = next;
            if d < REFINEMENT_TOLERANCE {
                break;
            }
        }
        Ok((current, scheme))
    }
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        dp = if d != 0.0 { d } else { dp };
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}
