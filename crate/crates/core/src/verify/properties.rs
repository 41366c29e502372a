//! The catalogue of properties the verification suite must exercise.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropertyKind {
    /// A standing invariant of a module.
    Invariant,
    /// A postcondition or cross-check of a single operation.
    Operation,
}

#[derive(Clone, Copy, Debug)]
pub struct Property {
    pub id: &'static str,
    pub module: &'static str,
    pub kind: PropertyKind,
    pub statement: &'static str,
}

const fn inv(id: &'static str, module: &'static str, statement: &'static str) -> Property {
    Property { id, module, kind: PropertyKind::Invariant, statement }
}

const fn op(id: &'static str, module: &'static str, statement: &'static str) -> Property {
    Property { id, module, kind: PropertyKind::Operation, statement }
}

const CORE: &str = "hermitian-core";
const DIV: &str = "divergence-measures";
const CALC: &str = "frechet-calculus";
const ENS: &str = "ensemble-analysis";

pub const PROPERTIES: &[Property] = &[
    inv("eig-reconstruction", CORE, "||V diag(l) V* - A||_F <= 1e-12 max(1, ||A||_F)"),
    inv("spectral-identity", CORE, "spectral_fn(A, x -> x) = A within 1e-12"),
    inv("trace-norm-is-norm", CORE, "trace norm obeys the triangle inequality and absolute homogeneity"),
    inv("random-state-valid", CORE, "random states have unit trace and no negative eigenvalues"),
    inv("channel-maps-states", CORE, "random CPTP maps send states to states"),
    inv("sd-range", DIV, "0 <= SD_a(rho||sigma) <= 1"),
    inv("sd-orthogonality", DIV, "SD_a(rho||sigma) = 1 exactly when rho and sigma are orthogonal"),
    inv("sd-scaling", DIV, "SD_a(bX||bY) = b SD_a(X||Y) and SD_a(bX||cX) = SD_a(b|c) tr X"),
    inv("sd-unitary-invariance", DIV, "SD_a(U rho U*||U sigma U*) = SD_a(rho||sigma)"),
    inv("sd-contractivity", DIV, "SD_a(Phi(rho)||Phi(sigma)) <= SD_a(rho||sigma)"),
    inv("sd-joint-convexity", DIV, "SD_a is jointly convex"),
    inv("sd-trace-norm-sandwich", DIV, "2(1-a)^2/(-log a) T^2 <= SD_a <= T, tight on a diagonal family"),
    inv("skewed-re-upper-bound", DIV, "S(rho||a rho + (1-a) sigma) <= -log a"),
    inv("fidelity-trace-distance", DIV, "T(rho, sigma) <= sqrt(1 - F^2)"),
    inv("frechet-order", CALC, "X <= Y implies T_A(X) <= T_A(Y)"),
    inv("frechet-sum-lemma", CALC, "T_{A+B}(A) <= 1"),
    inv("second-derivative-sum-lemma", CALC, "R_{A+B}(A) <= 1"),
    inv("metric-increment", CALC, "0 <= M_{A+B}(A,A) - M_{A+B+C}(A,A) <= a - a^2/(a+c)"),
    inv("dsd-symmetry", CALC, "D_a(A||B) = D_{1-a}(B||A)"),
    inv("dsd-derivative", CALC, "D_a(A||B) = -a d/da S(A||aA + (1-a)B)"),
    inv("dsd-trace-bounds", CALC, "4a(1-a) T^2 <= D_a(rho||sigma) <= T"),
    inv("dsd-contractivity", CALC, "D_a(Phi(rho)||Phi(sigma)) <= D_a(rho||sigma)"),
    inv("frechet-finite-difference", CALC, "T_A(D) matches the central difference of log"),
    inv("svsd-identity", ENS, "entropy gain of binary mixing equals the weighted skew-divergence differences"),
    inv(
        "sd-unitary-perturbation",
        ENS,
        "SD_a(rho||U sigma U*) - SD_a(rho||sigma) <= 2||H||; D_a version with min(1/a, 1/(1-a))||H||",
    ),
    inv("proposition-bounds", ENS, "trace-only bounds on SD and S under A+B -> A+B+C"),
    inv("continuity-bounds", ENS, "continuity of D_a and SD_a in either argument in terms of trace distance"),
    inv("chi-bound-chain", ENS, "chi <= complementary bound <= pairwise bound <= H(p) t"),
    inv("triangle-bound-shape", ENS, "SD_a(1|0) - SD_a(1|t) + SD_a(0|t) is increasing and concave in t"),
    op("second-derivative-identity", CALC, "R_A(A, D) = T_A(D)"),
    op("frechet-quadrature", CALC, "divided differences agree with the resolvent integral for T_A"),
    op("second-derivative-quadrature", CALC, "divided differences agree with the resolvent integral for R_A"),
    op("dsd-trace-form", CALC, "D_a agrees with its trace form"),
    op("chi2-relation", CALC, "D_a(A||B) = a/(1-a) chi2_log(A, aA + (1-a)B)"),
    op("chi2-trace-norm", CALC, "chi2_log(rho, sigma) >= ||rho - sigma||_1^2"),
    op("sd-averaging", CALC, "averaging D over -log a reproduces SD_a"),
    op("metric-epsilon-limit", CALC, "M_{B+eC}(A,A) increases to the restricted metric as e -> 0"),
    op("dsd-increment-bounds", ENS, "trace-only bounds on D under B -> B+C and under joint shifts"),
    op("continuity-equality", ENS, "the SD continuity bound is attained for rho orthogonal to sigma_1"),
    op("sim-bound", ENS, "S(rho_0(t)) - S(rho_0) <= 2t h(p1, p2) ||H||"),
    op("chi-three-ways", ENS, "entropy, relative-entropy and skew-divergence forms of chi agree"),
    op("chi-roga", ENS, "chi <= S(sigma_F) <= H(p) sqrt(1 - F^2) for binary ensembles"),
    op("chi-continuity", ENS, "|chi(E) - chi(E')| <= weighted bound <= dimension-free bound"),
    op("complementary-distance", ENS, "T(bar rho_i, bar rho'_i) <= max_{j != i} t_j"),
    op("evolve-distance", ENS, "T(U(t) rho U(t)*, rho) <= t ||H||"),
    op("evolve-spectrum", ENS, "unitary evolution preserves trace and spectrum"),
    op("mixing-rate", ENS, "analytic mixing rate matches the central difference of the entropy"),
];
