//! Quantum skew divergences and the operator calculus behind them.
//!
//! The crate evaluates the skew divergence `SD_α(ρ‖σ) = S(ρ‖αρ+(1−α)σ)/(−log α)`,
//! its differential form `𝒟_α`, the Fréchet derivatives of the matrix
//! logarithm that define it, and the bounds they give on Holevo information
//! and on entropy production under unitary mixing. Every inequality used is
//! also checked numerically by [`verify`].

pub mod channel;
pub mod cli;
pub mod continuity;
pub mod differential;
pub mod divergence;
pub mod eigen;
pub mod ensemble;
pub mod error;
pub mod frechet;
pub mod hermitian;
pub mod io;
pub mod quadrature;
pub mod random;
pub mod verify;

pub use differential::differential_skew_divergence;
pub use divergence::{relative_entropy, skew_divergence, trace_distance, DivergenceValue, SkewParameter};
pub use error::{QsdError, Result};
pub use hermitian::{CMatrix, DensityMatrix, HermitianOperator, PositiveOperator};
