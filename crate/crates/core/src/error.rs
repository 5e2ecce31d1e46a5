//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the admissible parameter chamber, or too close to a wall.
    #[error("domain error: {0}")]
    Domain(String),

    /// An adaptive scheme hit its refinement cap before reaching tolerance.
    #[error("quadrature/series did not converge: {0}")]
    NonConvergence(String),

    /// A Moebius or affine-symplectic denominator vanished.
    #[error("singular denominator in {0}")]
    SingularDenominator(&'static str),

    /// Im(tau) is not positive definite.
    #[error("matrix not in the Siegel upper half space: {0}")]
    NotPositiveDefinite(String),

    /// A theta quotient denominator fell below the resolvable scale.
    #[error("division by a vanishing theta value in {0}")]
    DivisionByZeroTheta(&'static str),

    /// A point fed to the inversion formulas is not on the period-map image.
    #[error("input not on the theta divisor (residual {residual:.3e})")]
    InvalidPeriod { residual: f64 },

    /// Violation of a structural invariant that signals an internal bug
    /// (branch conventions), not a bad user input.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
