//! Error type shared by every solver in the crate.

use crate::model::StateLabel;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the solvers.
///
/// Variants split into two families: invalid input (parameters, grids,
/// domains) and numerical failure (non-convergence, missing roots,
/// non-differentiable points). The CLI maps the first family to exit
/// code 1 and the second to exit code 2.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid physical parameter (violates a `SystemParams` invariant).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Invalid discretization grid.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Invalid occupation set for a current sum.
    #[error("invalid occupation set: {0}")]
    InvalidOccupation(String),

    /// Ω·k = 0: without the dislocation density there is no magnetic
    /// analogue, the dipole is a free particle and the spectrum is
    /// continuous.
    #[error("unbound system: Ω·k = 0 gives a free particle with no discrete spectrum")]
    Unbound,

    /// Kummer series hit the term cap before reaching the tolerance.
    #[error("Kummer series did not converge within {terms} terms for M({a}, {b}, {x})")]
    SeriesNoConvergence { a: f64, b: f64, x: f64, terms: usize },

    /// Energy scan window contained no sign change of the wall condition.
    #[error("no root of the wall condition for n={n} in the scan window [{lo}, {hi}]")]
    RootNotFound { n: u32, lo: f64, hi: f64 },

    /// γ_s = 0 for an occupied state: sgn(γ) is undefined and the
    /// spectrum has a kink there, so the analytic current is undefined.
    #[error("persistent current undefined at γ = 0 for state {state} (spectrum kink)")]
    NonDifferentiable { state: StateLabel },

    /// A finite-difference stencil in φ_AC crosses a γ_s = 0 kink.
    #[error("derivative stencil [{lo}, {hi}] straddles a γ = 0 kink")]
    StraddlesKink { lo: f64, hi: f64 },
}

impl Error {
    /// True for failures of the numerics (as opposed to invalid input).
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::Unbound
                | Error::SeriesNoConvergence { .. }
                | Error::RootNotFound { .. }
                | Error::NonDifferentiable { .. }
                | Error::StraddlesKink { .. }
        )
    }
}
