//! Bound states and persistent spin currents of a neutral magnetic dipole
//! in an elastic medium threaded by a uniform density of screw
//! dislocations.
//!
//! A dipole moving around a charged dislocation line picks up the
//! Aharonov-Casher geometric phase φ_AC = 2πμλ, and a uniform areal
//! density of screw dislocations acts on it like a uniform magnetic
//! field. The combination produces an "elastic Landau" ladder of bound
//! states whose energies depend periodically on φ_AC, and equilibrium
//! (persistent) spin currents given by I = −Σ ∂E/∂φ_AC.
//!
//! Modules:
//!
//! - [`model`] — parameters and the derived scalars Ω, φ_AC, γ_s, β_s
//! - [`specfun`] — log-gamma and the Kummer function M(a, b, x)
//! - [`spectrum`] — closed-form Landau-analogue levels and wavefunctions
//! - [`hardwall`] — spectra with a hard wall at ρ_B (asymptotic formula
//!   and exact Kummer-zero roots)
//! - [`currents`] — persistent spin currents, analytic and by numerical
//!   differentiation in φ_AC
//! - [`oracle`] — an independent finite-difference eigensolver used to
//!   validate every closed form
//! - [`geometry`] — the defect geometry: triads, torsion, contortion and
//!   the irreducible torsion decomposition
//!
//! All quantities are in natural units ħ = c = 1. Every type is plain
//! data and every operation is a pure function, so the whole crate is
//! safe to use from multiple threads without coordination.

pub mod currents;
pub mod error;
pub mod geometry;
pub mod hardwall;
pub mod model;
pub mod oracle;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::{Spin, StateLabel, SystemParams};
pub use spectrum::{EnergyLevel, Method};
