//! Persistent spin currents from the φ_AC-dependence of the spectra.
//!
//! By the Byers-Yang relation the equilibrium current carried by a set of
//! occupied states is I = −Σ ∂E/∂φ_AC. The analytic forms follow from
//! differentiating the two spectra through γ_s (∂γ_s/∂φ_AC = s/2π):
//!
//! - unconfined ladder: per-state contribution
//!   −(s/2π)(Ωk/m)·[sgn γ_s − 1], which vanishes identically on the
//!   γ_s > 0 branch and is piecewise constant in φ_AC;
//! - hard wall (asymptotic): the per-state contribution
//!   −(s/4mρ_B²)(nπ + |γ|π/2 + 3π/4)·sgn γ_s plus the torsion term
//!   (s/2π)(Ωk/m), which survives the sum and disappears as Ω → 0.
//!
//! γ_s = 0 is a kink of both spectra; the analytic contributions are
//! undefined there and the functions refuse such states. The occupied
//! set is explicit caller input: the sums carry no Fermi-level
//! prescription. Contributions are accumulated in (n, l, s) order so the
//! floating-point total is reproducible.

use crate::error::{Error, Result};
use crate::hardwall::WallConfig;
use crate::model::{effective_angular, StateLabel, SystemParams};

/// Explicit set of occupied states, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupationSet {
    states: Vec<StateLabel>,
}

impl OccupationSet {
    /// Validates and sorts; rejects duplicate labels.
    pub fn new(mut states: Vec<StateLabel>) -> Result<Self> {
        states.sort();
        for pair in states.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::InvalidOccupation(format!(
                    "duplicate state {}",
                    pair[0]
                )));
            }
        }
        Ok(Self { states })
    }

    pub fn states(&self) -> &[StateLabel] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

fn signed_gamma(state: StateLabel, p: &SystemParams) -> Result<f64> {
    let gamma = effective_angular(state.l, state.s, p.phi_ac());
    if gamma == 0.0 {
        return Err(Error::NonDifferentiable { state });
    }
    Ok(gamma)
}

/// Per-state contribution to the unconfined persistent current:
/// −(s/2π)(Ωk/m)·[γ/|γ| − 1].
pub fn landau_state_current(state: StateLabel, p: &SystemParams) -> Result<f64> {
    let gamma = signed_gamma(state, p)?;
    let s = state.s.sign();
    Ok(-(s / crate::model::PHI_0) * (p.omega_k() / p.m) * (gamma.signum() - 1.0))
}

/// Persistent current of the unconfined system summed over `occ`.
pub fn current_landau(occ: &OccupationSet, p: &SystemParams) -> Result<f64> {
    occ.states()
        .iter()
        .try_fold(0.0, |acc, &state| Ok(acc + landau_state_current(state, p)?))
}

/// Per-state contribution to the hard-wall persistent current:
/// −(s/4mρ_B²)(nπ + |γ|π/2 + 3π/4)·(γ/|γ|) + (s/2π)(Ωk/m).
pub fn hardwall_state_current(
    state: StateLabel,
    p: &SystemParams,
    w: &WallConfig,
) -> Result<f64> {
    use std::f64::consts::PI;
    let gamma = signed_gamma(state, p)?;
    let s = state.s.sign();
    let wall = state.n as f64 * PI + gamma.abs() * PI / 2.0 + 0.75 * PI;
    Ok(-s / (4.0 * p.m * w.rho_b() * w.rho_b()) * wall * gamma.signum()
        + s / crate::model::PHI_0 * (p.omega_k() / p.m))
}

/// Hard-wall persistent current summed over `occ`.
pub fn current_hardwall(occ: &OccupationSet, p: &SystemParams, w: &WallConfig) -> Result<f64> {
    occ.states().iter().try_fold(0.0, |acc, &state| {
        Ok(acc + hardwall_state_current(state, p, w)?)
    })
}

/// Second-order central difference [f(φ+h) − f(φ−h)] / 2h of an energy
/// curve in the geometric phase.
///
/// The caller must ensure the curve is smooth across the stencil (no
/// γ_s = 0 crossing); the state-aware wrappers below check that before
/// delegating here.
pub fn numeric_phase_derivative(
    level_fn: impl Fn(f64) -> Result<f64>,
    phi: f64,
    h: f64,
) -> Result<f64> {
    if !h.is_finite() || h <= 0.0 {
        return Err(Error::InvalidParam(format!("step must be > 0, got {h}")));
    }
    Ok((level_fn(phi + h)? - level_fn(phi - h)?) / (2.0 * h))
}

fn check_stencil(state: StateLabel, phi: f64, h: f64) -> Result<()> {
    let lo = effective_angular(state.l, state.s, phi - h);
    let hi = effective_angular(state.l, state.s, phi + h);
    if lo == 0.0 || hi == 0.0 || lo.signum() != hi.signum() {
        return Err(Error::StraddlesKink {
            lo: phi - h,
            hi: phi + h,
        });
    }
    Ok(())
}

/// ∂E/∂φ_AC of the unconfined level by central differences, refusing
/// stencils that straddle the γ_s = 0 kink.
pub fn landau_phase_derivative(state: StateLabel, p: &SystemParams, h: f64) -> Result<f64> {
    let phi = p.phi_ac();
    check_stencil(state, phi, h)?;
    numeric_phase_derivative(
        |phi| crate::spectrum::energy_level(state, &p.with_phi_ac(phi)),
        phi,
        h,
    )
}

/// ∂E/∂φ_AC of the asymptotic hard-wall level by central differences,
/// refusing stencils that straddle the γ_s = 0 kink.
pub fn hardwall_phase_derivative(
    state: StateLabel,
    p: &SystemParams,
    w: &WallConfig,
    h: f64,
) -> Result<f64> {
    let phi = p.phi_ac();
    check_stencil(state, phi, h)?;
    let w = *w;
    numeric_phase_derivative(
        move |phi| Ok(crate::hardwall::energy_asymptotic(state, &p.with_phi_ac(phi), &w)),
        phi,
        h,
    )
}
