//! Closed-form spectrum and radial wavefunctions of the unconfined
//! elastic Landau system.
//!
//! The bound-state energies are
//!
//! ```text
//! E_{n,l,s} = (2Ωk/m)·[n + |γ_s|/2 − γ_s/2 + 1/2] + (k + sΩ/2)²/(2m)
//! ```
//!
//! an equally spaced ladder (spacing 2Ωk/m) shifted by the longitudinal
//! and spin-torsion terms. For γ_s > 0 the γ-terms cancel and the levels
//! are degenerate in l; for γ_s < 0 the energy climbs with −γ_s. Shifting
//! φ_AC by 2π relabels l → l + s, which is the periodicity of the whole
//! spectrum in the geometric phase.

use crate::error::{Error, Result};
use crate::model::{effective_angular, StateLabel, SystemParams};
use crate::specfun::kummer_m;

/// How an energy value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Closed-form Landau-analogue formula.
    Analytic,
    /// Root of the Kummer wall condition M = 0.
    HardwallExact,
    /// Large-|a| cosine quantization formula.
    HardwallAsymptotic,
    /// Finite-difference eigensolver.
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::HardwallExact => "hardwall_exact",
            Method::HardwallAsymptotic => "hardwall_asymptotic",
            Method::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One labelled bound-state energy with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub state: StateLabel,
    pub energy: f64,
    pub method: Method,
}

/// Bound-state energy E_{n,l,s} of the unconfined system.
///
/// Fails with [`Error::Unbound`] when Ωk = 0: without the dislocation
/// density there is no confinement and no discrete spectrum.
pub fn energy_level(state: StateLabel, p: &SystemParams) -> Result<f64> {
    let omega_k = p.omega_k();
    if omega_k <= 0.0 {
        return Err(Error::Unbound);
    }
    let gamma = effective_angular(state.l, state.s, p.phi_ac());
    let ladder = state.n as f64 + gamma.abs() / 2.0 - gamma / 2.0 + 0.5;
    Ok(2.0 * omega_k / p.m * ladder + p.longitudinal_shift(state.s))
}

/// Unnormalized bound-state radial amplitude
/// R(ρ) = e^(−ξ/2)·ξ^(|γ|/2)·M(−n, |γ|+1, ξ) with ξ = Ωkρ².
pub fn radial_wavefunction(rho: f64, state: StateLabel, p: &SystemParams) -> Result<f64> {
    if rho.is_nan() || rho <= 0.0 {
        return Err(Error::Domain(format!(
            "radial_wavefunction requires ρ > 0, got {rho}"
        )));
    }
    let omega_k = p.omega_k();
    if omega_k <= 0.0 {
        return Err(Error::Unbound);
    }
    let gamma = effective_angular(state.l, state.s, p.phi_ac());
    let xi = omega_k * rho * rho;
    let m = kummer_m(-(state.n as f64), gamma.abs() + 1.0, xi)?;
    Ok((-xi / 2.0).exp() * xi.powf(gamma.abs() / 2.0) * m)
}

/// All levels for n ≤ n_max, l_min ≤ l ≤ l_max, s ∈ s_set, sorted by
/// energy with (n, l, s) as the tie-break.
pub fn spectrum_table(
    n_max: u32,
    l_min: i32,
    l_max: i32,
    s_set: &[crate::model::Spin],
    p: &SystemParams,
) -> Result<Vec<EnergyLevel>> {
    if l_min > l_max {
        return Err(Error::InvalidParam(format!(
            "l_min = {l_min} exceeds l_max = {l_max}"
        )));
    }
    let mut levels = Vec::new();
    for n in 0..=n_max {
        for l in l_min..=l_max {
            for &s in s_set {
                let state = StateLabel::new(n, l, s);
                levels.push(EnergyLevel {
                    state,
                    energy: energy_level(state, p)?,
                    method: Method::Analytic,
                });
            }
        }
    }
    sort_levels(&mut levels);
    Ok(levels)
}

/// Ascending energy, ties broken by (n, l, s).
pub(crate) fn sort_levels(levels: &mut [EnergyLevel]) {
    levels.sort_by(|a, b| {
        a.energy
            .total_cmp(&b.energy)
            .then_with(|| a.state.cmp(&b.state))
    });
}
