//! Spectrum of the system confined by a hard wall at ρ_B.
//!
//! The wall imposes R(ρ_B) = 0. Since the prefactor e^(−ξ/2)·ξ^(|γ|/2) of
//! the radial solution never vanishes for ρ_B > 0, the condition reduces
//! exactly to a zero of the Kummer factor, M(a(E), |γ|+1, ξ₀) = 0 with
//! ξ₀ = Ωkρ_B². Two routes are provided:
//!
//! - [`energy_asymptotic`] — the closed formula obtained from the cosine
//!   quantization of the large-|a| Kummer form,
//!   E ≈ (nπ + |γ|π/2 + 3π/4)²/(2mρ_B²) − Ωkγ/m + (k + sΩ/2)²/(2m),
//!   valid when Ωk is small enough that the wall term dominates ξ₀;
//! - [`energy_exact`] — the (n+1)-th root in E of M(a(E), b, ξ₀) = 0,
//!   bracketed by an energy scan around the asymptotic estimate and
//!   polished by bisection.

use crate::error::{Error, Result};
use crate::model::{effective_angular, StateLabel, SystemParams};
use crate::specfun::kummer_m;
use crate::spectrum::{sort_levels, EnergyLevel, Method};

/// Hard-wall configuration: wall radius and root-search controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallConfig {
    rho_b: f64,
    bracket_step: Option<f64>,
    root_tol: f64,
}

impl WallConfig {
    /// Wall at `rho_b` with the default scan step (1/20 of the local
    /// asymptotic level spacing) and root tolerance 1e−11 on E.
    pub fn new(rho_b: f64) -> Result<Self> {
        if !rho_b.is_finite() || rho_b <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "wall radius must be > 0, got {rho_b}"
            )));
        }
        Ok(Self {
            rho_b,
            bracket_step: None,
            root_tol: 1e-11,
        })
    }

    /// Override the energy-scan step used for root isolation.
    pub fn with_bracket_step(mut self, step: f64) -> Result<Self> {
        if !step.is_finite() || step <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "bracket step must be > 0, got {step}"
            )));
        }
        self.bracket_step = Some(step);
        Ok(self)
    }

    /// Override the absolute bisection tolerance on E.
    pub fn with_root_tol(mut self, tol: f64) -> Result<Self> {
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "root tolerance must be > 0, got {tol}"
            )));
        }
        self.root_tol = tol;
        Ok(self)
    }

    pub fn rho_b(&self) -> f64 {
        self.rho_b
    }

    /// ξ₀ = Ωkρ_B², the Kummer argument at the wall.
    pub fn xi0(&self, p: &SystemParams) -> f64 {
        p.omega_k() * self.rho_b * self.rho_b
    }
}

/// Which hard-wall route to tabulate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WallMethod {
    Exact,
    Asymptotic,
}

/// Closed-form hard-wall level from the cosine quantization:
/// (nπ + |γ|π/2 + 3π/4)²/(2mρ_B²) − (Ωk/m)γ + (k + sΩ/2)²/(2m).
///
/// Remains finite at Ω = 0, where it reduces to the defect-free
/// quantum-dot spectrum.
pub fn energy_asymptotic(state: StateLabel, p: &SystemParams, w: &WallConfig) -> f64 {
    let gamma = effective_angular(state.l, state.s, p.phi_ac());
    asymptotic_for_gamma(state.n, gamma, state.s, p, w)
}

fn asymptotic_for_gamma(
    n: u32,
    gamma: f64,
    s: crate::model::Spin,
    p: &SystemParams,
    w: &WallConfig,
) -> f64 {
    use std::f64::consts::PI;
    let wall = n as f64 * PI + gamma.abs() * PI / 2.0 + 0.75 * PI;
    wall * wall / (2.0 * p.m * w.rho_b * w.rho_b) - p.omega_k() / p.m * gamma
        + p.longitudinal_shift(s)
}

/// Wall condition M(a(E), |γ|+1, ξ₀) as a function of E.
fn wall_condition(energy: f64, gamma: f64, state_s: crate::model::Spin, p: &SystemParams, xi0: f64) -> Result<f64> {
    let q = p.k + state_s.sign() * p.omega / 2.0;
    let beta = 2.0 * p.m * energy + 2.0 * p.omega_k() * gamma - q * q;
    let a = gamma.abs() / 2.0 + 0.5 - beta / (4.0 * p.omega_k());
    kummer_m(a, gamma.abs() + 1.0, xi0)
}

/// Exact hard-wall level: the (n+1)-th root in increasing E of
/// M(a(E), |γ|+1, ξ₀) = 0.
///
/// The scan window spans the midpoints between adjacent asymptotic
/// estimates (clamped from below at the unconfined ground energy, under
/// which M > 0 has no roots), is swept with `bracket_step`, and every
/// bracket found is polished by bisection; the root closest to the
/// asymptotic estimate is returned.
pub fn energy_exact(state: StateLabel, p: &SystemParams, w: &WallConfig) -> Result<f64> {
    if p.omega_k() <= 0.0 {
        return Err(Error::Unbound);
    }
    let gamma = effective_angular(state.l, state.s, p.phi_ac());
    let xi0 = w.xi0(p);
    let n = state.n;

    let asym = |j: i64| -> f64 {
        use std::f64::consts::PI;
        let wall = j as f64 * PI + gamma.abs() * PI / 2.0 + 0.75 * PI;
        wall * wall / (2.0 * p.m * w.rho_b * w.rho_b) - p.omega_k() / p.m * gamma
            + p.longitudinal_shift(state.s)
    };
    let center = asym(n as i64);
    // a(E) ≥ 0 ⇒ every series term is positive ⇒ no root below E_floor,
    // which is exactly the unconfined n = 0 level.
    let floor = p.omega_k() / p.m * (gamma.abs() + 1.0 - gamma) + p.longitudinal_shift(state.s);
    let lo = (0.5 * (asym(n as i64 - 1) + center)).max(floor);
    let hi = 0.5 * (center + asym(n as i64 + 1));
    let spacing = asym(n as i64 + 1) - center;
    let step = w.bracket_step.unwrap_or(spacing / 20.0);

    let f = |e: f64| wall_condition(e, gamma, state.s, p, xi0);

    let mut roots: Vec<f64> = Vec::new();
    let mut e_prev = lo;
    let mut f_prev = f(e_prev)?;
    while e_prev < hi {
        let e_next = (e_prev + step).min(hi);
        let f_next = f(e_next)?;
        if f_prev == 0.0 {
            roots.push(e_prev);
        } else if f_prev * f_next < 0.0 {
            roots.push(bisect(&f, e_prev, e_next, f_prev, w.root_tol)?);
        }
        e_prev = e_next;
        f_prev = f_next;
        if e_prev >= hi {
            break;
        }
    }
    roots
        .into_iter()
        .min_by(|a, b| (a - center).abs().total_cmp(&(b - center).abs()))
        .ok_or(Error::RootNotFound { n, lo, hi })
}

fn bisect(
    f: &impl Fn(f64) -> Result<f64>,
    mut lo: f64,
    mut hi: f64,
    mut f_lo: f64,
    tol: f64,
) -> Result<f64> {
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Hard-wall spectrum table over the requested quantum-number ranges,
/// tagged `hardwall_exact` or `hardwall_asymptotic`, sorted ascending.
pub fn wall_spectrum_table(
    n_max: u32,
    l_min: i32,
    l_max: i32,
    s_set: &[crate::model::Spin],
    p: &SystemParams,
    w: &WallConfig,
    method: WallMethod,
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
                let (energy, tag) = match method {
                    WallMethod::Exact => (energy_exact(state, p, w)?, Method::HardwallExact),
                    WallMethod::Asymptotic => {
                        (energy_asymptotic(state, p, w), Method::HardwallAsymptotic)
                    }
                };
                levels.push(EnergyLevel {
                    state,
                    energy,
                    method: tag,
                });
            }
        }
    }
    sort_levels(&mut levels);
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{beta, Spin, SystemParams, PHI_0};
    use std::f64::consts::PI;

    fn params(omega: f64, phi: f64) -> SystemParams {
        SystemParams::new(1.0, 0.0, 0.0, 1.0, Spin::Up, omega)
            .unwrap()
            .with_phi_ac(phi)
    }

    #[test]
    fn asymptotic_reference_value() {
        // γ = 0.25: (0.875π)²/200 − 0.00025 + 1.0005²/2
        let p = params(0.001, PI / 2.0);
        let w = WallConfig::new(10.0).unwrap();
        let got = energy_asymptotic(StateLabel::new(0, 0, Spin::Up), &p, &w);
        let want = (0.875 * PI).powi(2) / 200.0 - 0.00025 + 1.0005_f64.powi(2) / 2.0;
        assert!((got - want).abs() < 1e-14, "got {got}, want {want}");
    }

    #[test]
    fn asymptotic_reduces_to_defect_free_dot_at_zero_omega() {
        let p = params(0.0, 0.0);
        let w = WallConfig::new(7.0).unwrap();
        for n in 0..3u32 {
            for l in -3i32..=3 {
                let got = energy_asymptotic(StateLabel::new(n, l, Spin::Up), &p, &w);
                let want = (n as f64 * PI + (l.abs() as f64) * PI / 2.0 + 0.75 * PI).powi(2)
                    / (2.0 * 49.0)
                    + 0.5;
                assert!((got - want).abs() <= 1e-13 * want, "n={n}, l={l}");
            }
        }
    }

    #[test]
    fn wall_term_scales_inverse_square_in_radius() {
        let p = params(0.0, 0.0);
        let w1 = WallConfig::new(5.0).unwrap();
        let w2 = WallConfig::new(10.0).unwrap();
        let state = StateLabel::new(2, 1, Spin::Up);
        let shift = p.longitudinal_shift(Spin::Up);
        let wall1 = energy_asymptotic(state, &p, &w1) - shift;
        let wall2 = energy_asymptotic(state, &p, &w2) - shift;
        assert!((wall1 / wall2 - 4.0).abs() < 1e-12);
    }

    #[test]
    fn quantization_condition_identity() {
        // The asymptotic level must put √(β(E)·ρ_B²) exactly at
        // nπ + |γ|π/2 + 3π/4, the zero of the cosine factor.
        let w = WallConfig::new(10.0).unwrap();
        for (omega, phi, l, s, n) in [
            (0.001, 0.6 * PI, 0, Spin::Up, 0u32),
            (0.0005, 0.6 * PI, -1, Spin::Up, 2),
            (0.002, -0.4 * PI, 1, Spin::Down, 3),
        ] {
            let p = SystemParams::new(1.0, 0.0, 0.0, 1.0, s, omega)
                .unwrap()
                .with_phi_ac(phi);
            let gamma = effective_angular(l, s, phi);
            let e = energy_asymptotic(StateLabel::new(n, l, s), &p, &w);
            let b = beta(e, gamma, &p);
            let phase = (b * 100.0).sqrt();
            let want = n as f64 * PI + gamma.abs() * PI / 2.0 + 0.75 * PI;
            assert!(
                (phase - want).abs() <= 1e-12,
                "phase {phase} vs {want} (Ω={omega}, l={l}, s={s:?}, n={n})"
            );
        }
    }

    #[test]
    fn asymptotic_periodicity_in_phase() {
        let w = WallConfig::new(10.0).unwrap();
        for (n, l, s, phi) in [
            (0u32, 0i32, Spin::Up, 0.3),
            (2, -2, Spin::Down, -1.1),
            (1, 3, Spin::Up, 2.9),
        ] {
            let p1 = SystemParams::new(1.0, 0.0, 0.0, 1.0, s, 0.001)
                .unwrap()
                .with_phi_ac(phi + PHI_0);
            let p2 = SystemParams::new(1.0, 0.0, 0.0, 1.0, s, 0.001)
                .unwrap()
                .with_phi_ac(phi);
            let e1 = energy_asymptotic(StateLabel::new(n, l, s), &p1, &w);
            let e2 = energy_asymptotic(StateLabel::new(n, l + s.as_i32(), s), &p2, &w);
            assert!((e1 - e2).abs() <= 1e-12);
        }
    }

    #[test]
    fn omega_to_zero_continuity() {
        let w = WallConfig::new(10.0).unwrap();
        for l in [-2i32, 0, 3] {
            let state = StateLabel::new(1, l, Spin::Up);
            let e0 = energy_asymptotic(state, &params(0.0, 0.7), &w);
            let e1 = energy_asymptotic(state, &params(1e-8, 0.7), &w);
            assert!((e1 - e0).abs() / e0.abs() <= 1e-6);
        }
    }

    #[test]
    fn exact_roots_close_to_asymptotic_at_small_xi0() {
        // ξ₀ = 0.05 with a distant wall: the cosine formula is the
        // paper-regime approximation and must sit within 1%.
        let p = params(0.0005, 0.6 * PI); // γ = l + 0.3
        let w = WallConfig::new(10.0).unwrap();
        for l in [-1i32, 0] {
            for n in 0..=3u32 {
                let state = StateLabel::new(n, l, Spin::Up);
                let exact = energy_exact(state, &p, &w).unwrap();
                let asym = energy_asymptotic(state, &p, &w);
                let gap = (exact - asym).abs() / exact;
                assert!(gap <= 0.01, "state {state}: gap {gap}");
            }
        }
    }

    #[test]
    fn exact_reference_roots() {
        // frozen from an independent high-precision root solve
        let w = WallConfig::new(10.0).unwrap();
        let p = params(0.0005, 0.6 * PI); // s=+1, l=0 → γ=0.3
        let e = energy_exact(StateLabel::new(0, 0, Spin::Up), &p, &w).unwrap();
        assert!((e - 0.540832621769).abs() < 1e-9, "got {e}");
        let e = energy_exact(StateLabel::new(1, 0, Spin::Up), &p, &w).unwrap();
        assert!((e - 0.679038845744).abs() < 1e-9, "got {e}");
    }

    #[test]
    fn exact_roots_increase_in_n() {
        let p = params(0.0005, 0.6 * PI);
        let w = WallConfig::new(10.0).unwrap();
        let mut last = f64::NEG_INFINITY;
        for n in 0..=4u32 {
            let e = energy_exact(StateLabel::new(n, 0, Spin::Up), &p, &w).unwrap();
            assert!(e > last, "roots must interlace upward: E_{n} = {e} ≤ {last}");
            last = e;
        }
    }

    #[test]
    fn exact_root_gamma_sign_symmetry() {
        // M depends on γ only through |γ|, so flipping the sign of γ at
        // fixed |γ| moves the level by exactly +2Ωkγ/m.
        let omega = 0.0005;
        let w = WallConfig::new(10.0).unwrap();
        let p_pos = params(omega, 0.6 * PI); // l=0 → γ = +0.3
        let p_neg = params(omega, -0.6 * PI); // l=0 → γ = −0.3
        let state = StateLabel::new(1, 0, Spin::Up);
        let e_pos = energy_exact(state, &p_pos, &w).unwrap();
        let e_neg = energy_exact(state, &p_neg, &w).unwrap();
        let want = 2.0 * omega * 0.3 / 1.0;
        assert!(
            ((e_neg - e_pos) - want).abs() < 1e-9,
            "Δ = {}, want {want}",
            e_neg - e_pos
        );
    }

    #[test]
    fn exact_requires_confinement() {
        let w = WallConfig::new(10.0).unwrap();
        assert_eq!(
            energy_exact(StateLabel::new(0, 0, Spin::Up), &params(0.0, 0.3), &w),
            Err(Error::Unbound)
        );
    }

    #[test]
    fn root_not_found_when_asymptotic_window_misses() {
        // Deep Landau regime (ξ₀ = 25): the wall barely matters, the true
        // roots hug the unconfined ladder far above the cosine estimate,
        // so the scan window around the estimate contains no sign change.
        let p = params(1.0, 0.6 * PI);
        let w = WallConfig::new(5.0).unwrap();
        let got = energy_exact(StateLabel::new(0, 0, Spin::Up), &p, &w);
        assert!(
            matches!(got, Err(Error::RootNotFound { .. })),
            "expected RootNotFound, got {got:?}"
        );
    }

    #[test]
    fn table_cross_method_gap_and_order() {
        let p = params(0.01 / 400.0, 0.6 * PI);
        let w = WallConfig::new(20.0).unwrap(); // ξ₀ = 0.01
        let exact = wall_spectrum_table(2, -1, 0, &[Spin::Up], &p, &w, WallMethod::Exact).unwrap();
        let asym =
            wall_spectrum_table(2, -1, 0, &[Spin::Up], &p, &w, WallMethod::Asymptotic).unwrap();
        assert_eq!(exact.len(), asym.len());
        for w2 in exact.windows(2) {
            assert!(w2[0].energy <= w2[1].energy);
        }
        // row-wise by state, not by table position
        for le in &exact {
            let la = asym.iter().find(|x| x.state == le.state).unwrap();
            assert!((le.energy - la.energy).abs() / le.energy <= 0.01);
            assert_eq!(le.method, Method::HardwallExact);
            assert_eq!(la.method, Method::HardwallAsymptotic);
        }
    }

    #[test]
    fn wall_config_validation() {
        assert!(WallConfig::new(0.0).is_err());
        assert!(WallConfig::new(-2.0).is_err());
        assert!(WallConfig::new(1.0).unwrap().with_bracket_step(0.0).is_err());
        assert!(WallConfig::new(1.0).unwrap().with_root_tol(-1e-9).is_err());
    }
}
