//! Physical parameters and the derived scalar quantities (Ω, φ_AC, γ_s, β_s)
//! used by every solver.
//!
//! Everything is expressed in natural units ħ = c = 1, so the flux period
//! of the geometric phase is fixed at φ₀ = 2π.

use crate::error::{Error, Result};

/// Flux period φ₀ = 2π of the Aharonov-Casher phase in natural units.
pub const PHI_0: f64 = std::f64::consts::TAU;

/// Eigenvalue s = ±1 of σ³ labelling the spin channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Spin {
    /// s = −1.
    Down,
    /// s = +1.
    Up,
}

impl Spin {
    /// The eigenvalue as a float, +1.0 or −1.0.
    pub fn sign(self) -> f64 {
        match self {
            Spin::Up => 1.0,
            Spin::Down => -1.0,
        }
    }

    /// Parse from an integer ±1.
    pub fn from_sign(sign: i32) -> Result<Self> {
        match sign {
            1 => Ok(Spin::Up),
            -1 => Ok(Spin::Down),
            other => Err(Error::InvalidParam(format!(
                "spin must be +1 or -1, got {other}"
            ))),
        }
    }

    /// The eigenvalue as an integer, +1 or −1.
    pub fn as_i32(self) -> i32 {
        match self {
            Spin::Up => 1,
            Spin::Down => -1,
        }
    }

    /// Both spin channels, in ascending order (−1, +1).
    pub fn both() -> [Spin; 2] {
        [Spin::Down, Spin::Up]
    }
}

impl std::fmt::Display for Spin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:+}", self.as_i32())
    }
}

/// Quantum numbers (n, l, s) of one bound state.
///
/// `n ≥ 0` is the radial quantum number, `l` the orbital integer and `s`
/// the spin channel. The total angular momentum eigenvalue j = l + 1/2 is
/// derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateLabel {
    pub n: u32,
    pub l: i32,
    pub s: Spin,
}

impl StateLabel {
    pub fn new(n: u32, l: i32, s: Spin) -> Self {
        Self { n, l, s }
    }

    /// Total angular momentum eigenvalue j = l + 1/2.
    pub fn j(&self) -> f64 {
        self.l as f64 + 0.5
    }
}

impl std::fmt::Display for StateLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, l={}, s={})", self.n, self.l, self.s)
    }
}

/// Physical configuration of the system, in natural units.
///
/// The spin field `s` selects the channel for operations that are not
/// given an explicit [`StateLabel`]; state-resolved operations use the
/// state's own spin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Particle mass, > 0.
    pub m: f64,
    /// Magnitude of the permanent magnetic dipole moment. Its sign
    /// carries the dipole orientation along ±z.
    pub mu: f64,
    /// Linear charge density of the charged dislocation line.
    pub lambda: f64,
    /// Longitudinal wavenumber, > 0.
    pub k: f64,
    /// Spin channel for state-free operations.
    pub s: Spin,
    /// Dislocation strength Ω = b_z·A/2, ≥ 0.
    pub omega: f64,
    /// When set, the geometric phase used everywhere instead of 2πμλ.
    /// Lets the phase be swept independently of μ and λ.
    pub phi_ac_override: Option<f64>,
}

impl SystemParams {
    /// Validated constructor; `phi_ac_override` starts unset.
    pub fn new(m: f64, mu: f64, lambda: f64, k: f64, s: Spin, omega: f64) -> Result<Self> {
        if !m.is_finite() || m <= 0.0 {
            return Err(Error::InvalidParam(format!("mass must be > 0, got {m}")));
        }
        if !k.is_finite() || k <= 0.0 {
            return Err(Error::InvalidParam(format!(
                "wavenumber k must be > 0, got {k}"
            )));
        }
        if !omega.is_finite() || omega < 0.0 {
            return Err(Error::InvalidParam(format!(
                "dislocation strength Ω must be ≥ 0, got {omega}"
            )));
        }
        if !mu.is_finite() || !lambda.is_finite() {
            return Err(Error::InvalidParam(
                "dipole moment and line charge must be finite".into(),
            ));
        }
        Ok(Self {
            m,
            mu,
            lambda,
            k,
            s,
            omega,
            phi_ac_override: None,
        })
    }

    /// Same parameters with the geometric phase pinned to `phi` radians.
    pub fn with_phi_ac(mut self, phi: f64) -> Self {
        self.phi_ac_override = Some(phi);
        self
    }

    /// The effective Aharonov-Casher phase: the override when set,
    /// otherwise exactly 2πμλ.
    pub fn phi_ac(&self) -> f64 {
        self.phi_ac_override.unwrap_or_else(|| ac_phase(self.mu, self.lambda))
    }

    /// The product Ωk controlling the harmonic confinement.
    pub fn omega_k(&self) -> f64 {
        self.omega * self.k
    }

    /// Longitudinal energy shift (k + sΩ/2)²/(2m) for spin channel `s`.
    pub fn longitudinal_shift(&self, s: Spin) -> f64 {
        let q = self.k + s.sign() * self.omega / 2.0;
        q * q / (2.0 * self.m)
    }
}

/// Dislocation strength Ω = b_z·A/2 from the Burgers-vector z-component
/// and the areal defect density A ≥ 0. A negative b_z is allowed; the
/// caller decides the physical sign.
pub fn dislocation_strength(b_z: f64, area_density: f64) -> f64 {
    b_z * area_density / 2.0
}

/// Geometric phase φ_AC = 2πμλ picked up by a dipole aligned with +z
/// encircling the charged line. The dipole orientation is encoded in the
/// sign of μ.
pub fn ac_phase(mu: f64, lambda: f64) -> f64 {
    PHI_0 * mu * lambda
}

/// Effective angular quantum number
/// γ_s = l + (1 − s)/2 + s·φ_AC/φ₀ with φ₀ = 2π.
pub fn effective_angular(l: i32, s: Spin, phi_ac: f64) -> f64 {
    let s = s.sign();
    l as f64 + (1.0 - s) / 2.0 + s * phi_ac / PHI_0
}

/// Reduced energy parameter β_s = 2mE + 2Ωk·γ_s − (k + sΩ/2)², with the
/// spin channel taken from `p.s`.
pub fn beta(energy: f64, gamma: f64, p: &SystemParams) -> f64 {
    let q = p.k + p.s.sign() * p.omega / 2.0;
    2.0 * p.m * energy + 2.0 * p.omega_k() * gamma - q * q
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn params(m: f64, k: f64, s: Spin, omega: f64) -> SystemParams {
        SystemParams::new(m, 0.0, 0.0, k, s, omega).unwrap()
    }

    #[test]
    fn dislocation_strength_values() {
        assert_eq!(dislocation_strength(0.0, 5.0), 0.0);
        assert_eq!(dislocation_strength(0.2, 1.0), 0.1);
        assert_eq!(dislocation_strength(1.0, 2.0), 1.0);
        // sign rides on b_z
        assert_eq!(dislocation_strength(-1.0, 2.0), -1.0);
    }

    #[test]
    fn ac_phase_values() {
        assert_eq!(ac_phase(0.0, 3.0), 0.0);
        assert!((ac_phase(1.0, 1.0) - 2.0 * PI).abs() < 1e-15);
        assert!((ac_phase(1.0, 0.25) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn effective_angular_values() {
        assert_eq!(effective_angular(0, Spin::Up, 0.0), 0.0);
        assert!((effective_angular(0, Spin::Up, PI / 2.0) - 0.25).abs() < 1e-15);
        assert!((effective_angular(1, Spin::Down, PI / 2.0) - 1.75).abs() < 1e-15);
    }

    #[test]
    fn beta_values() {
        // only −k² survives
        let p = params(1.0, 1.0, Spin::Up, 0.0);
        assert!((beta(0.0, 0.0, &p) - (-1.0)).abs() < 1e-15);

        // substituting the n=0 level back gives β = 4Ωk(n + 1/2 + |γ|/2):
        // 4·0.1·(0.5 + 0.125) = 0.25 for γ = 0.25
        let p = params(1.0, 1.0, Spin::Up, 0.1);
        assert!((beta(0.65125, 0.25, &p) - 0.25).abs() < 1e-14);

        let p = params(1.0, 1.0, Spin::Down, 0.1);
        assert!((beta(0.0, 1.0, &p) - (-0.7025)).abs() < 1e-14);
    }

    #[test]
    fn params_validation() {
        assert!(SystemParams::new(0.0, 0.0, 0.0, 1.0, Spin::Up, 0.0).is_err());
        assert!(SystemParams::new(1.0, 0.0, 0.0, 0.0, Spin::Up, 0.0).is_err());
        assert!(SystemParams::new(1.0, 0.0, 0.0, 1.0, Spin::Up, -0.1).is_err());
        assert!(SystemParams::new(1.0, 0.0, 0.0, 1.0, Spin::Up, 0.0).is_ok());
    }

    #[test]
    fn phi_override_bypasses_mu_lambda() {
        let p = SystemParams::new(1.0, 2.0, 3.0, 1.0, Spin::Up, 0.1)
            .unwrap()
            .with_phi_ac(0.7);
        assert_eq!(p.phi_ac(), 0.7);
        let p = SystemParams::new(1.0, 2.0, 3.0, 1.0, Spin::Up, 0.1).unwrap();
        assert_eq!(p.phi_ac(), PHI_0 * 6.0);
    }

    #[test]
    fn spin_parse_and_order() {
        assert_eq!(Spin::from_sign(1).unwrap(), Spin::Up);
        assert_eq!(Spin::from_sign(-1).unwrap(), Spin::Down);
        assert!(Spin::from_sign(0).is_err());
        assert!(Spin::Down < Spin::Up);
    }

    proptest! {
        /// Shifting the phase by one flux quantum is the same as shifting
        /// l by s (up to f64 rounding in φ/2π).
        #[test]
        fn periodicity_kernel(l in -50i32..50, up in any::<bool>(), phi in -50.0f64..50.0) {
            let s = if up { Spin::Up } else { Spin::Down };
            let lhs = effective_angular(l, s, phi + PHI_0);
            let rhs = effective_angular(l + s.as_i32(), s, phi);
            prop_assert!((lhs - rhs).abs() < 1e-13, "lhs={lhs}, rhs={rhs}");
        }

        /// φ_AC is linear in μ and λ.
        #[test]
        fn ac_phase_linearity(mu in -10.0f64..10.0, lambda in -10.0f64..10.0, c in -8.0f64..8.0) {
            let scaled = ac_phase(c * mu, lambda);
            let reference = c * ac_phase(mu, lambda);
            prop_assert!((scaled - reference).abs() <= 1e-12 * (1.0 + reference.abs()));
            let scaled = ac_phase(mu, c * lambda);
            prop_assert!((scaled - reference).abs() <= 1e-12 * (1.0 + reference.abs()));
        }

        /// β is affine in E with slope exactly 2m.
        #[test]
        fn beta_affine_in_energy(e1 in -10.0f64..10.0, de in 0.1f64..10.0,
                                 gamma in -5.0f64..5.0, m in 0.1f64..10.0) {
            let p = SystemParams::new(m, 0.0, 0.0, 1.0, Spin::Up, 0.05).unwrap();
            let slope = (beta(e1 + de, gamma, &p) - beta(e1, gamma, &p)) / de;
            prop_assert!((slope - 2.0 * m).abs() <= 1e-10 * (1.0 + 2.0 * m));
        }
    }
}
