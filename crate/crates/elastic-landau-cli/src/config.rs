//! Run configuration: a flat JSON object of optional keys, overridden
//! field-by-field by command-line flags.

use elastic_landau::model::{Spin, StateLabel, SystemParams};
use elastic_landau::{Error as CoreError, Result as CoreResult};
use serde::Deserialize;
use std::path::Path;

/// Sweep range for the geometric phase.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiSweep {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

/// On-disk configuration; every key optional, unknown keys rejected.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub m: Option<f64>,
    pub mu: Option<f64>,
    pub lambda: Option<f64>,
    pub k: Option<f64>,
    pub s: Option<i32>,
    pub omega: Option<f64>,
    pub phi_ac_override: Option<f64>,
    pub rho_b: Option<f64>,
    pub n_max: Option<u32>,
    pub l_min: Option<i32>,
    pub l_max: Option<i32>,
    pub s_set: Option<Vec<i32>>,
    pub phi_sweep: Option<PhiSweep>,
    /// Occupied states as [n, l, s] triples.
    pub occupation: Option<Vec<[i64; 3]>>,
    pub output_format: Option<String>,
    pub oracle_n_points: Option<usize>,
    pub oracle_rho_max: Option<f64>,
    pub bracket_step: Option<f64>,
    pub root_tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
    }
}

/// Fully resolved configuration (defaults ← file ← flags).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: SystemParams,
    pub rho_b: Option<f64>,
    pub n_max: u32,
    pub l_min: i32,
    pub l_max: i32,
    pub s_set: Vec<Spin>,
    pub phi_sweep: Option<PhiSweep>,
    pub occupation: Option<Vec<StateLabel>>,
    pub oracle_n_points: Option<usize>,
    pub oracle_rho_max: Option<f64>,
    pub bracket_step: Option<f64>,
    pub root_tol: Option<f64>,
}

impl RunConfig {
    pub fn resolve(file: FileConfig) -> CoreResult<Self> {
        let spin = Spin::from_sign(file.s.unwrap_or(1))?;
        let mut params = SystemParams::new(
            file.m.unwrap_or(1.0),
            file.mu.unwrap_or(0.0),
            file.lambda.unwrap_or(0.0),
            file.k.unwrap_or(1.0),
            spin,
            file.omega.unwrap_or(0.0),
        )?;
        params.phi_ac_override = file.phi_ac_override;

        let s_set = match &file.s_set {
            None => vec![Spin::Down, Spin::Up],
            Some(raw) => {
                let mut set = Vec::new();
                for &v in raw {
                    let s = Spin::from_sign(v)?;
                    if !set.contains(&s) {
                        set.push(s);
                    }
                }
                if set.is_empty() {
                    return Err(CoreError::InvalidParam("s_set must not be empty".into()));
                }
                set.sort();
                set
            }
        };

        let occupation = match &file.occupation {
            None => None,
            Some(raw) => {
                let mut states = Vec::with_capacity(raw.len());
                for &[n, l, s] in raw {
                    if n < 0 {
                        return Err(CoreError::InvalidOccupation(format!(
                            "radial quantum number must be ≥ 0, got {n}"
                        )));
                    }
                    states.push(StateLabel::new(
                        n as u32,
                        l as i32,
                        Spin::from_sign(s as i32)?,
                    ));
                }
                Some(states)
            }
        };

        if let Some(sweep) = &file.phi_sweep {
            if sweep.steps == 0 {
                return Err(CoreError::InvalidParam(
                    "phi_sweep.steps must be ≥ 1".into(),
                ));
            }
        }
        if let Some(rho_b) = file.rho_b {
            if !rho_b.is_finite() || rho_b <= 0.0 {
                return Err(CoreError::InvalidParam(format!(
                    "rho_b must be > 0, got {rho_b}"
                )));
            }
        }

        let (l_min, l_max) = (file.l_min.unwrap_or(-2), file.l_max.unwrap_or(2));
        if l_min > l_max {
            return Err(CoreError::InvalidParam(format!(
                "l_min = {l_min} exceeds l_max = {l_max}"
            )));
        }

        Ok(Self {
            params,
            rho_b: file.rho_b,
            n_max: file.n_max.unwrap_or(2),
            l_min,
            l_max,
            s_set,
            phi_sweep: file.phi_sweep,
            occupation,
            oracle_n_points: file.oracle_n_points,
            oracle_rho_max: file.oracle_rho_max,
            bracket_step: file.bracket_step,
            root_tol: file.root_tol,
        })
    }

    /// Phase values of the configured sweep.
    pub fn sweep_phis(&self) -> Option<Vec<f64>> {
        let s = self.phi_sweep?;
        if s.steps == 1 {
            return Some(vec![s.start]);
        }
        Some(
            (0..s.steps)
                .map(|i| s.start + (s.stop - s.start) * i as f64 / (s.steps - 1) as f64)
                .collect(),
        )
    }
}
