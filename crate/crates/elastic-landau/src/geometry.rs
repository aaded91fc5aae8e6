//! Geometry of the uniform screw-dislocation medium: triad field, metric,
//! torsion two-form, contortion, and the irreducible torsion
//! decomposition.
//!
//! The medium carries the line element
//! ds² = dρ² + ρ²dφ² + (dz + Ωρ²dφ)², encoded in the triad
//! θ¹ = dρ, θ² = ρdφ, θ³ = dz + Ωρ²dφ. Torsion follows from the Cartan
//! structure equations T^a = dθ^a + ω^a_b ∧ θ^b, with the exterior
//! derivative taken numerically (second-order central differences on the
//! triad components), and lands entirely in T³ = 2Ωρ dρ∧dφ.
//!
//! For the irreducible split the spatial tensor is embedded in a static
//! 4-D frame with coordinates (t, ρ, φ, z), flat Euclidean time leg
//! e⁰ = dt, and the Levi-Civita tensor fixed to ε_{tρφz} = −√(det g₄).
//! That orientation is the one calibration choice in this module; it
//! makes the screw-dislocation axial vector come out as S⁰ = −4Ω, whose
//! eighth is the spin-torsion coupling Ω/2 seen in the spectrum, and it
//! keeps the decomposition self-consistent (ε-trace of q vanishes).
//! Indices: T^a_{μν} is stored as [a][μ][ν]; lowered 4-tensors as
//! [β][ν][μ] with the one-form index last, matching K^β_{νμ}.

// Tensor contractions read better as explicit index loops.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// 3×3 component table, row index first.
pub type Mat3 = [[f64; 3]; 3];
/// Frame-indexed two-form components X^a_{μν} as [a][μ][ν].
pub type FrameTensor3 = [[[f64; 3]; 3]; 3];
/// Fully covariant rank-3 tensor in the 4-D embedding, [β][ν][μ].
pub type Tensor4 = [[[f64; 4]; 4]; 4];

/// Irreducible pieces of the torsion tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionDecomposition {
    /// Trace vector T_μ = T^β_{μβ}, coordinates (t, ρ, φ, z).
    pub trace_vector: [f64; 4],
    /// Axial vector S^α = ε^{αβνμ}T_{βνμ}.
    pub axial_vector: [f64; 4],
    /// Trace-free, ε-trace-free remainder q_{βνμ}.
    pub q_tensor: Tensor4,
}

impl TorsionDecomposition {
    /// The single physical component S⁰; equals −4Ω for the
    /// screw-dislocation medium.
    pub fn axial_scalar(&self) -> f64 {
        self.axial_vector[0]
    }
}

/// Full geometric record at one radius.
#[derive(Debug, Clone, PartialEq)]
pub struct TorsionData {
    pub rho: f64,
    pub omega: f64,
    /// Triad components e^a_μ, rows a = 1..3, columns μ = (ρ, φ, z).
    pub triad: Mat3,
    /// Metric g_μν reconstructed from the triad.
    pub metric: Mat3,
    /// Torsion two-form components T^a_{μν} from the structure equations.
    pub torsion: FrameTensor3,
    /// Contortion one-form K_{μab}, [μ][a][b], antisymmetric in (a, b).
    pub contortion: FrameTensor3,
    pub decomposition: TorsionDecomposition,
}

impl TorsionData {
    /// Compute the whole record with finite-difference step `h` for the
    /// exterior derivatives.
    pub fn compute(rho: f64, omega: f64, h: f64) -> Result<Self> {
        let torsion = torsion_two_form(rho, omega, h)?;
        Ok(Self {
            rho,
            omega,
            triad: triad(rho, omega)?,
            metric: metric_from_triad(rho, omega)?,
            contortion: contortion_from_torsion(rho, omega, &torsion)?,
            decomposition: decompose_torsion(rho, omega, &torsion)?,
            torsion,
        })
    }
}

fn check_rho(rho: f64) -> Result<()> {
    if !rho.is_finite() || rho <= 0.0 {
        return Err(Error::Domain(format!("radius must be > 0, got {rho}")));
    }
    Ok(())
}

/// Triad e^a_μ of the defect line element:
/// θ¹ = dρ, θ² = ρdφ, θ³ = dz + Ωρ²dφ.
pub fn triad(rho: f64, omega: f64) -> Result<Mat3> {
    check_rho(rho)?;
    Ok([
        [1.0, 0.0, 0.0],
        [0.0, rho, 0.0],
        [0.0, omega * rho * rho, 1.0],
    ])
}

/// Inverse triad e^μ_a, rows μ, columns a.
pub fn inverse_triad(rho: f64, omega: f64) -> Result<Mat3> {
    check_rho(rho)?;
    Ok([
        [1.0, 0.0, 0.0],
        [0.0, 1.0 / rho, 0.0],
        [0.0, -omega * rho, 1.0],
    ])
}

/// Metric g_μν = e^a_μ e^b_ν δ_ab: the coefficient table of the line
/// element, with g_φφ = ρ² + Ω²ρ⁴ and g_φz = Ωρ².
pub fn metric_from_triad(rho: f64, omega: f64) -> Result<Mat3> {
    let e = triad(rho, omega)?;
    let mut g = [[0.0; 3]; 3];
    for mu in 0..3 {
        for nu in 0..3 {
            g[mu][nu] = (0..3).map(|a| e[a][mu] * e[a][nu]).sum();
        }
    }
    Ok(g)
}

/// Inverse metric g^μν.
pub fn metric_inverse(rho: f64, omega: f64) -> Result<Mat3> {
    let g = metric_from_triad(rho, omega)?;
    invert_3x3(&g).ok_or_else(|| Error::Domain("metric is singular".into()))
}

fn invert_3x3(m: &Mat3) -> Option<Mat3> {
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if det == 0.0 || !det.is_finite() {
        return None;
    }
    let mut inv = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let (a, b) = ((i + 1) % 3, (i + 2) % 3);
            let (c, d) = ((j + 1) % 3, (j + 2) % 3);
            // cofactor transpose
            inv[j][i] = (m[a][c] * m[b][d] - m[a][d] * m[b][c]) / det;
        }
    }
    Some(inv)
}

/// Connection one-form of the defect frame: the only non-zero components
/// are ω_φ¹₂ = −1 and ω_φ²₁ = +1, returned as [μ][a][b].
fn connection_one_form() -> FrameTensor3 {
    let mut w = [[[0.0; 3]; 3]; 3];
    w[1][0][1] = -1.0;
    w[1][1][0] = 1.0;
    w
}

/// Torsion two-form components T^a_{μν} from the Cartan structure
/// equations, with the exterior derivative evaluated by second-order
/// central differences of the triad components along every coordinate.
pub fn torsion_two_form(rho: f64, omega: f64, h: f64) -> Result<FrameTensor3> {
    check_rho(rho)?;
    if h.is_nan() || h <= 0.0 || h >= rho {
        return Err(Error::Domain(format!(
            "finite-difference step must satisfy 0 < h < ρ, got h = {h}, ρ = {rho}"
        )));
    }
    // triad as a field over (ρ, φ, z); the components depend on ρ only,
    // but the derivative loop does not assume that
    let frame = |point: [f64; 3]| triad(point[0], omega);
    numeric_torsion(frame, [rho, 0.0, 0.0], h)
}

/// Structure-equation torsion for an arbitrary triad field; split out so
/// the differentiation scheme itself can be tested on frames with
/// non-polynomial components.
pub(crate) fn numeric_torsion(
    frame: impl Fn([f64; 3]) -> Result<Mat3>,
    point: [f64; 3],
    h: f64,
) -> Result<FrameTensor3> {
    let conn = connection_one_form();
    let e0 = frame(point)?;
    let mut torsion = [[[0.0; 3]; 3]; 3];
    for a in 0..3 {
        for mu in 0..3 {
            for nu in (mu + 1)..3 {
                let mut plus = point;
                let mut minus = point;
                plus[mu] += h;
                minus[mu] -= h;
                let d_mu = (frame(plus)?[a][nu] - frame(minus)?[a][nu]) / (2.0 * h);
                let mut plus = point;
                let mut minus = point;
                plus[nu] += h;
                minus[nu] -= h;
                let d_nu = (frame(plus)?[a][mu] - frame(minus)?[a][mu]) / (2.0 * h);
                let wedge: f64 = (0..3)
                    .map(|b| conn[mu][a][b] * e0[b][nu] - conn[nu][a][b] * e0[b][mu])
                    .sum();
                let t = d_mu - d_nu + wedge;
                torsion[a][mu][nu] = t;
                torsion[a][nu][mu] = -t;
            }
        }
    }
    Ok(torsion)
}

/// Lowered coordinate torsion T_{βνμ} = g_{βλ} e^λ_a T^a_{νμ}.
fn lowered_torsion(rho: f64, omega: f64, torsion: &FrameTensor3) -> Result<[[[f64; 3]; 3]; 3]> {
    let e_inv = inverse_triad(rho, omega)?;
    let g = metric_from_triad(rho, omega)?;
    let mut coord = [[[0.0; 3]; 3]; 3];
    for lam in 0..3 {
        for mu in 0..3 {
            for nu in 0..3 {
                coord[lam][mu][nu] = (0..3).map(|a| e_inv[lam][a] * torsion[a][mu][nu]).sum();
            }
        }
    }
    let mut lower = [[[0.0; 3]; 3]; 3];
    for beta in 0..3 {
        for mu in 0..3 {
            for nu in 0..3 {
                lower[beta][mu][nu] = (0..3).map(|lam| g[beta][lam] * coord[lam][mu][nu]).sum();
            }
        }
    }
    Ok(lower)
}

/// Contortion K_{μab} from the torsion two-form:
/// K^β_{νμ} = (T^β_{νμ} − T_ν{}^β{}_μ − T_μ{}^β{}_ν)/2, projected onto
/// frame indices as K_{μab} = K_{βνμ}(e^ν_a e^β_b − e^ν_b e^β_a).
/// Antisymmetric in (a, b).
pub fn contortion_from_torsion(
    rho: f64,
    omega: f64,
    torsion: &FrameTensor3,
) -> Result<FrameTensor3> {
    let lower = lowered_torsion(rho, omega, torsion)?;
    // K_{βνμ} with the one-form index μ last
    let mut k = [[[0.0; 3]; 3]; 3];
    for beta in 0..3 {
        for nu in 0..3 {
            for mu in 0..3 {
                k[beta][nu][mu] =
                    0.5 * (lower[beta][nu][mu] - lower[nu][beta][mu] - lower[mu][beta][nu]);
            }
        }
    }
    let e_inv = inverse_triad(rho, omega)?;
    let mut frame = [[[0.0; 3]; 3]; 3];
    for mu in 0..3 {
        for a in 0..3 {
            for b in 0..3 {
                let mut sum = 0.0;
                for beta in 0..3 {
                    for nu in 0..3 {
                        sum += k[beta][nu][mu]
                            * (e_inv[nu][a] * e_inv[beta][b] - e_inv[nu][b] * e_inv[beta][a]);
                    }
                }
                frame[mu][a][b] = sum;
            }
        }
    }
    Ok(frame)
}

/// Recompose the lowered coordinate torsion from contortion via
/// T_{βνμ} = K_{βνμ} − K_{βμν}; test hook for the algebraic inverse.
pub fn torsion_from_contortion(rho: f64, omega: f64, torsion: &FrameTensor3) -> Result<[[[f64; 3]; 3]; 3]> {
    let lower = lowered_torsion(rho, omega, torsion)?;
    let mut k = [[[0.0; 3]; 3]; 3];
    for beta in 0..3 {
        for nu in 0..3 {
            for mu in 0..3 {
                k[beta][nu][mu] =
                    0.5 * (lower[beta][nu][mu] - lower[nu][beta][mu] - lower[mu][beta][nu]);
            }
        }
    }
    let mut recomposed = [[[0.0; 3]; 3]; 3];
    for beta in 0..3 {
        for nu in 0..3 {
            for mu in 0..3 {
                recomposed[beta][nu][mu] = k[beta][nu][mu] - k[beta][mu][nu];
            }
        }
    }
    Ok(recomposed)
}

fn perm_sign_4(p: [usize; 4]) -> f64 {
    let mut sign = 1.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return 0.0;
            }
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Irreducible decomposition of the torsion tensor in the static 4-D
/// embedding:
///
/// T_{βνμ} = (T_ν g_{βμ} − T_μ g_{βν})/3 − ε_{βνμγ}S^γ/6 + q_{βνμ}
///
/// with T_μ = T^β_{μβ} and S^α = ε^{αβνμ}T_{βνμ}. The remainder q is
/// checked to be trace-free and ε-trace-free to ~1e−12 before returning.
pub fn decompose_torsion(
    rho: f64,
    omega: f64,
    torsion: &FrameTensor3,
) -> Result<TorsionDecomposition> {
    let lower3 = lowered_torsion(rho, omega, torsion)?;
    let g3 = metric_from_triad(rho, omega)?;
    let g3_inv = metric_inverse(rho, omega)?;

    // static embedding: x = (t, ρ, φ, z), flat Euclidean time leg
    let mut g4 = [[0.0; 4]; 4];
    let mut g4_inv = [[0.0; 4]; 4];
    g4[0][0] = 1.0;
    g4_inv[0][0] = 1.0;
    for mu in 0..3 {
        for nu in 0..3 {
            g4[mu + 1][nu + 1] = g3[mu][nu];
            g4_inv[mu + 1][nu + 1] = g3_inv[mu][nu];
        }
    }
    // det g₄ = det g₃ = ρ²
    let det_g4 = rho * rho;

    let mut t4: Tensor4 = [[[0.0; 4]; 4]; 4];
    for beta in 0..3 {
        for nu in 0..3 {
            for mu in 0..3 {
                t4[beta + 1][nu + 1][mu + 1] = lower3[beta][nu][mu];
            }
        }
    }

    // ε_{αβνμ} = −perm(α,β,ν,μ)·√det g₄  (orientation calibrated so the
    // screw dislocation gives S⁰ = −4Ω)
    let sqrt_det = det_g4.sqrt();
    let eps_lower = |idx: [usize; 4]| -perm_sign_4(idx) * sqrt_det;
    // raise all four indices with g₄⁻¹ (diagonal-block, so only the
    // spatial block mixes)
    let mut eps_upper = [[[[0.0_f64; 4]; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut sum = 0.0;
                    for e in 0..4 {
                        if g4_inv[a][e] == 0.0 {
                            continue;
                        }
                        for f in 0..4 {
                            if g4_inv[b][f] == 0.0 {
                                continue;
                            }
                            for g in 0..4 {
                                if g4_inv[c][g] == 0.0 {
                                    continue;
                                }
                                for hh in 0..4 {
                                    let s = eps_lower([e, f, g, hh]);
                                    if s == 0.0 {
                                        continue;
                                    }
                                    sum += g4_inv[a][e]
                                        * g4_inv[b][f]
                                        * g4_inv[c][g]
                                        * g4_inv[d][hh]
                                        * s;
                                }
                            }
                        }
                    }
                    eps_upper[a][b][c][d] = sum;
                }
            }
        }
    }

    // trace vector T_ν = g^{βμ} T_{βνμ}
    let mut trace = [0.0; 4];
    for nu in 0..4 {
        for beta in 0..4 {
            for mu in 0..4 {
                trace[nu] += g4_inv[beta][mu] * t4[beta][nu][mu];
            }
        }
    }

    // axial vector S^α = ε^{αβνμ} T_{βνμ}
    let mut axial = [0.0; 4];
    for alpha in 0..4 {
        for beta in 0..4 {
            for nu in 0..4 {
                for mu in 0..4 {
                    axial[alpha] += eps_upper[alpha][beta][nu][mu] * t4[beta][nu][mu];
                }
            }
        }
    }

    // remainder q = T − trace part − axial part
    let mut q: Tensor4 = [[[0.0; 4]; 4]; 4];
    for beta in 0..4 {
        for nu in 0..4 {
            for mu in 0..4 {
                let trace_part = (trace[nu] * g4[beta][mu] - trace[mu] * g4[beta][nu]) / 3.0;
                let mut axial_part = 0.0;
                for gam in 0..4 {
                    if axial[gam] != 0.0 {
                        axial_part -= eps_lower([beta, nu, mu, gam]) * axial[gam] / 6.0;
                    }
                }
                q[beta][nu][mu] = t4[beta][nu][mu] - trace_part - axial_part;
            }
        }
    }

    // consistency: q must be trace-free and ε-trace-free
    let mut q_trace_max = 0.0_f64;
    for nu in 0..4 {
        let mut t = 0.0;
        for beta in 0..4 {
            for mu in 0..4 {
                t += g4_inv[beta][mu] * q[beta][nu][mu];
            }
        }
        q_trace_max = q_trace_max.max(t.abs());
    }
    let mut q_eps_max = 0.0_f64;
    for alpha in 0..4 {
        let mut t = 0.0;
        for beta in 0..4 {
            for nu in 0..4 {
                for mu in 0..4 {
                    t += eps_upper[alpha][beta][nu][mu] * q[beta][nu][mu];
                }
            }
        }
        q_eps_max = q_eps_max.max(t.abs());
    }
    let scale = 1.0 + 4.0 * omega.abs();
    if q_trace_max > 1e-9 * scale || q_eps_max > 1e-9 * scale {
        return Err(Error::Domain(format!(
            "torsion decomposition inconsistent: q-trace {q_trace_max:e}, q-ε-trace {q_eps_max:e}"
        )));
    }

    Ok(TorsionDecomposition {
        trace_vector: trace,
        axial_vector: axial,
        q_tensor: q,
    })
}
