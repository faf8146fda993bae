use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fourier::{eval_with, Coefficients};
use super::{eval_lattice_sum, HalfPlanePoint, SpectralParameter, TruncationPolicy};
use crate::error::{Error, Result};
use crate::special::{bessel_k, xi_completed, ComplexValue};

/// |E(z, s) − φ(s) E(z, 1 − s)| with both sides from the Fourier expansion.
pub fn functional_equation_defect(
    z: &HalfPlanePoint,
    s: &SpectralParameter,
    t: &TruncationPolicy,
) -> Result<f64> {
    t.validate()?;
    let reflected = s.reflect();
    s.check_poles()?;
    reflected.check_poles()?;
    let forward = Coefficients::new(s)?;
    let backward = Coefficients::new(&reflected)?;
    let lhs = eval_with(&forward, z, t)?.value;
    let rhs = eval_with(&backward, z, t)?.value;
    Ok((lhs - forward.ratio() * rhs).norm())
}

/// Which evaluator supplies E(x + iy, s) for coefficient extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoefficientSource {
    /// Coprime lattice sum; needs Re(s) > 1.
    Lattice,
    /// Fourier expansion. Extraction then only checks the trapezoid rule.
    Fourier,
    /// Lattice when Re(s) > 1, otherwise Fourier.
    Auto,
}

/// ∫₀¹ E(x + iy, s) e^{-2πinx} dx by the trapezoid rule on
/// `t.quadrature_nodes` equally spaced nodes.
pub fn extract_coefficient_by_quadrature(
    n: i64,
    y: f64,
    s: &SpectralParameter,
    t: &TruncationPolicy,
) -> Result<ComplexValue> {
    extract_coefficient_with(n, y, s, t, CoefficientSource::Auto)
}

pub fn extract_coefficient_with(
    n: i64,
    y: f64,
    s: &SpectralParameter,
    t: &TruncationPolicy,
    source: CoefficientSource,
) -> Result<ComplexValue> {
    let values = node_values(y, s, t, source)?;
    Ok(trapezoid_mode(&values, n))
}

/// a_n for every n in `modes`, sharing one set of node evaluations.
pub fn extract_coefficients(
    modes: &[i64],
    y: f64,
    s: &SpectralParameter,
    t: &TruncationPolicy,
    source: CoefficientSource,
) -> Result<Vec<ComplexValue>> {
    let values = node_values(y, s, t, source)?;
    Ok(modes.iter().map(|&n| trapezoid_mode(&values, n)).collect())
}

fn node_values(
    y: f64,
    s: &SpectralParameter,
    t: &TruncationPolicy,
    source: CoefficientSource,
) -> Result<Vec<ComplexValue>> {
    t.validate()?;
    let source = match source {
        CoefficientSource::Auto if s.value().re > 1.0 => CoefficientSource::Lattice,
        CoefficientSource::Auto => CoefficientSource::Fourier,
        other => other,
    };
    let nodes = t.quadrature_nodes as usize;
    let points: Vec<HalfPlanePoint> = (0..nodes)
        .map(|k| HalfPlanePoint::new(k as f64 / nodes as f64, y))
        .collect::<Result<_>>()?;

    match source {
        CoefficientSource::Lattice => points
            .iter()
            .map(|z| eval_lattice_sum(z, s, t).map(|e| e.value))
            .collect(),
        _ => {
            let coeffs = Coefficients::new(s)?;
            points
                .par_iter()
                .map(|z| eval_with(&coeffs, z, t).map(|e| e.value))
                .collect()
        }
    }
}

fn trapezoid_mode(values: &[ComplexValue], n: i64) -> ComplexValue {
    let nodes = values.len();
    let mut acc = ComplexValue::new(0.0, 0.0);
    for (k, v) in values.iter().enumerate() {
        // e^{-2πink/Q} with the phase reduced exactly modulo Q
        let r = (n.rem_euclid(nodes as i64) as usize * k) % nodes;
        acc += v * ComplexValue::from_polar(1.0, -2.0 * PI * r as f64 / nodes as f64);
    }
    acc / nodes as f64
}

/// Real parts of [`strip_grid`]; all at least 0.1 away from 1/2.
pub const STRIP_GRID_SIGMAS: [f64; 5] = [0.1, 0.3, 0.4, 0.7, 0.9];
/// Imaginary parts of [`strip_grid`].
pub const STRIP_GRID_HEIGHTS: [f64; 4] = [-5.0, -1.5, 0.0, 3.5];

/// The 20-point sweep 0.1 ≤ σ ≤ 0.9, |t| ≤ 5 used for the functional
/// equation, scattering and first-coefficient checks; σ-major order.
pub fn strip_grid() -> Vec<ComplexValue> {
    STRIP_GRID_SIGMAS
        .iter()
        .flat_map(|&sigma| {
            STRIP_GRID_HEIGHTS
                .iter()
                .map(move |&t| ComplexValue::new(sigma, t))
        })
        .collect()
}

/// Height at which [`first_coefficient_xi_check`] evaluates a_1.
pub const FIRST_COEFFICIENT_HEIGHT: f64 = 1.0;

/// ξ-reflection defect recovered from the n = 1 Fourier coefficient.
///
/// Comparing the first coefficients on both sides of E(z, s) = φ(s) E(z, 1-s)
/// and using K_ν = K_{-ν}:
///
/// a_1(y, s) − φ(s) a_1(y, 1−s) = 2√y K_{s−1/2}(2πy) · [ξ(2−2s) − ξ(2s−1)] / (ξ(2s) ξ(2−2s)),
///
/// so the residual of the coefficient identity, rescaled by
/// |ξ(2s) ξ(2−2s)| / (2√y |K|), is exactly |ξ(u) − ξ(1−u)| at u = 2s − 1.
/// The check is run at s and at 1 − s (u = 1 − 2s) and the larger defect is
/// returned, which makes the result symmetric under s ↔ 1 − s.
pub fn first_coefficient_xi_check(s: ComplexValue) -> Result<f64> {
    let forward = coefficient_route(s)?;
    let backward = coefficient_route(1.0 - s)?;
    Ok(forward.max(backward))
}

fn coefficient_route(s: ComplexValue) -> Result<f64> {
    let y = FIRST_COEFFICIENT_HEIGHT;
    let param = SpectralParameter::new(s);
    let forward = Coefficients::new(&param)?;
    let backward = Coefficients::new(&param.reflect())?;
    let residual = forward.get(1, y)? - forward.ratio() * backward.get(1, y)?;
    let bessel = bessel_k(s - 0.5, 2.0 * PI * y)?;
    if bessel.norm() < 1e-300 {
        return Err(Error::Domain(format!(
            "K_(s-1/2)(2π) vanishes numerically at s = {s}; the first coefficient carries no information"
        )));
    }
    let scale = (xi_completed(2.0 * s)? * xi_completed(2.0 - 2.0 * s)?).norm()
        / (2.0 * y.sqrt() * bessel.norm());
    Ok(residual.norm() * scale)
}
