use serde::{Deserialize, Serialize};

use super::{LFunctionData, PlaceDatum, RatioSpec};
use crate::error::{finite, Error, Result};
use crate::special::ComplexValue;

/// A local factor is refused when some |1 − λ q^{-s}| falls below this.
pub const FACTOR_EXCLUSION: f64 = 1e-12;

/// Margins below this trigger a [`ConvergenceWarning`].
pub const CONVERGENCE_MARGIN: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceWarning {
    /// `None` when no place was included.
    pub margin: Option<f64>,
    pub message: String,
}

/// A truncated Euler product with its convergence bookkeeping.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialL {
    pub value: ComplexValue,
    pub factors_used: usize,
    /// 1 + max_v max_λ log|λ| / log q_v over the included places.
    pub abscissa: Option<f64>,
    /// Re(s) − abscissa.
    pub margin: Option<f64>,
    /// Estimated |log| of the omitted factors q > max_q, assuming the data
    /// continue with the same eigenvalue growth.
    pub tail_estimate: f64,
    pub warning: Option<ConvergenceWarning>,
}

/// det(I − ρ(t_v) q^{-s})^{-1} = Π_λ (1 − λ q^{-s})^{-1}.
pub fn local_factor(place: &PlaceDatum, s: ComplexValue) -> Result<ComplexValue> {
    let one = ComplexValue::new(1.0, 0.0);
    let x = (-s * (place.q() as f64).ln()).exp();
    let mut det = one;
    for &lambda in place.satake().eigenvalues() {
        let factor = one - lambda * x;
        if factor.norm() < FACTOR_EXCLUSION {
            return Err(Error::Pole {
                function: "local_factor",
                at: s,
            });
        }
        det *= factor;
    }
    finite(one / det, "local_factor", s)
}

fn growth_exponent(place: &PlaceDatum) -> f64 {
    let log_q = (place.q() as f64).ln();
    place
        .satake()
        .eigenvalues()
        .iter()
        .map(|l| l.norm().ln() / log_q)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// L_S(s) truncated to places with q ≤ `max_q`.
///
/// Factors are multiplied in ascending q order, so the result is
/// reproducible bit for bit. Evaluation at or left of the abscissa of
/// absolute convergence is refused with [`Error::Divergence`].
pub fn partial_l(data: &LFunctionData, s: ComplexValue, max_q: u64) -> Result<PartialL> {
    let included: Vec<&PlaceDatum> = data
        .places()
        .iter()
        .take_while(|p| p.q() <= max_q)
        .collect();

    let abscissa = included
        .iter()
        .map(|p| growth_exponent(p))
        .reduce(f64::max)
        .map(|theta| 1.0 + theta);
    let margin = abscissa.map(|a| s.re - a);
    if let Some(m) = margin {
        if m <= 0.0 {
            return Err(Error::Divergence(format!(
                "Euler product needs Re(s) > {:.6}, got s = {s}",
                abscissa.unwrap_or(1.0)
            )));
        }
    }

    let mut value = ComplexValue::new(1.0, 0.0);
    for place in &included {
        value *= local_factor(place, s)?;
    }

    let warning = match margin {
        None => Some(ConvergenceWarning {
            margin: None,
            message: "no places with q <= max_q; empty product".into(),
        }),
        Some(m) if m < CONVERGENCE_MARGIN => Some(ConvergenceWarning {
            margin: Some(m),
            message: format!("convergence margin {m:.4} below {CONVERGENCE_MARGIN}"),
        }),
        _ => None,
    };

    // Σ_{p > Q} d p^{θ−σ} ≈ d Q^{1+θ−σ} / ((σ−θ−1) log Q)
    let tail_estimate = match (margin, data.dim()) {
        (Some(m), Some(d)) => {
            let big_q = max_q.max(2) as f64;
            d as f64 * big_q.powf(-m) / (m * big_q.ln())
        }
        _ => 0.0,
    };

    Ok(PartialL {
        value: finite(value, "partial_l", s)?,
        factors_used: included.len(),
        abscissa,
        margin,
        tail_estimate,
        warning,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelReport {
    pub a: u32,
    pub numerator: PartialL,
    pub denominator: PartialL,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioReport {
    pub value: ComplexValue,
    pub levels: Vec<LevelReport>,
}

impl RatioReport {
    /// Warnings tagged with their 1-based level index.
    pub fn warnings(&self) -> Vec<(usize, &ConvergenceWarning)> {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(j, l)| {
                l.numerator
                    .warning
                    .iter()
                    .chain(l.denominator.warning.iter())
                    .map(move |w| (j + 1, w))
            })
            .collect()
    }
}

/// Π_j L_S(a_j s, r_j) / L_S(1 + a_j s, r_j), the scalar part of the
/// constant-term operator.
pub fn constant_term_ratio(spec: &RatioSpec, s: ComplexValue, max_q: u64) -> Result<RatioReport> {
    let mut value = ComplexValue::new(1.0, 0.0);
    let mut levels = Vec::with_capacity(spec.m());
    for (j, level) in spec.levels().iter().enumerate() {
        let wrap = |e| Error::Level {
            index: j + 1,
            source: Box::new(e),
        };
        let arg = s * level.a as f64;
        let numerator = partial_l(&level.data, arg, max_q).map_err(wrap)?;
        let denominator = partial_l(&level.data, arg + 1.0, max_q).map_err(wrap)?;
        value *= numerator.value / denominator.value;
        levels.push(LevelReport {
            a: level.a,
            numerator,
            denominator,
        });
    }
    Ok(RatioReport {
        value: finite(value, "constant_term_ratio", s)?,
        levels,
    })
}
