use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{HalfPlanePoint, SpectralParameter, TruncationPolicy, MAX_FOURIER_TERMS};
use crate::error::{finite, Error, Result};
use crate::special::{bessel_k, sigma_power, xi_completed, ComplexValue};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FourierEvaluation {
    pub value: ComplexValue,
    /// Number N of nonzero modes 1 ≤ |n| ≤ N actually summed.
    pub terms_used: u32,
    /// Estimate of the omitted modes: the next eight computed explicitly
    /// plus a geometric remainder with ratio e^{-2πy}.
    pub tail_bound: f64,
}

/// φ(s) = ξ(2s-1)/ξ(2s), the ratio in E(z, s) = φ(s) E(z, 1-s).
pub fn scattering_ratio(s: &SpectralParameter) -> Result<ComplexValue> {
    s.check_poles()?;
    let sv = s.value();
    let numerator = xi_completed(2.0 * sv - 1.0)?;
    let denominator = xi_completed(2.0 * sv)?;
    if denominator == ComplexValue::new(0.0, 0.0) {
        return Err(Error::Pole {
            function: "scattering_ratio",
            at: sv,
        });
    }
    finite(numerator / denominator, "scattering_ratio", sv)
}

/// Per-s quantities shared by all Fourier modes.
pub(crate) struct Coefficients {
    s: ComplexValue,
    ratio: ComplexValue,
    xi_2s: ComplexValue,
}

impl Coefficients {
    pub(crate) fn new(s: &SpectralParameter) -> Result<Self> {
        let ratio = scattering_ratio(s)?;
        let sv = s.value();
        Ok(Self {
            s: sv,
            ratio,
            xi_2s: xi_completed(2.0 * sv)?,
        })
    }

    pub(crate) fn ratio(&self) -> ComplexValue {
        self.ratio
    }

    /// a_n(y, s); depends on |n| only.
    pub(crate) fn get(&self, n: i64, y: f64) -> Result<ComplexValue> {
        let s = self.s;
        if n == 0 {
            let y = ComplexValue::new(y, 0.0);
            return finite(
                y.powc(s) + self.ratio * y.powc(1.0 - s),
                "fourier_coefficient",
                s,
            );
        }
        let n = n.unsigned_abs();
        let nf = n as f64;
        let order = s - 0.5;
        let bessel = bessel_k(order, 2.0 * PI * nf * y)?;
        let divisor = sigma_power(n, 1.0 - 2.0 * s)?;
        let n_pow = (order * nf.ln()).exp();
        finite(
            n_pow * divisor * bessel * (2.0 * y.sqrt()) / self.xi_2s,
            "fourier_coefficient",
            s,
        )
    }
}

/// The n-th Fourier coefficient a_n(y, s) of E(x + iy, s):
///
/// - a_0 = y^s + φ(s) y^{1-s},
/// - a_n = 2 |n|^{s-1/2} σ_{1-2s}(|n|) √y K_{s-1/2}(2π|n|y) / ξ(2s).
pub fn fourier_coefficient(n: i64, y: f64, s: &SpectralParameter) -> Result<ComplexValue> {
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::Domain(format!(
            "fourier_coefficient: y = {y} must be positive"
        )));
    }
    Coefficients::new(s)?.get(n, y)
}

/// E(z, s) from its Fourier expansion a_0 + Σ_{1≤|n|≤N} a_n e^{2πinx}.
///
/// N starts at `t.fourier_terms` and, with escalation enabled, grows while
/// the last mode is above the tolerance.
pub fn eval_fourier(
    z: &HalfPlanePoint,
    s: &SpectralParameter,
    t: &TruncationPolicy,
) -> Result<FourierEvaluation> {
    t.validate()?;
    let coeffs = Coefficients::new(s)?;
    eval_with(&coeffs, z, t)
}

pub(crate) fn eval_with(
    coeffs: &Coefficients,
    z: &HalfPlanePoint,
    t: &TruncationPolicy,
) -> Result<FourierEvaluation> {
    let y = z.y();
    let x = z.x() - z.x().floor();
    // a_n e(nx) + a_{-n} e(-nx) = 2 a_n cos(2πnx). Escalation looks at
    // 2|a_n|, not the mode itself, which vanishes wherever cos(2πnx) = 0.
    let mut value = coeffs.get(0, y)?;
    let mut last_size = 0.0;
    let mut n = 0;
    let add_mode = |n: u32, value: &mut ComplexValue| -> Result<f64> {
        let a = coeffs.get(n as i64, y)?;
        let phase = (2.0 * PI * (n as f64 * x).fract()).cos();
        *value += a * (2.0 * phase);
        Ok(2.0 * a.norm())
    };
    while n < t.fourier_terms {
        n += 1;
        last_size = add_mode(n, &mut value)?;
    }
    if let Some(tol) = t.escalation_tolerance {
        while n < MAX_FOURIER_TERMS && last_size > tol * value.norm().max(1.0) {
            n += 1;
            last_size = add_mode(n, &mut value)?;
        }
    }

    let mut tail = 0.0;
    let mut next = 0.0;
    for k in 1..=8 {
        next = 2.0 * coeffs.get((n + k) as i64, y)?.norm();
        tail += next;
    }
    let decay = (-2.0 * PI * y).exp();
    tail += next * decay / (1.0 - decay);

    Ok(FourierEvaluation {
        value: finite(value, "eval_fourier", coeffs.s)?,
        terms_used: n,
        tail_bound: tail,
    })
}
