use std::f64::consts::PI;

use super::{check_finite_arg, ComplexValue, POLE_RADIUS};
use crate::error::{finite, Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Reduces `x` to `[-1, 1]` modulo 2 without rounding.
fn reduce_mod_2(x: f64) -> f64 {
    let r = x % 2.0;
    if r > 1.0 {
        r - 2.0
    } else if r < -1.0 {
        r + 2.0
    } else {
        r
    }
}

/// sin(πx), exactly zero at integers.
fn sin_pi_real(x: f64) -> f64 {
    let r = reduce_mod_2(x);
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

/// cos(πx), exactly zero at half-integers.
fn cos_pi_real(x: f64) -> f64 {
    let r = reduce_mod_2(x).abs();
    if r <= 0.25 {
        (PI * r).cos()
    } else {
        sin_pi_real(0.5 - r)
    }
}

/// sin(πs) with exact reduction of the real part.
pub fn sin_pi(s: ComplexValue) -> ComplexValue {
    let b = PI * s.im;
    ComplexValue::new(sin_pi_real(s.re) * b.cosh(), cos_pi_real(s.re) * b.sinh())
}

/// cos(πs) with exact reduction of the real part.
pub fn cos_pi(s: ComplexValue) -> ComplexValue {
    let b = PI * s.im;
    ComplexValue::new(cos_pi_real(s.re) * b.cosh(), -sin_pi_real(s.re) * b.sinh())
}

fn lanczos(z: ComplexValue) -> ComplexValue {
    let z = z - 1.0;
    let mut series = ComplexValue::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    ((z + 0.5) * t.ln() - t).exp() * (2.0 * PI).sqrt() * series
}

/// Γ(s) for complex `s`.
///
/// Refuses arguments within [`POLE_RADIUS`] of a nonpositive integer.
pub fn gamma(s: ComplexValue) -> Result<ComplexValue> {
    check_finite_arg(s, "gamma")?;
    let nearest = s.re.round();
    if nearest <= 0.0 && (s - nearest).norm() <= POLE_RADIUS {
        return Err(Error::Pole {
            function: "gamma",
            at: s,
        });
    }
    let value = if s.re < 0.5 {
        let reflected = lanczos(1.0 - s);
        if !(reflected.re.is_finite() && reflected.im.is_finite()) {
            // Γ(1 - s) overflowed, so Γ(s) underflows.
            ComplexValue::new(0.0, 0.0)
        } else {
            PI / (sin_pi(s) * reflected)
        }
    } else {
        lanczos(s)
    };
    finite(value, "gamma", s)
}
