//! Complex special functions: Γ, ζ, the completed ξ, divisor power sums
//! σ_s(n) and the modified Bessel function K_ν(y).
//!
//! | function | method | accuracy |
//! |----------|--------|----------|
//! | [`gamma`] | Lanczos (g = 7, 9 terms), reflection for Re(s) < 1/2 | rel. 1e-12 for \|s\| ≤ 50 |
//! | [`zeta`] | Euler–Maclaurin for Re(s) ≥ 0, reflection for Re(s) < 0 | abs. 1e-12 for \|Im s\| ≤ 50 |
//! | [`xi_completed`] | π^{-s/2} Γ(s/2) ζ(s), pole-free rearrangement for Re(s) < 0 | reflection holds to 1e-10 |
//! | [`sigma_power`] | factorization + geometric sums | rounding only |
//! | [`bessel_k`] | trapezoid rule on ∫₀^∞ e^{-y cosh t} cosh(νt) dt | abs. 1e-12 (relative for real ν) |
//!
//! Poles are refused: any argument within [`POLE_RADIUS`] of a pole yields
//! [`Error::Pole`](crate::Error::Pole). No public function returns a NaN or
//! infinite component; overflow is reported as [`Error::Overflow`](crate::Error::Overflow).

mod bessel;
mod divisor;
mod gamma;
mod zeta;

use serde::{Deserialize, Serialize};

pub use bessel::{bessel_k, bessel_k_with};
pub use divisor::sigma_power;
pub use gamma::{cos_pi, gamma, sin_pi};
pub use zeta::{bernoulli_ratio, xi_completed, xi_completed_with, zeta, zeta_with};

use crate::error::{Error, Result};

/// Complex scalar used for arguments and values throughout the crate.
pub type ComplexValue = num_complex::Complex64;

/// Exclusion radius around the poles of Γ, ζ and ξ.
pub const POLE_RADIUS: f64 = 1e-9;

/// Error targets for the series and quadratures in this module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AccuracyPolicy {
    pub target_abs_error: f64,
    pub target_rel_error: f64,
    /// Upper bound on series terms / quadrature nodes before giving up.
    pub max_terms: usize,
}

impl Default for AccuracyPolicy {
    fn default() -> Self {
        Self {
            target_abs_error: 1e-16,
            target_rel_error: 1e-15,
            max_terms: 1 << 20,
        }
    }
}

impl AccuracyPolicy {
    pub fn new(target_abs_error: f64, target_rel_error: f64, max_terms: usize) -> Result<Self> {
        let p = Self {
            target_abs_error,
            target_rel_error,
            max_terms,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let in_unit = |e: f64| e > 0.0 && e < 1.0;
        if !in_unit(self.target_abs_error) || !in_unit(self.target_rel_error) {
            return Err(Error::Domain(format!(
                "accuracy targets must lie in (0, 1), got abs={} rel={}",
                self.target_abs_error, self.target_rel_error
            )));
        }
        if self.max_terms < 8 {
            return Err(Error::Domain(format!(
                "max_terms must be at least 8, got {}",
                self.max_terms
            )));
        }
        Ok(())
    }
}

pub(crate) fn check_finite_arg(s: ComplexValue, function: &'static str) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{function}: non-finite argument {s}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn policy_validation() {
        assert!(AccuracyPolicy::default().validate().is_ok());
        assert!(AccuracyPolicy::new(0.0, 1e-10, 100).is_err());
        assert!(AccuracyPolicy::new(1e-10, 1.0, 100).is_err());
        assert!(AccuracyPolicy::new(1e-10, 1e-10, 7).is_err());
        assert!(AccuracyPolicy::new(1e-10, 1e-10, 8).is_ok());
    }
}
