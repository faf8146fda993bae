use super::{check_finite_arg, ComplexValue};
use crate::arith::factorize;
use crate::error::{finite, Error, Result};

/// Largest `n` accepted by [`sigma_power`].
pub const SIGMA_MAX_N: u64 = 1_000_000_000_000;

/// σ_s(n) = Σ_{d | n} d^s.
///
/// Evaluated multiplicatively: for each p^k ∥ n the factor
/// 1 + p^s + … + p^{ks} is accumulated by Horner's rule.
pub fn sigma_power(n: u64, s: ComplexValue) -> Result<ComplexValue> {
    check_finite_arg(s, "sigma_power")?;
    if n == 0 || n > SIGMA_MAX_N {
        return Err(Error::Domain(format!(
            "sigma_power: n = {n} outside 1..=10^12"
        )));
    }
    let mut value = ComplexValue::new(1.0, 0.0);
    for (p, k) in factorize(n) {
        let ps = (s * (p as f64).ln()).exp();
        let mut factor = ComplexValue::new(1.0, 0.0);
        for _ in 0..k {
            factor = factor * ps + 1.0;
        }
        value *= factor;
    }
    finite(value, "sigma_power", s)
}
