use super::{check_finite_arg, AccuracyPolicy, ComplexValue};
use crate::error::{finite, Error, Result};

/// Largest |ν| accepted by [`bessel_k`].
pub const MAX_ORDER: f64 = 100.0;

/// K_ν(y) for complex order ν and real y > 0.
///
/// Computed from K_ν(y) = ∫₀^∞ e^{-y cosh t} cosh(νt) dt. The integrand
/// decays double exponentially, so the plain trapezoid rule converges
/// geometrically in the number of nodes; the step is halved until two
/// successive sums agree. The integrand is evaluated relative to its peak
/// e^{φ*} (φ(t) = |Re ν| t − y(cosh t − 1)), so the result keeps relative
/// accuracy for real orders even when K_ν(y) is far below 1.
///
/// For complex orders with large imaginary part the value is the difference
/// of oscillating contributions and only absolute accuracy (about 1e-15
/// times the peak of the integrand) is attained.
pub fn bessel_k(order: ComplexValue, y: f64) -> Result<ComplexValue> {
    bessel_k_with(order, y, &AccuracyPolicy::default())
}

pub fn bessel_k_with(order: ComplexValue, y: f64, policy: &AccuracyPolicy) -> Result<ComplexValue> {
    check_finite_arg(order, "bessel_k")?;
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::Domain(format!(
            "bessel_k: argument y = {y} must be positive and finite"
        )));
    }
    if order.norm() > MAX_ORDER {
        return Err(Error::Domain(format!(
            "bessel_k: |order| = {} exceeds {MAX_ORDER}",
            order.norm()
        )));
    }

    let a = order.re.abs();
    let exponent = |t: f64| {
        let half = (0.5 * t).sinh();
        a * t - 2.0 * y * half * half
    };
    let t_peak = (a / y).asinh();
    let peak = exponent(t_peak);

    // Truncation: iterate T ← arccosh(1 + (aT + L - φ*)/y) until stable,
    // i.e. the integrand has dropped by e^{-L} below its peak.
    let drop = policy
        .target_abs_error
        .min(policy.target_rel_error)
        .recip()
        .ln()
        + 8.0;
    let mut cutoff = t_peak.max(1.0);
    for _ in 0..100 {
        let next = (1.0 + (a * cutoff + drop - peak) / y).acosh();
        if (next - cutoff).abs() <= 1e-12 * cutoff {
            cutoff = next;
            break;
        }
        cutoff = next;
    }
    if !cutoff.is_finite() {
        return Err(Error::NoConvergence(format!(
            "bessel_k: truncation point for order {order}, y = {y}"
        )));
    }

    let integrand = |t: f64| {
        let half = (0.5 * t).sinh();
        let damp = -2.0 * y * half * half - peak;
        let plus = (order * t + damp).exp();
        let minus = (-order * t + damp).exp();
        (plus + minus) * 0.5
    };

    // Trapezoid on [0, T] with f(0) halved; each halving reuses previous nodes.
    // The starting step resolves cosh(νt)'s oscillation so that two
    // consecutive sums cannot agree through aliasing.
    let max_step = 1.0 / (1.0 + order.im.abs());
    let mut intervals = ((cutoff / max_step).ceil() as usize).max(16);
    let mut h = cutoff / intervals as f64;
    let mut sum = integrand(0.0) * 0.5 + integrand(cutoff) * 0.5;
    let mut magnitude = sum.norm();
    for k in 1..intervals {
        let f = integrand(k as f64 * h);
        sum += f;
        magnitude += f.norm();
    }
    let mut estimate = sum * h;
    loop {
        if 2 * intervals > policy.max_terms {
            return Err(Error::NoConvergence(format!(
                "bessel_k: quadrature for order {order}, y = {y} exceeds {} nodes",
                policy.max_terms
            )));
        }
        h *= 0.5;
        for k in 0..intervals {
            let f = integrand((2 * k + 1) as f64 * h);
            sum += f;
            magnitude += f.norm();
        }
        intervals *= 2;
        let refined = sum * h;
        let scale = (magnitude * h).max(refined.norm());
        let change = (refined - estimate).norm();
        estimate = refined;
        // Convergence is quadratic in the error: once consecutive sums agree to
        // ~1e-9 the refined sum is accurate to rounding.
        if change <= policy.target_rel_error.sqrt() * 0.03 * scale {
            break;
        }
    }

    let scale_exp = peak - y;
    if scale_exp > 709.0 {
        return Err(Error::Overflow {
            function: "bessel_k",
            at: order,
        });
    }
    finite(estimate * scale_exp.exp(), "bessel_k", order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn real(order: f64, y: f64) -> f64 {
        bessel_k(ComplexValue::new(order, 0.0), y).unwrap().re
    }

    /// Composite Simpson on ∫₀^T e^{-y cosh t} cosh(νt) dt, real order.
    fn simpson_oracle(order: f64, y: f64, panels: usize) -> f64 {
        let t_max = 12.0;
        let h = t_max / panels as f64;
        let f = |t: f64| (-y * t.cosh()).exp() * (order * t).cosh();
        let mut s = f(0.0) + f(t_max);
        for k in 1..panels {
            s += f(k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
        }
        s * h / 3.0
    }

    #[test]
    fn half_order_closed_form() {
        let closed = |y: f64| (PI / (2.0 * y)).sqrt() * (-y).exp();
        assert!((real(0.5, 2.0) - closed(2.0)).abs() < 1e-12);
        assert!((closed(2.0) - simpson_oracle(0.5, 2.0, 40_000)).abs() < 1e-12);
        for &y in &[1e-3, 0.05, 0.5, 1.0, 5.0, 30.0, 300.0] {
            let rel = (real(0.5, y) - closed(y)).abs() / closed(y);
            assert!(rel < 1e-13, "y={y} rel={rel}");
        }
    }

    #[test]
    fn order_zero_against_simpson() {
        let coarse = simpson_oracle(0.0, 1.0, 20_000);
        let fine = simpson_oracle(0.0, 1.0, 40_000);
        assert!((coarse - fine).abs() < 1e-12);
        assert!((fine - 0.421_024_438_240_708).abs() < 1e-10);
        assert!((real(0.0, 1.0) - fine).abs() < 1e-12);
        for &(nu, y) in &[(1.0, 1.0), (2.5, 0.7), (0.3, 3.0), (4.0, 2.0)] {
            assert!(
                (real(nu, y) - simpson_oracle(nu, y, 40_000)).abs() < 1e-11,
                "{nu} {y}"
            );
        }
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn recurrence_in_order() {
        // K_{ν+1}(y) - K_{ν-1}(y) = (2ν/y) K_ν(y), also for complex ν
        for &(nu, y) in &[
            (ComplexValue::new(1.5, 0.0), 2.0),
            (ComplexValue::new(0.3, 2.0), 6.28),
            (ComplexValue::new(-1.2, 4.5), 12.0),
            (ComplexValue::new(3.0, -0.5), 0.4),
        ] {
            let kp = bessel_k(nu + 1.0, y).unwrap();
            let km = bessel_k(nu - 1.0, y).unwrap();
            let k0 = bessel_k(nu, y).unwrap();
            let lhs = kp - km;
            let rhs = k0 * nu * 2.0 / y;
            assert!(
                (lhs - rhs).norm() <= 1e-12 * kp.norm().max(1e-300),
                "{nu} {y}"
            );
        }
    }

    #[test]
    fn large_and_small_arguments() {
        // K_ν(y) ~ sqrt(π/(2y)) e^{-y} (1 + (4ν²-1)/(8y)) for large y
        let y = 700.0;
        let approx =
            (PI / (2.0 * y)).sqrt() * (-y).exp() * (1.0 + 3.0 / (8.0 * y) - 15.0 / (128.0 * y * y));
        assert!((real(1.0, y) - approx).abs() / approx < 1e-8);
        // K_ν(y) ~ Γ(ν)/2 (2/y)^ν as y → 0
        let y = 1e-6;
        let small = 0.5 * 2.0 * (2.0f64 / y).powi(3);
        assert!((real(3.0, y) - small).abs() / small < 1e-6);
        // imaginary order, modest argument
        let v = bessel_k(ComplexValue::new(0.0, 100.0), 2.0).unwrap();
        assert!(v.norm() < 1e-12, "{v}");
    }

    #[test]
    #[allow(clippy::approx_constant, clippy::excessive_precision)]
    fn complex_order_reference_values() {
        // 25-digit reference values
        let cases = [
            ((0.0, 2.0), 1.0, (0.080_616_997_622_365_98, 0.0)),
            (
                (0.3, 2.0),
                6.28,
                (6.843_536_524_617_536e-4, 6.181_295_287_814_189e-5),
            ),
            (
                (2.0, 5.0),
                0.5,
                (0.080_352_594_623_169_85, -0.037_198_275_151_161_1),
            ),
            (
                (1.5, -3.0),
                12.0,
                (1.571_001_933_072_774e-6, -5.966_720_373_718_5e-7),
            ),
        ];
        for ((re, im), y, (vre, vim)) in cases {
            let k = bessel_k(ComplexValue::new(re, im), y).unwrap();
            let expected = ComplexValue::new(vre, vim);
            assert!(
                (k - expected).norm() <= 1e-14 * expected.norm().max(1e-2),
                "{re}+{im}i, {y}: {k}"
            );
        }
    }

    #[test]
    fn domain_errors() {
        let nu = ComplexValue::new(1.0, 0.0);
        assert!(matches!(bessel_k(nu, 0.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_k(nu, -1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_k(nu, f64::NAN), Err(Error::Domain(_))));
        assert!(matches!(
            bessel_k(ComplexValue::new(101.0, 0.0), 1.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            bessel_k(ComplexValue::new(100.0, 0.0), 1e-3),
            Err(Error::Overflow { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn even_in_order(re in -10.0f64..10.0, im in -10.0f64..10.0, y in 0.05f64..40.0) {
            let nu = ComplexValue::new(re, im);
            let d = (bessel_k(nu, y).unwrap() - bessel_k(-nu, y).unwrap()).norm();
            prop_assert!(d < 1e-12);
        }
    }
}
