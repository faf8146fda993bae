use std::f64::consts::PI;

use super::gamma::{gamma, sin_pi};
use super::{check_finite_arg, AccuracyPolicy, ComplexValue, POLE_RADIUS};
use crate::error::{finite, Error, Result};

/// Bernoulli numbers B_2, B_4, …, B_34 as (numerator, denominator).
const BERNOULLI_EVEN: [(f64, f64); 17] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43_867.0, 798.0),
    (-174_611.0, 330.0),
    (854_513.0, 138.0),
    (-236_364_091.0, 2730.0),
    (8_553_103.0, 6.0),
    (-23_749_461_029.0, 870.0),
    (8_615_841_276_005.0, 14_322.0),
    (-7_709_321_041_217.0, 510.0),
    (2_577_687_858_367.0, 6.0),
];

/// B_{2k} / (2k)! for k = 1..=17.
pub fn bernoulli_ratio(k: usize) -> f64 {
    assert!(
        (1..=BERNOULLI_EVEN.len()).contains(&k),
        "bernoulli_ratio: k={k} out of table"
    );
    let (num, den) = BERNOULLI_EVEN[k - 1];
    let factorial: f64 = (1..=2 * k).map(|i| i as f64).product();
    num / den / factorial
}

/// Magnitude of the first omitted Euler–Maclaurin correction, used as the
/// remainder estimate.
fn em_remainder(s: ComplexValue, n: f64) -> f64 {
    let k = BERNOULLI_EVEN.len();
    let rising: f64 = (0..2 * k - 1).map(|j| (s + j as f64).norm()).product();
    bernoulli_ratio(k).abs() * rising * n.powf(-s.re - (2 * k) as f64 + 1.0)
}

/// Euler–Maclaurin summation with N direct terms and 16 Bernoulli corrections.
fn zeta_euler_maclaurin(s: ComplexValue, policy: &AccuracyPolicy) -> Result<ComplexValue> {
    let mut n = 8usize;
    while em_remainder(s, n as f64) > policy.target_abs_error {
        if n >= policy.max_terms {
            return Err(Error::NoConvergence(format!(
                "zeta: Euler-Maclaurin needs more than {} terms at s = {s}",
                policy.max_terms
            )));
        }
        n = (n + n / 4 + 1).min(policy.max_terms);
    }

    let big_n = n as f64;
    // Direct part, summed from the small end up.
    let mut sum = ComplexValue::new(0.0, 0.0);
    for k in (1..n).rev() {
        sum += (-s * (k as f64).ln()).exp();
    }
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp();
    sum += n_pow * big_n / (s - 1.0);
    sum += n_pow * 0.5;

    // Σ_k B_2k/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s;
    let mut power = n_pow / big_n;
    for k in 1..BERNOULLI_EVEN.len() {
        sum += bernoulli_ratio(k) * rising * power;
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        power /= big_n * big_n;
    }
    Ok(sum)
}

/// Riemann ζ(s), analytically continued.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    zeta_with(s, &AccuracyPolicy::default())
}

pub fn zeta_with(s: ComplexValue, policy: &AccuracyPolicy) -> Result<ComplexValue> {
    check_finite_arg(s, "zeta")?;
    if (s - 1.0).norm() <= POLE_RADIUS {
        return Err(Error::Pole {
            function: "zeta",
            at: s,
        });
    }
    let value = if s.re < 0.0 {
        // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
        let one_minus = 1.0 - s;
        let two = ComplexValue::new(2.0, 0.0);
        let pi = ComplexValue::new(PI, 0.0);
        two.powc(s)
            * pi.powc(s - 1.0)
            * sin_pi(s / 2.0)
            * gamma(one_minus)?
            * zeta_euler_maclaurin(one_minus, policy)?
    } else {
        zeta_euler_maclaurin(s, policy)?
    };
    finite(value, "zeta", s)
}

/// Completed zeta ξ(s) = π^{-s/2} Γ(s/2) ζ(s), with poles at 0 and 1.
pub fn xi_completed(s: ComplexValue) -> Result<ComplexValue> {
    xi_completed_with(s, &AccuracyPolicy::default())
}

pub fn xi_completed_with(s: ComplexValue, policy: &AccuracyPolicy) -> Result<ComplexValue> {
    check_finite_arg(s, "xi")?;
    if s.norm() <= POLE_RADIUS || (s - 1.0).norm() <= POLE_RADIUS {
        return Err(Error::Pole {
            function: "xi",
            at: s,
        });
    }
    let pi = ComplexValue::new(PI, 0.0);
    let value = if s.re >= 0.0 {
        pi.powc(-s / 2.0) * gamma(s / 2.0)? * zeta_with(s, policy)?
    } else {
        // Γ(s/2) has poles at the trivial zeros of ζ. Folding the ζ
        // reflection formula and Γ(s/2)Γ(1-s/2) = π/sin(πs/2) together gives
        // ξ(s) = 2^s π^{s/2} Γ(1-s) ζ(1-s) / Γ(1-s/2), which is regular here.
        let two = ComplexValue::new(2.0, 0.0);
        let one_minus = 1.0 - s;
        two.powc(s)
            * pi.powc(s / 2.0)
            * gamma(one_minus)?
            * zeta_euler_maclaurin(one_minus, policy)?
            / gamma(1.0 - s / 2.0)?
    };
    finite(value, "xi", s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    /// Σ_{n≤N} n^{-2} plus the integral tail 1/N - 1/(2N²) + 1/(6N³).
    fn zeta2_series_oracle() -> f64 {
        let n = 1_000_000u64;
        let mut sum = 0.0;
        for k in (1..=n).rev() {
            sum += 1.0 / (k as f64 * k as f64);
        }
        let nf = n as f64;
        sum + 1.0 / nf - 1.0 / (2.0 * nf * nf) + 1.0 / (6.0 * nf * nf * nf)
    }

    /// Higher-order Euler–Maclaurin with Bernoulli numbers from the
    /// recurrence Σ_{k<n+1} C(n+1,k) B_k = 0, real s only.
    fn zeta_em_oracle(s: f64) -> f64 {
        let order = 24;
        let mut b = vec![0.0f64; order + 1];
        b[0] = 1.0;
        for m in 1..=order {
            let mut acc = 0.0;
            let mut binom = 1.0; // C(m+1, k)
            for (k, bk) in b.iter().enumerate().take(m) {
                acc += binom * bk;
                binom = binom * (m + 1 - k) as f64 / (k + 1) as f64;
            }
            b[m] = -acc / (m + 1) as f64;
        }
        let n = 200.0f64;
        let mut sum: f64 = (1..200).map(|k| (k as f64).powf(-s)).sum();
        sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
        let mut fact = 1.0;
        let mut rising = 1.0;
        for k in 1..=order / 2 {
            fact *= (2 * k - 1) as f64 * (2 * k) as f64;
            rising *= if k == 1 {
                s
            } else {
                (s + (2 * k - 3) as f64) * (s + (2 * k - 2) as f64)
            };
            sum += b[2 * k] / fact * rising * n.powf(-s - (2 * k) as f64 + 1.0);
        }
        sum
    }

    fn euler_product_oracle(s: f64, bound: u64) -> f64 {
        crate::arith::primes_up_to(bound)
            .iter()
            .map(|&p| 1.0 / (1.0 - (p as f64).powf(-s)))
            .product()
    }

    #[test]
    fn bernoulli_table_matches_zeta_even() {
        // B_2k/(2k)! = (-1)^{k+1} 2 ζ(2k) / (2π)^{2k}
        for k in 2..=17 {
            let p = 2 * k as i32;
            let n = 2000.0f64;
            let head: f64 = (1..2000).rev().map(|n| (n as f64).powi(-p)).sum();
            // Euler–Maclaurin tail Σ_{m≥N} m^{-p}
            let tail = n.powi(1 - p) / (p - 1) as f64
                + 0.5 * n.powi(-p)
                + p as f64 * n.powi(-p - 1) / 12.0;
            let z = head + tail;
            let expected =
                (if k % 2 == 1 { 2.0 } else { -2.0 }) * z / (2.0 * PI).powi(2 * k as i32);
            assert!(
                (bernoulli_ratio(k) - expected).abs() <= 1e-13 * expected.abs(),
                "k={k}"
            );
        }
        assert_eq!(bernoulli_ratio(1), 1.0 / 12.0);
    }

    #[test]
    fn zeta_two_against_series() {
        let oracle = zeta2_series_oracle();
        assert!((oracle - 1.644_934_066_848_23).abs() < 1e-12);
        assert!((zeta(c(2.0, 0.0)).unwrap().re - oracle).abs() < 1e-12);
    }

    #[test]
    fn zeta_zero_against_em_oracle() {
        let oracle = zeta_em_oracle(0.0);
        assert!((oracle + 0.5).abs() < 1e-12);
        assert!((zeta(c(0.0, 0.0)).unwrap().re - oracle).abs() < 1e-12);
        for &s in &[0.5, 0.25, 3.5, -0.0] {
            assert!(
                (zeta(c(s, 0.0)).unwrap().re - zeta_em_oracle(s)).abs() < 1e-12,
                "s={s}"
            );
        }
    }

    #[test]
    fn zeta_three_against_euler_product() {
        let oracle = euler_product_oracle(3.0, 100_000);
        assert!((zeta(c(3.0, 0.0)).unwrap().re - oracle).abs() < 1e-10);
    }

    #[test]
    fn euler_product_consistency_with_tail_bound() {
        // Σ_{p>P} p^{-s} ≤ Σ_{n>P} n^{-s} ≤ P^{1-s}/(s-1) bounds log ζ - log(product).
        let bound = 100_000u64;
        for s in [2.0, 3.0, 4.0] {
            let z = zeta(c(s, 0.0)).unwrap().re;
            let prod = euler_product_oracle(s, bound);
            let tail = (bound as f64).powf(1.0 - s) / (s - 1.0);
            // plus rounding from ~10^4 multiplications
            assert!((z / prod).ln().abs() <= 1.1 * tail + 1e-12, "s={s}");
        }
    }

    #[test]
    fn zeta_negative_half_plane() {
        assert!((zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-14);
        assert!(zeta(c(-2.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((zeta(c(-3.0, 0.0)).unwrap().re - 1.0 / 120.0).abs() < 1e-14);
        // continuity across the Re(s) = 0 seam
        let left = zeta(c(-1e-12, 3.0)).unwrap();
        let right = zeta(c(1e-12, 3.0)).unwrap();
        assert!((left - right).norm() < 1e-10);
    }

    #[test]
    fn zeta_known_complex_values() {
        // first nontrivial zero
        let rho = c(0.5, 14.134_725_141_734_695);
        assert!(zeta(rho).unwrap().norm() < 1e-12);
        // ζ(1/2 + 50i), 30-digit reference value
        let v = zeta(c(0.5, 50.0)).unwrap();
        assert!(
            (v - c(-0.081_712_108_320_979_98, 0.330_792_194_038_661_3)).norm() < 1e-12,
            "{v}"
        );
    }

    #[test]
    fn pole_at_one() {
        assert!(matches!(zeta(c(1.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(zeta(c(1.0, 5e-10)), Err(Error::Pole { .. })));
        assert!(zeta(c(1.0 + 1e-6, 0.0)).is_ok());
    }

    #[test]
    fn xi_values() {
        let v = xi_completed(c(2.0, 0.0)).unwrap();
        assert!((v.re - PI / 6.0).abs() < 1e-12 && v.im.abs() < 1e-15);
        // π^{-1/4} Γ(1/4) ζ(1/2) composed from independent oracle constants
        let composed = PI.powf(-0.25) * 3.625_609_908_221_908 * -1.460_354_508_809_586_8;
        let v = xi_completed(c(0.5, 0.0)).unwrap();
        assert!((v.re - composed).abs() < 1e-12);
        assert!((v.re + 3.976_966_225_506_513).abs() < 1e-12);
        let a = xi_completed(c(0.3, 2.0)).unwrap();
        let b = xi_completed(c(0.7, -2.0)).unwrap();
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn xi_poles_and_trivial_zero_cancellation() {
        assert!(matches!(xi_completed(c(0.0, 0.0)), Err(Error::Pole { .. })));
        assert!(matches!(xi_completed(c(1.0, 0.0)), Err(Error::Pole { .. })));
        // Γ(s/2) poles at s = -2, -4 cancel against trivial zeros of ζ.
        for k in 1..5 {
            let s = c(-2.0 * k as f64, 0.0);
            let lhs = xi_completed(s).unwrap();
            let rhs = xi_completed(1.0 - s).unwrap();
            assert!((lhs - rhs).norm() < 1e-12, "k={k}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn xi_reflection(r in 0.0f64..10.0, theta in 0.0f64..std::f64::consts::TAU) {
            let s = ComplexValue::from_polar(r, theta);
            prop_assume!(s.norm() >= 0.1 && (s - 1.0).norm() >= 0.1);
            let d = (xi_completed(s).unwrap() - xi_completed(1.0 - s).unwrap()).norm();
            prop_assert!(d < 1e-10, "s={} defect={}", s, d);
        }

        #[test]
        fn zeta_conjugate_symmetry(re in -5.0f64..5.0, im in 0.1f64..50.0) {
            let s = c(re, im);
            let d = (zeta(s.conj()).unwrap() - zeta(s).unwrap().conj()).norm();
            prop_assert!(d < 1e-12);
        }

        #[test]
        fn gamma_recursion(re in -20.0f64..20.0, im in -20.0f64..20.0) {
            let s = c(re, im);
            prop_assume!((s - s.re.round()).norm() > 1e-3);
            let lhs = gamma(s + 1.0).unwrap();
            let rhs = s * gamma(s).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-10 * lhs.norm());
        }
    }
}
