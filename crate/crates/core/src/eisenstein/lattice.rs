use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{HalfPlanePoint, SpectralParameter, TruncationPolicy};
use crate::arith::gcd;
use crate::error::{finite, Error, Result};
use crate::special::ComplexValue;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeEvaluation {
    pub value: ComplexValue,
    /// Upper bound on the omitted part of the sum outside the box.
    pub tail_bound: f64,
}

/// One raw lattice term y^s / |mz + n|^{2s}.
pub fn lattice_pair_term(
    z: &HalfPlanePoint,
    s: ComplexValue,
    m: i64,
    n: i64,
) -> Result<ComplexValue> {
    if m == 0 && n == 0 {
        return Err(Error::Domain(
            "the pair (0, 0) is excluded from the lattice sum".into(),
        ));
    }
    let norm_sq = squared_norm(z, m, n);
    finite(power(z.y() / norm_sq, s), "lattice term", s)
}

fn squared_norm(z: &HalfPlanePoint, m: i64, n: i64) -> f64 {
    let re = m as f64 * z.x() + n as f64;
    let im = m as f64 * z.y();
    re * re + im * im
}

/// base^s for base > 0.
#[inline]
fn power(base: f64, s: ComplexValue) -> ComplexValue {
    if s.im == 0.0 {
        ComplexValue::new(base.powf(s.re), 0.0)
    } else {
        let w = base.ln();
        ComplexValue::from_polar((s.re * w).exp(), s.im * w)
    }
}

/// Smallest eigenvalue of the Gram form |mz + n|² in (m, n).
fn gram_min_eigenvalue(z: &HalfPlanePoint) -> f64 {
    let a = z.x() * z.x() + z.y() * z.y();
    let b = z.x();
    let trace = a + 1.0;
    let disc = ((a - 1.0) * (a - 1.0) + 4.0 * b * b).sqrt();
    // λ_min = det / λ_max avoids cancellation; det = y².
    z.y() * z.y() / (0.5 * (trace + disc))
}

/// E(z, s) as the coprime lattice sum over the box max(|m|, |n|) ≤ R.
///
/// One representative of each ±(m, n) class is kept: pairs with m ≥ 1
/// plus (0, 1). The omitted terms satisfy |mz+n|² ≥ λ max(|m|,|n|)²
/// with λ the smallest eigenvalue of the Gram form, and there are 4k
/// representatives on the ring max = k, so the tail is at most
/// 4 y^σ λ^{-σ} R^{2-2σ} / (2σ - 2).
///
/// Rows m are summed in parallel and then combined in ascending order,
/// so the result does not depend on thread scheduling.
pub fn eval_lattice_sum(
    z: &HalfPlanePoint,
    s: &SpectralParameter,
    t: &TruncationPolicy,
) -> Result<LatticeEvaluation> {
    t.validate()?;
    let sv = s.value();
    if sv.re.is_nan() || sv.re <= 1.0 {
        return Err(Error::Divergence(format!(
            "lattice sum for E(z, s) needs Re(s) > 1, got s = {sv}"
        )));
    }
    let radius = t.lattice_radius as i64;
    let y = z.y();

    let rows: Vec<ComplexValue> = (1..=radius)
        .into_par_iter()
        .map(|m| {
            let mut row = ComplexValue::new(0.0, 0.0);
            for n in -radius..=radius {
                if gcd(m as u64, n.unsigned_abs()) != 1 {
                    continue;
                }
                row += power(y / squared_norm(z, m, n), sv);
            }
            row
        })
        .collect();
    let mut value = power(y, sv);
    for row in rows {
        value += row;
    }

    let sigma = sv.re;
    let lambda = gram_min_eigenvalue(z);
    let tail_bound = 4.0 * (y / lambda).powf(sigma) * (radius as f64).powf(2.0 - 2.0 * sigma)
        / (2.0 * sigma - 2.0);
    Ok(LatticeEvaluation {
        value: finite(value, "eval_lattice_sum", sv)?,
        tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy(radius: u32) -> TruncationPolicy {
        TruncationPolicy::default().with_lattice_radius(radius)
    }

    #[test]
    fn real_at_i_for_real_s() {
        let z = HalfPlanePoint::new(0.0, 1.0).unwrap();
        let e = eval_lattice_sum(&z, &SpectralParameter::real(2.5), &policy(200)).unwrap();
        assert!(e.value.im.abs() < 1e-14);
        assert!(e.value.re > 2.0);
    }

    #[test]
    fn m_zero_pairs_contribute_twice_y_to_the_s() {
        let z = HalfPlanePoint::new(0.3, 1.7).unwrap();
        let s = ComplexValue::new(2.2, 0.7);
        let both =
            lattice_pair_term(&z, s, 0, 1).unwrap() + lattice_pair_term(&z, s, 0, -1).unwrap();
        let expected = ComplexValue::new(1.7, 0.0).powc(s) * 2.0;
        assert!((both - expected).norm() < 1e-14);
        assert!(lattice_pair_term(&z, s, 0, 0).is_err());
    }

    #[test]
    fn divergence_refused() {
        let z = HalfPlanePoint::new(0.0, 1.0).unwrap();
        for s in [0.8, 1.0, -2.0] {
            let err = eval_lattice_sum(&z, &SpectralParameter::real(s), &policy(20)).unwrap_err();
            assert!(matches!(err, Error::Divergence(_)));
        }
        let s = SpectralParameter::new(ComplexValue::new(1.0, 5.0));
        assert!(matches!(
            eval_lattice_sum(&z, &s, &policy(20)),
            Err(Error::Divergence(_))
        ));
    }

    #[test]
    fn tail_bound_dominates_truncation_change() {
        let z = HalfPlanePoint::new(-0.4, 0.8).unwrap();
        let s = SpectralParameter::real(2.2);
        let coarse = eval_lattice_sum(&z, &s, &policy(100)).unwrap();
        let fine = eval_lattice_sum(&z, &s, &policy(800)).unwrap();
        let change = (fine.value - coarse.value).norm();
        assert!(
            change <= coarse.tail_bound,
            "{change} vs {}",
            coarse.tail_bound
        );
        assert!(fine.tail_bound < coarse.tail_bound / 100.0);
    }

    #[test]
    fn periodic_within_tail_bound() {
        let s = SpectralParameter::new(ComplexValue::new(3.0, 1.0));
        let z = HalfPlanePoint::new(0.3, 1.2).unwrap();
        let a = eval_lattice_sum(&z, &s, &policy(300)).unwrap();
        let b = eval_lattice_sum(&z.translate(1.0), &s, &policy(300)).unwrap();
        assert!((a.value - b.value).norm() <= 2.0 * a.tail_bound);
    }

    #[test]
    fn deterministic() {
        let z = HalfPlanePoint::new(0.1, 0.9).unwrap();
        let s = SpectralParameter::new(ComplexValue::new(2.5, -1.0));
        let a = eval_lattice_sum(&z, &s, &policy(150)).unwrap();
        let b = eval_lattice_sum(&z, &s, &policy(150)).unwrap();
        assert_eq!(a, b);
    }
}
