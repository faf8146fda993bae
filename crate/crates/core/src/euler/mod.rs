//! Partial L-functions L_S(s, π, ρ) = Π_{v∉S} det(I − ρ(t_v) q_v^{-s})^{-1}
//! over caller-supplied unramified data, and the scalar constant-term ratio
//! Π_j L(a_j s)/L(1 + a_j s).
//!
//! A Satake class enters only through the spectrum of ρ(t_v), so it is
//! stored as an eigenvalue multiset. Local factors at places in S
//! (archimedean, ramified) are not modelled; S is carried as a label.

mod crude;
mod ingest;
mod product;

use serde::{Deserialize, Serialize};

pub use crude::{crude_equation_descriptor, AffineArg, CrudeEquation, CrudeTerm, Representation};
pub use ingest::{parse_place_data, write_place_data};
pub use product::{
    constant_term_ratio, local_factor, partial_l, ConvergenceWarning, LevelReport, PartialL,
    RatioReport, CONVERGENCE_MARGIN, FACTOR_EXCLUSION,
};

use crate::arith::{prime_power, primes_up_to};
use crate::error::{Error, Result};
use crate::special::ComplexValue;

/// Eigenvalues of ρ(t_v), with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SatakeClass {
    eigenvalues: Vec<ComplexValue>,
}

impl SatakeClass {
    pub fn new(eigenvalues: Vec<ComplexValue>) -> Result<Self> {
        if eigenvalues.is_empty() {
            return Err(Error::Domain(
                "a Satake class needs at least one eigenvalue".into(),
            ));
        }
        for &lambda in &eigenvalues {
            if !(lambda.re.is_finite() && lambda.im.is_finite())
                || lambda == ComplexValue::new(0.0, 0.0)
            {
                return Err(Error::Domain(format!(
                    "Satake eigenvalue {lambda} must be finite and nonzero"
                )));
            }
        }
        Ok(Self { eigenvalues })
    }

    /// The identity class of a `dim`-dimensional representation.
    pub fn trivial(dim: usize) -> Self {
        Self {
            eigenvalues: vec![ComplexValue::new(1.0, 0.0); dim.max(1)],
        }
    }

    pub fn eigenvalues(&self) -> &[ComplexValue] {
        &self.eigenvalues
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// One unramified place: residue field size q and the class ρ(t_v).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlaceDatum {
    q: u64,
    satake: SatakeClass,
}

impl PlaceDatum {
    pub fn new(q: u64, satake: SatakeClass) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::Domain(format!("q = {q} is not a prime power")));
        }
        Ok(Self { q, satake })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn satake(&self) -> &SatakeClass {
        &self.satake
    }
}

/// Unramified data of one L-function: places outside S, sorted by q.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LFunctionData {
    places: Vec<PlaceDatum>,
    excluded_set_label: String,
}

impl LFunctionData {
    /// Sorts places by q (stable) and checks that all classes have one dimension.
    pub fn new(mut places: Vec<PlaceDatum>, excluded_set_label: impl Into<String>) -> Result<Self> {
        if let Some(first) = places.first() {
            let dim = first.satake.dim();
            if let Some(bad) = places.iter().find(|p| p.satake.dim() != dim) {
                return Err(Error::Domain(format!(
                    "Satake class at q = {} has dimension {}, expected {dim}",
                    bad.q,
                    bad.satake.dim()
                )));
            }
        }
        places.sort_by_key(|p| p.q);
        Ok(Self {
            places,
            excluded_set_label: excluded_set_label.into(),
        })
    }

    /// Identity classes of dimension `dim` at every prime p < `bound`; with
    /// dim = 1 this is the Euler product of ζ.
    pub fn trivial(bound: u64, dim: usize) -> Self {
        let places = primes_up_to(bound.saturating_sub(1))
            .into_iter()
            .map(|p| PlaceDatum {
                q: p,
                satake: SatakeClass::trivial(dim),
            })
            .collect();
        Self {
            places,
            excluded_set_label: "{inf}".into(),
        }
    }

    pub fn places(&self) -> &[PlaceDatum] {
        &self.places
    }

    pub fn excluded_set_label(&self) -> &str {
        &self.excluded_set_label
    }

    /// dim ρ, or `None` for empty data.
    pub fn dim(&self) -> Option<usize> {
        self.places.first().map(|p| p.satake.dim())
    }
}

/// One level j of the constant-term ratio: the integer a_j and the data of r_j.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioLevel {
    pub a: u32,
    pub data: LFunctionData,
}

/// Largest number of levels m accepted in a [`RatioSpec`].
pub const MAX_LEVELS: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSpec {
    levels: Vec<RatioLevel>,
}

impl RatioSpec {
    pub fn new(levels: Vec<RatioLevel>) -> Result<Self> {
        if levels.is_empty() || levels.len() > MAX_LEVELS {
            return Err(Error::Domain(format!(
                "a ratio needs 1..={MAX_LEVELS} levels, got {}",
                levels.len()
            )));
        }
        if levels[0].a == 0 {
            return Err(Error::Domain("a_1 must be positive".into()));
        }
        if levels.windows(2).any(|w| w[0].a >= w[1].a) {
            return Err(Error::Domain("a_j must be strictly increasing".into()));
        }
        Ok(Self { levels })
    }

    pub fn levels(&self) -> &[RatioLevel] {
        &self.levels
    }

    pub fn m(&self) -> usize {
        self.levels.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> ComplexValue {
        ComplexValue::new(1.0, 0.0)
    }

    #[test]
    fn satake_validation() {
        assert!(SatakeClass::new(vec![]).is_err());
        assert!(SatakeClass::new(vec![one(), ComplexValue::new(0.0, 0.0)]).is_err());
        assert!(SatakeClass::new(vec![ComplexValue::new(f64::INFINITY, 0.0)]).is_err());
        assert_eq!(SatakeClass::trivial(3).dim(), 3);
    }

    #[test]
    fn place_requires_prime_power() {
        let c = SatakeClass::trivial(1);
        for q in [2, 3, 4, 8, 9, 25, 49, 1 << 40] {
            assert!(PlaceDatum::new(q, c.clone()).is_ok(), "{q}");
        }
        for q in [0, 1, 6, 12, 100] {
            assert!(PlaceDatum::new(q, c.clone()).is_err(), "{q}");
        }
    }

    #[test]
    fn data_sorted_and_dimension_checked() {
        let p = |q, d| PlaceDatum::new(q, SatakeClass::trivial(d)).unwrap();
        let data = LFunctionData::new(vec![p(7, 2), p(2, 2), p(4, 2)], "S").unwrap();
        let qs: Vec<u64> = data.places().iter().map(|p| p.q()).collect();
        assert_eq!(qs, vec![2, 4, 7]);
        assert_eq!(data.dim(), Some(2));
        assert!(LFunctionData::new(vec![p(2, 1), p(3, 2)], "S").is_err());
        assert_eq!(LFunctionData::new(vec![], "S").unwrap().dim(), None);
    }

    #[test]
    fn trivial_data_uses_primes_below_bound() {
        let data = LFunctionData::trivial(100, 1);
        assert_eq!(data.places().len(), 25);
        assert_eq!(data.places().last().unwrap().q(), 97);
        assert_eq!(LFunctionData::trivial(7, 1).places().len(), 3);
    }

    #[test]
    fn ratio_spec_validation() {
        let level = |a| RatioLevel {
            a,
            data: LFunctionData::trivial(10, 1),
        };
        assert!(RatioSpec::new(vec![]).is_err());
        assert!(RatioSpec::new(vec![level(0)]).is_err());
        assert!(RatioSpec::new(vec![level(2), level(1)]).is_err());
        assert!(RatioSpec::new(vec![level(1), level(1)]).is_err());
        assert!(RatioSpec::new((1..=9).map(level).collect()).is_err());
        assert_eq!(RatioSpec::new(vec![level(1), level(2)]).unwrap().m(), 2);
    }
}
