//! Bookkeeping for the crude functional equation
//! Π_j L_S(a_j s, π̃, r_j) = Π_j L_S(1 − a_j s, π, r_j) × (factors at S).
//!
//! Only the structure is recorded. The identity needs the local factors at
//! S, which are out of reach here, so nothing numerical is asserted.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::RatioSpec;
use crate::error::{Error, Result};
use crate::special::ComplexValue;

/// The affine argument `constant + coefficient·s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineArg {
    pub constant: i64,
    pub coefficient: i64,
}

impl AffineArg {
    pub fn at(&self, s: ComplexValue) -> ComplexValue {
        s * self.coefficient as f64 + self.constant as f64
    }
}

impl fmt::Display for AffineArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s_part = match self.coefficient {
            0 => String::new(),
            1 => "s".to_string(),
            -1 => "-s".to_string(),
            c => format!("{c}s"),
        };
        match (self.constant, s_part.is_empty()) {
            (c, true) => write!(f, "{c}"),
            (0, false) => f.write_str(&s_part),
            (c, false) if s_part.starts_with('-') => write!(f, "{c}{s_part}"),
            (c, false) => write!(f, "{c}+{s_part}"),
        }
    }
}

fn parse_affine(text: &str) -> Option<AffineArg> {
    let text = text.trim();
    let Some(body) = text.strip_suffix('s') else {
        return text.parse().ok().map(|constant| AffineArg {
            constant,
            coefficient: 0,
        });
    };
    // Split at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (constant, coeff_text) = match split {
        Some(i) => (body[..i].parse().ok()?, &body[i..]),
        None => (0, body),
    };
    let coefficient = match coeff_text {
        "" | "+" => 1,
        "-" => -1,
        t => t.strip_prefix('+').unwrap_or(t).parse().ok()?,
    };
    Some(AffineArg {
        constant,
        coefficient,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    /// π itself.
    Original,
    /// The contragredient π̃.
    Contragredient,
}

impl Representation {
    fn symbol(self) -> &'static str {
        match self {
            Representation::Original => "pi",
            Representation::Contragredient => "~pi",
        }
    }

    fn from_symbol(text: &str) -> Option<Self> {
        match text {
            "pi" => Some(Representation::Original),
            "~pi" => Some(Representation::Contragredient),
            _ => None,
        }
    }
}

/// Level j: L_S(lhs, lhs_rep, r_j) on the left, L_S(rhs, rhs_rep, r_j) on the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrudeTerm {
    pub level: usize,
    pub lhs: AffineArg,
    pub lhs_rep: Representation,
    pub rhs: AffineArg,
    pub rhs_rep: Representation,
}

impl CrudeTerm {
    /// Whether the two sides use different members of the pair (π, π̃).
    pub fn is_dual(&self) -> bool {
        self.lhs_rep != self.rhs_rep
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrudeEquation {
    pub terms: Vec<CrudeTerm>,
}

pub fn crude_equation_descriptor(spec: &RatioSpec) -> CrudeEquation {
    let terms = spec
        .levels()
        .iter()
        .enumerate()
        .map(|(j, level)| {
            let a = i64::from(level.a);
            CrudeTerm {
                level: j + 1,
                lhs: AffineArg {
                    constant: 0,
                    coefficient: a,
                },
                lhs_rep: Representation::Contragredient,
                rhs: AffineArg {
                    constant: 1,
                    coefficient: -a,
                },
                rhs_rep: Representation::Original,
            }
        })
        .collect();
    CrudeEquation { terms }
}

const LOCAL_MARKER: &str = "[local factors at S]";

impl CrudeEquation {
    /// Argument pairs (lhs, rhs) at a concrete s, for paired evaluations.
    pub fn arguments_at(&self, s: ComplexValue) -> Vec<(ComplexValue, ComplexValue)> {
        self.terms
            .iter()
            .map(|t| (t.lhs.at(s), t.rhs.at(s)))
            .collect()
    }

    /// One-line form, e.g. `L_S(s, ~pi, r_1) = L_S(1-s, pi, r_1) * [local factors at S]`.
    pub fn render(&self) -> String {
        let side = |left: bool| {
            self.terms
                .iter()
                .map(|t| {
                    let (arg, rep) = if left {
                        (t.lhs, t.lhs_rep)
                    } else {
                        (t.rhs, t.rhs_rep)
                    };
                    format!("L_S({arg}, {}, r_{})", rep.symbol(), t.level)
                })
                .collect::<Vec<_>>()
                .join(" * ")
        };
        format!("{} = {} * {LOCAL_MARKER}", side(true), side(false))
    }

    /// Inverse of [`CrudeEquation::render`].
    pub fn parse(text: &str) -> Result<Self> {
        let err = |message: String| Error::Parse { line: 1, message };
        let (lhs, rhs) = text
            .split_once(" = ")
            .ok_or_else(|| err("missing ' = '".into()))?;
        let rhs = rhs
            .strip_suffix(LOCAL_MARKER)
            .and_then(|r| r.strip_suffix(" * "))
            .ok_or_else(|| err("missing local factor marker".into()))?;
        let factors = |side: &str| -> Result<Vec<(AffineArg, Representation, usize)>> {
            side.split(" * ")
                .map(|f| parse_factor(f).ok_or_else(|| err(format!("bad factor '{f}'"))))
                .collect()
        };
        let (left, right) = (factors(lhs)?, factors(rhs)?);
        if left.len() != right.len() {
            return Err(err("sides have different numbers of factors".into()));
        }
        left.into_iter()
            .zip(right)
            .map(|((la, lr, lj), (ra, rr, rj))| {
                if lj != rj {
                    return Err(err(format!("level mismatch r_{lj} vs r_{rj}")));
                }
                Ok(CrudeTerm {
                    level: lj,
                    lhs: la,
                    lhs_rep: lr,
                    rhs: ra,
                    rhs_rep: rr,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(|terms| CrudeEquation { terms })
    }
}

fn parse_factor(text: &str) -> Option<(AffineArg, Representation, usize)> {
    let inner = text.trim().strip_prefix("L_S(")?.strip_suffix(')')?;
    let mut parts = inner.split(", ");
    let arg = parse_affine(parts.next()?)?;
    let rep = Representation::from_symbol(parts.next()?)?;
    let level = parts.next()?.strip_prefix("r_")?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((arg, rep, level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{LFunctionData, RatioLevel};
    use proptest::prelude::*;

    fn spec(a: &[u32]) -> RatioSpec {
        RatioSpec::new(
            a.iter()
                .map(|&a| RatioLevel {
                    a,
                    data: LFunctionData::trivial(10, 1),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_level_structure() {
        let d = crude_equation_descriptor(&spec(&[1]));
        assert_eq!(d.terms.len(), 1);
        let t = d.terms[0];
        assert_eq!((t.lhs.constant, t.lhs.coefficient), (0, 1));
        assert_eq!((t.rhs.constant, t.rhs.coefficient), (1, -1));
        assert!(t.is_dual());
        assert_eq!(t.lhs_rep, Representation::Contragredient);
        assert_eq!(
            d.render(),
            "L_S(s, ~pi, r_1) = L_S(1-s, pi, r_1) * [local factors at S]"
        );
    }

    #[test]
    fn two_levels_substitute() {
        let d = crude_equation_descriptor(&spec(&[1, 2]));
        let s = ComplexValue::new(0.3, 2.0);
        let args = d.arguments_at(s);
        assert_eq!(args[0], (s, 1.0 - s));
        assert_eq!(args[1], (2.0 * s, 1.0 - 2.0 * s));
        assert!(d.render().contains("L_S(2s, ~pi, r_2)"));
        assert!(d.render().contains("L_S(1-2s, pi, r_2)"));
    }

    #[test]
    fn affine_rendering() {
        let cases = [
            (0, 1, "s"),
            (1, -1, "1-s"),
            (3, 0, "3"),
            (-2, 5, "-2+5s"),
            (0, -3, "-3s"),
            (1, 2, "1+2s"),
        ];
        for (constant, coefficient, text) in cases {
            let a = AffineArg {
                constant,
                coefficient,
            };
            assert_eq!(a.to_string(), text);
            assert_eq!(parse_affine(text), Some(a));
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(CrudeEquation::parse("L_S(s, ~pi, r_1)").is_err());
        assert!(CrudeEquation::parse(
            "L_S(s, ~pi, r_1) = L_S(1-s, pi, r_2) * [local factors at S]"
        )
        .is_err());
        assert!(CrudeEquation::parse(
            "L_S(s, rho, r_1) = L_S(1-s, pi, r_1) * [local factors at S]"
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(mut a in proptest::collection::btree_set(1u32..50, 1..=8)) {
            let a: Vec<u32> = std::mem::take(&mut a).into_iter().collect();
            let d = crude_equation_descriptor(&spec(&a));
            prop_assert_eq!(CrudeEquation::parse(&d.render()).unwrap(), d.clone());
            let json = serde_json::to_string(&d).unwrap();
            prop_assert_eq!(serde_json::from_str::<CrudeEquation>(&json).unwrap(), d);
        }
    }
}
