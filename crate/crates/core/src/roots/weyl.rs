use std::collections::HashSet;

use super::{CartanType, RootSystem};
use crate::error::{Error, Result};

/// Element cap for [`generate_weyl_order`] when called through [`weyl_group_order`].
pub const DEFAULT_WEYL_CAP: u64 = 1_000_000;

fn degrees(t: CartanType, n: u64) -> Vec<u64> {
    match t {
        CartanType::A => (2..=n + 1).collect(),
        CartanType::B | CartanType::C => (1..=n).map(|k| 2 * k).collect(),
        CartanType::D => (1..n).map(|k| 2 * k).chain([n]).collect(),
        CartanType::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        CartanType::F => vec![2, 6, 8, 12],
        CartanType::G => vec![2, 6],
    }
}

/// |W| as the product of the fundamental degrees, or `None` on u64 overflow.
pub fn weyl_order_closed_form(rs: &RootSystem) -> Option<u64> {
    degrees(rs.cartan_type(), rs.rank() as u64)
        .into_iter()
        .try_fold(1u64, |acc, d| acc.checked_mul(d))
}

/// |W| by exhaustive generation of the orbit of ρ.
///
/// W acts simply transitively on the orbit of a regular dominant weight,
/// so the orbit size is the group order. Weights are kept in the
/// fundamental-weight basis, where s_i(λ) = λ − λ_i α_i.
pub fn generate_weyl_order(rs: &RootSystem, cap: u64) -> Result<u64> {
    let n = rs.rank();
    let cartan = rs.cartan_matrix();
    // α_i in the fundamental-weight basis is column i of the Cartan matrix.
    let alpha: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(cartan[j][i])).collect())
        .collect();
    let rho = vec![1i64; n];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho.clone()]);
    let mut frontier = vec![rho];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..n {
                let image: Vec<i64> = w.iter().zip(&alpha[i]).map(|(x, a)| x - w[i] * a).collect();
                if !seen.contains(&image) {
                    if seen.len() as u64 >= cap {
                        return Err(Error::Resource(format!(
                            "Weyl group of {} exceeds the cap of {cap} elements",
                            rs.label()
                        )));
                    }
                    seen.insert(image.clone());
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len() as u64)
}

/// |W|, generated exhaustively when the group has at most
/// [`DEFAULT_WEYL_CAP`] elements and from the degrees otherwise (E7, E8,
/// large classical ranks).
pub fn weyl_group_order(rs: &RootSystem) -> Result<u64> {
    match weyl_order_closed_form(rs) {
        Some(order) if order > DEFAULT_WEYL_CAP => Ok(order),
        None => Err(Error::Resource(format!(
            "|W({})| does not fit in 64 bits",
            rs.label()
        ))),
        Some(_) => generate_weyl_order(rs, DEFAULT_WEYL_CAP),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;

    #[test]
    fn small_orders() {
        let order = |t, n| weyl_group_order(&build_root_system(t, n).unwrap()).unwrap();
        assert_eq!(order(CartanType::A, 1), 2);
        assert_eq!(order(CartanType::A, 2), 6);
        assert_eq!(order(CartanType::G, 2), 12);
        assert_eq!(order(CartanType::F, 4), 1152);
        assert_eq!(order(CartanType::E, 7), 2_903_040);
        assert_eq!(order(CartanType::E, 8), 696_729_600);
    }

    #[test]
    fn generated_matches_degrees_through_rank_six() {
        use CartanType::*;
        let mut cases = vec![(E, 6), (F, 4), (G, 2)];
        for n in 1..=6 {
            cases.push((A, n));
            if n >= 2 {
                cases.push((B, n));
            }
            if n >= 3 {
                cases.push((C, n));
            }
            if n >= 4 {
                cases.push((D, n));
            }
        }
        for (t, n) in cases {
            let rs = build_root_system(t, n).unwrap();
            assert_eq!(
                generate_weyl_order(&rs, DEFAULT_WEYL_CAP).unwrap(),
                weyl_order_closed_form(&rs).unwrap(),
                "{t}{n}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let rs = build_root_system(CartanType::E, 6).unwrap();
        assert!(matches!(
            generate_weyl_order(&rs, 1000),
            Err(Error::Resource(_))
        ));
        assert_eq!(generate_weyl_order(&rs, 51_840).unwrap(), 51_840);
    }
}
