use serde::{Deserialize, Serialize};

use super::{cartan_from_gram, CartanType, Root, RootSystem};
use crate::error::{Error, Result};

/// The standard maximal parabolic obtained by removing one simple root.
#[derive(Debug, Clone, Copy)]
pub struct ParabolicDatum<'a> {
    system: &'a RootSystem,
    removed_index: usize,
}

impl<'a> ParabolicDatum<'a> {
    pub fn new(system: &'a RootSystem, removed_index: usize) -> Result<Self> {
        if removed_index >= system.rank() {
            return Err(Error::Domain(format!(
                "removed index {removed_index} out of range for {}",
                system.label()
            )));
        }
        Ok(Self {
            system,
            removed_index,
        })
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn removed_index(&self) -> usize {
        self.removed_index
    }

    /// Positive roots of the Levi: zero coefficient at the removed index.
    pub fn levi_roots(&self) -> Vec<&'a Root> {
        let k = self.removed_index;
        self.system
            .positive_roots()
            .iter()
            .filter(|r| r[k] == 0)
            .collect()
    }
}

/// Classifies one connected Dynkin diagram from its Gram block.
fn classify_connected(gram: &[Vec<i32>]) -> (CartanType, usize) {
    let n = gram.len();
    if n == 1 {
        return (CartanType::A, 1);
    }
    let cartan = cartan_from_gram(gram);
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let neighbours = |i: usize| {
        (0..n)
            .filter(|&j| j != i && bond(i, j) > 0)
            .collect::<Vec<_>>()
    };
    let max_bond = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j)
        .map(|(i, j)| bond(i, j))
        .max()
        .unwrap_or(0);

    match max_bond {
        3 => (CartanType::G, 2),
        2 => {
            if n == 2 {
                // B2 and C2 coincide.
                return (CartanType::B, 2);
            }
            let (i, j) = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .find(|&(i, j)| i < j && bond(i, j) == 2)
                .unwrap_or((0, 1));
            let end = [i, j].into_iter().find(|&v| neighbours(v).len() == 1);
            match end {
                None => (CartanType::F, 4),
                // The end of the double bond is short in B_n and long in C_n.
                Some(v) => {
                    let other = if v == i { j } else { i };
                    if gram[v][v] < gram[other][other] {
                        (CartanType::B, n)
                    } else {
                        (CartanType::C, n)
                    }
                }
            }
        }
        _ => {
            let Some(branch) = (0..n).find(|&i| neighbours(i).len() == 3) else {
                return (CartanType::A, n);
            };
            let mut arms: Vec<usize> = neighbours(branch)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (branch, start, 1);
                    loop {
                        let next: Vec<usize> =
                            neighbours(cur).into_iter().filter(|&x| x != prev).collect();
                        match next.as_slice() {
                            [x] => {
                                (prev, cur, len) = (cur, *x, len + 1);
                            }
                            _ => return len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => (CartanType::D, n),
                _ => (CartanType::E, n),
            }
        }
    }
}

/// Simple factors of a Gram matrix restricted to `indices`, ordered by
/// their smallest simple-root index.
pub(crate) fn classify_subdiagram(
    gram: &[Vec<i32>],
    indices: &[usize],
) -> Vec<(CartanType, usize)> {
    let mut unvisited: Vec<usize> = indices.to_vec();
    let mut factors = Vec::new();
    while let Some(&seed) = unvisited.first() {
        let mut component = vec![seed];
        unvisited.retain(|&x| x != seed);
        let mut k = 0;
        while k < component.len() {
            let v = component[k];
            let (linked, rest): (Vec<usize>, Vec<usize>) =
                unvisited.iter().partition(|&&u| gram[v][u] != 0);
            component.extend(linked);
            unvisited = rest;
            k += 1;
        }
        component.sort_unstable();
        let block: Vec<Vec<i32>> = component
            .iter()
            .map(|&i| component.iter().map(|&j| gram[i][j]).collect())
            .collect();
        factors.push(classify_connected(&block));
    }
    factors
}

/// Cartan type of the Levi factor, one entry per simple factor. Empty when
/// the Levi is a torus (rank-one systems).
pub fn levi_type(p: &ParabolicDatum<'_>) -> Vec<(CartanType, usize)> {
    let rest: Vec<usize> = (0..p.system.rank())
        .filter(|&i| i != p.removed_index)
        .collect();
    classify_subdiagram(p.system.gram(), &rest)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedLevel {
    pub a: u32,
    pub roots: Vec<Root>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointDecomposition {
    pub levels: Vec<GradedLevel>,
}

impl AdjointDecomposition {
    pub fn m(&self) -> usize {
        self.levels.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.dimension).collect()
    }

    pub fn a(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.a).collect()
    }
}

/// Grades the nilradical roots by their coefficient j ≥ 1 at the removed
/// simple root; level j carries a_j = j.
///
/// Each level is taken to be one irreducible representation of the Levi,
/// as holds for maximal parabolics of simple groups; only the dimensions
/// are checked here.
pub fn nilradical_decomposition(p: &ParabolicDatum<'_>) -> AdjointDecomposition {
    let k = p.removed_index;
    let top = p
        .system
        .positive_roots()
        .iter()
        .map(|r| r[k])
        .max()
        .unwrap_or(0);
    let levels = (1..=top)
        .map(|j| {
            let roots: Vec<Root> = p
                .system
                .positive_roots()
                .iter()
                .filter(|r| r[k] == j)
                .cloned()
                .collect();
            GradedLevel {
                a: j as u32,
                dimension: roots.len(),
                roots,
            }
        })
        .collect();
    AdjointDecomposition { levels }
}
