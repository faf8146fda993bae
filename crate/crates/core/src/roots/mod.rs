//! Split root systems of types A–G in exact integer arithmetic.
//!
//! Roots are coefficient vectors over the simple roots, numbered as in
//! Bourbaki's plates (0-based here). The pairing is an integer Gram matrix
//! scaled so the shortest roots have squared length 2; the Cartan matrix
//! A_ij = 2(α_i, α_j)/(α_i, α_i) is derived from it.

mod parabolic;
mod table;
mod weyl;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use parabolic::{
    levi_type, nilradical_decomposition, AdjointDecomposition, GradedLevel, ParabolicDatum,
};
pub use table::{enumerate_table, table_to_csv, table_to_json, TableRow};
pub use weyl::{generate_weyl_order, weyl_group_order, weyl_order_closed_form, DEFAULT_WEYL_CAP};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B => rank >= 2,
            CartanType::C => rank >= 3,
            CartanType::D => rank >= 4,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::InvalidType(format!("unknown Cartan type '{other}'"))),
        }
    }
}

/// Largest rank accepted for the infinite families; keeps root counts and
/// Gram matrices small.
pub const MAX_RANK: usize = 64;

pub type Root = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: Vec<Vec<i32>>,
    positive_roots: Vec<Root>,
}

fn gram_matrix(t: CartanType, n: usize) -> Vec<Vec<i32>> {
    let mut g = vec![vec![0; n]; n];
    let mut link = |i: usize, j: usize, v: i32| {
        g[i][j] = v;
        g[j][i] = v;
    };
    let chain = |link: &mut dyn FnMut(usize, usize, i32), upto: usize, v: i32| {
        for i in 0..upto.saturating_sub(1) {
            link(i, i + 1, v);
        }
    };
    let mut diag = vec![2; n];
    match t {
        CartanType::A => chain(&mut link, n, -1),
        CartanType::B => {
            chain(&mut link, n, -2);
            diag = vec![4; n];
            diag[n - 1] = 2;
        }
        CartanType::C => {
            chain(&mut link, n - 1, -1);
            link(n - 2, n - 1, -2);
            diag[n - 1] = 4;
        }
        CartanType::D => {
            chain(&mut link, n - 1, -1);
            link(n - 3, n - 1, -1);
        }
        CartanType::E => {
            link(0, 2, -1);
            link(1, 3, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1);
            }
        }
        CartanType::F => {
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            diag = vec![4, 4, 2, 2];
        }
        CartanType::G => {
            link(0, 1, -3);
            diag = vec![2, 6];
        }
    }
    for (i, d) in diag.into_iter().enumerate() {
        g[i][i] = d;
    }
    g
}

pub(crate) fn cartan_from_gram(gram: &[Vec<i32>]) -> Vec<Vec<i32>> {
    gram.iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|&b| 2 * b / gram[i][i]).collect())
        .collect()
}

/// The `pairing`-th coroot paired with `root`: ⟨β, α_i^∨⟩ = Σ_j c_j A_ij.
fn coroot_pairing(cartan: &[Vec<i32>], root: &[i32], i: usize) -> i32 {
    root.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum()
}

pub fn build_root_system(cartan_type: CartanType, rank: usize) -> Result<RootSystem> {
    if !cartan_type.is_valid_rank(rank) || rank > MAX_RANK {
        return Err(Error::InvalidType(format!(
            "{cartan_type}{rank} is not a supported simple type"
        )));
    }
    let gram = gram_matrix(cartan_type, rank);
    let cartan = cartan_from_gram(&gram);

    let unit = |i: usize| -> Root { (0..rank).map(|j| i32::from(i == j)).collect() };
    let mut found: BTreeSet<Root> = (0..rank).map(unit).collect();
    let mut frontier: Vec<Root> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for root in &frontier {
            for i in 0..rank {
                let k = coroot_pairing(&cartan, root, i);
                if k == 0 {
                    continue;
                }
                let mut image = root.clone();
                image[i] -= k;
                // s_i permutes the positive roots other than α_i.
                if image.iter().all(|&c| c >= 0) && found.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }

    let mut positive_roots: Vec<Root> = found.into_iter().collect();
    positive_roots.sort_by(|a, b| {
        let h = |r: &Root| r.iter().sum::<i32>();
        h(a).cmp(&h(b)).then_with(|| b.cmp(a))
    });
    Ok(RootSystem {
        cartan_type,
        rank,
        gram,
        positive_roots,
    })
}

impl RootSystem {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// e.g. `G2`.
    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    /// Symmetric pairing (α_i, α_j).
    pub fn gram(&self) -> &[Vec<i32>] {
        &self.gram
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        cartan_from_gram(&self.gram)
    }

    /// Simple roots as coefficient vectors, i.e. the unit vectors.
    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| i32::from(i == j)).collect())
            .collect()
    }

    /// Ordered by height, then with earlier simple roots weighted first.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// (β, γ) for coefficient vectors.
    pub fn inner(&self, beta: &[i32], gamma: &[i32]) -> i32 {
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b != 0 {
                total += b * gamma
                    .iter()
                    .zip(&self.gram[i])
                    .map(|(g, x)| g * x)
                    .sum::<i32>();
            }
        }
        total
    }
}

/// |Φ⁺| from the standard closed forms.
pub fn positive_root_count(cartan_type: CartanType, rank: usize) -> Option<usize> {
    if !cartan_type.is_valid_rank(rank) {
        return None;
    }
    let n = rank;
    Some(match cartan_type {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::E => [36, 63, 120][n - 6],
        CartanType::F => 24,
        CartanType::G => 6,
    })
}
