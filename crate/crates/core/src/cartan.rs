//! Dynkin and Cartan data for the simple types, in the standard (Bourbaki-like)
//! numbering: nodes are `1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A simple Lie type such as `A5` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank}")))
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// `D_n` with `n` even: the only type whose block group has two families.
    pub fn is_d_even(self) -> bool {
        self.family == Family::D && self.rank.is_multiple_of(2)
    }

    pub fn check_node(self, node: usize) -> Result<()> {
        if (1..=self.rank).contains(&node) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, rank: self.rank })
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank = rest.parse().map_err(|_| bad())?;
        LieType::new(family, rank).map_err(|_| bad())
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The full static datum of a type.
///
/// Convention: `a_ij = <alpha_i^vee, alpha_j>`, so column `j` of the matrix is
/// the simple root `alpha_j` written in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    pub ty: LieType,
    pub matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub dual_coxeter: i64,
    pub bullet_nodes: Vec<usize>,
    /// `w0_perm[i-1]` is the node `j` with `w0(alpha_i) = -alpha_j`.
    pub w0_perm: Vec<usize>,
}

impl CartanData {
    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    /// Entry `a_ij`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.matrix[i - 1][j - 1]
    }

    /// Symmetrizer `d_i`, 1-based.
    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizers[i - 1]
    }

    pub fn max_d(&self) -> i64 {
        self.symmetrizers.iter().copied().max().unwrap_or(1)
    }

    pub fn w0(&self, i: usize) -> usize {
        self.w0_perm[i - 1]
    }

    /// The spectral shift in `T_{w0}` and in duality: `max(d_i) * h_vee`.
    /// It reduces to the dual Coxeter number in the simply-laced case.
    pub fn twist_shift(&self) -> i64 {
        self.max_d() * self.dual_coxeter
    }

    /// Simple root `alpha_j` in fundamental coordinates.
    pub fn simple_root(&self, j: usize) -> Vec<i64> {
        (1..=self.rank()).map(|k| self.a(k, j)).collect()
    }

    /// Nodes adjacent to `i`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank()).filter(move |&k| k != i && self.a(k, i) != 0)
    }
}

pub fn dual_coxeter(t: LieType) -> i64 {
    let n = t.rank() as i64;
    match t.family() {
        Family::A => n + 1,
        Family::B => 2 * n - 1,
        Family::C => n + 1,
        Family::D => 2 * n - 2,
        Family::E => match n {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Family::F => 9,
        Family::G => 4,
    }
}

pub fn cartan_data(t: LieType) -> CartanData {
    let n = t.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 1-based undirected simple link
    let mut link = |i: usize, j: usize| {
        m[i - 1][j - 1] = -1;
        m[j - 1][i - 1] = -1;
    };
    let mut d = vec![1i64; n];
    match t.family() {
        Family::A => (1..n).for_each(|i| link(i, i + 1)),
        Family::B => {
            (1..n).for_each(|i| link(i, i + 1));
            m[n - 1][n - 2] = -2;
            d = vec![2; n];
            d[n - 1] = 1;
        }
        Family::C => {
            (1..n).for_each(|i| link(i, i + 1));
            m[n - 2][n - 1] = -2;
            d[n - 1] = 2;
        }
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1));
            link(n - 2, n);
        }
        Family::E => {
            (1..n - 1).for_each(|i| link(i, i + 1));
            // branch node: 3 (E6), 4 (E7), 5 (E8)
            link(n - 3, n);
        }
        Family::F => {
            link(1, 2);
            link(3, 4);
            m[1][2] = -2;
            m[2][1] = -1;
            d = vec![1, 1, 2, 2];
        }
        Family::G => {
            m[0][1] = -3;
            m[1][0] = -1;
            d = vec![1, 3];
        }
    }
    let bullet_nodes = match t.family() {
        Family::B => vec![n],
        Family::D if n % 2 == 1 => vec![n],
        Family::D => vec![n - 1, n],
        _ => vec![1],
    };
    let w0_perm = match t.family() {
        Family::A => (1..=n).rev().collect(),
        Family::D if n % 2 == 1 => {
            let mut p: Vec<usize> = (1..=n).collect();
            p.swap(n - 2, n - 1);
            p
        }
        Family::E if n == 6 => vec![5, 4, 3, 2, 1, 6],
        _ => (1..=n).collect(),
    };
    CartanData {
        ty: t,
        matrix: m,
        symmetrizers: d,
        dual_coxeter: dual_coxeter(t),
        bullet_nodes,
        w0_perm,
    }
}

/// Every valid type with rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<LieType> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = LieType::new(f, n) {
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> LieType {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "B3", "C2", "D4", "E6", "E8", "F4", "G2"] {
            assert_eq!(ty(s).to_string(), s);
        }
        for s in ["A0", "B1", "D3", "E5", "E9", "F3", "G3", "X2", "A", "A-1", "A1x"] {
            assert!(s.parse::<LieType>().is_err(), "{s}");
        }
    }

    #[test]
    fn a2_matrix() {
        let c = cartan_data(ty("A2"));
        assert_eq!(c.matrix, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(c.symmetrizers, vec![1, 1]);
    }

    #[test]
    fn symmetrizers_normalised() {
        assert_eq!(cartan_data(ty("B3")).symmetrizers, vec![2, 2, 1]);
        assert_eq!(cartan_data(ty("C4")).symmetrizers, vec![1, 1, 1, 2]);
        assert_eq!(cartan_data(ty("G2")).symmetrizers, vec![1, 3]);
        for t in all_types(8) {
            let c = cartan_data(t);
            assert_eq!(c.symmetrizers.iter().min(), Some(&1), "{t}");
        }
    }

    #[test]
    fn structural_invariants() {
        for t in all_types(8) {
            let c = cartan_data(t);
            let n = c.rank();
            for i in 1..=n {
                assert_eq!(c.a(i, i), 2);
                assert_eq!(c.w0(c.w0(i)), i, "{t}");
                for j in 1..=n {
                    if i != j {
                        assert!(c.a(i, j) <= 0);
                        assert_eq!(c.a(i, j) == 0, c.a(j, i) == 0);
                    }
                    assert_eq!(c.d(i) * c.a(i, j), c.d(j) * c.a(j, i), "{t} {i} {j}");
                    assert_eq!(c.a(c.w0(i), c.w0(j)), c.a(i, j), "{t}");
                }
            }
        }
    }

    #[test]
    fn shaded_nodes() {
        assert_eq!(cartan_data(ty("A5")).bullet_nodes, vec![1]);
        assert_eq!(cartan_data(ty("B3")).bullet_nodes, vec![3]);
        assert_eq!(cartan_data(ty("D4")).bullet_nodes, vec![3, 4]);
        assert_eq!(cartan_data(ty("D5")).bullet_nodes, vec![5]);
        assert_eq!(cartan_data(ty("E7")).bullet_nodes, vec![1]);
    }

    #[test]
    fn dual_coxeter_values() {
        assert_eq!(dual_coxeter(ty("A1")), 2);
        assert_eq!(dual_coxeter(ty("A4")), 5);
        assert_eq!(dual_coxeter(ty("D4")), 6);
        assert_eq!(dual_coxeter(ty("F4")), 9);
    }
}
