//! Finite crystallographic root systems in the simple-root basis.
//!
//! Cartan matrices follow Bourbaki numbering with the convention
//! `a[i][j] = <alpha_i^vee, alpha_j>`, so the simple reflection `s_i` acts by
//! `v -> v - (sum_j a[i][j] v_j) alpha_i`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::SimpleSubset;

/// Coordinates of a root in the simple-root basis.
pub type RootVector = Vec<i32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl CartanType {
    fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            CartanType::A => rank >= 1,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D | CartanType::E)
    }

    /// Order of the Weyl group, or `None` on overflow.
    pub fn weyl_group_order(self, rank: usize) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        match self {
            CartanType::A => fact(rank + 1),
            CartanType::B | CartanType::C => fact(rank)?.checked_mul(1u128 << rank),
            CartanType::D => fact(rank)?.checked_mul(1u128 << (rank - 1)),
            CartanType::E => Some(match rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            }),
            CartanType::F => Some(1152),
            CartanType::G => Some(12),
        }
    }
}

/// A `(type, rank)` pair such as `A3` or `E6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TypeSpec {
    pub kind: CartanType,
    pub rank: usize,
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl FromStr for TypeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars
            .next()
            .and_then(CartanType::from_char)
            .ok_or_else(|| Error::Parse(format!("bad root system type {s:?}")))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        if !kind.is_valid_rank(rank) {
            return Err(Error::InvalidType { kind, rank });
        }
        Ok(TypeSpec { kind, rank })
    }
}

/// Immutable root-system tables.
#[derive(Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<RootVector>,
    root_index: HashMap<RootVector, usize>,
    simple_indices: Vec<usize>,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

fn cartan_matrix(kind: CartanType, n: usize) -> Vec<Vec<i32>> {
    let mut a = vec![vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match kind {
        CartanType::A | CartanType::B | CartanType::C | CartanType::F | CartanType::G => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        CartanType::E => {
            link(1, 3);
            link(3, 4);
            link(2, 4);
            for i in 4..n {
                link(i, i + 1);
            }
        }
    }
    // a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
    match kind {
        CartanType::B => a[n - 1][n - 2] = -2,
        CartanType::C => a[n - 2][n - 1] = -2,
        CartanType::F => a[2][1] = -2,
        CartanType::G => a[0][1] = -3,
        _ => {}
    }
    a
}

fn is_nonneg(v: &[i32]) -> bool {
    v.iter().all(|&x| x >= 0)
}

impl RootSystem {
    pub fn build(kind: CartanType, rank: usize) -> Result<Arc<RootSystem>> {
        if !kind.is_valid_rank(rank) || rank > 16 {
            return Err(Error::InvalidType { kind, rank });
        }
        let cartan = cartan_matrix(kind, rank);
        let simple: Vec<RootVector> = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                v
            })
            .collect();

        let mut seen: HashSet<RootVector> = simple.iter().cloned().collect();
        let mut frontier = simple.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for root in &frontier {
                for i in 0..rank {
                    let image = reflect(&cartan, i, root);
                    if is_nonneg(&image) && seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            frontier = next;
        }
        let mut positive_roots: Vec<RootVector> = seen.into_iter().collect();
        positive_roots.sort_by(|x, y| {
            let hx: i32 = x.iter().sum();
            let hy: i32 = y.iter().sum();
            hx.cmp(&hy).then_with(|| x.cmp(y))
        });
        let root_index: HashMap<RootVector, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let simple_indices = simple.iter().map(|r| root_index[r]).collect();
        Ok(Arc::new(RootSystem {
            kind,
            rank,
            cartan,
            positive_roots,
            root_index,
            simple_indices,
        }))
    }

    pub fn from_spec(spec: TypeSpec) -> Result<Arc<RootSystem>> {
        Self::build(spec.kind, spec.rank)
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn spec(&self) -> TypeSpec {
        TypeSpec {
            kind: self.kind,
            rank: self.rank,
        }
    }

    pub fn name(&self) -> String {
        self.spec().to_string()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.kind.is_simply_laced()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Cartan entry for 1-based generator indices.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i - 1][j - 1]
    }

    /// Whether `s_i` and `s_j` commute (1-based).
    pub fn commutes(&self, i: usize, j: usize) -> bool {
        i == j || self.cartan_entry(i, j) == 0
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Position of `alpha_i` (1-based `i`) inside [`Self::positive_roots`].
    pub fn simple_root_position(&self, i: usize) -> usize {
        self.simple_indices[i - 1]
    }

    pub fn simple_root(&self, i: usize) -> &RootVector {
        &self.positive_roots[self.simple_root_position(i)]
    }

    pub fn positive_root_index(&self, v: &[i32]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    /// Whether `v` is a root (positive or negative).
    pub fn is_root(&self, v: &[i32]) -> bool {
        if self.root_index.contains_key(v) {
            return true;
        }
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        self.root_index.contains_key(&neg)
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    /// `s_i(v) = v - <v, alpha_i^vee> alpha_i` for 1-based `i`.
    pub fn apply_simple_reflection(&self, i: usize, v: &[i32]) -> Result<RootVector> {
        self.check_index(i)?;
        if v.len() != self.rank {
            return Err(Error::Parse(format!(
                "vector of length {} in rank {}",
                v.len(),
                self.rank
            )));
        }
        Ok(reflect(&self.cartan, i - 1, v))
    }

    /// Indices of the simple roots occurring with positive coefficient in `v`.
    pub fn support(&self, v: &[i32]) -> Result<SimpleSubset> {
        if v.len() != self.rank || v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
            return Err(Error::NotPositiveRoot(v.to_vec()));
        }
        Ok(support_of(v))
    }
}

pub(crate) fn support_of(v: &[i32]) -> SimpleSubset {
    SimpleSubset::from_indices(
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(k, _)| k + 1),
    )
}

/// 0-based reflection used during construction.
fn reflect(cartan: &[Vec<i32>], i: usize, v: &[i32]) -> RootVector {
    let pairing: i32 = cartan[i].iter().zip(v).map(|(a, x)| a * x).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_spec(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        // |R+| by type: n(n+1)/2, n^2, n^2, n(n-1), 36/63/120, 24, 6
        for (name, count) in [
            ("A1", 1),
            ("A2", 3),
            ("A3", 6),
            ("A5", 15),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("D5", 20),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(rs(name).num_positive_roots(), count, "{name}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for (kind, rank) in [
            (CartanType::A, 0),
            (CartanType::B, 1),
            (CartanType::D, 2),
            (CartanType::E, 5),
            (CartanType::E, 9),
            (CartanType::F, 3),
            (CartanType::G, 3),
        ] {
            assert!(matches!(
                RootSystem::build(kind, rank),
                Err(Error::InvalidType { .. })
            ));
        }
        assert!("X3".parse::<TypeSpec>().is_err());
        assert!("A".parse::<TypeSpec>().is_err());
    }

    #[test]
    fn a2_reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.apply_simple_reflection(1, &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(a2.apply_simple_reflection(1, &[0, 1]).unwrap(), vec![1, 1]);
        assert_eq!(a2.apply_simple_reflection(1, &[1, 1]).unwrap(), vec![0, 1]);
        assert!(matches!(
            a2.apply_simple_reflection(3, &[1, 0]),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
    }

    #[test]
    fn supports() {
        let a2 = rs("A2");
        assert_eq!(a2.support(&[1, 0]).unwrap().to_vec(), vec![1]);
        assert_eq!(a2.support(&[1, 1]).unwrap().to_vec(), vec![1, 2]);
        let b2 = rs("B2");
        assert!(b2.positive_root_index(&[1, 2]).is_some());
        assert_eq!(b2.support(&[1, 2]).unwrap().to_vec(), vec![1, 2]);
        assert!(matches!(
            a2.support(&[-1, 0]),
            Err(Error::NotPositiveRoot(_))
        ));
    }

    #[test]
    fn highest_roots() {
        // last root in (height, lex) order is the highest root
        let top = |s: &str| rs(s).positive_roots().last().unwrap().clone();
        assert_eq!(top("B3"), vec![1, 2, 2]);
        assert_eq!(top("C3"), vec![2, 2, 1]);
        assert_eq!(top("G2"), vec![3, 2]);
        assert_eq!(top("F4"), vec![2, 3, 4, 2]);
        assert_eq!(top("E8"), vec![2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn reflections_permute_roots() {
        for name in ["A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
            let r = rs(name);
            for i in 1..=r.rank() {
                for root in r.positive_roots() {
                    let img = r.apply_simple_reflection(i, root).unwrap();
                    assert_eq!(r.apply_simple_reflection(i, &img).unwrap(), *root);
                    if root == r.simple_root(i) {
                        assert!(img.iter().all(|&x| x <= 0));
                    } else {
                        assert!(r.positive_root_index(&img).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn ordering_by_height_then_lex() {
        let r = rs("B3");
        let heights: Vec<i32> = r.positive_roots().iter().map(|v| v.iter().sum()).collect();
        assert!(heights.windows(2).all(|w| w[0] <= w[1]));
        for i in 1..=3 {
            assert_eq!(r.simple_root(i)[i - 1], 1);
        }
    }
}
