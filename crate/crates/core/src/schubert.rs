//! Schubert-variety invariants read off from Bruhat data.

use std::fmt;
use std::ops::Mul;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::CartanType;
use crate::subset::SimpleSubset;
use crate::weyl::WeylElt;

/// Polynomial in `q` with nonnegative integer coefficients, low degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Polynomial(Vec<u64>);

impl Polynomial {
    /// Trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial(coeffs)
    }

    pub fn one() -> Self {
        Polynomial(vec![1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, q: u64) -> u64 {
        self.0.iter().rev().fold(0u64, |acc, &c| {
            acc.checked_mul(q)
                .and_then(|x| x.checked_add(c))
                .expect("polynomial evaluation overflow")
        })
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![0u64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(b)
                    .and_then(|x| x.checked_add(out[i + j]))
                    .expect("polynomial product overflow");
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

fn rank_generating<'a>(elements: impl Iterator<Item = &'a WeylElt>) -> Polynomial {
    let mut coeffs: Vec<u64> = Vec::new();
    for v in elements {
        if coeffs.len() <= v.length() {
            coeffs.resize(v.length() + 1, 0);
        }
        coeffs[v.length()] += 1;
    }
    Polynomial::new(coeffs)
}

/// `sum_{v <= w} q^{l(v)}`.
pub fn poincare(w: &WeylElt) -> Polynomial {
    rank_generating(w.lower_interval().iter())
}

/// `sum q^{l(v)}` over `v` in `W^I` with `v <= w`; requires `w` in `W^I`.
pub fn parabolic_poincare(w: &WeylElt, parabolic: SimpleSubset) -> Result<Polynomial> {
    if !w.is_min_rep(parabolic) {
        return Err(Error::NotMinimalRep(parabolic.to_string()));
    }
    Ok(rank_generating(
        w.lower_interval().iter().filter(|v| v.is_min_rep(parabolic)),
    ))
}

pub fn is_palindromic(p: &Polynomial) -> bool {
    p.is_palindromic()
}

/// `X_wB` is toric iff `w` is a product of distinct simple reflections.
pub fn is_toric(w: &WeylElt) -> bool {
    w.is_distinct_product()
}

/// Whether some subsequence of `perm` is order-isomorphic to `pattern`.
pub fn contains_pattern(perm: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k > perm.len() {
        return false;
    }
    perm.iter().combinations(k).any(|sub| {
        (0..k).all(|a| (a + 1..k).all(|b| (sub[a] < sub[b]) == (pattern[a] < pattern[b])))
    })
}

/// Element-level pattern test (type A only).
pub fn element_contains_pattern(w: &WeylElt, pattern: &[usize]) -> Result<bool> {
    Ok(contains_pattern(&w.one_line()?, pattern))
}

/// Tri-state smoothness verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Smoothness {
    Smooth,
    Singular,
    Unknown,
}

impl Smoothness {
    pub fn as_option(self) -> Option<bool> {
        match self {
            Smoothness::Smooth => Some(true),
            Smoothness::Singular => Some(false),
            Smoothness::Unknown => None,
        }
    }

    pub fn is_decided(self) -> bool {
        self != Smoothness::Unknown
    }
}

impl From<bool> for Smoothness {
    fn from(b: bool) -> Self {
        if b {
            Smoothness::Smooth
        } else {
            Smoothness::Singular
        }
    }
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Smoothness::Smooth => "true",
            Smoothness::Singular => "false",
            Smoothness::Unknown => "unknown",
        })
    }
}

impl Serialize for Smoothness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.as_option().serialize(serializer)
    }
}

/// Smoothness of `X_wB`.
///
/// Type A uses 3412/4231 avoidance. In types D and E smoothness coincides
/// with rational smoothness (palindromic Poincaré polynomial). In types B, C,
/// F, G only a failure of rational smoothness is conclusive.
pub fn is_smooth(w: &WeylElt) -> Smoothness {
    let rs = w.root_system();
    match rs.kind() {
        CartanType::A => {
            let p = w.one_line().expect("type A");
            Smoothness::from(!contains_pattern(&p, &[3, 4, 1, 2]) && !contains_pattern(&p, &[4, 2, 3, 1]))
        }
        CartanType::D | CartanType::E => Smoothness::from(poincare(w).is_palindromic()),
        _ => {
            if poincare(w).is_palindromic() {
                Smoothness::Unknown
            } else {
                Smoothness::Singular
            }
        }
    }
}

pub fn is_rationally_smooth(w: &WeylElt) -> bool {
    poincare(w).is_palindromic()
}

/// Finds `j` such that some reduced word of `w` contains the contiguous
/// segment `s_{j+1} s_j s_{j+2} s_{j+1}`, with `s_{j+1}` occurring only
/// there and every other letter at most once. Type A only.
pub fn has_lmp_shape(w: &WeylElt) -> Result<Option<usize>> {
    let rs = w.root_system();
    if rs.kind() != CartanType::A {
        return Err(Error::TypeMismatch(rs.name()));
    }
    let n = rs.rank();
    // a word of this shape repeats exactly one letter, once
    if n < 3 || w.length() != w.support().len() + 1 {
        return Ok(None);
    }
    let words = w.reduced_words()?;
    for word in &words {
        let letters = word.letters();
        let mut counts = vec![0usize; n + 2];
        for &i in letters {
            counts[i] += 1;
        }
        for (pos, seg) in letters.windows(4).enumerate() {
            let j = seg[1];
            if j + 2 > n || seg != [j + 1, j, j + 2, j + 1] {
                continue;
            }
            let others_ok = (1..=n).all(|i| if i == j + 1 { counts[i] == 2 } else { counts[i] <= 1 });
            if others_ok {
                debug_assert!(letters[pos] == j + 1 && letters[pos + 3] == j + 1);
                return Ok(Some(j));
            }
        }
    }
    Ok(None)
}
