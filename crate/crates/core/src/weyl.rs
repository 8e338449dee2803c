//! Weyl group elements as integer matrices acting on the simple-root basis.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootsys::{support_of, CartanType, RootSystem, RootVector};
use crate::subset::SimpleSubset;
use crate::word::Word;

/// Default bound on `l(w)` for reduced-word enumeration.
pub const REDUCED_WORD_GUARD: usize = 16;

/// An element of the Weyl group of a [`RootSystem`].
///
/// Column `j` of the matrix holds the coordinates of `w(alpha_j)`. Equality
/// and hashing only look at the matrix; mixing elements of different root
/// systems is a logic error.
#[derive(Clone)]
pub struct WeylElt {
    rs: Arc<RootSystem>,
    cols: Box<[i32]>,
    length: usize,
}

impl PartialEq for WeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.cols == other.cols
    }
}

impl Eq for WeylElt {}

impl Hash for WeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cols.hash(state);
    }
}

impl PartialOrd for WeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.cols.cmp(&other.cols))
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt({}: {})", self.rs.name(), self.reduced_word())
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.one_line() {
            Ok(p) => write!(f, "{}", format_one_line(&p)),
            Err(_) => write!(f, "{}", self.reduced_word()),
        }
    }
}

impl WeylElt {
    fn from_cols(rs: Arc<RootSystem>, cols: Box<[i32]>) -> Self {
        let n = rs.rank();
        let heights: Vec<i32> = cols.chunks(n).map(|c| c.iter().sum()).collect();
        // w(gamma) is negative iff its height is negative
        let length = rs
            .positive_roots()
            .iter()
            .filter(|g| g.iter().zip(&heights).map(|(a, h)| a * h).sum::<i32>() < 0)
            .count();
        WeylElt { rs, cols, length }
    }

    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let n = rs.rank();
        let mut cols = vec![0; n * n];
        for j in 0..n {
            cols[j * n + j] = 1;
        }
        WeylElt {
            rs: rs.clone(),
            cols: cols.into(),
            length: 0,
        }
    }

    pub fn simple(rs: &Arc<RootSystem>, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        Ok(Self::identity(rs).mul_simple_right(i))
    }

    /// Product of the letters, multiplied left to right.
    pub fn from_word(rs: &Arc<RootSystem>, word: &Word) -> Result<Self> {
        word.check_range(rs.rank())?;
        Ok(word
            .letters()
            .iter()
            .fold(Self::identity(rs), |w, &i| w.mul_simple_right(i)))
    }

    /// Rebuild an element from its column-major matrix. Rejects matrices
    /// whose columns are not roots or which are not products of simple
    /// reflections.
    pub fn from_matrix(rs: &Arc<RootSystem>, cols: &[i32]) -> Result<Self> {
        let n = rs.rank();
        if cols.len() != n * n || !cols.chunks(n).all(|c| rs.is_root(c)) {
            return Err(Error::Parse("matrix is not a root-system automorphism".into()));
        }
        let w = Self::from_cols(rs.clone(), cols.into());
        if Self::from_word(rs, &w.reduced_word())? != w {
            return Err(Error::Parse("matrix is not a Weyl group element".into()));
        }
        Ok(w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn matrix(&self) -> &[i32] {
        &self.cols
    }

    /// Image of `alpha_j` (1-based) in the simple-root basis.
    pub fn image_of_simple(&self, j: usize) -> &[i32] {
        let n = self.rank();
        &self.cols[(j - 1) * n..j * n]
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn apply(&self, v: &[i32]) -> RootVector {
        let n = self.rank();
        let mut out = vec![0; n];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                for (o, &x) in out.iter_mut().zip(&self.cols[j * n..(j + 1) * n]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    pub fn multiply(&self, other: &WeylElt) -> WeylElt {
        assert!(
            *self.rs == *other.rs,
            "multiplying elements of {} and {}",
            self.rs.name(),
            other.rs.name()
        );
        let n = self.rank();
        let mut cols = Vec::with_capacity(n * n);
        for j in 0..n {
            cols.extend(self.apply(&other.cols[j * n..(j + 1) * n]));
        }
        Self::from_cols(self.rs.clone(), cols.into())
    }

    /// `w * s_i` (1-based `i`, assumed in range).
    pub fn mul_simple_right(&self, i: usize) -> WeylElt {
        let n = self.rank();
        let i0 = i - 1;
        let col_i: Vec<i32> = self.cols[i0 * n..(i0 + 1) * n].to_vec();
        let mut cols = self.cols.clone();
        for j in 0..n {
            let a = if j == i0 { 2 } else { self.rs.cartan()[i0][j] };
            if a != 0 {
                for (x, c) in cols[j * n..(j + 1) * n].iter_mut().zip(&col_i) {
                    *x -= a * c;
                }
            }
        }
        let length = if self.is_right_descent(i) {
            self.length - 1
        } else {
            self.length + 1
        };
        WeylElt {
            rs: self.rs.clone(),
            cols,
            length,
        }
    }

    /// `s_i * w` (1-based `i`, assumed in range).
    pub fn mul_simple_left(&self, i: usize) -> WeylElt {
        let n = self.rank();
        let i0 = i - 1;
        let row = &self.rs.cartan()[i0];
        let mut cols = self.cols.clone();
        for col in cols.chunks_mut(n) {
            let pairing: i32 = row.iter().zip(col.iter()).map(|(a, x)| a * x).sum();
            col[i0] -= pairing;
        }
        Self::from_cols(self.rs.clone(), cols)
    }

    /// `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.image_of_simple(i).iter().sum::<i32>() < 0
    }

    pub fn right_descents(&self) -> SimpleSubset {
        SimpleSubset::from_indices((1..=self.rank()).filter(|&i| self.is_right_descent(i)))
    }

    /// `{i : l(s_i w) < l(w)}`, the simple roots inside the inversion set.
    pub fn left_descents(&self) -> SimpleSubset {
        self.inverse().right_descents()
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.mul_simple_left(i).length < self.length
    }

    pub fn inverse(&self) -> WeylElt {
        // peel right descents: w s_{i1} ... s_{ik} = e, so w^{-1} = s_{i1} ... s_{ik}
        let mut cur = self.clone();
        let mut inv = Self::identity(&self.rs);
        while let Some(i) = (1..=self.rank()).find(|&i| cur.is_right_descent(i)) {
            cur = cur.mul_simple_right(i);
            inv = inv.mul_simple_right(i);
        }
        inv
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Word {
        // smallest left descent of w = smallest right descent of w^{-1}
        let mut v = self.inverse();
        let mut letters = Vec::with_capacity(self.length);
        while let Some(i) = (1..=self.rank()).find(|&i| v.is_right_descent(i)) {
            letters.push(i);
            v = v.mul_simple_right(i);
        }
        Word(letters)
    }

    /// `R+(w^{-1}) = {beta > 0 : w^{-1}(beta) < 0}`, in positive-root order.
    pub fn inversion_set(&self) -> Vec<RootVector> {
        let mut idx: Vec<usize> = self
            .rs
            .positive_roots()
            .iter()
            .filter_map(|g| {
                let img = self.apply(g);
                if img.iter().sum::<i32>() < 0 {
                    let neg: Vec<i32> = img.iter().map(|x| -x).collect();
                    self.rs.positive_root_index(&neg)
                } else {
                    None
                }
            })
            .collect();
        idx.sort_unstable();
        idx.into_iter()
            .map(|k| self.rs.positive_roots()[k].clone())
            .collect()
    }

    /// Generators occurring in any reduced word: the union of the supports of
    /// the roots in the inversion set.
    pub fn support(&self) -> SimpleSubset {
        self.inversion_set()
            .iter()
            .fold(SimpleSubset::empty(), |acc, r| acc.union(support_of(r)))
    }

    pub fn is_distinct_product(&self) -> bool {
        self.length == self.support().len()
    }

    pub fn is_coxeter(&self) -> bool {
        self.length == self.rank() && self.is_distinct_product()
    }

    /// Bruhat order by the lifting property: pick a right descent `s` of `w`;
    /// if `s` is also a right descent of `v` then `v <= w` iff `vs <= ws`,
    /// otherwise `v <= w` iff `v <= ws`.
    pub fn bruhat_leq(&self, w: &WeylElt) -> bool {
        let mut v = self.clone();
        let mut w = w.clone();
        loop {
            if v.length > w.length {
                return false;
            }
            if w.length == 0 {
                return v.length == 0;
            }
            if v.length == 0 {
                return true;
            }
            let s = (1..=w.rank())
                .find(|&i| w.is_right_descent(i))
                .expect("non-identity element has a descent");
            if v.is_right_descent(s) {
                v = v.mul_simple_right(s);
            }
            w = w.mul_simple_right(s);
        }
    }

    pub fn is_min_rep(&self, parabolic: SimpleSubset) -> bool {
        self.right_descents().intersection(parabolic).is_empty()
    }

    /// The minimal-length element of `w W_I`.
    pub fn min_coset_rep(&self, parabolic: SimpleSubset) -> WeylElt {
        let mut cur = self.clone();
        while let Some(i) = parabolic.iter().find(|&i| cur.is_right_descent(i)) {
            cur = cur.mul_simple_right(i);
        }
        cur
    }

    /// All reduced words in lexicographic order.
    pub fn reduced_words(&self) -> Result<Vec<Word>> {
        self.reduced_words_guarded(REDUCED_WORD_GUARD)
    }

    pub fn reduced_words_guarded(&self, guard: usize) -> Result<Vec<Word>> {
        if self.length > guard {
            return Err(Error::TooLong {
                length: self.length,
                guard,
            });
        }
        fn go(v: &WeylElt, memo: &mut HashMap<WeylElt, Arc<Vec<Vec<usize>>>>) -> Arc<Vec<Vec<usize>>> {
            if let Some(hit) = memo.get(v) {
                return hit.clone();
            }
            let out = if v.length == 0 {
                vec![Vec::new()]
            } else {
                let mut out = Vec::new();
                for i in 1..=v.rank() {
                    if v.is_right_descent(i) {
                        for tail in go(&v.mul_simple_right(i), memo).iter() {
                            let mut w = Vec::with_capacity(tail.len() + 1);
                            w.push(i);
                            w.extend_from_slice(tail);
                            out.push(w);
                        }
                    }
                }
                out
            };
            let out = Arc::new(out);
            memo.insert(v.clone(), out.clone());
            out
        }
        // a reduced word of w read left to right peels left descents, i.e.
        // right descents of w^{-1}
        let mut memo = HashMap::new();
        Ok(go(&self.inverse(), &mut memo)
            .iter()
            .map(|w| Word(w.clone()))
            .collect())
    }

    /// `[e, w]` as the set of products of subwords of a reduced word, sorted
    /// by length and then by matrix.
    pub fn lower_interval(&self) -> Vec<WeylElt> {
        let mut seen: HashSet<WeylElt> = HashSet::new();
        seen.insert(Self::identity(&self.rs));
        for &i in self.reduced_word().letters() {
            let extra: Vec<WeylElt> = seen.iter().map(|x| x.mul_simple_right(i)).collect();
            seen.extend(extra);
        }
        let mut out: Vec<WeylElt> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// One-line notation `[w(1), ..., w(n+1)]` (type A only).
    pub fn one_line(&self) -> Result<Vec<usize>> {
        if self.rs.kind() != CartanType::A {
            return Err(Error::TypeMismatch(self.rs.name()));
        }
        let mut perm: Vec<usize> = (1..=self.rank() + 1).collect();
        // right multiplication by s_i swaps positions i and i+1
        for &i in self.reduced_word().letters() {
            perm.swap(i - 1, i);
        }
        Ok(perm)
    }

    pub fn from_one_line(rs: &Arc<RootSystem>, perm: &[usize]) -> Result<Self> {
        if rs.kind() != CartanType::A {
            return Err(Error::TypeMismatch(rs.name()));
        }
        let m = rs.rank() + 1;
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=m).collect::<Vec<_>>() {
            return Err(Error::Parse(format!(
                "{perm:?} is not a permutation of 1..={m}"
            )));
        }
        // bubble sort: p s_{a} s_{b} ... = id, so w = ... s_b s_a
        let mut p = perm.to_vec();
        let mut letters = Vec::new();
        while let Some(i) = (0..m - 1).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        Self::from_word(rs, &Word(letters))
    }
}

impl Mul for &WeylElt {
    type Output = WeylElt;

    fn mul(self, rhs: &WeylElt) -> WeylElt {
        self.multiply(rhs)
    }
}

/// The longest element of the parabolic subgroup `W_J`.
pub fn longest_element(rs: &Arc<RootSystem>, parabolic: SimpleSubset) -> WeylElt {
    let mut w = WeylElt::identity(rs);
    while let Some(i) = parabolic.iter().find(|&i| !w.is_right_descent(i)) {
        w = w.mul_simple_right(i);
    }
    w
}

/// Every element of `W`, breadth-first from the identity with generators
/// tried in index order.
pub fn enumerate_group(rs: &Arc<RootSystem>, cap: usize) -> Result<Vec<WeylElt>> {
    let order = rs.kind().weyl_group_order(rs.rank()).unwrap_or(u128::MAX);
    if order > cap as u128 {
        return Err(Error::GroupTooLarge {
            order: order.min(usize::MAX as u128) as usize,
            cap,
        });
    }
    let e = WeylElt::identity(rs);
    let mut seen: HashSet<WeylElt> = HashSet::new();
    seen.insert(e.clone());
    let mut out = vec![e.clone()];
    let mut queue = VecDeque::from([e]);
    while let Some(w) = queue.pop_front() {
        for i in 1..=rs.rank() {
            let next = w.mul_simple_right(i);
            if seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}

pub fn format_one_line(perm: &[usize]) -> String {
    if perm.iter().all(|&x| x < 10) {
        perm.iter().map(|x| x.to_string()).collect()
    } else {
        perm.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parse one-line notation: a digit string such as `513624`, or a
/// comma-separated list for permutations of more than nine letters.
pub fn parse_one_line(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad one-line notation {s:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else if !s.is_empty() && s.chars().all(|c| c.is_ascii_digit()) {
        Ok(s.chars().map(|c| c as usize - '0' as usize).collect())
    } else {
        Err(bad())
    }
}
