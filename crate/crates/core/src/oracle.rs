//! Word-based reference computations, independent of the root-sign length
//! formula, the descent recursion for Bruhat order and the descent-based
//! parabolic machinery. Exponential; meant for small groups.
//!
//! Only group multiplication and element equality are shared with the main
//! path. Lengths come from breadth-first distances in the Cayley graph.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use itertools::Itertools;

use crate::rootsys::RootSystem;
use crate::subset::SimpleSubset;
use crate::weyl::WeylElt;
use crate::word::Word;

/// Cayley-graph data for `W` (or a parabolic subgroup `W_J`).
pub struct WordOracle {
    rs: Arc<RootSystem>,
    /// Element -> (word distance from e, one geodesic word).
    table: HashMap<WeylElt, (usize, Vec<usize>)>,
}

impl WordOracle {
    pub fn new(rs: &Arc<RootSystem>) -> Self {
        Self::for_generators(rs, SimpleSubset::full(rs.rank()))
    }

    pub fn for_generators(rs: &Arc<RootSystem>, gens: SimpleSubset) -> Self {
        let e = WeylElt::identity(rs);
        let mut table = HashMap::new();
        table.insert(e.clone(), (0, Vec::new()));
        let mut queue = VecDeque::from([e]);
        while let Some(w) = queue.pop_front() {
            let (d, word) = table[&w].clone();
            for i in gens.iter() {
                let next = w.mul_simple_right(i);
                if !table.contains_key(&next) {
                    let mut nw = word.clone();
                    nw.push(i);
                    table.insert(next.clone(), (d + 1, nw));
                    queue.push_back(next);
                }
            }
        }
        WordOracle {
            rs: rs.clone(),
            table,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn length(&self, w: &WeylElt) -> usize {
        self.table[w].0
    }

    pub fn geodesic(&self, w: &WeylElt) -> Word {
        Word(self.table[w].1.clone())
    }

    /// The element of maximal word length.
    pub fn longest(&self) -> WeylElt {
        self.table
            .iter()
            .max_by_key(|(_, (d, _))| *d)
            .map(|(w, _)| w.clone())
            .expect("nonempty")
    }

    /// Products of the subwords of a geodesic for `w` that are themselves
    /// geodesics. By the subword property this is `[e, w]`.
    pub fn subword_interval(&self, w: &WeylElt) -> HashSet<WeylElt> {
        let word = self.geodesic(w);
        let letters = word.letters();
        let mut out = HashSet::new();
        for mask in 0u32..(1 << letters.len()) {
            let sub: Vec<usize> = (0..letters.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| letters[k])
                .collect();
            let v = WeylElt::from_word(&self.rs, &Word(sub.clone())).expect("in range");
            if self.length(&v) == sub.len() {
                out.insert(v);
            }
        }
        out
    }

    /// Whether `w` is a product of pairwise distinct simple reflections,
    /// found by trying every arrangement of every subset of generators.
    pub fn is_distinct_product(&self, w: &WeylElt) -> bool {
        let n = self.rs.rank();
        let len = self.length(w);
        if len > n {
            return false;
        }
        (1..=n)
            .permutations(len)
            .any(|p| WeylElt::from_word(&self.rs, &Word(p)).expect("in range") == *w)
    }

    /// Whether `w` is the product of all simple reflections in some order.
    pub fn is_coxeter(&self, w: &WeylElt) -> bool {
        self.length(w) == self.rs.rank() && self.is_distinct_product(w)
    }

    /// Left descents by word length: `l(s_i w) < l(w)`.
    pub fn left_descents(&self, w: &WeylElt) -> SimpleSubset {
        let s = |i| WeylElt::from_word(&self.rs, &Word(vec![i])).expect("in range");
        SimpleSubset::from_indices(
            (1..=self.rs.rank()).filter(|&i| self.length(&(&s(i) * w)) < self.length(w)),
        )
    }

    /// `w = w_{0,J} c` with lengths adding and `c` Coxeter, all by words.
    pub fn spherical_levi(&self, w: &WeylElt, parabolic: SimpleSubset) -> bool {
        let w0j = WordOracle::for_generators(&self.rs, parabolic).longest();
        let c = &w0j * w;
        self.length(w) == self.length(&w0j) + self.length(&c) && self.is_coxeter(&c)
    }
}
