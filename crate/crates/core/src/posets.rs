//! Bruhat intervals as explicit graded posets.
//!
//! The poset of `G`-orbit closures in `G ×_B X_wB` is the poset of
//! `B`-orbit closures in `X_wB`, which is the lower Bruhat interval `[e, w]`.
//! [`IntervalPoset`] is that interval.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::spherical::gbsdh_wonderful;
use crate::subset::SimpleSubset;
use crate::weyl::WeylElt;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct IntervalPoset {
    elements: Vec<WeylElt>,
    /// `up[i]` lists `j` with `elements[i] ⋖ elements[j]`.
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    ranks: Vec<usize>,
}

impl IntervalPoset {
    fn from_elements(elements: Vec<WeylElt>) -> Self {
        let n = elements.len();
        let ranks: Vec<usize> = elements.iter().map(WeylElt::length).collect();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        // elements are sorted by length, so each rank is a contiguous block
        let start = |r: usize| ranks.partition_point(|&x| x < r);
        for i in 0..n {
            let r = ranks[i];
            for j in start(r + 1)..start(r + 2) {
                if elements[i].bruhat_leq(&elements[j]) {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        IntervalPoset {
            elements,
            up,
            down,
            ranks,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElt] {
        &self.elements
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Covering pairs `(i, j)` with `elements[i] ⋖ elements[j]`.
    pub fn covers(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn rank(&self) -> usize {
        self.ranks[self.top()]
    }

    /// Number of elements covered by the maximum.
    pub fn coatom_count(&self) -> usize {
        self.down[self.top()].len()
    }

    /// Unique minimum and maximum, and covers raise the rank by exactly one,
    /// so every maximal chain has length `rank()`.
    pub fn is_graded(&self) -> bool {
        let top = self.top();
        let minimal = (0..self.len()).filter(|&i| self.down[i].is_empty()).count();
        let maximal = (0..self.len()).filter(|&i| self.up[i].is_empty()).count();
        minimal == 1
            && maximal == 1
            && self.down[0].is_empty()
            && self.up[top].is_empty()
            && self.covers().all(|(i, j)| self.ranks[j] == self.ranks[i] + 1)
    }

    /// `leq[i]` is the set of indices `j` with `elements[i] <= elements[j]`,
    /// as a bitset.
    fn order_bitsets(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let words = n.div_ceil(64);
        let mut above = vec![vec![0u64; words]; n];
        for i in (0..n).rev() {
            above[i][i / 64] |= 1 << (i % 64);
            for &j in &self.up[i] {
                let (lo, hi) = above.split_at_mut(j);
                for (a, b) in lo[i].iter_mut().zip(&hi[0]) {
                    *a |= *b;
                }
            }
        }
        above
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].bruhat_leq(&self.elements[j])
    }

    /// Whether the poset is isomorphic to the lattice of subsets of a
    /// `rank()`-element set.
    pub fn is_boolean(&self) -> bool {
        let n = self.rank();
        if n >= 32 || self.len() != 1usize << n {
            return false;
        }
        let mut sizes = vec![0usize; n + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        let mut binom = 1usize;
        for (k, &s) in sizes.iter().enumerate() {
            if s != binom {
                return false;
            }
            binom = binom * (n - k) / (k + 1);
        }
        let top = &self.elements[self.top()];
        let labels: Vec<u32> = if top.is_distinct_product() {
            // support labeling, positions taken inside supp(top)
            let positions: Vec<usize> = top.support().to_vec();
            self.elements
                .iter()
                .map(|v| {
                    let s = v.support();
                    positions
                        .iter()
                        .enumerate()
                        .filter(|(_, &g)| s.contains(g))
                        .fold(0u32, |acc, (k, _)| acc | (1 << k))
                })
                .collect()
        } else {
            self.atom_labels()
        };
        self.labels_form_isomorphism(&labels, n)
    }

    /// Each element labeled by the set of atoms below it.
    fn atom_labels(&self) -> Vec<u32> {
        let order = self.order_bitsets();
        let atoms: Vec<usize> = (0..self.len()).filter(|&i| self.ranks[i] == 1).collect();
        (0..self.len())
            .map(|x| {
                atoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| order[a][x / 64] & (1 << (x % 64)) != 0)
                    .fold(0u32, |acc, (k, _)| acc | (1 << k))
            })
            .collect()
    }

    fn labels_form_isomorphism(&self, labels: &[u32], n: usize) -> bool {
        let mut hit = vec![false; 1 << n];
        for &l in labels {
            if l as usize >= hit.len() || hit[l as usize] {
                return false;
            }
            hit[l as usize] = true;
        }
        let order = self.order_bitsets();
        (0..self.len()).all(|x| {
            (0..self.len()).all(|y| {
                let le = order[x][y / 64] & (1 << (y % 64)) != 0;
                le == (labels[x] & !labels[y] == 0)
            })
        })
    }

    fn labels(&self) -> Vec<String> {
        self.elements.iter().map(|v| v.reduced_word().to_string()).collect()
    }

    /// Graphviz description; nodes are labeled by canonical reduced words.
    pub fn to_dot(&self) -> String {
        let labels = self.labels();
        let mut out = String::from("digraph interval {\n  rankdir=BT;\n");
        for (i, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{l}\"];");
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Node {
            id: usize,
            word: String,
            length: usize,
        }
        let labels = self.labels();
        let nodes: Vec<Node> = labels
            .into_iter()
            .enumerate()
            .map(|(id, word)| Node {
                id,
                word,
                length: self.ranks[id],
            })
            .collect();
        let edges: Vec<[usize; 2]> = self.covers().map(|(i, j)| [i, j]).collect();
        let top = &self.elements[self.top()];
        json!({
            "schema": 1,
            "group": top.root_system().name(),
            "top": top.reduced_word().to_string(),
            "size": self.len(),
            "nodes": nodes,
            "edges": edges,
        })
    }
}

/// The lower interval `[e, w]`.
pub fn bruhat_interval(w: &WeylElt) -> IntervalPoset {
    IntervalPoset::from_elements(w.lower_interval())
}

/// `{v ∈ W^I : v <= w}` for `w ∈ W^I`.
pub fn parabolic_interval(w: &WeylElt, parabolic: SimpleSubset) -> Result<IntervalPoset> {
    if !w.is_min_rep(parabolic) {
        return Err(Error::NotMinimalRep(parabolic.to_string()));
    }
    Ok(IntervalPoset::from_elements(
        w.lower_interval()
            .into_iter()
            .filter(|v| v.is_min_rep(parabolic))
            .collect(),
    ))
}

pub fn coatom_count(p: &IntervalPoset) -> usize {
    p.coatom_count()
}

pub fn is_boolean(p: &IntervalPoset) -> bool {
    p.is_boolean()
}

/// Rank of the wonderful variety `G ×_B X_w̲`: the word length, which equals
/// the number of coatoms of `[e, w]`.
pub fn wonderful_rank(rs: &Arc<RootSystem>, word: &Word) -> Result<usize> {
    if !gbsdh_wonderful(rs, word)? {
        return Err(Error::NotWonderful(word.to_string()));
    }
    debug_assert_eq!(
        bruhat_interval(&WeylElt::from_word(rs, word)?).coatom_count(),
        word.len()
    );
    Ok(word.len())
}
