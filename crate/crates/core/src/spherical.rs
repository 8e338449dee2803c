//! Sphericality tests for Schubert and BSDH varieties, and the
//! toric/spherical/wonderful equivalences for their `G`-versions.
//!
//! Every test factors `w = w_{0,J} c` with `c = w_{0,J} w` (left
//! multiplication, `w_{0,J}` being an involution) and inspects `c`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::{support_of, RootSystem, RootVector};
use crate::schubert::is_toric;
use crate::subset::SimpleSubset;
use crate::weyl::{longest_element, WeylElt};
use crate::word::Word;

/// Outcome of a factorization test `w = w_{0,J} c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalVerdict {
    pub holds: bool,
    /// `c = w_{0,J} w`, present when the test holds.
    pub coxeter_part: Option<WeylElt>,
    /// `(l(w), l(w_{0,J}), l(c))`.
    pub lengths: (usize, usize, usize),
    /// `l(c)` equals the rank.
    pub dim_condition: bool,
}

impl SphericalVerdict {
    pub fn length_additive(&self) -> bool {
        let (lw, l0, lc) = self.lengths;
        lw == l0 + lc
    }
}

impl Serialize for SphericalVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            holds: bool,
            coxeter_part_word: Option<String>,
            l_w: usize,
            #[serde(rename = "l_w0J")]
            l_w0j: usize,
            l_c: usize,
            dim_condition: bool,
        }
        Repr {
            holds: self.holds,
            coxeter_part_word: self.coxeter_part.as_ref().map(|c| c.reduced_word().to_string()),
            l_w: self.lengths.0,
            l_w0j: self.lengths.1,
            l_c: self.lengths.2,
            dim_condition: self.dim_condition,
        }
        .serialize(serializer)
    }
}

/// `R+(w^{-1}) = R1 ⊔ R2`: roots supported inside `J`, and the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPartition {
    pub r1: Vec<RootVector>,
    pub r2: Vec<RootVector>,
}

fn check_descent_subset(w: &WeylElt, parabolic: SimpleSubset) -> Result<()> {
    let descents = w.left_descents();
    if parabolic.is_subset(descents) {
        Ok(())
    } else {
        Err(Error::NotDescentSubset {
            subset: parabolic.to_string(),
            descents: descents.to_string(),
        })
    }
}

pub fn r1_r2_partition(w: &WeylElt, parabolic: SimpleSubset) -> Result<RootPartition> {
    check_descent_subset(w, parabolic)?;
    let (r1, r2) = w
        .inversion_set()
        .into_iter()
        .partition(|beta| support_of(beta).is_subset(parabolic));
    Ok(RootPartition { r1, r2 })
}

fn factor(w: &WeylElt, parabolic: SimpleSubset, accept: impl Fn(&WeylElt) -> bool) -> SphericalVerdict {
    let w0j = longest_element(w.root_system(), parabolic);
    let c = &w0j * w;
    let lengths = (w.length(), w0j.length(), c.length());
    let additive = lengths.0 == lengths.1 + lengths.2;
    let holds = additive && accept(&c);
    SphericalVerdict {
        holds,
        dim_condition: c.length() == w.rank(),
        coxeter_part: holds.then_some(c),
        lengths,
    }
}

/// `X_wB` is a spherical `L_J`-variety with `dim B_J = dim X_wB` iff
/// `w = w_{0,J} c` with `c` Coxeter and lengths additive.
pub fn spherical_levi_test(w: &WeylElt, parabolic: SimpleSubset) -> Result<SphericalVerdict> {
    check_descent_subset(w, parabolic)?;
    Ok(factor(w, parabolic, WeylElt::is_coxeter))
}

/// Relaxed form: `c` only needs to be a product of distinct simple
/// reflections; `dim_condition` reports whether it is in fact Coxeter-length.
pub fn spherical_relaxed_test(w: &WeylElt, parabolic: SimpleSubset) -> Result<SphericalVerdict> {
    check_descent_subset(w, parabolic)?;
    Ok(factor(w, parabolic, WeylElt::is_distinct_product))
}

/// All `J ⊆ J(w)` passing [`spherical_levi_test`].
pub fn spherical_levis(w: &WeylElt) -> Vec<SimpleSubset> {
    w.left_descents()
        .subsets()
        .filter(|&j| factor(w, j, WeylElt::is_coxeter).holds)
        .collect()
}

/// All `J ⊆ J(w)` passing [`spherical_relaxed_test`].
pub fn spherical_relaxed_levis(w: &WeylElt) -> Vec<SimpleSubset> {
    w.left_descents()
        .subsets()
        .filter(|&j| factor(w, j, WeylElt::is_distinct_product).holds)
        .collect()
}

/// Letters `i_j` that commute with every letter up to position `j`.
pub fn bsdh_descent_set(rs: &RootSystem, word: &Word) -> Result<SimpleSubset> {
    word.check_range(rs.rank())?;
    let letters = word.letters();
    Ok(SimpleSubset::from_indices(
        letters
            .iter()
            .enumerate()
            .filter(|&(j, &i)| letters[..j].iter().all(|&k| rs.commutes(i, k)))
            .map(|(_, &i)| i),
    ))
}

/// A word together with its reducedness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsdhWord {
    pub word: Word,
    pub reduced: bool,
}

impl BsdhWord {
    pub fn new(rs: &Arc<RootSystem>, word: Word) -> Result<Self> {
        let w = WeylElt::from_word(rs, &word)?;
        let reduced = w.length() == word.len();
        Ok(BsdhWord { word, reduced })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BsdhVerdict {
    /// `J(w̲)`.
    pub descent_set: SimpleSubset,
    /// Relaxed verdict for `J(w̲)`: `w_{0,J(w̲)} w` a distinct product.
    pub verdict: SphericalVerdict,
    /// `w_{0,J(w̲)} w` is a Coxeter element.
    pub coxeter: bool,
    /// `s_{i_1} w` is a product of distinct simple reflections.
    pub first_letter: bool,
}

pub fn bsdh_spherical_test(rs: &Arc<RootSystem>, word: &Word) -> Result<BsdhVerdict> {
    let bw = BsdhWord::new(rs, word.clone())?;
    if !bw.reduced {
        return Err(Error::NotReduced(word.to_string()));
    }
    let w = WeylElt::from_word(rs, word)?;
    let descent_set = bsdh_descent_set(rs, word)?;
    let verdict = factor(&w, descent_set, WeylElt::is_distinct_product);
    let coxeter = verdict.holds && verdict.dim_condition;
    let first_letter = match word.letters().first() {
        Some(&i) => w.mul_simple_left(i).is_distinct_product(),
        None => true,
    };
    Ok(BsdhVerdict {
        descent_set,
        verdict,
        coxeter,
        first_letter,
    })
}

/// `G ×_B X_wB` is spherical iff `X_wB` is toric.
pub fn gschubert_spherical(w: &WeylElt) -> bool {
    is_toric(w)
}

/// `G ×_B X_w̲` for a reduced word: spherical iff `X_wB` is toric. Words
/// longer than the rank are rejected before evaluating the product.
pub fn gbsdh_spherical(rs: &Arc<RootSystem>, word: &Word) -> Result<bool> {
    let bw = BsdhWord::new(rs, word.clone())?;
    if !bw.reduced {
        return Err(Error::NotReduced(word.to_string()));
    }
    if word.len() > rs.rank() {
        return Ok(false);
    }
    Ok(is_toric(&WeylElt::from_word(rs, word)?))
}

/// `G ×_B X_w̲` is wonderful iff `X_w̲` is toric, taken here as: the word
/// is reduced and its letters are distinct.
pub fn gbsdh_wonderful(rs: &Arc<RootSystem>, word: &Word) -> Result<bool> {
    let w = WeylElt::from_word(rs, word)?;
    Ok(w.length() == word.len() && w.is_distinct_product())
}

/// `dim G ×_B X_w̲ = |R+| + |w̲|`.
pub fn gbsdh_dimension(rs: &RootSystem, word: &Word) -> usize {
    rs.num_positive_roots() + word.len()
}

/// The words `w̲^j` obtained by suppressing one letter.
pub fn deletion_subwords(word: &Word) -> Vec<Word> {
    (0..word.len()).map(|j| word.delete(j)).collect()
}

/// Finiteness of `B`-orbits in `X_w̲` via the deletion recursion: a reduced
/// word has finitely many orbits iff all of its deletion subwords do.
///
/// Returns `Some(true)` when every branch bottoms out in reduced words, and
/// `None` as soon as a non-reduced subword is reached (no test is available
/// there).
pub fn bsdh_finitely_many_orbits(rs: &Arc<RootSystem>, word: &Word) -> Result<Option<bool>> {
    fn go(
        rs: &Arc<RootSystem>,
        word: &Word,
        memo: &mut HashMap<Word, Option<bool>>,
    ) -> Result<Option<bool>> {
        if let Some(&hit) = memo.get(word) {
            return Ok(hit);
        }
        let out = if !BsdhWord::new(rs, word.clone())?.reduced {
            None
        } else if word.len() <= 1 {
            Some(true)
        } else {
            let mut acc = Some(true);
            for sub in deletion_subwords(word) {
                if go(rs, &sub, memo)?.is_none() {
                    acc = None;
                    break;
                }
            }
            acc
        };
        memo.insert(word.clone(), out);
        Ok(out)
    }
    go(rs, word, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{enumerate_group, parse_one_line};

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_spec(s.parse().unwrap()).unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn elt(r: &Arc<RootSystem>, s: &str) -> WeylElt {
        WeylElt::from_word(r, &word(s)).unwrap()
    }

    fn oneline(r: &Arc<RootSystem>, s: &str) -> WeylElt {
        WeylElt::from_one_line(r, &parse_one_line(s).unwrap()).unwrap()
    }

    fn j(ix: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(ix.iter().copied())
    }

    #[test]
    fn partition_examples() {
        let a2 = rs("A2");
        let w0 = longest_element(&a2, SimpleSubset::full(2));
        let p = r1_r2_partition(&w0, j(&[1, 2])).unwrap();
        assert_eq!((p.r1.len(), p.r2.len()), (3, 0));

        let a3 = rs("A3");
        let p = r1_r2_partition(&oneline(&a3, "4231"), j(&[1, 3])).unwrap();
        assert_eq!((p.r1.len(), p.r2.len()), (2, 3));

        let a5 = rs("A5");
        let p = r1_r2_partition(&oneline(&a5, "513624"), j(&[2, 4])).unwrap();
        assert_eq!((p.r1.len(), p.r2.len()), (2, 5));

        assert!(matches!(
            r1_r2_partition(&oneline(&a3, "4231"), j(&[2])),
            Err(Error::NotDescentSubset { .. })
        ));
    }

    #[test]
    fn levi_test_examples() {
        let a5 = rs("A5");
        let w = elt(&a5, "2,4,5,3,4,2,1");
        let v = spherical_levi_test(&w, j(&[2, 4])).unwrap();
        assert!(v.holds && v.dim_condition);
        assert_eq!(v.lengths, (7, 2, 5));
        // the factor printed alongside the worked example
        assert_eq!(v.coxeter_part.unwrap(), elt(&a5, "5,3,4,2,1"));

        let a3 = rs("A3");
        let w = oneline(&a3, "4231");
        let v = spherical_levi_test(&w, j(&[1, 3])).unwrap();
        assert!(v.holds);
        let c = v.coxeter_part.unwrap();
        assert_eq!(c.to_string(), "3142");
        assert_eq!(c, elt(&a3, "2,1,3"));

        let a2 = rs("A2");
        let w0 = longest_element(&a2, SimpleSubset::full(2));
        let v = spherical_levi_test(&w0, SimpleSubset::empty()).unwrap();
        assert!(!v.holds && v.coxeter_part.is_none());
    }

    #[test]
    fn relaxed_examples() {
        let a3 = rs("A3");
        let v = spherical_relaxed_test(&WeylElt::identity(&a3), SimpleSubset::empty()).unwrap();
        assert!(v.holds && !v.dim_condition);
        let v = spherical_relaxed_test(&elt(&a3, "1,3"), j(&[1, 3])).unwrap();
        assert!(v.holds);
        assert!(v.coxeter_part.unwrap().is_identity());
        let a5 = rs("A5");
        let v = spherical_relaxed_test(&oneline(&a5, "513624"), j(&[2, 4])).unwrap();
        assert!(v.holds && v.dim_condition);
    }

    #[test]
    fn verdict_json_fields() {
        let a3 = rs("A3");
        let v = spherical_levi_test(&oneline(&a3, "4231"), j(&[1, 3])).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["holds"], true);
        assert_eq!(json["coxeter_part_word"], "2,1,3");
        assert_eq!(json["l_w"], 5);
        assert_eq!(json["l_w0J"], 2);
        assert_eq!(json["l_c"], 3);
        assert_eq!(json["dim_condition"], true);
    }

    #[test]
    fn bsdh_descent_examples() {
        let a5 = rs("A5");
        assert_eq!(bsdh_descent_set(&a5, &word("2,4,5,3,4,2,1")).unwrap(), j(&[2, 4]));
        assert_eq!(bsdh_descent_set(&a5, &word("1")).unwrap(), j(&[1]));
        let a2 = rs("A2");
        assert_eq!(bsdh_descent_set(&a2, &word("1,2")).unwrap(), j(&[1]));
        assert!(bsdh_descent_set(&a2, &word("1,3")).is_err());
    }

    #[test]
    fn bsdh_test_examples() {
        let a5 = rs("A5");
        let v = bsdh_spherical_test(&a5, &word("2,4,5,3,4,2,1")).unwrap();
        assert!(v.verdict.holds && v.coxeter);

        let a1 = rs("A1");
        let v = bsdh_spherical_test(&a1, &word("1")).unwrap();
        assert!(v.verdict.holds && v.first_letter);
        assert!(v.verdict.coxeter_part.unwrap().is_identity());

        let a2 = rs("A2");
        let v = bsdh_spherical_test(&a2, &word("1,2,1")).unwrap();
        assert_eq!(v.descent_set, j(&[1]));
        assert!(v.verdict.holds && v.coxeter && v.first_letter);

        assert!(matches!(
            bsdh_spherical_test(&a2, &word("1,1")),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn g_variety_examples() {
        let a2 = rs("A2");
        assert!(gbsdh_spherical(&a2, &word("1,2")).unwrap());
        assert!(!gbsdh_spherical(&a2, &word("1,2,1")).unwrap());
        assert!(gbsdh_spherical(&a2, &Word::empty()).unwrap());
        assert!(gschubert_spherical(&WeylElt::identity(&a2)));
        assert!(!gschubert_spherical(&longest_element(&a2, SimpleSubset::full(2))));
        assert!(gbsdh_spherical(&a2, &word("1,1")).is_err());

        let a3 = rs("A3");
        assert!(gbsdh_wonderful(&a3, &word("1,3")).unwrap());
        assert!(!gbsdh_wonderful(&a2, &word("1,1")).unwrap());
        assert!(!gbsdh_wonderful(&a3, &word("2,1,3,2")).unwrap());

        assert_eq!(gbsdh_dimension(&a2, &word("1,2")), 5);
        assert_eq!(gbsdh_dimension(&a2, &Word::empty()), 3);
        assert_eq!(gbsdh_dimension(&rs("A5"), &word("2,4,5,3,4,2,1")), 22);
    }

    #[test]
    fn deletion_recursion() {
        let a2 = rs("A2");
        let subs = deletion_subwords(&word("1,2,1"));
        assert_eq!(subs, vec![word("2,1"), word("1,1"), word("1,2")]);
        assert_eq!(bsdh_finitely_many_orbits(&a2, &word("1,2")).unwrap(), Some(true));
        assert_eq!(bsdh_finitely_many_orbits(&a2, &word("1,2,1")).unwrap(), None);
        let a3 = rs("A3");
        for w in enumerate_group(&a3, 100).unwrap() {
            let rw = w.reduced_word();
            let finite = bsdh_finitely_many_orbits(&a3, &rw).unwrap();
            assert_eq!(finite == Some(true), is_toric(&w), "{w}");
        }
    }

    #[test]
    fn levi_properties_in_a3_b3() {
        for name in ["A3", "B3"] {
            let r = rs(name);
            for w in enumerate_group(&r, 100).unwrap() {
                if w.is_coxeter() {
                    assert!(spherical_levi_test(&w, SimpleSubset::empty()).unwrap().holds);
                }
                for jj in w.left_descents().subsets() {
                    let full = spherical_levi_test(&w, jj).unwrap();
                    let relaxed = spherical_relaxed_test(&w, jj).unwrap();
                    if full.holds {
                        assert!(full.length_additive() && full.dim_condition);
                        assert!(relaxed.holds);
                        let p = r1_r2_partition(&w, jj).unwrap();
                        assert_eq!(p.r2.len(), r.rank());
                        assert_eq!(p.r1.len(), full.lengths.1);
                    }
                }
                // J(w̲) ⊆ J(w) for every reduced word
                for rw in w.reduced_words().unwrap() {
                    assert!(bsdh_descent_set(&r, &rw).unwrap().is_subset(w.left_descents()));
                }
            }
        }
    }
}
