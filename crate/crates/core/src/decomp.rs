//! Parabolic and Billey-Postnikov (BP) decompositions, and the three-way
//! smoothness equivalence for spherical Schubert varieties of Levi type.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::schubert::{is_smooth, is_toric, parabolic_poincare, Smoothness};
use crate::spherical::spherical_levi_test;
use crate::subset::SimpleSubset;
use crate::weyl::WeylElt;

/// `w = v u` with `v ∈ W^K`, `u ∈ W_K ∩ W^I` and `l(w) = l(v) + l(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDecomposition {
    pub v: WeylElt,
    pub u: WeylElt,
    pub inner: SimpleSubset,
    pub outer: SimpleSubset,
}

fn check_subsets(w: &WeylElt, inner: SimpleSubset, outer: SimpleSubset) -> Result<()> {
    if outer.is_empty() || !inner.is_subset(outer) || outer.max_index() > w.rank() {
        return Err(Error::BadSubsets(format!("I = {inner}, K = {outer}")));
    }
    if !w.is_min_rep(inner) {
        return Err(Error::NotMinimalRep(inner.to_string()));
    }
    Ok(())
}

pub fn parabolic_decompose(
    w: &WeylElt,
    inner: SimpleSubset,
    outer: SimpleSubset,
) -> Result<ParabolicDecomposition> {
    check_subsets(w, inner, outer)?;
    let v = w.min_coset_rep(outer);
    let u = &v.inverse() * w;
    debug_assert_eq!(v.length() + u.length(), w.length());
    debug_assert!(u.is_min_rep(inner));
    Ok(ParabolicDecomposition { v, u, inner, outer })
}

/// Whether `P_{w,I} = P_{u,I} · P_{v,K}` for the parabolic decomposition.
pub fn is_bp_decomposition(w: &WeylElt, inner: SimpleSubset, outer: SimpleSubset) -> Result<bool> {
    let d = parabolic_decompose(w, inner, outer)?;
    let lhs = parabolic_poincare(w, inner)?;
    let rhs = &parabolic_poincare(&d.u, inner)? * &parabolic_poincare(&d.v, outer)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmoothEquivReport {
    #[serde(serialize_with = "ser_elt")]
    pub w: WeylElt,
    #[serde(rename = "J")]
    pub parabolic: SimpleSubset,
    #[serde(serialize_with = "ser_elt")]
    pub c: WeylElt,
    pub smooth_w: Smoothness,
    pub smooth_winv: Smoothness,
    /// `X_{c^{-1} P_J}` rationally smooth (and toric).
    pub quotient_ok: bool,
    /// `smooth_w == smooth_winv`.
    pub inverse_agrees: bool,
    pub consistent: bool,
}

fn ser_elt<S: serde::Serializer>(w: &WeylElt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

/// For `(w, J)` with `X_wB` a spherical `L_J`-variety of dimension
/// `dim B_J`, compare smoothness of `X_wB`, of `X_{w^{-1}B}`, and of the
/// toric quotient `X_{c^{-1}P_J}`.
pub fn check_theorem_smooth_equiv(w: &WeylElt, parabolic: SimpleSubset) -> Result<SmoothEquivReport> {
    let verdict = spherical_levi_test(w, parabolic)
        .map_err(|e| Error::HypothesisFailed(e.to_string()))?;
    let c = match verdict.coxeter_part {
        Some(c) if verdict.dim_condition => c,
        _ => {
            return Err(Error::HypothesisFailed(format!(
                "{w} is not w_0,J times a Coxeter element for J = {parabolic}"
            )))
        }
    };
    let c_inv = c.inverse();
    let rep = c_inv.min_coset_rep(parabolic);
    let quotient_ok =
        parabolic_poincare(&rep, parabolic)?.is_palindromic() && is_toric(&c_inv);

    let smooth_w = is_smooth(w);
    let smooth_winv = is_smooth(&w.inverse());
    if !smooth_w.is_decided() || !smooth_winv.is_decided() {
        return Err(Error::Undecidable(w.root_system().name()));
    }
    let inverse_agrees = smooth_w == smooth_winv;
    let consistent = inverse_agrees && smooth_w == Smoothness::from(quotient_ok);
    Ok(SmoothEquivReport {
        w: w.clone(),
        parabolic,
        c,
        smooth_w,
        smooth_winv,
        quotient_ok,
        inverse_agrees,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::rootsys::RootSystem;
    use crate::schubert::poincare;
    use crate::spherical::spherical_levis;
    use crate::weyl::{enumerate_group, longest_element, parse_one_line};

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_spec(s.parse().unwrap()).unwrap()
    }

    fn oneline(r: &Arc<RootSystem>, s: &str) -> WeylElt {
        WeylElt::from_one_line(r, &parse_one_line(s).unwrap()).unwrap()
    }

    fn j(ix: &[usize]) -> SimpleSubset {
        SimpleSubset::from_indices(ix.iter().copied())
    }

    #[test]
    fn decomposition_examples() {
        let a3 = rs("A3");
        let k = j(&[1, 3]);
        let w = oneline(&a3, "2413");
        let d = parabolic_decompose(&w, SimpleSubset::empty(), k).unwrap();
        assert_eq!(d.v, w);
        assert!(d.u.is_identity());

        let w = oneline(&a3, "4231");
        let d = parabolic_decompose(&w, SimpleSubset::empty(), k).unwrap();
        assert!(d.v.is_min_rep(k));
        assert_eq!(d.v.length() + d.u.length(), 5);
        assert_eq!(&d.v * &d.u, w);
        assert_eq!(d.u.support().intersection(k), d.u.support());

        let a2 = rs("A2");
        let w0 = longest_element(&a2, SimpleSubset::full(2));
        let d = parabolic_decompose(&w0, SimpleSubset::empty(), j(&[1])).unwrap();
        assert_eq!((d.v.length(), d.u.length()), (2, 1));
    }

    #[test]
    fn decomposition_errors() {
        let a3 = rs("A3");
        let w = oneline(&a3, "4231");
        assert!(matches!(
            parabolic_decompose(&w, SimpleSubset::empty(), SimpleSubset::empty()),
            Err(Error::BadSubsets(_))
        ));
        assert!(matches!(
            parabolic_decompose(&w, j(&[2]), j(&[1])),
            Err(Error::BadSubsets(_))
        ));
        assert!(matches!(
            parabolic_decompose(&w, j(&[1]), j(&[1, 2])),
            Err(Error::NotMinimalRep(_))
        ));
    }

    #[test]
    fn decomposition_is_unique() {
        let a3 = rs("A3");
        let group = enumerate_group(&a3, 100).unwrap();
        for w in &group {
            for outer in SimpleSubset::full(3).subsets().filter(|s| !s.is_empty()) {
                for inner in outer.subsets().filter(|&i| w.is_min_rep(i)) {
                    let d = parabolic_decompose(w, inner, outer).unwrap();
                    let pairs: Vec<_> = group
                        .iter()
                        .filter(|v| v.is_min_rep(outer))
                        .filter_map(|v| {
                            let u = &v.inverse() * w;
                            let ok = u.support().is_subset(outer)
                                && u.is_min_rep(inner)
                                && v.length() + u.length() == w.length();
                            ok.then(|| (v.clone(), u))
                        })
                        .collect();
                    assert_eq!(pairs, vec![(d.v.clone(), d.u.clone())]);
                }
            }
        }
    }

    #[test]
    fn bp_examples() {
        let a3 = rs("A3");
        let k = j(&[1, 3]);
        // u = e is automatic when I = K
        assert!(is_bp_decomposition(&oneline(&a3, "2413"), k, k).unwrap());
        assert!(!is_bp_decomposition(&oneline(&a3, "2413"), SimpleSubset::empty(), k).unwrap());
        assert!(is_bp_decomposition(&oneline(&a3, "4231").inverse(), SimpleSubset::empty(), k).unwrap());

        let mut failures = 0;
        for w in enumerate_group(&a3, 100).unwrap() {
            for outer in SimpleSubset::full(3).subsets().filter(|s| !s.is_empty()) {
                let bp = is_bp_decomposition(&w, SimpleSubset::empty(), outer).unwrap();
                let d = parabolic_decompose(&w, SimpleSubset::empty(), outer).unwrap();
                let product = &poincare(&d.u) * &parabolic_poincare(&d.v, outer).unwrap();
                assert_eq!(bp, product == poincare(&w));
                failures += usize::from(!bp);
            }
        }
        assert!(failures > 0);
    }

    #[test]
    fn smooth_equiv_worked_example() {
        let a3 = rs("A3");
        let r = check_theorem_smooth_equiv(&oneline(&a3, "4231"), j(&[1, 3])).unwrap();
        assert_eq!(r.smooth_w, Smoothness::Singular);
        assert_eq!(r.smooth_winv, Smoothness::Singular);
        assert!(!r.quotient_ok);
        assert!(r.consistent);
        assert_eq!(r.c.to_string(), "3142");
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["w"], "4231");
        assert_eq!(json["J"], serde_json::json!([1, 3]));
        assert_eq!(json["smooth_w"], false);
    }

    #[test]
    fn smooth_equiv_coxeter_elements() {
        let a3 = rs("A3");
        let mut seen = 0;
        for w in enumerate_group(&a3, 100).unwrap().into_iter().filter(|w| w.is_coxeter()) {
            let r = check_theorem_smooth_equiv(&w, SimpleSubset::empty()).unwrap();
            assert_eq!(r.smooth_w, Smoothness::Smooth);
            assert!(r.quotient_ok && r.consistent);
            seen += 1;
        }
        assert_eq!(seen, 4);
    }

    #[test]
    fn smooth_equiv_hypothesis_and_undecidable() {
        let a2 = rs("A2");
        let w0 = longest_element(&a2, SimpleSubset::full(2));
        assert!(matches!(
            check_theorem_smooth_equiv(&w0, SimpleSubset::empty()),
            Err(Error::HypothesisFailed(_))
        ));
        let b2 = rs("B2");
        let c = WeylElt::from_word(&b2, &"1,2".parse().unwrap()).unwrap();
        assert!(matches!(
            check_theorem_smooth_equiv(&c, SimpleSubset::empty()),
            Err(Error::Undecidable(_))
        ));
    }

    #[test]
    fn smooth_equiv_consistent_in_d4() {
        let d4 = rs("D4");
        let mut checked = 0;
        for w in enumerate_group(&d4, 1000).unwrap() {
            for jj in spherical_levis(&w) {
                assert!(check_theorem_smooth_equiv(&w, jj).unwrap().consistent, "{w:?} {jj}");
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn inverse_smoothness_symmetry() {
        for name in ["A3", "A4"] {
            for w in enumerate_group(&rs(name), 200).unwrap() {
                assert_eq!(is_smooth(&w), is_smooth(&w.inverse()));
            }
        }
    }
}
