use std::sync::Arc;

use proptest::prelude::*;

use cskit::oracle::WordOracle;
use cskit::schubert::{parabolic_poincare, poincare};
use cskit::{RootSystem, SimpleSubset, WeylElt, Word};

const TYPES: [&str; 8] = ["A3", "A4", "B3", "C3", "D4", "G2", "F4", "E6"];

fn rs(name: &str) -> Arc<RootSystem> {
    RootSystem::from_spec(name.parse().unwrap()).unwrap()
}

/// A root system together with a random word in its generators.
fn word_in() -> impl Strategy<Value = (Arc<RootSystem>, Word)> {
    prop::sample::select(TYPES.to_vec()).prop_flat_map(|name| {
        let r = rs(name);
        let n = r.rank();
        prop::collection::vec(1..=n, 0..14).prop_map(move |v| (r.clone(), Word(v)))
    })
}

fn elt((r, w): &(Arc<RootSystem>, Word)) -> WeylElt {
    WeylElt::from_word(r, w).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflections_are_involutions(x in word_in(), i in 1usize..=6) {
        let w = elt(&x);
        let i = 1 + (i - 1) % w.rank();
        prop_assert_eq!(w.mul_simple_right(i).mul_simple_right(i), w.clone());
        prop_assert_eq!(w.mul_simple_left(i).mul_simple_left(i), w);
    }

    #[test]
    fn length_is_subadditive(x in word_in(), y in word_in()) {
        let (r, _) = &x;
        let u = elt(&x);
        let v = WeylElt::from_word(r, &Word(y.1.0.iter().map(|&k| 1 + (k - 1) % r.rank()).collect())).unwrap();
        let uv = &u * &v;
        prop_assert!(uv.length() <= u.length() + v.length());
        prop_assert!(uv.length() >= u.length().abs_diff(v.length()));
        prop_assert!(u.length() <= x.1.len());
    }

    #[test]
    fn inverse_and_reduced_word(x in word_in()) {
        let w = elt(&x);
        let r = &x.0;
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!((&w * &w.inverse()).is_identity());
        let red = w.reduced_word();
        prop_assert_eq!(red.len(), w.length());
        prop_assert_eq!(WeylElt::from_word(r, &red).unwrap(), w.clone());
        prop_assert_eq!(w.left_descents(), w.inverse().right_descents());
    }

    #[test]
    fn coset_factorization_is_length_additive(x in word_in(), bits in 0u32..64) {
        let w = elt(&x);
        let parabolic = SimpleSubset::from_bits(bits).intersection(SimpleSubset::full(w.rank()));
        let rep = w.min_coset_rep(parabolic);
        let rest = &rep.inverse() * &w;
        prop_assert!(rep.is_min_rep(parabolic));
        prop_assert!(rest.support().is_subset(parabolic));
        prop_assert_eq!(rep.length() + rest.length(), w.length());
        prop_assert!(rep.bruhat_leq(&w));
    }

    #[test]
    fn subword_elements_lie_below(x in word_in(), mask in any::<u64>()) {
        let (r, word) = &x;
        let w = elt(&x);
        let red = w.reduced_word();
        let sub: Vec<usize> = red.letters().iter().enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &l)| l)
            .collect();
        let v = WeylElt::from_word(r, &Word(sub)).unwrap();
        prop_assert!(v.bruhat_leq(&w), "word {}", word);
        prop_assert_eq!(w.bruhat_leq(&v), v == w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn small_groups_agree_with_cayley_oracle(name in prop::sample::select(vec!["A3", "B3", "G2"]), seed in any::<u64>()) {
        let r = rs(name);
        let oracle = WordOracle::new(&r);
        let g = cskit::enumerate_group(&r, 1000).unwrap();
        let w = &g[(seed as usize) % g.len()];
        prop_assert_eq!(oracle.length(w), w.length());
        prop_assert_eq!(oracle.is_distinct_product(w), w.is_distinct_product());
        prop_assert_eq!(oracle.is_coxeter(w), w.is_coxeter());
        prop_assert_eq!(oracle.subword_interval(w).len() as u64, poincare(w).eval(1));
    }

    #[test]
    fn parabolic_poincare_counts_minimal_elements(name in prop::sample::select(vec!["A3", "A4", "B3"]), seed in any::<u64>(), bits in 0u32..16) {
        let r = rs(name);
        let g = cskit::enumerate_group(&r, 1000).unwrap();
        let parabolic = SimpleSubset::from_bits(bits).intersection(SimpleSubset::full(r.rank()));
        let w = g[(seed as usize) % g.len()].min_coset_rep(parabolic);
        let p = parabolic_poincare(&w, parabolic).unwrap();
        let below = g.iter().filter(|v| v.is_min_rep(parabolic) && v.bruhat_leq(&w)).count();
        prop_assert_eq!(p.eval(1), below as u64);
        prop_assert_eq!(p.degree(), Some(w.length()));
    }
}
