mod common;

use braidtwist::braid::{full_twist, make_positive};
use braidtwist::fdtc::{dehornoy_floor, fdtc_exact};
use braidtwist::{compare, handle_reduce, order_sign, BraidWord, OrderSign, Rational};
use common::same_braid;
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = (n - 1) as i32;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        let letters = v
            .into_iter()
            .map(|(i, pos)| if pos { i } else { -i })
            .collect();
        BraidWord::new(n, letters).unwrap()
    })
}

fn any_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(move |n| word(n, max_len))
}

fn pair(max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2usize..=4).prop_flat_map(move |n| (word(n, max_len), word(n, max_len)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn free_reduce_idempotent(w in any_word(24)) {
        let r = w.free_reduce();
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
    }

    #[test]
    fn exponent_sum_additive((a, b) in pair(16)) {
        prop_assert_eq!(a.concat(&b).unwrap().exponent_sum(), a.exponent_sum() + b.exponent_sum());
        prop_assert_eq!(a.inverse().exponent_sum(), -a.exponent_sum());
    }

    #[test]
    fn permutation_homomorphism((a, b) in pair(16)) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.permutation(), a.permutation().then(&b.permutation()));
        prop_assert!(full_twist(a.strands()).unwrap().permutation().is_identity());
    }

    #[test]
    fn handle_reduce_preserves_braid(w in any_word(12)) {
        let r = handle_reduce(&w).unwrap();
        prop_assert!(same_braid(&w, &r));
        prop_assert_eq!(r.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(r.permutation(), w.permutation());
    }

    #[test]
    fn order_equality_matches_oracle((a, b) in pair(8)) {
        let eq = compare(&a, &b).unwrap() == OrderSign::Equal;
        prop_assert_eq!(eq, same_braid(&a, &b));
    }

    #[test]
    fn relator_insertion_is_equal(
        (w, pos, i, far) in (3usize..=5).prop_flat_map(|n| (word(n, 10), 0usize..=10, 1..(n as i32 - 1), any::<bool>()))
    ) {
        let n = w.strands() as i32;
        let relator = if far && i + 2 < n {
            vec![i, i + 2, -i, -(i + 2)]
        } else {
            vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
        };
        let mut letters = w.letters().to_vec();
        let at = pos.min(letters.len());
        letters.splice(at..at, relator);
        let v = BraidWord::new(w.strands(), letters).unwrap();
        prop_assert!(same_braid(&v, &w));
        prop_assert_eq!(compare(&v, &w).unwrap(), OrderSign::Equal);
    }

    #[test]
    fn compare_antisymmetric((a, b) in pair(16)) {
        prop_assert_eq!(compare(&a, &b).unwrap(), compare(&b, &a).unwrap().reverse());
    }

    #[test]
    fn inverse_flips_sign(w in any_word(16)) {
        prop_assert_eq!(order_sign(&w.inverse()).unwrap(), order_sign(&w).unwrap().reverse());
    }

    #[test]
    fn make_positive_equals_twisted(w in (2usize..=4).prop_flat_map(|n| word(n, 5))) {
        let t = w.exponent_counts().negative as i64;
        let p = make_positive(&w, t).unwrap();
        prop_assert!(p.is_positive());
        let twisted = w.concat(&full_twist(w.strands()).unwrap().power(t)).unwrap();
        prop_assert!(same_braid(&p, &twisted));
    }

    #[test]
    fn floor_sandwich(w in (3usize..=4).prop_flat_map(|n| word(n, 10))) {
        let floor = dehornoy_floor(&w).unwrap().floor;
        let bt = fdtc_exact(&w).unwrap().value;
        prop_assert!(Rational::integer(floor) <= bt && bt <= Rational::integer(floor + 1));
    }

    #[test]
    fn word_json_roundtrip(w in any_word(20)) {
        let text = serde_json::to_string(&w).unwrap();
        let back: BraidWord = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn rational_roundtrip(p in -1000i64..1000, q in 1i64..50) {
        let r = Rational::new(p, q).unwrap();
        prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        let json = serde_json::to_string(&r).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), r);
    }
}
