//! Randomized structural invariants of ordinals, sign sequences and
//! concatenation.

use proptest::prelude::*;
use surreal_core::bracket::{canonical_options, simplest_in_cut, Bound, Cut};
use surreal_core::concat::{concat_add, concat_mul};
use surreal_core::gen;
use surreal_core::{Ordinal, Surreal};

fn ordinal() -> impl Strategy<Value = Ordinal> {
    prop_oneof![(0u64..6).prop_map(Ordinal::from), any::<u64>().prop_map(|s| gen::ordinal(&mut gen::rng(s))),]
}

fn surreal() -> impl Strategy<Value = Surreal> {
    (any::<u64>(), 0usize..5, any::<bool>()).prop_map(|(s, runs, tf)| gen::surreal(&mut gen::rng(s), runs, tf))
}

fn finite() -> impl Strategy<Value = Surreal> {
    (any::<u64>(), 0usize..9).prop_map(|(s, n)| gen::finite(&mut gen::rng(s), n))
}

proptest! {
    #[test]
    fn ordinal_text_round_trips(a in ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a);
    }

    #[test]
    fn cantor_add_is_associative(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.cantor_add(&b).cantor_add(&c), a.cantor_add(&b.cantor_add(&c)));
    }

    #[test]
    fn cantor_mul_is_associative_and_left_distributive(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.cantor_mul(&b).cantor_mul(&c), a.cantor_mul(&b.cantor_mul(&c)));
        prop_assert_eq!(a.cantor_mul(&b.cantor_add(&c)), a.cantor_mul(&b).cantor_add(&a.cantor_mul(&c)));
    }

    #[test]
    fn cantor_add_is_monotone_on_the_right(a in ordinal(), b in ordinal(), c in ordinal()) {
        if b < c {
            prop_assert!(a.cantor_add(&b) < a.cantor_add(&c));
        }
    }

    #[test]
    fn natural_operations_form_a_commutative_semiring(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(a.hessenberg_add(&b), b.hessenberg_add(&a));
        prop_assert_eq!(a.hessenberg_mul(&b), b.hessenberg_mul(&a));
        prop_assert_eq!(a.hessenberg_add(&b).hessenberg_add(&c), a.hessenberg_add(&b.hessenberg_add(&c)));
        prop_assert_eq!(a.hessenberg_mul(&b).hessenberg_mul(&c), a.hessenberg_mul(&b.hessenberg_mul(&c)));
        prop_assert_eq!(a.hessenberg_mul(&b.hessenberg_add(&c)), a.hessenberg_mul(&b).hessenberg_add(&a.hessenberg_mul(&c)));
    }

    #[test]
    fn ordinal_order_matches_sign_sequences(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(a.cmp(&b), Surreal::from_ordinal(&a).cmp(&Surreal::from_ordinal(&b)));
        prop_assert_eq!(Surreal::from_ordinal(&a).to_ordinal().unwrap(), a);
    }

    #[test]
    fn left_subtraction_inverts_addition(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(a.left_sub(&a.cantor_add(&b)), Some(b));
    }

    #[test]
    fn sign_text_round_trips(x in surreal()) {
        prop_assert_eq!(x.to_string().parse::<Surreal>().unwrap(), x);
    }

    #[test]
    fn negation_reverses_order(x in surreal(), y in surreal()) {
        prop_assert_eq!(x.cmp(&y), y.neg().cmp(&x.neg()));
        prop_assert_eq!(x.neg().neg(), x);
    }

    #[test]
    fn restriction_lengths(x in surreal(), a in ordinal()) {
        let r = x.restrict(&a);
        prop_assert_eq!(r.len(), a.clone().min(x.len()));
        prop_assert!(r.is_simpler(&x));
        prop_assert_eq!(x.restrict(&x.len()), x);
    }

    #[test]
    fn common_prefix_is_the_longest(x in surreal(), y in surreal()) {
        let p = x.common_prefix(&y);
        prop_assert!(p.is_simpler(&x) && p.is_simpler(&y));
        if p != x && p != y {
            prop_assert_ne!(x.sign_at(&p.len()), y.sign_at(&p.len()));
        }
    }

    /// A prefix x of y sits on the same side of any z that x is not a
    /// prefix of.
    #[test]
    fn prefixes_share_position(y in surreal(), a in ordinal(), z in surreal()) {
        let x = y.restrict(&a);
        if !x.is_simpler(&z) {
            prop_assert_eq!(x < z, y < z);
            prop_assert_eq!(z < x, z < y);
        }
    }

    #[test]
    fn concatenation_lengths(x in surreal(), y in surreal()) {
        prop_assert_eq!(concat_add(&x, &y).len(), x.len().cantor_add(&y.len()));
        if let Ok(p) = concat_mul(&x, &y) {
            prop_assert_eq!(p.len(), x.len().cantor_mul(&y.len()));
        }
    }

    #[test]
    fn finite_numbers_are_their_canonical_cut(x in finite()) {
        let o = canonical_options(&x);
        prop_assert_eq!(simplest_in_cut(&Cut::new(o.left, o.right)).unwrap(), x);
    }

    #[test]
    fn transfinite_numbers_are_their_canonical_cut(x in surreal()) {
        let o = canonical_options(&x);
        let budget = x.len().cantor_add(&Ordinal::omega());
        let cut = Cut::new(o.left.clone(), o.right.clone()).with_budget(budget);
        prop_assert_eq!(simplest_in_cut(&cut).unwrap(), x.clone());
        let all_single = o.left.iter().chain(&o.right).all(|b| matches!(b, Bound::Single(_)));
        if x.is_finite() {
            prop_assert!(all_single);
        }
    }
}
