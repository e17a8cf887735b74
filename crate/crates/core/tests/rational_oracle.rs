//! Field operations, brackets and dyadic conversion checked against exact
//! rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use surreal_core::bracket::{simplest_in_cut, Cut};
use surreal_core::field::{add, mul, neg, sub};
use surreal_core::gen;
use surreal_core::{Dyadic, Sign, Surreal};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The binary tree valuation: the leading run is the integer part, each
/// later sign moves by half the previous step.
fn value(x: &Surreal) -> BigRational {
    let signs: Vec<i64> = x
        .runs()
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.sign.value() as i64, r.len.as_u64().expect("finite") as usize))
        .collect();
    let Some(&first) = signs.first() else { return BigRational::zero() };
    let lead = signs.iter().take_while(|&&s| s == first).count();
    let mut v = BigRational::from_integer(BigInt::from(first * lead as i64));
    let mut step = q(1, 2);
    for &s in &signs[lead..] {
        v += &step * BigInt::from(s);
        step /= BigInt::from(2);
    }
    v
}

/// Inverse of [`value`]: walk the tree, each node being the simplest
/// number in the interval left by the previous moves.
fn from_value(v: &BigRational) -> Surreal {
    let (mut lo, mut hi): (Option<BigRational>, Option<BigRational>) = (None, None);
    let mut cur = BigRational::zero();
    let mut signs = Vec::new();
    while &cur != v {
        if v > &cur {
            signs.push(Sign::Plus);
            lo = Some(cur.clone());
        } else {
            signs.push(Sign::Minus);
            hi = Some(cur.clone());
        }
        cur = match (&lo, &hi) {
            (Some(l), Some(h)) => (l + h) / BigInt::from(2),
            (Some(l), None) => l + BigRational::one(),
            (None, Some(h)) => h - BigRational::one(),
            (None, None) => unreachable!(),
        };
    }
    Surreal::from_signs(&signs)
}

#[test]
fn valuation_agrees_with_dyadic_conversion() {
    for x in gen::all_finite(9) {
        let d = Dyadic::from_surreal(&x).unwrap();
        let r = BigRational::new(d.numerator().clone(), BigInt::from(2).pow(d.exponent()));
        assert_eq!(r, value(&x), "{x}");
        assert_eq!(from_value(&r), x, "{x}");
    }
}

#[test]
fn dyadic_round_trip_to_exponent_twelve() {
    for e in 0..=12u32 {
        for n in -70i64..=70 {
            let d = Dyadic::new(n, e);
            let x = d.to_surreal();
            assert_eq!(Dyadic::from_surreal(&x).unwrap(), d);
            assert_eq!(value(&x), BigRational::new(BigInt::from(n), BigInt::from(2).pow(e)));
        }
    }
}

#[test]
fn field_ops_match_rationals() {
    let xs = gen::all_finite(5);
    for x in &xs {
        assert_eq!(value(&neg(x)), -value(x));
        for y in &xs {
            assert_eq!(value(&add(x, y).unwrap()), value(x) + value(y), "{x} + {y}");
            assert_eq!(value(&sub(x, y).unwrap()), value(x) - value(y), "{x} - {y}");
            assert_eq!(value(&mul(x, y).unwrap()), value(x) * value(y), "{x} * {y}");
        }
    }
}

#[test]
fn field_examples() {
    let d = |t: &str| t.parse::<Dyadic>().unwrap().to_surreal();
    assert_eq!(add(&d("1/2"), &d("1/2")).unwrap(), d("1"));
    assert_eq!(add(&d("3/4"), &d("-1/4")).unwrap(), d("1/2"));
    assert_eq!(mul(&d("1/2"), &d("2")).unwrap(), d("1"));
    assert_eq!(mul(&d("-1/2"), &d("-1/2")).unwrap(), d("1/4"));
    assert_eq!(neg(&d("1/2")), "- +".parse().unwrap());
}

/// The simplest number strictly between the bounds, by scanning the tree
/// level by level.
fn simplest_by_enumeration(lower: &[BigRational], upper: &[BigRational], depth: usize) -> Option<Surreal> {
    gen::all_finite(depth).into_iter().find(|x| {
        let v = value(x);
        lower.iter().all(|l| l < &v) && upper.iter().all(|u| &v < u)
    })
}

#[test]
fn brackets_match_tree_enumeration() {
    let mut rng = gen::rng(11);
    for _ in 0..3000 {
        let lower: Vec<Surreal> = (0..rand::Rng::gen_range(&mut rng, 0..3)).map(|_| gen::finite(&mut rng, 5)).collect();
        let upper: Vec<Surreal> = (0..rand::Rng::gen_range(&mut rng, 0..3)).map(|_| gen::finite(&mut rng, 5)).collect();
        let lv: Vec<BigRational> = lower.iter().map(value).collect();
        let uv: Vec<BigRational> = upper.iter().map(value).collect();
        let want = simplest_by_enumeration(&lv, &uv, 8);
        let got = simplest_in_cut(&Cut::singles(&lower, &upper));
        match want {
            Some(w) => assert_eq!(got.unwrap(), w, "{lower:?} | {upper:?}"),
            None => assert!(got.is_err(), "{lower:?} | {upper:?}"),
        }
    }
}
