use rand::Rng;

use super::{expect_eq, ok, sweep, Outcome, Suite, Tally};
use crate::bracket::{simplest_in_cut, Cut};
use crate::dyadic::Dyadic;
use crate::field::{add, add_uniform, mul, neg, neg_by_cut, without_memo};
use crate::gen;
use crate::surreal::Surreal;

pub const SUITES: [Suite; 6] = [
    Suite {
        name: "field-add-oracle",
        statement: "x + y matches dyadic arithmetic for all x, y of length <= 6",
        run: add_oracle,
    },
    Suite {
        name: "field-mul-oracle",
        statement: "x * y matches dyadic arithmetic for all x, y of length <= 6",
        run: mul_oracle,
    },
    Suite {
        name: "field-neg-oracle",
        statement: "-x is the sign flip, the cut {-x_R | -x_L} and the dyadic negation",
        run: neg_oracle,
    },
    Suite {
        name: "field-ring-laws",
        statement: "commutativity, associativity, distributivity and -(x+y) = -x + -y",
        run: ring_laws,
    },
    Suite {
        name: "field-uniform-sum",
        statement: "{L_x + y, x + L_y | x + R_y, R_x + y} is independent of the representations",
        run: uniform_sum,
    },
    Suite {
        name: "field-memo-invisible",
        statement: "results are identical with the memo table disabled",
        run: memo_invisible,
    },
];

fn val(x: &Surreal) -> Dyadic {
    Dyadic::from_surreal(x).expect("finite length")
}

fn pairs(n: usize) -> Vec<(Surreal, Surreal)> {
    let xs = gen::all_finite(n);
    xs.iter().flat_map(|x| xs.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

fn add_oracle(_: u64) -> Tally {
    sweep(&pairs(6), |(x, y)| {
        let got = ok(format!("{x} + {y}"), add(x, y))?;
        expect_eq(format!("{x} + {y}"), got, (&val(x) + &val(y)).to_surreal())
    })
}

fn mul_oracle(_: u64) -> Tally {
    sweep(&pairs(6), |(x, y)| {
        let got = ok(format!("{x} * {y}"), mul(x, y))?;
        expect_eq(format!("{x} * {y}"), got, (&val(x) * &val(y)).to_surreal())
    })
}

fn neg_oracle(_: u64) -> Tally {
    sweep(&gen::all_finite(8), |x| {
        let flip = neg(x);
        expect_eq(format!("-({x}) by cut"), ok("cut", neg_by_cut(x))?, flip.clone())?;
        expect_eq(format!("-({x}) by value"), (-val(x)).to_surreal(), flip)
    })
}

fn ring_laws(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let triples: Vec<[Surreal; 3]> = (0..300).map(|_| [0; 3].map(|_| gen::finite(&mut rng, 5))).collect();
    sweep(&triples, |[x, y, z]| -> Outcome {
        let e = |r| ok("ring law", r);
        expect_eq(format!("{x} + {y} commutes"), e(add(x, y))?, e(add(y, x))?)?;
        expect_eq(format!("{x} * {y} commutes"), e(mul(x, y))?, e(mul(y, x))?)?;
        expect_eq(format!("({x} + {y}) + {z}"), e(add(&e(add(x, y))?, z))?, e(add(x, &e(add(y, z))?))?)?;
        expect_eq(format!("({x} * {y}) * {z}"), e(mul(&e(mul(x, y))?, z))?, e(mul(x, &e(mul(y, z))?))?)?;
        let lhs = e(mul(x, &e(add(y, z))?))?;
        let rhs = e(add(&e(mul(x, y))?, &e(mul(x, z))?))?;
        expect_eq(format!("{x} * ({y} + {z})"), lhs, rhs)?;
        expect_eq(format!("-({x} + {y})"), neg(&e(add(x, y))?), e(add(&neg(x), &neg(y)))?)
    })
}

/// A random cut representation of `x`: its nearest options plus extra
/// bounds further out.
fn representation(rng: &mut gen::SampleRng, x: &Surreal) -> Cut {
    let (l, r) = x.reduced_finite_options().expect("finite");
    let mut lower: Vec<Surreal> = l.into_iter().collect();
    let mut upper: Vec<Surreal> = r.into_iter().collect();
    for _ in 0..rng.gen_range(0..4) {
        let v = gen::finite(rng, 6);
        if v < *x {
            lower.push(v);
        } else if v > *x {
            upper.push(v);
        }
    }
    Cut::singles(&lower, &upper)
}

fn uniform_sum(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let cases: Vec<(Surreal, Cut, Surreal, Cut)> = (0..1000)
        .map(|_| {
            let x = gen::finite(&mut rng, 5);
            let y = gen::finite(&mut rng, 5);
            let rx = representation(&mut rng, &x);
            let ry = representation(&mut rng, &y);
            (x, rx, y, ry)
        })
        .collect();
    sweep(&cases, |(x, rx, y, ry)| {
        expect_eq(format!("representation of {x}"), ok("cut", simplest_in_cut(rx))?, x.clone())?;
        expect_eq(format!("representation of {y}"), ok("cut", simplest_in_cut(ry))?, y.clone())?;
        expect_eq(format!("{x} + {y} through cuts"), ok("sum", add_uniform(x, rx, y, ry))?, ok("sum", add(x, y))?)
    })
}

fn memo_invisible(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let cases: Vec<(Surreal, Surreal)> =
        (0..100).map(|_| (gen::finite(&mut rng, 3), gen::finite(&mut rng, 3))).collect();
    sweep(&cases, |(x, y)| {
        let with = (add(x, y), mul(x, y));
        let without = without_memo(|| (add(x, y), mul(x, y)));
        expect_eq(format!("{x}, {y}"), with, without)
    })
}
