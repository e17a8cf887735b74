use rand::Rng;

use super::{expect, expect_eq, ok, sweep, Outcome, Suite, Tally};
use crate::bracket::{simplest_in_cut, sup_chain, Cut, DEFAULT_SAMPLES};
use crate::concat::{concat_add, concat_add_cut_eq, concat_mul, concat_mul_cut_eq};
use crate::gen::{self, SampleRng};
use crate::ordinal::Ordinal;
use crate::surreal::{Sign, Surreal};

pub const SUITES: [Suite; 14] = [
    Suite { name: "concat-add-associative", statement: "x+.(y+.z) = (x+.y)+.z", run: add_assoc },
    Suite { name: "concat-mul-associative", statement: "x*.(y*.z) = (x*.y)*.z", run: mul_assoc },
    Suite { name: "concat-mul-units", statement: "x*.1 = x, x*.(-1) = -x, 1*.x = x", run: units },
    Suite { name: "concat-left-distributive", statement: "x*.(y+.z) = (x*.y)+.(x*.z)", run: left_distributive },
    Suite {
        name: "concat-mul-limit-continuity",
        statement: "x*.y is the prefix-supremum of x*.y' over prefixes y' of a limit y",
        run: mul_limit,
    },
    Suite {
        name: "concat-add-sup-continuity",
        statement: "x+.y is the prefix-supremum of x+.y' over prefixes y' of a limit y",
        run: add_limit,
    },
    Suite {
        name: "concat-mul-simplicity-transfer",
        statement: "for x != 0: y is a prefix of z iff x*.y is a prefix of x*.z",
        run: simplicity_transfer,
    },
    Suite { name: "concat-mul-order-transfer", statement: "for x > 0: y < z iff x*.y < x*.z", run: order_transfer },
    Suite {
        name: "concat-add-cut-equation",
        statement: "x+.y = {x_L, x+.y_L | x+.y_R, x_R} for all x, y of length <= 4",
        run: add_cut_eq,
    },
    Suite {
        name: "concat-mul-cut-equation",
        statement: "x*.y = {x*.y_L+.x_L, x*.y_R+.(-x_R) | x*.y_L+.x_R, x*.y_R+.(-x_L)} for x > 0, lengths <= 4",
        run: mul_cut_eq,
    },
    Suite {
        name: "concat-nonuniform-sum",
        statement: "x+.1 = {x, x_L | x_R} applied to 0 = {|1} gives 1/2, not 1",
        run: nonuniform_sum,
    },
    Suite {
        name: "concat-nonuniform-product",
        statement: "x*.1/2 = {x_L, x+.(-x_R) | x_R, x+.(-x_L)} applied to 1 = {1/2|} gives 5/8, not 1/2",
        run: nonuniform_product,
    },
    Suite {
        name: "length-add-homomorphism",
        statement: "len(x+.y) = len(x) + len(y) in Cantor arithmetic",
        run: length_add,
    },
    Suite {
        name: "length-mul-homomorphism",
        statement: "len(x*.y) = len(x) * len(y) in Cantor arithmetic",
        run: length_mul,
    },
];

const SAMPLES: usize = 1000;

fn samples<T>(seed: u64, f: impl Fn(&mut SampleRng) -> T) -> Vec<T> {
    let mut rng = gen::rng(seed);
    (0..SAMPLES).map(|_| f(&mut rng)).collect()
}

/// A left factor and a right argument whose product has finitely many
/// runs: either the factor has one run or the argument has finite runs.
fn factor_pair(rng: &mut SampleRng) -> (Surreal, Surreal) {
    if rng.gen() {
        (gen::single_run(rng, true), gen::surreal(rng, 4, true))
    } else {
        (gen::surreal(rng, 3, true), gen::surreal(rng, 3, false))
    }
}

fn mul(x: &Surreal, y: &Surreal) -> Result<Surreal, String> {
    ok(format!("{x} *. {y}"), concat_mul(x, y))
}

fn add_assoc(seed: u64) -> Tally {
    let cases = samples(seed, |r| [0; 3].map(|_| gen::surreal(r, 4, true)));
    sweep(&cases, |[x, y, z]| {
        expect_eq(format!("{x} +. {y} +. {z}"), concat_add(x, &concat_add(y, z)), concat_add(&concat_add(x, y), z))
    })
}

fn mul_assoc(seed: u64) -> Tally {
    let cases = samples(seed, |r| {
        if r.gen() {
            [gen::single_run(r, true), gen::single_run(r, true), gen::surreal(r, 4, true)]
        } else {
            [gen::surreal(r, 3, true), gen::surreal(r, 2, false), gen::surreal(r, 2, false)]
        }
    });
    sweep(&cases, |[x, y, z]| expect_eq(format!("{x} *. {y} *. {z}"), mul(x, &mul(y, z)?)?, mul(&mul(x, y)?, z)?))
}

fn units(seed: u64) -> Tally {
    let cases = samples(seed, |r| gen::surreal(r, 4, true));
    sweep(&cases, |x| {
        let one = Surreal::one();
        expect_eq(format!("{x} *. 1"), mul(x, &one)?, x.clone())?;
        expect_eq(format!("{x} *. -1"), mul(x, &one.neg())?, x.neg())?;
        expect_eq(format!("1 *. {x}"), mul(&one, x)?, x.clone())
    })
}

fn left_distributive(seed: u64) -> Tally {
    let cases = samples(seed, |r| {
        let (x, y) = factor_pair(r);
        let z = if x.runs().len() > 1 { gen::surreal(r, 3, false) } else { gen::surreal(r, 3, true) };
        [x, y, z]
    });
    sweep(&cases, |[x, y, z]| {
        expect_eq(format!("{x} *. ({y} +. {z})"), mul(x, &concat_add(y, z))?, concat_add(&mul(x, y)?, &mul(x, z)?))
    })
}

/// The prefixes of a limit `y` along the fundamental sequence of its
/// last run.
fn limit_prefix(y: &Surreal, n: u64) -> Surreal {
    let (last, head) = y.runs().split_last().expect("nonzero");
    let off = head.iter().fold(Ordinal::zero(), |acc, r| acc.cantor_add(&r.len));
    y.restrict(&off.cantor_add(&last.len.fundamental(n).expect("limit run")))
}

fn mul_limit(seed: u64) -> Tally {
    let cases = samples(seed, |r| (gen::single_run(r, true), gen::limit(r, 3)));
    sweep(&cases, |(x, y)| {
        let whole = mul(x, y)?;
        let gen = |n: u64| concat_mul(x, &limit_prefix(y, n)).expect("single-run factor");
        let sup = ok(format!("sup of {x} *. prefixes of {y}"), sup_chain(&gen, Some(&whole), DEFAULT_SAMPLES))?;
        expect_eq(format!("{x} *. {y}"), sup, whole.clone())?;
        for n in 0..DEFAULT_SAMPLES {
            expect(format!("{x} *. prefix {n} of {y} is a prefix of the product"), gen(n).is_simpler(&whole))?;
        }
        Ok(())
    })
}

fn add_limit(seed: u64) -> Tally {
    let cases = samples(seed, |r| (gen::surreal(r, 3, true), gen::limit(r, 3)));
    sweep(&cases, |(x, y)| {
        let whole = concat_add(x, y);
        let gen = |n: u64| concat_add(x, &limit_prefix(y, n));
        let sup = ok(format!("sup of {x} +. prefixes of {y}"), sup_chain(&gen, Some(&whole), DEFAULT_SAMPLES))?;
        expect_eq(format!("{x} +. {y}"), sup, whole)
    })
}

fn simplicity_transfer(seed: u64) -> Tally {
    let cases = samples(seed, |r| {
        let (x, y) = factor_pair(r);
        let x = if x.is_zero() { Surreal::one() } else { x };
        // half the time z extends y
        let z = if r.gen() {
            let tail = if x.runs().len() > 1 { gen::surreal(r, 2, false) } else { gen::surreal(r, 2, true) };
            concat_add(&y, &tail)
        } else if x.runs().len() > 1 {
            gen::surreal(r, 3, false)
        } else {
            gen::surreal(r, 3, true)
        };
        (x, y, z)
    });
    sweep(&cases, |(x, y, z)| {
        let (xy, xz) = (mul(x, y)?, mul(x, z)?);
        expect(format!("{y} prefix of {z} iff {x} *. {y} prefix of {x} *. {z}"), y.is_simpler(z) == xy.is_simpler(&xz))
    })
}

fn order_transfer(seed: u64) -> Tally {
    let cases = samples(seed, |r| {
        let (x, y) = factor_pair(r);
        let x = if x.first_sign() == Some(Sign::Plus) { x } else { x.neg() };
        let x = if x.is_zero() { Surreal::one() } else { x };
        let z = if x.runs().len() > 1 { gen::surreal(r, 3, false) } else { gen::surreal(r, 3, true) };
        (x, y, z)
    });
    sweep(&cases, |(x, y, z)| {
        let (xy, xz) = (mul(x, y)?, mul(x, z)?);
        expect(format!("{y} < {z} iff {x} *. {y} < {x} *. {z}"), (y < z) == (xy < xz))
    })
}

fn small_pairs() -> Vec<(Surreal, Surreal)> {
    let xs = gen::all_finite(4);
    xs.iter().flat_map(|x| xs.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

fn add_cut_eq(_: u64) -> Tally {
    sweep(&small_pairs(), |(x, y)| {
        expect_eq(format!("{x} +. {y} by cut"), ok("cut", concat_add_cut_eq(x, y))?, concat_add(x, y))
    })
}

fn mul_cut_eq(_: u64) -> Tally {
    let pairs: Vec<(Surreal, Surreal)> =
        small_pairs().into_iter().filter(|(x, _)| x.first_sign() == Some(Sign::Plus)).collect();
    sweep(&pairs, |(x, y)| expect_eq(format!("{x} *. {y} by cut"), ok("cut", concat_mul_cut_eq(x, y))?, mul(x, y)?))
}

fn nonuniform_sum(_: u64) -> Tally {
    // 0 = { | 1}: x_L = {}, x_R = {1}
    let x = Surreal::zero();
    let one = Surreal::one();
    let got = simplest_in_cut(&Cut::singles(std::slice::from_ref(&x), std::slice::from_ref(&one)));
    Tally::single((|| -> Outcome {
        let got = ok("cut", got)?;
        expect_eq("{0 | 1}", got.clone(), "+ -".parse().unwrap())?;
        expect("differs from 0 +. 1", got != concat_add(&x, &one))
    })())
}

fn nonuniform_product(_: u64) -> Tally {
    // 1 = {1/2 | }: x_L = {1/2}, x_R = {}
    let x = Surreal::one();
    let half: Surreal = "+ -".parse().unwrap();
    let lower = [half.clone()];
    let upper = [concat_add(&x, &half.neg())];
    Tally::single((|| -> Outcome {
        let got = ok("cut", simplest_in_cut(&Cut::singles(&lower, &upper)))?;
        expect_eq("{1/2 | 1 +. -1/2}", got.clone(), "+ - + -".parse().unwrap())?;
        expect("differs from 1 *. 1/2", got != mul(&x, &half)?)
    })())
}

fn length_add(seed: u64) -> Tally {
    let cases = samples(seed, |r| (gen::surreal(r, 4, true), gen::surreal(r, 4, true)));
    sweep(&cases, |(x, y)| expect_eq(format!("len({x} +. {y})"), concat_add(x, y).len(), x.len().cantor_add(&y.len())))
}

fn length_mul(seed: u64) -> Tally {
    let cases = samples(seed, factor_pair);
    sweep(&cases, |(x, y)| expect_eq(format!("len({x} *. {y})"), mul(x, y)?.len(), x.len().cantor_mul(&y.len())))
}
