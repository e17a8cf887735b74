use num_bigint::BigInt;
use rand::Rng;

use super::{expect, expect_eq, ok, sweep, Outcome, Suite, Tally};
use crate::bracket::{
    canonical_options, is_cofinal_wrt, mutually_cofinal, simplest_in_cut, Bound, Chain, Cut, Direction,
};
use crate::chains;
use crate::dyadic::Dyadic;
use crate::error::Error;
use crate::gen;
use crate::ordinal::Ordinal;
use crate::surreal::Surreal;

pub const SUITES: [Suite; 9] = [
    Suite {
        name: "bracket-dyadic-exhaustive",
        statement: "{L | R} is the simplest dyadic in the interval, all operands of length <= 5",
        run: dyadic_exhaustive,
    },
    Suite {
        name: "bracket-dyadic-random",
        statement: "{L | R} is the simplest dyadic in the interval, 10^4 random cuts",
        run: dyadic_random,
    },
    Suite {
        name: "bracket-transfinite-fixtures",
        statement: "{|} = 0, {0|} = 1, {0|1} = 1/2, {N|} = w, {N|w-N} = w/2, {0|2^-N} = + -^w",
        run: transfinite_fixtures,
    },
    Suite {
        name: "bracket-simplest",
        statement: "{L | R} is a prefix of every number strictly between L and R",
        run: simplest,
    },
    Suite {
        name: "bracket-cofinal-equal",
        statement: "mutually cofinal cuts have the same bracket",
        run: cofinal_equal,
    },
    Suite {
        name: "bracket-cofinality-fixtures",
        statement: "cofinality holds reflexively, N is cofinal over {0}, not conversely",
        run: cofinality_fixtures,
    },
    Suite {
        name: "tree-canonical-cut",
        statement: "x = {x_L | x_R} for every x of length <= 8 and sampled transfinite x",
        run: canonical_cut,
    },
    Suite {
        name: "tree-prefix-transfer",
        statement: "if x is a prefix of y but not of z then x < z iff y < z",
        run: prefix_transfer,
    },
    Suite {
        name: "tree-round-trips",
        statement: "dyadic and ordinal conversions round-trip and restriction has the right length",
        run: round_trips,
    },
];

/// The simplest dyadic strictly between `lo` and `hi`, found on values.
pub fn oracle(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Option<Dyadic> {
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return None;
        }
    }
    let zero = Dyadic::integer(0);
    if lo.is_none_or(|a| a < &zero) && hi.is_none_or(|b| b > &zero) {
        return Some(zero);
    }
    if hi.is_some_and(|b| b <= &zero) {
        let (nl, nh) = (hi.map(|b| -b.clone()), lo.map(|a| -a.clone()));
        return oracle(nl.as_ref(), nh.as_ref()).map(|v| -v);
    }
    let a = lo.expect("positive interval has a lower end");
    for k in 0u32.. {
        let m = ((a.numerator() << k) >> a.exponent()) + BigInt::from(1);
        let v = Dyadic::new(m, k);
        if hi.is_none_or(|b| &v < b) {
            return Some(v);
        }
    }
    unreachable!()
}

fn val(x: &Surreal) -> Dyadic {
    Dyadic::from_surreal(x).expect("finite length")
}

fn check_against_oracle(lower: &[Surreal], upper: &[Surreal]) -> Outcome {
    let lo = lower.iter().map(val).max();
    let hi = upper.iter().map(val).min();
    let want = oracle(lo.as_ref(), hi.as_ref());
    let got = simplest_in_cut(&Cut::singles(lower, upper));
    let what = format!("{{{lower:?} | {upper:?}}}");
    match (got, want) {
        (Ok(x), Some(v)) => expect_eq(what, val(&x), v),
        (Err(Error::EmptyCut), None) => Ok(()),
        (got, want) => Err(format!("{what}: got {got:?}, oracle {want:?}")),
    }
}

fn dyadic_exhaustive(_: u64) -> Tally {
    let xs = gen::all_finite(5);
    let mut sides: Vec<Vec<Surreal>> = vec![Vec::new()];
    sides.extend(xs.iter().map(|x| vec![x.clone()]));
    let cases: Vec<(&Vec<Surreal>, &Vec<Surreal>)> =
        sides.iter().flat_map(|l| sides.iter().map(move |r| (l, r))).collect();
    sweep(&cases, |(l, r)| check_against_oracle(l, r))
}

fn random_side(rng: &mut gen::SampleRng) -> Vec<Surreal> {
    (0..rng.gen_range(0..=3)).map(|_| gen::finite(rng, 8)).collect()
}

fn dyadic_random(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let cases: Vec<(Vec<Surreal>, Vec<Surreal>)> =
        (0..10_000).map(|_| (random_side(&mut rng), random_side(&mut rng))).collect();
    sweep(&cases, |(l, r)| check_against_oracle(l, r))
}

fn s(t: &str) -> Surreal {
    t.parse().expect("valid sign string")
}

fn transfinite_fixtures(_: u64) -> Tally {
    let single = |v: &str| Bound::Single(v.parse::<Dyadic>().expect("dyadic").to_surreal());
    let chain = |c: Chain| Bound::Chain(c);
    let cases: Vec<(Vec<Bound>, Vec<Bound>, Surreal)> = vec![
        (vec![], vec![], Surreal::zero()),
        (vec![single("0")], vec![], Surreal::one()),
        (vec![single("0")], vec![single("1")], s("+ -")),
        (vec![chain(chains::nats())], vec![], Surreal::omega()),
        (vec![chain(chains::nats())], vec![chain(chains::omega_minus_nats())], s("+^w -^w")),
        (vec![single("0")], vec![chain(chains::half_powers())], s("+ -^w")),
        (vec![chain(chains::neg_half_powers())], vec![chain(chains::half_powers())], Surreal::zero()),
        (vec![chain(chains::omega_plus_nats())], vec![], s("+^(w*2)")),
    ];
    sweep(&cases, |(l, r, want)| {
        let got = ok("fixture", simplest_in_cut(&Cut::new(l.clone(), r.clone())))?;
        expect_eq(format!("{{{l:?} | {r:?}}}"), got, want.clone())
    })
}

/// A uniformly spread dyadic strictly inside `(lo, hi)`.
fn inside(rng: &mut gen::SampleRng, lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Dyadic {
    let t = Dyadic::new(rng.gen_range(1..1024i64), 10);
    let span = Dyadic::integer(rng.gen_range(1..=8));
    match (lo, hi) {
        (Some(a), Some(b)) => a + &(&(b - a) * &t),
        (Some(a), None) => a + &(&span * &t),
        (None, Some(b)) => b - &(&span * &t),
        (None, None) => &(&span * &t) - &Dyadic::new(rng.gen_range(0..=8i64), 0),
    }
}

fn simplest(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let mut cases = Vec::new();
    while cases.len() < 200 {
        let (l, r) = (random_side(&mut rng), random_side(&mut rng));
        let lo = l.iter().map(val).max();
        let hi = r.iter().map(val).min();
        if oracle(lo.as_ref(), hi.as_ref()).is_none() {
            continue;
        }
        let ys: Vec<Surreal> = (0..100).map(|_| inside(&mut rng, lo.as_ref(), hi.as_ref()).to_surreal()).collect();
        cases.push((l, r, ys));
    }
    sweep(&cases, |(l, r, ys)| {
        let x = ok("bracket", simplest_in_cut(&Cut::singles(l, r)))?;
        for y in ys {
            expect(format!("{x} is a prefix of {y}"), x.is_simpler(y))?;
        }
        Ok(())
    })
}

fn singles(xs: &[Surreal]) -> Vec<Bound> {
    xs.iter().cloned().map(Bound::Single).collect()
}

/// Two representations `(L, R)` and `(L', R')` of the same cut.
type CutPair = (Vec<Bound>, Vec<Bound>, Vec<Bound>, Vec<Bound>);

fn cofinal_equal(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let mut cases: Vec<CutPair> = Vec::new();
    while cases.len() < 500 {
        let (l, r) = (random_side(&mut rng), random_side(&mut rng));
        let lo = l.iter().map(val).max();
        let hi = r.iter().map(val).min();
        if oracle(lo.as_ref(), hi.as_ref()).is_none() {
            continue;
        }
        // extra bounds further out than the extreme ones
        let mut l2 = l.clone();
        let mut r2 = r.clone();
        if let Some(a) = &lo {
            l2.push((a - &Dyadic::new(rng.gen_range(1..64i64), 4)).to_surreal());
        }
        if let Some(b) = &hi {
            r2.push((b + &Dyadic::new(rng.gen_range(1..64i64), 4)).to_surreal());
        }
        cases.push((singles(&l), singles(&r), singles(&l2), singles(&r2)));
    }
    let evens = Chain::new("evens", Direction::Increasing, Some(Surreal::omega()), |n| Surreal::from_i64(2 * n as i64));
    cases.push((vec![Bound::Chain(chains::nats())], vec![], vec![Bound::Chain(evens)], vec![]));
    let quarters = Chain::new("quarter_powers", Direction::Decreasing, Some(s("+ -^w")), |n| {
        s("+ -").with(crate::Sign::Minus, &Ordinal::from(2 * n))
    });
    cases.push((vec![], vec![Bound::Chain(chains::half_powers())], vec![], vec![Bound::Chain(quarters)]));
    sweep(&cases, |(l, r, l2, r2)| {
        expect(
            format!("{l:?} | {r:?} cofinal with the widened cut"),
            ok("cofinality", mutually_cofinal((l, r), (l2, r2)))?,
        )?;
        let a = ok("bracket", simplest_in_cut(&Cut::new(l.clone(), r.clone())))?;
        let b = ok("bracket", simplest_in_cut(&Cut::new(l2.clone(), r2.clone())))?;
        expect_eq(format!("{l:?} | {r:?}"), a, b)
    })
}

fn cofinality_fixtures(_: u64) -> Tally {
    let zero = vec![Bound::Single(Surreal::zero())];
    let one = vec![Bound::Single(Surreal::one())];
    let nats = vec![Bound::Chain(chains::nats())];
    let hintless =
        vec![Bound::Chain(Chain::new("hintless", Direction::Increasing, None, |n| Surreal::from_i64(n as i64)))];
    let checks: Vec<(bool, crate::Result<bool>)> = vec![
        (true, is_cofinal_wrt((&zero, &one), (&zero, &one))),
        (true, is_cofinal_wrt((&nats, &[]), (&zero, &[]))),
        (false, is_cofinal_wrt((&zero, &[]), (&nats, &[]))),
    ];
    let mut t = sweep(&checks, |(want, got)| expect_eq("cofinality", got.clone(), Ok(*want)));
    let undecided = is_cofinal_wrt((&hintless, &[]), (&zero, &[]));
    t = t
        .merge(Tally::single(expect("hintless chain is undecidable", matches!(undecided, Err(Error::Undecidable(_))))));
    t
}

fn canonical_cut(seed: u64) -> Tally {
    let mut xs = gen::all_finite(8);
    let mut rng = gen::rng(seed);
    xs.extend((0..300).map(|_| gen::surreal(&mut rng, 4, true)));
    sweep(&xs, |x| {
        let o = canonical_options(x);
        let budget = crate::bracket::default_budget().max(x.len());
        let got = ok(format!("options of {x}"), simplest_in_cut(&Cut::new(o.left, o.right).with_budget(budget)))?;
        expect_eq(format!("{{{x}_L | {x}_R}}"), got, x.clone())
    })
}

fn prefix_transfer(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let cases: Vec<[Surreal; 3]> = (0..2000)
        .map(|_| {
            let x = gen::surreal(&mut rng, 3, true);
            let y = crate::concat::concat_add(&x, &gen::surreal(&mut rng, 3, true));
            let z = gen::surreal(&mut rng, 4, true);
            [x, y, z]
        })
        .collect();
    sweep(&cases, |[x, y, z]| {
        if x.is_simpler(z) {
            return Ok(());
        }
        expect(format!("{x} < {z} iff {y} < {z}"), (x < z) == (y < z))?;
        expect(format!("{z} < {x} iff {z} < {y}"), (z < x) == (z < y))
    })
}

fn round_trips(seed: u64) -> Tally {
    let dyadics: Vec<Dyadic> = (0..=12u32).flat_map(|e| (-40i64..=40).map(move |n| Dyadic::new(n, e))).collect();
    let mut t =
        sweep(&dyadics, |d| expect_eq(format!("{d}"), Dyadic::from_surreal(&d.to_surreal()).ok(), Some(d.clone())));
    let mut rng = gen::rng(seed);
    let ords: Vec<Ordinal> = (0..500).map(|_| gen::ordinal(&mut rng)).collect();
    t = t.merge(sweep(&ords, |a| {
        let x = Surreal::from_ordinal(a);
        expect_eq(format!("{a}"), x.to_ordinal().ok(), Some(a.clone()))?;
        expect_eq(format!("{a} as text"), a.to_string().parse::<Ordinal>().ok(), Some(a.clone()))
    }));
    let xs: Vec<(Surreal, Ordinal)> =
        (0..500).map(|_| (gen::surreal(&mut rng, 4, true), gen::ordinal(&mut rng))).collect();
    t.merge(sweep(&xs, |(x, a)| {
        expect_eq(format!("length of {x} restricted to {a}"), x.restrict(a).len(), x.len().min(a.clone()))?;
        expect_eq(format!("{x} restricted to its length"), x.restrict(&x.len()), x.clone())?;
        expect_eq(format!("{x} as text"), x.to_string().parse::<Surreal>().ok(), Some(x.clone()))
    }))
}
