use rand::Rng;

use super::{expect, expect_eq, ok, sweep, Outcome, Suite, Tally};
use crate::bracket::{sup_chain, Bound, Chain, Direction, DEFAULT_SAMPLES};
use crate::concat::concat_mul;
use crate::dyadic::Dyadic;
use crate::gen;
use crate::ordinal::Ordinal;
use crate::simplicity::{smp_xi, translations_z};
use crate::substructure::{
    imbricate, in_iterated_image, is_fixed, is_left_factor, make_cut_interval, make_dyadic_tail, make_fix, make_inc,
    make_negate, make_scale, make_shift, no, nosucc_pow, xi_generic_within, xi_iter, Form, Structure, Tri,
};
use crate::surreal::{Sign, Surreal};

pub const SUITES: [Suite; 12] = [
    Suite { name: "structure-recursion-closed-forms", statement: "the generic recursion {Xi x_L | Xi x_R}_S equals the closed form for shifts, scales, intervals and Inc on all x of length <= 5", run: recursion_closed_forms },
    Suite { name: "structure-inc-fixture", statement: "Xi_inc(-2) = 11/16", run: inc_fixture },
    Suite { name: "structure-inc-extensive", statement: "len(Xi_inc x) > len(x)", run: inc_extensive },
    Suite { name: "structure-xi-isomorphism", statement: "Xi_S is strictly increasing for < and for prefixes, lands in S and is inverted by Xi_S^-1", run: xi_isomorphism },
    Suite { name: "structure-sup-continuity", statement: "for closed S, Xi_S of a chain supremum is the supremum of the images; Inc and (-w, w) are not closed", run: sup_continuity },
    Suite { name: "structure-imbrication", statement: "Xi_{S<T} = Xi_S o Xi_T and S<T lies in S", run: imbrication },
    Suite { name: "structure-left-factors", statement: "left factor fixtures for shifts, scales and No", run: left_factors },
    Suite { name: "fix-shift", statement: "Fix of shift(a) is shift(a*.w): its images are fixed by Xi_shift(a)", run: fix_shift },
    Suite { name: "fix-scale", statement: "Fix of scale(a) is scale(a^w): its images are fixed by Xi_scale(a)", run: fix_scale },
    Suite { name: "fix-iterated-images", statement: "y lies in Xi_S^n No iff the n-fold composite structure contains y, n <= 5; fixed points lie in every image", run: iterated_images },
    Suite { name: "nosucc-family-identities", statement: "No_>^(a+.b) = No_>^a < No_>^b and No_>^(a*.b) = (No_>^a)^b for a, b <= 4", run: nosucc_identities },
    Suite { name: "nosucc-matches-simplicity", statement: "Xi of No_>^1 = w*.No equals the simple-element parameterization for integer translations", run: nosucc_matches_smp },
];

fn s(t: &str) -> Surreal {
    t.parse().expect("sign literal")
}

fn d(t: &str) -> Surreal {
    t.parse::<Dyadic>().expect("dyadic literal").to_surreal()
}

fn budget() -> Ordinal {
    "w^3".parse().expect("ordinal literal")
}

fn nats() -> Bound {
    Bound::Chain(Chain::new("nats", Direction::Increasing, Some(Surreal::omega()), |n| Surreal::from_i64(n as i64)))
}

/// Structures with a closed-form parameterization, named for messages.
fn closed_form_structures() -> Vec<Structure> {
    let single = |t: &str| Bound::Single(d(t));
    let mut out = vec![
        no(),
        make_shift(&d("1")),
        make_shift(&d("-3/4")),
        make_shift(&Surreal::omega()),
        make_shift(&s("+^w -")),
        make_scale(&d("2")).unwrap(),
        make_scale(&Surreal::omega()).unwrap(),
        make_scale(&s("+^(w+1)")).unwrap(),
        make_negate(&make_shift(&d("1"))),
        make_inc(),
        make_cut_interval(&no(), vec![single("0")], vec![]).unwrap(),
        make_cut_interval(&no(), vec![single("0")], vec![single("1")]).unwrap(),
        make_cut_interval(&no(), vec![nats()], vec![]).unwrap(),
        make_cut_interval(&no(), vec![Bound::Single(Surreal::omega().neg())], vec![Bound::Single(Surreal::omega())])
            .unwrap(),
        make_dyadic_tail(&"1".parse().unwrap()).unwrap(),
        make_dyadic_tail(&"-3/2".parse().unwrap()).unwrap(),
    ];
    out.retain(|st| !matches!(st, Structure::Interval { form: Form::Generic, .. }));
    out
}

fn recursion_closed_forms(_: u64) -> Tally {
    let xs = gen::all_finite(5);
    let structures = closed_form_structures();
    let cases: Vec<(usize, &Surreal)> = (0..structures.len()).flat_map(|i| xs.iter().map(move |x| (i, x))).collect();
    let b = budget();
    sweep(&cases, |(i, x)| {
        let st = &structures[*i];
        let closed = ok(format!("{st} at {x}"), st.xi(x))?;
        expect_eq(format!("{st} at {x}"), ok(format!("{st} recursion at {x}"), xi_generic_within(st, x, &b))?, closed)
    })
}

fn inc_fixture(_: u64) -> Tally {
    Tally::single((|| -> Outcome {
        let got = ok("inc(-2)", make_inc().xi(&d("-2")))?;
        expect_eq("inc(-2)", ok("dyadic", Dyadic::from_surreal(&got))?, "11/16".parse().unwrap())
    })())
}

/// Inputs whose image under Inc has finitely many runs: `-^a` maps to
/// `(- +)^a`, so minus runs stay finite.
fn inc_input(rng: &mut gen::SampleRng) -> Surreal {
    let x = gen::surreal(rng, 4, true);
    Surreal::from_runs(x.runs().iter().map(|r| match r.sign {
        Sign::Minus => (Sign::Minus, Ordinal::from(rng.gen_range(1..=3u64))),
        Sign::Plus => (Sign::Plus, r.len.clone()),
    }))
}

fn inc_extensive(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let xs: Vec<Surreal> = (0..1000).map(|_| inc_input(&mut rng)).collect();
    let inc = make_inc();
    sweep(&xs, |x| {
        let y = ok(format!("inc({x})"), inc.xi(x))?;
        expect(format!("len(inc({x})) = {} > {}", y.len(), x.len()), y.len() > x.len())
    })
}

fn xi_isomorphism(_: u64) -> Tally {
    let xs = gen::all_finite(3);
    let structures = closed_form_structures();
    sweep(&structures, |st| -> Outcome {
        let ys: Vec<Surreal> = xs.iter().map(|x| ok(format!("{st} at {x}"), st.xi(x))).collect::<Result<_, _>>()?;
        for (x, y) in xs.iter().zip(&ys) {
            expect(format!("{st} contains Xi({x}) = {y}"), st.member(y) != Tri::No)?;
            expect_eq(format!("{st} inverse at {y}"), ok("inverse", st.xi_inv(y))?, x.clone())?;
        }
        for (x1, y1) in xs.iter().zip(&ys) {
            for (x2, y2) in xs.iter().zip(&ys) {
                expect(format!("{st}: order of {x1}, {x2}"), (x1 < x2) == (y1 < y2))?;
                expect(format!("{st}: prefix order of {x1}, {x2}"), x1.is_simpler(x2) == y1.is_simpler(y2))?;
            }
        }
        Ok(())
    })
}

fn sup_continuity(_: u64) -> Tally {
    let limits = [Surreal::omega(), s("-^w"), s("+ -^w"), s("- +^w -^w"), s("+^(w*2)")];
    let structures: Vec<Structure> = vec![
        no(),
        make_shift(&d("1")),
        make_shift(&d("-1/2")),
        make_scale(&d("2")).unwrap(),
        make_scale(&Surreal::omega()).unwrap(),
    ];
    let cases: Vec<(&Structure, &Surreal)> =
        structures.iter().flat_map(|st| limits.iter().map(move |y| (st, y))).collect();
    let mut t = sweep(&cases, |(st, y)| {
        let whole = ok(format!("{st} at {y}"), st.xi(y))?;
        let (last, head) = y.runs().split_last().expect("nonzero");
        let off = head.iter().fold(Ordinal::zero(), |acc, r| acc.cantor_add(&r.len));
        let gen =
            |n: u64| st.xi(&y.restrict(&off.cantor_add(&last.len.fundamental(n).unwrap()))).expect("prefix image");
        let sup = ok("sup", sup_chain(&gen, Some(&whole), DEFAULT_SAMPLES))?;
        expect_eq(format!("{st} at {y}"), sup, whole)
    });
    // Inc is not closed: inc(n) = +^(2n+1) has supremum w, yet inc(w) = +^(w+1)
    t = t.merge(Tally::single((|| -> Outcome {
        let inc = make_inc();
        let gen = |n: u64| inc.xi(&Surreal::from_i64(n as i64)).expect("finite input");
        let sup = ok("sup", sup_chain(&gen, Some(&Surreal::omega()), DEFAULT_SAMPLES))?;
        expect_eq("sup of inc(n)", sup.clone(), Surreal::omega())?;
        expect("inc(w) differs from the supremum", ok("inc(w)", inc.xi(&Surreal::omega()))? != sup)
    })()));
    // the naturals lie in (-w, w) but their supremum w does not
    let finite =
        make_cut_interval(&no(), vec![Bound::Single(Surreal::omega().neg())], vec![Bound::Single(Surreal::omega())]);
    t = t.merge(Tally::single((|| -> Outcome {
        let finite = ok("(-w, w)", finite)?;
        for n in 0..DEFAULT_SAMPLES {
            expect(format!("{n} in (-w, w)"), finite.member(&Surreal::from_i64(n as i64)) == Tri::Yes)?;
        }
        expect("w outside (-w, w)", finite.member(&Surreal::omega()) == Tri::No)
    })()));
    t
}

fn imbrication(_: u64) -> Tally {
    let pairs = [
        (make_shift(&d("1")), make_shift(&Surreal::omega())),
        (make_scale(&Surreal::omega()).unwrap(), make_shift(&d("1"))),
        (make_shift(&d("-1")), make_scale(&d("3")).unwrap()),
        (make_inc(), make_shift(&d("1/2"))),
        (make_negate(&make_shift(&d("1"))), make_inc()),
    ];
    let xs = gen::all_finite(4);
    let cases: Vec<(usize, &Surreal)> = (0..pairs.len()).flat_map(|i| xs.iter().map(move |x| (i, x))).collect();
    sweep(&cases, |(i, x)| {
        let (a, b) = &pairs[*i];
        let im = imbricate(a, b);
        let y = ok(format!("{im} at {x}"), im.xi(x))?;
        expect_eq(format!("{im} at {x}"), y.clone(), ok("composite", a.xi(&ok("inner", b.xi(x))?))?)?;
        expect(format!("{a} contains {y}"), a.member(&y) != Tri::No)
    })
}

fn left_factors(_: u64) -> Tally {
    let cases = [
        (make_shift(&d("1")), make_shift(&d("1/2")), Tri::Yes),
        (make_shift(&d("1/2")), make_shift(&d("1")), Tri::No),
        (no(), make_inc(), Tri::Yes),
        (make_shift(&d("1")), make_scale(&Surreal::omega()).unwrap(), Tri::No),
        (make_scale(&d("2")).unwrap(), make_scale(&d("4")).unwrap(), Tri::Yes),
        (make_scale(&d("2")).unwrap(), make_scale(&d("3")).unwrap(), Tri::No),
        (make_scale(&Surreal::omega()).unwrap(), make_scale(&s("+^w^2")).unwrap(), Tri::Yes),
    ];
    sweep(&cases, |(t, st, want)| expect_eq(format!("{t} left factor of {st}"), is_left_factor(t, st), *want))
}

fn fix_cases(seed: u64, factors: &[Surreal], ctor: fn(&Surreal) -> Structure) -> Tally {
    let mut rng = gen::rng(seed);
    let cases: Vec<(Surreal, Surreal)> =
        (0..100).map(|_| (factors[rng.gen_range(0..factors.len())].clone(), gen::surreal(&mut rng, 3, true))).collect();
    sweep(&cases, |(a, x)| {
        let st = ctor(a);
        let fix = ok(format!("fix({st})"), make_fix(&st))?;
        let y = ok(format!("{fix} at {x}"), fix.xi(x))?;
        expect(format!("{y} fixed by {st}"), ok("is_fixed", is_fixed(&st, &y))?)
    })
}

fn fix_shift(seed: u64) -> Tally {
    let factors = [d("1"), d("-1"), d("2"), Surreal::omega(), s("-^(w+1)")];
    let mut t = fix_cases(seed, &factors, make_shift);
    t = t.merge(Tally::single((|| -> Outcome {
        let fix = ok("fix", make_fix(&make_shift(&d("1"))))?;
        expect_eq("fix(shift(1))", fix.to_string(), make_shift(&Surreal::omega()).to_string())
    })()));
    t
}

fn fix_scale(seed: u64) -> Tally {
    let factors = [d("2"), d("3"), Surreal::omega(), s("+^(w+1)")];
    let mut t = fix_cases(seed, &factors, |a| make_scale(a).expect("positive"));
    t = t.merge(Tally::single((|| -> Outcome {
        let fix = ok("fix", make_fix(&ok("scale", make_scale(&d("2")))?))?;
        expect_eq("fix(scale(2))", fix.to_string(), ok("scale", make_scale(&Surreal::omega()))?.to_string())
    })()));
    t
}

/// Powers of a one-run factor: `a *. a *. ... (n times)`.
fn power(a: &Surreal, n: usize) -> Surreal {
    (0..n).fold(Surreal::one(), |acc, _| concat_mul(&acc, a).expect("one-run factor"))
}

/// `a +. a +. ... (n times)`.
fn repeat(a: &Surreal, n: usize) -> Surreal {
    (0..n).fold(Surreal::zero(), |acc, _| crate::concat::concat_add(&acc, a))
}

fn iterated_images(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let ys: Vec<Surreal> = (0..200).map(|_| gen::surreal(&mut rng, 4, true)).collect();
    let shifts = [d("1"), d("-1"), Surreal::omega()];
    let scales = [d("2"), Surreal::omega()];
    let mut cases: Vec<(Structure, Structure, usize)> = Vec::new();
    for n in 0..=5 {
        for a in &shifts {
            cases.push((make_shift(a), make_shift(&repeat(a, n)), n));
        }
        for a in &scales {
            cases.push((make_scale(a).unwrap(), make_scale(&power(a, n)).unwrap(), n));
        }
    }
    let mut t = sweep(&cases, |(st, composite, n)| {
        for y in &ys {
            let want = composite.member(y);
            if want == Tri::Unknown {
                continue;
            }
            let got = ok(format!("{y} in {st}^{n}"), in_iterated_image(st, *n, y))?;
            expect_eq(format!("{y} in {st}^{n}"), Tri::from(got), want)?;
        }
        for x in &ys[..20] {
            let y = ok("iterate", xi_iter(st, *n, x))?;
            expect(format!("{st}^{n}({x}) in the image"), ok("image", in_iterated_image(st, *n, &y))?)?;
        }
        Ok(())
    });
    // a fixed point lies in every iterated image
    let fixed = [(make_shift(&d("1")), Surreal::omega()), (make_scale(&d("2")).unwrap(), Surreal::omega())];
    t = t.merge(sweep(&fixed, |(st, y)| {
        for n in 0..=5 {
            expect(format!("{y} in {st}^{n}"), ok("image", in_iterated_image(st, n, y))?)?;
        }
        Ok(())
    }));
    t
}

fn nosucc_identities(seed: u64) -> Tally {
    let mut rng = gen::rng(seed);
    let xs: Vec<Surreal> = (0..100).map(|_| gen::surreal(&mut rng, 3, true)).collect();
    let pairs: Vec<(u64, u64)> = (0..=4).flat_map(|a| (0..=4).map(move |b| (a, b))).collect();
    sweep(&pairs, |&(a, b)| {
        let fam = |k: u64| ok(format!("No_>^{k}"), nosucc_pow(&Ordinal::from(k)));
        let (sa, sb) = (fam(a)?, fam(b)?);
        let sum = imbricate(&sa, &sb);
        let (s_sum, s_prod) = (fam(a + b)?, fam(a * b)?);
        for x in &xs {
            expect_eq(format!("No_>^({a}+{b}) at {x}"), ok("sum", s_sum.xi(x))?, ok("imbrication", sum.xi(x))?)?;
            let iterated = ok("iterate", xi_iter(&sa, b as usize, x))?;
            expect_eq(format!("No_>^({a}*{b}) at {x}"), ok("product", s_prod.xi(x))?, iterated)?;
        }
        Ok(())
    })
}

fn nosucc_matches_smp(_: u64) -> Tally {
    let fam = nosucc_pow(&Ordinal::one()).expect("w*.No");
    let g = translations_z();
    sweep(&gen::all_finite(5), |x| {
        expect_eq(format!("w*.No at {x}"), ok("family", fam.xi(x))?, ok("simple elements", smp_xi(g.as_ref(), x))?)
    })
}
