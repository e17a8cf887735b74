//! Worked values for every public operation, with independent checks where
//! the value is computed rather than quoted.

use std::sync::Arc;

use surreal_core::bracket::{
    canonical_options, is_cofinal_wrt, mutually_cofinal, simplest_in_cut, sup_chain, sup_finite, Bound, Cut,
};
use surreal_core::chains;
use surreal_core::concat::{concat_add, concat_add_cut_eq, concat_mul, concat_mul_cut_eq};
use surreal_core::field::{add, add_uniform};
use surreal_core::gen;
use surreal_core::simplicity::{
    halo_root, homotheties, is_simple, join_actions, project_simple, refines, sharpness_probe, smp_structure, smp_xi,
    smp_xi_within, translations_d, translations_z, GroupAction, IntegerTranslations,
};
use surreal_core::substructure::{
    imbricate, in_iterated_image, is_fixed, is_left_factor, make_cut_interval, make_dyadic_tail, make_fix, make_inc,
    make_negate, make_scale, make_shift, no, nosucc_pow, xi_generic,
};
use surreal_core::{Dyadic, Error, Ordinal, Point, Sign, Surreal, Tri};

fn s(t: &str) -> Surreal {
    t.parse().unwrap()
}

fn d(t: &str) -> Surreal {
    t.parse::<Dyadic>().unwrap().to_surreal()
}

fn o(t: &str) -> Ordinal {
    t.parse().unwrap()
}

fn w() -> Surreal {
    Surreal::omega()
}

fn single(x: Surreal) -> Bound {
    Bound::Single(x)
}

mod ordinals {
    use super::*;

    #[test]
    fn comparison() {
        assert!(o("0") < o("1"));
        assert_eq!(o("w"), o("w"));
        assert!(o("w+1") < o("w*2"));
        // the same comparison on all-plus sign sequences
        assert!(Surreal::from_ordinal(&o("w+1")) < Surreal::from_ordinal(&o("w*2")));
    }

    #[test]
    fn cantor_sums_absorb_on_the_left() {
        assert_eq!(o("w").cantor_add(&o("1")), o("w+1"));
        assert_eq!(o("1").cantor_add(&o("w")), o("w"));
        assert_eq!(o("w^2*3+w").cantor_add(&o("0")), o("w^2*3+w"));
    }

    #[test]
    fn cantor_products_agree_with_block_lengths() {
        assert_eq!(o("2").cantor_mul(&o("w")), o("w"));
        assert_eq!(concat_mul(&s("+^2"), &w()).unwrap().len(), o("w"));
        assert_eq!(o("w").cantor_mul(&o("2")), o("w*2"));
        assert_eq!(concat_mul(&w(), &s("+^2")).unwrap().len(), o("w*2"));
        assert_eq!(o("w^2+3").cantor_mul(&o("1")), o("w^2+3"));
    }

    #[test]
    fn omega_powers() {
        assert_eq!(o("0").omega_pow(8).unwrap(), o("1"));
        assert_eq!(o("1").omega_pow(8).unwrap(), o("w"));
        let ww = o("w").omega_pow(8).unwrap();
        assert_eq!(ww, o("w^w"));
        // monotone over a small ladder
        let ladder: Vec<Ordinal> =
            ["0", "1", "2", "w", "w+1", "w^2"].iter().map(|t| o(t).omega_pow(8).unwrap()).collect();
        assert!(ladder.windows(2).all(|p| p[0] < p[1]));
        let mut tower = o("1");
        for _ in 0..8 {
            tower = tower.omega_pow(100).unwrap();
        }
        assert!(tower.omega_pow(8).unwrap_err().is_budget());
    }

    #[test]
    fn natural_operations() {
        assert_eq!(o("1").hessenberg_add(&o("w")), o("w+1"));
        assert_eq!(o("w").hessenberg_mul(&o("2")), o("w*2"));
        assert_eq!(o("2").hessenberg_mul(&o("w")), o("w*2"));
        assert_eq!(o("w+5").hessenberg_add(&o("0")), o("w+5"));
    }

    #[test]
    fn limits() {
        assert!(o("w").is_limit());
        assert!(!o("w+1").is_limit());
        let n = |k: u64| Ordinal::from(k);
        assert_eq!(Ordinal::sup_chain(&n, Some(&o("w")), 8).unwrap(), o("w"));
        assert!(Ordinal::sup_chain(&n, Some(&o("w*2")), 8).is_err());
        assert!(matches!(Ordinal::sup_chain(&n, None, 8), Err(Error::MissingHint(_))));
    }

    #[test]
    fn text_syntax_is_exact() {
        for t in ["0", "5", "w", "w^2*3+w+1", "w^(w+1)", "w^(w^w)"] {
            assert_eq!(o(t).to_string(), t);
        }
    }
}

mod sign_sequences {
    use super::*;

    #[test]
    fn signs_with_padding() {
        let half = s("+ -");
        assert_eq!(half.sign_at(&o("0")), 1);
        assert_eq!(half.sign_at(&o("1")), -1);
        assert_eq!(half.sign_at(&o("5")), 0);
    }

    #[test]
    fn lexicographic_comparison() {
        assert!(s("+ -") < s("+"));
        assert!(s("+^w -") < w());
        // w - 1 is the bracket {N | w}
        let cut = Cut::new(vec![Bound::Chain(chains::nats())], vec![single(w())]);
        assert_eq!(simplest_in_cut(&cut).unwrap(), s("+^w -"));
        let x = s("- +^w");
        assert_eq!(x.cmp(&x), std::cmp::Ordering::Equal);
    }

    #[test]
    fn prefixes() {
        assert!(s("+").is_simpler(&s("+ -")));
        assert_eq!(s("+^w -^w").restrict(&o("w")), w());
        assert_eq!(s("+ -").common_prefix(&s("+ +")), s("+"));
    }

    #[test]
    fn suprema_of_chains() {
        let plus = |n: u64| Surreal::from_i64(n as i64 + 1);
        assert_eq!(sup_chain(&plus, Some(&w()), 8).unwrap(), w());
        assert_eq!(sup_finite(&[d("3/4")]).unwrap(), d("3/4"));
        assert!(matches!(sup_chain(&plus, None, 8), Err(Error::MissingHint(_))));
        // an alternating chain has no finite-run supremum to offer as a hint
        let alt = |n: u64| {
            Surreal::from_signs(
                &(0..2 * (n + 1)).map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus }).collect::<Vec<_>>(),
            )
        };
        assert!(matches!(sup_chain(&alt, None, 8), Err(Error::MissingHint(_))));
    }

    #[test]
    fn canonical_options_of_small_numbers() {
        let opts = canonical_options(&d("1/2"));
        assert!(matches!(&opts.left[..], [Bound::Single(l)] if l.is_zero()));
        assert!(matches!(&opts.right[..], [Bound::Single(r)] if *r == d("1")));
        // every proper prefix of + - is 0 or +, and 0 < 1/2 < 1
        let prefixes = [Surreal::zero(), s("+")];
        assert!(prefixes.iter().all(|p| p.is_strictly_simpler(&d("1/2"))));
        let zero = canonical_options(&Surreal::zero());
        assert!(zero.left.is_empty() && zero.right.is_empty());
        let omega = canonical_options(&w());
        match &omega.left[..] {
            [Bound::Chain(c)] => {
                assert_eq!(c.hint(), Some(&w()));
                assert!((0..8).all(|n| c.at(n) == Surreal::from_i64(n as i64)));
            }
            other => panic!("{other:?}"),
        }
        assert!(omega.right.is_empty());
    }

    #[test]
    fn conversions() {
        assert_eq!(Dyadic::from_surreal(&s("+ -")).unwrap(), "1/2".parse().unwrap());
        assert_eq!(Dyadic::from_surreal(&s("+ - + - +")).unwrap(), "11/16".parse().unwrap());
        assert_eq!(Surreal::from_ordinal(&o("w")), s("+^w"));
        assert!(matches!(Dyadic::from_surreal(&w()), Err(Error::NotDyadic(_))));
        assert!(matches!(s("+ -").to_ordinal(), Err(Error::NotOrdinal(_))));
    }

    #[test]
    fn sign_text_is_exact() {
        for t in ["0", "+^w -^3 +", "- +^(w+1)", "+^w^2 -"] {
            assert_eq!(s(t).to_string(), t);
        }
    }
}

mod brackets {
    use super::*;

    #[test]
    fn finite_cuts() {
        assert_eq!(simplest_in_cut(&Cut::singles(&[], &[])).unwrap(), Surreal::zero());
        assert_eq!(simplest_in_cut(&Cut::singles(&[d("0")], &[])).unwrap(), d("1"));
        assert_eq!(simplest_in_cut(&Cut::singles(&[d("0")], &[d("1")])).unwrap(), d("1/2"));
        assert_eq!(simplest_in_cut(&Cut::singles(&[d("1")], &[d("0")])), Err(Error::EmptyCut));
    }

    #[test]
    fn chain_cuts() {
        let cut = |l: Vec<Bound>, r: Vec<Bound>| simplest_in_cut(&Cut::new(l, r)).unwrap();
        assert_eq!(cut(vec![Bound::Chain(chains::nats())], vec![]), w());
        assert_eq!(
            cut(vec![Bound::Chain(chains::nats())], vec![Bound::Chain(chains::omega_minus_nats())]),
            s("+^w -^w")
        );
        assert_eq!(cut(vec![single(d("0"))], vec![Bound::Chain(chains::half_powers())]), s("+ -^w"));
    }

    #[test]
    fn budget_is_enforced() {
        let cut = Cut::new(vec![Bound::Chain(chains::nats())], vec![]).with_budget(o("5"));
        assert!(simplest_in_cut(&cut).unwrap_err().is_budget());
    }

    #[test]
    fn cofinality() {
        let (zero, one) = (vec![single(d("0"))], vec![single(d("1"))]);
        assert!(is_cofinal_wrt((&zero, &one), (&zero, &one)).unwrap());
        let nats = vec![Bound::Chain(chains::nats())];
        assert!(is_cofinal_wrt((&nats, &[]), (&zero, &[])).unwrap());
        assert!(!is_cofinal_wrt((&zero, &[]), (&nats, &[])).unwrap());
        let evens = vec![Bound::Chain(surreal_core::Chain::new(
            "evens",
            surreal_core::Direction::Increasing,
            Some(w()),
            |n| Surreal::from_i64(2 * n as i64),
        ))];
        assert!(mutually_cofinal((&nats, &[]), (&evens, &[])).unwrap());
    }
}

mod concatenation {
    use super::*;

    #[test]
    fn sums() {
        assert_eq!(concat_add(&w(), &w().neg()), s("+^w -^w"));
        let x = concat_add(&d("-1"), &d("1"));
        assert_eq!(x, s("- +"));
        assert_eq!(Dyadic::from_surreal(&x).unwrap(), "-1/2".parse().unwrap());
        assert_eq!(concat_add(&d("5/8"), &Surreal::zero()), d("5/8"));
    }

    #[test]
    fn products() {
        assert_eq!(concat_mul(&w(), &d("1/2")).unwrap(), s("+^w -^w"));
        for x in gen::all_finite(3) {
            assert_eq!(concat_mul(&x, &d("1")).unwrap(), x);
            assert_eq!(concat_mul(&x, &d("-1")).unwrap(), x.neg());
        }
        assert_eq!(concat_mul(&d("2"), &d("3")).unwrap(), s("+^6"));
        assert_eq!(concat_mul(&s("+ -"), &w()), Err(Error::InfiniteRuns));
    }

    #[test]
    fn cut_equation_forms() {
        assert_eq!(concat_add_cut_eq(&d("1"), &d("1")).unwrap(), d("2"));
        let p = concat_mul_cut_eq(&d("1/2"), &d("1/2")).unwrap();
        assert_eq!(p, s("+ - - +"));
        assert_eq!(p, concat_mul(&d("1/2"), &d("1/2")).unwrap());
        assert_eq!(Dyadic::from_surreal(&p).unwrap(), "3/8".parse().unwrap());
        assert_eq!(concat_add_cut_eq(&d("-3/4"), &Surreal::zero()).unwrap(), d("-3/4"));
        assert_eq!(concat_mul_cut_eq(&d("-1"), &d("1")), Err(Error::NotPositive));
    }
}

mod uniform_sums {
    use super::*;

    #[test]
    fn representation_independent() {
        let rep = |l: &[&str], r: &[&str]| {
            Cut::singles(&l.iter().map(|t| d(t)).collect::<Vec<_>>(), &r.iter().map(|t| d(t)).collect::<Vec<_>>())
        };
        assert_eq!(add_uniform(&d("1"), &rep(&["0"], &[]), &d("1"), &rep(&["0"], &[])).unwrap(), d("2"));
        assert_eq!(add_uniform(&d("0"), &rep(&["-1"], &["1"]), &d("0"), &rep(&[], &[])).unwrap(), d("0"));
        let half = rep(&["0"], &["1"]);
        assert_eq!(add_uniform(&d("1/2"), &half, &d("1/2"), &half).unwrap(), add(&d("1/2"), &d("1/2")).unwrap());
        assert_eq!(add_uniform(&d("1"), &rep(&["1/2"], &[]), &d("1/2"), &rep(&["-7"], &["3/4"])).unwrap(), d("3/2"));
    }
}

mod structures {
    use super::*;

    #[test]
    fn generic_recursion_examples() {
        for a in [d("1"), d("-3/8"), s("+^w -")] {
            let sh = make_shift(&a);
            for x in gen::all_finite(3) {
                assert_eq!(xi_generic(&sh, &x).unwrap(), concat_add(&a, &x));
            }
        }
        for x in gen::all_finite(4) {
            assert_eq!(xi_generic(&no(), &x).unwrap(), x);
        }
        let unit = make_cut_interval(&no(), vec![single(d("0"))], vec![single(d("1"))]).unwrap();
        assert_eq!(xi_generic(&unit, &d("0")).unwrap(), d("1/2"));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(make_shift(&d("1")).xi(&w()).unwrap(), w());
        assert_eq!(make_scale(&w()).unwrap().xi(&d("1/2")).unwrap(), s("+^w -^w"));
        assert_eq!(make_scale(&d("-1")).unwrap_err(), Error::NotPositive);
        // the reflection of No is No, parameterized by the identity
        let rev = make_negate(&no());
        for x in gen::all_finite(3) {
            assert_eq!(rev.xi(&x).unwrap(), x);
        }
        let rev_shift = make_negate(&make_shift(&d("1")));
        assert_eq!(rev_shift.xi(&d("1/2")).unwrap(), s("- + -"));
        assert_eq!(rev_shift.member(&d("-1/2")), Tri::Yes);
    }

    #[test]
    fn convex_intervals() {
        let infinitesimals = make_cut_interval(
            &no(),
            vec![Bound::Chain(chains::neg_half_powers())],
            vec![Bound::Chain(chains::half_powers())],
        )
        .unwrap();
        assert_eq!(infinitesimals.xi(&d("0")).unwrap(), d("0"));
        assert_eq!(infinitesimals.xi(&d("1")).unwrap(), s("+ -^w"));
        let positive = make_cut_interval(&no(), vec![single(d("0"))], vec![]).unwrap();
        assert_eq!(positive.xi(&d("0")).unwrap(), d("1"));
        let infinite = make_cut_interval(&no(), vec![Bound::Chain(chains::nats())], vec![]).unwrap();
        assert_eq!(infinite.xi(&d("0")).unwrap(), w());
        assert!(make_cut_interval(&no(), vec![single(d("1"))], vec![single(d("1"))]).is_err());
    }

    /// Roots of convex pieces are prefixes of their members, and final
    /// segments are rooted at ordinals.
    #[test]
    fn convex_pieces_are_rooted() {
        let mut rng = gen::rng(3);
        for _ in 0..200 {
            let a = gen::finite(&mut rng, 5);
            let b = gen::finite(&mut rng, 5);
            let (lo, hi) = if a < b {
                (a, b)
            } else if b < a {
                (b, a)
            } else {
                continue;
            };
            let piece = make_cut_interval(&no(), vec![single(lo.clone())], vec![single(hi.clone())]).unwrap();
            let root = piece.xi(&Surreal::zero()).unwrap();
            for y in gen::all_finite(6).iter().filter(|y| lo < **y && **y < hi) {
                assert!(root.is_simpler(y), "{root} vs {y}");
            }
            let tail = make_cut_interval(&no(), vec![single(lo.clone())], vec![]).unwrap();
            let root = tail.xi(&Surreal::zero()).unwrap();
            let least = (0..).map(Surreal::from_i64).find(|n| *n > lo).unwrap();
            assert_eq!(root, least, "final segment above {lo}");
        }
    }

    #[test]
    fn tree_structure() {
        let inc = make_inc();
        assert_eq!(inc.xi(&d("0")).unwrap(), d("1"));
        assert_eq!(Dyadic::from_surreal(&inc.xi(&d("-2")).unwrap()).unwrap(), "11/16".parse().unwrap());
        let mut rng = gen::rng(5);
        for _ in 0..200 {
            let x = gen::finite(&mut rng, 8);
            assert!(inc.xi(&x).unwrap().len() > x.len());
        }
    }

    #[test]
    fn imbrications() {
        let a = imbricate(&make_shift(&d("1")), &make_shift(&w()));
        let b = make_shift(&w());
        let x0 = d("-3/4");
        let beta = w();
        let nested = imbricate(&make_shift(&x0), &make_shift(&beta));
        for x in gen::all_finite(3) {
            assert_eq!(a.xi(&x).unwrap(), b.xi(&x).unwrap());
            assert_eq!(imbricate(&make_inc(), &no()).xi(&x).unwrap(), make_inc().xi(&x).unwrap());
            assert_eq!(nested.xi(&x).unwrap(), concat_add(&concat_add(&x0, &beta), &x));
            let y = a.xi(&x).unwrap();
            assert_eq!(a.xi_inv(&y).unwrap(), x);
        }
    }

    #[test]
    fn left_factors() {
        assert_eq!(is_left_factor(&make_shift(&d("1")), &make_shift(&d("1/2"))), Tri::Yes);
        assert_eq!(is_left_factor(&no(), &make_scale(&w()).unwrap()), Tri::Yes);
        // w = 1 +. w lies in both, but w*.(-1) = -w is not above 1
        assert_eq!(is_left_factor(&make_shift(&d("1")), &make_scale(&w()).unwrap()), Tri::No);
    }

    #[test]
    fn fixed_points() {
        let fix = make_fix(&make_shift(&d("1"))).unwrap();
        assert_eq!(fix.to_string(), "shift(+^w)");
        for x in gen::all_finite(3) {
            assert!(is_fixed(&make_shift(&d("1")), &concat_add(&w(), &x)).unwrap());
        }
        assert!(in_iterated_image(&make_shift(&d("1")), 3, &w()).unwrap());
        assert!(!in_iterated_image(&make_shift(&d("1")), 3, &d("2")).unwrap());
        assert!(matches!(make_fix(&make_inc()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn purely_infinite_family() {
        assert_eq!(nosucc_pow(&o("1")).unwrap().xi(&d("1")).unwrap(), w());
        assert_eq!(nosucc_pow(&o("2")).unwrap().xi(&d("1")).unwrap(), s("+^w^2"));
        let zero = nosucc_pow(&o("0")).unwrap();
        for x in gen::all_finite(3) {
            assert_eq!(zero.xi(&x).unwrap(), x);
        }
    }

    #[test]
    fn dyadic_tails() {
        let r: Dyadic = "1".parse().unwrap();
        let tail = make_dyadic_tail(&r).unwrap();
        assert_eq!(tail.xi(&d("0")).unwrap(), d("1"));
        let xs = gen::all_finite(4);
        let ys: Vec<Surreal> = xs.iter().map(|x| tail.xi(x).unwrap()).collect();
        for (i, a) in xs.iter().enumerate() {
            assert_eq!(tail.member(&ys[i]), Tri::Yes);
            for (j, b) in xs.iter().enumerate() {
                assert_eq!(a < b, ys[i] < ys[j]);
            }
        }
        let neg: Dyadic = "-5/4".parse().unwrap();
        assert_eq!(make_dyadic_tail(&neg).unwrap().xi(&d("0")).unwrap(), d("-5/4"));
    }
}

mod simplicity {
    use super::*;

    #[test]
    fn simple_elements_for_translations() {
        let g = IntegerTranslations;
        assert!(is_simple(&g, &w()).unwrap());
        assert!(!is_simple(&g, &s("+^(w+1)")).unwrap());
        assert!(!is_simple(&g, &d("1")).unwrap());
    }

    #[test]
    fn projections() {
        let g = IntegerTranslations;
        assert_eq!(project_simple(&g, &s("+^(w+1)")).unwrap(), w());
        assert_eq!(project_simple(&g, &s("+^w -^w")).unwrap(), s("+^w -^w"));
        for x in [w(), s("-^w +^w"), Surreal::zero()] {
            assert_eq!(project_simple(&g, &x).unwrap(), x);
        }
    }

    #[test]
    fn parameterizations() {
        let g = IntegerTranslations;
        assert_eq!(smp_xi(&g, &d("1")).unwrap(), w());
        assert_eq!(smp_xi(&g, &d("1/2")).unwrap(), s("+^w -^w"));
        assert_eq!(smp_xi(&g, &d("-1")).unwrap(), w().neg());
        let h = homotheties();
        let big = o("w^(w^w)");
        for k in 0..=4u64 {
            let want = Surreal::from_ordinal(&Ordinal::from(k).omega_pow(8).unwrap());
            assert_eq!(smp_xi_within(h.as_ref(), &Surreal::from_i64(k as i64), &big).unwrap(), want);
        }
    }

    #[test]
    fn simple_structures() {
        let smp = smp_structure(translations_z());
        let scale = make_scale(&w()).unwrap();
        let smp_d = smp_structure(translations_d());
        for x in gen::all_finite(6) {
            let y = smp.xi(&x).unwrap();
            assert_eq!(y, scale.xi(&x).unwrap());
            assert_eq!(smp_d.xi(&x).unwrap(), y);
        }
        for n in 0..=5 {
            assert!(smp.xi(&Surreal::from_i64(n)).unwrap().is_ordinal());
        }
    }

    /// Ordinals are sent at least as high by the coarser partition.
    #[test]
    fn refinement_raises_ordinals() {
        let g = IntegerTranslations;
        for n in 0..=5 {
            let x = Surreal::from_i64(n);
            assert!(no().xi(&x).unwrap() <= smp_xi(&g, &x).unwrap());
        }
    }

    #[test]
    fn joins_and_refinement() {
        let z = translations_z();
        let zz = join_actions(&[z.clone(), z.clone()]).unwrap();
        let zd = join_actions(&[z.clone(), translations_d()]).unwrap();
        for x in gen::all_finite(4) {
            assert_eq!(smp_xi(zz.as_ref(), &x).unwrap(), smp_xi(z.as_ref(), &x).unwrap());
            assert_eq!(smp_xi(zd.as_ref(), &x).unwrap(), smp_xi(translations_d().as_ref(), &x).unwrap());
        }
        let xs = gen::all_finite(4);
        assert_eq!(refines(z.as_ref(), translations_d().as_ref(), &xs), Tri::Yes);
        assert!(matches!(join_actions(&[z, homotheties()]), Err(Error::DomainMismatch(..))));
    }

    #[test]
    fn sharpness() {
        let g = IntegerTranslations;
        for x in [w(), s("+^w -^w"), Surreal::zero()] {
            assert_eq!(sharpness_probe(&g, &x), Tri::Yes, "{x}");
        }
    }

    /// Halo membership is an equivalence and halos are linearly ordered.
    #[test]
    fn halos_partition_linearly() {
        let g = IntegerTranslations;
        let heads = [Surreal::zero(), w(), w().neg(), s("+^w -^w")];
        let xs: Vec<Surreal> =
            heads.iter().flat_map(|h| gen::all_finite(3).into_iter().map(move |t| concat_add(h, &t))).collect();
        for x in &xs {
            let hx = g.halo(x).unwrap();
            for y in &xs {
                let hy = g.halo(y).unwrap();
                let same = hx == hy;
                let below = hx.1 <= hy.0;
                let above = hy.1 <= hx.0;
                assert_eq!([same, below, above].iter().filter(|b| **b).count(), 1, "{x} vs {y}");
                assert_eq!(same, halo_root(&g, x).unwrap() == halo_root(&g, y).unwrap());
                if below {
                    assert!(x < y);
                }
            }
        }
    }

    struct Uncertified;

    impl GroupAction for Uncertified {
        fn name(&self) -> String {
            "uncertified".into()
        }

        fn domain(&self) -> surreal_core::Structure {
            no()
        }

        fn apply(&self, x: &Surreal, gen: usize, power: i64) -> surreal_core::Result<Surreal> {
            IntegerTranslations.apply(x, gen, power)
        }

        fn halo(&self, x: &Surreal) -> surreal_core::Result<(Point, Point)> {
            IntegerTranslations.halo(x)
        }

        fn certified_sharp(&self) -> bool {
            false
        }
    }

    #[test]
    fn projection_needs_certified_sharpness() {
        let g: Arc<dyn GroupAction> = Arc::new(Uncertified);
        assert!(matches!(project_simple(g.as_ref(), &w()), Err(Error::NotSharp(_))));
        assert!(is_simple(g.as_ref(), &w()).unwrap());
    }
}
