use super::{expect, expect_eq, ok, sweep, Outcome, Suite, Tally};
use crate::concat::concat_mul;
use crate::gen;
use crate::ordinal::Ordinal;
use crate::simplicity::{
    halo_root, homotheties, is_simple, is_simple_by_options, join_actions, project_simple, refines, sharpness_probe,
    smp_xi, smp_xi_within, translations_d, translations_z, GroupAction, IntegerTranslations,
};
use crate::substructure::Tri;
use crate::surreal::Surreal;

pub const SUITES: [Suite; 9] = [
    Suite {
        name: "smp-translations-concat",
        statement:
            "the simple elements for integer translations are parameterized by x -> w*.x, for all x of length <= 6",
        run: translations_concat,
    },
    Suite {
        name: "smp-translations-ordinals",
        statement: "the simple-element parameterization maps the ordinals 0..5 to ordinals",
        run: translations_ordinals,
    },
    Suite {
        name: "smp-translation-groups-agree",
        statement: "integer translations, dyadic translations and their join give the same simple elements",
        run: groups_agree,
    },
    Suite {
        name: "smp-halo-laws",
        statement: "x lies in its halo, the halo root is a prefix of x and is simple, and translates share a halo",
        run: halo_laws,
    },
    Suite {
        name: "smp-simple-by-options",
        statement: "x is simple iff the halos of its options lie on their own side of x",
        run: simple_by_options,
    },
    Suite {
        name: "smp-projection",
        statement: "the projection onto simple elements is idempotent and gives a simple prefix",
        run: projection,
    },
    Suite {
        name: "smp-sharpness",
        statement: "canonical options of simple elements reach the halos of their simple options",
        run: sharpness,
    },
    Suite {
        name: "omega-map-ordinals",
        statement: "the simple elements for homotheties send an ordinal a to the Cantor power w^a",
        run: omega_map,
    },
    Suite { name: "omega-map-inverse-fixture", statement: "the omega map at -1 is + -^w", run: omega_inverse },
];

fn s(t: &str) -> Surreal {
    t.parse().expect("sign literal")
}

/// Purely infinite numbers followed by a short tail, the inputs that
/// translations act on exactly.
fn translation_inputs() -> Vec<Surreal> {
    let heads = [Surreal::zero(), Surreal::omega(), s("-^w"), s("+^w -^w"), s("+^(w*2)")];
    let tails = gen::all_finite(3);
    heads.iter().flat_map(|h| tails.iter().map(move |t| crate::concat::concat_add(h, t))).collect()
}

fn translations_concat(_: u64) -> Tally {
    let g = IntegerTranslations;
    let w = Surreal::omega();
    sweep(&gen::all_finite(6), |x| {
        let want = ok("w *. x", concat_mul(&w, x))?;
        expect_eq(format!("smp at {x}"), ok(format!("smp at {x}"), smp_xi(&g, x))?, want)
    })
}

fn translations_ordinals(_: u64) -> Tally {
    let g = IntegerTranslations;
    let inputs: Vec<Surreal> = (0..=5).map(Surreal::from_i64).collect();
    sweep(&inputs, |x| {
        let y = ok(format!("smp at {x}"), smp_xi(&g, x))?;
        expect(format!("smp at {x} = {y} is an ordinal"), y.is_ordinal())
    })
}

fn groups_agree(_: u64) -> Tally {
    let z = translations_z();
    let d = translations_d();
    let joined = join_actions(&[z.clone(), d.clone()]);
    let mut t = sweep(&gen::all_finite(6), |x| {
        let joined = ok("join", joined.clone())?;
        let want = ok("Z", smp_xi(z.as_ref(), x))?;
        expect_eq(format!("dyadic translations at {x}"), ok("D", smp_xi(d.as_ref(), x))?, want.clone())?;
        expect_eq(format!("joined translations at {x}"), ok("join", smp_xi(joined.as_ref(), x))?, want)
    });
    // each group's halos sit inside the other's
    let xs = translation_inputs();
    t = t.merge(Tally::single((|| -> Outcome {
        expect_eq("Z refines D", refines(z.as_ref(), d.as_ref(), &xs), Tri::Yes)?;
        expect_eq("D refines Z", refines(d.as_ref(), z.as_ref(), &xs), Tri::Yes)?;
        expect("homotheties do not join translations", join_actions(&[z.clone(), homotheties()]).is_err())
    })()));
    t
}

fn halo_laws(_: u64) -> Tally {
    let g = IntegerTranslations;
    sweep(&translation_inputs(), |x| {
        let (lo, up) = ok(format!("halo of {x}"), g.halo(x))?;
        expect(format!("{x} inside its halo"), lo.lt_number(x) && up.gt_number(x))?;
        let root = ok("root", halo_root(&g, x))?;
        expect(format!("root {root} is a prefix of {x}"), root.is_simpler(x))?;
        expect(format!("root {root} is simple"), ok("simple", is_simple(&g, &root))?)?;
        for k in [-2, -1, 1, 3] {
            let moved = ok("translate", g.apply(x, 0, k))?;
            expect_eq(format!("halo of {x} moved by {k}"), ok("halo", g.halo(&moved))?, (lo.clone(), up.clone()))?;
        }
        Ok(())
    })
}

fn simple_by_options(_: u64) -> Tally {
    let g = IntegerTranslations;
    let xs: Vec<Surreal> =
        translation_inputs().into_iter().filter(|x| x.is_finite()).chain(gen::all_finite(6)).collect();
    sweep(&xs, |x| {
        expect_eq(
            format!("simplicity of {x}"),
            ok("options", is_simple_by_options(&g, x))?,
            ok("halo", is_simple(&g, x))?,
        )
    })
}

fn projection(_: u64) -> Tally {
    let g = IntegerTranslations;
    sweep(&translation_inputs(), |x| {
        let p = ok(format!("projection of {x}"), project_simple(&g, x))?;
        expect(format!("{p} is a prefix of {x}"), p.is_simpler(x))?;
        expect(format!("{p} is simple"), ok("simple", is_simple(&g, &p))?)?;
        expect_eq(format!("projection of {p}"), ok("projection", project_simple(&g, &p))?, p.clone())?;
        expect_eq(format!("projection of {x} is its halo root"), ok("root", halo_root(&g, x))?, p)
    })
}

fn sharpness(_: u64) -> Tally {
    let g = IntegerTranslations;
    let w = Surreal::omega();
    let simple: Vec<Surreal> = gen::all_finite(3).iter().map(|x| concat_mul(&w, x).expect("one run")).collect();
    sweep(&simple, |x| expect_eq(format!("sharpness at {x}"), sharpness_probe(&g, x), Tri::Yes))
}

fn omega_map(_: u64) -> Tally {
    let g = homotheties();
    let budget: Ordinal = "w^(w^w)".parse().expect("ordinal literal");
    let inputs: Vec<Ordinal> =
        ["0", "1", "2", "3", "w", "w+1"].iter().map(|t| t.parse().expect("ordinal literal")).collect();
    sweep(&inputs, |a| {
        let want = Surreal::from_ordinal(&ok("power", a.omega_pow(crate::ordinal::DEFAULT_DEPTH_BUDGET))?);
        let got = ok(format!("omega map at {a}"), smp_xi_within(g.as_ref(), &Surreal::from_ordinal(a), &budget))?;
        expect_eq(format!("omega map at {a}"), got, want)
    })
}

fn omega_inverse(_: u64) -> Tally {
    let g = homotheties();
    Tally::single((|| -> Outcome {
        expect_eq("omega map at -1", ok("omega map", smp_xi(g.as_ref(), &Surreal::from_i64(-1)))?, s("+ -^w"))
    })())
}
