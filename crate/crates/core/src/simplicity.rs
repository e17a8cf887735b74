//! Convex partitions cut out by group actions, the simple elements of
//! their classes, and the parameterization of those simple elements.
//!
//! Each class ("halo") of a number `x` is the convex hull of its orbit and
//! is reported as a pair of gaps. A number is simple when it is the root
//! of its own halo.

use std::collections::HashMap;
use std::sync::Arc;

use crate::bracket::{canonical_options, default_budget, is_cofinal_wrt, Bound, Chain, Direction};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, DEFAULT_DEPTH_BUDGET};
use crate::substructure::{make_shift, no, Structure, Tri};
use crate::surreal::{Point, Sign, Surreal};

pub trait GroupAction: Send + Sync {
    fn name(&self) -> String;

    /// The structure the group acts on.
    fn domain(&self) -> Structure;

    fn generators(&self) -> usize {
        1
    }

    /// Generator `gen` applied `power` times.
    fn apply(&self, x: &Surreal, gen: usize, power: i64) -> Result<Surreal>;

    /// The halo of `x` as (gap below it, gap above it).
    fn halo(&self, x: &Surreal) -> Result<(Point, Point)>;

    fn certified_sharp(&self) -> bool;

    /// A bound family standing for the halos of the images of an option
    /// chain. `lower` is true for left options.
    fn limit_bound(&self, chain: &Chain, lower: bool) -> Result<Bound> {
        let _ = lower;
        Err(Error::Unsupported(format!("{}: no halo family for option chain {}", self.name(), chain.name())))
    }
}

/// Splits `x` as `p ∔ d` with `p` purely infinite and `d` of finite length.
fn split_tail(x: &Surreal) -> Option<(Surreal, Dyadic)> {
    let (lambda, _) = x.len().split_finite();
    let p = x.restrict(&lambda);
    if !p.runs().iter().all(|r| r.len.is_limit()) {
        return None;
    }
    let d = x.drop_prefix(&p)?;
    Some((p, Dyadic::from_surreal(&d).ok()?))
}

fn out_of_family(g: &dyn GroupAction, x: &Surreal) -> Error {
    Error::Unknown(format!("{} is outside the family {} acts on exactly", x, g.name()))
}

fn translation_halo(x: &Surreal) -> Option<(Point, Point)> {
    let (p, _) = split_tail(x)?;
    let omega = Ordinal::omega();
    Some((Point::new(p.with(Sign::Minus, &omega), Sign::Plus), Point::new(p.with(Sign::Plus, &omega), Sign::Minus)))
}

/// `x ↦ x + n`, exact on numbers of the form purely infinite ∔ dyadic.
pub struct IntegerTranslations;

/// `x ↦ x + n/2`.
pub struct DyadicTranslations;

/// `x ↦ 2^k x` on positive ordinals.
pub struct Homotheties;

fn translate(g: &dyn GroupAction, x: &Surreal, amount: Dyadic) -> Result<Surreal> {
    let (p, d) = split_tail(x).ok_or_else(|| out_of_family(g, x))?;
    let moved = (&d + &amount).to_surreal();
    Ok(crate::concat::concat_add(&p, &moved))
}

impl GroupAction for IntegerTranslations {
    fn name(&self) -> String {
        "translations(Z)".into()
    }

    fn domain(&self) -> Structure {
        no()
    }

    fn apply(&self, x: &Surreal, _gen: usize, power: i64) -> Result<Surreal> {
        translate(self, x, Dyadic::integer(power))
    }

    fn halo(&self, x: &Surreal) -> Result<(Point, Point)> {
        translation_halo(x).ok_or_else(|| out_of_family(self, x))
    }

    fn certified_sharp(&self) -> bool {
        true
    }
}

impl GroupAction for DyadicTranslations {
    fn name(&self) -> String {
        "translations(D)".into()
    }

    fn domain(&self) -> Structure {
        no()
    }

    fn apply(&self, x: &Surreal, _gen: usize, power: i64) -> Result<Surreal> {
        translate(self, x, Dyadic::new(power, 1))
    }

    fn halo(&self, x: &Surreal) -> Result<(Point, Point)> {
        translation_halo(x).ok_or_else(|| out_of_family(self, x))
    }

    fn certified_sharp(&self) -> bool {
        true
    }
}

fn omega_power(e: &Ordinal) -> Result<Surreal> {
    Ok(Surreal::from_ordinal(&e.omega_pow(DEFAULT_DEPTH_BUDGET)?))
}

impl GroupAction for Homotheties {
    fn name(&self) -> String {
        "homotheties(ordinals)".into()
    }

    fn domain(&self) -> Structure {
        make_shift(&Surreal::one())
    }

    fn apply(&self, x: &Surreal, _gen: usize, power: i64) -> Result<Surreal> {
        let a = x.to_ordinal().map_err(|_| out_of_family(self, x))?;
        if a.is_zero() || power < 0 {
            return Err(out_of_family(self, x));
        }
        let factor = 1u64.checked_shl(power as u32).ok_or_else(|| Error::BudgetExceeded("factor too large".into()))?;
        Ok(Surreal::from_ordinal(&a.hessenberg_mul(&Ordinal::from(factor))))
    }

    /// For leading term `ω^β`: from just above `ω^β / 2^ℕ` to just below
    /// `ω^β · 2^ℕ`.
    fn halo(&self, x: &Surreal) -> Result<(Point, Point)> {
        let a = x.to_ordinal().map_err(|_| out_of_family(self, x))?;
        let Some((beta, _)) = a.terms().first() else {
            return Err(out_of_family(self, x));
        };
        let lo = omega_power(beta)?.with(Sign::Minus, &beta.succ().omega_pow(DEFAULT_DEPTH_BUDGET)?);
        let up = omega_power(&beta.succ())?;
        Ok((Point::new(lo, Sign::Plus), Point::new(up, Sign::Minus)))
    }

    fn certified_sharp(&self) -> bool {
        true
    }

    /// Left options of a limit ordinal `α` come as the chain `α[n]`; the
    /// images `ω^(α[n]+1)` sit above each halo and converge to `ω^α`.
    fn limit_bound(&self, chain: &Chain, lower: bool) -> Result<Bound> {
        let alpha = chain.hint().map(Surreal::to_ordinal);
        let (true, Some(Ok(alpha))) = (lower, alpha) else {
            return Err(Error::Unsupported(format!("{}: option chain {} is not ordinal", self.name(), chain.name())));
        };
        let hint = omega_power(&alpha)?;
        let c = chain.clone();
        Ok(Bound::Chain(Chain::new(format!("w^({}+1)", chain.name()), Direction::Increasing, Some(hint), move |n| {
            let e = c.at(n).to_ordinal().expect("ordinal chain").succ();
            Surreal::from_ordinal(&e.omega_pow(DEFAULT_DEPTH_BUDGET).expect("exponent within budget"))
        })))
    }
}

pub fn translations_z() -> Arc<dyn GroupAction> {
    Arc::new(IntegerTranslations)
}

pub fn translations_d() -> Arc<dyn GroupAction> {
    Arc::new(DyadicTranslations)
}

pub fn homotheties() -> Arc<dyn GroupAction> {
    Arc::new(Homotheties)
}

/// The halo root: the simplest element of the domain inside the halo.
pub fn halo_root(g: &dyn GroupAction, x: &Surreal) -> Result<Surreal> {
    let (lo, up) = g.halo(x)?;
    // the root is a prefix of x
    let budget = default_budget().max(x.len());
    g.domain().induced_bracket(&[Bound::Gap(lo)], &[Bound::Gap(up)], &budget)
}

pub fn is_simple(g: &dyn GroupAction, x: &Surreal) -> Result<bool> {
    Ok(&halo_root(g, x)? == x)
}

/// The option test for simplicity on finite lengths: the halos of the
/// left options lie below `x` and those of the right options above it.
pub fn is_simple_by_options(g: &dyn GroupAction, x: &Surreal) -> Result<bool> {
    let (left, right) = x.prefix_options()?;
    let dom = g.domain();
    for l in left.iter().filter(|v| dom.member(v) == Tri::Yes) {
        if !g.halo(l)?.1.lt_number(x) {
            return Ok(false);
        }
    }
    for r in right.iter().filter(|v| dom.member(v) == Tri::Yes) {
        if !g.halo(r)?.0.gt_number(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Prefixes of `x` worth testing for simplicity, longest first: run ends
/// and the partial sums of each run length's normal form.
fn candidate_prefixes(x: &Surreal) -> Vec<Surreal> {
    let mut out = vec![Surreal::zero()];
    let mut head = Surreal::zero();
    for r in x.runs() {
        let mut acc = Ordinal::zero();
        for (e, c) in r.len.terms() {
            let term = Ordinal::from_terms([(e.clone(), 1)]);
            for _ in 0..*c {
                acc = acc.cantor_add(&term);
                out.push(head.with(r.sign, &acc));
            }
        }
        head.push(r.sign, &r.len);
    }
    out.reverse();
    out
}

/// The projection onto the simple elements: the longest simple prefix.
pub fn project_simple(g: &dyn GroupAction, x: &Surreal) -> Result<Surreal> {
    if !g.certified_sharp() {
        return Err(Error::NotSharp(g.name()));
    }
    for p in candidate_prefixes(x) {
        if g.domain().member(&p) == Tri::Yes && is_simple(g, &p)? {
            return Ok(p);
        }
    }
    Err(Error::Unknown(format!("no simple prefix of {x} under {}", g.name())))
}

/// `Ξ x = {G Ξ x_L | G Ξ x_R}` in the domain.
pub fn smp_xi(g: &dyn GroupAction, x: &Surreal) -> Result<Surreal> {
    smp_xi_within(g, x, &default_budget())
}

/// [`smp_xi`] with an explicit length budget for every bracket.
pub fn smp_xi_within(g: &dyn GroupAction, x: &Surreal, budget: &Ordinal) -> Result<Surreal> {
    let mut memo = HashMap::new();
    smp_xi_memo(g, x, budget, &mut memo)
}

fn smp_xi_memo(
    g: &dyn GroupAction,
    x: &Surreal,
    budget: &Ordinal,
    memo: &mut HashMap<Surreal, Surreal>,
) -> Result<Surreal> {
    if let Some(v) = memo.get(x) {
        return Ok(v.clone());
    }
    let opts = canonical_options(x);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (bounds, is_lower) in [(&opts.left, true), (&opts.right, false)] {
        for b in bounds {
            let out = match b {
                Bound::Single(o) => {
                    let v = smp_xi_memo(g, o, budget, memo)?;
                    let (lo, up) = g.halo(&v)?;
                    Bound::Gap(if is_lower { up } else { lo })
                }
                Bound::Chain(c) => g.limit_bound(c, is_lower)?,
                Bound::Gap(_) => unreachable!("canonical options are never gaps"),
            };
            if is_lower {
                lower.push(out);
            } else {
                upper.push(out);
            }
        }
    }
    let v = g.domain().induced_bracket(&lower, &upper, budget)?;
    memo.insert(x.clone(), v.clone());
    Ok(v)
}

pub fn smp_structure(g: Arc<dyn GroupAction>) -> Structure {
    Structure::Smp(g)
}

/// The group generated by several actions on a common domain.
pub struct Joined {
    parts: Vec<Arc<dyn GroupAction>>,
}

pub fn join_actions(parts: &[Arc<dyn GroupAction>]) -> Result<Arc<dyn GroupAction>> {
    let first = parts.first().ok_or_else(|| Error::Unsupported("empty join".into()))?;
    let dom = first.domain().name();
    for p in &parts[1..] {
        if p.domain().name() != dom {
            return Err(Error::DomainMismatch(dom, p.domain().name()));
        }
    }
    Ok(Arc::new(Joined { parts: parts.to_vec() }))
}

impl GroupAction for Joined {
    fn name(&self) -> String {
        let names: Vec<String> = self.parts.iter().map(|p| p.name()).collect();
        format!("join({})", names.join(", "))
    }

    fn domain(&self) -> Structure {
        self.parts[0].domain()
    }

    fn generators(&self) -> usize {
        self.parts.iter().map(|p| p.generators()).sum()
    }

    fn apply(&self, x: &Surreal, gen: usize, power: i64) -> Result<Surreal> {
        let mut g = gen;
        for p in &self.parts {
            if g < p.generators() {
                return p.apply(x, g, power);
            }
            g -= p.generators();
        }
        Err(Error::Unsupported(format!("generator {gen} out of range")))
    }

    /// The union of the halos.
    fn halo(&self, x: &Surreal) -> Result<(Point, Point)> {
        let mut lo = Point::top();
        let mut up = Point::bottom();
        for p in &self.parts {
            let (l, u) = p.halo(x)?;
            lo = lo.min(l);
            up = up.max(u);
        }
        Ok((lo, up))
    }

    fn certified_sharp(&self) -> bool {
        self.parts.iter().all(|p| p.certified_sharp())
    }

    fn limit_bound(&self, chain: &Chain, lower: bool) -> Result<Bound> {
        self.parts[0].limit_bound(chain, lower)
    }
}

/// Whether every halo of `g1` sits inside the matching halo of `g2`, on
/// the given samples.
pub fn refines(g1: &dyn GroupAction, g2: &dyn GroupAction, samples: &[Surreal]) -> Tri {
    let mut checked = 0;
    for x in samples {
        let (Ok((l1, u1)), Ok((l2, u2))) = (g1.halo(x), g2.halo(x)) else { continue };
        if l2 > l1 || u1 > u2 {
            return Tri::No;
        }
        checked += 1;
    }
    if checked == 0 {
        Tri::Unknown
    } else {
        Tri::Yes
    }
}

/// Checks on a simple `x` that its canonical options reach as far as the
/// halos of its simple options.
pub fn sharpness_probe(g: &dyn GroupAction, x: &Surreal) -> Tri {
    match probe(g, x) {
        Ok(b) => b.into(),
        Err(_) => Tri::Unknown,
    }
}

fn probe(g: &dyn GroupAction, x: &Surreal) -> Result<bool> {
    if !is_simple(g, x)? {
        return Ok(false);
    }
    let opts = canonical_options(x);
    let dom = g.domain();
    let (mut hl, mut hr) = (Vec::new(), Vec::new());
    for p in candidate_prefixes(x).into_iter().filter(|p| p != x) {
        if dom.member(&p) != Tri::Yes || !is_simple(g, &p)? {
            continue;
        }
        let (lo, up) = g.halo(&p)?;
        if p < *x {
            hl.push(Bound::Gap(up));
        } else {
            hr.push(Bound::Gap(lo));
        }
    }
    is_cofinal_wrt((&opts.left, &opts.right), (&hl, &hr))
}
