//! The Conway bracket: the simplest number strictly between two bound
//! families.
//!
//! Every bound is turned into a gap [`Point`]. A single lower bound `l`
//! becomes the gap just above `l`; an increasing chain of lower bounds
//! becomes the gap at its limit hint. The engine then descends the tree
//! from zero, appending whole runs at a time: when some lower gap lies
//! above the current prefix, the prefix must continue with `+` for exactly
//! as long as that gap's next `+` run lasts.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::surreal::{Point, Sign, Surreal};

/// How many chain elements are spot-checked.
pub const DEFAULT_SAMPLES: u64 = 8;
/// Iteration cap for the descent loop.
pub const MAX_STEPS: usize = 4096;

/// The default output-length budget, ω².
pub fn default_budget() -> Ordinal {
    Ordinal::from_terms([(Ordinal::from(2), 1)])
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Increasing,
    Decreasing,
}

type Generator = Arc<dyn Fn(u64) -> Surreal + Send + Sync>;

/// A strictly monotone ω-sequence of numbers.
///
/// The hint, when present, is the limit of the sequence in the tree: the
/// sequence whose every position is eventually constant along the chain.
/// For chains that are also ⊑-chains this is their ⊑-supremum.
#[derive(Clone)]
pub struct Chain {
    name: Arc<str>,
    dir: Direction,
    gen: Generator,
    hint: Option<Surreal>,
}

impl Chain {
    pub fn new(
        name: impl Into<Arc<str>>,
        dir: Direction,
        hint: Option<Surreal>,
        gen: impl Fn(u64) -> Surreal + Send + Sync + 'static,
    ) -> Self {
        Chain { name: name.into(), dir, gen: Arc::new(gen), hint }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn direction(&self) -> Direction {
        self.dir
    }

    pub fn hint(&self) -> Option<&Surreal> {
        self.hint.as_ref()
    }

    pub fn at(&self, n: u64) -> Surreal {
        (self.gen)(n)
    }

    /// The chain with every element passed through `f`, which must be
    /// strictly monotone and continuous at the limit.
    pub fn map(
        &self,
        name: impl Into<Arc<str>>,
        flips: bool,
        hint: Option<Surreal>,
        f: impl Fn(&Surreal) -> Surreal + Send + Sync + 'static,
    ) -> Chain {
        let gen = self.gen.clone();
        let dir = match (self.dir, flips) {
            (d, false) => d,
            (Direction::Increasing, true) => Direction::Decreasing,
            (Direction::Decreasing, true) => Direction::Increasing,
        };
        Chain { name: name.into(), dir, gen: Arc::new(move |n| f(&gen(n))), hint }
    }

    pub fn neg(&self) -> Chain {
        let hint = self.hint.as_ref().map(Surreal::neg);
        self.map(format!("-{}", self.name), true, hint, Surreal::neg)
    }

    /// Spot-checks monotonicity and the hint on the first `k + 1` elements.
    pub fn validate(&self, k: u64) -> Result<()> {
        let mut prev: Option<Surreal> = None;
        let mut prev_common: Option<Ordinal> = None;
        for i in 0..=k {
            let v = self.at(i);
            if let Some(p) = &prev {
                let ok = match self.dir {
                    Direction::Increasing => p < &v,
                    Direction::Decreasing => p > &v,
                };
                if !ok {
                    return Err(Error::NotAChain(format!("{}: element {i} is out of order", self.name)));
                }
            }
            if let Some(h) = &self.hint {
                let gap = self.limit_point(h);
                let inside = match self.dir {
                    Direction::Increasing => gap.gt_number(&v),
                    Direction::Decreasing => gap.lt_number(&v),
                };
                if !inside {
                    return Err(Error::InvalidHint(format!("{}: element {i} passes the hint", self.name)));
                }
                let common = v.common_prefix(h).len();
                if prev_common.as_ref().is_some_and(|c| c > &common) {
                    return Err(Error::InvalidHint(format!("{}: elements drift away from the hint", self.name)));
                }
                prev_common = Some(common);
            }
            prev = Some(v);
        }
        Ok(())
    }

    fn limit_point(&self, hint: &Surreal) -> Point {
        match self.dir {
            Direction::Increasing => Point::new(hint.clone(), Sign::Minus),
            Direction::Decreasing => Point::new(hint.clone(), Sign::Plus),
        }
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chain({}, {:?}", self.name, self.dir)?;
        if let Some(h) = &self.hint {
            write!(f, ", limit {h}")?;
        }
        write!(f, ")")
    }
}

/// One side's worth of bounds.
#[derive(Clone, Debug)]
pub enum Bound {
    Single(Surreal),
    Chain(Chain),
    /// A gap given directly; strictness is automatic.
    Gap(Point),
}

impl Bound {
    pub fn neg(&self) -> Bound {
        match self {
            Bound::Single(x) => Bound::Single(x.neg()),
            Bound::Chain(c) => Bound::Chain(c.neg()),
            Bound::Gap(p) => Bound::Gap(p.neg()),
        }
    }

    /// The gap this bound stands for as a lower bound, if it has one.
    pub fn lower_gap(&self) -> Option<Point> {
        bound_point(self, Side::Lower)
    }

    pub fn upper_gap(&self) -> Option<Point> {
        bound_point(self, Side::Upper)
    }

    /// The finitely many concrete numbers this bound stands for, with
    /// chains sampled at their first `k + 1` elements.
    pub fn samples(&self, k: u64) -> Vec<Surreal> {
        match self {
            Bound::Single(x) => vec![x.clone()],
            Bound::Chain(c) => (0..=k).map(|i| c.at(i)).collect(),
            Bound::Gap(_) => Vec::new(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Lower,
    Upper,
}

impl Side {
    fn push_sign(self) -> Sign {
        match self {
            Side::Lower => Sign::Plus,
            Side::Upper => Sign::Minus,
        }
    }

    fn tail(self) -> Sign {
        self.push_sign().flip()
    }
}

/// The gap a bound stands for on the given side, or `None` for a chain
/// that has no hint and must be sampled instead.
fn bound_point(b: &Bound, side: Side) -> Option<Point> {
    let edge = |x: &Surreal| Point::new(x.with_sign(side.push_sign()), side.tail());
    match (b, side) {
        (Bound::Single(x), _) => Some(edge(x)),
        (Bound::Gap(p), _) => Some(p.clone()),
        (Bound::Chain(c), Side::Lower) if c.dir == Direction::Decreasing => Some(edge(&c.at(0))),
        (Bound::Chain(c), Side::Upper) if c.dir == Direction::Increasing => Some(edge(&c.at(0))),
        (Bound::Chain(c), _) => c.hint.as_ref().map(|h| Point::new(h.clone(), side.tail())),
    }
}

/// A cut: lower and upper bound families plus a length budget.
#[derive(Clone, Debug)]
pub struct Cut {
    pub lower: Vec<Bound>,
    pub upper: Vec<Bound>,
    pub budget: Ordinal,
}

impl Cut {
    pub fn new(lower: Vec<Bound>, upper: Vec<Bound>) -> Self {
        Cut { lower, upper, budget: default_budget() }
    }

    pub fn singles(lower: &[Surreal], upper: &[Surreal]) -> Self {
        Cut::new(lower.iter().cloned().map(Bound::Single).collect(), upper.iter().cloned().map(Bound::Single).collect())
    }

    pub fn with_budget(mut self, budget: Ordinal) -> Self {
        self.budget = budget;
        self
    }

    pub fn neg(&self) -> Cut {
        Cut {
            lower: self.upper.iter().map(Bound::neg).collect(),
            upper: self.lower.iter().map(Bound::neg).collect(),
            budget: self.budget.clone(),
        }
    }
}

/// `{L | R}`: the simplest number strictly between the two sides.
pub fn simplest_in_cut(cut: &Cut) -> Result<Surreal> {
    cut_with_quantum(cut, None)
}

/// The simplest number in the cut whose runs all have lengths of the form
/// `m ⨰ q`. These numbers are the image of `x ↦ +^m ⨰ x`, so this is the
/// bracket induced on that image.
pub fn simplest_in_cut_quantized(cut: &Cut, m: &Ordinal) -> Result<Surreal> {
    if m.is_zero() {
        return Err(Error::NotPositive);
    }
    cut_with_quantum(cut, Some(m))
}

fn cut_with_quantum(cut: &Cut, quantum: Option<&Ordinal>) -> Result<Surreal> {
    let k = DEFAULT_SAMPLES;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    let mut deferred: Vec<(&Chain, Side)> = Vec::new();
    for (bounds, side, out) in [(&cut.lower, Side::Lower, &mut lower), (&cut.upper, Side::Upper, &mut upper)] {
        for b in bounds {
            if let Bound::Chain(c) = b {
                c.validate(k)?;
            }
            match bound_point(b, side) {
                Some(p) => out.push(p),
                None => {
                    let Bound::Chain(c) = b else { unreachable!() };
                    deferred.push((c, side));
                    out.extend((0..=k).map(|i| bound_point(&Bound::Single(c.at(i)), side).unwrap()));
                }
            }
        }
    }
    let x = descend(&lower, &upper, &cut.budget, quantum)?;
    // re-verify against concrete elements
    let fits = |v: &Surreal, side: Side| match side {
        Side::Lower => v < &x,
        Side::Upper => v > &x,
    };
    for (bounds, side) in [(&cut.lower, Side::Lower), (&cut.upper, Side::Upper)] {
        for b in bounds {
            if let Some(bad) = b.samples(k).iter().find(|v| !fits(v, side)) {
                return Err(Error::InvalidHint(format!("result {x} is not beyond bound {bad}")));
            }
        }
    }
    for (c, side) in deferred {
        if (k + 1..=2 * k + 1).any(|i| !fits(&c.at(i), side)) {
            return Err(Error::MissingHint(c.name.to_string()));
        }
    }
    Ok(x)
}

/// The descent on gaps. Lower gaps must end up below the result, upper
/// gaps above it.
pub fn simplest_between_points(lower: &[Point], upper: &[Point], budget: &Ordinal) -> Result<Surreal> {
    descend(lower, upper, budget, None)
}

fn descend(lower: &[Point], upper: &[Point], budget: &Ordinal, quantum: Option<&Ordinal>) -> Result<Surreal> {
    let mut x = Surreal::zero();
    for _ in 0..MAX_STEPS {
        let low_bad: Vec<&Point> = lower.iter().filter(|p| !p.lt_number(&x)).collect();
        let up_bad: Vec<&Point> = upper.iter().filter(|p| !p.gt_number(&x)).collect();
        let (bad, sign) = match (low_bad.is_empty(), up_bad.is_empty()) {
            (true, true) => return Ok(x),
            (false, false) => return Err(Error::EmptyCut),
            (false, true) => (low_bad, Sign::Plus),
            (true, false) => (up_bad, Sign::Minus),
        };
        let mut leap = Ordinal::zero();
        for p in bad {
            let rest = p.strip(&x).ok_or(Error::EmptyCut)?;
            let first = rest.prefix().runs().first();
            match first {
                Some(r) if r.sign == sign => leap = leap.max(r.len.clone()),
                // the gap continues with our sign forever: nothing beyond it
                _ => return Err(Error::EmptyCut),
            }
        }
        if let Some(m) = quantum {
            leap = round_up_run(&x, sign, &leap, m);
        }
        x.push(sign, &leap);
        if &x.len() > budget {
            return Err(Error::BudgetExceeded(format!("bracket needs length beyond {budget}")));
        }
    }
    Err(Error::BudgetExceeded(format!("bracket descent exceeded {MAX_STEPS} steps")))
}

/// The extra length that brings the trailing run of `sign`, once extended
/// by `leap`, up to the next multiple `m ⨰ q`.
fn round_up_run(x: &Surreal, sign: Sign, leap: &Ordinal, m: &Ordinal) -> Ordinal {
    let cur = match x.runs().last() {
        Some(r) if r.sign == sign => r.len.clone(),
        _ => Ordinal::zero(),
    };
    let target = cur.cantor_add(leap);
    let (mut q, r) = m.left_div_rem(&target);
    if !r.is_zero() {
        q = q.succ();
    }
    cur.left_sub(&m.cantor_mul(&q)).expect("rounded run extends the current one")
}

/// The least gap above every lower bound.
pub fn sup_point(lower: &[Bound]) -> Result<Point> {
    let mut best = Point::bottom();
    for b in lower {
        let p = bound_point(b, Side::Lower).ok_or_else(|| undecidable(b))?;
        best = best.max(p);
    }
    Ok(best)
}

/// The greatest gap below every upper bound.
pub fn inf_point(upper: &[Bound]) -> Result<Point> {
    let mut best = Point::top();
    for b in upper {
        let p = bound_point(b, Side::Upper).ok_or_else(|| undecidable(b))?;
        best = best.min(p);
    }
    Ok(best)
}

fn undecidable(b: &Bound) -> Error {
    match b {
        Bound::Chain(c) => Error::Undecidable(format!("chain {} has no hint", c.name)),
        _ => Error::Undecidable("bound".into()),
    }
}

/// `a` is cofinal with respect to `b`: no element of `b`'s lower side lies
/// above all of `a`'s, and no element of `b`'s upper side lies below all
/// of `a`'s.
pub fn is_cofinal_wrt(a: (&[Bound], &[Bound]), b: (&[Bound], &[Bound])) -> Result<bool> {
    Ok(sup_point(a.0)? >= sup_point(b.0)? && inf_point(a.1)? <= inf_point(b.1)?)
}

pub fn mutually_cofinal(a: (&[Bound], &[Bound]), b: (&[Bound], &[Bound])) -> Result<bool> {
    Ok(is_cofinal_wrt(a, b)? && is_cofinal_wrt(b, a)?)
}

/// Canonical options in reduced form: on each side either the nearest
/// option or, when the relevant run has limit length, an ω-chain of
/// options cofinal in that side.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub left: Vec<Bound>,
    pub right: Vec<Bound>,
}

pub fn canonical_options(x: &Surreal) -> Options {
    Options { left: side_options(x, Sign::Plus), right: side_options(x, Sign::Minus) }
}

fn side_options(x: &Surreal, sign: Sign) -> Vec<Bound> {
    let Some((upto, off, len)) = x.last_run_of(sign) else {
        return Vec::new();
    };
    if let Some(p) = len.pred() {
        return vec![Bound::Single(x.restrict(&off.cantor_add(&p)))];
    }
    let dir = match sign {
        Sign::Plus => Direction::Increasing,
        Sign::Minus => Direction::Decreasing,
    };
    let name = format!("options of {x}");
    let xs = x.clone();
    vec![Bound::Chain(Chain::new(name, dir, Some(upto), move |n| {
        xs.restrict(&off.cantor_add(&len.fundamental(n).expect("limit run")))
    }))]
}

/// ⊑-supremum of a finite chain.
pub fn sup_finite(elements: &[Surreal]) -> Result<Surreal> {
    let mut best = Surreal::zero();
    for e in elements {
        if best.is_simpler(e) {
            best = e.clone();
        } else if !e.is_simpler(&best) {
            return Err(Error::NotAChain(format!("{best} and {e} are incomparable")));
        }
    }
    Ok(best)
}

/// ⊑-supremum of an ω-chain, given a hint. The chain must increase for ⊑
/// and approach the hint: the common prefix of the `k`-th element and the
/// hint must be longer than any proper prefix of the hint of the same
/// limit shape.
pub fn sup_chain(gen: &dyn Fn(u64) -> Surreal, hint: Option<&Surreal>, k: u64) -> Result<Surreal> {
    let mut prev = gen(0);
    for i in 1..=k {
        let v = gen(i);
        if !prev.is_strictly_simpler(&v) {
            return Err(Error::NotAChain(format!("element {i} does not extend element {}", i - 1)));
        }
        prev = v;
    }
    let hint = hint.ok_or_else(|| Error::MissingHint("surreal ⊑-chain".into()))?;
    let lens = |i: u64| gen(i).len();
    Ordinal::sup_chain(&lens, Some(&hint.len()), k)?;
    for i in 0..=k {
        if !gen(i).is_strictly_simpler(hint) {
            return Err(Error::InvalidHint(format!("element {i} is not a prefix of {hint}")));
        }
    }
    Ok(hint.clone())
}
