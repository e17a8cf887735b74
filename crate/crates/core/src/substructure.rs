//! Surreal substructures: order and simplicity preserving copies of the
//! whole tree inside itself, each given by its parameterization `Ξ`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bracket::{inf_point, simplest_in_cut, simplest_in_cut_quantized, sup_point, Bound, Cut};
use crate::concat::{concat_add, concat_mul};
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::ordinal::{Ordinal, DEFAULT_DEPTH_BUDGET};
use crate::simplicity::{self, GroupAction};
use crate::surreal::{Point, Sign, Surreal};

/// Step cap for descents in the parameter tree.
pub const PARAM_STEPS: usize = 256;

/// Three-valued answer for questions that are not always decidable here.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::Yes
        } else {
            Tri::No
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Caps {
    pub closed_form_xi: bool,
    pub decidable_member: bool,
    pub generic_recursion_ok: bool,
}

/// A tree given by its root and successor maps. Only finite parameters
/// can be walked.
pub struct TreeRule {
    pub name: String,
    pub root: Surreal,
    pub left_succ: Box<dyn Fn(&Surreal) -> Surreal + Send + Sync>,
    pub right_succ: Box<dyn Fn(&Surreal) -> Surreal + Send + Sync>,
}

/// The rule behind [`Structure::Inc`]: `0 ↦ 1` and `u ∔ σ ↦ Ξu ∔ σ ∔ 1`.
pub fn inc_rule() -> TreeRule {
    TreeRule {
        name: "inc-tree".into(),
        root: Surreal::one(),
        left_succ: Box::new(|v| v.with_sign(Sign::Minus).with_sign(Sign::Plus)),
        right_succ: Box::new(|v| v.with_sign(Sign::Plus).with_sign(Sign::Plus)),
    }
}

/// Closed forms recognised for intervals of `No`.
#[derive(Clone, Debug, PartialEq)]
pub enum Form {
    /// All extensions of `c`.
    Subtree(Surreal),
    /// `c` plus an infinitesimal.
    Infinitesimal(Surreal),
    /// Strictly between `−ω` and `ω`.
    Finite,
    Generic,
}

#[derive(Clone)]
pub enum Structure {
    No,
    Shift(Surreal),
    Scale(Surreal),
    Negate(Arc<Structure>),
    Interval { name: String, base: Arc<Structure>, lower: Vec<Bound>, upper: Vec<Bound>, form: Form },
    Inc,
    Tree(Arc<TreeRule>),
    Imbricate(Arc<Structure>, Arc<Structure>),
    Smp(Arc<dyn GroupAction>),
}

pub fn no() -> Structure {
    Structure::No
}

pub fn make_shift(a: &Surreal) -> Structure {
    Structure::Shift(a.clone())
}

pub fn make_scale(a: &Surreal) -> Result<Structure> {
    if a.first_sign() != Some(Sign::Plus) {
        return Err(Error::NotPositive);
    }
    Ok(Structure::Scale(a.clone()))
}

pub fn make_negate(s: &Structure) -> Structure {
    Structure::Negate(Arc::new(s.clone()))
}

/// The convex piece `(L | R)` of `s`.
pub fn make_cut_interval(s: &Structure, lower: Vec<Bound>, upper: Vec<Bound>) -> Result<Structure> {
    let name = format!("interval({s}, {}, {})", side_label(&lower), side_label(&upper));
    interval_named(s, lower, upper, name)
}

fn interval_named(s: &Structure, lower: Vec<Bound>, upper: Vec<Bound>, name: String) -> Result<Structure> {
    let base = Arc::new(s.clone());
    let form = match s {
        Structure::No => detect_form(&lower, &upper),
        _ => Form::Generic,
    };
    let out = Structure::Interval { name, base, lower, upper, form };
    // an empty interval has no root
    out.induced_bracket(&[], &[], &crate::bracket::default_budget())?;
    Ok(out)
}

fn side_label(bounds: &[Bound]) -> String {
    if bounds.is_empty() {
        return "none".into();
    }
    let parts: Vec<String> = bounds
        .iter()
        .map(|b| match b {
            Bound::Single(x) => x.to_string(),
            Bound::Chain(c) => c.name().to_string(),
            Bound::Gap(p) => p.to_string(),
        })
        .collect();
    format!("[{}]", parts.join(", "))
}

fn detect_form(lower: &[Bound], upper: &[Bound]) -> Form {
    let (Ok(lo), Ok(up)) = (sup_point(lower), inf_point(upper)) else {
        return Form::Generic;
    };
    for c in [lo.prefix().clone(), up.prefix().clone()] {
        if Point::new(c.clone(), Sign::Minus) == lo && Point::new(c.clone(), Sign::Plus) == up {
            return Form::Subtree(c);
        }
    }
    let omega = Ordinal::omega();
    if let Some(last) = lo.prefix().runs().last() {
        // lo = c ∔ − ∔ +^ω
        let n = lo.prefix().runs().len();
        let body = Surreal::from_runs(lo.prefix().runs()[..n - 1].iter().map(|r| (r.sign, r.len.clone())));
        if last.sign == Sign::Plus && last.len == omega && body.last_sign() == Some(Sign::Minus) {
            if let Some(p) = body.len().pred() {
                let c = body.restrict(&p);
                let want_lo = Point::new(c.with_sign(Sign::Minus).with(Sign::Plus, &omega), Sign::Minus);
                let want_up = Point::new(c.with_sign(Sign::Plus).with(Sign::Minus, &omega), Sign::Plus);
                if lo == want_lo && up == want_up {
                    return Form::Infinitesimal(c);
                }
            }
        }
    }
    let w = Surreal::omega();
    if lo == Point::above(&w.neg()) && up == Point::below(&w) {
        return Form::Finite;
    }
    Form::Generic
}

/// `No^{⊒a}`, the numbers extending `a`.
pub fn make_final(a: &Surreal) -> Structure {
    make_shift(a)
}

pub fn make_inc() -> Structure {
    Structure::Inc
}

pub fn make_from_tree(rule: TreeRule) -> Structure {
    Structure::Tree(Arc::new(rule))
}

pub fn imbricate(s: &Structure, t: &Structure) -> Structure {
    Structure::Imbricate(Arc::new(s.clone()), Arc::new(t.clone()))
}

/// `ω̇^α ⨰ No`.
pub fn nosucc_pow(alpha: &Ordinal) -> Result<Structure> {
    let a = alpha.omega_pow(DEFAULT_DEPTH_BUDGET)?;
    make_scale(&Surreal::from_ordinal(&a))
}

/// `r + No^≺`: the numbers infinitely close to `r`.
pub fn make_dyadic_tail(r: &Dyadic) -> Result<Structure> {
    let c = r.to_surreal();
    let omega = Ordinal::omega();
    let lo = Point::new(c.with_sign(Sign::Minus).with(Sign::Plus, &omega), Sign::Minus);
    let up = Point::new(c.with_sign(Sign::Plus).with(Sign::Minus, &omega), Sign::Plus);
    interval_named(&Structure::No, vec![Bound::Gap(lo)], vec![Bound::Gap(up)], format!("tail({r})"))
}

/// The structure of numbers fixed by `Ξ_s`, for the shapes where it has a
/// closed form.
pub fn make_fix(s: &Structure) -> Result<Structure> {
    match s {
        Structure::No => Ok(Structure::No),
        Structure::Shift(a) if a.runs().len() <= 1 => Ok(make_shift(&concat_mul(a, &Surreal::omega())?)),
        Structure::Scale(a) if a.is_ordinal() => {
            let m = a.to_ordinal()?;
            make_scale(&Surreal::from_ordinal(&m.pow_omega()))
        }
        _ => Err(Error::Unsupported(format!("no closed form for the fixed points of {s}"))),
    }
}

pub fn is_fixed(s: &Structure, x: &Surreal) -> Result<bool> {
    Ok(&s.xi(x)? == x)
}

pub fn xi_iter(s: &Structure, n: usize, x: &Surreal) -> Result<Surreal> {
    let mut v = x.clone();
    for _ in 0..n {
        v = s.xi(&v)?;
    }
    Ok(v)
}

/// Whether `y` lies in `Ξ_s^n No`.
pub fn in_iterated_image(s: &Structure, n: usize, y: &Surreal) -> Result<bool> {
    let mut v = y.clone();
    for _ in 0..n {
        match s.xi_inv(&v) {
            Ok(u) => v = u,
            Err(Error::NotMember { .. }) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// `S ⊆ T`, i.e. `t` is a left factor of `s`.
pub fn is_left_factor(t: &Structure, s: &Structure) -> Tri {
    match (t, s) {
        (Structure::No, _) => Tri::Yes,
        (Structure::Shift(b), Structure::Shift(a)) => b.is_simpler(a).into(),
        (Structure::Scale(b), Structure::Scale(a)) if b.runs().len() == 1 && a.runs().len() == 1 => {
            b.runs()[0].len.left_div_exact(&a.runs()[0].len).is_some().into()
        }
        _ => {
            for x in sample_params(4) {
                let Ok(y) = s.xi(&x) else { continue };
                if t.member(&y) == Tri::No {
                    return Tri::No;
                }
            }
            Tri::Unknown
        }
    }
}

/// All finite sign sequences up to length `n`.
pub fn sample_params(n: usize) -> Vec<Surreal> {
    let mut out = vec![Surreal::zero()];
    let mut frontier = vec![Surreal::zero()];
    for _ in 0..n {
        let mut next = Vec::new();
        for x in &frontier {
            next.push(x.with_sign(Sign::Minus));
            next.push(x.with_sign(Sign::Plus));
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `Ξ_s x = {Ξ_s x_L | Ξ_s x_R}_s`, recursing on the nearest options.
pub fn xi_generic(s: &Structure, x: &Surreal) -> Result<Surreal> {
    xi_generic_within(s, x, &crate::bracket::default_budget())
}

/// [`xi_generic`] with an explicit length budget for every bracket.
pub fn xi_generic_within(s: &Structure, x: &Surreal, budget: &Ordinal) -> Result<Surreal> {
    let mut memo = HashMap::new();
    xi_generic_memo(s, x, budget, &mut memo)
}

fn xi_generic_memo(
    s: &Structure,
    x: &Surreal,
    budget: &Ordinal,
    memo: &mut HashMap<Surreal, Surreal>,
) -> Result<Surreal> {
    if let Some(v) = memo.get(x) {
        return Ok(v.clone());
    }
    let (l, r) = x.reduced_finite_options()?;
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    if let Some(l) = l {
        lower.push(Bound::Single(xi_generic_memo(s, &l, budget, memo)?));
    }
    if let Some(r) = r {
        upper.push(Bound::Single(xi_generic_memo(s, &r, budget, memo)?));
    }
    let v = s.induced_bracket(&lower, &upper, budget)?;
    memo.insert(x.clone(), v.clone());
    Ok(v)
}

fn not_member(s: &Structure, y: &Surreal) -> Error {
    Error::NotMember { structure: s.to_string(), value: y.to_string() }
}

fn above_all(bounds: &[Bound], y: &Surreal) -> bool {
    bounds.iter().all(|b| match b.lower_gap() {
        Some(p) => p.lt_number(y),
        None => b.samples(crate::bracket::DEFAULT_SAMPLES).iter().all(|v| v < y),
    })
}

fn below_all(bounds: &[Bound], y: &Surreal) -> bool {
    bounds.iter().all(|b| match b.upper_gap() {
        Some(p) => p.gt_number(y),
        None => b.samples(crate::bracket::DEFAULT_SAMPLES).iter().all(|v| v > y),
    })
}

impl Structure {
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn caps(&self) -> Caps {
        let closed = match self {
            Structure::Interval { form, base, .. } => *form != Form::Generic || !matches!(**base, Structure::No),
            Structure::Tree(_) | Structure::Smp(_) => false,
            _ => true,
        };
        Caps {
            closed_form_xi: closed,
            decidable_member: !matches!(self, Structure::Tree(_)),
            generic_recursion_ok: true,
        }
    }

    pub fn member(&self, y: &Surreal) -> Tri {
        match self {
            Structure::No => Tri::Yes,
            Structure::Shift(a) => a.is_simpler(y).into(),
            Structure::Negate(s) => s.member(&y.neg()),
            Structure::Interval { base, lower, upper, .. } => {
                if !(above_all(lower, y) && below_all(upper, y)) {
                    return Tri::No;
                }
                base.member(y)
            }
            Structure::Imbricate(s, t) => match s.xi_inv(y) {
                Ok(u) => t.member(&u),
                Err(Error::NotMember { .. }) => Tri::No,
                Err(_) => Tri::Unknown,
            },
            Structure::Smp(g) => match simplicity::is_simple(g.as_ref(), y) {
                Ok(b) => b.into(),
                Err(_) => Tri::Unknown,
            },
            _ => match self.xi_inv(y) {
                Ok(_) => Tri::Yes,
                Err(Error::NotMember { .. }) => Tri::No,
                Err(_) => Tri::Unknown,
            },
        }
    }

    /// The parameterization `Ξ`.
    pub fn xi(&self, x: &Surreal) -> Result<Surreal> {
        match self {
            Structure::No => Ok(x.clone()),
            Structure::Shift(a) => Ok(concat_add(a, x)),
            Structure::Scale(a) => concat_mul(a, x),
            Structure::Negate(s) => Ok(s.xi(&x.neg())?.neg()),
            Structure::Interval { form, .. } => match form {
                Form::Subtree(c) => Ok(concat_add(c, x)),
                Form::Infinitesimal(c) => {
                    let Some(sigma) = x.first_sign() else {
                        return Ok(c.clone());
                    };
                    let rest = x.drop_prefix(&Surreal::zero().with_sign(sigma)).unwrap();
                    let v = c.with_sign(sigma).with(sigma.flip(), &Ordinal::omega());
                    Ok(concat_add(&v, &rest))
                }
                Form::Finite => Ok(finite_part_xi(x)),
                Form::Generic => xi_generic(self, x),
            },
            Structure::Inc => inc_xi(x),
            Structure::Tree(rule) => {
                let n = x.finite_len().ok_or(Error::NotFiniteLength)?;
                let mut v = rule.root.clone();
                for i in 0..n {
                    v = match x.sign_at(&Ordinal::from(i)) {
                        1 => (rule.right_succ)(&v),
                        _ => (rule.left_succ)(&v),
                    };
                }
                Ok(v)
            }
            Structure::Imbricate(s, t) => s.xi(&t.xi(x)?),
            Structure::Smp(g) => simplicity::smp_xi(g.as_ref(), x),
        }
    }

    /// The inverse of `Ξ`; fails with `NotMember` outside the structure.
    pub fn xi_inv(&self, y: &Surreal) -> Result<Surreal> {
        match self {
            Structure::No => Ok(y.clone()),
            Structure::Shift(a) => y.drop_prefix(a).ok_or_else(|| not_member(self, y)),
            Structure::Scale(a) => scale_inv(a, y).ok_or_else(|| not_member(self, y)),
            Structure::Negate(s) => Ok(s.xi_inv(&y.neg())?.neg()),
            Structure::Interval { form, .. } => match form {
                Form::Subtree(c) => y.drop_prefix(c).ok_or_else(|| not_member(self, y)),
                Form::Infinitesimal(c) => {
                    let rest = y.drop_prefix(c).ok_or_else(|| not_member(self, y))?;
                    let Some(sigma) = rest.first_sign() else {
                        return Ok(Surreal::zero());
                    };
                    let head = Surreal::zero().with_sign(sigma).with(sigma.flip(), &Ordinal::omega());
                    let tail = rest.drop_prefix(&head).ok_or_else(|| not_member(self, y))?;
                    Ok(concat_add(&Surreal::zero().with_sign(sigma), &tail))
                }
                Form::Finite => finite_part_xi_inv(y).ok_or_else(|| not_member(self, y)),
                Form::Generic => self.xi_inv_by_descent(y),
            },
            Structure::Inc => inc_xi_inv(y).ok_or_else(|| not_member(self, y)),
            Structure::Imbricate(s, t) => t.xi_inv(&s.xi_inv(y)?),
            Structure::Tree(_) | Structure::Smp(_) => self.xi_inv_by_descent(y),
        }
    }

    /// Rebuilds the parameter one sign at a time. `Ξ` is ⊑-increasing, so
    /// once `Ξ` of the current prefix stops being a prefix of `y`, `y` is
    /// not in the structure.
    fn xi_inv_by_descent(&self, y: &Surreal) -> Result<Surreal> {
        let mut x = Surreal::zero();
        for _ in 0..PARAM_STEPS {
            let v = self.xi(&x)?;
            if &v == y {
                return Ok(x);
            }
            if !v.is_simpler(y) {
                return Err(not_member(self, y));
            }
            x.push(if y > &v { Sign::Plus } else { Sign::Minus }, &Ordinal::one());
        }
        Err(Error::Unknown(format!("no preimage of {y} in {self} within {PARAM_STEPS} signs")))
    }

    /// The simplest member of the structure strictly between the bounds.
    pub fn induced_bracket(&self, lower: &[Bound], upper: &[Bound], budget: &Ordinal) -> Result<Surreal> {
        match self {
            Structure::No => simplest_in_cut(&Cut::new(lower.to_vec(), upper.to_vec()).with_budget(budget.clone())),
            Structure::Shift(a) => {
                let mut lo = lower.to_vec();
                let mut up = upper.to_vec();
                lo.push(Bound::Gap(Point::new(a.clone(), Sign::Minus)));
                up.push(Bound::Gap(Point::new(a.clone(), Sign::Plus)));
                simplest_in_cut(&Cut::new(lo, up).with_budget(budget.clone()))
            }
            Structure::Negate(s) => {
                let lo: Vec<Bound> = upper.iter().map(Bound::neg).collect();
                let up: Vec<Bound> = lower.iter().map(Bound::neg).collect();
                Ok(s.induced_bracket(&lo, &up, budget)?.neg())
            }
            Structure::Interval { base, lower: l0, upper: r0, .. } => {
                let lo: Vec<Bound> = lower.iter().chain(l0).cloned().collect();
                let up: Vec<Bound> = upper.iter().chain(r0).cloned().collect();
                base.induced_bracket(&lo, &up, budget)
            }
            Structure::Scale(a) if a.runs().len() == 1 => {
                let cut = Cut::new(lower.to_vec(), upper.to_vec()).with_budget(budget.clone());
                simplest_in_cut_quantized(&cut, &a.runs()[0].len)
            }
            _ => self.bracket_by_descent(lower, upper),
        }
    }

    /// Descends the parameter tree: the members of a cut form a convex
    /// class, and `Ξ` carries its simplest parameter to its root.
    fn bracket_by_descent(&self, lower: &[Bound], upper: &[Bound]) -> Result<Surreal> {
        let mut x = Surreal::zero();
        for _ in 0..PARAM_STEPS {
            let v = self.xi(&x)?;
            let low_ok = above_all(lower, &v);
            let up_ok = below_all(upper, &v);
            match (low_ok, up_ok) {
                (true, true) => return Ok(v),
                (false, false) => return Err(Error::EmptyCut),
                (false, true) => x.push(Sign::Plus, &Ordinal::one()),
                (true, false) => x.push(Sign::Minus, &Ordinal::one()),
            }
        }
        Err(Error::BudgetExceeded(format!("bracket in {self} needs a parameter longer than {PARAM_STEPS}")))
    }
}

fn finite_part_xi(x: &Surreal) -> Surreal {
    let omega = Ordinal::omega();
    match x.runs().first() {
        Some(r) if r.len >= omega => {
            let rest = x.drop_prefix(&Surreal::zero().with(r.sign, &omega)).unwrap();
            concat_add(&Surreal::zero().with(r.sign, &omega).with_sign(r.sign.flip()), &rest)
        }
        _ => x.clone(),
    }
}

fn finite_part_xi_inv(y: &Surreal) -> Option<Surreal> {
    let omega = Ordinal::omega();
    match y.runs().first() {
        Some(r) if r.len >= omega => {
            if r.len != omega {
                return None;
            }
            let head = Surreal::zero().with(r.sign, &omega).with_sign(r.sign.flip());
            let rest = y.drop_prefix(&head)?;
            Some(concat_add(&Surreal::zero().with(r.sign, &omega), &rest))
        }
        _ => Some(y.clone()),
    }
}

/// Left division of every run by the single run of `a`, or block
/// stripping when `a` has several runs.
fn scale_inv(a: &Surreal, y: &Surreal) -> Option<Surreal> {
    if let [single] = a.runs() {
        let mut out = Surreal::zero();
        for r in y.runs() {
            out.push(r.sign.times(single.sign), &single.len.left_div_exact(&r.len)?);
        }
        return Some(out);
    }
    let n = y.finite_len()?;
    let na = a.finite_len()?;
    let mut rest = y.clone();
    let mut out = Surreal::zero();
    for _ in 0..=n / na.max(1) {
        if rest.is_zero() {
            return Some(out);
        }
        let (block, sign) =
            if rest.first_sign() == a.first_sign() { (a.clone(), Sign::Plus) } else { (a.neg(), Sign::Minus) };
        rest = rest.drop_prefix(&block)?;
        out.push(sign, &Ordinal::one());
    }
    None
}

fn inc_xi(x: &Surreal) -> Result<Surreal> {
    let mut out = Surreal::zero();
    for r in x.runs() {
        match r.sign {
            Sign::Plus => out.push(Sign::Plus, &Ordinal::from(2).cantor_mul(&r.len)),
            Sign::Minus => {
                let n = r.len.as_u64().ok_or(Error::InfiniteRuns)?;
                for _ in 0..n {
                    out.push(Sign::Plus, &Ordinal::one());
                    out.push(Sign::Minus, &Ordinal::one());
                }
            }
        }
    }
    out.push(Sign::Plus, &Ordinal::one());
    Ok(out)
}

fn inc_xi_inv(y: &Surreal) -> Option<Surreal> {
    let last = y.runs().last()?;
    if last.sign != Sign::Plus {
        return None;
    }
    let body = y.restrict(&y.len().pred()?);
    let two = Ordinal::from(2);
    let mut out = Surreal::zero();
    let mut mid_pair = false;
    for r in body.runs() {
        match (r.sign, mid_pair) {
            (Sign::Plus, false) => {
                let (q, rem) = two.left_div_rem(&r.len);
                out.push(Sign::Plus, &q);
                mid_pair = !rem.is_zero();
            }
            (Sign::Minus, true) if r.len == Ordinal::one() => {
                out.push(Sign::Minus, &Ordinal::one());
                mid_pair = false;
            }
            _ => return None,
        }
    }
    (!mid_pair).then_some(out)
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::No => write!(f, "No"),
            Structure::Shift(a) => write!(f, "shift({a})"),
            Structure::Scale(a) => write!(f, "scale({a})"),
            Structure::Negate(s) => write!(f, "neg({s})"),
            Structure::Interval { name, .. } => write!(f, "{name}"),
            Structure::Inc => write!(f, "inc"),
            Structure::Tree(rule) => write!(f, "{}", rule.name),
            Structure::Imbricate(s, t) => write!(f, "imb({s}, {t})"),
            Structure::Smp(g) => write!(f, "smp({})", g.name()),
        }
    }
}

impl fmt::Debug for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
