//! Conway sum and product on numbers of finite length, by the cut
//! recursion on reduced options.
//!
//! The recursion only ever needs the nearest option on each side: every
//! option expression is monotone in the option, so the nearest one is
//! cofinal in the full option set.

use std::cell::{Cell, RefCell};
use std::collections::HashMap;

use crate::bracket::{simplest_in_cut, Bound, Cut};
use crate::error::{Error, Result};
use crate::surreal::Surreal;

/// Memo entries kept per thread before the table is flushed.
pub const MEMO_CAPACITY: usize = 1 << 20;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Add,
    Mul,
}

thread_local! {
    static MEMO: RefCell<HashMap<(Op, Surreal, Surreal), Surreal>> = RefCell::new(HashMap::new());
    static MEMO_ON: Cell<bool> = const { Cell::new(true) };
}

/// Runs `f` with the memo table bypassed on this thread.
pub fn without_memo<T>(f: impl FnOnce() -> T) -> T {
    let prev = MEMO_ON.with(|m| m.replace(false));
    let out = f();
    MEMO_ON.with(|m| m.set(prev));
    out
}

pub fn clear_memo() {
    MEMO.with(|m| m.borrow_mut().clear());
}

fn memoized(op: Op, x: &Surreal, y: &Surreal, f: impl FnOnce() -> Result<Surreal>) -> Result<Surreal> {
    if !MEMO_ON.with(Cell::get) {
        return f();
    }
    // both operations are commutative
    let key = if x <= y { (op, x.clone(), y.clone()) } else { (op, y.clone(), x.clone()) };
    if let Some(v) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = f()?;
    MEMO.with(|m| {
        let mut m = m.borrow_mut();
        if m.len() >= MEMO_CAPACITY {
            m.clear();
        }
        m.insert(key, v.clone());
    });
    Ok(v)
}

pub fn neg(x: &Surreal) -> Surreal {
    x.neg()
}

/// `−x = {−x_R | −x_L}`, evaluated through the engine. Used to check `neg`.
pub fn neg_by_cut(x: &Surreal) -> Result<Surreal> {
    let (l, r) = x.reduced_finite_options()?;
    let lower: Vec<Surreal> = r.iter().map(neg_by_cut).collect::<Result<_>>()?;
    let upper: Vec<Surreal> = l.iter().map(neg_by_cut).collect::<Result<_>>()?;
    simplest_in_cut(&Cut::singles(&lower, &upper))
}

/// `x + y = {x_L + y, x + y_L | x_R + y, x + y_R}`.
pub fn add(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    let (xl, xr) = x.reduced_finite_options()?;
    let (yl, yr) = y.reduced_finite_options()?;
    if x.is_zero() {
        return Ok(y.clone());
    }
    if y.is_zero() {
        return Ok(x.clone());
    }
    memoized(Op::Add, x, y, || {
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for a in xl.iter() {
            lower.push(add(a, y)?);
        }
        for b in yl.iter() {
            lower.push(add(x, b)?);
        }
        for a in xr.iter() {
            upper.push(add(a, y)?);
        }
        for b in yr.iter() {
            upper.push(add(x, b)?);
        }
        simplest_in_cut(&Cut::singles(&lower, &upper))
    })
}

pub fn sub(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    add(x, &y.neg())
}

/// `xy = {x'y + xy' − x'y' | ...}` with `(x', y')` ranging over same-side
/// option pairs on the left and mixed pairs on the right.
pub fn mul(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    let (xl, xr) = x.reduced_finite_options()?;
    let (yl, yr) = y.reduced_finite_options()?;
    if x.is_zero() || y.is_zero() {
        return Ok(Surreal::zero());
    }
    memoized(Op::Mul, x, y, || {
        let term = |a: &Surreal, b: &Surreal| -> Result<Surreal> {
            let ay = mul(a, y)?;
            let xb = mul(x, b)?;
            let ab = mul(a, b)?;
            sub(&add(&ay, &xb)?, &ab)
        };
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (xs, ys, left) in [(&xl, &yl, true), (&xr, &yr, true), (&xl, &yr, false), (&xr, &yl, false)] {
            for a in xs.iter() {
                for b in ys.iter() {
                    let t = term(a, b)?;
                    if left {
                        lower.push(t)
                    } else {
                        upper.push(t)
                    }
                }
            }
        }
        simplest_in_cut(&Cut::singles(&lower, &upper))
    })
}

fn realized(bounds: &[Bound]) -> Result<Vec<Surreal>> {
    bounds
        .iter()
        .map(|b| match b {
            Bound::Single(v) => Ok(v.clone()),
            _ => Err(Error::Unsupported("sum over a representation with chain or gap bounds".into())),
        })
        .collect()
}

/// The sum through arbitrary cut representations of both operands:
/// `{L_x + y, x + L_y | x + R_y, R_x + y}`.
pub fn add_uniform(x: &Surreal, rep_x: &Cut, y: &Surreal, rep_y: &Cut) -> Result<Surreal> {
    let (lx, rx) = (realized(&rep_x.lower)?, realized(&rep_x.upper)?);
    let (ly, ry) = (realized(&rep_y.lower)?, realized(&rep_y.upper)?);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for a in &lx {
        lower.push(add(a, y)?);
    }
    for b in &ly {
        lower.push(add(x, b)?);
    }
    for b in &ry {
        upper.push(add(x, b)?);
    }
    for a in &rx {
        upper.push(add(a, y)?);
    }
    simplest_in_cut(&Cut::singles(&lower, &upper))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::Dyadic;

    fn v(t: &str) -> Surreal {
        t.parse::<Dyadic>().unwrap().to_surreal()
    }

    #[test]
    fn fixtures() {
        assert_eq!(add(&v("1/2"), &v("1/2")).unwrap(), v("1"));
        assert_eq!(add(&v("3/4"), &v("-1/4")).unwrap(), v("1/2"));
        assert_eq!(mul(&v("1/2"), &v("2")).unwrap(), v("1"));
        assert_eq!(mul(&v("-1/2"), &v("-1/2")).unwrap(), v("1/4"));
        assert_eq!(neg(&v("1/2")).to_string(), "- +");
        assert_eq!(neg_by_cut(&v("5/8")).unwrap(), v("-5/8"));
    }

    #[test]
    fn transfinite_rejected() {
        assert_eq!(add(&Surreal::omega(), &v("1")), Err(Error::NotFiniteLength));
    }

    #[test]
    fn uniform_sum() {
        let rep = Cut::singles(&[v("0")], &[]);
        assert_eq!(add_uniform(&v("1"), &rep, &v("1"), &rep).unwrap(), v("2"));
        let rep = Cut::singles(&[v("0")], &[v("1")]);
        assert_eq!(add_uniform(&v("1/2"), &rep, &v("1/2"), &rep).unwrap(), v("1"));
        let rep0 = Cut::singles(&[v("-1")], &[v("1")]);
        assert_eq!(add_uniform(&v("0"), &rep0, &v("0"), &Cut::singles(&[], &[])).unwrap(), v("0"));
    }

    #[test]
    fn memo_invisible() {
        let a = add(&v("5/8"), &v("-3/16")).unwrap();
        let b = without_memo(|| add(&v("5/8"), &v("-3/16")).unwrap());
        assert_eq!(a, b);
    }
}
