//! Concatenation sum and product of sign sequences.

use crate::bracket::{simplest_in_cut, Cut};
use crate::error::{Error, Result};
use crate::surreal::{Sign, Surreal};

/// `x ∔ y`: the signs of `y` appended after those of `x`.
pub fn concat_add(x: &Surreal, y: &Surreal) -> Surreal {
    let mut out = x.clone();
    for r in y.runs() {
        out.push(r.sign, &r.len);
    }
    out
}

/// `x ⨰ y`: one copy of `x` or `−x` per sign of `y`.
///
/// When `x` has several runs and `y` has a run of infinite length, the
/// product has infinitely many runs and cannot be represented.
pub fn concat_mul(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    let mut out = Surreal::zero();
    if x.is_zero() {
        return Ok(out);
    }
    if let [single] = x.runs() {
        for r in y.runs() {
            out.push(r.sign.times(single.sign), &single.len.cantor_mul(&r.len));
        }
        return Ok(out);
    }
    for r in y.runs() {
        let n = r.len.as_u64().ok_or(Error::InfiniteRuns)?;
        for _ in 0..n {
            for xr in x.runs() {
                out.push(xr.sign.times(r.sign), &xr.len);
            }
        }
    }
    Ok(out)
}

/// `x ∔ y` recomputed from the bracket `{x_L, x ∔ y_L | x ∔ y_R, x_R}` with
/// all prefix options. Finite lengths only.
pub fn concat_add_cut_eq(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    let (xl, xr) = x.prefix_options()?;
    let (yl, yr) = y.prefix_options()?;
    let mut lower = xl;
    lower.extend(yl.iter().map(|v| concat_add(x, v)));
    let mut upper: Vec<Surreal> = yr.iter().map(|v| concat_add(x, v)).collect();
    upper.extend(xr);
    simplest_in_cut(&Cut::singles(&lower, &upper))
}

/// `x ⨰ y` recomputed from the bracket
/// `{x⨰y_L ∔ x_L, x⨰y_R ∔ (−x_R) | x⨰y_L ∔ x_R, x⨰y_R ∔ (−x_L)}`.
/// Needs `x > 0` and finite lengths.
pub fn concat_mul_cut_eq(x: &Surreal, y: &Surreal) -> Result<Surreal> {
    if x.first_sign() != Some(Sign::Plus) {
        return Err(Error::NotPositive);
    }
    let (xl, xr) = x.prefix_options()?;
    let (yl, yr) = y.prefix_options()?;
    let (mut lower, mut upper) = (Vec::new(), Vec::new());
    for v in &yl {
        let base = concat_mul(x, v)?;
        lower.extend(xl.iter().map(|a| concat_add(&base, a)));
        upper.extend(xr.iter().map(|a| concat_add(&base, a)));
    }
    for v in &yr {
        let base = concat_mul(x, v)?;
        lower.extend(xr.iter().map(|a| concat_add(&base, &a.neg())));
        upper.extend(xl.iter().map(|a| concat_add(&base, &a.neg())));
    }
    simplest_in_cut(&Cut::singles(&lower, &upper))
}
