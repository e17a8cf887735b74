//! Dyadic rationals and their sign expansions.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::surreal::{Sign, Surreal};

/// `num / 2^exp`, always reduced: `num` is odd or `exp` is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<BigInt>, exp: u32) -> Self {
        let mut num = num.into();
        let mut exp = exp;
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(u64::from(exp)) as u32;
        num >>= tz;
        exp -= tz;
        Dyadic { num, exp }
    }

    pub fn integer(n: i64) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    fn scaled(&self, exp: u32) -> BigInt {
        &self.num << (exp - self.exp)
    }

    /// Sign expansion: the leading run reaches the first integer past the
    /// value, then each sign halves the step.
    pub fn to_surreal(&self) -> Surreal {
        if self.num.is_negative() {
            return (-self.clone()).to_surreal().neg();
        }
        if self.is_integer() {
            let n = u64::try_from(&self.num).expect("integer part too large");
            return Surreal::from_runs([(Sign::Plus, Ordinal::from(n))]);
        }
        let floor = &self.num >> self.exp;
        let head = u64::try_from(&floor).expect("integer part too large") + 1;
        let mut out = Surreal::from_runs([(Sign::Plus, Ordinal::from(head))]);
        let mut cur = Dyadic::new(BigInt::from(head), 0);
        let mut step = Dyadic::new(1, 1);
        while cur != *self {
            if cur > *self {
                out.push(Sign::Minus, &Ordinal::one());
                cur = &cur - &step;
            } else {
                out.push(Sign::Plus, &Ordinal::one());
                cur = &cur + &step;
            }
            step = Dyadic::new(1, step.exp + 1);
        }
        out
    }

    pub fn from_surreal(x: &Surreal) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::NotDyadic(x.to_string()));
        }
        let runs = x.runs();
        let Some(first) = runs.first() else {
            return Ok(Dyadic::default());
        };
        let n = first.len.as_u64().unwrap();
        let mut val = Dyadic::new(BigInt::from(n) * i64::from(first.sign.value()), 0);
        let mut e = 1;
        for r in &runs[1..] {
            for _ in 0..r.len.as_u64().unwrap() {
                let step = Dyadic::new(i64::from(r.sign.value()), e);
                val = &val + &step;
                e += 1;
            }
        }
        Ok(val)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        self.scaled(e).cmp(&other.scaled(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        Dyadic::new(self.scaled(e) + rhs.scaled(e), e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs.clone())
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.num * &rhs.num, self.exp + rhs.exp)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { num: -self.num, exp: self.exp }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    /// `n` or `n/d` with `d` a power of two.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotDyadic(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: BigInt = n.parse().map_err(|_| bad())?;
        let den: BigInt = d.parse().map_err(|_| bad())?;
        if !den.is_positive() || (&den & (&den - 1u8)) != BigInt::zero() {
            return Err(bad());
        }
        let exp = den.trailing_zeros().unwrap_or(0) as u32;
        Ok(Dyadic::new(num, exp))
    }
}
