//! Ordinals below ε₀ in Cantor normal form.
//!
//! An ordinal is a finite list of `(exponent, coefficient)` terms with
//! strictly decreasing exponents and positive coefficients. The empty list
//! is zero. Every constructor normalizes, so structural equality is ordinal
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default limit on the exponent tower height accepted by [`Ordinal::omega_pow`].
pub const DEFAULT_DEPTH_BUDGET: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<(Ordinal, u64)>,
}

fn coef_add(a: u64, b: u64) -> u64 {
    a.checked_add(b).expect("ordinal coefficient overflow")
}

fn coef_mul(a: u64, b: u64) -> u64 {
    a.checked_mul(b).expect("ordinal coefficient overflow")
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Ordinal::from(1)
    }

    pub fn omega() -> Self {
        Ordinal { terms: vec![(Ordinal::one(), 1)] }
    }

    /// Builds an ordinal from arbitrary terms, summing them left to right
    /// with Cantor addition. Zero coefficients are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Ordinal, u64)>>(terms: I) -> Self {
        terms
            .into_iter()
            .filter(|(_, c)| *c > 0)
            .fold(Ordinal::zero(), |acc, (e, c)| acc.cantor_add(&Ordinal { terms: vec![(e, c)] }))
    }

    pub fn terms(&self) -> &[(Ordinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_zero())
    }

    pub fn as_u64(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    /// True iff this is a nonzero ordinal without a last element.
    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| !e.is_zero())
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|(e, _)| e.is_zero())
    }

    /// Writes `self = limit_part ∔ n` with `n` finite.
    pub fn split_finite(&self) -> (Ordinal, u64) {
        match self.terms.last() {
            Some((e, c)) if e.is_zero() => (Ordinal { terms: self.terms[..self.terms.len() - 1].to_vec() }, *c),
            _ => (self.clone(), 0),
        }
    }

    /// The predecessor of a successor ordinal.
    pub fn pred(&self) -> Option<Ordinal> {
        let (lim, n) = self.split_finite();
        (n > 0).then(|| lim.cantor_add(&Ordinal::from(n - 1)))
    }

    pub fn succ(&self) -> Ordinal {
        self.cantor_add(&Ordinal::one())
    }

    /// Height of the exponent tower: 0 for zero, 1 for positive integers,
    /// 2 for ω, 3 for ω^ω, and so on.
    pub fn depth(&self) -> usize {
        self.terms.iter().map(|(e, _)| 1 + e.depth()).max().unwrap_or(0)
    }

    pub fn cantor_add(&self, b: &Ordinal) -> Ordinal {
        let Some((e0, c0)) = b.terms.first() else {
            return self.clone();
        };
        let mut out: Vec<(Ordinal, u64)> = self.terms.iter().take_while(|(e, _)| e > e0).cloned().collect();
        let absorbed = self.terms.iter().find(|(e, _)| e == e0).map_or(0, |t| t.1);
        out.push((e0.clone(), coef_add(*c0, absorbed)));
        out.extend(b.terms[1..].iter().cloned());
        Ordinal { terms: out }
    }

    pub fn cantor_mul(&self, b: &Ordinal) -> Ordinal {
        if self.is_zero() || b.is_zero() {
            return Ordinal::zero();
        }
        let (e1, c1) = &self.terms[0];
        let mut out = Vec::with_capacity(b.terms.len() + self.terms.len());
        for (f, d) in &b.terms {
            if f.is_zero() {
                out.push((e1.clone(), coef_mul(*c1, *d)));
                out.extend(self.terms[1..].iter().cloned());
            } else {
                out.push((e1.cantor_add(f), *d));
            }
        }
        Ordinal { terms: out }
    }

    /// `ω^self`, rejected when the resulting tower exceeds `depth_budget`.
    pub fn omega_pow(&self, depth_budget: usize) -> Result<Ordinal> {
        let out = Ordinal { terms: vec![(self.clone(), 1)] };
        if out.depth() > depth_budget {
            return Err(Error::BudgetExceeded(format!("ω^({self}) has tower depth {} > {depth_budget}", out.depth())));
        }
        Ok(out)
    }

    /// Cantor power `self^ω`, the supremum of the finite powers.
    pub fn pow_omega(&self) -> Ordinal {
        match self.as_u64() {
            Some(0) => Ordinal::zero(),
            Some(1) => Ordinal::one(),
            Some(_) => Ordinal::omega(),
            None => {
                let e1 = &self.terms[0].0;
                Ordinal { terms: vec![(e1.cantor_mul(&Ordinal::omega()), 1)] }
            }
        }
    }

    pub fn hessenberg_add(&self, b: &Ordinal) -> Ordinal {
        let mut out: Vec<(Ordinal, u64)> = Vec::with_capacity(self.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < b.terms.len() {
            let ord = match (self.terms.get(i), b.terms.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.terms[i].0.clone(), coef_add(self.terms[i].1, b.terms[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Ordinal { terms: out }
    }

    pub fn hessenberg_mul(&self, b: &Ordinal) -> Ordinal {
        let mut acc = Ordinal::zero();
        for (e, c) in &self.terms {
            for (f, d) in &b.terms {
                let t = Ordinal { terms: vec![(e.hessenberg_add(f), coef_mul(*c, *d))] };
                acc = acc.hessenberg_add(&t);
            }
        }
        acc
    }

    /// The unique `δ` with `self ∔ δ = b`, when `self ≤ b`.
    pub fn left_sub(&self, b: &Ordinal) -> Option<Ordinal> {
        let (a, bt) = (&self.terms, &b.terms);
        let mut i = 0;
        while i < a.len() && i < bt.len() && a[i] == bt[i] {
            i += 1;
        }
        if i == a.len() {
            return Some(Ordinal { terms: bt[i..].to_vec() });
        }
        if i == bt.len() {
            return None;
        }
        let ((e, c), (f, d)) = (&a[i], &bt[i]);
        match f.cmp(e) {
            Ordering::Greater => Some(Ordinal { terms: bt[i..].to_vec() }),
            Ordering::Equal if d > c => {
                let mut out = vec![(f.clone(), d - c)];
                out.extend(bt[i + 1..].iter().cloned());
                Some(Ordinal { terms: out })
            }
            _ => None,
        }
    }

    /// Left division with remainder: returns `(q, r)` with
    /// `m = self ⨰ q ∔ r` and `r < self`. Requires `self > 0`.
    pub fn left_div_rem(&self, m: &Ordinal) -> (Ordinal, Ordinal) {
        assert!(!self.is_zero(), "left division by zero");
        let (e1, c1) = &self.terms[0];
        let mut q = Vec::new();
        let mut idx = 0;
        while idx < m.terms.len() && &m.terms[idx].0 > e1 {
            let g = e1.left_sub(&m.terms[idx].0).expect("exponent above divisor exponent");
            q.push((g, m.terms[idx].1));
            idx += 1;
        }
        let rest = Ordinal { terms: m.terms[idx..].to_vec() };
        let mut n = match rest.terms.first() {
            Some((e, d)) if e == e1 => d / c1,
            _ => 0,
        };
        while n > 0 && self.cantor_mul(&Ordinal::from(n)) > rest {
            n -= 1;
        }
        let r = if n == 0 {
            rest
        } else {
            self.cantor_mul(&Ordinal::from(n)).left_sub(&rest).expect("product below dividend")
        };
        if n > 0 {
            q.push((Ordinal::zero(), n));
        }
        (Ordinal { terms: q }, r)
    }

    /// Exact left quotient: the `q` with `self ⨰ q = m`, if any.
    pub fn left_div_exact(&self, m: &Ordinal) -> Option<Ordinal> {
        if self.is_zero() {
            return m.is_zero().then(Ordinal::zero);
        }
        let (q, r) = self.left_div_rem(m);
        r.is_zero().then_some(q)
    }

    /// The `n`-th element of the standard fundamental sequence of a limit
    /// ordinal. Strictly increasing in `n` and cofinal in `self`.
    pub fn fundamental(&self, n: u64) -> Option<Ordinal> {
        if !self.is_limit() {
            return None;
        }
        let (e, c) = self.terms.last().unwrap();
        let mut head = self.terms[..self.terms.len() - 1].to_vec();
        if *c > 1 {
            head.push((e.clone(), c - 1));
        }
        let head = Ordinal { terms: head };
        let step = match e.pred() {
            Some(p) => Ordinal::from_terms([(p, n)]),
            None => Ordinal { terms: vec![(e.fundamental(n)?, 1)] },
        };
        Some(head.cantor_add(&step))
    }

    /// Supremum of a finite set.
    pub fn sup_finite<'a, I: IntoIterator<Item = &'a Ordinal>>(set: I) -> Ordinal {
        set.into_iter().max().cloned().unwrap_or_default()
    }

    /// Supremum of a strictly increasing ω-sequence, given a closed-form
    /// hint. The hint must bound the first `k` elements, be a limit, and be
    /// approached: the `k`-th element must exceed every ordinal obtained by
    /// removing one copy of the hint's last term.
    pub fn sup_chain(gen: &dyn Fn(u64) -> Ordinal, hint: Option<&Ordinal>, k: u64) -> Result<Ordinal> {
        let hint = hint.ok_or_else(|| Error::MissingHint("ordinal chain".into()))?;
        if !hint.is_limit() {
            return Err(Error::InvalidHint(format!("{hint} is not a limit")));
        }
        let mut prev: Option<Ordinal> = None;
        for i in 0..=k {
            let v = gen(i);
            if prev.as_ref().is_some_and(|p| p >= &v) {
                return Err(Error::NotAChain(format!("element {i} does not increase")));
            }
            if &v >= hint {
                return Err(Error::InvalidHint(format!("element {i} = {v} reaches {hint}")));
            }
            prev = Some(v);
        }
        let (e, c) = hint.terms.last().unwrap();
        let mut head = hint.terms[..hint.terms.len() - 1].to_vec();
        if *c > 1 {
            head.push((e.clone(), c - 1));
        }
        let head = Ordinal { terms: head };
        if prev.unwrap() <= head {
            return Err(Error::InvalidHint(format!("{hint} is not approached by the chain")));
        }
        Ok(hint.clone())
    }

    /// Parses the longest ordinal literal at the start of `s`, returning the
    /// value and the number of bytes consumed.
    pub fn parse_prefix(s: &str) -> Result<(Ordinal, usize)> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let v = p.sum()?;
        Ok((v, p.pos))
    }

    fn fmt_exponent(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() || *self == Ordinal::omega() {
            write!(f, "{self}")
        } else {
            write!(f, "({self})")
        }
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal { terms: vec![(Ordinal::zero(), n)] }
        }
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.0.cmp(&b.0).then(a.1.cmp(&b.1)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            write!(f, "w")?;
            if *e != Ordinal::one() {
                write!(f, "^")?;
                e.fmt_exponent(f)?;
            }
            if *c > 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (v, used) = Ordinal::parse_prefix(s)?;
        if s[used..].trim().is_empty() {
            Ok(v)
        } else {
            Err(Error::parse(used, format!("unexpected `{}`", &s[used..])))
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn nat(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "number too large"))
    }

    fn sum(&mut self) -> Result<Ordinal> {
        let mut acc = self.term()?;
        // Only continue past `+` when another ordinal term follows.
        while self.peek() == Some(b'+') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit() || *c == b'w') {
            self.pos += 1;
            acc = acc.cantor_add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from(self.nat()?)),
            Some(b'w') => {
                self.pos += 1;
                let mut exp = Ordinal::one();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    exp = match self.peek() {
                        Some(b'(') => {
                            self.pos += 1;
                            let e = self.sum()?;
                            if self.peek() != Some(b')') {
                                return Err(Error::parse(self.pos, "expected `)`"));
                            }
                            self.pos += 1;
                            e
                        }
                        Some(b'w') => {
                            self.pos += 1;
                            Ordinal::omega()
                        }
                        _ => Ordinal::from(self.nat()?),
                    };
                }
                let mut coef = 1;
                if self.peek() == Some(b'*') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                    coef = self.nat()?;
                }
                Ok(Ordinal::from_terms([(exp, coef)]))
            }
            _ => Err(Error::parse(self.pos, "expected an ordinal")),
        }
    }
}
