//! Surreal numbers as run-length-encoded sign sequences.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    /// Product of signs.
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// A maximal block of equal signs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Run {
    pub sign: Sign,
    pub len: Ordinal,
}

/// A surreal number. Runs alternate in sign and have nonzero length; the
/// empty run list is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Surreal {
    runs: Vec<Run>,
}

impl Surreal {
    pub fn zero() -> Self {
        Surreal { runs: Vec::new() }
    }

    pub fn one() -> Self {
        Surreal::from_runs([(Sign::Plus, Ordinal::one())])
    }

    pub fn omega() -> Self {
        Surreal::from_runs([(Sign::Plus, Ordinal::omega())])
    }

    pub fn from_runs<I: IntoIterator<Item = (Sign, Ordinal)>>(runs: I) -> Self {
        let mut out: Vec<Run> = Vec::new();
        for (sign, len) in runs {
            push_run(&mut out, sign, &len);
        }
        Surreal { runs: out }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        Surreal::from_runs(signs.iter().map(|s| (*s, Ordinal::one())))
    }

    pub fn from_i64(n: i64) -> Self {
        let sign = if n < 0 { Sign::Minus } else { Sign::Plus };
        Surreal::from_runs([(sign, Ordinal::from(n.unsigned_abs()))])
    }

    pub fn from_ordinal(a: &Ordinal) -> Self {
        Surreal::from_runs([(Sign::Plus, a.clone())])
    }

    /// The ordinal this number equals, if it is one.
    pub fn to_ordinal(&self) -> Result<Ordinal> {
        match self.runs.as_slice() {
            [] => Ok(Ordinal::zero()),
            [Run { sign: Sign::Plus, len }] => Ok(len.clone()),
            _ => Err(Error::NotOrdinal(self.to_string())),
        }
    }

    pub fn is_ordinal(&self) -> bool {
        self.to_ordinal().is_ok()
    }

    pub fn runs(&self) -> &[Run] {
        &self.runs
    }

    pub fn is_zero(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn first_sign(&self) -> Option<Sign> {
        self.runs.first().map(|r| r.sign)
    }

    pub fn last_sign(&self) -> Option<Sign> {
        self.runs.last().map(|r| r.sign)
    }

    pub fn len(&self) -> Ordinal {
        self.runs.iter().fold(Ordinal::zero(), |acc, r| acc.cantor_add(&r.len))
    }

    pub fn is_finite(&self) -> bool {
        self.runs.iter().all(|r| r.len.is_finite())
    }

    /// Length as a machine integer, when finite.
    pub fn finite_len(&self) -> Option<u64> {
        self.runs.iter().map(|r| r.len.as_u64()).sum()
    }

    pub fn is_limit(&self) -> bool {
        self.len().is_limit()
    }

    /// The sign at position `a`, zero past the end.
    pub fn sign_at(&self, a: &Ordinal) -> i8 {
        let mut off = Ordinal::zero();
        for r in &self.runs {
            let end = off.cantor_add(&r.len);
            if a < &end {
                return r.sign.value();
            }
            off = end;
        }
        0
    }

    pub fn neg(&self) -> Surreal {
        Surreal { runs: self.runs.iter().map(|r| Run { sign: r.sign.flip(), len: r.len.clone() }).collect() }
    }

    /// `x ⊑ y`: this sign sequence is an initial segment of `y`'s.
    pub fn is_simpler(&self, y: &Surreal) -> bool {
        let n = self.runs.len();
        if n == 0 {
            return true;
        }
        if n > y.runs.len() || self.runs[..n - 1] != y.runs[..n - 1] {
            return false;
        }
        let (a, b) = (&self.runs[n - 1], &y.runs[n - 1]);
        a.sign == b.sign && a.len <= b.len
    }

    pub fn is_strictly_simpler(&self, y: &Surreal) -> bool {
        self != y && self.is_simpler(y)
    }

    /// The restriction `x↾a`.
    pub fn restrict(&self, a: &Ordinal) -> Surreal {
        let mut out = Vec::new();
        let mut off = Ordinal::zero();
        for r in &self.runs {
            if &off >= a {
                break;
            }
            let end = off.cantor_add(&r.len);
            if &end <= a {
                out.push(r.clone());
            } else {
                let part = off.left_sub(a).expect("offset below bound");
                out.push(Run { sign: r.sign, len: part });
            }
            off = end;
        }
        Surreal { runs: out }
    }

    pub fn common_prefix(&self, y: &Surreal) -> Surreal {
        let mut out = Vec::new();
        for (a, b) in self.runs.iter().zip(&y.runs) {
            if a == b {
                out.push(a.clone());
                continue;
            }
            if a.sign == b.sign {
                out.push(Run { sign: a.sign, len: a.len.clone().min(b.len.clone()) });
            }
            break;
        }
        Surreal { runs: out }
    }

    /// The `d` with `p ∔ d = self`, when `p ⊑ self`.
    pub fn drop_prefix(&self, p: &Surreal) -> Option<Surreal> {
        if !p.is_simpler(self) {
            return None;
        }
        let n = p.runs.len();
        if n == 0 {
            return Some(self.clone());
        }
        let mut out = Vec::new();
        let rem = p.runs[n - 1].len.left_sub(&self.runs[n - 1].len).unwrap();
        push_run(&mut out, self.runs[n - 1].sign, &rem);
        out.extend(self.runs[n..].iter().cloned());
        Some(Surreal { runs: out })
    }

    pub fn push(&mut self, sign: Sign, len: &Ordinal) {
        push_run(&mut self.runs, sign, len);
    }

    pub fn with(&self, sign: Sign, len: &Ordinal) -> Surreal {
        let mut out = self.clone();
        out.push(sign, len);
        out
    }

    pub fn with_sign(&self, sign: Sign) -> Surreal {
        self.with(sign, &Ordinal::one())
    }

    /// All strict prefixes, split by side: those below `self` and those
    /// above. Only for finite lengths.
    pub fn prefix_options(&self) -> Result<(Vec<Surreal>, Vec<Surreal>)> {
        let n = self.finite_len().ok_or(Error::NotFiniteLength)?;
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for i in 0..n {
            let p = self.restrict(&Ordinal::from(i));
            if self.sign_at(&Ordinal::from(i)) > 0 {
                left.push(p);
            } else {
                right.push(p);
            }
        }
        Ok((left, right))
    }

    /// For finite `self`: the longest prefix below and the longest prefix
    /// above.
    pub fn reduced_finite_options(&self) -> Result<(Option<Surreal>, Option<Surreal>)> {
        if !self.is_finite() {
            return Err(Error::NotFiniteLength);
        }
        Ok((self.last_side_prefix(Sign::Plus), self.last_side_prefix(Sign::Minus)))
    }

    fn last_side_prefix(&self, sign: Sign) -> Option<Surreal> {
        let i = self.runs.iter().rposition(|r| r.sign == sign)?;
        let mut out = Surreal { runs: self.runs[..i].to_vec() };
        let pred = self.runs[i].len.pred()?;
        out.push(sign, &pred);
        Some(out)
    }

    /// Prefix up to the end of the last run of `sign`, with its start
    /// offset and length.
    pub(crate) fn last_run_of(&self, sign: Sign) -> Option<(Surreal, Ordinal, Ordinal)> {
        let i = self.runs.iter().rposition(|r| r.sign == sign)?;
        let head = Surreal { runs: self.runs[..i].to_vec() };
        let off = head.len();
        Some((Surreal { runs: self.runs[..=i].to_vec() }, off, self.runs[i].len.clone()))
    }
}

pub(crate) fn push_run(runs: &mut Vec<Run>, sign: Sign, len: &Ordinal) {
    if len.is_zero() {
        return;
    }
    match runs.last_mut() {
        Some(last) if last.sign == sign => last.len = last.len.cantor_add(len),
        _ => runs.push(Run { sign, len: len.clone() }),
    }
}

/// One step of a padded sign sequence walk.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Piece<'a> {
    Finite(Sign, &'a Ordinal),
    Forever(Sign),
    Zero,
}

struct Cursor<'a> {
    runs: &'a [Run],
    idx: usize,
    rem: Option<Ordinal>,
    pad: Option<Sign>,
}

impl<'a> Cursor<'a> {
    fn new(runs: &'a [Run], pad: Option<Sign>) -> Self {
        Cursor { runs, idx: 0, rem: None, pad }
    }

    fn peek(&self) -> Piece<'_> {
        match self.runs.get(self.idx) {
            Some(r) => Piece::Finite(r.sign, self.rem.as_ref().unwrap_or(&r.len)),
            None => self.pad.map_or(Piece::Zero, Piece::Forever),
        }
    }

    fn next_run(&mut self) {
        self.idx += 1;
        self.rem = None;
    }

    fn consume(&mut self, amount: &Ordinal) {
        let cur = self.rem.clone().unwrap_or_else(|| self.runs[self.idx].len.clone());
        self.rem = Some(amount.left_sub(&cur).expect("consumed past run end"));
    }
}

fn piece_value(p: Piece<'_>) -> i8 {
    match p {
        Piece::Finite(s, _) | Piece::Forever(s) => s.value(),
        Piece::Zero => 0,
    }
}

/// Lexicographic comparison of two sign sequences, each padded after its
/// runs with either zeros (`None`) or an endless run of one sign.
pub(crate) fn cmp_padded(a: &[Run], pa: Option<Sign>, b: &[Run], pb: Option<Sign>) -> Ordering {
    let mut ca = Cursor::new(a, pa);
    let mut cb = Cursor::new(b, pb);
    loop {
        let (x, y) = (ca.peek(), cb.peek());
        let (vx, vy) = (piece_value(x), piece_value(y));
        if vx != vy {
            return vx.cmp(&vy);
        }
        match (x, y) {
            (Piece::Zero, Piece::Zero) | (Piece::Forever(_), Piece::Forever(_)) => return Ordering::Equal,
            (Piece::Finite(_, la), Piece::Finite(_, lb)) => match la.cmp(lb) {
                Ordering::Equal => {
                    ca.next_run();
                    cb.next_run();
                }
                Ordering::Less => {
                    let la = la.clone();
                    cb.consume(&la);
                    ca.next_run();
                }
                Ordering::Greater => {
                    let lb = lb.clone();
                    ca.consume(&lb);
                    cb.next_run();
                }
            },
            (Piece::Finite(..), Piece::Forever(_)) => ca.next_run(),
            (Piece::Forever(_), Piece::Finite(..)) => cb.next_run(),
            _ => unreachable!("zero pad never matches a sign"),
        }
    }
}

impl PartialOrd for Surreal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Surreal {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_padded(&self.runs, None, &other.runs, None)
    }
}

/// A gap in the number line: a sign sequence followed by an endless run
/// of `tail`. `s ∔ −^∞` sits just left of the subtree of `s`, `s ∔ +^∞`
/// just right of it. Points never equal numbers, so comparisons with
/// numbers are always strict.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    prefix: Surreal,
    tail: Sign,
}

impl Point {
    pub fn new(prefix: Surreal, tail: Sign) -> Self {
        let mut prefix = prefix;
        if prefix.last_sign() == Some(tail) {
            prefix.runs.pop();
        }
        Point { prefix, tail }
    }

    /// The bottom of the line.
    pub fn bottom() -> Self {
        Point::new(Surreal::zero(), Sign::Minus)
    }

    /// The top of the line.
    pub fn top() -> Self {
        Point::new(Surreal::zero(), Sign::Plus)
    }

    /// The gap just above `x`.
    pub fn above(x: &Surreal) -> Self {
        Point::new(x.with_sign(Sign::Plus), Sign::Minus)
    }

    /// The gap just below `x`.
    pub fn below(x: &Surreal) -> Self {
        Point::new(x.with_sign(Sign::Minus), Sign::Plus)
    }

    pub fn prefix(&self) -> &Surreal {
        &self.prefix
    }

    pub fn tail(&self) -> Sign {
        self.tail
    }

    pub fn neg(&self) -> Point {
        Point::new(self.prefix.neg(), self.tail.flip())
    }

    pub fn cmp_number(&self, x: &Surreal) -> Ordering {
        cmp_padded(&self.prefix.runs, Some(self.tail), &x.runs, None)
    }

    pub fn lt_number(&self, x: &Surreal) -> bool {
        self.cmp_number(x) == Ordering::Less
    }

    pub fn gt_number(&self, x: &Surreal) -> bool {
        self.cmp_number(x) == Ordering::Greater
    }

    /// If `x` is an initial segment of this point's sequence, the rest of
    /// the sequence as a point.
    pub fn strip(&self, x: &Surreal) -> Option<Point> {
        let pr = &self.prefix.runs;
        let xr = &x.runs;
        for (j, run) in xr.iter().enumerate() {
            let last = j + 1 == xr.len();
            match pr.get(j) {
                Some(p) => {
                    if p.sign != run.sign || (!last && p.len != run.len) || run.len > p.len {
                        return None;
                    }
                    if last {
                        let mut rest = Vec::new();
                        push_run(&mut rest, p.sign, &run.len.left_sub(&p.len).unwrap());
                        rest.extend(pr[j + 1..].iter().cloned());
                        return Some(Point { prefix: Surreal { runs: rest }, tail: self.tail });
                    }
                }
                None => {
                    let tail = self.tail;
                    return (run.sign == tail && last).then(|| Point { prefix: Surreal::zero(), tail });
                }
            }
        }
        Some(self.clone())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_padded(&self.prefix.runs, Some(self.tail), &other.prefix.runs, Some(other.tail))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_zero() {
            write!(f, "{} ", self.prefix)?;
        }
        write!(f, "{}^inf", self.tail.symbol())
    }
}

impl fmt::Display for Surreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "0");
        }
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", r.sign.symbol())?;
            if r.len != Ordinal::one() {
                if r.len.terms().len() > 1 {
                    write!(f, "^({})", r.len)?;
                } else {
                    write!(f, "^{}", r.len)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Surreal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for Surreal {
    type Err = Error;

    /// Sign-string syntax: runs such as `+^w -^3 +`, separated by spaces;
    /// `0` or the empty string is zero. Lengths with several terms are
    /// parenthesized, as in `+^(w+1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Surreal::zero());
        }
        let mut runs = Vec::new();
        let base = s.len() - s.trim_start().len();
        let mut pos = 0;
        let bytes = t.as_bytes();
        while pos < bytes.len() {
            let sign = match bytes[pos] {
                b'+' => Sign::Plus,
                b'-' => Sign::Minus,
                b' ' => {
                    pos += 1;
                    continue;
                }
                _ => return Err(Error::parse(base + pos, "expected `+` or `-`")),
            };
            pos += 1;
            let mut len = Ordinal::one();
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                if bytes.get(pos) == Some(&b'(') {
                    let mut depth = 0;
                    let mut end = None;
                    for (i, c) in t[pos..].char_indices() {
                        match c {
                            '(' => depth += 1,
                            ')' => {
                                depth -= 1;
                                if depth == 0 {
                                    end = Some(pos + i);
                                    break;
                                }
                            }
                            _ => {}
                        }
                    }
                    let end = end.ok_or_else(|| Error::parse(base + pos, "expected `)`"))?;
                    len = t[pos + 1..end].parse().map_err(|_| Error::parse(base + pos, "bad run length"))?;
                    pos = end + 1;
                } else {
                    let (o, used) =
                        Ordinal::parse_prefix(&t[pos..]).map_err(|_| Error::parse(base + pos, "bad run length"))?;
                    len = o;
                    pos += used;
                }
                if len.is_zero() {
                    return Err(Error::parse(base + pos, "run length must be positive"));
                }
            }
            runs.push((sign, len));
        }
        Ok(Surreal::from_runs(runs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Surreal {
        t.parse().unwrap()
    }

    fn o(t: &str) -> Ordinal {
        t.parse().unwrap()
    }

    #[test]
    fn signs_with_padding() {
        let half = s("+ -");
        assert_eq!(half.sign_at(&o("0")), 1);
        assert_eq!(half.sign_at(&o("1")), -1);
        assert_eq!(half.sign_at(&o("5")), 0);
    }

    #[test]
    fn lexicographic_order() {
        assert!(s("+ -") < s("+"));
        assert!(s("+^w -") < s("+^w"));
        assert_eq!(s("+^w -^w").cmp(&s("+^w -^w")), Ordering::Equal);
        assert!(s("-") < s("0"));
        assert!(s("+^w -^w") > s("+^5"));
        assert!(s("- +^w") > s("-^2"));
    }

    #[test]
    fn simplicity_and_restriction() {
        assert!(s("+").is_simpler(&s("+ -")));
        assert!(!s("-").is_simpler(&s("+ -")));
        assert_eq!(s("+^w -^w").restrict(&o("w")), s("+^w"));
        assert_eq!(s("+ -").common_prefix(&s("+^2")), s("+"));
        assert_eq!(s("+^w -^3").restrict(&o("w+2")), s("+^w -^2"));
        assert_eq!(s("+^w -^3").len(), o("w+3"));
        assert_eq!(s("+^w").drop_prefix(&s("+")), Some(s("+^w")));
    }

    #[test]
    fn normalization_merges() {
        let x = Surreal::from_runs([(Sign::Plus, o("1")), (Sign::Plus, o("w"))]);
        assert_eq!(x, s("+^w"));
        let y = Surreal::from_runs([(Sign::Plus, o("w")), (Sign::Plus, o("1"))]);
        assert_eq!(y.to_string(), "+^(w+1)");
    }

    #[test]
    fn sign_string_round_trip() {
        for t in ["0", "+^w -^3 +", "+ - + - +", "-^(w^2+1) +^w", "+^w^(w+1)*2"] {
            assert_eq!(s(t).to_string(), t);
        }
        assert!("+^0".parse::<Surreal>().is_err());
        assert!("x".parse::<Surreal>().is_err());
    }

    #[test]
    fn points_order_and_strip() {
        let gap = Point::new(s("+^w"), Sign::Minus);
        assert!(gap.gt_number(&s("+^7")));
        assert!(gap.lt_number(&s("+^w")));
        assert!(gap.lt_number(&s("+^w -")));
        assert!(Point::bottom() < gap && gap < Point::top());
        assert_eq!(Point::above(&s("+")), Point::new(s("+^2"), Sign::Minus));
        let rest = gap.strip(&s("+^3")).unwrap();
        assert_eq!(rest, Point::new(s("+^w"), Sign::Minus));
        assert!(gap.strip(&s("-")).is_none());
        let top = Point::top();
        assert_eq!(top.strip(&s("+^w")).unwrap(), Point::top());
    }

    #[test]
    fn reduced_finite_options() {
        let (l, r) = s("+ -").reduced_finite_options().unwrap();
        assert_eq!(l, Some(s("0")));
        assert_eq!(r, Some(s("+")));
        let (l, r) = s("0").reduced_finite_options().unwrap();
        assert!(l.is_none() && r.is_none());
        let (l, r) = s("+ - + +").reduced_finite_options().unwrap();
        assert_eq!((l.unwrap(), r.unwrap()), (s("+ - +"), s("+")));
    }
}
