//! Evaluation of parsed expressions over the kernel registries.

use std::sync::Arc;

use surreal_core::bracket::{default_budget, simplest_in_cut};
use surreal_core::simplicity::{self, homotheties, join_actions, translations_d, translations_z, GroupAction};
use surreal_core::substructure::{self as sub, Structure, Tri};
use surreal_core::{chains, concat, field, Bound, Chain, Cut, Dyadic, Ordinal, Surreal};

use crate::error::CliError;
use crate::syntax::{BinOp, Expr, Kind};

#[derive(Clone)]
pub enum Value {
    Num(Surreal),
    Bool(bool),
    Tri(Tri),
    Structure(Structure),
    Action(Arc<dyn GroupAction>),
    Chain(Chain),
    /// `_`, an absent interval bound.
    Empty,
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Num(_) => "number",
            Value::Bool(_) | Value::Tri(_) => "truth value",
            Value::Structure(_) => "structure",
            Value::Action(_) => "group action",
            Value::Chain(_) => "chain",
            Value::Empty => "`_`",
        }
    }
}

pub struct Env {
    /// Length budget for brackets and simple-element parameterizations.
    pub budget: Ordinal,
}

impl Default for Env {
    fn default() -> Self {
        Env { budget: default_budget() }
    }
}

const STRUCTURES: [&str; 9] = ["shift", "scale", "interval", "final", "fix", "nosuccpow", "tail", "imb", "smp"];

impl Env {
    pub fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        let m = |r: surreal_core::Result<Surreal>| r.map(Value::Num).map_err(|err| CliError::math(e.pos, err));
        match &e.kind {
            Kind::Dyadic(d) => Ok(Value::Num(d.to_surreal())),
            Kind::Ordinal(o) => Ok(Value::Num(Surreal::from_ordinal(o))),
            Kind::Signs(x) => Ok(Value::Num(x.clone())),
            Kind::Empty => Ok(Value::Empty),
            Kind::Name(n) => self.name(e.pos, n),
            Kind::Neg(inner) => match self.eval(inner)? {
                Value::Num(x) => Ok(Value::Num(x.neg())),
                Value::Chain(c) => Ok(Value::Chain(c.neg())),
                Value::Structure(s) => Ok(Value::Structure(sub::make_negate(&s))),
                v => Err(CliError::ty(inner.pos, format!("cannot negate a {}", v.kind()))),
            },
            Kind::Bin(op, a, b) => {
                let (x, y) = (self.num(a)?, self.num(b)?);
                m(match op {
                    BinOp::Add => field::add(&x, &y),
                    BinOp::Sub => field::sub(&x, &y),
                    BinOp::Mul => field::mul(&x, &y),
                })
            }
            Kind::Bracket(l, r) => {
                let lower = l.iter().map(|b| self.bound(b)).collect::<Result<_, _>>()?;
                let upper = r.iter().map(|b| self.bound(b)).collect::<Result<_, _>>()?;
                m(simplest_in_cut(&Cut::new(lower, upper).with_budget(self.budget.clone())))
            }
            Kind::Call(f, args) => self.call(e, f, args),
        }
    }

    fn name(&self, pos: usize, n: &str) -> Result<Value, CliError> {
        match n {
            "No" => Ok(Value::Structure(sub::no())),
            "inc" => Ok(Value::Structure(sub::make_inc())),
            "homotheties" => Ok(Value::Action(homotheties())),
            _ => chains::named(n).map(Value::Chain).ok_or_else(|| CliError::ty(pos, format!("unknown name `{n}`"))),
        }
    }

    fn num(&self, e: &Expr) -> Result<Surreal, CliError> {
        match self.eval(e)? {
            Value::Num(x) => Ok(x),
            v => Err(CliError::ty(e.pos, format!("expected a number, found a {}", v.kind()))),
        }
    }

    fn structure(&self, e: &Expr) -> Result<Structure, CliError> {
        match self.eval(e)? {
            Value::Structure(s) => Ok(s),
            v => Err(CliError::ty(e.pos, format!("expected a structure, found a {}", v.kind()))),
        }
    }

    fn action(&self, e: &Expr) -> Result<Arc<dyn GroupAction>, CliError> {
        match self.eval(e)? {
            Value::Action(g) => Ok(g),
            v => Err(CliError::ty(e.pos, format!("expected a group action, found a {}", v.kind()))),
        }
    }

    fn ordinal(&self, e: &Expr) -> Result<Ordinal, CliError> {
        self.num(e)?.to_ordinal().map_err(|err| CliError::math(e.pos, err))
    }

    fn bound(&self, e: &Expr) -> Result<Bound, CliError> {
        match self.eval(e)? {
            Value::Num(x) => Ok(Bound::Single(x)),
            Value::Chain(c) => Ok(Bound::Chain(c)),
            v => Err(CliError::ty(e.pos, format!("a {} cannot bound a cut", v.kind()))),
        }
    }

    /// An interval side: `_` for none, otherwise one bound.
    fn side(&self, e: &Expr) -> Result<Vec<Bound>, CliError> {
        match e.kind {
            Kind::Empty => Ok(Vec::new()),
            _ => Ok(vec![self.bound(e)?]),
        }
    }

    fn call(&self, e: &Expr, f: &str, args: &[Expr]) -> Result<Value, CliError> {
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(CliError::ty(e.pos, format!("`{f}` takes {n} argument(s), got {}", args.len())))
            }
        };
        let math = |err| CliError::math(e.pos, err);
        let num = |r: surreal_core::Result<Surreal>| r.map(Value::Num).map_err(math);
        let st = |r: surreal_core::Result<Structure>| r.map(Value::Structure).map_err(math);
        match f {
            "cadd" | "cmul" | "add" | "mul" | "sub" => {
                arity(2)?;
                let (x, y) = (self.num(&args[0])?, self.num(&args[1])?);
                num(match f {
                    "cadd" => Ok(concat::concat_add(&x, &y)),
                    "cmul" => concat::concat_mul(&x, &y),
                    "add" => field::add(&x, &y),
                    "sub" => field::sub(&x, &y),
                    _ => field::mul(&x, &y),
                })
            }
            "neg" => {
                arity(1)?;
                self.eval(&Expr { pos: e.pos, kind: Kind::Neg(Box::new(args[0].clone())) })
            }
            "len" => {
                arity(1)?;
                Ok(Value::Num(Surreal::from_ordinal(&self.num(&args[0])?.len())))
            }
            "xi" => {
                arity(2)?;
                let s = self.structure(&args[0])?;
                match self.eval(&args[1])? {
                    Value::Num(x) => num(match &s {
                        Structure::Smp(g) => simplicity::smp_xi_within(g.as_ref(), &x, &self.budget),
                        _ => s.xi(&x),
                    }),
                    Value::Chain(c) => self.image_chain(e.pos, s, c),
                    v => Err(CliError::ty(args[1].pos, format!("cannot apply a structure to a {}", v.kind()))),
                }
            }
            "xi_inv" => {
                arity(2)?;
                num(self.structure(&args[0])?.xi_inv(&self.num(&args[1])?))
            }
            "member" => {
                arity(2)?;
                Ok(Value::Tri(self.structure(&args[0])?.member(&self.num(&args[1])?)))
            }
            "fixed?" => {
                arity(2)?;
                sub::is_fixed(&self.structure(&args[0])?, &self.num(&args[1])?).map(Value::Bool).map_err(math)
            }
            "left_factor?" => {
                arity(2)?;
                Ok(Value::Tri(sub::is_left_factor(&self.structure(&args[0])?, &self.structure(&args[1])?)))
            }
            "simple?" => {
                arity(2)?;
                simplicity::is_simple(self.action(&args[0])?.as_ref(), &self.num(&args[1])?)
                    .map(Value::Bool)
                    .map_err(math)
            }
            "project" => {
                arity(2)?;
                num(simplicity::project_simple(self.action(&args[0])?.as_ref(), &self.num(&args[1])?))
            }
            "chain" => {
                arity(1)?;
                match self.eval(&args[0])? {
                    c @ Value::Chain(_) => Ok(c),
                    v => Err(CliError::ty(args[0].pos, format!("expected a chain, found a {}", v.kind()))),
                }
            }
            "translations" => {
                arity(1)?;
                match &args[0].kind {
                    Kind::Name(g) if g == "Z" => Ok(Value::Action(translations_z())),
                    Kind::Name(g) if g == "D" => Ok(Value::Action(translations_d())),
                    _ => Err(CliError::ty(args[0].pos, "translations take `Z` or `D`")),
                }
            }
            "homotheties" => {
                arity(1)?;
                match &args[0].kind {
                    Kind::Name(g) if g == "ord" => Ok(Value::Action(homotheties())),
                    _ => Err(CliError::ty(args[0].pos, "homotheties act on `ord`")),
                }
            }
            "join" => {
                let parts = args.iter().map(|a| self.action(a)).collect::<Result<Vec<_>, _>>()?;
                join_actions(&parts).map(Value::Action).map_err(math)
            }
            _ if STRUCTURES.contains(&f) => self.structure_call(e, f, args, arity, st),
            _ => Err(CliError::ty(e.pos, format!("unknown function `{f}`"))),
        }
    }

    fn structure_call(
        &self,
        e: &Expr,
        f: &str,
        args: &[Expr],
        arity: impl Fn(usize) -> Result<(), CliError>,
        st: impl Fn(surreal_core::Result<Structure>) -> Result<Value, CliError>,
    ) -> Result<Value, CliError> {
        let math = |err| CliError::math(e.pos, err);
        match f {
            "shift" | "final" => {
                arity(1)?;
                let a = self.num(&args[0])?;
                st(Ok(if f == "shift" { sub::make_shift(&a) } else { sub::make_final(&a) }))
            }
            "scale" => {
                arity(1)?;
                st(sub::make_scale(&self.num(&args[0])?))
            }
            "interval" => {
                arity(3)?;
                let s = self.structure(&args[0])?;
                st(sub::make_cut_interval(&s, self.side(&args[1])?, self.side(&args[2])?))
            }
            "fix" => {
                arity(1)?;
                st(sub::make_fix(&self.structure(&args[0])?))
            }
            "nosuccpow" => {
                arity(1)?;
                st(sub::nosucc_pow(&self.ordinal(&args[0])?))
            }
            "tail" => {
                arity(1)?;
                let r = Dyadic::from_surreal(&self.num(&args[0])?).map_err(math)?;
                st(sub::make_dyadic_tail(&r))
            }
            "imb" => {
                arity(2)?;
                st(Ok(sub::imbricate(&self.structure(&args[0])?, &self.structure(&args[1])?)))
            }
            "smp" => {
                arity(1)?;
                st(Ok(simplicity::smp_structure(self.action(&args[0])?)))
            }
            _ => Err(CliError::ty(e.pos, format!("`{f}` is not a function"))),
        }
    }

    /// The chain `Ξ_S c_n`. Its limit is `Ξ_S` of the limit of `c`, which
    /// holds for structures closed under suprema.
    fn image_chain(&self, pos: usize, s: Structure, c: Chain) -> Result<Value, CliError> {
        let hint = match c.hint() {
            Some(h) => Some(s.xi(h).map_err(|err| CliError::math(pos, err))?),
            None => None,
        };
        for n in 0..surreal_core::bracket::DEFAULT_SAMPLES {
            s.xi(&c.at(n)).map_err(|err| CliError::math(pos, err))?;
        }
        let name = format!("xi({s}, {})", c.name());
        let f = s.clone();
        // Ξ_S is increasing, so the direction is kept. Elements past the
        // checked prefix that fail to map fall back to the limit's image,
        // which the engine then rejects as out of order.
        let fallback = hint.clone().unwrap_or_else(Surreal::zero);
        Ok(Value::Chain(c.map(name, false, hint, move |x| f.xi(x).unwrap_or_else(|_| fallback.clone()))))
    }
}
