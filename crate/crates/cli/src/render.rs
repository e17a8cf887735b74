use std::fmt;
use std::str::FromStr;

use surreal_core::{Dyadic, Tri};

use crate::error::CliError;
use crate::eval::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Mode {
    /// Dyadic value when the length is finite, sign string otherwise.
    #[default]
    Auto,
    Signs,
    Value,
    /// Cantor normal form; ordinals only.
    Cnf,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Mode::Auto),
            "signs" => Ok(Mode::Signs),
            "value" => Ok(Mode::Value),
            "cnf" => Ok(Mode::Cnf),
            _ => Err(format!("unknown render mode `{s}`")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Auto => "auto",
            Mode::Signs => "signs",
            Mode::Value => "value",
            Mode::Cnf => "cnf",
        })
    }
}

pub fn render(v: &Value, mode: Mode) -> Result<String, CliError> {
    let x = match v {
        Value::Num(x) => x,
        Value::Bool(b) => return Ok(b.to_string()),
        Value::Tri(t) => {
            return Ok(match t {
                Tri::Yes => "yes",
                Tri::No => "no",
                Tri::Unknown => "unknown",
            }
            .to_string())
        }
        Value::Structure(s) => return Ok(s.to_string()),
        Value::Action(g) => return Ok(g.name()),
        Value::Chain(c) => return Ok(format!("chain({})", c.name())),
        Value::Empty => return Ok("_".to_string()),
    };
    let render_err = |e: surreal_core::Error| CliError::Render(format!("{x} in {mode} mode: {e}"));
    match mode {
        Mode::Signs => Ok(x.to_string()),
        Mode::Value => Dyadic::from_surreal(x).map(|d| d.to_string()).map_err(render_err),
        Mode::Cnf => x.to_ordinal().map(|o| o.to_string()).map_err(render_err),
        Mode::Auto if x.is_finite() => Dyadic::from_surreal(x).map(|d| d.to_string()).map_err(render_err),
        Mode::Auto => Ok(x.to_string()),
    }
}
