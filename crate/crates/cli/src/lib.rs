//! Parser, evaluator and renderers behind the `surreal` command.

pub mod error;
pub mod eval;
pub mod render;
pub mod syntax;

pub use error::CliError;
pub use eval::{Env, Value};
pub use render::{render, Mode};
pub use syntax::{parse, Expr};

/// Parses, evaluates and renders one expression.
pub fn run_line(line: &str, env: &Env, mode: Mode) -> Result<String, CliError> {
    let e = parse(line)?;
    render(&env.eval(&e)?, mode)
}
