//! Exact arithmetic on surreal numbers given by sign expansions of ordinal length.

pub mod bracket;
pub mod chains;
pub mod concat;
pub mod dyadic;
pub mod error;
pub mod field;
pub mod gen;
pub mod laws;
pub mod ordinal;
pub mod par;
pub mod simplicity;
pub mod substructure;
pub mod surreal;

pub use bracket::{Bound, Chain, Cut, Direction};
pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use ordinal::Ordinal;
pub use substructure::{Structure, Tri};
pub use surreal::{Point, Run, Sign, Surreal};
