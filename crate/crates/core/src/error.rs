use thiserror::Error;

/// Everything that can go wrong inside the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty cut: some lower bound is not below some upper bound")]
    EmptyCut,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a chain: {0}")]
    NotAChain(String),
    #[error("chain `{0}` needs a limit hint")]
    MissingHint(String),
    #[error("limit hint rejected: {0}")]
    InvalidHint(String),
    #[error("not a dyadic number: {0}")]
    NotDyadic(String),
    #[error("not an ordinal: {0}")]
    NotOrdinal(String),
    #[error("operation needs finite-length operands")]
    NotFiniteLength,
    #[error("operand must be positive")]
    NotPositive,
    #[error("{value} is not a member of {structure}")]
    NotMember { structure: String, value: String },
    #[error("result would have infinitely many sign runs")]
    InfiniteRuns,
    #[error("cannot decide: {0}")]
    Undecidable(String),
    #[error("outside the supported family: {0}")]
    Unknown(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("structure {0} has no induced bracket")]
    MissingBracket(String),
    #[error("action {0} is not certified sharp")]
    NotSharp(String),
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
