//! Named ω-chains used as bounds in brackets.

use crate::bracket::{Chain, Direction};
use crate::ordinal::Ordinal;
use crate::surreal::{Sign, Surreal};

pub const NAMES: [&str; 6] =
    ["nats", "neg_nats", "omega_minus_nats", "omega_plus_nats", "half_powers", "neg_half_powers"];

fn omega_then(sign: Sign, n: u64) -> Surreal {
    Surreal::omega().with(sign, &Ordinal::from(n))
}

/// `0, 1, 2, ...` up to `ω`.
pub fn nats() -> Chain {
    Chain::new("nats", Direction::Increasing, Some(Surreal::omega()), |n| Surreal::from_i64(n as i64))
}

pub fn neg_nats() -> Chain {
    nats().neg().map("neg_nats", false, Some(Surreal::omega().neg()), Surreal::clone)
}

/// `ω, ω − 1, ω − 2, ...` down to `ω/2`.
pub fn omega_minus_nats() -> Chain {
    let hint = Surreal::omega().with(Sign::Minus, &Ordinal::omega());
    Chain::new("omega_minus_nats", Direction::Decreasing, Some(hint), |n| omega_then(Sign::Minus, n))
}

/// `ω, ω + 1, ω + 2, ...` up to `ω2`.
pub fn omega_plus_nats() -> Chain {
    let hint = Surreal::from_ordinal(&Ordinal::omega().cantor_mul(&Ordinal::from(2)));
    Chain::new("omega_plus_nats", Direction::Increasing, Some(hint), |n| omega_then(Sign::Plus, n))
}

/// `1, 1/2, 1/4, ...` down to `1/ω`.
pub fn half_powers() -> Chain {
    let hint = Surreal::one().with(Sign::Minus, &Ordinal::omega());
    Chain::new("half_powers", Direction::Decreasing, Some(hint), |n| {
        Surreal::one().with(Sign::Minus, &Ordinal::from(n))
    })
}

pub fn neg_half_powers() -> Chain {
    half_powers().neg().map("neg_half_powers", false, Some(half_powers().hint().unwrap().neg()), Surreal::clone)
}

pub fn named(name: &str) -> Option<Chain> {
    Some(match name {
        "nats" => nats(),
        "neg_nats" => neg_nats(),
        "omega_minus_nats" => omega_minus_nats(),
        "omega_plus_nats" => omega_plus_nats(),
        "half_powers" => half_powers(),
        "neg_half_powers" => neg_half_powers(),
        _ => return None,
    })
}
