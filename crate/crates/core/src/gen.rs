//! Seeded sample generators for sweeps, law checks and benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ordinal::Ordinal;
use crate::surreal::{Sign, Surreal};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every sign sequence of length at most `n`, shortest first.
pub fn all_finite(n: usize) -> Vec<Surreal> {
    crate::substructure::sample_params(n)
}

/// A uniformly random sign sequence of length at most `max_len`.
pub fn finite(rng: &mut SampleRng, max_len: usize) -> Surreal {
    let n = rng.gen_range(0..=max_len);
    let signs: Vec<Sign> = (0..n).map(|_| if rng.gen() { Sign::Plus } else { Sign::Minus }).collect();
    Surreal::from_signs(&signs)
}

/// A nonzero ordinal below `ω^(ω+1)`: up to three terms with small
/// coefficients, exponents finite or occasionally `ω`.
pub fn ordinal(rng: &mut SampleRng) -> Ordinal {
    let mut exps: Vec<Ordinal> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let e = if rng.gen_ratio(1, 8) { Ordinal::omega() } else { Ordinal::from(rng.gen_range(0..=2u64)) };
        if !exps.contains(&e) {
            exps.push(e);
        }
    }
    exps.sort_by(|a, b| b.cmp(a));
    Ordinal::from_terms(exps.into_iter().map(|e| (e, rng.gen_range(1..=3u64))))
}

/// Lengths for a run: finite most of the time when `transfinite` is off.
pub fn run_length(rng: &mut SampleRng, transfinite: bool) -> Ordinal {
    if transfinite && rng.gen_ratio(1, 2) {
        ordinal(rng)
    } else {
        Ordinal::from(rng.gen_range(1..=3u64))
    }
}

/// A number with up to `max_runs` runs.
pub fn surreal(rng: &mut SampleRng, max_runs: usize, transfinite: bool) -> Surreal {
    let n = rng.gen_range(0..=max_runs);
    let mut sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
    let mut out = Surreal::zero();
    for _ in 0..n {
        out.push(sign, &run_length(rng, transfinite));
        sign = sign.flip();
    }
    out
}

/// A number with exactly one run.
pub fn single_run(rng: &mut SampleRng, transfinite: bool) -> Surreal {
    let sign = if rng.gen() { Sign::Plus } else { Sign::Minus };
    Surreal::zero().with(sign, &run_length(rng, transfinite))
}

/// A number whose last run has limit length, so it is the supremum of
/// its prefixes.
pub fn limit(rng: &mut SampleRng, max_runs: usize) -> Surreal {
    let mut x = surreal(rng, max_runs.saturating_sub(1), true);
    let sign = match x.last_sign() {
        Some(s) => s.flip(),
        None => Sign::Plus,
    };
    let mut len = ordinal(rng);
    if !len.is_limit() {
        len = len.cantor_add(&Ordinal::omega());
    }
    x.push(sign, &len);
    x
}
