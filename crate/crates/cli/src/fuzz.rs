use std::fmt;

use artin_rrs::group::is_freely_reduced;
use artin_rrs::oracle::{oracle_equal, oracle_geodesic_length, OracleConfig};
use artin_rrs::reducer::reduce_to_geodesic;
use artin_rrs::{free_reduce, Error, Gen, GroupParams, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub invariant: &'static str,
    pub word: Word,
    pub minimized: Word,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub n: u32,
    pub count: usize,
    pub max_len: usize,
    pub seed: u64,
    pub slack: usize,
    pub violations: Vec<Violation>,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "fuzz: {} words, n={}, max length {}, seed {}, slack {}: {} violations",
            self.count,
            self.n,
            self.max_len,
            self.seed,
            self.slack,
            self.violations.len()
        )?;
        for v in &self.violations {
            write!(
                f,
                "\n  {}: {} (minimised {}): {}",
                v.invariant, v.word, v.minimized, v.detail
            )?;
        }
        Ok(())
    }
}

/// The first invariant that `w` breaks, if any.
fn check(w: &Word, config: &OracleConfig, params: &GroupParams) -> Result<Option<(&'static str, String)>, Error> {
    let g = reduce_to_geodesic(w, params);
    if !is_freely_reduced(&g) {
        return Ok(Some(("freely-reduced", format!("result {g}"))));
    }
    if reduce_to_geodesic(&g, params) != g {
        return Ok(Some(("idempotent", format!("result {g} reduces further"))));
    }
    if g.len() % 2 != w.len() % 2 || g.len() > free_reduce(w).len() {
        return Ok(Some(("length", format!("result {g}"))));
    }
    let searched = oracle_geodesic_length(w, config, params)?;
    if searched != g.len() {
        return Ok(Some((
            "oracle-length",
            format!("result {g} of length {}, search found {searched}", g.len()),
        )));
    }
    let verdict = oracle_equal(w, &g, config, params)?;
    if !verdict.equal {
        return Ok(Some((
            "oracle-equal",
            format!("result {g}, evidence {:?}", verdict.evidence),
        )));
    }
    Ok(None)
}

/// Deletes letters one at a time while the same invariant still fails.
fn minimize(w: &Word, invariant: &str, config: &OracleConfig, params: &GroupParams) -> Result<Word, Error> {
    let mut cur = w.clone();
    'outer: loop {
        for i in 0..cur.len() {
            let mut shorter = Word::from(&cur[..i]);
            shorter.extend_from_slice(&cur[i + 1..]);
            if matches!(check(&shorter, config, params)?, Some((inv, _)) if inv == invariant) {
                cur = shorter;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

pub fn run(
    count: usize,
    max_len: usize,
    seed: u64,
    config: &OracleConfig,
    params: &GroupParams,
) -> Result<Summary, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..count {
        let len = rng.gen_range(0..=max_len);
        let w: Word = (0..len)
            .map(|_| Gen::ALL[rng.gen_range(0..3)].signed(rng.gen_bool(0.5)))
            .collect();
        if let Some((invariant, detail)) = check(&w, config, params)? {
            let minimized = minimize(&w, invariant, config, params)?;
            violations.push(Violation {
                invariant,
                word: w,
                minimized,
                detail,
            });
        }
    }
    Ok(Summary {
        n: params.n(),
        count,
        max_len,
        seed,
        slack: config.slack,
        violations,
    })
}
