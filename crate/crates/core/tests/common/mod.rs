#![allow(dead_code)]

use artin_rrs::abc_critical::{is_abc_critical, AbcWitness};
use artin_rrs::oracle::{oracle_equal, oracle_equal_in_pair, OracleConfig, Verdict};
use artin_rrs::{Gen, GroupParams, Letter, Pair, Word};
use rand::Rng;

pub fn params(n: u32) -> GroupParams {
    GroupParams::new(n).unwrap()
}

pub fn letters() -> [Letter; 6] {
    [
        Gen::A.pos(),
        Gen::A.neg(),
        Gen::B.pos(),
        Gen::B.neg(),
        Gen::C.pos(),
        Gen::C.neg(),
    ]
}

pub fn random_word(rng: &mut impl Rng, len: usize) -> Word {
    (0..len).map(|_| letters()[rng.gen_range(0..6)]).collect()
}

/// Tries increasing slack until a path is found; a found path is a proof.
pub fn confirm_equal(u: &[Letter], v: &[Letter], pair: Option<Pair>, p: &GroupParams) -> Verdict {
    let mut last = None;
    for slack in [4, 6, 8] {
        let config = OracleConfig::default().with_slack(slack);
        let verdict = match pair {
            Some(pair) => oracle_equal_in_pair(u, v, pair, &config, p),
            None => oracle_equal(u, v, &config, p),
        }
        .unwrap();
        if verdict.equal {
            return verdict;
        }
        last = Some(verdict);
    }
    last.expect("at least one attempt")
}

/// Random words shaped like `{b,c}`-head, `a`, short tail, `a`, kept when
/// they are `{a,b,c}`-critical.
pub fn abc_witnesses(rng: &mut impl Rng, tries: usize, max_len: usize) -> Vec<(GroupParams, AbcWitness)> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..tries {
        let p = params(if i % 2 == 0 { 5 } else { 6 });
        let sign = rng.gen_bool(0.5);
        let mut w: Vec<Letter> = Vec::new();
        for _ in 0..rng.gen_range(2..=9) {
            let g = if rng.gen_bool(0.5) { Gen::B } else { Gen::C };
            w.push(g.signed(if rng.gen_bool(0.8) { sign } else { !sign }));
        }
        w.push(Gen::A.signed(rng.gen_bool(0.5)));
        let tail: usize = rng.gen_range(0..=3);
        for _ in 0..tail {
            w.push(letters()[rng.gen_range(0..6)]);
        }
        if rng.gen_bool(0.8) {
            w.push(Gen::A.signed(rng.gen_bool(0.5)));
        }
        if w.len() > max_len {
            continue;
        }
        if let Some(wit) = is_abc_critical(&w, &p) {
            if seen.insert((p.n(), wit.word.clone())) {
                out.push((p, wit));
            }
        }
    }
    out
}
