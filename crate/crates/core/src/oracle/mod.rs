//! Brute-force checks that share nothing with the reduction code: bounded
//! searches over relator moves, and closure under length-preserving moves.

mod bfs;
mod closure;

use serde::Serialize;

use crate::error::Error;
use crate::group::{alternating, Anchor, Gen, GroupParams, Letter, Word};

pub use bfs::{oracle_equal, oracle_equal_in_pair, oracle_geodesic_length, reachable_within, MAX_SEARCH_LEN};
pub use closure::equivalence_closure;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Letters allowed above the starting length during a search.
    pub slack: usize,
    /// Bound on the number of words a single search may visit.
    pub node_cap: usize,
}

impl OracleConfig {
    pub fn new(slack: usize, node_cap: usize) -> Result<OracleConfig, Error> {
        if node_cap == 0 {
            return Err(Error::InvalidArgument("node_cap must be positive".into()));
        }
        Ok(OracleConfig { slack, node_cap })
    }

    pub fn with_slack(self, slack: usize) -> OracleConfig {
        OracleConfig { slack, ..self }
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            slack: 4,
            node_cap: 5_000_000,
        }
    }
}

/// How an equality verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Evidence {
    /// The exponent sums differ, so the words are different in every case.
    Abelianization,
    /// The words coincide after free cancellation.
    FreeReduction,
    /// A path of relator moves was found.
    Path,
    /// No path exists among words of length at most `bound`.
    Exhausted { bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub equal: bool,
    pub evidence: Evidence,
}

/// Image in the abelianisation. For odd `n` all three generators are
/// conjugate and only the first entry is used.
pub fn abelianization(w: &[Letter], params: &GroupParams) -> [i64; 2] {
    let mut ab = 0i64;
    let mut c = 0i64;
    for l in w {
        let s = i64::from(l.sign());
        match l.gen() {
            Gen::A | Gen::B => ab += s,
            Gen::C => c += s,
        }
    }
    if params.n() % 2 == 1 {
        [ab + c, 0]
    } else {
        [ab, c]
    }
}

/// Length of any word with the given abelian image is at least this.
pub fn abelian_lower_bound(w: &[Letter], params: &GroupParams) -> usize {
    let [x, y] = abelianization(w, params);
    (x.unsigned_abs() + y.unsigned_abs()) as usize
}

/// The defining relations as pairs of equal words.
fn relations(params: &GroupParams) -> Vec<(Word, Word)> {
    let (a, b, c) = (Gen::A.pos(), Gen::B.pos(), Gen::C.pos());
    let n = params.n() as usize;
    let mut out = vec![
        (alternating(a, b, 3, Anchor::Start), alternating(b, a, 3, Anchor::Start)),
        (alternating(b, c, n, Anchor::Start), alternating(c, b, n, Anchor::Start)),
    ];
    let inverted: Vec<(Word, Word)> = out.iter().map(|(u, v)| (u.inverse(), v.inverse())).collect();
    out.extend(inverted);
    for x in [Gen::A.pos(), Gen::A.neg()] {
        for y in [Gen::C.pos(), Gen::C.neg()] {
            out.push((Word::from_letters(vec![x, y]), Word::from_letters(vec![y, x])));
        }
    }
    out
}

/// Cyclic words equal to the identity: each relation `u = v` as `u v^-1`.
pub(crate) fn relators(params: &GroupParams) -> Vec<Word> {
    let (a, b, c) = (Gen::A.pos(), Gen::B.pos(), Gen::C.pos());
    let n = params.n() as usize;
    let mut out = Vec::new();
    for (u, v) in [
        (alternating(a, b, 3, Anchor::Start), alternating(b, a, 3, Anchor::Start)),
        (Word::from_letters(vec![a, c]), Word::from_letters(vec![c, a])),
        (alternating(b, c, n, Anchor::Start), alternating(c, b, n, Anchor::Start)),
    ] {
        out.push(u.concat(&v.inverse()));
    }
    out
}

/// Every word one relation substitution or one cancelling pair away from `w`.
pub fn relator_moves(w: &[Letter], params: &GroupParams) -> Vec<Word> {
    let mut out = Vec::new();
    for (u, v) in relations(params) {
        for (from, to) in [(&u, &v), (&v, &u)] {
            if from.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - from.len() {
                if w[i..i + from.len()] == from[..] {
                    let mut next = Word::from(&w[..i]);
                    next.extend_from_slice(to);
                    next.extend_from_slice(&w[i + from.len()..]);
                    out.push(next);
                }
            }
        }
    }
    for i in 0..=w.len() {
        for g in Gen::ALL {
            for x in [g.pos(), g.neg()] {
                let mut next = Word::from(&w[..i]);
                next.push(x);
                next.push(x.inverse());
                next.extend_from_slice(&w[i..]);
                out.push(next);
            }
        }
    }
    for i in 1..w.len() {
        if w[i - 1] == w[i].inverse() {
            let mut next = Word::from(&w[..i - 1]);
            next.extend_from_slice(&w[i + 1..]);
            out.push(next);
        }
    }
    out
}
