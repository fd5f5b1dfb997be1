use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, ResourceError};
use crate::group::{free_reduce, GroupParams, Letter, Pair, Word};

use super::{abelian_lower_bound, abelianization, relators, Evidence, OracleConfig, Verdict};

/// Longest word a search may hold.
pub const MAX_SEARCH_LEN: usize = 42;

type Key = u128;

fn pack(w: &[Letter]) -> Key {
    w.iter().rev().fold(0, |acc, l| (acc << 3) | Key::from(l.code()))
}

fn unpack(mut k: Key, out: &mut Vec<Letter>) {
    out.clear();
    while k != 0 {
        out.push(Letter::from_code((k & 7) as u8));
        k >>= 3;
    }
}

/// Piece replacements `p -> q^-1` for every cyclic conjugate `p q` of a
/// relator or its inverse, indexed by the first letter of `p`.
struct Moves {
    by_first: Vec<Vec<(Vec<Letter>, Vec<Letter>)>>,
    inserts: Vec<Vec<Letter>>,
}

impl Moves {
    fn new(params: &GroupParams) -> Moves {
        Moves::from_relators(relators(params))
    }

    fn from_relators(relators: Vec<Word>) -> Moves {
        let mut rotations = FxHashSet::default();
        for r in relators {
            for r in [r.clone(), r.inverse()] {
                for k in 0..r.len() {
                    let mut rot = r[k..].to_vec();
                    rot.extend_from_slice(&r[..k]);
                    rotations.insert(rot);
                }
            }
        }
        let mut pieces = FxHashSet::default();
        for rot in &rotations {
            for k in 1..=rot.len() {
                let p = rot[..k].to_vec();
                let q: Vec<Letter> = rot[k..].iter().rev().map(|l| l.inverse()).collect();
                pieces.insert((p, q));
            }
        }
        let mut by_first = vec![Vec::new(); 7];
        let mut pieces: Vec<_> = pieces.into_iter().collect();
        pieces.sort();
        for (p, q) in pieces {
            by_first[usize::from(p[0].code())].push((p, q));
        }
        let mut inserts: Vec<_> = rotations.into_iter().collect();
        inserts.sort();
        Moves { by_first, inserts }
    }

    fn neighbours(&self, w: &[Letter], bound: usize, buf: &mut Vec<Letter>, out: &mut Vec<Key>) {
        out.clear();
        let len = w.len();
        let mut emit = |head: &[Letter], mid: &[Letter], tail: &[Letter], out: &mut Vec<Key>| {
            buf.clear();
            buf.extend_from_slice(head);
            for &l in mid {
                if buf.last() == Some(&l.inverse()) {
                    buf.pop();
                } else {
                    buf.push(l);
                }
            }
            let mut rest = tail;
            while let (Some(&l), Some(&last)) = (rest.first(), buf.last()) {
                if l != last.inverse() {
                    break;
                }
                buf.pop();
                rest = &rest[1..];
            }
            if buf.len() + rest.len() <= bound {
                buf.extend_from_slice(rest);
                out.push(pack(buf));
            }
        };
        for i in 0..len {
            for (p, q) in &self.by_first[usize::from(w[i].code())] {
                let end = i + p.len();
                if end <= len && w[i..end] == p[..] {
                    emit(&w[..i], q, &w[end..], out);
                }
            }
        }
        // insertions that cancel against `w` are piece replacements already
        for r in self.inserts.iter().filter(|r| len + r.len() <= bound) {
            for i in 0..=len {
                emit(&w[..i], r, &w[i..], out);
            }
        }
    }
}

fn check_len(len: usize) -> Result<(), Error> {
    if len > MAX_SEARCH_LEN {
        return Err(ResourceError::TooLong {
            len,
            max: MAX_SEARCH_LEN,
        }
        .into());
    }
    Ok(())
}

/// Breadth-first search over freely reduced words of length at most
/// `bound`. `visit` returns `true` to stop early.
fn search(
    start: &[Letter],
    bound: usize,
    cap: usize,
    params: &GroupParams,
    mut visit: impl FnMut(&[Letter]) -> bool,
) -> Result<(), Error> {
    check_len(bound)?;
    let moves = Moves::new(params);
    let mut seen = FxHashSet::default();
    let mut queue = VecDeque::new();
    let first = pack(start);
    seen.insert(first);
    queue.push_back(first);
    let (mut cur, mut buf, mut next) = (Vec::new(), Vec::new(), Vec::new());
    while let Some(k) = queue.pop_front() {
        unpack(k, &mut cur);
        if visit(&cur) {
            return Ok(());
        }
        moves.neighbours(&cur, bound, &mut buf, &mut next);
        for &k in &next {
            if seen.insert(k) {
                if seen.len() > cap {
                    return Err(ResourceError::NodeCap { cap }.into());
                }
                queue.push_back(k);
            }
        }
    }
    Ok(())
}

/// Length of the shortest word reachable from `w` without exceeding the
/// length of its free reduction by more than the slack.
pub fn oracle_geodesic_length(w: &[Letter], config: &OracleConfig, params: &GroupParams) -> Result<usize, Error> {
    let start = free_reduce(w);
    let floor = abelian_lower_bound(&start, params);
    let mut best = start.len();
    if best == floor {
        return Ok(best);
    }
    search(&start, start.len() + config.slack, config.node_cap, params, |u| {
        best = best.min(u.len());
        best == floor
    })?;
    Ok(best)
}

/// Every freely reduced word of length at most `bound` reachable from `w`.
pub fn reachable_within(
    w: &[Letter],
    bound: usize,
    config: &OracleConfig,
    params: &GroupParams,
) -> Result<Vec<Word>, Error> {
    let start = free_reduce(w);
    let mut out = Vec::new();
    search(&start, bound.max(start.len()), config.node_cap, params, |u| {
        out.push(Word::from(u));
        false
    })?;
    out.sort();
    Ok(out)
}

/// Searches outward from both words at once, within the longer free
/// reduction plus the slack.
pub fn oracle_equal(
    w1: &[Letter],
    w2: &[Letter],
    config: &OracleConfig,
    params: &GroupParams,
) -> Result<Verdict, Error> {
    equal_with(w1, w2, Moves::new(params), config, params)
}

/// As [`oracle_equal`], using only the relator of `pair`. A positive answer
/// holds in the subgroup the pair generates, hence in the whole group.
pub fn oracle_equal_in_pair(
    w1: &[Letter],
    w2: &[Letter],
    pair: Pair,
    config: &OracleConfig,
    params: &GroupParams,
) -> Result<Verdict, Error> {
    let mut relator = None;
    for r in relators(params) {
        if r.iter().all(|l| pair.contains(l.gen())) {
            relator = Some(r);
        }
    }
    let moves = Moves::from_relators(relator.into_iter().collect());
    equal_with(w1, w2, moves, config, params)
}

fn equal_with(
    w1: &[Letter],
    w2: &[Letter],
    moves: Moves,
    config: &OracleConfig,
    params: &GroupParams,
) -> Result<Verdict, Error> {
    let (u, v) = (free_reduce(w1), free_reduce(w2));
    if abelianization(&u, params) != abelianization(&v, params) || u.len() % 2 != v.len() % 2 {
        return Ok(Verdict {
            equal: false,
            evidence: Evidence::Abelianization,
        });
    }
    if u == v {
        return Ok(Verdict {
            equal: true,
            evidence: Evidence::FreeReduction,
        });
    }
    let bound = u.len().max(v.len()) + config.slack;
    check_len(bound)?;
    // side of each visited word: 0 from u, 1 from v
    let mut seen: FxHashMap<Key, u8> = FxHashMap::default();
    let mut layers = [vec![pack(&u)], vec![pack(&v)]];
    seen.insert(layers[0][0], 0);
    seen.insert(layers[1][0], 1);
    let (mut cur, mut buf, mut next) = (Vec::new(), Vec::new(), Vec::new());
    loop {
        let side = if layers[0].len() <= layers[1].len() { 0 } else { 1 };
        if layers[side].is_empty() {
            return Ok(Verdict {
                equal: false,
                evidence: Evidence::Exhausted { bound },
            });
        }
        let mut fresh = Vec::new();
        for &k in &layers[side] {
            unpack(k, &mut cur);
            moves.neighbours(&cur, bound, &mut buf, &mut next);
            for &k in &next {
                match seen.get(&k) {
                    Some(&s) if s != side as u8 => {
                        return Ok(Verdict {
                            equal: true,
                            evidence: Evidence::Path,
                        })
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(k, side as u8);
                        if seen.len() > config.node_cap {
                            return Err(ResourceError::NodeCap { cap: config.node_cap }.into());
                        }
                        fresh.push(k);
                    }
                }
            }
        }
        layers[side] = fresh;
    }
}
