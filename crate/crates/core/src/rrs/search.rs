use crate::abc_critical;
use crate::group::{Gen, GroupParams, Letter};
use crate::meter::Meter;
use crate::p2g::{self, P2gType};

use super::{check_rrs, Critical, CriticalType, Rrs};

/// The optimal reducing sequence of `w x`, or `None` when `w x` admits none.
/// `w` is expected to admit none itself.
pub fn find_optimal_rrs(w: &[Letter], x: Letter, params: &GroupParams) -> Option<Rrs> {
    find_optimal_rrs_metered(w, x, params, &mut Meter::new())
}

pub fn find_optimal_rrs_metered(w: &[Letter], x: Letter, params: &GroupParams, meter: &mut Meter) -> Option<Rrs> {
    let mut host = Vec::with_capacity(w.len() + 1);
    host.extend_from_slice(w);
    host.push(x);
    let (bounds, kinds) = locate(&host, params, meter)?;
    meter.tick(host.len() - bounds[0]);
    check_rrs(&host, &bounds, &kinds, params)
}

fn shortest_critical_suffix(
    v: &[Letter],
    kind: CriticalType,
    params: &GroupParams,
    meter: &mut Meter,
) -> Option<usize> {
    match kind {
        CriticalType::P2gAb => p2g::shortest_suffix(v, P2gType::Ab, 3, meter),
        CriticalType::P2gBc => p2g::shortest_suffix(v, P2gType::Bc, params.n(), meter),
        CriticalType::Abc => abc_critical::shortest_suffix(v, params, meter),
    }
}

/// Moving left from `end`, the first letter named `target` that is met
/// after the names in `after` have been seen in that order.
fn distinguished(w: &[Letter], end: usize, after: &[Gen], target: Gen, meter: &mut Meter) -> Option<usize> {
    let mut need = 0;
    let mut k = end;
    while k > 0 {
        k -= 1;
        meter.tick(1);
        let g = w[k].gen();
        if need == after.len() && g == target {
            return Some(k);
        }
        if need < after.len() && g == after[need] {
            need += 1;
        }
    }
    None
}

/// Nearest letters on each side of `k` whose name differs from that of `w[k]`.
fn neighbours(w: &[Letter], k: usize, meter: &mut Meter) -> (Option<usize>, Option<usize>) {
    let g = w[k].gen();
    let left = (0..k).rev().find(|&i| {
        meter.tick(1);
        w[i].gen() != g
    });
    let right = (k + 1..w.len()).find(|&i| {
        meter.tick(1);
        w[i].gen() != g
    });
    (left, right)
}

/// First part of the procedure: the putative factorisation, right to left.
fn locate(host: &[Letter], params: &GroupParams, meter: &mut Meter) -> Option<(Vec<usize>, Vec<CriticalType>)> {
    let len = host.len() - 1;
    let w = &host[..len];
    let x = host[len];
    let mut j = len;
    while j > 0 && w[j - 1].commutes(x) && w[j - 1] != x.inverse() {
        meter.tick(1);
        j -= 1;
    }
    if j == 0 {
        return None;
    }
    meter.tick(1);
    if w[j - 1] == x.inverse() {
        return Some((vec![j - 1, len], Vec::new()));
    }
    let kind = match (x.gen(), w[j - 1].gen()) {
        (s, t) if s == t => return None,
        (Gen::A, Gen::B) | (Gen::B, Gen::A) => CriticalType::P2gAb,
        (Gen::B, Gen::C) | (Gen::C, Gen::B) => CriticalType::P2gBc,
        _ => unreachable!("non-commuting pair"),
    };
    // ends of w_m, w_{m-1}, ... and their types, collected right to left
    let mut ends = vec![len, j];
    let mut kinds = vec![kind];
    loop {
        let end = *ends.last().expect("nonempty");
        let kind = *kinds.last().expect("nonempty");
        if let Some(start) = shortest_critical_suffix(&w[..end], kind, params, meter) {
            ends.push(start);
            break;
        }
        let (next_end, next_kind) = match kind {
            CriticalType::P2gAb => {
                let c = distinguished(w, end, &[Gen::B], Gen::C, meter)?;
                let (l, r) = neighbours(w, c, meter);
                let l = l?;
                match r {
                    Some(r) if w[l].gen() == Gen::B && w[r].gen() == Gen::B => (l + 1, CriticalType::P2gAb),
                    _ => (c + 1, CriticalType::P2gBc),
                }
            }
            CriticalType::P2gBc | CriticalType::Abc => {
                let after: &[Gen] = if kind == CriticalType::P2gBc {
                    &[Gen::B]
                } else {
                    &[Gen::B, Gen::C, Gen::B]
                };
                let a = distinguished(w, end, after, Gen::A, meter)?;
                let (l, r) = neighbours(w, a, meter);
                let l = l?;
                match r {
                    Some(r) if w[l].gen() == Gen::B && w[r].gen() == Gen::B => (l + 1, CriticalType::P2gBc),
                    _ => {
                        let next_end = a + 1;
                        match probe(w, next_end, end, kind, params, meter) {
                            Probe::Start(s1) => {
                                ends.push(next_end);
                                kinds.push(CriticalType::P2gAb);
                                ends.push(s1);
                                break;
                            }
                            Probe::Kind(k) => (next_end, k),
                        }
                    }
                }
            }
        };
        ends.push(next_end);
        kinds.push(next_kind);
    }
    ends.reverse();
    kinds.reverse();
    Some((ends, kinds))
}

enum Probe {
    /// The sequence starts at this index with two links.
    Start(usize),
    Kind(CriticalType),
}

/// Decides between `{a,b}` and `{a,b,c}` for the link ending at `next_end`.
fn probe(
    w: &[Letter],
    next_end: usize,
    end: usize,
    kind: CriticalType,
    params: &GroupParams,
    meter: &mut Meter,
) -> Probe {
    let Some(s1) = p2g::shortest_suffix(&w[..next_end], P2gType::Ab, 3, meter) else {
        return Probe::Kind(CriticalType::P2gAb);
    };
    let first = Critical::of(&w[s1..next_end], CriticalType::P2gAb, params).expect("critical suffix");
    let mut second = first.carry();
    second.extend_from_slice(&w[next_end..end]);
    meter.tick(end - s1);
    if Critical::of(&second, kind, params).is_some() {
        Probe::Start(s1)
    } else {
        Probe::Kind(CriticalType::Abc)
    }
}
