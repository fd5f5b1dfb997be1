use crate::error::{Error, ResourceError};
use crate::group::{GroupParams, Letter, Word};

use super::{check_rrs, Critical, CriticalType, Rrs};

/// Longest host accepted by the exhaustive search.
pub const MAX_ENUMERATION_LEN: usize = 16;

/// Every reducing sequence of `host` with at most `max_m` links, found by
/// trying all factorisations and link types.
pub fn enumerate_all_rrs(host: &[Letter], params: &GroupParams, max_m: usize) -> Result<Vec<Rrs>, Error> {
    if host.len() > MAX_ENUMERATION_LEN {
        return Err(ResourceError::TooLong {
            len: host.len(),
            max: MAX_ENUMERATION_LEN,
        }
        .into());
    }
    let mut out = Vec::new();
    let len = host.len();
    for b0 in 0..len {
        for b1 in b0 + 1..len {
            if let Some(r) = check_rrs(host, &[b0, b1], &[], params) {
                out.push(r);
            }
        }
        let mut bounds = vec![b0];
        let mut kinds = Vec::new();
        extend(host, params, max_m, &Word::new(), &mut bounds, &mut kinds, &mut out);
    }
    Ok(out)
}

fn extend(
    host: &[Letter],
    params: &GroupParams,
    max_m: usize,
    carry: &Word,
    bounds: &mut Vec<usize>,
    kinds: &mut Vec<CriticalType>,
    out: &mut Vec<Rrs>,
) {
    if kinds.len() >= max_m {
        return;
    }
    let len = host.len();
    let from = *bounds.last().expect("start is set");
    for end in from + 1..len {
        let u = carry.concat(&host[from..end]);
        for kind in CriticalType::ALL {
            let Some(link) = Critical::of(&u, kind, params) else {
                continue;
            };
            let next = link.carry();
            bounds.push(end);
            kinds.push(kind);
            for cancel in end..len {
                let mut b = bounds.clone();
                b.push(cancel);
                if let Some(r) = check_rrs(host, &b, kinds, params) {
                    out.push(r);
                }
            }
            extend(host, params, max_m, &next, bounds, kinds, out);
            bounds.pop();
            kinds.pop();
        }
    }
}
