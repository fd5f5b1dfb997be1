use rustc_hash::FxHashSet;

use crate::dihedral::is_critical_2gen;
use crate::error::{Error, ResourceError};
use crate::group::{Gen, GroupParams, Letter, Pair, Word};

/// Words reachable from `w` by swapping adjacent letters named `a` and `c`
/// and by replacing a critical subword over `{a,b}` or `{b,c}` with its image.
pub fn equivalence_closure(w: &[Letter], params: &GroupParams, cap: usize) -> Result<Vec<Word>, Error> {
    let mut seen: FxHashSet<Word> = FxHashSet::default();
    let mut stack = vec![Word::from(w)];
    seen.insert(Word::from(w));
    while let Some(u) = stack.pop() {
        for v in closure_moves(&u, params) {
            if !seen.contains(&v) {
                if seen.len() >= cap {
                    return Err(ResourceError::NodeCap { cap }.into());
                }
                seen.insert(v.clone());
                stack.push(v);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

fn closure_moves(u: &[Letter], params: &GroupParams) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 1..u.len() {
        let (x, y) = (u[i - 1].gen(), u[i].gen());
        if x != y && x != Gen::B && y != Gen::B {
            let mut v = u.to_vec();
            v.swap(i - 1, i);
            out.push(Word::from_letters(v));
        }
    }
    for pair in [Pair::AB, Pair::BC] {
        for i in 0..u.len() {
            for j in i + 2..=u.len() {
                if !pair.contains(u[j - 1].gen()) {
                    break;
                }
                if let Some(wit) = is_critical_2gen(&u[i..j], pair, params) {
                    let mut v = u[..i].to_vec();
                    v.extend_from_slice(&wit.tau());
                    v.extend_from_slice(&u[j..]);
                    out.push(Word::from_letters(v));
                }
            }
        }
    }
    out
}
