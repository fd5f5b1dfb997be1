//! Pseudo-2-generated words: an `{x,b}`-word padded at its ends by powers of
//! the generator `z` that commutes with `x`.

use std::ops::Range;

use serde::Serialize;

use crate::dihedral::{tau_into, SuffixScan, TwoGenWitness};
use crate::group::{Gen, GroupParams, Letter, Pair, Word};
use crate::meter::Meter;

/// Pseudo-generator pair `{x,b}`; the extra generator is the other one of `a`, `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum P2gType {
    #[serde(rename = "ab")]
    Ab,
    #[serde(rename = "bc")]
    Bc,
}

impl P2gType {
    pub fn x(self) -> Gen {
        match self {
            P2gType::Ab => Gen::A,
            P2gType::Bc => Gen::C,
        }
    }

    pub fn z(self) -> Gen {
        match self {
            P2gType::Ab => Gen::C,
            P2gType::Bc => Gen::A,
        }
    }

    pub fn pair(self) -> Pair {
        match self {
            P2gType::Ab => Pair::AB,
            P2gType::Bc => Pair::BC,
        }
    }
}

impl std::fmt::Display for P2gType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            P2gType::Ab => "{a,b}",
            P2gType::Bc => "{b,c}",
        })
    }
}

/// Decomposition `u_p u_q u_s` of a P2G word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2gWitness {
    pub kind: P2gType,
    pub word: Word,
    /// Span of `u_q`; `u_p` is everything before it and `u_s` everything after.
    pub middle: Range<usize>,
    /// Exponent of `z` in `u_p`.
    pub alpha: i32,
    /// Exponent of `z` in `u_s`.
    pub beta: i32,
    pub hat: Word,
    pub hat_witness: Option<TwoGenWitness>,
}

impl P2gWitness {
    pub fn prefix(&self) -> Range<usize> {
        0..self.middle.start
    }

    pub fn suffix(&self) -> Range<usize> {
        self.middle.end..self.word.len()
    }

    pub fn is_critical(&self) -> bool {
        self.hat_witness.is_some()
    }

    /// `tau` of the hat word, when critical.
    pub fn hat_tau(&self) -> Option<Word> {
        self.hat_witness.as_ref().map(TwoGenWitness::tau)
    }

    pub fn tau(&self) -> Option<Word> {
        let hw = self.hat_witness.as_ref()?;
        let z = self.kind.z();
        let mut out = Word::power(z, self.alpha).into_letters();
        out.reserve(self.word.len());
        tau_into(&hw.word, hw.pair, hw.profile.m, hw.shape, hw.lead, hw.trail, &mut out);
        out.extend_from_slice(&Word::power(z, self.beta));
        Some(Word::from_letters(out))
    }

    /// `l(tau(hat)) * beta`, the part of the image that is carried into the
    /// next link of a reducing sequence.
    pub fn carry(&self) -> Option<Word> {
        let t = self.hat_tau()?;
        let mut out = vec![t[t.len() - 1]];
        out.extend_from_slice(&Word::power(self.kind.z(), self.beta));
        Some(Word::from_letters(out))
    }
}

fn z_exponent(w: &[Letter], z: Gen) -> (i32, bool) {
    let (mut pos, mut neg) = (0, 0);
    for l in w.iter().filter(|l| l.gen() == z) {
        if l.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos - neg, pos == 0 || neg == 0)
}

fn outer_blocks(w: &[Letter], kind: P2gType) -> Option<Range<usize>> {
    let (x, z) = (kind.x(), kind.z());
    let len = w.len();
    let first = *w.first()?;
    let last = w[len - 1];
    let q0 = if first.gen() == x {
        w.iter().position(|l| l.gen() == Gen::B)?
    } else if first.gen() == Gen::B {
        let end = w.iter().position(|&l| l != first).unwrap_or(len);
        if end == len || w[end].gen() != x {
            return None;
        }
        end
    } else {
        return None;
    };
    let s0 = if last.gen() == x {
        w.iter().rposition(|l| l.gen() == Gen::B)? + 1
    } else if last.gen() == Gen::B {
        let start = w.iter().rposition(|&l| l != last).map_or(0, |i| i + 1);
        if start == 0 || w[start - 1].gen() != x {
            return None;
        }
        start
    } else {
        return None;
    };
    if q0 >= s0 || w[q0..s0].iter().any(|l| l.gen() == z) {
        return None;
    }
    Some(q0..s0)
}

pub fn decompose_p2g(w: &[Letter], kind: P2gType, params: &GroupParams) -> Option<P2gWitness> {
    if !crate::group::is_freely_reduced(w) {
        return None;
    }
    let middle = outer_blocks(w, kind)?;
    let z = kind.z();
    let (alpha, _) = z_exponent(&w[..middle.start], z);
    let (beta, _) = z_exponent(&w[middle.end..], z);
    let hat: Word = w.iter().copied().filter(|l| l.gen() != z).collect();
    let m = kind.pair().m(params);
    let hat_witness = SuffixScan::of(&hat)
        .critical(m)
        .map(|(shape, lead, trail)| TwoGenWitness {
            pair: kind.pair(),
            shape,
            profile: SuffixScan::of(&hat).profile(m),
            lead,
            trail,
            word: hat.clone(),
        });
    Some(P2gWitness {
        kind,
        word: Word::from(w),
        middle,
        alpha,
        beta,
        hat,
        hat_witness,
    })
}

/// The word is P2G of the given type, its hat is critical, and the `z`-letters
/// of each outer block share a sign, so that the move preserves length.
pub fn is_p2g_critical(w: &[Letter], kind: P2gType, params: &GroupParams) -> Option<P2gWitness> {
    let wit = decompose_p2g(w, kind, params)?;
    wit.hat_witness.as_ref()?;
    let z = kind.z();
    if !z_exponent(&w[wit.prefix()], z).1 || !z_exponent(&w[wit.suffix()], z).1 {
        return None;
    }
    Some(wit)
}

pub fn tau_p2g(wit: &P2gWitness) -> Option<Word> {
    wit.tau()
}

pub fn shortest_p2g_critical_suffix(w: &[Letter], kind: P2gType, params: &GroupParams) -> Option<usize> {
    shortest_suffix(w, kind, kind.pair().m(params), &mut Meter::new())
}

/// Right-to-left scan over the suffixes of `w`, stopping at the first
/// critical one or as soon as no longer suffix can qualify.
pub(crate) fn shortest_suffix(w: &[Letter], kind: P2gType, m: u32, meter: &mut Meter) -> Option<usize> {
    let len = w.len();
    let last = *w.last()?;
    let (x, z) = (kind.x(), kind.z());
    if last.gen() == z {
        return None;
    }
    let trailing_b = last.gen() == Gen::B;
    let mut scan = SuffixScan::default();
    let mut s0: Option<usize> = None;
    let mut tail_z = [false, false];
    let mut last_z: Option<usize> = None;
    let mut next_b: Option<usize> = None;
    let mut b_run_end = len;
    // signs of z-letters between the current position and the next b
    let mut lead_z = [false, false];
    let mut s = len;
    let mut found = None;
    while s > 0 {
        s -= 1;
        meter.tick(1);
        let l = w[s];
        if s + 1 < len && w[s + 1] == l.inverse() {
            break;
        }
        if l.gen() != z {
            scan.push_front(l);
            if scan.exhausted(m) {
                break;
            }
        }
        if l.gen() == Gen::B {
            if !(next_b == Some(s + 1) && w[s + 1] == l) {
                b_run_end = s + 1;
            }
            next_b = Some(s);
            lead_z = [false, false];
        } else if l.gen() == z {
            lead_z[usize::from(!l.is_positive())] = true;
        }
        let Some(s0v) = s0 else {
            if trailing_b {
                if l.gen() == Gen::B {
                    continue;
                }
                if l.gen() != x {
                    return None;
                }
                // a suffix starting here would have an empty u_q
                s0 = Some(s + 1);
                continue;
            }
            if l.gen() == z {
                tail_z[usize::from(!l.is_positive())] = true;
            }
            if l.gen() == Gen::B {
                if tail_z[0] && tail_z[1] {
                    return None;
                }
                s0 = Some(s + 1);
            }
            continue;
        };
        if l.gen() == z {
            last_z.get_or_insert(s);
            continue;
        }
        let q0 = if l.gen() == x {
            match next_b {
                Some(q) => q,
                None => continue,
            }
        } else {
            b_run_end
        };
        if last_z.is_some_and(|t| q0 <= t) {
            break;
        }
        if q0 >= s0v {
            continue;
        }
        if l.gen() == Gen::B && w[q0].gen() != x {
            continue;
        }
        if l.gen() == x && lead_z[0] && lead_z[1] {
            continue;
        }
        if scan.critical(m).is_some() {
            found = Some(s);
            break;
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::is_critical_2gen;
    use crate::group::w;

    fn p(n: u32) -> GroupParams {
        GroupParams::new(n).unwrap()
    }

    pub(crate) fn all_reduced(alphabet: &[Letter], len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            let mut next = Vec::new();
            for u in &out {
                for &l in alphabet {
                    if u.last() != Some(&l.inverse()) {
                        let mut v = u.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
            out = next;
        }
        out
    }

    fn letters() -> Vec<Letter> {
        Gen::ALL.iter().flat_map(|g| [g.pos(), g.neg()]).collect()
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_p2g(&w("acbbbCA"), P2gType::Ab, &p(5)).unwrap();
        assert_eq!(d.middle, 2..5);
        assert_eq!((d.alpha, d.beta), (1, -1));
        assert_eq!(d.hat, w("abbbA"));
        assert!(decompose_p2g(&w("ca"), P2gType::Ab, &p(5)).is_none());
        let d = decompose_p2g(&w("bccbcBaaC"), P2gType::Bc, &p(5)).unwrap();
        assert_eq!((d.alpha, d.beta), (0, 2));
    }

    #[test]
    fn tau_examples() {
        let c = is_p2g_critical(&w("acbbbCA"), P2gType::Ab, &p(5)).unwrap();
        assert_eq!(c.tau().unwrap(), w("cBaaabC"));
        assert_eq!(c.carry().unwrap(), w("bC"));
        let c = is_p2g_critical(&w("abbbA"), P2gType::Ab, &p(5)).unwrap();
        assert_eq!(c.tau().unwrap(), w("Baaab"));
        assert_eq!(
            is_p2g_critical(&w("aba"), P2gType::Ab, &p(5)).unwrap().tau().unwrap(),
            w("bab")
        );
        // the hat abA is critical: abA = Bab
        assert!(is_p2g_critical(&w("acbCA"), P2gType::Ab, &p(5)).is_some());
        assert!(is_p2g_critical(&w("acbbCA"), P2gType::Ab, &p(5)).is_some());
    }

    #[test]
    fn hat_of_mixed_block_example_is_not_critical() {
        // for n >= 5 the leading run "bc" is shorter than the positive run "cbc"
        for n in [5, 6, 7] {
            assert!(is_p2g_critical(&w("bccbcBaaC"), P2gType::Bc, &p(n)).is_none());
        }
    }

    #[test]
    fn suffix_examples() {
        assert_eq!(
            shortest_p2g_critical_suffix(&w("bacbbbCA"), P2gType::Ab, &p(5)),
            Some(1)
        );
        assert_eq!(shortest_p2g_critical_suffix(&w("ab"), P2gType::Ab, &p(5)), None);
        assert_eq!(shortest_p2g_critical_suffix(&w("caba"), P2gType::Ab, &p(5)), Some(1));
    }

    #[test]
    fn exhaustive_against_definitions() {
        let alpha = letters();
        for n in [5, 6] {
            let params = p(n);
            for len in 1..=7 {
                for u in all_reduced(&alpha, len) {
                    for kind in [P2gType::Ab, P2gType::Bc] {
                        let pair = kind.pair();
                        let crit = is_p2g_critical(&u, kind, &params);
                        if u.iter().all(|l| pair.contains(l.gen())) {
                            let two = is_critical_2gen(&u, pair, &params);
                            assert_eq!(crit.is_some(), two.is_some(), "{}", Word::from(&u[..]));
                            if let (Some(c), Some(t)) = (&crit, &two) {
                                assert_eq!(c.tau().unwrap(), t.tau());
                            }
                        }
                        if let Some(c) = &crit {
                            let mut joined = c.word[c.prefix()].to_vec();
                            joined.extend_from_slice(&c.word[c.middle.clone()]);
                            joined.extend_from_slice(&c.word[c.suffix()]);
                            assert_eq!(joined, u);
                            let t = c.tau().unwrap();
                            assert_eq!(t.len(), u.len());
                            let (f, l) = (u[0].gen(), u[len - 1].gen());
                            assert!(pair.contains(f) && pair.contains(l));
                            assert_ne!(t[0].gen(), f);
                            assert_ne!(t[len - 1].gen(), l);
                            assert_eq!(pair.contains(t[0].gen()), c.alpha == 0);
                            assert_eq!(pair.contains(t[len - 1].gen()), c.beta == 0);
                        }
                        let brute = (0..len)
                            .rev()
                            .find(|&s| is_p2g_critical(&u[s..], kind, &params).is_some());
                        assert_eq!(
                            shortest_p2g_critical_suffix(&u, kind, &params),
                            brute,
                            "{} {kind}",
                            Word::from(&u[..])
                        );
                    }
                }
            }
        }
    }
}
