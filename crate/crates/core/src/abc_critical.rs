//! Critical words involving all three generators, built from a P2G word of
//! type `{a,b}` on the right and one of type `{b,c}` on the left.

use crate::dihedral::{bab_form, SuffixScan};
use crate::group::{Gen, GroupParams, Letter, Pair, Word};
use crate::meter::Meter;
use crate::p2g::{decompose_p2g, is_p2g_critical, P2gType, P2gWitness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbcWitness {
    pub word: Word,
    /// Start of `u_q`; `u_p` is the prefix before it.
    pub q_start: usize,
    /// Start of `u_r`, which runs to the end of the word.
    pub r_start: usize,
    pub ur: P2gWitness,
    /// Exponents with `hat(u_r)` equal to `b^ii a^jj b^kk`.
    pub ii: i32,
    pub jj: i32,
    pub kk: i32,
    pub sharp: Word,
    pub sharp_witness: P2gWitness,
    pub epsilon: i32,
    /// Exponent of `a` taken from the `{b,c}` part.
    pub alpha: i32,
    /// Exponent of `c` taken from `u_r`.
    pub beta: i32,
}

impl AbcWitness {
    pub fn tau(&self) -> Word {
        let t = self.sharp_witness.hat_tau().expect("critical witness");
        let mut out = Word::power(Gen::A, self.alpha).into_letters();
        out.extend_from_slice(&t[..t.len() - 1]);
        out.extend_from_slice(&Word::power(Gen::A, self.jj));
        out.push(Gen::C.signed(self.epsilon > 0));
        out.extend_from_slice(&Word::power(Gen::B, self.kk));
        out.extend_from_slice(&Word::power(Gen::C, self.beta));
        Word::from_letters(out)
    }

    /// `c^eps b^kk beta`, carried into the next link of a reducing sequence.
    pub fn carry(&self) -> Word {
        let mut out = vec![Gen::C.signed(self.epsilon > 0)];
        out.extend_from_slice(&Word::power(Gen::B, self.kk));
        out.extend_from_slice(&Word::power(Gen::C, self.beta));
        Word::from_letters(out)
    }
}

pub fn tau_abc(wit: &AbcWitness) -> Word {
    wit.tau()
}

fn pure(w: &[Letter], g: Gen) -> bool {
    let mut signs = w.iter().filter(|l| l.gen() == g).map(|l| l.is_positive());
    match signs.next() {
        Some(s) => signs.all(|t| t == s),
        None => true,
    }
}

/// Analysis of a candidate `u_r`.
struct Tail {
    ur: P2gWitness,
    ii: i32,
    jj: i32,
    kk: i32,
}

fn tail(ur: &[Letter], params: &GroupParams) -> Option<Tail> {
    if ur.first()?.gen() != Gen::A || ur[ur.len() - 1].gen() != Gen::A {
        return None;
    }
    let wit = decompose_p2g(ur, P2gType::Ab, params)?;
    if !pure(&ur[wit.prefix()], Gen::C) || !pure(&ur[wit.suffix()], Gen::C) {
        return None;
    }
    let bab = bab_form(&wit.hat)?;
    Some(Tail {
        ur: wit,
        ii: bab.i,
        jj: bab.j,
        kk: bab.k,
    })
}

fn sharp_word(head: &[Letter], t: &Tail) -> Word {
    let mut s = Word::from(head);
    s.extend_from_slice(&Word::power(Gen::C, t.ur.alpha));
    s.extend_from_slice(&Word::power(Gen::B, t.ii));
    s
}

fn finish(w: &[Letter], q_start: usize, r_start: usize, t: Tail, params: &GroupParams) -> Option<AbcWitness> {
    let sharp = sharp_word(&w[..r_start], &t);
    let sw = is_p2g_critical(&sharp, P2gType::Bc, params)?;
    let ht = sw.hat_tau()?;
    let last = ht[ht.len() - 1];
    if last.gen() != Gen::C {
        return None;
    }
    Some(AbcWitness {
        word: Word::from(w),
        q_start,
        r_start,
        epsilon: last.sign(),
        alpha: sw.alpha,
        beta: t.ur.beta,
        ii: t.ii,
        jj: t.jj,
        kk: t.kk,
        ur: t.ur,
        sharp,
        sharp_witness: sw,
    })
}

/// Split points `(start of u_q, start of u_r)` forced by the first letter.
fn split(w: &[Letter]) -> Option<(usize, usize)> {
    let first = *w.first()?;
    let q = match first.gen() {
        Gen::B => {
            let end = w.iter().position(|&l| l != first)?;
            if w[end].gen() != Gen::C {
                return None;
            }
            end
        }
        Gen::C => w.iter().position(|l| l.gen() == Gen::B)?,
        Gen::A => return None,
    };
    let r = q + w[q..].iter().position(|l| l.gen() == Gen::A)?;
    Some((q, r))
}

pub fn is_abc_critical(w: &[Letter], params: &GroupParams) -> Option<AbcWitness> {
    if !crate::group::is_freely_reduced(w) {
        return None;
    }
    let (q, r) = split(w)?;
    let t = tail(&w[r..], params)?;
    finish(w, q, r, t, params)
}

pub fn shortest_abc_critical_suffix(w: &[Letter], params: &GroupParams) -> Option<usize> {
    shortest_suffix(w, params, &mut Meter::new())
}

/// Right-to-left scan. The start of `u_r` only moves left as the suffix
/// grows, so its analysis is cached and the hat of `u^#` is scanned
/// incrementally from the right for each such start.
pub(crate) fn shortest_suffix(w: &[Letter], params: &GroupParams, meter: &mut Meter) -> Option<usize> {
    let len = w.len();
    if w.last()?.gen() != Gen::A {
        return None;
    }
    let n = Pair::BC.m(params);
    let mut latest_a: Option<usize> = None;
    let mut cur_r: Option<usize> = None;
    let mut sharp_scan = SuffixScan::default();
    let mut sharp_alive = false;
    let mut s = len;
    while s > 0 {
        s -= 1;
        meter.tick(1);
        let l = w[s];
        if s + 1 < len && w[s + 1] == l.inverse() {
            break;
        }
        match l.gen() {
            Gen::A => {
                latest_a = Some(s);
                continue;
            }
            Gen::B if latest_a != cur_r => {
                let r = latest_a.expect("last letter has name a");
                // every longer u_r contains this hat as a suffix
                meter.tick(len - r);
                let hat: Vec<Letter> = w[r..].iter().copied().filter(|l| l.gen() != Gen::C).collect();
                if SuffixScan::of(&hat).exhausted(3) {
                    break;
                }
                cur_r = Some(r);
                let cur_tail = tail(&w[r..], params);
                sharp_scan = SuffixScan::default();
                sharp_alive = false;
                if let Some(t) = &cur_tail {
                    sharp_alive = true;
                    for l in Word::power(Gen::B, t.ii).iter().rev() {
                        sharp_scan.push_front(*l);
                    }
                    for l in Word::power(Gen::C, t.ur.alpha).iter() {
                        sharp_scan.push_front(*l);
                    }
                    for &l in w[s + 1..r].iter().rev() {
                        sharp_scan.push_front(l);
                    }
                    meter.tick(r - s);
                }
            }
            _ => {}
        }
        if !sharp_alive {
            continue;
        }
        if l.gen() != Gen::A {
            sharp_scan.push_front(l);
            if sharp_scan.exhausted(n) {
                sharp_alive = false;
                continue;
            }
        }
        if l.gen() == Gen::A || sharp_scan.critical(n).is_none() {
            continue;
        }
        meter.tick(len - s);
        if is_abc_critical(&w[s..], params).is_some() {
            return Some(s);
        }
    }
    None
}
