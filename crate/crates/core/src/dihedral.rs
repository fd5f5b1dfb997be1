//! Two-generator machinery: alternation profiles, critical words, the
//! involution on them, and the `b^i a^j b^k` transformation test.

use std::collections::VecDeque;
use std::ops::Range;

use crate::error::Error;
use crate::group::{push_alternating, Anchor, Gen, GroupParams, Letter, Pair, Word};

/// Longest positive and negative alternating runs, capped at `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Profile {
    pub p: u32,
    pub n: u32,
    pub m: u32,
}

impl Profile {
    pub fn sum(&self) -> u32 {
        self.p + self.n
    }
}

/// Incremental statistics of a word that grows at its front, so that every
/// suffix of a longer word can be examined in one right-to-left pass.
#[derive(Debug, Clone, Default)]
pub(crate) struct SuffixScan {
    len: usize,
    reduced: bool,
    front: Option<Letter>,
    back: Option<Letter>,
    front_run: usize,
    back_run: usize,
    back_closed: bool,
    max: [usize; 2],
    excl_front: [usize; 2],
    excl_back: [usize; 2],
}

fn side(l: Letter) -> usize {
    usize::from(!l.is_positive())
}

impl SuffixScan {
    pub(crate) fn of(w: &[Letter]) -> SuffixScan {
        let mut s = SuffixScan::default();
        for &l in w.iter().rev() {
            s.push_front(l);
        }
        s
    }

    pub(crate) fn push_front(&mut self, l: Letter) {
        let Some(f) = self.front else {
            *self = SuffixScan {
                len: 1,
                reduced: true,
                front: Some(l),
                back: Some(l),
                front_run: 1,
                back_run: 1,
                back_closed: false,
                max: [0, 0],
                excl_front: [0, 0],
                excl_back: [0, 0],
            };
            self.max[side(l)] = 1;
            return;
        };
        if l == f.inverse() {
            self.reduced = false;
        }
        let extends = l.is_positive() == f.is_positive() && l.gen() != f.gen();
        if extends {
            self.front_run += 1;
        } else {
            let s = side(f);
            self.excl_front[s] = self.excl_front[s].max(self.front_run);
            self.front_run = 1;
        }
        if !self.back_closed {
            if extends {
                self.back_run = self.front_run;
            } else {
                self.back_closed = true;
            }
        }
        let s = side(l);
        self.max[s] = self.max[s].max(self.front_run);
        if self.back_closed {
            self.excl_back[s] = self.excl_back[s].max(self.front_run);
        }
        self.front = Some(l);
        self.len += 1;
    }

    pub(crate) fn is_reduced(&self) -> bool {
        self.len == 0 || self.reduced
    }

    pub(crate) fn profile(&self, m: u32) -> Profile {
        Profile {
            p: (self.max[0] as u32).min(m),
            n: (self.max[1] as u32).min(m),
            m,
        }
    }

    /// Once this holds for a suffix it holds for every longer one.
    pub(crate) fn exhausted(&self, m: u32) -> bool {
        !self.is_reduced() || self.profile(m).sum() > m
    }

    /// Shape and block lengths when the scanned word is critical.
    pub(crate) fn critical(&self, m: u32) -> Option<(Shape, usize, usize)> {
        if self.len == 0 || !self.reduced {
            return None;
        }
        let prof = self.profile(m);
        if prof.sum() != m {
            return None;
        }
        let mu = m as usize;
        let (front, back) = (self.front?, self.back?);
        if self.max[1] == 0 {
            if self.front_run == mu && self.excl_front[0] < mu {
                return Some((Shape::PositiveLeft, mu, 0));
            }
            if self.back_run == mu && self.excl_back[0] < mu {
                return Some((Shape::PositiveRight, 0, mu));
            }
            return None;
        }
        if self.max[0] == 0 {
            if self.front_run == mu && self.excl_front[1] < mu {
                return Some((Shape::NegativeLeft, mu, 0));
            }
            if self.back_run == mu && self.excl_back[1] < mu {
                return Some((Shape::NegativeRight, 0, mu));
            }
            return None;
        }
        let (p, n) = (self.max[0], self.max[1]);
        if front.is_positive() && !back.is_positive() && self.front_run == p && self.back_run == n {
            return Some((Shape::PosNeg, p, n));
        }
        if !front.is_positive() && back.is_positive() && self.front_run == n && self.back_run == p {
            return Some((Shape::NegPos, n, p));
        }
        None
    }
}

fn check_pair(w: &[Letter], pair: Pair) -> Result<(), Error> {
    match w.iter().position(|l| !pair.contains(l.gen())) {
        Some(i) => Err(Error::InvalidArgument(format!(
            "letter {} at index {i} is outside the pair {pair}",
            w[i]
        ))),
        None => Ok(()),
    }
}

pub fn profile(w: &[Letter], pair: Pair, params: &GroupParams) -> Result<Profile, Error> {
    check_pair(w, pair)?;
    Ok(SuffixScan::of(w).profile(pair.m(params)))
}

/// A freely reduced two-generator word is geodesic exactly when its capped
/// profile satisfies `p + n <= m`.
pub fn is_geodesic_2gen(w: &[Letter], pair: Pair, params: &GroupParams) -> Result<bool, Error> {
    check_pair(w, pair)?;
    let scan = SuffixScan::of(w);
    Ok(scan.is_reduced() && scan.profile(pair.m(params)).sum() <= pair.m(params))
}

/// Layout of a critical word: which end carries the full alternating block,
/// or, for mixed-sign words, which sign leads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    PositiveLeft,
    PositiveRight,
    NegativeLeft,
    NegativeRight,
    PosNeg,
    NegPos,
}

/// Evidence that a two-generator word is critical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGenWitness {
    pub pair: Pair,
    pub shape: Shape,
    pub profile: Profile,
    /// Length of the alternating block at the front (zero for right-anchored shapes).
    pub lead: usize,
    /// Length of the alternating block at the back.
    pub trail: usize,
    pub word: Word,
}

impl TwoGenWitness {
    pub fn xi(&self) -> Range<usize> {
        self.lead..self.word.len() - self.trail
    }

    pub fn tau(&self) -> Word {
        tau_2gen(self)
    }
}

pub fn is_critical_2gen(w: &[Letter], pair: Pair, params: &GroupParams) -> Option<TwoGenWitness> {
    if w.iter().any(|l| !pair.contains(l.gen())) {
        return None;
    }
    let m = pair.m(params);
    let scan = SuffixScan::of(w);
    let (shape, lead, trail) = scan.critical(m)?;
    Some(TwoGenWitness {
        pair,
        shape,
        profile: scan.profile(m),
        lead,
        trail,
        word: Word::from(w),
    })
}

pub(crate) fn delta_in(l: Letter, pair: Pair, m: u32) -> Letter {
    if m % 2 == 1 {
        l.with_gen(pair.other(l.gen()))
    } else {
        l
    }
}

/// The letter equal to the conjugate of `l` by the pair's Garside element.
pub fn delta(l: Letter, pair: Pair, params: &GroupParams) -> Result<Letter, Error> {
    check_pair(&[l], pair)?;
    Ok(delta_in(l, pair, pair.m(params)))
}

pub fn delta_word(w: &[Letter], pair: Pair, params: &GroupParams) -> Result<Word, Error> {
    check_pair(w, pair)?;
    let m = pair.m(params);
    Ok(w.iter().map(|&l| delta_in(l, pair, m)).collect())
}

fn partner(l: Letter, pair: Pair) -> Letter {
    l.with_gen(pair.other(l.gen()))
}

pub fn tau_2gen(wit: &TwoGenWitness) -> Word {
    let mut out = Vec::with_capacity(wit.word.len());
    tau_into(
        &wit.word,
        wit.pair,
        wit.profile.m,
        wit.shape,
        wit.lead,
        wit.trail,
        &mut out,
    );
    Word::from_letters(out)
}

pub(crate) fn tau_into(
    w: &[Letter],
    pair: Pair,
    m: u32,
    shape: Shape,
    lead: usize,
    trail: usize,
    out: &mut Vec<Letter>,
) {
    let mu = m as usize;
    let xi = &w[lead..w.len() - trail];
    let push_delta = |out: &mut Vec<Letter>| out.extend(xi.iter().map(|&l| delta_in(l, pair, m)));
    match shape {
        Shape::PositiveLeft | Shape::NegativeLeft | Shape::PositiveRight | Shape::NegativeRight if xi.is_empty() => {
            let x = w[0];
            push_alternating(out, partner(x, pair), x, mu, Anchor::Start);
        }
        Shape::PositiveLeft | Shape::NegativeLeft => {
            let z = xi[xi.len() - 1];
            push_delta(out);
            push_alternating(out, partner(z, pair), z, mu, Anchor::End);
        }
        Shape::PositiveRight | Shape::NegativeRight => {
            let z = xi[0];
            push_alternating(out, partner(z, pair), z, mu, Anchor::Start);
            push_delta(out);
        }
        Shape::PosNeg => {
            let x = w[0];
            let t_inv = w[w.len() - 1];
            push_alternating(out, partner(x, pair).inverse(), x.inverse(), trail, Anchor::Start);
            push_delta(out);
            push_alternating(out, partner(t_inv, pair).inverse(), t_inv.inverse(), lead, Anchor::End);
        }
        Shape::NegPos => {
            let x = w[0].inverse();
            let t = w[w.len() - 1];
            push_alternating(out, partner(x, pair), x, trail, Anchor::Start);
            push_delta(out);
            push_alternating(out, partner(t, pair).inverse(), t.inverse(), lead, Anchor::End);
        }
    }
}

/// Start index of the shortest critical suffix of `w` over `pair`.
pub fn shortest_critical_suffix_2gen(w: &[Letter], pair: Pair, params: &GroupParams) -> Option<usize> {
    let m = pair.m(params);
    let mut scan = SuffixScan::default();
    for s in (0..w.len()).rev() {
        if !pair.contains(w[s].gen()) {
            return None;
        }
        scan.push_front(w[s]);
        if scan.exhausted(m) {
            return None;
        }
        if scan.critical(m).is_some() {
            return Some(s);
        }
    }
    None
}

/// Exponents of a word `b^i a^j b^k` reached from an `{a,b}`-word by
/// two-generator moves, together with the spans those moves touched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BabForm {
    pub i: i32,
    pub j: i32,
    pub k: i32,
    pub moves: Vec<Range<usize>>,
}

impl BabForm {
    pub fn word(&self) -> Word {
        let mut w = Word::power(Gen::B, self.i);
        w.extend_from_slice(&Word::power(Gen::A, self.j));
        w.extend_from_slice(&Word::power(Gen::B, self.k));
        w
    }

    fn signed(i: i32, j: i32, k: i32) -> BabForm {
        BabForm {
            i,
            j,
            k,
            moves: Vec::new(),
        }
    }
}

/// The part of the working word still being transformed: explicit letters
/// at both ends around an untouched slice read through the `a <-> b` swap.
struct Middle<'a> {
    src: &'a [Letter],
    front: VecDeque<Letter>,
    lo: usize,
    hi: usize,
    back: VecDeque<Letter>,
    flip: bool,
}

impl<'a> Middle<'a> {
    fn len(&self) -> usize {
        self.front.len() + (self.hi - self.lo) + self.back.len()
    }

    fn read(&self, l: Letter) -> Letter {
        if self.flip {
            partner(l, Pair::AB)
        } else {
            l
        }
    }

    fn at(&self, k: usize) -> Letter {
        let f = self.front.len();
        let mid = self.hi - self.lo;
        if k < f {
            self.front[k]
        } else if k < f + mid {
            self.read(self.src[self.lo + k - f])
        } else {
            self.back[k - f - mid]
        }
    }

    fn at_back(&self, k: usize) -> Letter {
        self.at(self.len() - 1 - k)
    }

    fn pop_front(&mut self) -> Letter {
        if let Some(l) = self.front.pop_front() {
            return l;
        }
        if self.lo < self.hi {
            self.lo += 1;
            return self.read(self.src[self.lo - 1]);
        }
        self.back.pop_front().expect("pop from empty middle")
    }

    fn pop_back(&mut self) -> Letter {
        if let Some(l) = self.back.pop_back() {
            return l;
        }
        if self.lo < self.hi {
            self.hi -= 1;
            return self.read(self.src[self.hi]);
        }
        self.front.pop_back().expect("pop from empty middle")
    }

    fn apply_delta(&mut self) {
        for l in self.front.iter_mut().chain(self.back.iter_mut()) {
            *l = partner(*l, Pair::AB);
        }
        self.flip = !self.flip;
    }
}

/// Decides whether an `{a,b}`-word with first and last letter named `a` can be
/// carried by two-generator moves to `b^i a^j b^k` with `i, j, k` nonzero.
pub fn to_bab_form(v: &[Letter]) -> Result<Option<BabForm>, Error> {
    check_pair(v, Pair::AB)?;
    match (v.first(), v.last()) {
        (Some(f), Some(l)) if f.gen() == Gen::A && l.gen() == Gen::A => {}
        _ => return Err(Error::InvalidArgument("first and last letters must have name a".into())),
    }
    Ok(bab_form(v))
}

pub(crate) fn bab_form(v: &[Letter]) -> Option<BabForm> {
    let scan = SuffixScan::of(v);
    if !scan.is_reduced() {
        return None;
    }
    let prof = scan.profile(3);
    if prof.sum() != 3 {
        return None;
    }
    let len = v.len();
    if prof.n == 0 || prof.p == 0 {
        return signed_bab_form(v, prof.n == 0);
    }
    let (shape, _, _) = scan.critical(3)?;
    debug_assert!(matches!(shape, Shape::PosNeg | Shape::NegPos));

    let mut mid = Middle {
        src: v,
        front: VecDeque::new(),
        lo: 0,
        hi: len,
        back: VecDeque::new(),
        flip: false,
    };
    let (mut i, mut k) = (0i32, 0i32);
    let mut moves = Vec::new();
    loop {
        let (f, b) = (mid.at(0), mid.at_back(0));
        let n = mid.len();
        // blocks of the mixed-sign critical form, read off the second letters
        let second_alternates = n >= 2 && mid.at(1) == partner(f, Pair::AB);
        let penult_alternates = n >= 2 && mid.at_back(1) == partner(b, Pair::AB);
        let (lead, trail) = match (second_alternates, penult_alternates) {
            (true, false) => (2, 1),
            (false, true) => (1, 2),
            _ => return None,
        };
        if lead + trail > n {
            return None;
        }
        let start = i.unsigned_abs() as usize;
        moves.push(start..start + n);

        let mut new_front = Vec::with_capacity(3);
        let mut new_back = Vec::with_capacity(3);
        if f.is_positive() {
            // p(x,y) xi (z^-1,t^-1)_n  ->  n(y^-1,x^-1) d(xi) (t,z)_p
            push_alternating(
                &mut new_front,
                partner(f, Pair::AB).inverse(),
                f.inverse(),
                trail,
                Anchor::Start,
            );
            push_alternating(
                &mut new_back,
                partner(b, Pair::AB).inverse(),
                b.inverse(),
                lead,
                Anchor::End,
            );
        } else {
            // n(x^-1,y^-1) xi (z,t)_p  ->  p(y,x) d(xi) (t^-1,z^-1)_n
            push_alternating(
                &mut new_front,
                partner(f, Pair::AB).inverse(),
                f.inverse(),
                trail,
                Anchor::Start,
            );
            push_alternating(
                &mut new_back,
                partner(b, Pair::AB).inverse(),
                b.inverse(),
                lead,
                Anchor::End,
            );
        }
        for _ in 0..lead {
            mid.pop_front();
        }
        for _ in 0..trail {
            mid.pop_back();
        }
        mid.apply_delta();
        for &l in new_front.iter().rev() {
            mid.front.push_front(l);
        }
        mid.back.extend(new_back);

        while mid.len() > 0 && mid.at(0).gen() == Gen::B {
            let l = mid.pop_front();
            if i != 0 && i.signum() != l.sign() {
                return None;
            }
            i += l.sign();
        }
        while mid.len() > 0 && mid.at_back(0).gen() == Gen::B {
            let l = mid.pop_back();
            if k != 0 && k.signum() != l.sign() {
                return None;
            }
            k += l.sign();
        }
        if mid.len() == 0 || i == 0 || k == 0 {
            return None;
        }
        let (f, b) = (mid.at(0), mid.at_back(0));
        if f == b {
            let n = mid.len();
            if (0..n).any(|t| mid.at(t) != f) {
                return None;
            }
            return Some(BabForm {
                i,
                j: f.sign() * n as i32,
                k,
                moves,
            });
        }
        if f != b.inverse() {
            return None;
        }
    }
}

/// Positive (or negative) words: only `a^k b a` and `a b a^i` qualify.
fn signed_bab_form(v: &[Letter], positive: bool) -> Option<BabForm> {
    let len = v.len();
    if len < 3 {
        return None;
    }
    let a = Gen::A.signed(positive);
    let b = Gen::B.signed(positive);
    let s = if positive { 1 } else { -1 };
    if v[len - 2] == b && v[len - 1] == a && v[..len - 2].iter().all(|&l| l == a) {
        return Some(BabForm::signed(s, s, s * (len as i32 - 2)));
    }
    if v[0] == a && v[1] == b && v[2..].iter().all(|&l| l == a) {
        return Some(BabForm::signed(s * (len as i32 - 2), s, s));
    }
    None
}

#[cfg(test)]
pub(crate) mod exact {
    //! Exact equality in a dihedral Artin group, used as an independent check:
    //! every word is rewritten as `D^-k P` with `P` positive, and positive
    //! words are compared by exhausting the single defining relation.

    use std::collections::{HashSet, VecDeque};

    use crate::group::{alternating, Anchor, Letter, Pair};

    fn garside(x: Letter, pair: Pair, m: u32) -> Vec<Letter> {
        // the Garside word ending in x
        alternating(x, x.with_gen(pair.other(x.gen())), m as usize, Anchor::End).into_letters()
    }

    fn normal(w: &[Letter], pair: Pair, m: u32) -> (usize, Vec<Letter>) {
        let mut k = 0;
        let mut pos: Vec<Letter> = Vec::new();
        for &l in w {
            if l.is_positive() {
                pos.push(l);
            } else {
                let x = l.inverse();
                let mut d = garside(x, pair, m);
                d.pop();
                if m % 2 == 1 {
                    for p in pos.iter_mut() {
                        *p = p.with_gen(pair.other(p.gen()));
                    }
                }
                k += 1;
                pos.extend(d);
            }
        }
        (k, pos)
    }

    fn positive_class(p: &[Letter], pair: Pair, m: u32) -> HashSet<Vec<Letter>> {
        let mu = m as usize;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(p.to_vec());
        queue.push_back(p.to_vec());
        while let Some(u) = queue.pop_front() {
            if u.len() < mu {
                continue;
            }
            for i in 0..=u.len() - mu {
                let x = u[i];
                let y = x.with_gen(pair.other(x.gen()));
                let block = alternating(x, y, mu, Anchor::Start);
                if u[i..i + mu] == block[..] {
                    let mut v = u.clone();
                    v[i..i + mu].copy_from_slice(&alternating(y, x, mu, Anchor::Start));
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    pub(crate) fn equal(u: &[Letter], v: &[Letter], pair: Pair, m: u32) -> bool {
        let (ku, mut pu) = normal(u, pair, m);
        let (kv, mut pv) = normal(v, pair, m);
        let x = pair.gens().0.pos();
        let d = garside(x, pair, m);
        let pad = |k: usize, p: &mut Vec<Letter>| {
            let mut pre = Vec::new();
            for _ in 0..k {
                pre.extend_from_slice(&d);
            }
            pre.extend_from_slice(p);
            *p = pre;
        };
        if ku > kv {
            pad(ku - kv, &mut pv);
        } else {
            pad(kv - ku, &mut pu);
        }
        if pu.len() != pv.len() {
            return false;
        }
        positive_class(&pu, pair, m).contains(&pv)
    }
}
