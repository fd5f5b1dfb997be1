//! Letters, words and the presentation parameters of G(n).

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, ParseError};

/// One of the three standard generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
    C,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::A, Gen::B, Gen::C];

    pub fn pos(self) -> Letter {
        Letter::new(self, true)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Letter {
        Letter::new(self, false)
    }

    pub fn signed(self, positive: bool) -> Letter {
        Letter::new(self, positive)
    }

    /// True when the two generators commute in G(n): equal, or the pair {a,c}.
    pub fn commutes(self, other: Gen) -> bool {
        self == other || matches!((self, other), (Gen::A, Gen::C) | (Gen::C, Gen::A))
    }

    fn index(self) -> u8 {
        self as u8
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
        };
        write!(f, "{c}")
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u8);

impl Letter {
    pub fn new(gen: Gen, positive: bool) -> Letter {
        Letter(gen.index() << 1 | u8::from(!positive))
    }

    pub fn gen(self) -> Gen {
        match self.0 >> 1 {
            0 => Gen::A,
            1 => Gen::B,
            _ => Gen::C,
        }
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn sign(self) -> i32 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter(self.0 ^ 1)
    }

    pub fn commutes(self, other: Letter) -> bool {
        self.gen().commutes(other.gen())
    }

    /// Same sign, different generator.
    pub fn with_gen(self, gen: Gen) -> Letter {
        Letter::new(gen, self.is_positive())
    }

    /// Dense code in `1..=6`, never zero, used for packing words.
    pub fn code(self) -> u8 {
        self.0 + 1
    }

    pub fn from_code(code: u8) -> Letter {
        debug_assert!((1..=6).contains(&code));
        Letter(code - 1)
    }

    pub fn to_char(self) -> char {
        let c = (b'a' + (self.0 >> 1)) as char;
        if self.is_positive() {
            c
        } else {
            c.to_ascii_uppercase()
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        let gen = match c.to_ascii_lowercase() {
            'a' => Gen::A,
            'b' => Gen::B,
            'c' => Gen::C,
            _ => return None,
        };
        Some(Letter::new(gen, c.is_ascii_lowercase()))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Parameters of the presentation `<a,b,c | aba=bab, ac=ca, (bc)_n=(cb)_n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    n: u32,
    allow_small_n: bool,
}

impl GroupParams {
    /// Parameters for `n >= 5`, the range where the reduction is complete.
    pub fn new(n: u32) -> Result<GroupParams, Error> {
        Self::build(n, false)
    }

    /// Also accepts `n` in {3, 4}; geodesic guarantees do not hold there.
    pub fn allowing_small(n: u32) -> Result<GroupParams, Error> {
        Self::build(n, true)
    }

    pub fn build(n: u32, allow_small_n: bool) -> Result<GroupParams, Error> {
        let min = if allow_small_n { 3 } else { 5 };
        if n < min {
            return Err(Error::Params { n, min });
        }
        Ok(GroupParams { n, allow_small_n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn allow_small_n(&self) -> bool {
        self.allow_small_n
    }

    /// Coxeter exponent of an unordered pair of distinct generators.
    pub fn m(&self, x: Gen, y: Gen) -> u32 {
        match (x, y) {
            (Gen::A, Gen::B) | (Gen::B, Gen::A) => 3,
            (Gen::A, Gen::C) | (Gen::C, Gen::A) => 2,
            (Gen::B, Gen::C) | (Gen::C, Gen::B) => self.n,
            _ => 1,
        }
    }
}

impl Default for GroupParams {
    fn default() -> Self {
        GroupParams {
            n: 5,
            allow_small_n: false,
        }
    }
}

/// An unordered pair of distinct generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pair {
    lo: Gen,
    hi: Gen,
}

impl Pair {
    pub const AB: Pair = Pair { lo: Gen::A, hi: Gen::B };
    pub const BC: Pair = Pair { lo: Gen::B, hi: Gen::C };
    pub const AC: Pair = Pair { lo: Gen::A, hi: Gen::C };

    pub fn new(x: Gen, y: Gen) -> Result<Pair, Error> {
        if x == y {
            return Err(Error::InvalidArgument(format!(
                "pair needs two distinct generators, got {x}{y}"
            )));
        }
        Ok(if x < y {
            Pair { lo: x, hi: y }
        } else {
            Pair { lo: y, hi: x }
        })
    }

    pub fn gens(self) -> (Gen, Gen) {
        (self.lo, self.hi)
    }

    pub fn contains(self, g: Gen) -> bool {
        g == self.lo || g == self.hi
    }

    /// The member of the pair that is not `g`.
    pub fn other(self, g: Gen) -> Gen {
        if g == self.lo {
            self.hi
        } else {
            self.lo
        }
    }

    pub fn m(self, params: &GroupParams) -> u32 {
        params.m(self.lo, self.hi)
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A finite sequence of letters, not necessarily freely reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend_from_slice(&mut self, ls: &[Letter]) {
        self.0.extend_from_slice(ls);
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        invert(&self.0)
    }

    pub fn free_reduce(&self) -> Word {
        free_reduce(&self.0)
    }

    pub fn is_freely_reduced(&self) -> bool {
        is_freely_reduced(&self.0)
    }

    /// `x^k` as a word, `x` positive or negative according to the sign of `k`.
    pub fn power(gen: Gen, k: i32) -> Word {
        let l = gen.signed(k > 0);
        Word(vec![l; k.unsigned_abs() as usize])
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", format_word(self))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_word(self))
    }
}

/// Which end of an alternating word is pinned to the given letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Anchor {
    Start,
    End,
}

/// `len(x,y)` (starting with `x`) or `(y,x)len` (ending with `x`).
pub fn make_alternating(x: Letter, y: Letter, len: usize, anchor: Anchor) -> Result<Word, Error> {
    if x.gen() == y.gen() {
        return Err(Error::InvalidArgument(format!(
            "alternating word needs distinct names, got {x} and {y}"
        )));
    }
    if x.is_positive() != y.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "alternating word needs equal signs, got {x} and {y}"
        )));
    }
    Ok(alternating(x, y, len, anchor))
}

pub(crate) fn alternating(x: Letter, y: Letter, len: usize, anchor: Anchor) -> Word {
    let mut v = Vec::with_capacity(len);
    push_alternating(&mut v, x, y, len, anchor);
    Word(v)
}

pub(crate) fn push_alternating(out: &mut Vec<Letter>, x: Letter, y: Letter, len: usize, anchor: Anchor) {
    let first = match anchor {
        Anchor::Start => x,
        Anchor::End if len % 2 == 1 => x,
        Anchor::End => y,
    };
    let second = if first == x { y } else { x };
    for i in 0..len {
        out.push(if i % 2 == 0 { first } else { second });
    }
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

pub fn is_freely_reduced(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] != p[1].inverse())
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inverse()).collect()
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

/// Parses `a`..`c`, `A`..`C`, and `x^k` / `x^-k` powers; whitespace is ignored.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out: Vec<Letter> = Vec::new();
    let mut last: Option<Letter> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '^' {
            let base = last.ok_or(ParseError::MalformedExponent { pos: i })?;
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_whitespace() {
                i += 1;
            }
            let negative = i < chars.len() && chars[i] == '-';
            if negative {
                i += 1;
            }
            let digits_from = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i == digits_from {
                return Err(ParseError::MalformedExponent { pos: start });
            }
            let digits: String = chars[digits_from..i].iter().collect();
            let k: usize = digits
                .parse()
                .map_err(|_| ParseError::MalformedExponent { pos: start })?;
            // the base letter was already emitted once
            out.pop();
            let l = if negative { base.inverse() } else { base };
            out.extend(std::iter::repeat_n(l, k));
            last = None;
            continue;
        }
        let l = Letter::from_char(c).ok_or(ParseError::UnknownSymbol { pos: i, symbol: c })?;
        out.push(l);
        last = Some(l);
        i += 1;
    }
    Ok(Word(out))
}

#[cfg(test)]
pub(crate) fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}
