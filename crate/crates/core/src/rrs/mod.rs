//! Rightward reducing sequences: chains of overlapping critical words whose
//! left-to-right rewriting ends in a free cancellation.

mod enumerate;
mod search;

use std::fmt;
use std::ops::Range;

use serde::{Serialize, Serializer};

use crate::abc_critical::{is_abc_critical, AbcWitness};
use crate::group::{GroupParams, Letter, Word};
use crate::p2g::{is_p2g_critical, P2gType, P2gWitness};

pub use enumerate::{enumerate_all_rrs, MAX_ENUMERATION_LEN};
pub use search::{find_optimal_rrs, find_optimal_rrs_metered};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CriticalType {
    #[serde(rename = "p2g_ab")]
    P2gAb,
    #[serde(rename = "p2g_bc")]
    P2gBc,
    #[serde(rename = "abc")]
    Abc,
}

impl CriticalType {
    pub const ALL: [CriticalType; 3] = [CriticalType::P2gAb, CriticalType::P2gBc, CriticalType::Abc];

    pub(crate) fn p2g(kind: P2gType) -> CriticalType {
        match kind {
            P2gType::Ab => CriticalType::P2gAb,
            P2gType::Bc => CriticalType::P2gBc,
        }
    }
}

impl fmt::Display for CriticalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriticalType::P2gAb => "P2G {a,b}",
            CriticalType::P2gBc => "P2G {b,c}",
            CriticalType::Abc => "{a,b,c}",
        })
    }
}

/// A critical word together with its proof of criticality.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Critical {
    P2g(P2gWitness),
    Abc(AbcWitness),
}

impl Critical {
    pub fn of(u: &[Letter], kind: CriticalType, params: &GroupParams) -> Option<Critical> {
        match kind {
            CriticalType::P2gAb => is_p2g_critical(u, P2gType::Ab, params).map(Critical::P2g),
            CriticalType::P2gBc => is_p2g_critical(u, P2gType::Bc, params).map(Critical::P2g),
            CriticalType::Abc => is_abc_critical(u, params).map(Critical::Abc),
        }
    }

    pub fn kind(&self) -> CriticalType {
        match self {
            Critical::P2g(w) => CriticalType::p2g(w.kind),
            Critical::Abc(_) => CriticalType::Abc,
        }
    }

    pub fn word(&self) -> &Word {
        match self {
            Critical::P2g(w) => &w.word,
            Critical::Abc(w) => &w.word,
        }
    }

    pub fn tau(&self) -> Word {
        match self {
            Critical::P2g(w) => w.tau().expect("critical witness"),
            Critical::Abc(w) => w.tau(),
        }
    }

    /// Exponent of the leading commuting power.
    pub fn alpha(&self) -> i32 {
        match self {
            Critical::P2g(w) => w.alpha,
            Critical::Abc(w) => w.alpha,
        }
    }

    /// Exponent of the trailing commuting power.
    pub fn beta(&self) -> i32 {
        match self {
            Critical::P2g(w) => w.beta,
            Critical::Abc(w) => w.beta,
        }
    }

    /// Suffix of the image that begins the next link.
    pub fn carry(&self) -> Word {
        match self {
            Critical::P2g(w) => w.carry().expect("critical witness"),
            Critical::Abc(w) => w.carry(),
        }
    }

    fn event_kind(&self) -> EventKind {
        match self {
            Critical::P2g(w) if w.word.iter().all(|l| w.kind.pair().contains(l.gen())) => EventKind::Tau2Gen,
            Critical::P2g(_) => EventKind::TauP2g,
            Critical::Abc(_) => EventKind::TauAbc,
        }
    }
}

/// A validated reducing sequence for `host`.
///
/// `bounds` holds `m + 2` cut points: the start of `w_1`, the ends of
/// `w_1 .. w_m`, and the end of `w_{m+1}`, after which the final factor
/// begins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rrs {
    host: Word,
    bounds: Vec<usize>,
    links: Vec<Critical>,
    tail: Word,
}

impl Rrs {
    pub fn host(&self) -> &Word {
        &self.host
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn links(&self) -> &[Critical] {
        &self.links
    }

    /// The commuting word `x v` that is rotated before the cancellation.
    pub fn tail(&self) -> &Word {
        &self.tail
    }

    /// Number of critical links.
    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn kinds(&self) -> Vec<CriticalType> {
        self.links.iter().map(Critical::kind).collect()
    }

    /// Where the sequence starts, i.e. the length of the untouched prefix.
    pub fn start(&self) -> usize {
        self.bounds[0]
    }

    /// Span of the factor `w_i`, numbered from 1.
    pub fn factor(&self, i: usize) -> Range<usize> {
        self.bounds[i - 1]..self.bounds[i]
    }

    /// The factor `w_{m+1}`; for a sequence without links this is `w_1`.
    pub fn last_factor(&self) -> Range<usize> {
        let k = self.bounds.len();
        self.bounds[k - 2]..self.bounds[k - 1]
    }

    pub fn cancel_at(&self) -> usize {
        self.bounds[self.bounds.len() - 1]
    }
}

impl fmt::Display for Rrs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.bounds;
        write!(f, "{}", Word::from(&self.host[..b[0]]))?;
        for i in 1..b.len() {
            write!(f, "({})", Word::from(&self.host[b[i - 1]..b[i]]))?;
        }
        write!(f, "{}", Word::from(&self.host[b[b.len() - 1]..]))
    }
}

fn commuting_tail(u: &[Letter]) -> bool {
    match u.split_first() {
        Some((&x, rest)) => rest.iter().all(|l| l.commutes(x)),
        None => false,
    }
}

/// Validates a factorisation of `host` with the declared link types.
pub fn check_rrs(host: &[Letter], bounds: &[usize], kinds: &[CriticalType], params: &GroupParams) -> Option<Rrs> {
    let m = kinds.len();
    if bounds.len() != m + 2 || bounds.windows(2).any(|p| p[0] > p[1]) {
        return None;
    }
    let cancel = bounds[m + 1];
    if cancel >= host.len() || bounds[..=m].windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    if m == 0 && bounds[0] == bounds[1] {
        return None;
    }
    let mut links = Vec::with_capacity(m);
    let mut carry = Word::new();
    for (i, &kind) in kinds.iter().enumerate() {
        let u = carry.concat(&host[bounds[i]..bounds[i + 1]]);
        let link = Critical::of(&u, kind, params)?;
        carry = link.carry();
        links.push(link);
    }
    let tail = carry.concat(&host[bounds[m]..cancel]);
    if !commuting_tail(&tail) || tail[0] != host[cancel].inverse() {
        return None;
    }
    Some(Rrs {
        host: Word::from(host),
        bounds: bounds.to_vec(),
        links,
        tail,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EventKind {
    Tau2Gen,
    TauP2g,
    TauAbc,
    CommuteShift,
    FreeCancel,
}

impl EventKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::Tau2Gen => "tau_2gen",
            EventKind::TauP2g => "tau_p2g",
            EventKind::TauAbc => "tau_abc",
            EventKind::CommuteShift => "commute-shift",
            EventKind::FreeCancel => "free-cancel",
        }
    }
}

impl Serialize for EventKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// One rewriting step: the letters at `span` change from `before` to `after`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub kind: EventKind,
    #[serde(serialize_with = "span_pair")]
    pub span: Range<usize>,
    pub before: Word,
    pub after: Word,
}

fn span_pair<S: Serializer>(span: &Range<usize>, s: S) -> Result<S::Ok, S::Error> {
    [span.start, span.end].serialize(s)
}

/// Performs the rewrites of the sequence and the final cancellation.
pub fn apply_rrs(rrs: &Rrs) -> (Word, Vec<TraceEvent>) {
    let mut cur = rrs.host.clone().into_letters();
    let mut events = Vec::with_capacity(rrs.links.len() + 2);
    let mut carry_len = 0;
    for (i, link) in rrs.links.iter().enumerate() {
        let span = rrs.bounds[i] - carry_len..rrs.bounds[i + 1];
        debug_assert_eq!(&cur[span.clone()], &link.word()[..]);
        let after = link.tau();
        cur[span.clone()].copy_from_slice(&after);
        events.push(TraceEvent {
            kind: link.event_kind(),
            span,
            before: link.word().clone(),
            after,
        });
        carry_len = link.carry().len();
    }
    let m = rrs.links.len();
    let cancel = rrs.cancel_at();
    let span = rrs.bounds[m] - carry_len..cancel;
    debug_assert_eq!(&cur[span.clone()], &rrs.tail[..]);
    if rrs.tail.len() > 1 {
        let mut after = rrs.tail[1..].to_vec();
        after.push(rrs.tail[0]);
        cur[span.clone()].copy_from_slice(&after);
        events.push(TraceEvent {
            kind: EventKind::CommuteShift,
            span,
            before: rrs.tail.clone(),
            after: Word::from_letters(after),
        });
    }
    events.push(TraceEvent {
        kind: EventKind::FreeCancel,
        span: cancel - 1..cancel + 1,
        before: Word::from(&cur[cancel - 1..cancel + 1]),
        after: Word::new(),
    });
    debug_assert_eq!(cur[cancel - 1], cur[cancel].inverse());
    cur.drain(cancel - 1..cancel + 1);
    (Word::from_letters(cur), events)
}

/// Conditions (ii) and (iii) of optimality, which are local to the sequence.
pub fn satisfies_local_optimality(rrs: &Rrs) -> bool {
    let x = rrs.host[rrs.cancel_at()];
    if rrs.host[rrs.last_factor()].contains(&x) {
        return false;
    }
    rrs.links.windows(2).all(|pair| {
        let (prev, next) = (&pair[0], &pair[1]);
        if next.alpha() != 0 {
            return true;
        }
        match (prev.kind(), next.kind()) {
            (CriticalType::Abc, _) => true,
            (p, q) if p == q => false,
            (CriticalType::P2gBc, CriticalType::Abc) => false,
            _ => true,
        }
    })
}

/// Whether no sequence for the same host starts further right and the
/// local conditions hold. Small hosts are decided by enumeration, larger
/// ones through the search on the host with its last letter split off.
pub fn is_optimal(rrs: &Rrs, params: &GroupParams) -> bool {
    if !satisfies_local_optimality(rrs) {
        return false;
    }
    let host = &rrs.host;
    if host.len() <= MAX_ENUMERATION_LEN {
        let all = enumerate_all_rrs(host, params, host.len()).expect("within the size guard");
        return all.iter().all(|other| other.start() <= rrs.start());
    }
    let (last, prefix) = host.split_last().expect("nonempty host");
    match find_optimal_rrs(prefix, *last, params) {
        Some(best) => best.start() <= rrs.start(),
        None => true,
    }
}
