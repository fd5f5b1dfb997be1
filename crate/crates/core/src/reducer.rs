//! Incremental reduction to a geodesic, one letter at a time.

use serde::Serialize;

use crate::group::{invert, GroupParams, Letter, Word};
use crate::meter::Meter;
use crate::rrs::{apply_rrs, find_optimal_rrs_metered, Rrs, TraceEvent};

/// Result of appending one letter to a geodesic.
#[derive(Debug, Clone)]
pub struct Push {
    pub word: Word,
    pub rrs: Option<Rrs>,
    pub events: Vec<TraceEvent>,
}

/// Appends `x` to the geodesic `w`, applying the optimal reducing sequence
/// of `w x` when there is one.
pub fn push_letter(w: &[Letter], x: Letter, params: &GroupParams) -> Push {
    match find_optimal_rrs_metered(w, x, params, &mut Meter::new()) {
        Some(rrs) => {
            let (word, events) = apply_rrs(&rrs);
            Push {
                word,
                rrs: Some(rrs),
                events,
            }
        }
        None => {
            let mut word = Word::from(w);
            word.push(x);
            Push {
                word,
                rrs: None,
                events: Vec::new(),
            }
        }
    }
}

/// An event tagged with the index of the input letter whose push caused it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TracedEvent {
    pub step: usize,
    #[serde(flatten)]
    pub event: TraceEvent,
}

/// Running reduction state.
#[derive(Debug, Clone)]
pub struct Reducer {
    params: GroupParams,
    word: Word,
    meter: Meter,
    pushed: usize,
}

impl Reducer {
    pub fn new(params: GroupParams) -> Reducer {
        Reducer {
            params,
            word: Word::new(),
            meter: Meter::new(),
            pushed: 0,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    /// Letters examined so far by the searches and rewrites.
    pub fn visited(&self) -> u64 {
        self.meter.visited()
    }

    /// Pushes one letter and returns the sequence that was applied, if any.
    pub fn push(&mut self, x: Letter) -> Option<Rrs> {
        self.pushed += 1;
        match find_optimal_rrs_metered(&self.word, x, &self.params, &mut self.meter) {
            Some(rrs) => {
                self.meter.tick(rrs.host().len() - rrs.start());
                let (word, _) = apply_rrs(&rrs);
                self.word = word;
                Some(rrs)
            }
            None => {
                self.word.push(x);
                None
            }
        }
    }

    pub fn push_traced(&mut self, x: Letter, trace: &mut Vec<TracedEvent>) {
        let step = self.pushed;
        if let Some(rrs) = self.push(x) {
            let (_, events) = apply_rrs(&rrs);
            trace.extend(events.into_iter().map(|event| TracedEvent { step, event }));
        }
    }
}

pub fn reduce_to_geodesic(w: &[Letter], params: &GroupParams) -> Word {
    let mut r = Reducer::new(*params);
    for &x in w {
        r.push(x);
    }
    r.into_word()
}

pub fn reduce_with_trace(w: &[Letter], params: &GroupParams) -> (Word, Vec<TracedEvent>) {
    let mut r = Reducer::new(*params);
    let mut trace = Vec::new();
    for &x in w {
        r.push_traced(x, &mut trace);
    }
    (r.into_word(), trace)
}

pub fn equal_in_g(w1: &[Letter], w2: &[Letter], params: &GroupParams) -> bool {
    let mut u = Word::from(w1);
    u.extend_from_slice(&invert(w2));
    reduce_to_geodesic(&u, params).is_empty()
}

pub fn geodesic_length(w: &[Letter], params: &GroupParams) -> usize {
    reduce_to_geodesic(w, params).len()
}

pub fn is_geodesic(w: &[Letter], params: &GroupParams) -> bool {
    geodesic_length(w, params) == w.len()
}
