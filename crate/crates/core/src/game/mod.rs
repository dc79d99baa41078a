//! Fire spread under a defence strategy.
//!
//! Time units start at 1. At time 1 the start vertex catches fire, then up
//! to `f` vertices are protected (labelled `1'` in drawings). Every later
//! time unit first spreads the fire to all unprotected out-neighbours of
//! burning vertices and then protects again. The game ends as soon as a
//! spread step adds nothing.

mod strategy;

pub use strategy::{make_strategy, Strategy, StrategyParams, STRATEGIES};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::orientation::Orientation;

/// Snapshot handed to a strategy just before it protects at `time`.
#[derive(Debug, Clone)]
pub struct FireState {
    pub time: usize,
    pub start: usize,
    pub f: usize,
    pub burnt: VertexSet,
    pub protected: VertexSet,
    /// Vertices that caught fire at `time`.
    pub front: Vec<usize>,
}

impl FireState {
    pub fn new(n: usize, start: usize, f: usize) -> Self {
        FireState {
            time: 1,
            start,
            f,
            burnt: VertexSet::from_iter_in(n, [start]),
            protected: VertexSet::new(n),
            front: vec![start],
        }
    }

    fn is_free(&self, v: usize) -> bool {
        !self.burnt.contains(v) && !self.protected.contains(v)
    }

    /// Unburnt, unprotected out-neighbours of burning vertices, sorted.
    pub fn threatened(&self, o: &Orientation) -> Vec<usize> {
        let mut t = VertexSet::new(o.n());
        for v in self.burnt.iter() {
            for &w in o.out_neighbours(v) {
                if self.is_free(w) {
                    t.insert(w);
                }
            }
        }
        t.to_vec()
    }

    /// Number of vertices reachable from `v` (itself included) through
    /// vertices that are neither burning nor protected.
    pub fn open_reach(&self, o: &Orientation, v: usize) -> usize {
        if !self.is_free(v) {
            return 0;
        }
        let mut seen = VertexSet::from_iter_in(o.n(), [v]);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in o.out_neighbours(u) {
                if self.is_free(w) && !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len()
    }

    /// Checks a protect set against the rules; returns the reason on failure.
    fn check(&self, chosen: &[usize]) -> std::result::Result<(), (usize, String)> {
        let n = self.burnt.universe();
        let mut seen = VertexSet::new(n);
        for (i, &v) in chosen.iter().enumerate() {
            if v >= n {
                return Err((v, format!("vertex {v} out of range 0..{n}")));
            }
            if i >= self.f {
                return Err((v, format!("more than f = {} vertices protected", self.f)));
            }
            if self.burnt.contains(v) {
                return Err((v, "vertex is already burning".into()));
            }
            if self.protected.contains(v) || seen.contains(v) {
                return Err((v, "vertex is already protected".into()));
            }
            seen.insert(v);
        }
        Ok(())
    }

    /// Spreads one step; returns the newly burning vertices (sorted).
    fn spread(&mut self, o: &Orientation) -> Vec<usize> {
        let new = self.threatened(o);
        for &v in &new {
            self.burnt.insert(v);
        }
        self.time += 1;
        self.front = new.clone();
        new
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FireEvent {
    Burn { t: usize, burn: Vec<usize> },
    Protect { t: usize, protect: Vec<usize> },
}

impl FireEvent {
    pub fn time(&self) -> usize {
        match self {
            FireEvent::Burn { t, .. } | FireEvent::Protect { t, .. } => *t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FireTrace {
    pub start: usize,
    pub f: usize,
    pub events: Vec<FireEvent>,
    pub burned: usize,
}

impl FireTrace {
    /// Protect sets indexed by time (index 0 is time 1).
    pub fn protect_schedule(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for e in &self.events {
            if let FireEvent::Protect { t, protect } = e {
                if out.len() < *t {
                    out.resize(*t, Vec::new());
                }
                out[t - 1].extend(protect);
            }
        }
        out
    }

    pub fn burnt_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .events
            .iter()
            .filter_map(|e| match e {
                FireEvent::Burn { burn, .. } => Some(burn.iter().copied()),
                _ => None,
            })
            .flatten()
            .collect();
        v.sort_unstable();
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serialises")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
    }
}

/// Plays the game from `start` with `f` firefighters per time unit.
pub fn simulate(o: &Orientation, start: usize, f: usize, strategy: &mut dyn Strategy) -> Result<FireTrace> {
    let n = o.n();
    if start >= n {
        return Err(Error::InvalidParams(format!("start {start} out of range 0..{n}")));
    }
    if f == 0 {
        return Err(Error::InvalidParams("f must be at least 1".into()));
    }
    let mut state = FireState::new(n, start, f);
    let mut events = vec![FireEvent::Burn { t: 1, burn: vec![start] }];
    loop {
        let mut chosen = strategy.choose(o, &state);
        state.check(&chosen).map_err(|(vertex, reason)| Error::StrategyFault {
            strategy: strategy.name().to_string(),
            vertex,
            time: state.time,
            reason,
        })?;
        chosen.sort_unstable();
        for &v in &chosen {
            state.protected.insert(v);
        }
        if !chosen.is_empty() {
            events.push(FireEvent::Protect { t: state.time, protect: chosen });
        }
        let new = state.spread(o);
        if new.is_empty() {
            break;
        }
        events.push(FireEvent::Burn { t: state.time, burn: new });
    }
    Ok(FireTrace { start, f, events, burned: state.burnt.len() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ReplayOutcome {
    Valid,
    Violation { time: usize, reason: String },
}

impl ReplayOutcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, ReplayOutcome::Valid)
    }
}

/// Recomputes the spread from the trace's protect events and compares it
/// with the recorded burn events.
pub fn replay(o: &Orientation, trace: &FireTrace) -> ReplayOutcome {
    let violation = |time: usize, reason: String| ReplayOutcome::Violation { time, reason };
    let n = o.n();
    if trace.start >= n {
        return violation(1, format!("start {} out of range 0..{n}", trace.start));
    }
    if trace.f == 0 {
        return violation(1, "f must be at least 1".into());
    }
    // Events must be ordered by time with burns before protections.
    let mut last = (0usize, 0u8);
    for e in &trace.events {
        let key = match e {
            FireEvent::Burn { t, .. } => (*t, 0),
            FireEvent::Protect { t, .. } => (*t, 1),
        };
        if key <= last {
            return violation(key.0, "events out of order or repeated".into());
        }
        last = key;
    }
    let burns_at = |t: usize| {
        trace.events.iter().find_map(|e| match e {
            FireEvent::Burn { t: s, burn } if *s == t => {
                let mut b = burn.clone();
                b.sort_unstable();
                Some(b)
            }
            _ => None,
        })
    };
    if burns_at(1) != Some(vec![trace.start]) {
        return violation(1, "time 1 must burn exactly the start vertex".into());
    }
    let schedule = trace.protect_schedule();
    let mut state = FireState::new(n, trace.start, trace.f);
    loop {
        let chosen = schedule.get(state.time - 1).cloned().unwrap_or_default();
        if let Err((v, reason)) = state.check(&chosen) {
            return violation(state.time, format!("protecting {v}: {reason}"));
        }
        for &v in &chosen {
            state.protected.insert(v);
        }
        let new = state.spread(o);
        let recorded = burns_at(state.time);
        if new.is_empty() {
            if let Some(r) = recorded {
                return violation(state.time, format!("recorded burn {r:?} but the fire has stopped"));
            }
            break;
        }
        if recorded.as_ref() != Some(&new) {
            return violation(state.time, format!("expected burn {new:?}, recorded {recorded:?}"));
        }
    }
    if let Some(e) = trace.events.iter().find(|e| e.time() >= state.time) {
        return violation(e.time(), "event after the fire stopped".into());
    }
    if trace.burned != state.burnt.len() {
        return violation(state.time, format!("burned total {} but {} vertices burnt", trace.burned, state.burnt.len()));
    }
    ReplayOutcome::Valid
}
