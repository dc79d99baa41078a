//! Memoised branch and bound over game states of one digraph.
//!
//! A state is the pair (burning set `B`, protected set `P`) just before a
//! protection round. Its value is the final number of burnt vertices under
//! optimal defence. Only protected vertices on the out-boundary of the
//! region the fire can still reach influence the future, so the memo key
//! keeps just those.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rustc_hash::FxHashMap;

use crate::bitset::bits;

#[derive(Debug, Clone, Copy)]
struct Entry {
    value: u32,
    exact: bool,
}

/// Search was interrupted by a budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Aborted;

pub(crate) struct Limits<'a> {
    pub deadline: Option<Instant>,
    pub node_cap: Option<u64>,
    pub stop: &'a AtomicBool,
}

pub(crate) struct Engine<'a> {
    out: &'a [u64],
    f: usize,
    memo: FxHashMap<(u64, u64), Entry>,
    pub nodes: u64,
    limits: Option<Limits<'a>>,
}

/// One protection choice and its consequence.
pub(crate) struct Move {
    pub protect: u64,
    pub burn: u64,
}

impl<'a> Engine<'a> {
    pub fn new(out: &'a [u64], f: usize) -> Self {
        Engine { out, f, memo: FxHashMap::default(), nodes: 0, limits: None }
    }

    pub fn with_limits(out: &'a [u64], f: usize, limits: Limits<'a>) -> Self {
        Engine { limits: Some(limits), ..Self::new(out, f) }
    }

    fn succ(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.out[v])
    }

    /// Vertices the fire can still reach from `b` avoiding `p` (excluding `b`).
    fn reach(&self, b: u64, p: u64) -> u64 {
        let mut r = 0u64;
        let mut frontier = b;
        loop {
            let next = self.succ(frontier) & !(b | p | r);
            if next == 0 {
                return r;
            }
            r |= next;
            frontier = next;
        }
    }

    fn tick(&mut self) -> Result<(), Aborted> {
        self.nodes += 1;
        if let Some(l) = &self.limits {
            if self.nodes & 1023 == 0 {
                let late = l.deadline.is_some_and(|d| Instant::now() >= d);
                let heavy = l.node_cap.is_some_and(|c| self.nodes >= c);
                if late || heavy {
                    l.stop.store(true, Ordering::Relaxed);
                }
            }
            if l.stop.load(Ordering::Relaxed) {
                return Err(Aborted);
            }
        }
        Ok(())
    }

    /// Candidate protect sets at `(b, p)`: every subset of the reachable
    /// region of size `min(f, |R|)`, ordered by overlap with the threatened
    /// set, then by how much each vertex still points at.
    pub fn moves(&self, b: u64, p: u64) -> Vec<Move> {
        let threatened = self.succ(b) & !(b | p);
        let r = self.reach(b, p);
        let free = !(b | p);
        let mut pool: Vec<usize> = bits(r).collect();
        pool.sort_by_key(|&v| (threatened >> v & 1 == 0, std::cmp::Reverse((self.out[v] & free).count_ones()), v));
        let k = self.f.min(pool.len());
        let mut sets: Vec<u64> = Vec::new();
        combinations(&pool, k, &mut |s| sets.push(s));
        if k > 1 {
            sets.sort_by_key(|&s| std::cmp::Reverse((s & threatened).count_ones()));
        }
        sets.into_iter().map(|s| Move { protect: s, burn: threatened & !s }).collect()
    }

    /// Optimal value of `(b, p)` if it is below `alpha`; otherwise some
    /// lower bound that is at least `alpha`.
    pub fn search(&mut self, b: u64, p: u64, alpha: u32) -> Result<u32, Aborted> {
        self.tick()?;
        let burnt = b.count_ones();
        let threatened = self.succ(b) & !(b | p);
        let t = threatened.count_ones() as usize;
        if t <= self.f {
            return Ok(burnt);
        }
        let r = self.reach(b, p);
        let key = (b, p & self.succ(b | r));
        let lb = burnt + (t - self.f) as u32;
        let lb = match self.memo.get(&key) {
            Some(e) if e.exact => return Ok(e.value),
            Some(e) => e.value.max(lb),
            None => lb,
        };
        if lb >= alpha {
            return Ok(lb);
        }
        let mut best = burnt + r.count_ones();
        for mv in self.moves(b, p) {
            let bound = alpha.min(best);
            let v = if mv.burn == 0 { burnt } else { self.search(b | mv.burn, p | mv.protect, bound)? };
            if v < best {
                best = v;
                if best <= lb {
                    break;
                }
            }
        }
        let entry = if best < alpha { Entry { value: best, exact: true } } else { Entry { value: alpha, exact: false } };
        self.memo.insert(key, entry);
        Ok(entry.value)
    }

    /// Exact value from a single burning start.
    pub fn value(&mut self, start: usize) -> Result<u32, Aborted> {
        self.search(1 << start, 0, u32::MAX)
    }

    /// Optimal protect set at `(b, p)` given its exact value.
    pub fn best_move(&mut self, b: u64, p: u64, value: u32) -> Result<Move, Aborted> {
        for mv in self.moves(b, p) {
            let v = if mv.burn == 0 { b.count_ones() } else { self.search(b | mv.burn, p | mv.protect, value + 1)? };
            if v == value {
                return Ok(mv);
            }
        }
        unreachable!("some move attains the exact value")
    }
}

/// Calls `emit` with every `k`-subset of `pool` as a mask, in
/// lexicographic order of positions.
fn combinations(pool: &[usize], k: usize, emit: &mut impl FnMut(u64)) {
    fn rec(pool: &[usize], k: usize, from: usize, acc: u64, emit: &mut impl FnMut(u64)) {
        if k == 0 {
            emit(acc);
            return;
        }
        for i in from..=pool.len() - k {
            rec(pool, k - 1, i + 1, acc | 1 << pool[i], emit);
        }
    }
    rec(pool, k, 0, 0, emit)
}
