//! Refinable partition of `{0, .., max - 1}`.
//!
//! Elements of the same set occupy a contiguous slice of `elems`. Each set
//! keeps a `mid` boundary: the elements in `[first, mid)` are marked, the ones
//! in `[mid, end)` are not. Marking swaps an element into the marked prefix,
//! and splitting turns the marked prefix into a new set, so every operation
//! is O(1) except [`RefinablePartition::split`], which is linear in the number
//! of marked elements and therefore amortized O(1) against the marks that
//! preceded it.
//!
//! Set indices are dense: after `k` successful splits there are `1 + k` sets,
//! and a new set always gets the next free index.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a refinable partition needs at least one element")]
    EmptyUniverse,
}

#[derive(Debug, Clone)]
pub struct RefinablePartition {
    pub(crate) elems: Vec<usize>,
    pub(crate) loc: Vec<usize>,
    pub(crate) sidx: Vec<usize>,
    pub(crate) first: Vec<usize>,
    pub(crate) end: Vec<usize>,
    pub(crate) mid: Vec<usize>,
    pub(crate) sets: usize,
    split_work: u64,
}

impl RefinablePartition {
    /// One set (index 0) holding every element, nothing marked.
    pub fn new(max: usize) -> Result<Self, PartitionError> {
        if max == 0 {
            return Err(PartitionError::EmptyUniverse);
        }
        let mut p = Self::with_universe(max);
        p.sets = 1;
        p.first[0] = 0;
        p.mid[0] = 0;
        p.end[0] = max;
        Ok(p)
    }

    /// Raw storage for `max` elements with zero sets. The caller must fill
    /// every array before handing the value out. `first`/`mid`/`end` get
    /// `max` slots, the most sets a partition of `max` elements can have.
    pub(crate) fn with_universe(max: usize) -> Self {
        Self {
            elems: (0..max).collect(),
            loc: (0..max).collect(),
            sidx: vec![0; max],
            first: vec![0; max],
            end: vec![0; max],
            mid: vec![0; max],
            sets: 0,
            split_work: 0,
        }
    }

    /// Number of elements in the universe.
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Current number of sets; valid set indices are `0..sets()`.
    pub fn sets(&self) -> usize {
        self.sets
    }

    pub fn size(&self, s: usize) -> usize {
        debug_assert!(s < self.sets, "set index {s} out of range");
        self.end[s] - self.first[s]
    }

    pub fn set_of(&self, e: usize) -> usize {
        self.sidx[e]
    }

    pub fn first(&self, s: usize) -> usize {
        debug_assert!(s < self.sets, "set index {s} out of range");
        self.elems[self.first[s]]
    }

    /// The element after `e` in the scan of its set, or `None` at the end.
    pub fn next(&self, e: usize) -> Option<usize> {
        let l = self.loc[e] + 1;
        if l >= self.end[self.sidx[e]] {
            None
        } else {
            Some(self.elems[l])
        }
    }

    /// The elements of set `s` in scan order. Holding the slice statically
    /// rules out marking or splitting this instance during the scan.
    pub fn elements(&self, s: usize) -> &[usize] {
        debug_assert!(s < self.sets, "set index {s} out of range");
        &self.elems[self.first[s]..self.end[s]]
    }

    /// Marks `e` for the next split of its set. Re-marking is a no-op.
    pub fn mark(&mut self, e: usize) {
        let s = self.sidx[e];
        let l = self.loc[e];
        let m = self.mid[s];
        if l >= m {
            let other = self.elems[m];
            self.elems[l] = other;
            self.loc[other] = l;
            self.elems[m] = e;
            self.loc[e] = m;
            self.mid[s] = m + 1;
        }
    }

    /// Moves the marked elements of `s` into a fresh set and returns its
    /// index. Returns `None` when none or all of `s` is marked. Either way
    /// every mark in `s` is cleared.
    pub fn split(&mut self, s: usize) -> Option<usize> {
        debug_assert!(s < self.sets, "set index {s} out of range");
        if self.mid[s] == self.end[s] {
            self.mid[s] = self.first[s];
        }
        if self.mid[s] == self.first[s] {
            return None;
        }
        let new = self.sets;
        self.sets += 1;
        self.first[new] = self.first[s];
        self.mid[new] = self.first[s];
        self.end[new] = self.mid[s];
        self.first[s] = self.mid[s];
        for &e in &self.elems[self.first[new]..self.end[new]] {
            self.sidx[e] = new;
        }
        self.split_work += (self.end[new] - self.first[new]) as u64;
        Some(new)
    }

    pub fn no_marks(&self, s: usize) -> bool {
        debug_assert!(s < self.sets, "set index {s} out of range");
        self.mid[s] == self.first[s]
    }

    pub fn is_marked(&self, e: usize) -> bool {
        self.loc[e] < self.mid[self.sidx[e]]
    }

    /// Total relabelling steps performed by all successful splits so far.
    pub fn split_work(&self) -> u64 {
        self.split_work
    }

    /// Checks every structural invariant, returning the first violation.
    pub fn check_invariants(&self) -> Result<(), String> {
        let max = self.elems.len();
        if self.loc.len() != max || self.sidx.len() != max {
            return Err("array lengths disagree".into());
        }
        for (i, &e) in self.elems.iter().enumerate() {
            if e >= max {
                return Err(format!("elems[{i}] = {e} is out of range"));
            }
            if self.loc[e] != i {
                return Err(format!("loc[{e}] = {} but elems[{i}] = {e}", self.loc[e]));
            }
        }
        let mut covered = vec![false; max];
        for s in 0..self.sets {
            let (f, m, e) = (self.first[s], self.mid[s], self.end[s]);
            if !(f <= m && m <= e && e <= max && f < e) {
                return Err(format!("set {s} has bad bounds first={f} mid={m} end={e}"));
            }
            for (i, &x) in self.elems.iter().enumerate().take(e).skip(f) {
                if covered[i] {
                    return Err(format!("position {i} belongs to two sets"));
                }
                covered[i] = true;
                if self.sidx[x] != s {
                    return Err(format!("element {x} at position {i} has sidx {} instead of {s}", self.sidx[x]));
                }
            }
        }
        if let Some(i) = covered.iter().position(|c| !c) {
            return Err(format!("position {i} is not covered by any set"));
        }
        Ok(())
    }

    /// Debug dump, one line per set: `index: marked | unmarked`.
    /// Not a stable format.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for s in 0..self.sets {
            let marked = &self.elems[self.first[s]..self.mid[s]];
            let unmarked = &self.elems[self.mid[s]..self.end[s]];
            let _ = writeln!(out, "{s}: {marked:?} | {unmarked:?}");
        }
        out
    }
}
