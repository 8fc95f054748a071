//! O(m lg n) minimization of partial DFAs.
//!
//! Two refinable partitions drive the refinement. The block partition holds
//! the states; the splitter partition holds the transitions, one set per
//! nonempty splitter `(B, a)`, i.e. the `a`-transitions whose head lies in
//! block `B`. The unready worklist holds splitter indices still to be
//! processed.
//!
//! Splitter indices are reused on purpose. When a block is split, only the
//! transitions into the smaller half are marked in their splitters. Each
//! touched splitter keeps its index for the unmarked remainder and the
//! marked part gets a fresh index that always enters the worklist. So a
//! splitter that was unready leaves both of its parts unready, while one
//! that was already processed re-queues only its smaller-half part. If every
//! transition of a splitter was marked, the split is trivial and the
//! splitter keeps its index and worklist status unchanged.

use std::time::{Duration, Instant};

use crate::adjacency::Adjacency;
use crate::automaton::{canonicalize, PtDfa};
use crate::partition::RefinablePartition;
use crate::preprocess::{empty_dfa, trim};
use crate::simple_set::{SimpleSet, Worklist};
use crate::splitter_init::init_trp_grouping;

/// Counters collected by [`minimize`].
///
/// The two scan counters are bounded in terms of the relevant automaton
/// (`n` states, `m` transitions): every transition is scanned as part of a
/// splitter at most `lg n + 1` times, and as an input of a smaller half at
/// most `lg n` times.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MinimizeStats {
    pub states_in: usize,
    pub transitions_in: usize,
    pub alphabet: usize,
    pub states_relevant: usize,
    pub transitions_relevant: usize,
    pub states_out: usize,
    pub transitions_out: usize,
    /// Successful block splits.
    pub block_splits: u64,
    /// Successful splitter splits.
    pub splitter_splits: u64,
    /// Transitions visited while scanning a splitter taken off the worklist.
    pub splitter_scan_touches: u64,
    /// Input transitions visited while scanning the smaller half of a split block.
    pub block_scan_touches: u64,
    pub elapsed: Duration,
}

fn floor_lg(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        u64::from(n.ilog2())
    }
}

impl MinimizeStats {
    pub fn splitter_scan_bound(&self) -> u64 {
        let m = self.transitions_relevant as u64;
        m * (floor_lg(self.states_relevant) + 1)
    }

    pub fn block_scan_bound(&self) -> u64 {
        let m = self.transitions_relevant as u64;
        m * floor_lg(self.states_relevant) + m
    }

    pub fn within_bounds(&self) -> bool {
        self.splitter_scan_touches <= self.splitter_scan_bound()
            && self.block_scan_touches <= self.block_scan_bound()
    }

    /// `key=value` lines, one counter per line.
    pub fn to_key_values(&self) -> String {
        format!(
            "states_in={}\ntransitions_in={}\nalphabet={}\nstates_relevant={}\n\
             transitions_relevant={}\nstates_out={}\ntransitions_out={}\n\
             block_splits={}\nsplitter_splits={}\nsplitter_scan_touches={}\n\
             block_scan_touches={}\nmillis={:.3}\n",
            self.states_in,
            self.transitions_in,
            self.alphabet,
            self.states_relevant,
            self.transitions_relevant,
            self.states_out,
            self.transitions_out,
            self.block_splits,
            self.splitter_splits,
            self.splitter_scan_touches,
            self.block_scan_touches,
            self.elapsed.as_secs_f64() * 1e3,
        )
    }
}

/// Observation hooks. Every method defaults to a no-op, so `()` observes
/// nothing and compiles away.
pub trait Probe {
    /// Whether [`Probe::loop_head`] should be called; building the view
    /// costs time linear in the worklist size.
    const WANTS_LOOP_HEAD: bool = false;

    #[inline(always)]
    fn splitter_scan(&mut self) {}
    #[inline(always)]
    fn block_scan(&mut self) {}
    #[inline(always)]
    fn block_split(&mut self) {}
    #[inline(always)]
    fn splitter_split(&mut self) {}
    /// Called each time the worklist loop condition is evaluated.
    fn loop_head(&mut self, _view: &LoopView<'_>) {}
}

impl Probe for () {}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counters {
    pub block_splits: u64,
    pub splitter_splits: u64,
    pub splitter_scan_touches: u64,
    pub block_scan_touches: u64,
}

impl Probe for Counters {
    #[inline(always)]
    fn splitter_scan(&mut self) {
        self.splitter_scan_touches += 1;
    }
    #[inline(always)]
    fn block_scan(&mut self) {
        self.block_scan_touches += 1;
    }
    #[inline(always)]
    fn block_split(&mut self) {
        self.block_splits += 1;
    }
    #[inline(always)]
    fn splitter_split(&mut self) {
        self.splitter_splits += 1;
    }
}

/// Snapshot of the refinement state at the head of the worklist loop.
pub struct LoopView<'a> {
    dfa: &'a PtDfa,
    blocks: &'a RefinablePartition,
    splitters: &'a RefinablePartition,
    unready: Vec<usize>,
}

impl LoopView<'_> {
    /// The relevant automaton being refined.
    pub fn automaton(&self) -> &PtDfa {
        self.dfa
    }

    pub fn block_of(&self, q: usize) -> usize {
        self.blocks.set_of(q)
    }

    pub fn block_count(&self) -> usize {
        self.blocks.sets()
    }

    /// The unprocessed splitters as `(block, label)` pairs.
    pub fn unready_splitters(&self) -> Vec<(usize, usize)> {
        self.unready
            .iter()
            .map(|&p| {
                let t = self.splitters.first(p);
                (self.blocks.set_of(self.dfa.heads()[t]), self.dfa.labels()[t])
            })
            .collect()
    }
}

struct Refiner<'a, W, P> {
    dfa: &'a PtDfa,
    brp: RefinablePartition,
    trp: RefinablePartition,
    in_trs: Adjacency,
    unready: W,
    touched_blocks: SimpleSet,
    touched_spls: SimpleSet,
    probe: &'a mut P,
}

impl<'a, W: Worklist, P: Probe> Refiner<'a, W, P> {
    fn new(dfa: &'a PtDfa, probe: &'a mut P) -> Self {
        let (n, m) = (dfa.states(), dfa.transition_count());
        let trp = init_trp_grouping(dfa.labels(), dfa.alphabet())
            .expect("validated automata have in-range labels");
        Self {
            dfa,
            brp: RefinablePartition::new(n).expect("automata have at least one state"),
            trp,
            in_trs: Adjacency::group_by(dfa.heads(), n),
            unready: W::with_range(m),
            touched_blocks: SimpleSet::new(n),
            touched_spls: SimpleSet::new(m),
            probe,
        }
    }

    /// Splits block `b` by its marks and updates the splitters.
    fn split_block(&mut self, b: usize) {
        debug_assert!(self.touched_spls.is_empty());
        let Some(mut small) = self.brp.split(b) else {
            return;
        };
        self.probe.block_split();
        // Strict: on a tie the new (marked) half is scanned.
        if self.brp.size(b) < self.brp.size(small) {
            small = b;
        }
        let Self {
            brp,
            trp,
            in_trs,
            touched_spls,
            probe,
            unready,
            ..
        } = self;
        for &q in brp.elements(small) {
            for &t in in_trs.get(q) {
                probe.block_scan();
                let p = trp.set_of(t);
                if trp.no_marks(p) {
                    touched_spls.add(p);
                }
                trp.mark(t);
            }
        }
        while let Some(p) = touched_spls.remove() {
            if let Some(fresh) = trp.split(p) {
                probe.splitter_split();
                unready.add(fresh);
            }
        }
    }

    fn loop_head(&mut self) {
        debug_assert!(self.touched_blocks.is_empty());
        if P::WANTS_LOOP_HEAD {
            let view = LoopView {
                dfa: self.dfa,
                blocks: &self.brp,
                splitters: &self.trp,
                unready: self.unready.items(),
            };
            self.probe.loop_head(&view);
        }
    }

    fn run(mut self) -> RefinablePartition {
        // Initial splitter indices are exactly 0..sets.
        debug_assert!((0..self.trp.sets()).all(|p| self.trp.size(p) > 0));
        for p in 0..self.trp.sets() {
            self.unready.add(p);
        }
        for &q in self.dfa.finals() {
            self.brp.mark(q);
        }
        self.split_block(0);

        loop {
            self.loop_head();
            let Some(p) = self.unready.remove() else {
                break;
            };
            let Self {
                dfa,
                brp,
                trp,
                touched_blocks,
                probe,
                ..
            } = &mut self;
            for &t in trp.elements(p) {
                probe.splitter_scan();
                let q = dfa.tails()[t];
                let b = brp.set_of(q);
                if brp.no_marks(b) {
                    touched_blocks.add(b);
                }
                brp.mark(q);
            }
            while let Some(b) = self.touched_blocks.remove() {
                self.split_block(b);
            }
        }
        self.brp
    }
}

/// Coarsest language-respecting partition of a relevant automaton.
///
/// `relevant` must have every state relevant and at least one final state.
/// Returns the block index of every state.
pub fn partition_states_with<W: Worklist, P: Probe>(relevant: &PtDfa, probe: &mut P) -> Vec<usize> {
    let brp = refine::<W, P>(relevant, probe);
    (0..relevant.states()).map(|q| brp.set_of(q)).collect()
}

fn refine<W: Worklist, P: Probe>(relevant: &PtDfa, probe: &mut P) -> RefinablePartition {
    assert!(
        !relevant.finals().is_empty(),
        "refinement needs at least one final state"
    );
    Refiner::<W, P>::new(relevant, probe).run()
}

/// One state per block; transitions copied from any block member.
fn quotient(d: &PtDfa, brp: &RefinablePartition) -> PtDfa {
    let finals_flag = d.final_flags();
    let blocks = brp.sets();
    let (mut tails, mut labels, mut heads) = (Vec::new(), Vec::new(), Vec::new());
    let mut finals = Vec::new();
    for b in 0..blocks {
        let rep = brp.first(b);
        if finals_flag[rep] {
            finals.push(b);
        }
        for t in d.outgoing(rep) {
            tails.push(b);
            labels.push(d.labels()[t]);
            heads.push(brp.set_of(d.heads()[t]));
        }
    }
    let q = PtDfa::from_sorted_parts(
        blocks,
        d.alphabet(),
        tails,
        labels,
        heads,
        brp.set_of(d.initial()),
        finals,
    );
    canonicalize(&q).expect("every block of a relevant automaton is reachable")
}

struct Outcome {
    dfa: PtDfa,
    states_relevant: usize,
    transitions_relevant: usize,
}

fn minimize_inner<W: Worklist, P: Probe>(d: &PtDfa, probe: &mut P) -> Outcome {
    let relevant = trim(d);
    let (states_relevant, transitions_relevant) = (relevant.states(), relevant.transition_count());
    let dfa = if relevant.finals().is_empty() {
        empty_dfa(d.alphabet())
    } else {
        let brp = refine::<W, P>(&relevant, probe);
        quotient(&relevant, &brp)
    };
    Outcome {
        dfa,
        states_relevant,
        transitions_relevant,
    }
}

/// Minimizes `d` with an explicit worklist discipline and probe.
pub fn minimize_with<W: Worklist, P: Probe>(d: &PtDfa, probe: &mut P) -> PtDfa {
    minimize_inner::<W, P>(d, probe).dfa
}

/// The minimal automaton for `L(d)` in canonical form, without statistics.
pub fn minimize_dfa(d: &PtDfa) -> PtDfa {
    minimize_with::<SimpleSet, ()>(d, &mut ())
}

/// The minimal automaton for `L(d)` in canonical form, with counters.
pub fn minimize(d: &PtDfa) -> (PtDfa, MinimizeStats) {
    let start = Instant::now();
    let mut counters = Counters::default();
    let out = minimize_inner::<SimpleSet, Counters>(d, &mut counters);
    let elapsed = start.elapsed();
    let stats = MinimizeStats {
        states_in: d.states(),
        transitions_in: d.transition_count(),
        alphabet: d.alphabet(),
        states_relevant: out.states_relevant,
        transitions_relevant: out.transitions_relevant,
        states_out: out.dfa.states(),
        transitions_out: out.dfa.transition_count(),
        block_splits: counters.block_splits,
        splitter_splits: counters.splitter_splits,
        splitter_scan_touches: counters.splitter_scan_touches,
        block_scan_touches: counters.block_scan_touches,
        elapsed,
    };
    (out.dfa, stats)
}
