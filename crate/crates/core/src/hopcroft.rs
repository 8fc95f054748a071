//! Comparison baseline: Hopcroft's algorithm on the sink-completed automaton.
//!
//! The partial transition function is made total by adding a sink state
//! that receives every missing transition, including all of its own. The
//! worklist holds `(block, symbol)` pairs; when a block splits, a pair that
//! was pending is replaced by both halves and otherwise only the smaller
//! half is queued. Time is O(alpha · n lg n) and memory Θ(alpha · n)
//! regardless of how many transitions the input actually defines.

use std::collections::VecDeque;
use std::mem::size_of;
use std::time::Instant;

use thiserror::Error;

use crate::automaton::{canonicalize, PtDfa};
use crate::minimize::MinimizeStats;
use crate::preprocess::empty_dfa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("out of memory: the completed transition table needs about {requested} bytes")]
    OutOfMemory { requested: usize },
}

/// Bytes of the completed transition table alone for `states` input states.
pub fn completed_table_bytes(states: usize, alphabet: usize) -> usize {
    (states + 1)
        .saturating_mul(alphabet)
        .saturating_mul(size_of::<usize>())
}

/// Rough upper estimate of the baseline's working set: table, inverse
/// table with offsets, and the pending-pair flags.
pub fn estimated_bytes(states: usize, alphabet: usize) -> usize {
    let cells = (states + 1).saturating_mul(alphabet);
    cells
        .saturating_mul(3 * size_of::<usize>() + 1)
        .saturating_add((states + 1).saturating_mul(6 * size_of::<usize>()))
}

fn try_filled<T: Clone>(len: usize, value: T, requested: usize) -> Result<Vec<T>, BaselineError> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| BaselineError::OutOfMemory { requested })?;
    v.resize(len, value);
    Ok(v)
}

pub fn hopcroft_minimize(d: &PtDfa) -> (PtDfa, MinimizeStats) {
    try_hopcroft_minimize(d, None).expect("allocation of the completed table failed")
}

/// As [`hopcroft_minimize`], refusing to start when the estimated working
/// set exceeds `memory_limit` bytes and reporting failed allocations as
/// errors instead of aborting.
pub fn try_hopcroft_minimize(
    d: &PtDfa,
    memory_limit: Option<usize>,
) -> Result<(PtDfa, MinimizeStats), BaselineError> {
    let start_time = Instant::now();
    let alpha = d.alphabet();
    let mut stats = MinimizeStats {
        states_in: d.states(),
        transitions_in: d.transition_count(),
        alphabet: alpha,
        ..Default::default()
    };

    // Forward reachability only; dead states merge with the sink below.
    let mut new_id = vec![usize::MAX; d.states()];
    let mut order = vec![d.initial()];
    new_id[d.initial()] = 0;
    let mut i = 0;
    while i < order.len() {
        for t in d.outgoing(order[i]) {
            let h = d.heads()[t];
            if new_id[h] == usize::MAX {
                new_id[h] = order.len();
                order.push(h);
            }
        }
        i += 1;
    }
    let n = order.len();
    let accepting_in = d.final_flags();
    if !order.iter().any(|&q| accepting_in[q]) {
        let out = empty_dfa(alpha);
        stats.states_out = 1;
        stats.elapsed = start_time.elapsed();
        return Ok((out, stats));
    }

    let total = n + 1;
    let sink = n;
    let requested = estimated_bytes(n, alpha);
    if memory_limit.is_some_and(|limit| requested > limit) {
        return Err(BaselineError::OutOfMemory { requested });
    }
    let cells = total * alpha;
    let mut table = try_filled(cells, sink, requested)?;
    for (new, &old) in order.iter().enumerate() {
        for t in d.outgoing(old) {
            table[new * alpha + d.labels()[t]] = new_id[d.heads()[t]];
        }
    }
    let accepting: Vec<bool> = order
        .iter()
        .map(|&q| accepting_in[q])
        .chain([false])
        .collect();
    stats.states_relevant = total;
    stats.transitions_relevant = cells;

    // Inverse table keyed by (head, symbol).
    let mut inv_start = try_filled(cells + 1, 0usize, requested)?;
    for q in 0..total {
        for a in 0..alpha {
            inv_start[table[q * alpha + a] * alpha + a + 1] += 1;
        }
    }
    for k in 0..cells {
        inv_start[k + 1] += inv_start[k];
    }
    let mut inv = try_filled(cells, 0usize, requested)?;
    {
        let mut fill = inv_start.clone();
        for q in 0..total {
            for a in 0..alpha {
                let key = table[q * alpha + a] * alpha + a;
                inv[fill[key]] = q;
                fill[key] += 1;
            }
        }
    }

    // Blocks as contiguous slices of `elems`; marked states go to the front.
    let mut elems: Vec<usize> = (0..total).filter(|&q| accepting[q]).collect();
    let finals_count = elems.len();
    elems.extend((0..total).filter(|&q| !accepting[q]));
    let mut loc = vec![0usize; total];
    for (i, &q) in elems.iter().enumerate() {
        loc[q] = i;
    }
    let mut block: Vec<usize> = (0..total).map(|q| usize::from(!accepting[q])).collect();
    let mut first = vec![0usize; total];
    let mut end = vec![0usize; total];
    let mut marked = vec![0usize; total];
    first[0] = 0;
    end[0] = finals_count;
    first[1] = finals_count;
    end[1] = total;
    let mut blocks = 2;

    let mut pending = try_filled(cells, false, requested)?;
    let mut worklist = VecDeque::new();
    let seed = if finals_count <= total - finals_count { 0 } else { 1 };
    for a in 0..alpha {
        pending[seed * alpha + a] = true;
        worklist.push_back((seed, a));
    }

    let mut preds = Vec::new();
    let mut touched = Vec::new();
    while let Some((b, a)) = worklist.pop_back() {
        pending[b * alpha + a] = false;
        preds.clear();
        for &q in &elems[first[b]..end[b]] {
            for &p in &inv[inv_start[q * alpha + a]..inv_start[q * alpha + a + 1]] {
                stats.splitter_scan_touches += 1;
                preds.push(p);
            }
        }
        for &p in &preds {
            let c = block[p];
            let (pos, target) = (loc[p], first[c] + marked[c]);
            let other = elems[target];
            elems[pos] = other;
            loc[other] = pos;
            elems[target] = p;
            loc[p] = target;
            if marked[c] == 0 {
                touched.push(c);
            }
            marked[c] += 1;
        }
        for c in touched.drain(..) {
            let k = std::mem::take(&mut marked[c]);
            if k == end[c] - first[c] {
                continue;
            }
            let nb = blocks;
            blocks += 1;
            first[nb] = first[c];
            end[nb] = first[c] + k;
            first[c] += k;
            for &q in &elems[first[nb]..end[nb]] {
                block[q] = nb;
            }
            stats.block_splits += 1;
            let smaller = if end[nb] - first[nb] <= end[c] - first[c] { nb } else { c };
            for x in 0..alpha {
                if pending[c * alpha + x] {
                    pending[nb * alpha + x] = true;
                    worklist.push_back((nb, x));
                } else {
                    pending[smaller * alpha + x] = true;
                    worklist.push_back((smaller, x));
                }
            }
        }
    }

    // Quotient without the sink class; every remaining class is reachable.
    let sink_block = block[sink];
    let mut id = vec![usize::MAX; blocks];
    let mut reps = vec![elems[first[block[0]]]];
    id[block[0]] = 0;
    let (mut tails, mut labels, mut heads) = (Vec::new(), Vec::new(), Vec::new());
    let mut i = 0;
    while i < reps.len() {
        let q = reps[i];
        for a in 0..alpha {
            let c = block[table[q * alpha + a]];
            if c == sink_block {
                continue;
            }
            if id[c] == usize::MAX {
                id[c] = reps.len();
                reps.push(elems[first[c]]);
            }
            tails.push(i);
            labels.push(a);
            heads.push(id[c]);
        }
        i += 1;
    }
    let finals = (0..reps.len()).filter(|&i| accepting[reps[i]]).collect();
    let q = PtDfa::from_sorted_parts(reps.len(), alpha, tails, labels, heads, 0, finals);
    let out = canonicalize(&q).expect("quotient built by search from the initial block");
    stats.states_out = out.states();
    stats.transitions_out = out.transition_count();
    stats.elapsed = start_time.elapsed();
    Ok((out, stats))
}
