//! Initial partition of transitions by label.
//!
//! Two transitions share a set iff they carry the same label. When equal
//! labels are already contiguous, [`init_trp_presorted`] builds the partition
//! with mark/split in O(m) and O(1) extra memory. Otherwise
//! [`init_trp_grouping`] counts labels through an index array of size
//! `alpha` whose initial contents are never trusted: every entry read from it
//! is validated against the partition built so far, so arbitrary garbage in
//! the array cannot change the result. Time is O(m) either way.

use std::collections::HashSet;

use thiserror::Error;

use crate::partition::RefinablePartition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitterInitError {
    #[error("label {label} reappears at transition {index} after its run ended")]
    PresortViolation { label: usize, index: usize },
    #[error("transition {index} has label {label}, outside 0..{alphabet}")]
    LabelOutOfRange {
        index: usize,
        label: usize,
        alphabet: usize,
    },
}

/// A partition over zero transitions: no sets at all.
fn no_transitions() -> RefinablePartition {
    RefinablePartition::with_universe(0)
}

/// Requires equal labels to sit in contiguous index ranges.
pub fn init_trp_presorted(labels: &[usize]) -> Result<RefinablePartition, SplitterInitError> {
    let mut finished = HashSet::new();
    for (index, w) in labels.windows(2).enumerate() {
        if w[0] != w[1] {
            finished.insert(w[0]);
            if finished.contains(&w[1]) {
                return Err(SplitterInitError::PresortViolation {
                    label: w[1],
                    index: index + 1,
                });
            }
        }
    }
    let Ok(mut trp) = RefinablePartition::new(labels.len()) else {
        return Ok(no_transitions());
    };
    let mut start = 0;
    while start < labels.len() {
        let a = labels[start];
        let mut end = start;
        while end < labels.len() && labels[end] == a {
            trp.mark(end);
            end += 1;
        }
        // The last run is fully marked, so it stays behind as set 0.
        trp.split(0);
        start = end;
    }
    Ok(trp)
}

/// Groups transitions by label in any input order.
pub fn init_trp_grouping(
    labels: &[usize],
    alphabet: usize,
) -> Result<RefinablePartition, SplitterInitError> {
    // Zeroed pages come from the allocator lazily; no semantic use is made
    // of the zeros.
    let mut idx = vec![0usize; alphabet];
    init_trp_grouping_with_scratch(labels, &mut idx)
}

/// As [`init_trp_grouping`], using caller-provided scratch of length
/// `alphabet` with arbitrary contents.
pub fn init_trp_grouping_with_scratch(
    labels: &[usize],
    idx: &mut [usize],
) -> Result<RefinablePartition, SplitterInitError> {
    let alphabet = idx.len();
    if let Some((index, &label)) = labels.iter().enumerate().find(|(_, &a)| a >= alphabet) {
        return Err(SplitterInitError::LabelOutOfRange {
            index,
            label,
            alphabet,
        });
    }
    let m = labels.len();
    if m == 0 {
        return Ok(no_transitions());
    }
    let mut trp = RefinablePartition::with_universe(m);

    // While counting, `mid[i]` holds the label of set `i` and `end[i]` its
    // count. A stale `idx[a]` is recognised because it either points past
    // the sets created so far or at a set created for another label.
    let mut sets = 0;
    for &a in labels {
        let i = idx[a];
        if i >= sets || trp.mid[i] != a {
            idx[a] = sets;
            trp.mid[sets] = a;
            trp.end[sets] = 1;
            sets += 1;
        } else {
            trp.end[i] += 1;
        }
    }

    let mut next_first = 0;
    for i in 0..sets {
        trp.first[i] = next_first;
        trp.end[i] += next_first;
        trp.mid[i] = trp.end[i];
        next_first = trp.end[i];
    }

    for (t, &a) in labels.iter().enumerate() {
        let i = idx[a];
        let l = trp.mid[i] - 1;
        trp.mid[i] = l;
        trp.elems[l] = t;
        trp.loc[t] = l;
        trp.sidx[t] = i;
    }
    trp.sets = sets;
    debug_assert!((0..sets).all(|i| trp.mid[i] == trp.first[i]));
    Ok(trp)
}
