use thiserror::Error;

use super::PtDfa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("state {state} is not reachable from the initial state")]
    UnreachableState { state: usize },
}

const UNSEEN: usize = usize::MAX;

/// Renumbers states in breadth-first order from the initial state, taking
/// outgoing transitions by ascending label. Two automata with every state
/// reachable are isomorphic exactly when their canonical forms are equal.
pub fn canonicalize(d: &PtDfa) -> Result<PtDfa, CanonError> {
    let n = d.states();
    let mut order = Vec::with_capacity(n);
    let mut new_id = vec![UNSEEN; n];
    new_id[d.initial()] = 0;
    order.push(d.initial());

    let m = d.transition_count();
    let (mut tails, mut labels, mut heads) =
        (Vec::with_capacity(m), Vec::with_capacity(m), Vec::with_capacity(m));
    let mut i = 0;
    while i < order.len() {
        let q = order[i];
        for t in d.outgoing(q) {
            let h = d.heads()[t];
            if new_id[h] == UNSEEN {
                new_id[h] = order.len();
                order.push(h);
            }
            tails.push(i);
            labels.push(d.labels()[t]);
            heads.push(new_id[h]);
        }
        i += 1;
    }
    if let Some(state) = new_id.iter().position(|&id| id == UNSEEN) {
        return Err(CanonError::UnreachableState { state });
    }
    let mut finals: Vec<usize> = d.finals().iter().map(|&q| new_id[q]).collect();
    finals.sort_unstable();
    Ok(PtDfa::from_sorted_parts(
        n,
        d.alphabet(),
        tails,
        labels,
        heads,
        0,
        finals,
    ))
}

/// Structural isomorphism. Alphabet sizes are compared literally.
pub fn is_isomorphic(a: &PtDfa, b: &PtDfa) -> Result<bool, CanonError> {
    if a.alphabet() != b.alphabet()
        || a.states() != b.states()
        || a.transition_count() != b.transition_count()
        || a.finals().len() != b.finals().len()
    {
        // Still report unreachable states consistently.
        canonicalize(a)?;
        canonicalize(b)?;
        return Ok(false);
    }
    Ok(canonicalize(a)? == canonicalize(b)?)
}
