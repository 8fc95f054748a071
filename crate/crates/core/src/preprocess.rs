//! Removal of irrelevant states before minimization.
//!
//! A state is relevant when it is the initial state, or it is reachable from
//! the initial state and can reach a final state. Dropping the others (and
//! every transition touching them) leaves the language unchanged.

use thiserror::Error;

use crate::adjacency::Adjacency;
use crate::automaton::PtDfa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreprocessError {
    #[error("the retained state set must contain the initial state {initial}")]
    InitialNotRetained { initial: usize },
}

fn sweep(adj: &Adjacency, ends: &[usize], seeds: &[usize], seen: &mut [bool]) {
    let mut stack: Vec<usize> = Vec::with_capacity(seeds.len());
    for &q in seeds {
        if !seen[q] {
            seen[q] = true;
            stack.push(q);
        }
    }
    while let Some(q) = stack.pop() {
        for &t in adj.get(q) {
            let r = ends[t];
            if !seen[r] {
                seen[r] = true;
                stack.push(r);
            }
        }
    }
}

/// `result[q]` is true iff `q` is relevant. O(n + m).
pub fn relevant_states(d: &PtDfa) -> Vec<bool> {
    let n = d.states();
    let mut forward = vec![false; n];
    let by_tail = Adjacency::group_by(d.tails(), n);
    sweep(&by_tail, d.heads(), &[d.initial()], &mut forward);

    let mut backward = vec![false; n];
    let by_head = Adjacency::group_by(d.heads(), n);
    sweep(&by_head, d.tails(), d.finals(), &mut backward);

    let mut keep: Vec<bool> = forward
        .iter()
        .zip(&backward)
        .map(|(&f, &b)| f && b)
        .collect();
    keep[d.initial()] = true;
    keep
}

/// Keeps the states flagged in `keep`, renumbered densely in ascending
/// order, and the transitions between them.
pub fn restrict(d: &PtDfa, keep: &[bool]) -> Result<PtDfa, PreprocessError> {
    assert_eq!(keep.len(), d.states(), "one flag per state");
    if !keep[d.initial()] {
        return Err(PreprocessError::InitialNotRetained {
            initial: d.initial(),
        });
    }
    if keep.iter().all(|&k| k) {
        return Ok(d.clone());
    }
    let mut new_id = vec![usize::MAX; d.states()];
    let mut n = 0;
    for (q, &k) in keep.iter().enumerate() {
        if k {
            new_id[q] = n;
            n += 1;
        }
    }
    let (mut tails, mut labels, mut heads) = (Vec::new(), Vec::new(), Vec::new());
    for t in 0..d.transition_count() {
        let (q, r) = (d.tails()[t], d.heads()[t]);
        if keep[q] && keep[r] {
            tails.push(new_id[q]);
            labels.push(d.labels()[t]);
            heads.push(new_id[r]);
        }
    }
    let finals = d
        .finals()
        .iter()
        .filter(|&&q| keep[q])
        .map(|&q| new_id[q])
        .collect();
    // Renumbering is monotone, so the canonical transition order survives.
    Ok(PtDfa::from_sorted_parts(
        n,
        d.alphabet(),
        tails,
        labels,
        heads,
        new_id[d.initial()],
        finals,
    ))
}

/// The one-state automaton with no transitions and no final state.
pub fn empty_dfa(alphabet: usize) -> PtDfa {
    PtDfa::from_sorted_parts(1, alphabet, vec![], vec![], vec![], 0, vec![])
}

/// `restrict(d, relevant_states(d))`.
pub fn trim(d: &PtDfa) -> PtDfa {
    let keep = relevant_states(d);
    restrict(d, &keep).expect("the initial state is always relevant")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> PtDfa {
        PtDfa::new(3, 1, [(0, 0, 1), (1, 0, 2)], 0, [1]).unwrap()
    }

    #[test]
    fn everything_relevant() {
        let d = PtDfa::new(3, 1, [(0, 0, 1), (1, 0, 2)], 0, [2]).unwrap();
        assert_eq!(relevant_states(&d), vec![true; 3]);
        assert_eq!(restrict(&d, &[true; 3]).unwrap(), d);
    }

    #[test]
    fn no_finals_keeps_only_initial() {
        let d = PtDfa::new(3, 1, [(0, 0, 1), (1, 0, 2)], 0, []).unwrap();
        let keep = relevant_states(&d);
        assert_eq!(keep, vec![true, false, false]);
        let r = restrict(&d, &keep).unwrap();
        assert_eq!((r.states(), r.transition_count()), (1, 0));
    }

    #[test]
    fn dead_tail_is_dropped() {
        // Brute force: 2 is reachable (0 a a) but no word leads from 2 to {1}.
        let d = chain();
        let keep = relevant_states(&d);
        assert_eq!(keep, vec![true, true, false]);
        let r = restrict(&d, &keep).unwrap();
        assert_eq!(r, PtDfa::new(2, 1, [(0, 0, 1)], 0, [1]).unwrap());
    }

    #[test]
    fn unreachable_final_is_dropped() {
        let d = PtDfa::new(3, 1, [(0, 0, 1), (2, 0, 1)], 0, [1, 2]).unwrap();
        assert_eq!(relevant_states(&d), vec![true, true, false]);
    }

    #[test]
    fn renumbering_keeps_initial() {
        let d = PtDfa::new(4, 1, [(2, 0, 3), (3, 0, 2)], 2, [3]).unwrap();
        let r = trim(&d);
        assert_eq!(r, PtDfa::new(2, 1, [(0, 0, 1), (1, 0, 0)], 0, [1]).unwrap());
    }

    #[test]
    fn initial_must_be_kept() {
        let d = chain();
        assert_eq!(
            restrict(&d, &[false, true, true]),
            Err(PreprocessError::InitialNotRetained { initial: 0 })
        );
    }

    #[test]
    fn empty_language_automaton() {
        let e = empty_dfa(3);
        assert_eq!((e.states(), e.transition_count(), e.finals().len()), (1, 0, 0));
        assert_eq!(e.alphabet(), 3);
        for w in [&[][..], &[0], &[2, 1]] {
            assert_eq!(e.accepts(w), Ok(false));
        }
    }
}
