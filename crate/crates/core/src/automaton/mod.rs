//! Deterministic automata whose transition function may be partial.
//!
//! States are `0..states()`, symbols are `0..alphabet()`. A missing
//! transition stands for the undefined value. Transitions are kept sorted by
//! `(tail, label)` in three parallel arrays, so two automata compare equal
//! exactly when they have the same textual serialization.

mod canonical;
mod text;

use std::fmt;
use std::ops::Range;

use thiserror::Error;

pub use canonical::{canonicalize, is_isomorphic, CanonError};
pub use text::{parse, serialize, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub tail: usize,
    pub label: usize,
    pub head: usize,
}

impl Transition {
    pub fn new(tail: usize, label: usize, head: usize) -> Self {
        Self { tail, label, head }
    }
}

impl From<(usize, usize, usize)> for Transition {
    fn from((tail, label, head): (usize, usize, usize)) -> Self {
        Self { tail, label, head }
    }
}

/// Which part of an automaton description a diagnostic refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Record {
    Transition(usize),
    Initial,
    Final(usize),
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Record::Transition(i) => write!(f, "transition #{i}"),
            Record::Initial => f.write_str("initial state"),
            Record::Final(i) => write!(f, "final state #{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("the state set is empty")]
    EmptyStateSet,
    #[error("{record}: {what} {value} is out of range 0..{bound}")]
    IndexOutOfRange {
        record: Record,
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("nondeterministic: state {tail} has two transitions labelled {label}")]
    DuplicateTransitionKey { tail: usize, label: usize },
    #[error("state {state} is listed as final more than once")]
    DuplicateFinal { state: usize },
}

/// Every problem found while validating one description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationErrors(pub Vec<ValidationError>);

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl ValidationErrors {
    pub fn errors(&self) -> &[ValidationError] {
        &self.0
    }
}

/// An unchecked automaton description.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawDfa {
    pub states: usize,
    pub alphabet: usize,
    pub transitions: Vec<Transition>,
    pub initial: usize,
    pub finals: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PtDfa {
    states: usize,
    alphabet: usize,
    tails: Vec<usize>,
    labels: Vec<usize>,
    heads: Vec<usize>,
    out_start: Vec<usize>,
    initial: usize,
    finals: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("symbol {symbol} at position {position} is outside the alphabet 0..{alphabet}")]
pub struct SymbolOutOfRange {
    pub position: usize,
    pub symbol: usize,
    pub alphabet: usize,
}

/// Checks a raw description and returns the automaton in canonical
/// transition order, or every diagnostic found.
pub fn validate(raw: RawDfa) -> Result<PtDfa, ValidationErrors> {
    let RawDfa {
        states,
        alphabet,
        mut transitions,
        initial,
        mut finals,
    } = raw;
    let mut errors = Vec::new();
    if states == 0 {
        errors.push(ValidationError::EmptyStateSet);
    }
    let out_of_range = |record, what, value, bound| ValidationError::IndexOutOfRange {
        record,
        what,
        value,
        bound,
    };
    for (i, t) in transitions.iter().enumerate() {
        if t.tail >= states {
            errors.push(out_of_range(Record::Transition(i), "tail", t.tail, states));
        }
        if t.label >= alphabet {
            errors.push(out_of_range(Record::Transition(i), "label", t.label, alphabet));
        }
        if t.head >= states {
            errors.push(out_of_range(Record::Transition(i), "head", t.head, states));
        }
    }
    if states > 0 && initial >= states {
        errors.push(out_of_range(Record::Initial, "state", initial, states));
    }
    for (i, &q) in finals.iter().enumerate() {
        if q >= states {
            errors.push(out_of_range(Record::Final(i), "state", q, states));
        }
    }

    if !transitions.is_sorted() {
        transitions.sort_unstable();
    }
    for w in transitions.windows(2) {
        if w[0].tail == w[1].tail && w[0].label == w[1].label {
            errors.push(ValidationError::DuplicateTransitionKey {
                tail: w[0].tail,
                label: w[0].label,
            });
        }
    }
    if !finals.is_sorted() {
        finals.sort_unstable();
    }
    for w in finals.windows(2) {
        if w[0] == w[1] {
            errors.push(ValidationError::DuplicateFinal { state: w[0] });
        }
    }
    if !errors.is_empty() {
        return Err(ValidationErrors(errors));
    }

    let m = transitions.len();
    let (mut tails, mut labels, mut heads) =
        (Vec::with_capacity(m), Vec::with_capacity(m), Vec::with_capacity(m));
    for t in transitions {
        tails.push(t.tail);
        labels.push(t.label);
        heads.push(t.head);
    }
    Ok(PtDfa::from_sorted_parts(
        states, alphabet, tails, labels, heads, initial, finals,
    ))
}

impl PtDfa {
    pub fn new<T: Into<Transition>>(
        states: usize,
        alphabet: usize,
        transitions: impl IntoIterator<Item = T>,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Self, ValidationErrors> {
        validate(RawDfa {
            states,
            alphabet,
            transitions: transitions.into_iter().map(Into::into).collect(),
            initial,
            finals: finals.into_iter().collect(),
        })
    }

    /// Builds an automaton from parts that already satisfy every invariant:
    /// transitions strictly sorted by `(tail, label)`, finals strictly
    /// ascending, everything in range.
    pub(crate) fn from_sorted_parts(
        states: usize,
        alphabet: usize,
        tails: Vec<usize>,
        labels: Vec<usize>,
        heads: Vec<usize>,
        initial: usize,
        finals: Vec<usize>,
    ) -> Self {
        debug_assert!(states > 0 && initial < states);
        debug_assert!(tails.len() == labels.len() && labels.len() == heads.len());
        debug_assert!((1..tails.len())
            .all(|i| (tails[i - 1], labels[i - 1]) < (tails[i], labels[i])));
        debug_assert!(finals.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(finals.last().is_none_or(|&q| q < states));
        let mut out_start = vec![0usize; states + 1];
        for &q in &tails {
            out_start[q + 1] += 1;
        }
        for q in 0..states {
            out_start[q + 1] += out_start[q];
        }
        Self {
            states,
            alphabet,
            tails,
            labels,
            heads,
            out_start,
            initial,
            finals,
        }
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn transition_count(&self) -> usize {
        self.tails.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    /// Final states, ascending.
    pub fn finals(&self) -> &[usize] {
        &self.finals
    }

    pub fn tails(&self) -> &[usize] {
        &self.tails
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn transition(&self, t: usize) -> Transition {
        Transition::new(self.tails[t], self.labels[t], self.heads[t])
    }

    /// Transitions in canonical `(tail, label)` order.
    pub fn transitions(&self) -> impl ExactSizeIterator<Item = Transition> + '_ {
        (0..self.tails.len()).map(|t| self.transition(t))
    }

    /// Indices of the transitions leaving `q`, ordered by label.
    pub fn outgoing(&self, q: usize) -> Range<usize> {
        self.out_start[q]..self.out_start[q + 1]
    }

    pub fn successor(&self, q: usize, a: usize) -> Option<usize> {
        let range = self.outgoing(q);
        let labels = &self.labels[range.clone()];
        labels
            .binary_search(&a)
            .ok()
            .map(|i| self.heads[range.start + i])
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals.binary_search(&q).is_ok()
    }

    /// `flags[q]` tells whether `q` is final.
    pub fn final_flags(&self) -> Vec<bool> {
        let mut flags = vec![false; self.states];
        for &q in &self.finals {
            flags[q] = true;
        }
        flags
    }

    /// Runs `word` from the initial state. An undefined transition rejects.
    pub fn accepts(&self, word: &[usize]) -> Result<bool, SymbolOutOfRange> {
        let mut q = self.initial;
        for (position, &symbol) in word.iter().enumerate() {
            if symbol >= self.alphabet {
                return Err(SymbolOutOfRange {
                    position,
                    symbol,
                    alphabet: self.alphabet,
                });
            }
            match self.successor(q, symbol) {
                Some(next) => q = next,
                None => return Ok(false),
            }
        }
        Ok(self.is_final(q))
    }

    pub fn to_raw(&self) -> RawDfa {
        RawDfa {
            states: self.states,
            alphabet: self.alphabet,
            transitions: self.transitions().collect(),
            initial: self.initial,
            finals: self.finals.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_description_is_valid() {
        let d = PtDfa::new(1, 1, Vec::<Transition>::new(), 0, []).unwrap();
        assert_eq!((d.states(), d.transition_count(), d.finals().len()), (1, 0, 0));
    }

    #[test]
    fn nondeterminism_is_reported() {
        let err = PtDfa::new(2, 1, [(0, 0, 0), (0, 0, 1)], 0, []).unwrap_err();
        assert_eq!(
            err.errors(),
            &[ValidationError::DuplicateTransitionKey { tail: 0, label: 0 }]
        );
    }

    #[test]
    fn initial_out_of_range() {
        let err = PtDfa::new(2, 1, Vec::<Transition>::new(), 5, []).unwrap_err();
        assert!(matches!(
            err.errors(),
            [ValidationError::IndexOutOfRange {
                record: Record::Initial,
                value: 5,
                bound: 2,
                ..
            }]
        ));
    }

    #[test]
    fn empty_state_set() {
        let err = PtDfa::new(0, 1, Vec::<Transition>::new(), 0, []).unwrap_err();
        assert_eq!(err.errors(), &[ValidationError::EmptyStateSet]);
    }

    #[test]
    fn every_problem_is_listed() {
        let err = PtDfa::new(2, 2, [(0, 2, 0), (3, 0, 1)], 0, [1, 1, 4]).unwrap_err();
        assert_eq!(err.errors().len(), 4, "{err}");
    }

    #[test]
    fn transitions_are_sorted() {
        let d = PtDfa::new(3, 2, [(2, 0, 0), (0, 1, 2), (0, 0, 1)], 0, [2, 0]).unwrap();
        let ts: Vec<_> = d.transitions().map(|t| (t.tail, t.label, t.head)).collect();
        assert_eq!(ts, vec![(0, 0, 1), (0, 1, 2), (2, 0, 0)]);
        assert_eq!(d.finals(), &[0, 2]);
        assert_eq!(d.outgoing(0), 0..2);
        assert_eq!(d.outgoing(1), 2..2);
        assert_eq!(d.successor(0, 1), Some(2));
        assert_eq!(d.successor(1, 0), None);
    }

    #[test]
    fn acceptance() {
        // 0 -a-> 1 -b-> 2, final {2}
        let d = PtDfa::new(3, 2, [(0, 0, 1), (1, 1, 2)], 0, [2]).unwrap();
        assert_eq!(d.accepts(&[0, 1]), Ok(true));
        assert_eq!(d.accepts(&[0]), Ok(false));
        assert_eq!(d.accepts(&[1]), Ok(false));
        assert_eq!(d.accepts(&[]), Ok(false));
        assert!(d.accepts(&[0, 2]).is_err());

        let e = PtDfa::new(1, 1, Vec::<Transition>::new(), 0, [0]).unwrap();
        assert_eq!(e.accepts(&[]), Ok(true));
        assert_eq!(e.accepts(&[0]), Ok(false));
    }
}
