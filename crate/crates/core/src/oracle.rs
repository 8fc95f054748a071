//! Brute-force reference minimizer.
//!
//! Completes the transition function with a sink state, computes the
//! distinguishability table by Moore's fixpoint iteration in O(n² · alpha)
//! per round, merges indistinguishable states, and drops the sink class and
//! anything unreachable. It shares no refinement code with
//! [`crate::minimize`]; it is meant for automata with at most a few hundred
//! states.

use std::collections::VecDeque;

use thiserror::Error;

use crate::automaton::{canonicalize, PtDfa};
use crate::preprocess::empty_dfa;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("alphabet sizes differ: {left} vs {right}")]
pub struct AlphabetMismatch {
    pub left: usize,
    pub right: usize,
}

/// Dense total transition table over `states + 1` states; the last one is
/// the sink.
fn completed_table(d: &PtDfa) -> (usize, Vec<usize>) {
    let (n, alpha) = (d.states(), d.alphabet());
    let sink = n;
    let mut table = vec![sink; (n + 1) * alpha];
    for t in d.transitions() {
        table[t.tail * alpha + t.label] = t.head;
    }
    (sink, table)
}

/// Language class of every state of `d` plus, at index `states()`, of the
/// sink. Two states get the same class iff they accept the same language.
/// Class numbers are assigned in order of first appearance.
pub fn language_classes(d: &PtDfa) -> Vec<usize> {
    let (n, alpha) = (d.states(), d.alphabet());
    let total = n + 1;
    let (_, table) = completed_table(d);
    let mut accepting = d.final_flags();
    accepting.push(false);

    let mut distinct = vec![false; total * total];
    for p in 0..total {
        for q in 0..total {
            distinct[p * total + q] = accepting[p] != accepting[q];
        }
    }
    loop {
        let mut changed = false;
        for p in 0..total {
            for q in p + 1..total {
                if distinct[p * total + q] {
                    continue;
                }
                let split = (0..alpha).any(|a| {
                    let (x, y) = (table[p * alpha + a], table[q * alpha + a]);
                    distinct[x * total + y]
                });
                if split {
                    distinct[p * total + q] = true;
                    distinct[q * total + p] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut class = vec![usize::MAX; total];
    let mut next = 0;
    for p in 0..total {
        if class[p] != usize::MAX {
            continue;
        }
        class[p] = next;
        for q in p + 1..total {
            if !distinct[p * total + q] {
                class[q] = next;
            }
        }
        next += 1;
    }
    class
}

pub fn oracle_minimize(d: &PtDfa) -> PtDfa {
    let alpha = d.alphabet();
    let class = language_classes(d);
    let sink_class = class[d.states()];
    let start = class[d.initial()];
    if start == sink_class {
        return empty_dfa(alpha);
    }
    let classes = class.iter().max().map_or(0, |&c| c + 1);
    let mut rep = vec![usize::MAX; classes];
    for (q, &c) in class.iter().enumerate().take(d.states()) {
        if rep[c] == usize::MAX {
            rep[c] = q;
        }
    }
    let accepting = d.final_flags();

    // Walk the quotient from the start class; the sink class is never entered.
    let mut id = vec![usize::MAX; classes];
    let mut order = vec![start];
    id[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut edges = Vec::new();
    while let Some(c) = queue.pop_front() {
        let q = rep[c];
        for t in d.outgoing(q) {
            let target = class[d.heads()[t]];
            if target == sink_class {
                continue;
            }
            if id[target] == usize::MAX {
                id[target] = order.len();
                order.push(target);
                queue.push_back(target);
            }
            edges.push((id[c], d.labels()[t], id[target]));
        }
    }
    let finals: Vec<usize> = order
        .iter()
        .enumerate()
        .filter(|(_, &c)| accepting[rep[c]])
        .map(|(i, _)| i)
        .collect();
    let q = PtDfa::new(order.len(), alpha, edges, 0, finals)
        .expect("quotient of a deterministic automaton is deterministic");
    canonicalize(&q).expect("built by search from the start class")
}

/// `L(a) == L(b)`, by searching the product of the sink-completed automata
/// for a pair that disagrees on acceptance.
pub fn language_equal(a: &PtDfa, b: &PtDfa) -> Result<bool, AlphabetMismatch> {
    if a.alphabet() != b.alphabet() {
        return Err(AlphabetMismatch {
            left: a.alphabet(),
            right: b.alphabet(),
        });
    }
    let alpha = a.alphabet();
    let (sink_a, table_a) = completed_table(a);
    let (sink_b, table_b) = completed_table(b);
    let (fa, fb) = (a.final_flags(), b.final_flags());
    let width = sink_b + 1;
    let mut seen = vec![false; (sink_a + 1) * width];
    let mut stack = vec![(a.initial(), b.initial())];
    seen[a.initial() * width + b.initial()] = true;
    while let Some((p, q)) = stack.pop() {
        let acc_p = p != sink_a && fa[p];
        let acc_q = q != sink_b && fb[q];
        if acc_p != acc_q {
            return Ok(false);
        }
        if p == sink_a && q == sink_b {
            continue;
        }
        for x in 0..alpha {
            let (p2, q2) = (table_a[p * alpha + x], table_b[q * alpha + x]);
            if !seen[p2 * width + q2] {
                seen[p2 * width + q2] = true;
                stack.push((p2, q2));
            }
        }
    }
    Ok(true)
}
