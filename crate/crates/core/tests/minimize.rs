mod common;

use std::collections::HashMap;

use common::{arb_dfa, check_final_partition};
use proptest::prelude::*;
use ptdfa::minimize::{partition_states_with, LoopView, Probe};
use ptdfa::oracle::language_equal;
use ptdfa::simple_set::{FifoSet, SimpleSet};
use ptdfa::splitter_init::{init_trp_grouping, init_trp_grouping_with_scratch, init_trp_presorted};
use ptdfa::{hopcroft_minimize, is_isomorphic, minimize, minimize_dfa, minimize_with, oracle_minimize, trim, PtDfa};

/// Checks at every loop head that each pair of same-block states whose
/// successors on some symbol lie in different blocks (or exactly one is
/// absent) is still separated by an unready splitter on that symbol.
#[derive(Default)]
struct PendingSeparation {
    heads: usize,
    violations: Vec<String>,
}

impl Probe for PendingSeparation {
    const WANTS_LOOP_HEAD: bool = true;

    fn loop_head(&mut self, view: &LoopView<'_>) {
        self.heads += 1;
        let d = view.automaton();
        let unready = view.unready_splitters();
        for p in 0..d.states() {
            for q in p + 1..d.states() {
                if view.block_of(p) != view.block_of(q) {
                    continue;
                }
                for a in 0..d.alphabet() {
                    let sp = d.successor(p, a).map(|x| view.block_of(x));
                    let sq = d.successor(q, a).map(|x| view.block_of(x));
                    if sp == sq {
                        continue;
                    }
                    let separated = unready
                        .iter()
                        .any(|&(c, b)| b == a && (sp == Some(c)) != (sq == Some(c)));
                    if !separated {
                        self.violations.push(format!("{p},{q} on {a}: {sp:?} vs {sq:?}"));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn trimming_preserves_the_language(d in arb_dfa(8, 3)) {
        prop_assert!(language_equal(&d, &trim(&d)).unwrap());
    }

    #[test]
    fn minimizing_preserves_the_language(d in arb_dfa(8, 3)) {
        let (m, stats) = minimize(&d);
        prop_assert!(language_equal(&d, &m).unwrap());
        prop_assert!(stats.within_bounds(), "{stats:?}");
        prop_assert_eq!(minimize_dfa(&m), m.clone());
        prop_assert!(m.states() <= d.states().max(1));
    }

    #[test]
    fn all_three_minimizers_agree(d in arb_dfa(8, 3)) {
        let m = minimize_dfa(&d);
        prop_assert_eq!(&m, &oracle_minimize(&d));
        prop_assert_eq!(&m, &hopcroft_minimize(&d).0);
        prop_assert!(is_isomorphic(&m, &oracle_minimize(&d)).unwrap());
    }

    #[test]
    fn worklist_order_does_not_change_the_result(d in arb_dfa(8, 3)) {
        prop_assert_eq!(
            minimize_with::<SimpleSet, ()>(&d, &mut ()),
            minimize_with::<FifoSet, ()>(&d, &mut ())
        );
    }

    #[test]
    fn final_partition_lemmas(d in arb_dfa(10, 3)) {
        if let Err(e) = check_final_partition(&d) {
            prop_assert!(false, "{e}");
        }
    }

    #[test]
    fn pending_separation_holds_at_every_loop_head(d in arb_dfa(8, 3)) {
        let r = trim(&d);
        prop_assume!(!r.finals().is_empty());
        let mut probe = PendingSeparation::default();
        partition_states_with::<SimpleSet, _>(&r, &mut probe);
        prop_assert!(probe.heads >= 1);
        prop_assert!(probe.violations.is_empty(), "{:?}", probe.violations);
        let mut fifo = PendingSeparation::default();
        partition_states_with::<FifoSet, _>(&r, &mut fifo);
        prop_assert!(fifo.violations.is_empty(), "{:?}", fifo.violations);
    }

    #[test]
    fn splitter_sets_follow_the_label_histogram(
        alphabet in 1usize..20,
        raw in proptest::collection::vec(any::<usize>(), 0..200),
        poison in any::<usize>(),
    ) {
        let labels: Vec<usize> = raw.iter().map(|x| x % alphabet).collect();
        let mut histogram: HashMap<usize, usize> = HashMap::new();
        for &a in &labels {
            *histogram.entry(a).or_default() += 1;
        }
        let mut scratch = vec![poison; alphabet];
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        let partitions = [
            (init_trp_grouping(&labels, alphabet).unwrap(), &labels),
            (init_trp_grouping_with_scratch(&labels, &mut scratch).unwrap(), &labels),
            (init_trp_presorted(&sorted).unwrap(), &sorted),
        ];
        for (trp, labels) in partitions {
            prop_assert_eq!(trp.sets(), histogram.len());
            let mut seen = HashMap::new();
            for s in 0..trp.sets() {
                let members = trp.elements(s);
                let a = labels[members[0]];
                prop_assert!(members.iter().all(|&t| labels[t] == a));
                prop_assert!(seen.insert(a, members.len()).is_none());
                prop_assert!(trp.no_marks(s));
            }
            prop_assert_eq!(&seen, &histogram);
            prop_assert!(trp.check_invariants().is_ok());
        }
    }
}

#[test]
fn unsorted_labels_are_rejected_by_the_presorted_initializer() {
    assert!(init_trp_presorted(&[0, 1, 0]).is_err());
    assert!(init_trp_presorted(&[2, 2, 0, 1, 1]).is_ok());
}

#[test]
fn large_sparse_instance() {
    let d = ptdfa::workload::generate(&ptdfa::workload::GenerateParams {
        states: 10_000,
        alphabet: 100,
        density: 0.1,
        finals: 5000,
        seed: 1,
    })
    .unwrap();
    let (m, stats) = minimize(&d);
    assert!(stats.within_bounds(), "{stats:?}");
    assert_eq!(m, hopcroft_minimize(&d).0);
}

#[test]
fn counting_automaton_collapses() {
    // Accepts words over {a} whose length is a multiple of 3, built with 12 states.
    let d = PtDfa::new(12, 1, (0..12).map(|q| (q, 0, (q + 1) % 12)), 0, [0, 3, 6, 9]).unwrap();
    let m = minimize_dfa(&d);
    assert_eq!(ptdfa::serialize(&m), "dfa 3 1 3 1 0\n0 0 1\n1 0 2\n2 0 0\n0\n");
}
