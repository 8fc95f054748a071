#![allow(dead_code)]

use proptest::prelude::*;
use ptdfa::PtDfa;

/// Builds an automaton from a dense table where `cells[q * alpha + a]` is the
/// `a`-successor of `q`, if any.
pub fn from_table(n: usize, alpha: usize, cells: &[Option<usize>], finals: &[bool], initial: usize) -> PtDfa {
    let transitions = cells
        .iter()
        .enumerate()
        .filter_map(|(k, h)| h.map(|h| (k / alpha, k % alpha, h)));
    let finals = (0..n).filter(|&q| finals[q]);
    PtDfa::new(n, alpha, transitions, initial, finals).unwrap()
}

/// Arbitrary automata with up to `max_states` states and `max_alpha`
/// symbols, any initial state.
pub fn arb_dfa(max_states: usize, max_alpha: usize) -> impl Strategy<Value = PtDfa> {
    (1..=max_states, 1..=max_alpha).prop_flat_map(|(n, alpha)| {
        (
            proptest::collection::vec(proptest::option::weighted(0.6, 0..n), n * alpha),
            proptest::collection::vec(any::<bool>(), n),
            0..n,
        )
            .prop_map(move |(cells, finals, initial)| from_table(n, alpha, &cells, &finals, initial))
    })
}

/// Every automaton with exactly `n` states and `alpha` symbols, initial
/// state 0: all `(n + 1)^(n * alpha)` partial tables times all `2^n` final
/// sets.
pub fn all_dfas(n: usize, alpha: usize) -> impl Iterator<Item = PtDfa> {
    let cells = n * alpha;
    let tables = (n + 1).pow(cells as u32);
    (0..tables).flat_map(move |code| {
        let mut c = code;
        let table: Vec<Option<usize>> = (0..cells)
            .map(|_| {
                let digit = c % (n + 1);
                c /= n + 1;
                digit.checked_sub(1)
            })
            .collect();
        (0..1usize << n).map(move |mask| {
            let finals: Vec<bool> = (0..n).map(|q| mask >> q & 1 == 1).collect();
            from_table(n, alpha, &table, &finals, 0)
        })
    })
}

/// Straightforward reference for the refinable partition: a set index per
/// element and a mark bit per element.
#[derive(Debug, Clone)]
pub struct NaivePartition {
    pub set: Vec<usize>,
    pub marked: Vec<bool>,
    pub sets: usize,
}

impl NaivePartition {
    pub fn new(max: usize) -> Self {
        Self {
            set: vec![0; max],
            marked: vec![false; max],
            sets: 1,
        }
    }

    pub fn members(&self, s: usize) -> Vec<usize> {
        (0..self.set.len()).filter(|&e| self.set[e] == s).collect()
    }

    pub fn mark(&mut self, e: usize) {
        self.marked[e] = true;
    }

    pub fn split(&mut self, s: usize) -> Option<usize> {
        let members = self.members(s);
        let k = members.iter().filter(|&&e| self.marked[e]).count();
        let result = if k == 0 || k == members.len() {
            None
        } else {
            let new = self.sets;
            self.sets += 1;
            for &e in &members {
                if self.marked[e] {
                    self.set[e] = new;
                }
            }
            Some(new)
        };
        for &e in &members {
            self.marked[e] = false;
        }
        result
    }
}

/// Compares every observable of `p` with the model, then checks the
/// structural invariants. Linear in the universe plus the number of sets.
pub fn agrees(p: &ptdfa::RefinablePartition, model: &NaivePartition) -> Result<(), String> {
    p.check_invariants()?;
    if p.sets() != model.sets {
        return Err(format!("{} sets, model has {}", p.sets(), model.sets));
    }
    let mut groups = vec![Vec::new(); model.sets];
    for e in 0..model.set.len() {
        if p.set_of(e) != model.set[e] {
            return Err(format!("element {e} in set {}, model says {}", p.set_of(e), model.set[e]));
        }
        if p.is_marked(e) != model.marked[e] {
            return Err(format!("mark of {e} disagrees"));
        }
        groups[model.set[e]].push(e);
    }
    for (s, members) in groups.iter().enumerate() {
        if p.size(s) != members.len() {
            return Err(format!("size of set {s} disagrees"));
        }
        if p.no_marks(s) != members.iter().all(|&e| !model.marked[e]) {
            return Err(format!("no_marks of set {s} disagrees"));
        }
        let mut scanned = vec![p.first(s)];
        while let Some(e) = p.next(*scanned.last().unwrap()) {
            scanned.push(e);
        }
        scanned.sort_unstable();
        if &scanned != members {
            return Err(format!("scan of set {s} is {scanned:?}, model has {members:?}"));
        }
        let mut slice = p.elements(s).to_vec();
        slice.sort_unstable();
        if &slice != members {
            return Err(format!("elements of set {s} disagree"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub enum Op {
    Mark(usize),
    Split(usize),
}

/// Applies one operation to both structures. Indices are reduced modulo the
/// universe or the current number of sets.
pub fn apply(p: &mut ptdfa::RefinablePartition, model: &mut NaivePartition, op: Op) -> Result<(), String> {
    match op {
        Op::Mark(e) => {
            let e = e % model.set.len();
            p.mark(e);
            model.mark(e);
        }
        Op::Split(s) => {
            let s = s % model.sets;
            let (got, want) = (p.split(s), model.split(s));
            if got != want {
                return Err(format!("split({s}) returned {got:?}, model {want:?}"));
            }
        }
    }
    agrees(p, model)
}

/// Checks the final partition of `d` against the language classes: states
/// share a block iff their languages are equal, and states sharing a block
/// have successors in the same block for every symbol (absent matching
/// absent).
pub fn check_final_partition(d: &PtDfa) -> Result<(), String> {
    use ptdfa::minimize::partition_states_with;
    use ptdfa::oracle::language_classes;
    use ptdfa::simple_set::SimpleSet;

    let r = ptdfa::trim(d);
    if r.finals().is_empty() {
        return Ok(());
    }
    let block = partition_states_with::<SimpleSet, ()>(&r, &mut ());
    let class = language_classes(&r);
    let n = r.states();
    for p in 0..n {
        for q in 0..n {
            if (block[p] == block[q]) != (class[p] == class[q]) {
                return Err(format!(
                    "states {p} and {q}: blocks {} {} but language classes {} {}",
                    block[p], block[q], class[p], class[q]
                ));
            }
            if block[p] != block[q] {
                continue;
            }
            for a in 0..r.alphabet() {
                let sp = r.successor(p, a).map(|x| block[x]);
                let sq = r.successor(q, a).map(|x| block[x]);
                if sp != sq {
                    return Err(format!("states {p} and {q} share a block but on {a} go to {sp:?} and {sq:?}"));
                }
            }
        }
    }
    Ok(())
}
