use std::io;
use std::time::Instant;

use serde::Serialize;

use super::generate::{generate, GenerateParams};
use super::grid::{Algorithm, Cell, Grid};
use crate::batch;
use crate::hopcroft::{try_hopcroft_minimize, BaselineError};
use crate::minimize::minimize;
use crate::oracle::oracle_minimize;

/// The table-filling reference is quadratic in memory; larger inputs are
/// skipped rather than attempted.
pub const ORACLE_STATE_LIMIT: usize = 2000;

/// One CSV row: a cell run with one algorithm and one seed over all
/// `d_offsets`. Sizes and counters come from the `d = 0` run (or the first
/// offset if 0 is absent); times are the minimum and maximum over offsets.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub n: usize,
    pub alpha: usize,
    pub p: f64,
    pub d: i64,
    pub seed: u64,
    pub m_in: Option<usize>,
    pub states_out: Option<usize>,
    pub trans_out: Option<usize>,
    pub splits: Option<u64>,
    pub scan_touches: Option<u64>,
    pub millis_min: Option<f64>,
    pub millis_max: Option<f64>,
    pub outcome: String,
}

struct Run {
    m_in: usize,
    states_out: usize,
    trans_out: usize,
    counters: Option<(u64, u64)>,
    millis: f64,
}

fn finals_for(states: usize, d: i64) -> usize {
    (states as i64 / 2 + d).clamp(0, states as i64) as usize
}

fn run_once(cell: Cell, algo: Algorithm, seed: u64, d: i64, memory_limit: Option<usize>) -> Result<Run, String> {
    let params = GenerateParams {
        states: cell.states,
        alphabet: cell.alphabet,
        density: cell.density,
        finals: finals_for(cell.states, d),
        seed,
    };
    let dfa = generate(&params).map_err(|e| format!("error: {e}"))?;
    let m_in = dfa.transition_count();
    let start = Instant::now();
    let (states_out, trans_out, counters) = match algo {
        Algorithm::Valmari => {
            let (out, stats) = minimize(&dfa);
            let counters = (
                stats.block_splits + stats.splitter_splits,
                stats.splitter_scan_touches + stats.block_scan_touches,
            );
            (out.states(), out.transition_count(), Some(counters))
        }
        Algorithm::Hopcroft => match try_hopcroft_minimize(&dfa, memory_limit) {
            Ok((out, stats)) => (
                out.states(),
                out.transition_count(),
                Some((stats.block_splits, stats.splitter_scan_touches)),
            ),
            Err(BaselineError::OutOfMemory { .. }) => return Err("oom".into()),
        },
        Algorithm::Oracle => {
            if cell.states > ORACLE_STATE_LIMIT {
                return Err(format!("skipped: oracle limited to {ORACLE_STATE_LIMIT} states"));
            }
            let out = oracle_minimize(&dfa);
            (out.states(), out.transition_count(), None)
        }
    };
    let millis = start.elapsed().as_secs_f64() * 1e3;
    Ok(Run {
        m_in,
        states_out,
        trans_out,
        counters,
        millis,
    })
}

/// Runs one row of the grid.
pub fn run_row(cell: Cell, algo: Algorithm, seed: u64, d_offsets: &[i64], memory_limit: Option<usize>) -> BenchRow {
    let rep_d = if d_offsets.contains(&0) {
        0
    } else {
        d_offsets.first().copied().unwrap_or(0)
    };
    let offsets: &[i64] = if d_offsets.is_empty() { &[0] } else { d_offsets };
    let mut row = BenchRow {
        algo,
        n: cell.states,
        alpha: cell.alphabet,
        p: cell.density,
        d: rep_d,
        seed,
        m_in: None,
        states_out: None,
        trans_out: None,
        splits: None,
        scan_touches: None,
        millis_min: None,
        millis_max: None,
        outcome: "ok".into(),
    };
    let mut times = Vec::with_capacity(offsets.len());
    for &d in offsets {
        match run_once(cell, algo, seed, d, memory_limit) {
            Ok(run) => {
                times.push(run.millis);
                if d == rep_d {
                    row.m_in = Some(run.m_in);
                    row.states_out = Some(run.states_out);
                    row.trans_out = Some(run.trans_out);
                    row.splits = run.counters.map(|c| c.0);
                    row.scan_touches = run.counters.map(|c| c.1);
                }
            }
            Err(outcome) => {
                row.outcome = outcome;
                return row;
            }
        }
    }
    row.millis_min = times.iter().copied().reduce(f64::min);
    row.millis_max = times.iter().copied().reduce(f64::max);
    row
}

/// Every row of `grid` in order cell, algorithm, seed. With `jobs > 1` rows
/// run concurrently on a pool of that many threads (when built with the
/// `parallel` feature); with `jobs <= 1` they run one after another, which
/// keeps timings free of interference.
pub fn run_bench(grid: &Grid, jobs: usize) -> Vec<BenchRow> {
    let mut tasks = Vec::with_capacity(grid.row_count());
    for &cell in &grid.cells {
        for &algo in &grid.algorithms {
            for seed in 0..grid.seeds {
                tasks.push((cell, algo, seed));
            }
        }
    }
    let run = |&(cell, algo, seed): &(Cell, Algorithm, u64)| {
        run_row(cell, algo, seed, &grid.d_offsets, grid.memory_limit)
    };
    if jobs > 1 {
        batch::with_jobs(jobs, || batch::map(&tasks, run))
    } else {
        tasks.iter().map(run).collect()
    }
}

pub fn write_csv<W: io::Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
