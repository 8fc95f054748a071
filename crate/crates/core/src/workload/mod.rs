//! Random automata, benchmark grids, and the CSV sweep driver.

mod bench;
mod generate;
mod grid;

pub use bench::{run_bench, run_row, write_csv, BenchRow, ORACLE_STATE_LIMIT};
pub use generate::{generate, GenerateError, GenerateParams};
pub use grid::{Algorithm, Cell, Grid, GridError, DEFAULT_D_OFFSETS};
