use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Valmari,
    Hopcroft,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Valmari => "valmari",
            Algorithm::Hopcroft => "hopcroft",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "valmari" => Ok(Algorithm::Valmari),
            "hopcroft" => Ok(Algorithm::Hopcroft),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(GridError::UnknownAlgorithm(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("unknown algorithm `{0}` (expected valmari, hopcroft or oracle)")]
    UnknownAlgorithm(String),
    #[error("bad cell `{0}`: expected <states>,<alphabet>,<density>")]
    CellSyntax(String),
    #[error("bad cell {0}: need states >= 1, alphabet >= 1 and density in (0, 1]")]
    CellRange(Cell),
    #[error("grid has no cells")]
    Empty,
    #[error("grid file: {0}")]
    Toml(String),
}

/// One benchmark configuration: automaton shape and transition density.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub states: usize,
    pub alphabet: usize,
    pub density: f64,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.states, self.alphabet, self.density)
    }
}

impl Cell {
    fn check(self) -> Result<Self, GridError> {
        if self.states >= 1 && self.alphabet >= 1 && self.density > 0.0 && self.density <= 1.0 {
            Ok(self)
        } else {
            Err(GridError::CellRange(self))
        }
    }
}

impl FromStr for Cell {
    type Err = GridError;

    /// `states,alphabet,density`, e.g. `1000,100,0.1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GridError::CellSyntax(s.to_owned());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [n, a, p] = parts[..] else {
            return Err(bad());
        };
        Cell {
            states: n.parse().map_err(|_| bad())?,
            alphabet: a.parse().map_err(|_| bad())?,
            density: p.parse().map_err(|_| bad())?,
        }
        .check()
    }
}

/// A full sweep: every cell is run with every algorithm and seed, and each
/// run is repeated for `|F| = states / 2 + d` over all `d_offsets`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub cells: Vec<Cell>,
    pub algorithms: Vec<Algorithm>,
    pub seeds: u64,
    pub d_offsets: Vec<i64>,
    /// Baseline runs whose estimated working set exceeds this many bytes
    /// are reported as out of memory instead of being attempted.
    pub memory_limit: Option<usize>,
}

pub const DEFAULT_D_OFFSETS: [i64; 3] = [-1, 0, 1];

impl Grid {
    pub fn new(cells: Vec<Cell>) -> Self {
        Self {
            cells,
            algorithms: vec![Algorithm::Valmari],
            seeds: 1,
            d_offsets: DEFAULT_D_OFFSETS.to_vec(),
            memory_limit: None,
        }
    }

    /// Reads a TOML grid description:
    ///
    /// ```toml
    /// algos = ["valmari", "hopcroft"]
    /// seeds = 1
    /// d_offsets = [-1, 0, 1]
    /// densities = [0.1, 1.0]
    ///
    /// [[config]]          # crossed with `densities`
    /// name = "A"
    /// states = 1000
    /// alphabet = 100
    ///
    /// [[cell]]            # taken as is
    /// states = 50
    /// alphabet = 4
    /// density = 0.5
    /// ```
    pub fn from_toml_str(text: &str) -> Result<Self, GridError> {
        let file: GridFile = toml::from_str(text).map_err(|e| GridError::Toml(e.to_string()))?;
        let mut cells = Vec::new();
        for config in &file.config {
            for &density in &file.densities {
                cells.push(
                    Cell {
                        states: config.states,
                        alphabet: config.alphabet,
                        density,
                    }
                    .check()?,
                );
            }
        }
        for &cell in &file.cell {
            cells.push(cell.check()?);
        }
        if cells.is_empty() {
            return Err(GridError::Empty);
        }
        Ok(Self {
            cells,
            algorithms: file.algos.unwrap_or_else(|| vec![Algorithm::Valmari]),
            seeds: file.seeds.unwrap_or(1),
            d_offsets: file.d_offsets.unwrap_or_else(|| DEFAULT_D_OFFSETS.to_vec()),
            memory_limit: file.memory_limit_mb.map(|mb| mb.saturating_mul(1 << 20)),
        })
    }

    /// Number of CSV rows the grid produces.
    pub fn row_count(&self) -> usize {
        self.cells.len() * self.algorithms.len() * self.seeds as usize
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridFile {
    algos: Option<Vec<Algorithm>>,
    seeds: Option<u64>,
    d_offsets: Option<Vec<i64>>,
    #[serde(default)]
    densities: Vec<f64>,
    memory_limit_mb: Option<usize>,
    #[serde(default)]
    config: Vec<ConfigEntry>,
    #[serde(default)]
    cell: Vec<Cell>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigEntry {
    #[allow(dead_code)]
    name: Option<String>,
    states: usize,
    alphabet: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_syntax() {
        let c: Cell = "1000,100,0.1".parse().unwrap();
        assert_eq!((c.states, c.alphabet, c.density), (1000, 100, 0.1));
        assert!(matches!("1000,100".parse::<Cell>(), Err(GridError::CellSyntax(_))));
        assert!(matches!("a,b,c".parse::<Cell>(), Err(GridError::CellSyntax(_))));
        assert!(matches!("10,10,0".parse::<Cell>(), Err(GridError::CellRange(_))));
        assert!(matches!("0,10,0.5".parse::<Cell>(), Err(GridError::CellRange(_))));
    }

    #[test]
    fn algorithm_names() {
        for a in [Algorithm::Valmari, Algorithm::Hopcroft, Algorithm::Oracle] {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("knuutila".parse::<Algorithm>().is_err());
    }

    #[test]
    fn toml_grid() {
        let g = Grid::from_toml_str(
            r#"
            algos = ["valmari", "hopcroft"]
            densities = [0.1, 0.5]
            memory_limit_mb = 64
            [[config]]
            name = "A"
            states = 10
            alphabet = 3
            [[cell]]
            states = 4
            alphabet = 2
            density = 1.0
            "#,
        )
        .unwrap();
        assert_eq!(g.cells.len(), 3);
        assert_eq!(g.algorithms.len(), 2);
        assert_eq!(g.d_offsets, vec![-1, 0, 1]);
        assert_eq!(g.memory_limit, Some(64 << 20));
        assert_eq!(g.row_count(), 6);
    }

    #[test]
    fn toml_errors() {
        assert_eq!(Grid::from_toml_str("seeds = 2"), Err(GridError::Empty));
        assert!(matches!(Grid::from_toml_str("bogus = 1"), Err(GridError::Toml(_))));
        assert!(matches!(
            Grid::from_toml_str("[[cell]]\nstates = 1\nalphabet = 1\ndensity = 2.0"),
            Err(GridError::CellRange(_))
        ));
    }
}
