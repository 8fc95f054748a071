//! Minimization of deterministic finite automata with partial transition
//! functions in O(m lg n) time, where `m` counts only the transitions that
//! are actually defined.
//!
//! ```
//! use ptdfa::{minimize_dfa, parse, serialize};
//!
//! let d = parse("dfa 2 1 2 2 0\n0 0 1\n1 0 0\n0\n1\n").unwrap();
//! assert_eq!(serialize(&minimize_dfa(&d)), "dfa 1 1 1 1 0\n0 0 0\n0\n");
//! ```

pub mod adjacency;
pub mod automaton;
pub mod batch;
pub mod hopcroft;
pub mod minimize;
pub mod oracle;
pub mod partition;
pub mod preprocess;
pub mod simple_set;
pub mod splitter_init;
pub mod workload;

pub use automaton::{
    canonicalize, is_isomorphic, parse, serialize, validate, CanonError, ParseError, PtDfa, RawDfa, Record,
    Transition, ValidationError, ValidationErrors,
};
pub use hopcroft::{hopcroft_minimize, try_hopcroft_minimize, BaselineError};
pub use minimize::{minimize, minimize_dfa, minimize_with, MinimizeStats};
pub use oracle::{language_equal, oracle_minimize, AlphabetMismatch};
pub use partition::{PartitionError, RefinablePartition};
pub use preprocess::{relevant_states, restrict, trim};
