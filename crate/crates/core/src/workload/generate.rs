use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::automaton::PtDfa;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("need at least one state")]
    NoStates,
    #[error("need at least one symbol")]
    NoSymbols,
    #[error("density {0} is outside (0, 1]")]
    Density(f64),
    #[error("{finals} final states requested but only {states} states")]
    TooManyFinals { finals: usize, states: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerateParams {
    pub states: usize,
    pub alphabet: usize,
    /// Fraction of the `states * alphabet` possible transitions to define.
    pub density: f64,
    pub finals: usize,
    pub seed: u64,
}

impl GenerateParams {
    pub fn transitions(&self) -> usize {
        (self.density * self.states as f64 * self.alphabet as f64).round() as usize
    }
}

/// A random partial DFA, reproducible from its parameters.
///
/// Exactly `round(density * states * alphabet)` distinct `(tail, label)`
/// pairs are drawn uniformly without replacement, each head uniformly from
/// all states; the finals are a uniform `finals`-subset; state 0 is initial.
/// The stream comes from ChaCha8 seeded with `seed`, so output is identical
/// across platforms.
pub fn generate(params: &GenerateParams) -> Result<PtDfa, GenerateError> {
    let GenerateParams {
        states,
        alphabet,
        density,
        finals,
        seed,
    } = *params;
    if states == 0 {
        return Err(GenerateError::NoStates);
    }
    if alphabet == 0 {
        return Err(GenerateError::NoSymbols);
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(GenerateError::Density(density));
    }
    if finals > states {
        return Err(GenerateError::TooManyFinals { finals, states });
    }
    let space = states * alphabet;
    let m = params.transitions().min(space);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = sample(&mut rng, space, m).into_vec();
    pairs.sort_unstable();
    let transitions: Vec<(usize, usize, usize)> = pairs
        .into_iter()
        .map(|k| (k / alphabet, k % alphabet, rng.random_range(0..states)))
        .collect();
    let final_states = sample(&mut rng, states, finals).into_vec();
    Ok(PtDfa::new(states, alphabet, transitions, 0, final_states)
        .expect("generated descriptions are valid by construction"))
}
