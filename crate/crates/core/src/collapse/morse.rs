//! Discrete Morse vectors from collapse-and-delete rounds.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lattice::{FaceLattice, FreeSet, State};
use super::SearchStrategy;
use crate::complex::SimplicialComplex;
use crate::par;

/// Critical cell counts `(c_0, ..., c_d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MorseVector(pub Vec<usize>);

impl MorseVector {
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Smaller is better: compared from the top dimension down.
    pub fn cmp_top_down(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl fmt::Display for MorseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

#[derive(Debug, Clone)]
pub struct MorseReport {
    pub best: MorseVector,
    /// One vector per round, in round order.
    pub rounds: Vec<MorseVector>,
}

/// Collapses greedily, and whenever stuck deletes a top-dimensional face and
/// counts it as critical; the last surviving vertex is critical too.
///
/// Random strategies run `rounds` rounds with seeds `seed, seed+1, ...`.
/// Lexicographic and exhaustive strategies are deterministic and run once
/// with lexicographic choices.
pub fn discrete_morse_vector(c: &SimplicialComplex, strategy: &SearchStrategy, rounds: u32) -> MorseReport {
    let lat = FaceLattice::new(c);
    let seeds: Vec<Option<u64>> = match *strategy {
        SearchStrategy::GreedyRandom { seed, .. } | SearchStrategy::Auto { seed, .. } => {
            (0..rounds.max(1) as u64).map(|i| Some(seed.wrapping_add(i))).collect()
        }
        _ => vec![None],
    };
    let vectors = par::map(&seeds, |s| one_round(&lat, *s));
    let best = vectors
        .iter()
        .min_by(|a, b| a.cmp_top_down(b))
        .cloned()
        .unwrap_or(MorseVector(Vec::new()));
    MorseReport { best, rounds: vectors }
}

fn one_round(lat: &FaceLattice, seed: Option<u64>) -> MorseVector {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut state = State::new(lat, vec![false; lat.len()]);
    let mut free = FreeSet::new(&state, rng.is_none());
    let mut critical = vec![0usize; lat.by_dim.len()];
    loop {
        if !free.is_empty() {
            let sigma = match rng.as_mut() {
                Some(r) => free.nth(r.gen_range(0..free.len())),
                None => free.first_ordered().expect("ordered free set"),
            };
            let big = state.free_partner(sigma).expect("free set is in sync");
            state.collapse(sigma, big);
            let affected = state.affected(&[sigma, big]);
            free.refresh_all(&state, &affected);
            continue;
        }
        let Some(k) = state.open_dim() else { break };
        let top: Vec<u32> = lat.by_dim[k].iter().copied().filter(|&f| state.alive[f as usize]).collect();
        let pick = match rng.as_mut() {
            Some(r) => top[r.gen_range(0..top.len())],
            None => top[0],
        };
        state.remove(pick);
        critical[k] += 1;
        let affected = state.affected(&[pick]);
        free.refresh_all(&state, &affected);
    }
    MorseVector(critical)
}
