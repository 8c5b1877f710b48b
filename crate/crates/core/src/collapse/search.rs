//! Greedy, lexicographic and exhaustive collapse searches over a [`FaceLattice`].

use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lattice::{FaceLattice, FreeSet, State};
use super::{Failure, SearchStrategy};
use crate::par;

/// Index pairs `(free face, coface)` in the order they were collapsed.
pub(crate) type Pairs = Vec<(u32, u32)>;

pub(crate) type RawOutcome = Result<Pairs, Failure>;

/// A collapse problem: the lattice, the faces that must survive, and an optional
/// facet removed before collapsing.
pub(crate) struct Problem<'a> {
    pub lat: &'a FaceLattice,
    pub protected: Vec<bool>,
    pub removed: Option<u32>,
}

impl<'a> Problem<'a> {
    fn initial_state(&self) -> State<'a> {
        let mut s = State::new(self.lat, self.protected.clone());
        if let Some(r) = self.removed {
            s.remove(r);
        }
        s
    }

    pub fn solve(&self, strategy: &SearchStrategy) -> RawOutcome {
        match *strategy {
            SearchStrategy::Lexicographic => self.greedy(None),
            SearchStrategy::GreedyRandom { seed, attempts } => self.random_attempts(seed, attempts),
            SearchStrategy::Exhaustive { node_budget, time_limit } => {
                self.exhaustive(node_budget, time_limit.map(|t| Instant::now() + t))
            }
            SearchStrategy::Auto { seed, attempts, node_budget } => {
                match self.random_attempts(seed, attempts) {
                    Ok(p) => Ok(p),
                    Err(_) => self.exhaustive(node_budget, None),
                }
            }
        }
    }

    fn random_attempts(&self, seed: u64, attempts: u32) -> RawOutcome {
        let seeds: Vec<u64> = (0..attempts as u64).map(|i| seed.wrapping_add(i)).collect();
        par::find_map_first(&seeds, |&s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            self.greedy(Some(&mut rng)).ok()
        })
        .ok_or(Failure::GreedyStuck)
    }

    /// Collapses free pairs until none is left. Picks uniformly at random when
    /// given an rng, otherwise always the lexicographically smallest free face.
    pub fn greedy(&self, mut rng: Option<&mut ChaCha8Rng>) -> RawOutcome {
        let mut state = self.initial_state();
        let mut free = FreeSet::new(&state, rng.is_none());
        let mut pairs = Vec::new();
        while !free.is_empty() {
            let sigma = match rng.as_deref_mut() {
                Some(r) => free.nth(r.gen_range(0..free.len())),
                None => free.first_ordered().expect("ordered free set"),
            };
            let big = state.free_partner(sigma).expect("free set is in sync");
            state.collapse(sigma, big);
            pairs.push((sigma, big));
            let affected = state.affected(&[sigma, big]);
            free.refresh_all(&state, &affected);
        }
        if state.open_dim().is_none() {
            Ok(pairs)
        } else {
            Err(Failure::GreedyStuck)
        }
    }

    /// Depth-first search over collapse orders.
    ///
    /// Any collapse sequence can be rearranged so that dimensions are
    /// non-increasing, so at each node only pairs in the current top open
    /// dimension are branched on. Once only vertices and edges are left the
    /// outcome no longer depends on the order (leaf pruning of a graph is
    /// confluent) and the search finishes greedily. States proven hopeless
    /// are remembered by their alive set.
    pub fn exhaustive(&self, node_budget: u64, deadline: Option<Instant>) -> RawOutcome {
        let mut dfs = Dfs {
            state: self.initial_state(),
            path: Vec::new(),
            failed: HashSet::new(),
            nodes: 0,
            node_budget,
            deadline,
        };
        match dfs.run()? {
            true => Ok(dfs.path),
            false => Err(Failure::Impossible),
        }
    }
}

struct Dfs<'a> {
    state: State<'a>,
    path: Pairs,
    failed: HashSet<Vec<u64>>,
    nodes: u64,
    node_budget: u64,
    deadline: Option<Instant>,
}

impl Dfs<'_> {
    fn run(&mut self) -> Result<bool, Failure> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Failure::BudgetExceeded);
        }
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Failure::TimedOut);
        }
        let k = match self.state.open_dim() {
            None => return Ok(true),
            Some(0) => return Ok(false),
            Some(1) => return Ok(self.finish_graph()),
            Some(k) => k,
        };
        if self.has_stuck_face(k) {
            return Ok(false);
        }
        let key = self.state.key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let lat = self.state.lat;
        let candidates: Vec<(u32, u32)> = lat.by_dim[k - 1]
            .iter()
            .filter_map(|&s| self.state.free_partner(s).map(|b| (s, b)))
            .collect();
        for (sigma, big) in candidates {
            // an earlier sibling may have used the same coface
            if self.state.free_partner(sigma) != Some(big) {
                continue;
            }
            self.state.collapse(sigma, big);
            self.path.push((sigma, big));
            if self.run()? {
                return Ok(true);
            }
            self.path.pop();
            self.state.uncollapse(sigma, big);
        }
        self.failed.insert(key);
        Ok(false)
    }

    /// An open `k`-face whose `(k-1)`-faces are all protected can never be removed.
    fn has_stuck_face(&self, k: usize) -> bool {
        let s = &self.state;
        s.lat.by_dim[k].iter().any(|&f| {
            s.alive[f as usize]
                && !s.protected[f as usize]
                && s.lat.down[f as usize].iter().all(|&r| s.protected[r as usize])
        })
    }

    /// Prunes leaves of the remaining graph; leaves the state untouched on failure.
    fn finish_graph(&mut self) -> bool {
        let lat = self.state.lat;
        let start = self.path.len();
        let mut stack: Vec<u32> = lat.by_dim[0].clone();
        while let Some(v) = stack.pop() {
            if let Some(e) = self.state.free_partner(v) {
                self.state.collapse(v, e);
                self.path.push((v, e));
                stack.extend(lat.down[e as usize].iter().copied().filter(|&w| w != v));
            }
        }
        if self.state.open_dim().is_none() {
            return true;
        }
        for (v, e) in self.path.drain(start..).rev() {
            self.state.uncollapse(v, e);
        }
        false
    }
}
