//! Elementary collapses: search, certificates and derived invariants.

mod endo;
mod lattice;
mod morse;
mod search;
mod verify;

use std::fmt;
use std::time::Duration;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex};
use crate::subdivision::SubdivisionError;

pub use endo::{check_subdivided_links, is_endo_collapsible, LinkCheck, LinkCheckReport};
pub use morse::{discrete_morse_vector, MorseReport, MorseVector};
pub use verify::{verify_certificate, CertificateError, Claim};

pub(crate) use lattice::FaceLattice;
use search::Problem;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;
pub const DEFAULT_ATTEMPTS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Subdivision(#[from] SubdivisionError),
    #[error("complex is not a pure pseudo-manifold")]
    NotPseudoManifold,
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("({}, {}) is not a free pair", .0.free, .0.coface)]
    InvalidPair(CollapsePair),
}

/// How to look for a collapse sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Collapse uniformly random free pairs; `attempts` independent runs with
    /// seeds `seed, seed+1, ...`, keeping the first success in seed order.
    GreedyRandom { seed: u64, attempts: u32 },
    /// Always collapse the lexicographically smallest free face.
    Lexicographic,
    /// Complete search; a negative answer is a proof.
    Exhaustive { node_budget: u64, time_limit: Option<Duration> },
    /// Random greedy attempts, then exhaustive search if they all get stuck.
    Auto { seed: u64, attempts: u32, node_budget: u64 },
}

impl SearchStrategy {
    pub fn greedy(seed: u64) -> Self {
        SearchStrategy::GreedyRandom { seed, attempts: DEFAULT_ATTEMPTS }
    }

    pub fn exhaustive() -> Self {
        SearchStrategy::Exhaustive { node_budget: DEFAULT_NODE_BUDGET, time_limit: None }
    }
}

impl Default for SearchStrategy {
    fn default() -> Self {
        SearchStrategy::Auto { seed: 0, attempts: DEFAULT_ATTEMPTS, node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Why a search ended without a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Failure {
    /// Exhaustive search proved no sequence exists.
    Impossible,
    BudgetExceeded,
    TimedOut,
    /// Every greedy attempt got stuck; nothing is proven.
    GreedyStuck,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Failure::Impossible => "impossible",
            Failure::BudgetExceeded => "budget exceeded",
            Failure::TimedOut => "timed out",
            Failure::GreedyStuck => "greedy search stuck",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CollapsePair {
    pub free: Face,
    pub coface: Face,
}

/// A replayable record of a collapse: optionally remove the interior of
/// one facet, then perform `pairs` in order, ending at the complex whose
/// facets are `terminal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseSequence {
    pub removed: Option<Face>,
    pub pairs: Vec<CollapsePair>,
    pub terminal: Vec<Face>,
}

impl CollapseSequence {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn terminal_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.terminal.iter().cloned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes(CollapseSequence),
    /// Proven impossible by exhaustive search.
    No,
    Unknown(Failure),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn certificate(&self) -> Option<&CollapseSequence> {
        match self {
            Verdict::Yes(s) => Some(s),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No => "no",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Runs a search and turns index pairs back into faces.
pub(crate) fn run(
    lat: &FaceLattice,
    protected: Vec<bool>,
    removed: Option<u32>,
    strategy: &SearchStrategy,
) -> Verdict {
    let problem = Problem { lat, protected, removed };
    match problem.solve(strategy) {
        Ok(pairs) => {
            let mut alive = vec![true; lat.len()];
            if let Some(r) = removed {
                alive[r as usize] = false;
            }
            let pairs = pairs
                .into_iter()
                .map(|(s, b)| {
                    alive[s as usize] = false;
                    alive[b as usize] = false;
                    CollapsePair { free: lat.faces[s as usize].clone(), coface: lat.faces[b as usize].clone() }
                })
                .collect();
            let rest = lat.faces.iter().zip(&alive).filter(|(_, &a)| a).map(|(f, _)| f.clone());
            let terminal = SimplicialComplex::from_facets(rest).facets().to_vec();
            Verdict::Yes(CollapseSequence { removed: removed.map(|r| lat.faces[r as usize].clone()), pairs, terminal })
        }
        Err(Failure::Impossible) => Verdict::No,
        Err(f) => Verdict::Unknown(f),
    }
}

/// Every free face with its unique proper coface, in facet order.
///
/// A free face is a ridge of exactly one facet: a face of codimension two
/// or more in some facet lies in several faces of it.
pub fn free_faces(c: &SimplicialComplex) -> Vec<CollapsePair> {
    let mut out = Vec::new();
    for f in c.facets() {
        for r in f.boundary().filter(|r| !r.is_empty()) {
            if c.facets_containing(&r).nth(1).is_none() {
                out.push(CollapsePair { free: r, coface: f.clone() });
            }
        }
    }
    out
}

/// Removes a free face and its coface.
pub fn elementary_collapse(c: &SimplicialComplex, pair: &CollapsePair) -> Result<SimplicialComplex, CollapseError> {
    let invalid = || CollapseError::InvalidPair(pair.clone());
    if pair.free.len() + 1 != pair.coface.len() || !pair.free.is_subset_of(&pair.coface) {
        return Err(invalid());
    }
    if c.facets().binary_search(&pair.coface).is_err() || c.facets_containing(&pair.free).nth(1).is_some() {
        return Err(invalid());
    }
    let facets = c
        .facets()
        .iter()
        .filter(|f| **f != pair.coface)
        .cloned()
        .chain(pair.coface.boundary().filter(|r| *r != pair.free && !r.is_empty()));
    Ok(SimplicialComplex::from_facets(facets))
}

/// Looks for a collapse of `c` onto the subcomplex `target`.
pub fn collapse_to(
    c: &SimplicialComplex,
    target: &SimplicialComplex,
    strategy: &SearchStrategy,
) -> Result<Verdict, CollapseError> {
    c.check_subcomplex(target)?;
    let lat = FaceLattice::new(c);
    let protected = lat.mask_of(target).expect("checked subcomplex");
    Ok(run(&lat, protected, None, strategy))
}

/// Looks for a collapse of `c` onto a single vertex.
///
/// Some vertex is as good as any other: if `c` collapses onto one vertex
/// it collapses onto each of them, so the smallest vertex is used.
pub fn is_collapsible(c: &SimplicialComplex, strategy: &SearchStrategy) -> Verdict {
    let Some(&v) = c.vertices().first() else {
        // the empty complex has no vertex to collapse onto
        return Verdict::No;
    };
    let target = SimplicialComplex::from_facets([Face::vertex(v)]);
    collapse_to(c, &target, strategy).expect("a vertex is a subcomplex")
}
