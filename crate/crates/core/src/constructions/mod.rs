//! Explicit families of triangulated surfaces.

mod appendix;
mod fig3;
mod polygon;
mod table;
mod torus;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use appendix::{appendix_disc, appendix_holes, genus_surface_appendix};
pub use fig3::{genus_surface_fig3, recover_permutation};
pub use polygon::{
    catalan, convex_polygon_triangulations, dyck_words, polygon_triangulation, polygon_triangulation_to_dyck,
};
pub use table::{lower_bound_table, LowerBoundRow};
pub use torus::{torus_catalan, TorusOutcome, TorusRejection};

use crate::complex::{FVector, SimplicialComplex};
use crate::surface::{classify_surface, SurfaceClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("r must be at least 1")]
    ZeroSegments,
    #[error("pattern is not a balanced parenthesis word of length {expected}")]
    BadPattern { expected: usize },
    #[error("complex is not recognised: {0}")]
    NotRecognised(&'static str),
}

/// A bijection of `{1, …, g}`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, ConstructionError> {
        let g = images.len();
        let mut seen = vec![false; g + 1];
        for &i in &images {
            if i == 0 || i > g || std::mem::replace(&mut seen[i], true) {
                return Err(ConstructionError::NotAPermutation(g));
            }
        }
        if g == 0 {
            return Err(ConstructionError::GenusZero);
        }
        Ok(Permutation { images })
    }

    pub fn identity(g: usize) -> Self {
        Permutation { images: (1..=g).collect() }
    }

    /// All `g!` permutations in lexicographic order.
    pub fn all(g: usize) -> Vec<Self> {
        use itertools::Itertools;
        (1..=g).permutations(g).map(|images| Permutation { images }).collect()
    }

    pub fn g(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for `i` in `1..=g`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ConstructionError::NotAPermutation(s.split(',').count()))?;
        Permutation::new(images)
    }
}

/// Summary of a generated complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub family: &'static str,
    pub parameters: Vec<(&'static str, String)>,
    pub n_vertices: usize,
    pub n_facets: usize,
    pub f_vector: FVector,
    pub euler: i64,
    pub class: SurfaceClass,
}

impl ConstructionReport {
    pub fn new(family: &'static str, parameters: Vec<(&'static str, String)>, c: &SimplicialComplex) -> Self {
        let f_vector = c.f_vector();
        ConstructionReport {
            family,
            parameters,
            n_vertices: c.n_vertices(),
            n_facets: c.n_facets(),
            euler: f_vector.euler_characteristic(),
            f_vector,
            class: classify_surface(c),
        }
    }

    pub fn parameter(&self, key: &str) -> Option<&str> {
        self.parameters.iter().find(|(k, _)| *k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        for (k, v) in &self.parameters {
            writeln!(f, "{k}: {v}")?;
        }
        writeln!(f, "vertices: {}", self.n_vertices)?;
        writeln!(f, "facets: {}", self.n_facets)?;
        writeln!(f, "f-vector: {}", self.f_vector)?;
        writeln!(f, "euler: {}", self.euler)?;
        writeln!(f, "surface: {}", self.class)
    }
}
