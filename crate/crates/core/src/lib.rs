//! Simplicial complexes, barycentric subdivision, collapses and small
//! enumerations of triangulated surfaces.
//!
//! Complexes are immutable values identified by their facets. Subcomplexes
//! share the vertex ids of their parent. Heavy searches are data-parallel
//! through rayon when the `parallel` feature (on by default) is enabled.

pub mod census;
pub mod collapse;
pub mod complex;
pub mod constructions;
pub mod format;
pub mod par;
pub mod random;
pub mod reconstruction;
pub mod subdivision;
pub mod surface;

pub use census::{canonical_label, iso, CanonicalLabel, IsoCertificate};
pub use collapse::{
    collapse_to, elementary_collapse, free_faces, is_collapsible, is_endo_collapsible, CollapseError, CollapsePair,
    CollapseSequence, SearchStrategy, Verdict,
};
pub use complex::{cone, join, ComplexError, FVector, Face, SimplicialComplex, VertexId};
pub use reconstruction::{rank_coloring, reconstruct, RankColoring, Reconstruction, ReconstructionError};
pub use subdivision::{derived_neighborhood, sd, sd_k, SubdivisionError, SubdivisionMap};
pub use surface::{classify_surface, SurfaceClass};
