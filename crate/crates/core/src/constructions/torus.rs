//! Tori from triangulated squares with `r` segments on top and bottom.
//!
//! The square with bottom `b_0..b_r` and top `t_0..t_r` is the convex
//! `(2r+2)`-gon `b_0, …, b_r, t_r, …, t_0`, so a triangulation without
//! interior vertices is a balanced word of semilength `2r`. Gluing left to
//! right and bottom to top sends both `b_i` and `t_i` to `i mod r`.

use std::collections::{BTreeMap, BTreeSet};

use super::polygon::polygon_triangulation;
use super::{ConstructionError, ConstructionReport};
use crate::complex::{Face, SimplicialComplex, VertexId};

/// Why a quotient is not a simplicial complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusRejection {
    /// Two corners of this polygon triangle are identified.
    DegenerateTriangle([usize; 3]),
    /// Two polygon triangles have the same vertex set in the quotient.
    RepeatedFacet(Face),
    /// Two different edges of the quotient share their endpoints.
    MultipleEdges(Face),
}

#[derive(Debug, Clone)]
pub enum TorusOutcome {
    Accepted(SimplicialComplex, ConstructionReport),
    Rejected(TorusRejection),
}

impl TorusOutcome {
    pub fn is_accepted(&self) -> bool {
        matches!(self, TorusOutcome::Accepted(..))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum EdgeClass {
    /// `b_i b_{i+1}`, glued to `t_i t_{i+1}`.
    Horizontal(usize),
    /// `b_0 t_0`, glued to `b_r t_r`.
    Vertical,
    Diagonal(usize, usize),
}

/// Builds the quotient for one pattern, or explains why it is not simplicial.
pub fn torus_catalan(r: usize, pattern: &str) -> Result<TorusOutcome, ConstructionError> {
    if r == 0 {
        return Err(ConstructionError::ZeroSegments);
    }
    let m = 2 * r + 2;
    let tris = polygon_triangulation(m, pattern)?;
    // polygon vertex -> column of the square
    let column = |p: usize| if p <= r { p } else { m - 1 - p };
    let image = |p: usize| (column(p) % r) as VertexId;
    let class = |a: usize, b: usize| -> EdgeClass {
        let (a, b) = (a.min(b), a.max(b));
        match (a, b) {
            (0, x) if x == m - 1 => EdgeClass::Vertical,
            (x, y) if x == r && y == r + 1 => EdgeClass::Vertical,
            (x, y) if y == x + 1 && y <= r => EdgeClass::Horizontal(x),
            (x, y) if y == x + 1 => EdgeClass::Horizontal(column(y)),
            _ => EdgeClass::Diagonal(a, b),
        }
    };

    let mut facets: BTreeSet<Face> = BTreeSet::new();
    let mut edges: BTreeMap<Face, EdgeClass> = BTreeMap::new();
    for t in &tris {
        let imgs: Vec<VertexId> = t.iter().map(|&p| image(p)).collect();
        let Ok(f) = Face::new(imgs) else {
            return Ok(TorusOutcome::Rejected(TorusRejection::DegenerateTriangle(*t)));
        };
        if !facets.insert(f.clone()) {
            return Ok(TorusOutcome::Rejected(TorusRejection::RepeatedFacet(f)));
        }
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            let e = Face::new(vec![image(a), image(b)]).expect("non-degenerate triangle");
            let c = class(a, b);
            if *edges.entry(e.clone()).or_insert(c) != c {
                return Ok(TorusOutcome::Rejected(TorusRejection::MultipleEdges(e)));
            }
        }
    }
    let c = SimplicialComplex::from_facets(facets);
    let report = ConstructionReport::new("torus", vec![("r", r.to_string()), ("pattern", pattern.to_string())], &c);
    Ok(TorusOutcome::Accepted(c, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dyck_words;

    #[test]
    fn every_pattern_has_a_degenerate_triangle() {
        // the left side b_0 t_0 is a polygon edge whose ends are identified
        for r in 1..=4 {
            for w in dyck_words(2 * r) {
                match torus_catalan(r, &w).unwrap() {
                    TorusOutcome::Rejected(TorusRejection::DegenerateTriangle(t)) => {
                        assert_eq!((t[0], t[2]), (0, 2 * r + 1))
                    }
                    other => panic!("unexpected {other:?}"),
                }
            }
        }
        assert!(torus_catalan(0, "").is_err());
        assert!(torus_catalan(2, "()").is_err());
    }
}
