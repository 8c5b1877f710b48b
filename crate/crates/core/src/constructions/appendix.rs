//! Genus-`g` surfaces with `20g` triangles from a `1 × 4g` grid.
//!
//! Bottom vertices `b_0..b_{4g-1}` have ids `0..4g`, top vertices
//! `u_0..u_{4g}` have ids `4g..=8g`, and the cone apex is `8g+1`. The
//! bottom-right corner `b_{4g}` disappears with the last triangle.

use std::collections::BTreeSet;

use super::{ConstructionReport, Permutation};
use crate::complex::{cone, Face, SimplicialComplex, VertexId};

fn b(i: usize) -> VertexId {
    i as VertexId
}

fn u(g: usize, i: usize) -> VertexId {
    (4 * g + i) as VertexId
}

fn face(v: [VertexId; 3]) -> Face {
    Face::new(v.to_vec()).expect("distinct vertices")
}

/// Grid triangles from left to right, before cutting the last one.
fn grid_triangles(g: usize) -> Vec<[VertexId; 3]> {
    let bottom = |i: usize| i as VertexId;
    let mut out = Vec::with_capacity(8 * g);
    for k in 0..4 * g {
        if k < 2 * g {
            // backslash diagonal u_k b_{k+1}
            out.push([bottom(k), bottom(k + 1), u(g, k)]);
            out.push([u(g, k), u(g, k + 1), bottom(k + 1)]);
        } else {
            // slash diagonal b_k u_{k+1}
            out.push([bottom(k), u(g, k), u(g, k + 1)]);
            out.push([bottom(k), bottom(k + 1), u(g, k + 1)]);
        }
    }
    out
}

/// The disc `B`: the grid without its last triangle.
pub fn appendix_disc(g: usize) -> SimplicialComplex {
    let mut tris = grid_triangles(g);
    tris.pop();
    SimplicialComplex::from_facets(tris.into_iter().map(face))
}

/// The `2g` marked triangles (positions `4j-2` for `j ≤ g`, `4j-1` after),
/// in order `1, …, g, 1', …, g'`.
pub fn appendix_holes(g: usize) -> Vec<Face> {
    let tris = grid_triangles(g);
    (1..=2 * g)
        .map(|j| if j <= g { 4 * j - 2 } else { 4 * j - 1 })
        .map(|pos| face(tris[pos - 1]))
        .collect()
}

/// The surface `M_g(π)` and its report.
///
/// Hole `i` is `u_{2i-2} u_{2i-1} b_{2i-1}` and hole `k' = g+k` is
/// `b_{2k-1} u_{2k-1} u_{2k}`. The prism for `i` joins the leftmost vertex
/// `u_{2i-2}` to the rightmost `u_{2k}`, `u_{2i-1}` to `u_{2k-1}` and `b_{2i-1}`
/// to `b_{2k-1}`, with `k = g + π(i)`; each lateral square is split by the
/// diagonal through its smallest vertex.
pub fn genus_surface_appendix(pi: &Permutation) -> (SimplicialComplex, ConstructionReport) {
    let g = pi.g();
    let disc = appendix_disc(g);
    let holes = appendix_holes(g);
    let vertex_sets: BTreeSet<VertexId> = holes.iter().flat_map(|h| h.vertices().to_vec()).collect();
    assert_eq!(vertex_sets.len(), 6 * g, "marked triangles are pairwise disjoint");

    // boundary of the cone over B; the apex is 8g+1
    let mut facets: Vec<Face> = disc.facets().to_vec();
    facets.extend(cone(&disc.boundary().expect("pure")).facets().iter().cloned());
    assert_eq!(facets.len(), 16 * g);
    let removed: BTreeSet<&Face> = holes.iter().collect();
    facets.retain(|f| !removed.contains(f));

    for i in 1..=g {
        let k = g + pi.apply(i);
        let left = [u(g, 2 * i - 2), u(g, 2 * i - 1), b(2 * i - 1)];
        let right = [u(g, 2 * k), u(g, 2 * k - 1), b(2 * k - 1)];
        for s in 0..3 {
            let t = (s + 1) % 3;
            let (a0, a1, b1, b0) = (left[s], left[t], right[t], right[s]);
            let min = a0.min(a1).min(b0).min(b1);
            if min == a0 || min == b1 {
                facets.push(face([a0, a1, b1]));
                facets.push(face([a0, b1, b0]));
            } else {
                facets.push(face([a0, a1, b0]));
                facets.push(face([a1, b1, b0]));
            }
        }
    }
    let c = SimplicialComplex::from_facets(facets);
    let report = ConstructionReport::new(
        "appendix",
        vec![("g", g.to_string()), ("pi", pi.to_string()), ("disc_triangles", disc.n_facets().to_string())],
        &c,
    );
    assert_eq!(disc.n_facets(), 8 * g - 1);
    assert_eq!(c.n_facets(), 20 * g);
    (c, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceClass;

    #[test]
    fn genus_one_and_two() {
        let (c, r) = genus_surface_appendix(&Permutation::identity(1));
        assert_eq!(c.n_facets(), 20);
        assert_eq!(r.euler, 0);
        assert_eq!(r.class, SurfaceClass::Closed { genus: 1, orientable: true });
        assert_eq!(appendix_disc(2).n_facets(), 15);
        for pi in Permutation::all(2) {
            let (_, r) = genus_surface_appendix(&pi);
            assert_eq!(r.class, SurfaceClass::Closed { genus: 2, orientable: true });
            assert_eq!(r.parameter("disc_triangles"), Some("15"));
        }
    }
}
