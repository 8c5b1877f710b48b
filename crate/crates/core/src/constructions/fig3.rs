//! Genus-`g` surfaces from a triangle strip with `g` handles.
//!
//! Layout: strip vertices `s_0..s_{2g+4}` (ids `0..=2g+4`), strip triangles
//! `t_j = s_j s_{j+1} s_{j+2}` for `j = 0..=2g+2`, cone apex `2g+5`, and three
//! middle vertices per handle after that. The holes are `t_0..t_{g-1}` and
//! `t_{g+2}..t_{2g+1}`; handle `i` joins `t_{i-1}` to `t_{g+1+π(i)}` through
//! a middle triangle, using 6 triangles on each side.
//!
//! The strip has `2g+5` boundary edges, so the coned sphere has `4g+8`
//! triangles and the surface `14g+8`.

use std::collections::BTreeSet;

use super::{ConstructionError, ConstructionReport, Permutation};
use crate::census::iso;
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::surface::orientation;

fn face(v: &[VertexId]) -> Face {
    Face::new(v.to_vec()).expect("distinct vertices")
}

fn strip_triangle(j: usize) -> Face {
    let j = j as VertexId;
    face(&[j, j + 1, j + 2])
}

/// The strip coned off along its boundary cycle.
fn strip_sphere(g: usize) -> SimplicialComplex {
    let last = 2 * g + 4;
    let apex = last as VertexId + 1;
    let mut facets: Vec<Face> = (0..=2 * g + 2).map(strip_triangle).collect();
    let mut boundary: Vec<[VertexId; 2]> = vec![[0, 1], [last as VertexId - 1, last as VertexId]];
    boundary.extend((0..=2 * g + 2).map(|j| [j as VertexId, j as VertexId + 2]));
    facets.extend(boundary.iter().map(|&[a, b]| face(&[a, b, apex])));
    SimplicialComplex::from_facets(facets)
}

fn holes(g: usize) -> Vec<usize> {
    (0..g).chain(g + 2..=2 * g + 1).collect()
}

/// The surface `T_π` and its report.
pub fn genus_surface_fig3(pi: &Permutation) -> (SimplicialComplex, ConstructionReport) {
    let g = pi.g();
    let sphere = strip_sphere(g);
    let signs = orientation(&sphere).expect("a sphere is orientable");
    // vertex order of hole j agreeing with the orientation of the sphere
    let oriented = |j: usize| -> [VertexId; 3] {
        let t = strip_triangle(j);
        let i = sphere.facets().binary_search(&t).unwrap();
        let [x, y, z] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
        if signs[i] {
            [x, y, z]
        } else {
            [x, z, y]
        }
    };
    let removed: BTreeSet<Face> = holes(g).into_iter().map(strip_triangle).collect();
    let mut facets: Vec<Face> = sphere.facets().iter().filter(|f| !removed.contains(f)).cloned().collect();
    let first_middle = 2 * g as VertexId + 6;
    let cylinder = |a: [VertexId; 3], p: [VertexId; 3], out: &mut Vec<Face>| {
        for k in 0..3 {
            let k1 = (k + 1) % 3;
            out.push(face(&[a[k], a[k1], p[k]]));
            out.push(face(&[a[k1], p[k1], p[k]]));
        }
    };
    for i in 1..=g {
        let base = first_middle + 3 * (i as VertexId - 1);
        let p = [base, base + 1, base + 2];
        cylinder(oriented(i - 1), p, &mut facets);
        // reversed middle cycle keeps the handle untwisted
        cylinder(oriented(g + 1 + pi.apply(i)), [p[0], p[2], p[1]], &mut facets);
    }
    let c = SimplicialComplex::from_facets(facets);
    let report = ConstructionReport::new("fig3", vec![("g", g.to_string()), ("pi", pi.to_string())], &c);
    assert_eq!(c.n_facets(), 14 * g + 8, "facet count of the strip construction");
    (c, report)
}

/// Reads `π` back from a complex isomorphic to some `T_π`.
///
/// The cone apex is found among the vertices of highest degree; its link
/// is the strip boundary, which fixes the strip order and hence the holes.
/// Each hole on the left is followed through its handle to the hole it is
/// joined to. The answer is confirmed by an isomorphism test.
pub fn recover_permutation(t: &SimplicialComplex) -> Result<Permutation, ConstructionError> {
    if t.dim() != Some(2) || !t.is_pure() {
        return Err(ConstructionError::NotRecognised("not a pure 2-complex"));
    }
    let mut candidates: Vec<VertexId> = t.vertices().to_vec();
    candidates.sort_by_key(|&v| (std::cmp::Reverse(t.degree(v)), v));
    for apex in candidates {
        if let Some(pi) = try_apex(t, apex) {
            if iso(t, &genus_surface_fig3(&pi).0).is_some() {
                return Ok(pi);
            }
        }
    }
    Err(ConstructionError::NotRecognised("no vertex links like a strip apex"))
}

fn try_apex(t: &SimplicialComplex, apex: VertexId) -> Option<Permutation> {
    let strip: Vec<VertexId> = t.link(&[apex]).ok()?.vertices().to_vec();
    let n = strip.len();
    if n < 7 || n.is_multiple_of(2) {
        return None;
    }
    let g = (n - 5) / 2;
    let in_strip = |v: VertexId| strip.binary_search(&v).is_ok();
    let adj = |v: VertexId| -> Vec<VertexId> { t.neighbors(v).into_iter().filter(|&u| in_strip(u)).collect() };
    let ends: Vec<VertexId> = strip.iter().copied().filter(|&v| adj(v).len() == 2).collect();
    if ends.len() != 2 {
        return None;
    }
    let expected: BTreeSet<usize> = holes(g).into_iter().collect();
    for &end in &ends {
        let Some(order) = square_path_order(end, n, &adj) else { continue };
        let tri = |j: usize| Face::new(vec![order[j], order[j + 1], order[j + 2]]).unwrap();
        let found: BTreeSet<usize> =
            (0..=2 * g + 2).filter(|&j| t.facets().binary_search(&tri(j)).is_err()).collect();
        if found != expected {
            continue;
        }
        let position = |v: VertexId| order.iter().position(|&u| u == v);
        let mut images = Vec::with_capacity(g);
        for i in 1..=g {
            let j = i - 1;
            let hole: BTreeSet<VertexId> = tri(j).vertices().iter().copied().collect();
            let e = Face::new(vec![order[j], order[j + 2]]).unwrap();
            let mut thirds = t
                .facets_containing(&e)
                .flat_map(|f| f.vertices().to_vec())
                .filter(|&v| v != apex && !e.contains(v));
            let m = thirds.next()?;
            if thirds.next().is_some() || in_strip(m) {
                return None;
            }
            let mut middles: BTreeSet<VertexId> =
                t.neighbors(m).into_iter().filter(|&v| v != apex && !in_strip(v)).collect();
            middles.insert(m);
            if middles.len() != 3 {
                return None;
            }
            let other: BTreeSet<usize> = middles
                .iter()
                .flat_map(|&x| t.neighbors(x))
                .filter(|&v| in_strip(v) && !hole.contains(&v))
                .map(|v| position(v).unwrap())
                .collect();
            let lo = *other.first()?;
            if other.len() != 3 || *other.last()? != lo + 2 || !expected.contains(&lo) || lo < g + 2 {
                return None;
            }
            images.push(lo - (g + 1));
        }
        return Permutation::new(images).ok();
    }
    None
}

/// Orders the vertices of the square of a path, starting from one end.
fn square_path_order(end: VertexId, n: usize, adj: &dyn Fn(VertexId) -> Vec<VertexId>) -> Option<Vec<VertexId>> {
    let first = adj(end);
    // the second vertex has one neighbour fewer than the third
    let second = *first.iter().min_by_key(|&&v| adj(v).len())?;
    let mut order = vec![end, second];
    while order.len() < n {
        let (a, b) = (order[order.len() - 2], order[order.len() - 1]);
        let na = adj(a);
        let next: Vec<VertexId> =
            adj(b).into_iter().filter(|v| na.contains(v) && !order.contains(v)).collect();
        if next.len() != 1 {
            return None;
        }
        order.push(next[0]);
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceClass;

    #[test]
    fn genus_one() {
        let (c, report) = genus_surface_fig3(&Permutation::identity(1));
        assert_eq!(report.class, SurfaceClass::Closed { genus: 1, orientable: true });
        assert_eq!(report.euler, 0);
        assert_eq!(c.n_facets(), 22);
        assert_eq!(recover_permutation(&c).unwrap(), Permutation::identity(1));
    }

    #[test]
    fn genus_three_roundtrip() {
        for pi in Permutation::all(3) {
            let (c, report) = genus_surface_fig3(&pi);
            assert_eq!(report.class.genus(), Some(3));
            let shuffled = c.relabel(|v| (v * 7 + 3) % 97);
            assert_eq!(recover_permutation(&shuffled).unwrap(), pi);
        }
    }

    #[test]
    fn rejects_other_surfaces() {
        assert!(recover_permutation(&SimplicialComplex::cross_polytope_boundary(3)).is_err());
    }
}
