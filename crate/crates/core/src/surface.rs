//! Recognition of 2-manifolds and orientation of pseudo-manifolds.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::complex::{Face, SimplicialComplex, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotSurface {
    NotTwoDimensional,
    NotPure,
    /// An edge lies in three or more triangles.
    EdgeDegree,
    /// Some vertex link is not a single cycle or path.
    VertexLink(VertexId),
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceClass {
    /// Closed connected surface. `genus` counts handles when orientable and
    /// cross-caps otherwise.
    Closed { genus: u32, orientable: bool },
    /// Connected surface with nonempty boundary.
    WithBoundary { orientable: bool, boundary_components: usize, euler: i64 },
    NotASurface(NotSurface),
}

impl SurfaceClass {
    pub fn is_closed(&self) -> bool {
        matches!(self, SurfaceClass::Closed { .. })
    }

    pub fn is_sphere(&self) -> bool {
        matches!(self, SurfaceClass::Closed { genus: 0, orientable: true })
    }

    pub fn is_disk(&self) -> bool {
        matches!(
            self,
            SurfaceClass::WithBoundary { boundary_components: 1, euler: 1, .. }
        )
    }

    pub fn genus(&self) -> Option<u32> {
        match *self {
            SurfaceClass::Closed { genus, .. } => Some(genus),
            _ => None,
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SurfaceClass::Closed { genus, orientable: true } => write!(f, "closed orientable genus {genus}"),
            SurfaceClass::Closed { genus, orientable: false } => write!(f, "closed non-orientable genus {genus}"),
            SurfaceClass::WithBoundary { boundary_components, orientable, .. } => write!(
                f,
                "{} surface with {boundary_components} boundary component{}",
                if orientable { "orientable" } else { "non-orientable" },
                if boundary_components == 1 { "" } else { "s" }
            ),
            SurfaceClass::NotASurface(why) => write!(f, "not a surface ({why:?})"),
        }
    }
}

/// Classifies a complex as a closed surface, a surface with boundary, or neither.
pub fn classify_surface(c: &SimplicialComplex) -> SurfaceClass {
    use SurfaceClass::NotASurface;
    if c.dim() != Some(2) {
        return NotASurface(NotSurface::NotTwoDimensional);
    }
    if !c.is_pure() {
        return NotASurface(NotSurface::NotPure);
    }
    let mut edge_count: HashMap<Face, usize> = HashMap::new();
    for t in c.facets() {
        for e in t.boundary() {
            *edge_count.entry(e).or_default() += 1;
        }
    }
    if edge_count.values().any(|&n| n > 2) {
        return NotASurface(NotSurface::EdgeDegree);
    }
    for &v in c.vertices() {
        if !link_is_cycle_or_path(c, v) {
            return NotASurface(NotSurface::VertexLink(v));
        }
    }
    if !c.is_connected() {
        return NotASurface(NotSurface::Disconnected);
    }
    let orientable = orientation(c).is_some();
    let chi = c.euler_characteristic();
    let boundary: Vec<&Face> = edge_count.iter().filter(|&(_, &n)| n == 1).map(|(e, _)| e).collect();
    if boundary.is_empty() {
        let genus = if orientable { (2 - chi) / 2 } else { 2 - chi };
        SurfaceClass::Closed { genus: genus as u32, orientable }
    } else {
        let bd = SimplicialComplex::from_facets(boundary.into_iter().cloned());
        SurfaceClass::WithBoundary {
            orientable,
            boundary_components: bd.components().len(),
            euler: chi,
        }
    }
}

fn link_is_cycle_or_path(c: &SimplicialComplex, v: VertexId) -> bool {
    let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
    for t in c.facets() {
        if let Some(e) = t.difference(&[v]) {
            if e.len() != 2 {
                continue;
            }
            let (a, b) = (e.vertices()[0], e.vertices()[1]);
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    if adj.is_empty() || adj.values().any(|n| n.len() > 2) {
        return false;
    }
    // degrees are at most 2, so connected means a single cycle or path
    let start = *adj.keys().next().unwrap();
    let mut seen = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if !seen.contains(&y) {
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    seen.len() == adj.len()
}

/// A coherent orientation of a pure pseudo-manifold, if one exists.
///
/// Returns one sign per facet (indexed like `c.facets()`), where `true`
/// means the orientation given by the increasing vertex order.
pub fn orientation(c: &SimplicialComplex) -> Option<Vec<bool>> {
    let g = c.dual_graph().ok()?;
    if !g.pseudo_manifold {
        return None;
    }
    let facets = c.facets();
    let n = facets.len();
    let mut sign: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if sign[start].is_some() {
            continue;
        }
        sign[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let si = sign[i].unwrap();
            for &j in &g.adjacency[i] {
                let (pi, pj) = opposite_positions(&facets[i], &facets[j]);
                // induced orientations on the shared ridge must be opposite
                let want = si ^ (pi % 2 == 1) ^ (pj % 2 == 1) ^ true;
                match sign[j] {
                    None => {
                        sign[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(s) if s != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(sign.into_iter().map(Option::unwrap).collect())
}

/// Positions (in sorted order) of the vertex of `a` not in `b` and of `b` not in `a`.
fn opposite_positions(a: &Face, b: &Face) -> (usize, usize) {
    let pa = a.vertices().iter().position(|v| !b.contains(*v)).unwrap();
    let pb = b.vertices().iter().position(|v| !a.contains(*v)).unwrap();
    (pa, pb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cone;

    fn cx(f: &[[VertexId; 3]]) -> SimplicialComplex {
        SimplicialComplex::new(f.iter().map(|x| x.to_vec()).collect()).unwrap()
    }

    /// 7-vertex torus.
    pub(crate) fn moebius_torus() -> SimplicialComplex {
        let mut f = Vec::new();
        for i in 0..7u32 {
            f.push([i, (i + 1) % 7, (i + 3) % 7]);
            f.push([i, (i + 2) % 7, (i + 3) % 7]);
        }
        cx(&f)
    }

    /// 6-vertex projective plane.
    fn rp2() -> SimplicialComplex {
        cx(&[
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ])
    }

    #[test]
    fn known_closed_surfaces() {
        assert_eq!(
            classify_surface(&SimplicialComplex::simplex_boundary(3)),
            SurfaceClass::Closed { genus: 0, orientable: true }
        );
        assert_eq!(
            classify_surface(&SimplicialComplex::cross_polytope_boundary(3)),
            SurfaceClass::Closed { genus: 0, orientable: true }
        );
        assert_eq!(
            classify_surface(&moebius_torus()),
            SurfaceClass::Closed { genus: 1, orientable: true }
        );
        assert_eq!(
            classify_surface(&rp2()),
            SurfaceClass::Closed { genus: 1, orientable: false }
        );
    }

    #[test]
    fn disks_and_non_surfaces() {
        let disk = cone(&SimplicialComplex::simplex_boundary(2));
        assert!(classify_surface(&disk).is_disk());
        assert!(classify_surface(&SimplicialComplex::simplex(2)).is_disk());
        assert_eq!(
            classify_surface(&SimplicialComplex::simplex(3)),
            SurfaceClass::NotASurface(NotSurface::NotTwoDimensional)
        );
        // two triangles meeting at a vertex
        let bowtie = cx(&[[0, 1, 2], [0, 3, 4]]);
        assert_eq!(
            classify_surface(&bowtie),
            SurfaceClass::NotASurface(NotSurface::VertexLink(0))
        );
        let book = cx(&[[0, 1, 2], [0, 1, 3], [0, 1, 4]]);
        assert_eq!(classify_surface(&book), SurfaceClass::NotASurface(NotSurface::EdgeDegree));
    }

    #[test]
    fn moebius_strip_is_non_orientable() {
        let strip = cx(&[[0, 1, 2], [1, 2, 3], [2, 3, 4], [3, 4, 0], [4, 0, 1]]);
        assert_eq!(
            classify_surface(&strip),
            SurfaceClass::WithBoundary { orientable: false, boundary_components: 1, euler: 0 }
        );
    }

    #[test]
    fn orientation_of_higher_spheres() {
        for d in 1..=5 {
            assert!(orientation(&SimplicialComplex::simplex_boundary(d)).is_some());
        }
        assert!(orientation(&rp2()).is_none());
    }
}
