//! Gluing determination and isomorphism testing.
//!
//! In a pseudo-manifold with connected dual graph, fixing where one facet
//! goes (with the order of its vertices) forces everything else: two facets
//! sharing a ridge must map to two facets sharing the image ridge, so the
//! one remaining vertex has only one possible image.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;
use thiserror::Error;

use super::canon::canonical_form;
use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("seed facets have different dimensions")]
    DimensionMismatch,
    #[error("seed {0:?} is not an ordered facet")]
    BadSeed(Vec<VertexId>),
    #[error("complex is not a pure pseudo-manifold")]
    NotPseudoManifold,
    #[error("propagation conflict at facet {0}")]
    Conflict(Face),
}

/// A vertex bijection, as `(source, image)` pairs sorted by source.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoCertificate {
    pub map: Vec<(VertexId, VertexId)>,
}

impl IsoCertificate {
    pub fn image(&self, v: VertexId) -> Option<VertexId> {
        self.map.binary_search_by_key(&v, |(a, _)| *a).ok().map(|i| self.map[i].1)
    }

    /// Whether the map sends the facets of `a` exactly onto the facets of `b`.
    pub fn is_isomorphism(&self, a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
        if self.map.len() != a.n_vertices() || a.n_vertices() != b.n_vertices() || a.n_facets() != b.n_facets() {
            return false;
        }
        let mut images: Vec<VertexId> = self.map.iter().map(|(_, y)| *y).collect();
        images.sort_unstable();
        images.dedup();
        if images.len() != self.map.len() {
            return false;
        }
        a.facets().iter().all(|f| {
            let mut img = Vec::with_capacity(f.len());
            for &v in f.vertices() {
                match self.image(v) {
                    Some(w) => img.push(w),
                    None => return false,
                }
            }
            img.sort_unstable();
            b.facets().binary_search(&Face::from_sorted(img)).is_ok()
        })
    }
}

struct Ridges {
    by_ridge: HashMap<Face, Vec<usize>>,
}

impl Ridges {
    fn new(c: &SimplicialComplex) -> Self {
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in c.facets().iter().enumerate() {
            for r in f.boundary() {
                by_ridge.entry(r).or_default().push(i);
            }
        }
        Ridges { by_ridge }
    }

    fn across(&self, ridge: &Face, from: usize) -> Option<usize> {
        self.by_ridge.get(ridge)?.iter().copied().find(|&g| g != from)
    }
}

/// Extends the seed correspondence across the dual graph of `a`.
///
/// `seed_a` and `seed_b` list the vertices of one facet of each complex in
/// corresponding order. Returns the forced map on the vertices of the
/// strongly connected component of the seed, or the first conflict. The
/// image may be a proper part of `b`; `a` running on where `b` has a
/// boundary ridge is a conflict.
pub fn determine_gluing(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    seed_a: &[VertexId],
    seed_b: &[VertexId],
) -> Result<IsoCertificate, GluingError> {
    if seed_a.len() != seed_b.len() {
        return Err(GluingError::DimensionMismatch);
    }
    if !a.is_pseudo_manifold() || !b.is_pseudo_manifold() {
        return Err(GluingError::NotPseudoManifold);
    }
    let fa = facet_index(a, seed_a)?;
    let fb = facet_index(b, seed_b)?;
    glue(a, b, &Ridges::new(a), &Ridges::new(b), fa, fb, seed_a, seed_b)
}

fn facet_index(c: &SimplicialComplex, seed: &[VertexId]) -> Result<usize, GluingError> {
    let face = Face::new(seed.to_vec()).map_err(|_| GluingError::BadSeed(seed.to_vec()))?;
    c.facets().binary_search(&face).map_err(|_| GluingError::BadSeed(seed.to_vec()))
}

#[allow(clippy::too_many_arguments)]
fn glue(
    a: &SimplicialComplex,
    b: &SimplicialComplex,
    ra: &Ridges,
    rb: &Ridges,
    fa: usize,
    fb: usize,
    seed_a: &[VertexId],
    seed_b: &[VertexId],
) -> Result<IsoCertificate, GluingError> {
    let mut fwd: HashMap<VertexId, VertexId> = HashMap::new();
    let mut back: HashMap<VertexId, VertexId> = HashMap::new();
    let assign = |x: VertexId, y: VertexId, fwd: &mut HashMap<_, _>, back: &mut HashMap<_, _>| -> bool {
        match (fwd.get(&x), back.get(&y)) {
            (Some(&y0), _) if y0 != y => false,
            (_, Some(&x0)) if x0 != x => false,
            _ => {
                fwd.insert(x, y);
                back.insert(y, x);
                true
            }
        }
    };
    for (&x, &y) in seed_a.iter().zip(seed_b) {
        if !assign(x, y, &mut fwd, &mut back) {
            return Err(GluingError::Conflict(a.facets()[fa].clone()));
        }
    }
    let mut image_of = vec![usize::MAX; a.n_facets()];
    image_of[fa] = fb;
    let mut queue = VecDeque::from([fa]);
    while let Some(f) = queue.pop_front() {
        let face = &a.facets()[f];
        let g = image_of[f];
        for r in face.boundary() {
            let r_img = r.map(|v| fwd[&v]);
            let across_a = ra.across(&r, f);
            let across_b = rb.across(&r_img, g);
            // b may continue past the boundary of a, but not the other way round
            let (f2, g2) = match (across_a, across_b) {
                (None, _) => continue,
                (Some(f2), Some(g2)) => (f2, g2),
                (Some(_), None) => return Err(GluingError::Conflict(face.clone())),
            };
            let x = *a.facets()[f2].vertices().iter().find(|v| !r.contains(**v)).unwrap();
            let y = *b.facets()[g2].vertices().iter().find(|v| !r_img.contains(**v)).unwrap();
            if !assign(x, y, &mut fwd, &mut back) {
                return Err(GluingError::Conflict(a.facets()[f2].clone()));
            }
            if image_of[f2] == usize::MAX {
                image_of[f2] = g2;
                queue.push_back(f2);
            } else if image_of[f2] != g2 {
                return Err(GluingError::Conflict(a.facets()[f2].clone()));
            }
        }
    }
    let mut map: Vec<(VertexId, VertexId)> = fwd.into_iter().collect();
    map.sort_unstable();
    Ok(IsoCertificate { map })
}

/// Finds an isomorphism `a → b`, or `None` if the complexes are not isomorphic.
///
/// Pseudo-manifolds with connected dual graphs are matched by fixing the
/// first facet of `a` and trying every ordered facet of `b` as its image.
/// Other complexes are compared through canonical forms.
pub fn iso(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<IsoCertificate> {
    if a.n_vertices() != b.n_vertices() || a.n_facets() != b.n_facets() || a.f_vector() != b.f_vector() {
        return None;
    }
    if a.is_empty() {
        return Some(IsoCertificate { map: Vec::new() });
    }
    let seeded = |c: &SimplicialComplex| c.dual_graph().is_ok_and(|g| g.pseudo_manifold && g.is_connected());
    if seeded(a) && seeded(b) {
        let ra = Ridges::new(a);
        let rb = Ridges::new(b);
        let seed_a = a.facets()[0].vertices().to_vec();
        let targets: Vec<usize> = (0..b.n_facets()).collect();
        return par::find_map_first(&targets, |&fb| {
            let g = b.facets()[fb].vertices();
            g.iter().copied().permutations(g.len()).find_map(|seed_b| {
                glue(a, b, &ra, &rb, 0, fb, &seed_a, &seed_b)
                    .ok()
                    .filter(|cert| cert.is_isomorphism(a, b))
            })
        });
    }
    let fa = canonical_form(a);
    let fb = canonical_form(b);
    if fa.label != fb.label {
        return None;
    }
    let mut inverse: Vec<(u32, VertexId)> = fb.numbering.iter().map(|&(v, i)| (i, v)).collect();
    inverse.sort_unstable();
    let map = fa.numbering.iter().map(|&(v, i)| (v, inverse[i as usize].1)).collect();
    let cert = IsoCertificate { map };
    debug_assert!(cert.is_isomorphism(a, b));
    Some(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_automorphisms_of_the_tetrahedron_boundary() {
        let c = SimplicialComplex::simplex_boundary(3);
        let id = determine_gluing(&c, &c, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(id.map, vec![(0, 0), (1, 1), (2, 2), (3, 3)]);
        let swap = determine_gluing(&c, &c, &[0, 1, 2], &[0, 1, 3]).unwrap();
        assert_eq!(swap.map, vec![(0, 0), (1, 1), (2, 3), (3, 2)]);
        assert!(swap.is_isomorphism(&c, &c));
        assert_eq!(
            determine_gluing(&c, &c, &[0, 1, 2], &[0, 1]),
            Err(GluingError::DimensionMismatch)
        );
    }

    #[test]
    fn iso_detects_relabelling_and_difference() {
        let o = SimplicialComplex::cross_polytope_boundary(3);
        let p = o.relabel(|v| (v + 2) % 6 + 10);
        let cert = iso(&o, &p).unwrap();
        assert!(cert.is_isomorphism(&o, &p));
        let (s, _) = crate::subdivision::sd(&SimplicialComplex::simplex(2));
        assert!(iso(&o, &s).is_none());
    }

    #[test]
    fn disk_glues_into_sphere_but_not_back() {
        let disk = SimplicialComplex::new(vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let sphere = SimplicialComplex::simplex_boundary(3);
        let emb = determine_gluing(&disk, &sphere, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(emb.map.len(), 4);
        assert!(!emb.is_isomorphism(&disk, &sphere));
        assert!(matches!(
            determine_gluing(&sphere, &disk, &[0, 1, 2], &[0, 1, 2]),
            Err(GluingError::Conflict(_))
        ));
    }
}
