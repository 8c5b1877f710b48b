//! Barycentric subdivision and derived neighbourhoods.

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, VertexId};
use crate::par;

/// Default ceiling on the number of facets an iterated subdivision may produce.
pub const DEFAULT_FACET_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("subdivision would have {predicted} facets, above the cap of {cap}")]
    TooLarge { predicted: u128, cap: u128 },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Vertex labels of a barycentric subdivision: vertex `i` of `sd C` is the
/// barycentre of `labels[i]`, a face of `C`.
///
/// Labels are sorted by dimension and then lexicographically, so the first
/// vertices of `sd C` are the vertices of `C` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionMap {
    labels: Vec<Face>,
}

fn label_key(f: &Face) -> (usize, &[VertexId]) {
    (f.len(), f.vertices())
}

impl SubdivisionMap {
    pub fn labels(&self) -> &[Face] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &Face {
        &self.labels[v as usize]
    }

    pub fn vertex_of(&self, face: &Face) -> Option<VertexId> {
        self.labels
            .binary_search_by(|l| label_key(l).cmp(&label_key(face)))
            .ok()
            .map(|i| i as VertexId)
    }

    /// The smallest face of `C` whose subdivision contains `face`, i.e. the largest label on the chain.
    pub fn carrier(&self, face: &Face) -> Face {
        face.vertices()
            .iter()
            .map(|&v| self.label(v))
            .max_by_key(|l| l.len())
            .expect("faces are nonempty")
            .clone()
    }
}

/// Predicted number of facets of `sd^k C`: each facet of dimension `d`
/// splits into `((d+1)!)^k` pieces. Saturates instead of overflowing.
pub fn predicted_facets(c: &SimplicialComplex, k: u32) -> u128 {
    c.facets()
        .iter()
        .map(|f| {
            (1..=f.len() as u128)
                .try_fold(1u128, |a, b| a.checked_mul(b))
                .and_then(|fact| fact.checked_pow(k))
                .unwrap_or(u128::MAX)
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// The barycentric subdivision: the order complex of the face poset.
pub fn sd(c: &SimplicialComplex) -> (SimplicialComplex, SubdivisionMap) {
    let mut labels: Vec<Face> = c.all_faces().cloned().collect();
    labels.sort_by(|a, b| label_key(a).cmp(&label_key(b)));
    let map = SubdivisionMap { labels };

    // one facet of sd C per maximal chain, i.e. per vertex ordering of a facet
    let per_facet: Vec<Vec<Face>> = par::map(c.facets(), |f| {
        f.vertices()
            .iter()
            .copied()
            .permutations(f.len())
            .map(|perm| {
                let mut chain: Vec<VertexId> = Vec::with_capacity(perm.len());
                let mut prefix: Vec<VertexId> = Vec::with_capacity(perm.len());
                for v in perm {
                    prefix.push(v);
                    let mut sorted = prefix.clone();
                    sorted.sort_unstable();
                    let face = Face::from_sorted(sorted);
                    chain.push(map.vertex_of(&face).expect("prefix is a face"));
                }
                chain.sort_unstable();
                Face::from_sorted(chain)
            })
            .collect()
    });
    let mut facets: Vec<Face> = per_facet.into_iter().flatten().collect();
    facets.sort_unstable();
    (SimplicialComplex::from_antichain(facets), map)
}

/// `sd^k C`, refusing when the predicted facet count exceeds `cap`.
pub fn sd_k(c: &SimplicialComplex, k: u32, cap: u128) -> Result<SimplicialComplex, SubdivisionError> {
    check_cap(c, k, cap)?;
    let mut cur = c.clone();
    for _ in 0..k {
        cur = sd(&cur).0;
    }
    Ok(cur)
}

fn check_cap(c: &SimplicialComplex, k: u32, cap: u128) -> Result<(), SubdivisionError> {
    let predicted = predicted_facets(c, k);
    if predicted > cap {
        return Err(SubdivisionError::TooLarge { predicted, cap });
    }
    Ok(())
}

/// The `k`-th derived neighbourhood of `D` in `C`, together with `sd^k C`
/// and `sd^k D` (all three on the vertex ids of `sd^k C`).
#[derive(Debug, Clone)]
pub struct DerivedNeighborhood {
    pub neighborhood: SimplicialComplex,
    pub subdivided: SimplicialComplex,
    pub subdivided_sub: SimplicialComplex,
}

/// Union of the facets of `sd^k C` that meet `sd^k D`.
pub fn derived_neighborhood(
    c: &SimplicialComplex,
    d: &SimplicialComplex,
    k: u32,
    cap: u128,
) -> Result<DerivedNeighborhood, SubdivisionError> {
    c.check_subcomplex(d)?;
    check_cap(c, k, cap)?;
    let mut cur = c.clone();
    let mut sub = d.clone();
    for _ in 0..k {
        let (next, map) = sd(&cur);
        // sd D is the subcomplex of sd C induced on barycentres of faces of D
        let keep: Vec<VertexId> = (0..map.labels().len() as VertexId)
            .filter(|&v| sub.contains_face(map.label(v)))
            .collect();
        sub = next.induced(&keep);
        cur = next;
    }
    let neighborhood = SimplicialComplex::from_antichain(
        cur.facets()
            .iter()
            .filter(|f| f.vertices().iter().any(|v| sub.vertices().binary_search(v).is_ok()))
            .cloned()
            .collect(),
    );
    Ok(DerivedNeighborhood { neighborhood, subdivided: cur, subdivided_sub: sub })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;

    #[test]
    fn subdivided_triangle() {
        let (s, map) = sd(&SimplicialComplex::simplex(2));
        assert_eq!(s.n_facets(), 6);
        assert_eq!(s.f_vector(), FVector(vec![7, 12, 6]));
        assert_eq!(map.label(0), &Face::vertex(0));
        assert_eq!(map.carrier(&s.facets()[0]), Face::new(vec![0, 1, 2]).unwrap());
    }

    #[test]
    fn subdivided_tetrahedron_boundary() {
        let (s, _) = sd(&SimplicialComplex::simplex_boundary(3));
        assert_eq!(s.n_facets(), 24);
        assert_eq!(s.n_vertices(), 14);
        assert_eq!(s.euler_characteristic(), 2);
    }

    #[test]
    fn iterated_counts_and_cap() {
        let c = SimplicialComplex::simplex_boundary(3);
        assert_eq!(sd_k(&c, 2, DEFAULT_FACET_CAP).unwrap().n_facets(), 144);
        assert_eq!(predicted_facets(&c, 3), 864);
        assert!(matches!(
            sd_k(&c, 3, 100),
            Err(SubdivisionError::TooLarge { predicted: 864, cap: 100 })
        ));
        assert_eq!(sd_k(&c, 0, 1).unwrap_err(), SubdivisionError::TooLarge { predicted: 4, cap: 1 });
        assert_eq!(predicted_facets(&SimplicialComplex::simplex(40), 1_000), u128::MAX);
    }

    #[test]
    fn neighbourhood_of_a_vertex_is_its_subdivided_star() {
        let c = SimplicialComplex::simplex_boundary(3);
        let v = SimplicialComplex::from_facets([Face::vertex(0)]);
        let n = derived_neighborhood(&c, &v, 1, DEFAULT_FACET_CAP).unwrap();
        // the star of a vertex of sd C is the cone over its link
        assert_eq!(n.neighborhood.n_facets(), 6);
        assert_eq!(n.subdivided_sub.n_vertices(), 1);
        let n2 = derived_neighborhood(&c, &v, 2, DEFAULT_FACET_CAP).unwrap();
        assert_eq!(n2.subdivided.n_facets(), 144);
        assert_eq!(n2.neighborhood.euler_characteristic(), 1);
    }
}
