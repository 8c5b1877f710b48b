//! Random complexes for tests and benchmarks.

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::complex::{Face, SimplicialComplex, VertexId};

/// A complex on at most `n_vertices` vertices generated by `n_faces` random
/// faces of dimension at most `max_dim` (contained faces are absorbed).
pub fn random_complex<R: Rng + ?Sized>(
    rng: &mut R,
    max_dim: usize,
    n_vertices: usize,
    n_faces: usize,
) -> SimplicialComplex {
    assert!(n_vertices > 0 && n_faces > 0);
    let verts: Vec<VertexId> = (0..n_vertices as VertexId).collect();
    let top = max_dim.min(n_vertices - 1);
    let faces = (0..n_faces).map(|_| {
        let size = rng.gen_range(1..=top + 1);
        Face::new(verts.choose_multiple(rng, size).copied().collect()).unwrap()
    });
    SimplicialComplex::from_facets(faces)
}

/// A pure `d`-dimensional pseudo-manifold with connected dual graph.
///
/// Starts from a simplex or the boundary of a `(d+1)`-simplex and applies
/// `steps` random moves: stellar subdivision of a facet, gluing a new
/// simplex onto a boundary ridge, or (for `d = 2`) flipping an edge.
pub fn random_pseudo_manifold<R: Rng + ?Sized>(rng: &mut R, d: usize, steps: usize) -> SimplicialComplex {
    let mut c = if rng.gen_bool(0.5) {
        SimplicialComplex::simplex(d)
    } else {
        SimplicialComplex::simplex_boundary(d + 1)
    };
    for _ in 0..steps {
        let fresh = c.vertex_bound() as VertexId;
        let mut facets = c.facets().to_vec();
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..facets.len());
                let f = facets.swap_remove(i);
                facets.extend(f.boundary().map(|r| r.union(&Face::vertex(fresh))));
            }
            1 => {
                let bd = c.boundary().expect("pure");
                let Some(r) = bd.facets().choose(rng) else { continue };
                facets.push(r.union(&Face::vertex(fresh)));
            }
            _ => {
                if d != 2 {
                    continue;
                }
                let Some(flipped) = flip_random_edge(rng, &c) else { continue };
                facets = flipped;
            }
        }
        c = SimplicialComplex::from_facets(facets);
    }
    c
}

/// Replaces triangles `abx`, `aby` by `axy`, `bxy` when `xy` is not an edge.
fn flip_random_edge<R: Rng + ?Sized>(rng: &mut R, c: &SimplicialComplex) -> Option<Vec<Face>> {
    let edge = c.faces_of_dim(1).iter().filter(|e| c.facets_containing(e).count() == 2).choose(rng)?;
    let pair: Vec<&Face> = c.facets_containing(edge).collect();
    let x = pair[0].difference(edge.vertices())?.vertices()[0];
    let y = pair[1].difference(edge.vertices())?.vertices()[0];
    if c.contains_face(&Face::new(vec![x, y]).ok()?) {
        return None;
    }
    let (a, b) = (edge.vertices()[0], edge.vertices()[1]);
    let mut facets: Vec<Face> = c.facets().iter().filter(|f| !pair.contains(f)).cloned().collect();
    facets.push(Face::new(vec![a, x, y]).ok()?);
    facets.push(Face::new(vec![b, x, y]).ok()?);
    Some(facets)
}

/// The complex with its vertex ids permuted at random.
pub fn shuffled<R: Rng + ?Sized>(rng: &mut R, c: &SimplicialComplex) -> SimplicialComplex {
    let mut perm: Vec<VertexId> = (0..c.vertex_bound() as VertexId).collect();
    perm.shuffle(rng);
    c.relabel(|v| perm[v as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_pseudo_manifolds_are_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for d in 1..=3 {
            for _ in 0..20 {
                let c = random_pseudo_manifold(&mut rng, d, 6);
                let g = c.dual_graph().unwrap();
                assert!(g.pseudo_manifold && g.is_connected());
                assert_eq!(c.dim(), Some(d));
            }
        }
    }

    #[test]
    fn random_complexes_respect_limits() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let c = random_complex(&mut rng, 3, 12, 10);
            assert!(c.dim().unwrap() <= 3 && c.n_vertices() <= 12);
        }
    }
}
