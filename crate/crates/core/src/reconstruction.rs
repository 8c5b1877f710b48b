//! Recovering `T` from a complex isomorphic to `sd T`.
//!
//! Every facet of `sd T` is a chain `v_0 ⊂ v_1 ⊂ … ⊂ v_d` of faces of `T`,
//! so the dimension of the carrying face colours the vertices of `sd T`
//! properly with every facet rainbow. Such a colouring is forced up to a
//! permutation of colours on each strongly connected piece; the search
//! tries the permutations consistent across shared vertices, reads off the
//! candidate `T` from the rank-0 neighbours of every vertex, and accepts it
//! only if subdividing the candidate gives back the input exactly.

use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::subdivision::sd;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotDerived {
    /// Some facet cannot be coloured by rank consistently with its neighbours.
    RankConflict,
    /// No consistent ranking passes the face-count and subdivision checks.
    NoAdmissibleRanking,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructionError {
    #[error("input complex is empty")]
    Empty,
    #[error("not a barycentric subdivision: {0:?}")]
    NotDerived(NotDerived),
}

/// A complex `T` with an isomorphism `K ≅ sd T`.
#[derive(Debug, Clone)]
pub struct Reconstruction {
    /// The recovered complex, vertices numbered `0..n`.
    pub base: SimplicialComplex,
    /// `(vertex of K, face of base)` for every vertex of `K`, sorted by vertex.
    pub labels: Vec<(VertexId, Face)>,
}

impl Reconstruction {
    pub fn face_of(&self, v: VertexId) -> Option<&Face> {
        self.labels
            .binary_search_by_key(&v, |(w, _)| *w)
            .ok()
            .map(|i| &self.labels[i].1)
    }
}

/// Finds `T` with `sd T ≅ K`, or explains why none exists.
///
/// The answer is unique up to isomorphism.
pub fn reconstruct(k: &SimplicialComplex) -> Result<Reconstruction, ReconstructionError> {
    if k.is_empty() {
        return Err(ReconstructionError::Empty);
    }
    let mut base_facets: Vec<Vec<VertexId>> = Vec::new();
    let mut labels: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for comp in k.components() {
        let (facets, lab) = reconstruct_connected(&comp)?;
        base_facets.extend(facets);
        labels.extend(lab);
    }
    // atoms are vertices of K; renumber them densely
    let (base, atom_ids) = SimplicialComplex::new_labeled(base_facets).expect("nonempty facets");
    let index: HashMap<VertexId, VertexId> =
        atom_ids.iter().enumerate().map(|(i, &a)| (a, i as VertexId)).collect();
    let mut labels: Vec<(VertexId, Face)> = labels
        .into_iter()
        .map(|(v, atoms)| (v, Face::new(atoms.iter().map(|a| index[a]).collect()).unwrap()))
        .collect();
    labels.sort_by_key(|(v, _)| *v);
    Ok(Reconstruction { base, labels })
}

type Labels = Vec<(VertexId, Vec<VertexId>)>;

/// Rank colouring of one connected component, up to the colour permutations
/// tried by [`search_ranks`].
struct Colouring {
    /// Colours of the vertices of each strongly connected piece.
    local: Vec<HashMap<usize, u8>>,
    /// Number of colours (facet size) of each piece.
    sizes: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    /// `perms[k]` lists the permutations of `0..k`.
    perms: Vec<Vec<Vec<u8>>>,
}

/// Facets of equal size sharing a ridge, as adjacency lists.
fn ridge_adjacency(k: &SimplicialComplex) -> Vec<Vec<usize>> {
    let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in k.facets().iter().enumerate() {
        for r in f.boundary().filter(|r| !r.is_empty()) {
            by_ridge.entry(r).or_default().push(i);
        }
    }
    let mut adj = vec![Vec::new(); k.n_facets()];
    for owners in by_ridge.values() {
        for (x, &a) in owners.iter().enumerate() {
            for &b in &owners[x + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    adj
}

fn local_colouring(k: &SimplicialComplex) -> Result<Colouring, ReconstructionError> {
    let d = k.dim().unwrap();
    let graph = ridge_adjacency(k);
    let verts = k.vertices();
    let pos = |v: VertexId| verts.binary_search(&v).unwrap();

    // a facet of sd T of size s carries exactly the ranks 0..s, so colours
    // propagate across shared ridges inside each strongly connected piece
    let mut seen = vec![false; k.n_facets()];
    let mut order: Vec<usize> = (0..k.n_facets()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(k.facets()[i].len()));
    let mut local: Vec<HashMap<usize, u8>> = Vec::new();
    let mut sizes = Vec::new();
    for start in order {
        if seen[start] {
            continue;
        }
        let mut colour: HashMap<usize, u8> = HashMap::new();
        let seed = &k.facets()[start];
        for (i, &v) in seed.vertices().iter().enumerate() {
            colour.insert(pos(v), i as u8);
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(fi) = queue.pop_front() {
            let f = &k.facets()[fi];
            for &gi in &graph[fi] {
                let g = &k.facets()[gi];
                let x = *g.vertices().iter().find(|v| !f.contains(**v)).unwrap();
                let y = *f.vertices().iter().find(|v| !g.contains(**v)).unwrap();
                let want = colour[&pos(y)];
                match colour.get(&pos(x)) {
                    Some(&c) if c != want => {
                        return Err(ReconstructionError::NotDerived(NotDerived::RankConflict))
                    }
                    Some(_) => {}
                    None => {
                        colour.insert(pos(x), want);
                    }
                }
                if !seen[gi] {
                    seen[gi] = true;
                    queue.push_back(gi);
                }
            }
        }
        local.push(colour);
        sizes.push(seed.len());
    }
    let adjacency: Vec<Vec<usize>> = verts.iter().map(|&v| k.neighbors(v).into_iter().map(pos).collect()).collect();
    let perms: Vec<Vec<Vec<u8>>> = (0..=d + 1).map(|s| (0..s as u8).permutations(s).collect()).collect();
    Ok(Colouring { local, sizes, adjacency, perms })
}

fn reconstruct_connected(k: &SimplicialComplex) -> Result<(Vec<Vec<VertexId>>, Labels), ReconstructionError> {
    let Colouring { local, sizes, adjacency, perms } = local_colouring(k)?;
    let mut rank: Vec<Option<u8>> = vec![None; k.n_vertices()];
    let mut found = None;
    search_ranks(&local, &sizes, &perms, 0, &mut rank, &mut |rank| {
        let rank: Vec<u8> = rank.iter().map(|r| r.unwrap()).collect();
        if let Some(res) = try_ranking(k, &adjacency, &rank) {
            found = Some(res);
            true
        } else {
            false
        }
    });
    found.ok_or(ReconstructionError::NotDerived(NotDerived::NoAdmissibleRanking))
}

/// A proper colouring of the vertices by the dimension of the face they
/// would be the barycentre of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankColoring {
    /// `(vertex, rank)` sorted by vertex.
    pub ranks: Vec<(VertexId, u8)>,
    /// Number of vertices of each rank.
    pub class_sizes: Vec<usize>,
}

/// All rankings of `K` in which a facet with `s` vertices sees ranks `0..s` and every
/// vertex of rank `r` has `C(r+1, s+1)` neighbours of rank `s < r`.
///
/// The colouring is forced up to permuting colours on each strongly
/// connected piece, and the neighbour counts usually leave one ranking per
/// component, or two when the dual reading is also consistent (as for
/// `sd ∂Δ³`). Components are combined in every way.
pub fn rank_coloring(k: &SimplicialComplex) -> Result<Vec<RankColoring>, ReconstructionError> {
    if k.is_empty() {
        return Err(ReconstructionError::Empty);
    }
    let d = k.dim().unwrap();
    let mut combined: Vec<Vec<(VertexId, u8)>> = vec![Vec::new()];
    for comp in k.components() {
        let Colouring { local, sizes, adjacency, perms } = local_colouring(&comp)?;
        let mut options: Vec<Vec<(VertexId, u8)>> = Vec::new();
        let mut rank: Vec<Option<u8>> = vec![None; comp.n_vertices()];
        search_ranks(&local, &sizes, &perms, 0, &mut rank, &mut |rank| {
            let rank: Vec<u8> = rank.iter().map(|r| r.unwrap()).collect();
            if counts_admissible(d, &adjacency, &rank) {
                options.push(comp.vertices().iter().copied().zip(rank).collect());
            }
            false
        });
        if options.is_empty() {
            return Err(ReconstructionError::NotDerived(NotDerived::NoAdmissibleRanking));
        }
        combined = combined
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| prefix.iter().chain(o).copied().collect::<Vec<_>>())
            })
            .collect();
    }
    Ok(combined
        .into_iter()
        .map(|mut ranks| {
            ranks.sort_unstable();
            let mut class_sizes = vec![0; d + 1];
            for &(_, r) in &ranks {
                class_sizes[r as usize] += 1;
            }
            RankColoring { ranks, class_sizes }
        })
        .collect())
}

/// Assigns a colour permutation to each piece in turn, respecting ranks already fixed.
fn search_ranks(
    local: &[HashMap<usize, u8>],
    sizes: &[usize],
    perms: &[Vec<Vec<u8>>],
    i: usize,
    rank: &mut Vec<Option<u8>>,
    accept: &mut dyn FnMut(&[Option<u8>]) -> bool,
) -> bool {
    if i == local.len() {
        return accept(rank);
    }
    for p in &perms[sizes[i]] {
        if local[i].iter().any(|(&v, &c)| rank[v].is_some_and(|r| r != p[c as usize])) {
            continue;
        }
        let fresh: Vec<usize> = local[i].keys().copied().filter(|&v| rank[v].is_none()).collect();
        for &v in &fresh {
            rank[v] = Some(p[local[i][&v] as usize]);
        }
        if search_ranks(local, sizes, perms, i + 1, rank, accept) {
            return true;
        }
        for &v in &fresh {
            rank[v] = None;
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A face of dimension `r` has `C(r+1, s+1)` faces of dimension `s`.
fn counts_admissible(d: usize, adjacency: &[Vec<usize>], rank: &[u8]) -> bool {
    adjacency.iter().enumerate().all(|(w, adj)| {
        let r = rank[w] as usize;
        let mut count = vec![0usize; d + 1];
        for &u in adj {
            count[rank[u] as usize] += 1;
        }
        (0..r).all(|s| count[s] == binomial(r + 1, s + 1))
    })
}

/// Builds the candidate base complex for one ranking and checks it.
fn try_ranking(
    k: &SimplicialComplex,
    adjacency: &[Vec<usize>],
    rank: &[u8],
) -> Option<(Vec<Vec<VertexId>>, Labels)> {
    let verts = k.vertices();
    if !counts_admissible(k.dim().unwrap(), adjacency, rank) {
        return None;
    }
    let atoms: Vec<Vec<VertexId>> = (0..verts.len())
        .map(|w| {
            if rank[w] == 0 {
                vec![verts[w]]
            } else {
                let mut a: Vec<VertexId> =
                    adjacency[w].iter().filter(|&&u| rank[u] == 0).map(|&u| verts[u]).collect();
                a.sort_unstable();
                a
            }
        })
        .collect();
    let distinct: BTreeSet<&Vec<VertexId>> = atoms.iter().collect();
    if distinct.len() != atoms.len() {
        return None;
    }
    let faces: Vec<Face> = atoms.iter().map(|a| Face::new(a.clone()).unwrap()).collect();
    let base = SimplicialComplex::from_facets(faces.iter().cloned());

    // the candidate must subdivide back to K exactly
    let (sub, map) = sd(&base);
    if sub.n_facets() != k.n_facets() || sub.n_vertices() != verts.len() {
        return None;
    }
    let to_sd: Vec<VertexId> = faces.iter().map(|f| map.vertex_of(f)).collect::<Option<_>>()?;
    let mapped: BTreeSet<Face> = k
        .facets()
        .iter()
        .map(|f| f.map(|v| to_sd[verts.binary_search(&v).unwrap()]))
        .collect();
    if mapped.len() != sub.n_facets() || !mapped.iter().all(|f| sub.facets().binary_search(f).is_ok()) {
        return None;
    }
    let base_facets = base.facets().iter().map(|f| f.vertices().to_vec()).collect();
    let labels = verts.iter().copied().zip(atoms).collect();
    Some((base_facets, labels))
}
