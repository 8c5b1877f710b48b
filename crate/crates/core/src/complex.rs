//! Abstract simplicial complexes stored by their facets.
//!
//! A [`SimplicialComplex`] keeps only its inclusion-maximal faces; the full
//! face set is computed on first use and cached. Subcomplex operations
//! (link, star, deletion, induced, boundary) keep the vertex ids of the
//! parent so their results can be used directly as targets of collapses or
//! neighbourhood computations. Only [`SimplicialComplex::new`] renumbers
//! vertices densely.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet #{index} is empty")]
    EmptyFacet { index: usize },
    #[error("facet {facet:?} repeats vertex {vertex}")]
    RepeatedVertex { facet: Vec<VertexId>, vertex: VertexId },
    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(Face),
    #[error("face {0} is not a subcomplex face")]
    NotSubcomplex(Face),
    #[error("complex is not pure")]
    NotPure,
}

/// A nonempty simplex, stored as a strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptyFacet { index: 0 });
        }
        let original = vertices.clone();
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::RepeatedVertex { facet: original, vertex: w[0] });
        }
        Ok(Face(vertices))
    }

    /// Caller guarantees the list is strictly increasing and nonempty.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertex(v: VertexId) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    /// The face with the vertex at sorted position `i` removed, or `None` for a vertex.
    pub fn without_index(&self, i: usize) -> Option<Face> {
        if self.0.len() == 1 {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(i);
        Some(Face(v))
    }

    /// Codimension-one faces, in order of the removed position.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).filter_map(move |i| self.without_index(i))
    }

    /// All nonempty subsets, including the face itself.
    pub fn subfaces(&self) -> Vec<Face> {
        let n = self.0.len();
        assert!(n < 31, "face too large to enumerate subfaces");
        (1u32..(1 << n))
            .map(|mask| {
                Face(
                    (0..n)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<VertexId> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    /// Vertices of `self` not in `other`; `None` when nothing is left.
    pub fn difference(&self, other: &[VertexId]) -> Option<Face> {
        let v: Vec<VertexId> = self
            .0
            .iter()
            .copied()
            .filter(|x| other.binary_search(x).is_err())
            .collect();
        (!v.is_empty()).then_some(Face(v))
    }

    pub fn map(&self, f: impl Fn(VertexId) -> VertexId) -> Face {
        let mut v: Vec<VertexId> = self.0.iter().map(|&x| f(x)).collect();
        v.sort_unstable();
        Face(v)
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", join_ids(&self.0, ","))
    }
}

/// Comma separated vertex list, the form used by the certificate format.
impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ids(&self.0, ","))
    }
}

fn join_ids(ids: &[VertexId], sep: &str) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

pub(crate) fn is_sorted_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Face counts by dimension, `counts[k] = f_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// A finite abstract simplicial complex given by its facets.
#[derive(Clone)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<VertexId>,
    dropped: usize,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("n_vertices", &self.vertices.len())
            .field("facets", &self.facets)
            .finish()
    }
}

impl SimplicialComplex {
    /// Validates raw facet lists and renumbers vertices to `0..n` preserving order.
    ///
    /// Duplicate facets are merged. Facets strictly contained in other facets
    /// are dropped and counted in [`dropped_facets`](Self::dropped_facets).
    pub fn new(facet_lists: Vec<Vec<VertexId>>) -> Result<Self, ComplexError> {
        Self::new_labeled(facet_lists).map(|(c, _)| c)
    }

    /// Like [`new`](Self::new), also returning `labels[i]` = the input label of vertex `i`.
    pub fn new_labeled(
        facet_lists: Vec<Vec<VertexId>>,
    ) -> Result<(Self, Vec<VertexId>), ComplexError> {
        if facet_lists.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let mut faces = Vec::with_capacity(facet_lists.len());
        for (index, list) in facet_lists.into_iter().enumerate() {
            if list.is_empty() {
                return Err(ComplexError::EmptyFacet { index });
            }
            faces.push(Face::new(list)?);
        }
        let raw = Self::from_facets(faces);
        Ok(raw.normalized())
    }

    /// Builds a complex keeping the given vertex ids.
    pub fn from_facets(facets: impl IntoIterator<Item = Face>) -> Self {
        let mut facets: Vec<Face> = facets.into_iter().collect();
        facets.sort_unstable();
        facets.dedup();
        let before = facets.len();
        let facets = maximal_faces(facets);
        let dropped = before - facets.len();
        let mut c = Self::from_antichain(facets);
        c.dropped = dropped;
        c
    }

    /// Caller guarantees `facets` is a sorted, duplicate-free antichain.
    pub(crate) fn from_antichain(facets: Vec<Face>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        let vertices: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        SimplicialComplex {
            facets,
            vertices: vertices.into_iter().collect(),
            dropped: 0,
            faces: OnceLock::new(),
        }
    }

    pub fn empty() -> Self {
        Self::from_antichain(Vec::new())
    }

    /// The full simplex on vertices `0..=d`.
    pub fn simplex(d: usize) -> Self {
        Self::from_antichain(vec![Face((0..=d as VertexId).collect())])
    }

    /// The boundary of the simplex on `0..=d`, a `(d-1)`-sphere.
    pub fn simplex_boundary(d: usize) -> Self {
        Self::from_facets(Face((0..=d as VertexId).collect()).boundary())
    }

    /// Boundary of the `d`-dimensional cross-polytope; `d = 3` is the octahedron.
    pub fn cross_polytope_boundary(d: usize) -> Self {
        let mut facets = Vec::new();
        for mask in 0u32..(1 << d) {
            let f: Vec<VertexId> = (0..d as u32)
                .map(|i| 2 * i + ((mask >> i) & 1))
                .collect();
            facets.push(Face(f));
        }
        Self::from_facets(facets)
    }

    /// Renumbers vertices to `0..n` in increasing order of the current ids.
    pub fn normalized(&self) -> (Self, Vec<VertexId>) {
        let labels = self.vertices.clone();
        let index: HashMap<VertexId, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as VertexId))
            .collect();
        let mut facets: Vec<Face> = self.facets.iter().map(|f| f.map(|v| index[&v])).collect();
        facets.sort_unstable();
        let mut c = Self::from_antichain(facets);
        c.dropped = self.dropped;
        (c, labels)
    }

    /// Applies an injective vertex map.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Self {
        let mut facets: Vec<Face> = self.facets.iter().map(|x| x.map(&f)).collect();
        facets.sort_unstable();
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]), "relabel must be injective");
        Self::from_antichain(facets)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_facets(&self) -> usize {
        self.facets.len()
    }

    /// Number of facets that were discarded at construction because another facet contains them.
    pub fn dropped_facets(&self) -> usize {
        self.dropped
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Maximum face dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(Face::dim).max()
    }

    pub fn is_pure(&self) -> bool {
        match self.dim() {
            None => true,
            Some(d) => self.facets.iter().all(|f| f.dim() == d),
        }
    }

    /// Largest vertex id plus one (0 for the empty complex).
    pub fn vertex_bound(&self) -> usize {
        self.vertices.last().map_or(0, |&v| v as usize + 1)
    }

    /// All nonempty faces, grouped by dimension and sorted within each group.
    pub fn faces(&self) -> &[Vec<Face>] {
        self.faces.get_or_init(|| {
            let d = match self.dim() {
                None => return Vec::new(),
                Some(d) => d,
            };
            let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); d + 1];
            for f in &self.facets {
                for s in f.subfaces() {
                    sets[s.dim()].insert(s);
                }
            }
            sets.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    pub fn faces_of_dim(&self, k: usize) -> &[Face] {
        self.faces().get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces().iter().flatten()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.faces_of_dim(face.dim()).binary_search(face).is_ok()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces().iter().map(Vec::len).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    /// Facets containing `face`.
    pub fn facets_containing<'a>(&'a self, face: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.facets.iter().filter(move |f| face.is_subset_of(f))
    }

    /// Vertices sharing an edge with `v`.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut out: BTreeSet<VertexId> = BTreeSet::new();
        for f in &self.facets {
            if f.contains(v) {
                out.extend(f.0.iter().copied().filter(|&w| w != v));
            }
        }
        out.into_iter().collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    /// Checks that `sigma` (sorted or not) is a face; the empty slice is accepted.
    fn checked_face(&self, sigma: &[VertexId]) -> Result<Option<Face>, ComplexError> {
        if sigma.is_empty() {
            return Ok(None);
        }
        let face = Face::new(sigma.to_vec())?;
        if !self.contains_face(&face) {
            return Err(ComplexError::FaceNotInComplex(face));
        }
        Ok(Some(face))
    }

    /// The link `{τ : τ ∩ σ = ∅, τ ∪ σ ∈ C}`. The link of the empty face is the complex itself.
    pub fn link(&self, sigma: &[VertexId]) -> Result<SimplicialComplex, ComplexError> {
        let Some(face) = self.checked_face(sigma)? else {
            return Ok(self.clone());
        };
        Ok(Self::from_facets(
            self.facets_containing(&face)
                .filter_map(|f| f.difference(face.vertices())),
        ))
    }

    /// Closure of all faces containing `σ`.
    pub fn star(&self, sigma: &[VertexId]) -> Result<SimplicialComplex, ComplexError> {
        let Some(face) = self.checked_face(sigma)? else {
            return Ok(self.clone());
        };
        Ok(Self::from_antichain(self.facets_containing(&face).cloned().collect()))
    }

    /// Checks that every facet of `d` is a face of `self`.
    pub fn check_subcomplex(&self, d: &SimplicialComplex) -> Result<(), ComplexError> {
        match d.facets.iter().find(|f| !self.contains_face(f)) {
            Some(f) => Err(ComplexError::NotSubcomplex(f.clone())),
            None => Ok(()),
        }
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        other.check_subcomplex(self).is_ok()
    }

    /// `C − D`: the largest subcomplex avoiding the relative interior of `D`,
    /// i.e. the faces of `C` containing no facet of `D`.
    pub fn deletion(&self, d: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
        self.check_subcomplex(d)?;
        let survivors = self
            .all_faces()
            .filter(|t| !d.facets.iter().any(|f| f.is_subset_of(t)))
            .cloned();
        Ok(Self::from_facets(survivors))
    }

    /// All faces whose vertices lie in `vertices`.
    pub fn induced(&self, vertices: &[VertexId]) -> SimplicialComplex {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Self::from_facets(self.facets.iter().filter_map(|f| {
            let v: Vec<VertexId> = f.0.iter().copied().filter(|x| keep.binary_search(x).is_ok()).collect();
            (!v.is_empty()).then_some(Face(v))
        }))
    }

    /// Closure of the ridges lying in exactly one facet. Requires a pure complex.
    pub fn boundary(&self) -> Result<SimplicialComplex, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut count: HashMap<Face, usize> = HashMap::new();
        for f in &self.facets {
            for r in f.boundary() {
                *count.entry(r).or_default() += 1;
            }
        }
        Ok(Self::from_facets(
            count.into_iter().filter(|&(_, n)| n == 1).map(|(r, _)| r),
        ))
    }

    /// Disjoint union, shifting the vertices of `other` past those of `self`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let shift = self.vertex_bound() as VertexId;
        let mut facets = self.facets.clone();
        facets.extend(other.facets.iter().map(|f| f.map(|v| v + shift)));
        Self::from_facets(facets)
    }

    /// Connected components (by shared vertices), each keeping the original ids.
    pub fn components(&self) -> Vec<SimplicialComplex> {
        let mut parent: HashMap<VertexId, VertexId> =
            self.vertices.iter().map(|&v| (v, v)).collect();
        fn find(p: &mut HashMap<VertexId, VertexId>, v: VertexId) -> VertexId {
            let mut r = v;
            while p[&r] != r {
                r = p[&r];
            }
            let mut x = v;
            while p[&x] != r {
                let next = p[&x];
                p.insert(x, r);
                x = next;
            }
            r
        }
        for f in &self.facets {
            let a = find(&mut parent, f.0[0]);
            for &v in &f.0[1..] {
                let b = find(&mut parent, v);
                if a != b {
                    parent.insert(b, a);
                }
            }
        }
        let mut groups: BTreeMap<VertexId, Vec<Face>> = BTreeMap::new();
        for f in &self.facets {
            let root = find(&mut parent, f.0[0]);
            groups.entry(root).or_default().push(f.clone());
        }
        let mut comps: Vec<SimplicialComplex> =
            groups.into_values().map(Self::from_antichain).collect();
        comps.sort_by(|a, b| a.facets[0].cmp(&b.facets[0]));
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Facet adjacency through shared ridges. Requires a pure complex.
    pub fn dual_graph(&self) -> Result<DualGraph, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for r in f.boundary() {
                by_ridge.entry(r).or_default().push(i);
            }
        }
        let mut adjacency = vec![Vec::new(); self.facets.len()];
        let mut pseudo_manifold = true;
        for owners in by_ridge.values() {
            if owners.len() > 2 {
                pseudo_manifold = false;
            }
            for (a, &i) in owners.iter().enumerate() {
                for &j in &owners[a + 1..] {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        Ok(DualGraph { adjacency, pseudo_manifold })
    }

    /// Pure, and every ridge lies in at most two facets.
    pub fn is_pseudo_manifold(&self) -> bool {
        self.dual_graph().map(|g| g.pseudo_manifold).unwrap_or(false)
    }
}

/// Keeps the inclusion-maximal members of a sorted, deduplicated face list.
fn maximal_faces(facets: Vec<Face>) -> Vec<Face> {
    if facets.len() < 2 {
        return facets;
    }
    let max_len = facets.iter().map(Face::len).max().unwrap_or(0);
    if facets.iter().all(|f| f.len() == max_len) {
        return facets;
    }
    // vertex -> indices of facets containing it, longest first
    let mut order: Vec<usize> = (0..facets.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(facets[i].len()));
    let mut by_vertex: HashMap<VertexId, Vec<usize>> = HashMap::new();
    let mut keep = vec![false; facets.len()];
    for &i in &order {
        let f = &facets[i];
        let first = f.0[0];
        let contained = by_vertex.get(&first).is_some_and(|cands| {
            cands.iter().any(|&j| facets[j].len() > f.len() && f.is_subset_of(&facets[j]))
        });
        if !contained {
            keep[i] = true;
            for &v in &f.0 {
                by_vertex.entry(v).or_default().push(i);
            }
        }
    }
    facets
        .into_iter()
        .zip(keep)
        .filter_map(|(f, k)| k.then_some(f))
        .collect()
}

/// Joins two complexes, relabelling `b` past `a` when their vertex sets meet.
///
/// Faces of the join are unions of a face of `a` and a face of `b`, either of
/// which may be empty.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let overlap = b.vertices().iter().any(|v| a.vertices().binary_search(v).is_ok());
    let shifted;
    let b = if overlap {
        let shift = a.vertex_bound() as VertexId;
        shifted = b.relabel(|v| v + shift);
        &shifted
    } else {
        b
    };
    let mut facets = Vec::with_capacity(a.n_facets() * b.n_facets());
    for f in a.facets() {
        for g in b.facets() {
            facets.push(f.union(g));
        }
    }
    facets.sort_unstable();
    SimplicialComplex::from_antichain(facets)
}

/// Cone with a fresh apex numbered one past the largest vertex.
pub fn cone(c: &SimplicialComplex) -> SimplicialComplex {
    let apex = c.vertex_bound() as VertexId;
    join(c, &SimplicialComplex::from_antichain(vec![Face::vertex(apex)]))
}

/// Graph on the facets of a pure complex; facets are adjacent when they share a ridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    /// Neighbours of each facet, indexed like [`SimplicialComplex::facets`].
    pub adjacency: Vec<Vec<usize>>,
    /// Every ridge lies in at most two facets.
    pub pseudo_manifold: bool,
}

impl DualGraph {
    pub fn n_nodes(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.adjacency.len()];
        let mut comps = Vec::new();
        for start in 0..self.adjacency.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &j in &self.adjacency[i] {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
