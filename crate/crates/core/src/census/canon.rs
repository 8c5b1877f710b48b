//! Canonical labels: equal exactly for isomorphic complexes.
//!
//! Connected pure pseudo-manifolds whose dual graph is connected are
//! labelled by the smallest breadth-first facet encoding over all seeds (a
//! facet plus an ordering of its vertices), exactly the seeds used by gluing
//! determination. Everything else goes through colour refinement with
//! individualisation. Disconnected complexes are labelled per component and
//! the component labels sorted.

use std::cmp::Ordering;
use std::collections::{HashMap, VecDeque};

use itertools::Itertools;

use crate::complex::{Face, SimplicialComplex, VertexId};

const TAG_SEEDED: u32 = 1;
const TAG_REFINED: u32 = 2;
const NONE: u32 = u32::MAX;

/// Isomorphism invariant that determines the complex up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel(pub Vec<u32>);

impl CanonicalLabel {
    /// Compact hex rendering of the label, stable across runs and platforms.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|x| format!("{x:x}")).join(".")
    }
}

/// The canonical label together with a canonical numbering of the vertices.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub label: CanonicalLabel,
    /// `(vertex, canonical index)` sorted by vertex.
    pub numbering: Vec<(VertexId, u32)>,
}

impl CanonicalForm {
    pub fn index_of(&self, v: VertexId) -> u32 {
        let i = self.numbering.binary_search_by_key(&v, |(w, _)| *w).expect("vertex of the complex");
        self.numbering[i].1
    }
}

pub fn canonical_label(c: &SimplicialComplex) -> CanonicalLabel {
    canonical_form(c).label
}

pub fn canonical_form(c: &SimplicialComplex) -> CanonicalForm {
    let mut parts: Vec<(Vec<u32>, SimplicialComplex, Vec<u32>)> = c
        .components()
        .into_iter()
        .map(|comp| {
            let (code, numbering) = component_form(&comp);
            (code, comp, numbering)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    let mut code = vec![parts.len() as u32];
    let mut numbering = Vec::with_capacity(c.n_vertices());
    let mut offset = 0u32;
    for (part, comp, local) in &parts {
        code.push(part.len() as u32);
        code.extend_from_slice(part);
        for (&v, &i) in comp.vertices().iter().zip(local) {
            numbering.push((v, offset + i));
        }
        offset += comp.n_vertices() as u32;
    }
    numbering.sort_unstable();
    CanonicalForm { label: CanonicalLabel(code), numbering }
}

/// Dense facet lists (vertex positions) for a complex.
fn dense_facets(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    let verts = c.vertices();
    c.facets()
        .iter()
        .map(|f| f.vertices().iter().map(|v| verts.binary_search(v).unwrap()).collect())
        .collect()
}

/// Code and numbering (indexed by vertex position) of a connected complex.
fn component_form(c: &SimplicialComplex) -> (Vec<u32>, Vec<u32>) {
    let seeded = c.dual_graph().ok().filter(|g| g.pseudo_manifold && g.is_connected());
    let (tag, (body, numbering)) = match seeded {
        Some(_) => (TAG_SEEDED, seeded_form(c)),
        None => (TAG_REFINED, refined_form(c)),
    };
    let mut code = vec![tag, c.n_vertices() as u32, c.n_facets() as u32];
    code.extend(body);
    (code, numbering)
}

/// For every facet, the facet across each ridge (indexed by the omitted position).
pub(crate) fn ridge_neighbours(facets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut by_ridge: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        for p in 0..f.len() {
            let mut r = f.clone();
            r.remove(p);
            by_ridge.entry(r).or_default().push((fi, p));
        }
    }
    let mut out: Vec<Vec<usize>> = facets.iter().map(|f| vec![usize::MAX; f.len()]).collect();
    for owners in by_ridge.values() {
        if let [(a, pa), (b, pb)] = owners[..] {
            out[a][pa] = b;
            out[b][pb] = a;
        }
    }
    out
}

fn seeded_form(c: &SimplicialComplex) -> (Vec<u32>, Vec<u32>) {
    let facets = dense_facets(c);
    let nbr = ridge_neighbours(&facets);
    let m = facets[0].len();
    let mut best: Vec<u32> = Vec::new();
    let mut best_numbering: Vec<u32> = Vec::new();
    let mut label = vec![NONE; c.n_vertices()];
    let mut out: Vec<u32> = Vec::with_capacity(facets.len() * m);
    let mut visited = vec![false; facets.len()];
    for f0 in 0..facets.len() {
        for perm in (0..m).permutations(m) {
            label.iter_mut().for_each(|x| *x = NONE);
            visited.iter_mut().for_each(|x| *x = false);
            out.clear();
            let mut cmp = if best.is_empty() { Ordering::Less } else { Ordering::Equal };
            let mut next = 0u32;
            for &p in &perm {
                label[facets[f0][p]] = next;
                next += 1;
            }
            let emit = |f: &[usize], label: &[u32], out: &mut Vec<u32>, cmp: &mut Ordering| -> bool {
                let mut l: Vec<u32> = f.iter().map(|&v| label[v]).collect();
                l.sort_unstable();
                for x in l {
                    if *cmp == Ordering::Equal {
                        *cmp = x.cmp(&best[out.len()]);
                        if *cmp == Ordering::Greater {
                            return false;
                        }
                    }
                    out.push(x);
                }
                true
            };
            visited[f0] = true;
            if !emit(&facets[f0], &label, &mut out, &mut cmp) {
                continue;
            }
            let mut queue = VecDeque::from([f0]);
            let mut aborted = false;
            'bfs: while let Some(f) = queue.pop_front() {
                let mut order: Vec<usize> = (0..m).collect();
                order.sort_by_key(|&p| label[facets[f][p]]);
                for p in order {
                    let g = nbr[f][p];
                    if g == usize::MAX || visited[g] {
                        continue;
                    }
                    let x = *facets[g].iter().find(|v| !facets[f].contains(v)).unwrap();
                    if label[x] == NONE {
                        label[x] = next;
                        next += 1;
                    }
                    visited[g] = true;
                    if !emit(&facets[g], &label, &mut out, &mut cmp) {
                        aborted = true;
                        break 'bfs;
                    }
                    queue.push_back(g);
                }
            }
            if !aborted && cmp == Ordering::Less {
                best = out.clone();
                best_numbering = label.clone();
            }
        }
    }
    (best, best_numbering)
}

/// Colour refinement with individualisation, for complexes without seeds.
fn refined_form(c: &SimplicialComplex) -> (Vec<u32>, Vec<u32>) {
    let facets = dense_facets(c);
    let n = c.n_vertices();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (fi, f) in facets.iter().enumerate() {
        for &v in f {
            incident[v].push(fi);
        }
    }
    let initial: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut sizes: Vec<usize> = incident[v].iter().map(|&f| facets[f].len()).collect();
            sizes.sort_unstable();
            sizes
        })
        .collect();
    let colours = refine(&facets, &incident, rank_of(&initial));
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    individualise(&facets, &incident, colours, &mut best);
    best.expect("at least one leaf")
}

fn rank_of<T: Ord>(keys: &[T]) -> Vec<u32> {
    let mut sorted: Vec<&T> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(&k).unwrap() as u32).collect()
}

fn classes(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn refine(facets: &[Vec<usize>], incident: &[Vec<usize>], mut colours: Vec<u32>) -> Vec<u32> {
    loop {
        let before = classes(&colours);
        let sigs: Vec<(u32, Vec<Vec<u32>>)> = (0..colours.len())
            .map(|v| {
                let mut around: Vec<Vec<u32>> = incident[v]
                    .iter()
                    .map(|&f| {
                        let mut cs: Vec<u32> = facets[f].iter().filter(|&&u| u != v).map(|&u| colours[u]).collect();
                        cs.sort_unstable();
                        cs
                    })
                    .collect();
                around.sort();
                (colours[v], around)
            })
            .collect();
        colours = rank_of(&sigs);
        if classes(&colours) == before {
            return colours;
        }
    }
}

fn individualise(
    facets: &[Vec<usize>],
    incident: &[Vec<usize>],
    colours: Vec<u32>,
    best: &mut Option<(Vec<u32>, Vec<u32>)>,
) {
    let n = colours.len();
    if classes(&colours) == n {
        let mut enc: Vec<Vec<u32>> = facets
            .iter()
            .map(|f| {
                let mut l: Vec<u32> = f.iter().map(|&v| colours[v]).collect();
                l.sort_unstable();
                l
            })
            .collect();
        enc.sort();
        let code: Vec<u32> = enc.into_iter().flat_map(|f| std::iter::once(f.len() as u32).chain(f)).collect();
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colours));
        }
        return;
    }
    // first non-singleton cell, by colour
    let mut count: HashMap<u32, usize> = HashMap::new();
    for &c in &colours {
        *count.entry(c).or_default() += 1;
    }
    let target = *count.iter().filter(|(_, &k)| k > 1).map(|(c, _)| c).min().unwrap();
    for v in (0..n).filter(|&v| colours[v] == target) {
        let keys: Vec<(u32, u8)> =
            (0..n).map(|u| (colours[u], u8::from(colours[u] == target && u != v))).collect();
        let next = refine(facets, incident, rank_of(&keys));
        individualise(facets, incident, next, best);
    }
}

/// Applies a canonical numbering, producing the canonical representative.
pub fn canonical_complex(c: &SimplicialComplex) -> SimplicialComplex {
    let form = canonical_form(c);
    let facets: Vec<Face> = c.facets().iter().map(|f| f.map(|v| form.index_of(v))).collect();
    SimplicialComplex::from_facets(facets)
}
