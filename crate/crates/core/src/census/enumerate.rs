//! Enumeration of small closed surfaces and disks up to isomorphism.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::canon::{canonical_complex, canonical_label, CanonicalLabel};
use crate::complex::{Face, SimplicialComplex};
use crate::par;

type Tri = [u32; 3];

fn tri(a: u32, b: u32, c: u32) -> Tri {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

fn edge(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// Partial closed surface grown triangle by triangle.
///
/// Vertex 0 has the largest degree `k` and its link is the cycle `1..=k`.
/// Open edges (in one triangle) are always completed smallest first, and a
/// new vertex always gets the next unused number, so every labelled
/// surface in this normal form is reached exactly once per labelling of the
/// link of 0; remaining duplicates are removed by canonical labels.
struct Grow {
    n: u32,
    max_degree: usize,
    tris: Vec<Tri>,
    tri_set: BTreeSet<Tri>,
    edge_count: HashMap<(u32, u32), u8>,
    open: BTreeSet<(u32, u32)>,
    at_vertex: Vec<Vec<Tri>>,
    degree: Vec<usize>,
    used: u32,
}

impl Grow {
    fn new(n: u32, k: u32) -> Self {
        let mut g = Grow {
            n,
            max_degree: k as usize,
            tris: Vec::new(),
            tri_set: BTreeSet::new(),
            edge_count: HashMap::new(),
            open: BTreeSet::new(),
            at_vertex: vec![Vec::new(); n as usize],
            degree: vec![0; n as usize],
            used: k + 1,
        };
        for i in 1..=k {
            let j = if i == k { 1 } else { i + 1 };
            g.push(tri(0, i, j));
        }
        g
    }

    fn bump_edge(&mut self, a: u32, b: u32, delta: i8) {
        let e = edge(a, b);
        let c = self.edge_count.entry(e).or_insert(0);
        let before = *c;
        *c = (*c as i8 + delta) as u8;
        let after = *c;
        if before == 0 && after == 1 {
            self.degree[a as usize] += 1;
            self.degree[b as usize] += 1;
        }
        if before == 1 && after == 0 {
            self.degree[a as usize] -= 1;
            self.degree[b as usize] -= 1;
        }
        if after == 1 {
            self.open.insert(e);
        } else {
            self.open.remove(&e);
        }
        if after == 0 {
            self.edge_count.remove(&e);
        }
    }

    fn push(&mut self, t: Tri) {
        let [a, b, c] = t;
        self.bump_edge(a, b, 1);
        self.bump_edge(a, c, 1);
        self.bump_edge(b, c, 1);
        self.tris.push(t);
        self.tri_set.insert(t);
        for v in t {
            self.at_vertex[v as usize].push(t);
        }
    }

    fn pop(&mut self) {
        let t = self.tris.pop().unwrap();
        self.tri_set.remove(&t);
        for v in t {
            self.at_vertex[v as usize].pop();
        }
        let [a, b, c] = t;
        self.bump_edge(a, b, -1);
        self.bump_edge(a, c, -1);
        self.bump_edge(b, c, -1);
    }

    fn count(&self, a: u32, b: u32) -> u8 {
        self.edge_count.get(&edge(a, b)).copied().unwrap_or(0)
    }

    /// A vertex link may contain a closed cycle only if that cycle is all of it.
    fn link_ok(&self, x: u32) -> bool {
        let ts = &self.at_vertex[x as usize];
        let mut parent: HashMap<u32, u32> = HashMap::new();
        fn find(p: &mut HashMap<u32, u32>, v: u32) -> u32 {
            let mut r = v;
            while let Some(&q) = p.get(&r) {
                if q == r {
                    break;
                }
                r = q;
            }
            r
        }
        let mut cycle = false;
        for t in ts {
            let mut others = t.iter().copied().filter(|&v| v != x);
            let (a, b) = (others.next().unwrap(), others.next().unwrap());
            parent.entry(a).or_insert(a);
            parent.entry(b).or_insert(b);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                cycle = true;
            } else {
                parent.insert(ra, rb);
            }
        }
        if !cycle {
            return true;
        }
        let keys: Vec<u32> = parent.keys().copied().collect();
        let roots: BTreeSet<u32> = keys.into_iter().map(|v| find(&mut parent, v)).collect();
        roots.len() == 1
    }

    fn try_add(&mut self, u: u32, v: u32, w: u32) -> bool {
        let t = tri(u, v, w);
        if self.tri_set.contains(&t) || self.count(u, w) >= 2 || self.count(v, w) >= 2 {
            return false;
        }
        self.push(t);
        let ok = [u, v, w].iter().all(|&x| self.degree[x as usize] <= self.max_degree && self.link_ok(x));
        if !ok {
            self.pop();
        }
        ok
    }

    fn run(&mut self, out: &mut BTreeMap<CanonicalLabel, SimplicialComplex>) {
        let Some(&(u, v)) = self.open.iter().next() else {
            if self.used == self.n {
                let c = SimplicialComplex::from_facets(
                    self.tris.iter().map(|t| Face::new(t.to_vec()).unwrap()),
                );
                out.entry(canonical_label(&c)).or_insert_with(|| canonical_complex(&c));
            }
            return;
        };
        let limit = if self.used < self.n { self.used + 1 } else { self.used };
        for w in 1..limit {
            if w == u || w == v {
                continue;
            }
            let fresh = w == self.used;
            if self.try_add(u, v, w) {
                if fresh {
                    self.used += 1;
                }
                self.run(out);
                if fresh {
                    self.used -= 1;
                }
                self.pop();
            }
        }
    }
}

/// All closed connected surfaces on exactly `n` vertices, up to isomorphism,
/// each in canonical numbering and sorted by canonical label.
pub fn enumerate_closed_surfaces(n: usize) -> Vec<SimplicialComplex> {
    if n < 4 {
        return Vec::new();
    }
    let degrees: Vec<u32> = (3..n as u32).collect();
    let found = par::map(&degrees, |&k| {
        let mut out = BTreeMap::new();
        Grow::new(n as u32, k).run(&mut out);
        out
    });
    let mut all = BTreeMap::new();
    for part in found {
        all.extend(part);
    }
    all.into_values().collect()
}

/// Triangulated disks with `1..=max_triangles` triangles up to isomorphism;
/// entry `i` holds the disks with `i + 1` triangles.
///
/// Every triangulated disk is shellable, so each one arises from a disk with
/// one triangle fewer by gluing a triangle along one boundary edge (with a
/// new vertex) or along two consecutive boundary edges.
pub fn enumerate_disks(max_triangles: usize) -> Vec<Vec<SimplicialComplex>> {
    let mut levels: Vec<Vec<SimplicialComplex>> = Vec::new();
    if max_triangles == 0 {
        return levels;
    }
    let mut current = vec![SimplicialComplex::simplex(2)];
    levels.push(current.clone());
    for _ in 1..max_triangles {
        let grown = par::map(&current, shelling_steps);
        let mut next: BTreeMap<CanonicalLabel, SimplicialComplex> = BTreeMap::new();
        for c in grown.into_iter().flatten() {
            next.entry(canonical_label(&c)).or_insert_with(|| canonical_complex(&c));
        }
        current = next.into_values().collect();
        levels.push(current.clone());
    }
    levels
}

fn shelling_steps(d: &SimplicialComplex) -> Vec<SimplicialComplex> {
    let bd = d.boundary().expect("disks are pure");
    let fresh = d.vertex_bound() as u32;
    let mut out = Vec::new();
    let with = |t: Face| {
        let mut f = d.facets().to_vec();
        f.push(t);
        SimplicialComplex::from_facets(f)
    };
    for e in bd.facets() {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        out.push(with(Face::new(vec![a, b, fresh]).unwrap()));
    }
    for &w in bd.vertices() {
        let nb = bd.neighbors(w);
        if nb.len() != 2 {
            continue;
        }
        let uv = Face::new(vec![nb[0], nb[1]]).unwrap();
        if d.contains_face(&uv) {
            continue;
        }
        out.push(with(Face::new(vec![nb[0], nb[1], w]).unwrap()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{classify_surface, SurfaceClass};

    #[test]
    fn small_surfaces() {
        assert_eq!(enumerate_closed_surfaces(4).len(), 1);
        assert_eq!(enumerate_closed_surfaces(5).len(), 1);
        let six = enumerate_closed_surfaces(6);
        let spheres = six.iter().filter(|c| classify_surface(c).is_sphere()).count();
        assert_eq!(spheres, 2);
        assert!(six.iter().any(|c| classify_surface(c) == SurfaceClass::Closed { genus: 1, orientable: false }));
    }

    #[test]
    fn small_disks() {
        let levels = enumerate_disks(4);
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(&counts[..3], &[1, 1, 2]);
        assert!(levels.iter().flatten().all(|d| classify_surface(d).is_disk()));
    }
}
