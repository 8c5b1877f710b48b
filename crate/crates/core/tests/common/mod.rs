//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the library's algorithms; complexes are plain sorted facet lists.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use itertools::Itertools;
use scx::{CollapseSequence, SimplicialComplex};

pub type Facets = Vec<Vec<u32>>;

pub fn facets_of(c: &SimplicialComplex) -> Facets {
    c.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

pub fn complex(facets: &[Vec<u32>]) -> SimplicialComplex {
    SimplicialComplex::new(facets.to_vec()).expect("valid facets")
}

/// Every nonempty face of the complex generated by `facets`.
pub fn closure(facets: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for f in facets {
        for mask in 1u32..(1 << f.len()) {
            out.insert((0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect());
        }
    }
    out
}

pub fn euler(facets: &[Vec<u32>]) -> i64 {
    closure(facets).iter().map(|f| if f.len() % 2 == 1 { 1 } else { -1 }).sum()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Ridges lying in exactly one facet, with their closure.
pub fn boundary_faces(facets: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let mut count: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for f in facets {
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            if !r.is_empty() {
                *count.entry(r).or_default() += 1;
            }
        }
    }
    let ridges: Facets = count.into_iter().filter(|(_, n)| *n == 1).map(|(r, _)| r).collect();
    closure(&ridges)
}

/// Replays a collapse sequence on the face set of `facets` and returns
/// the faces left over, or a description of the first illegal step.
pub fn replay(facets: &[Vec<u32>], seq: &CollapseSequence) -> Result<BTreeSet<Vec<u32>>, String> {
    let mut faces = closure(facets);
    if let Some(r) = &seq.removed {
        let r = r.vertices().to_vec();
        if !facets.contains(&r) {
            return Err(format!("removed face {r:?} is not a facet"));
        }
        faces.remove(&r);
    }
    for p in &seq.pairs {
        let (s, t) = (p.free.vertices().to_vec(), p.coface.vertices().to_vec());
        if !faces.contains(&s) || !faces.contains(&t) {
            return Err(format!("{s:?} or {t:?} already gone"));
        }
        if t.len() != s.len() + 1 || !s.iter().all(|v| t.contains(v)) {
            return Err(format!("{s:?} is not a ridge of {t:?}"));
        }
        let above = faces.iter().filter(|g| g.len() > s.len() && s.iter().all(|v| g.contains(v))).count();
        if above != 1 {
            return Err(format!("{s:?} is not free"));
        }
        faces.remove(&s);
        faces.remove(&t);
    }
    Ok(faces)
}

/// Whether `seq` shows that `facets` minus a facet collapses onto its
/// boundary, or onto a vertex when there is no boundary.
pub fn replay_endo(facets: &[Vec<u32>], seq: &CollapseSequence) -> Result<(), String> {
    if seq.removed.is_none() && facets.len() > 1 {
        return Err("no facet removed".into());
    }
    let left = replay(facets, seq)?;
    let bd = boundary_faces(facets);
    let ok = if bd.is_empty() { left.len() == 1 && left.iter().all(|f| f.len() == 1) } else { left == bd };
    ok.then_some(()).ok_or_else(|| format!("{} faces left", left.len()))
}

pub fn replay_collapsible(facets: &[Vec<u32>], seq: &CollapseSequence) -> Result<(), String> {
    let left = replay(facets, seq)?;
    (left.len() == 1 && left.iter().all(|f| f.len() == 1))
        .then_some(())
        .ok_or_else(|| format!("{} faces left", left.len()))
}

fn vertices(facets: &[Vec<u32>]) -> Vec<u32> {
    facets.iter().flatten().copied().sorted().dedup().collect()
}

fn degrees(facets: &[Vec<u32>]) -> BTreeMap<u32, (usize, Vec<usize>)> {
    // (number of facets, sizes of those facets) is invariant under relabelling
    let mut d: BTreeMap<u32, (usize, Vec<usize>)> = BTreeMap::new();
    for f in facets {
        for &v in f {
            let e = d.entry(v).or_default();
            e.0 += 1;
            e.1.push(f.len());
        }
    }
    for e in d.values_mut() {
        e.1.sort_unstable();
    }
    d
}

fn apply(facets: &[Vec<u32>], map: &[u32]) -> Facets {
    let mut out: Facets = facets.iter().map(|f| f.iter().map(|&v| map[v as usize]).sorted().collect()).collect();
    out.sort();
    out
}

/// Every bijection from the vertices of `facets` onto `0..n` that lists
/// vertices in order of increasing invariant, as a lookup table.
fn class_respecting_maps(facets: &[Vec<u32>]) -> impl Iterator<Item = Vec<u32>> {
    let deg = degrees(facets);
    let size = deg.keys().max().map_or(0, |&v| v as usize + 1);
    let mut classes: BTreeMap<(usize, Vec<usize>), Vec<u32>> = BTreeMap::new();
    for (v, d) in deg {
        classes.entry(d).or_default().push(v);
    }
    let classes: Vec<Vec<u32>> = classes.into_values().collect();
    let offsets: Vec<u32> = classes.iter().scan(0u32, |acc, c| {
        let o = *acc;
        *acc += c.len() as u32;
        Some(o)
    }).collect();
    let orders: Vec<Vec<Vec<u32>>> =
        classes.iter().map(|c| c.iter().copied().permutations(c.len()).collect()).collect();
    orders.into_iter().multi_cartesian_product().map(move |choice| {
        let mut map = vec![u32::MAX; size];
        for (order, off) in choice.iter().zip(&offsets) {
            for (i, &v) in order.iter().enumerate() {
                map[v as usize] = off + i as u32;
            }
        }
        map
    })
}

/// Lexicographically least relabelled facet list among invariant-respecting
/// relabellings. Two complexes are isomorphic iff their forms agree.
pub fn brute_canonical(facets: &[Vec<u32>]) -> Facets {
    class_respecting_maps(facets).map(|m| apply(facets, &m)).min().unwrap_or_default()
}

/// Isomorphism by trying every vertex bijection that respects invariants.
pub fn brute_iso(a: &[Vec<u32>], b: &[Vec<u32>]) -> bool {
    if a.len() != b.len() || vertices(a).len() != vertices(b).len() {
        return false;
    }
    let mut da: Vec<_> = degrees(a).into_values().collect();
    let mut db: Vec<_> = degrees(b).into_values().collect();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    // relabel b onto 0..n in its own class order
    let target: HashSet<Vec<u32>> = match class_respecting_maps(b).next() {
        Some(m) => apply(b, &m).into_iter().collect(),
        None => return a.is_empty(),
    };
    class_respecting_maps(a).any(|m| apply(a, &m).iter().all(|f| target.contains(f)))
}

/// Closed 2-manifold check: every edge in two triangles, every vertex link
/// a single cycle.
pub fn is_closed_surface(facets: &[Vec<u32>]) -> bool {
    if facets.iter().any(|f| f.len() != 3) {
        return false;
    }
    let mut edge_count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for f in facets {
        for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            *edge_count.entry((a, b)).or_default() += 1;
        }
    }
    if edge_count.values().any(|&n| n != 2) {
        return false;
    }
    vertices(facets).into_iter().all(|v| {
        let link: Vec<(u32, u32)> = facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| {
                let o: Vec<u32> = f.iter().copied().filter(|&x| x != v).collect();
                (o[0], o[1])
            })
            .collect();
        // a 2-regular graph is one cycle iff walking from an edge visits all edges
        let (start, mut prev, mut cur) = (link[0].0, link[0].0, link[0].1);
        let mut steps = 1;
        while cur != start {
            let next = link
                .iter()
                .find_map(|&(a, b)| match (a == cur, b == cur) {
                    (true, _) if b != prev => Some(b),
                    (_, true) if a != prev => Some(a),
                    _ => None,
                });
            let Some(n) = next else { return false };
            prev = cur;
            cur = n;
            steps += 1;
            if steps > link.len() {
                return false;
            }
        }
        steps == link.len()
    })
}

/// Triangulated 2-spheres on `n` vertices up to isomorphism, grown from the
/// tetrahedron boundary by vertex splits (every 2-sphere other than the
/// tetrahedron has an edge whose contraction is again a 2-sphere).
pub fn spheres_by_vertex_splits(max_n: usize) -> BTreeMap<usize, Vec<Facets>> {
    let tetra: Facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    let mut out = BTreeMap::new();
    let mut level: BTreeSet<Facets> = [brute_canonical(&tetra)].into();
    out.insert(4, level.iter().cloned().collect());
    for n in 5..=max_n {
        let mut next = BTreeSet::new();
        for s in &level {
            for split in vertex_splits(s, n as u32 - 1) {
                next.insert(brute_canonical(&split));
            }
        }
        out.insert(n, next.iter().cloned().collect());
        level = next;
    }
    out
}

fn link_cycle(facets: &[Vec<u32>], v: u32) -> Vec<u32> {
    let edges: Vec<(u32, u32)> = facets
        .iter()
        .filter(|f| f.contains(&v))
        .map(|f| {
            let o: Vec<u32> = f.iter().copied().filter(|&x| x != v).collect();
            (o[0], o[1])
        })
        .collect();
    let mut cycle = vec![edges[0].0, edges[0].1];
    while cycle.len() < edges.len() {
        let (prev, cur) = (cycle[cycle.len() - 2], cycle[cycle.len() - 1]);
        let next = edges
            .iter()
            .find_map(|&(a, b)| if a == cur && b != prev { Some(b) } else if b == cur && a != prev { Some(a) } else { None })
            .unwrap();
        cycle.push(next);
    }
    cycle
}

/// Splits each vertex `v` along each pair of link vertices into `v`, `w`.
fn vertex_splits(facets: &[Vec<u32>], w: u32) -> Vec<Facets> {
    let mut out = Vec::new();
    for v in vertices(facets) {
        let c = link_cycle(facets, v);
        let m = c.len();
        for i in 0..m {
            for j in 1..m {
                // arc c_i .. c_{i+j} stays at v, the rest moves to w
                let mut f: Facets = facets.iter().filter(|f| !f.contains(&v)).cloned().collect();
                for k in 0..m {
                    let (a, b) = (c[(i + k) % m], c[(i + k + 1) % m]);
                    let centre = if k < j { v } else { w };
                    f.push([centre, a, b].into_iter().sorted().collect());
                }
                f.push([v, w, c[i]].into_iter().sorted().collect());
                f.push([v, w, c[(i + j) % m]].into_iter().sorted().collect());
                out.push(f);
            }
        }
    }
    out
}

/// Disk check: pure 2-dim, edges in at most two triangles, connected,
/// every vertex link a path or a cycle, Euler characteristic 1 and one
/// boundary cycle.
pub fn is_disk(facets: &[Vec<u32>]) -> bool {
    if facets.iter().any(|f| f.len() != 3) {
        return false;
    }
    let mut edge_count: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for f in facets {
        for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            *edge_count.entry((a, b)).or_default() += 1;
        }
    }
    if edge_count.values().any(|&n| n > 2) || euler(facets) != 1 {
        return false;
    }
    // connectivity through shared edges
    let mut seen = vec![false; facets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for (j, g) in facets.iter().enumerate() {
            if !seen[j] && facets[i].iter().filter(|v| g.contains(v)).count() == 2 {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.contains(&false) {
        return false;
    }
    // boundary edges form one cycle through distinct vertices
    let bd: Vec<(u32, u32)> = edge_count.iter().filter(|(_, n)| **n == 1).map(|(e, _)| *e).collect();
    let bverts: BTreeSet<u32> = bd.iter().flat_map(|&(a, b)| [a, b]).collect();
    if bd.len() != bverts.len() || bd.len() < 3 {
        return false;
    }
    // every vertex link is a path (boundary) or cycle (interior)
    vertices(facets).into_iter().all(|v| {
        let link: Vec<(u32, u32)> = facets
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| {
                let o: Vec<u32> = f.iter().copied().filter(|&x| x != v).collect();
                (o[0], o[1])
            })
            .collect();
        let mut deg: BTreeMap<u32, usize> = BTreeMap::new();
        for &(a, b) in &link {
            *deg.entry(a).or_default() += 1;
            *deg.entry(b).or_default() += 1;
        }
        let ends = deg.values().filter(|&&d| d == 1).count();
        let connected = {
            let mut reach: BTreeSet<u32> = [link[0].0].into();
            loop {
                let before = reach.len();
                for &(a, b) in &link {
                    if reach.contains(&a) || reach.contains(&b) {
                        reach.insert(a);
                        reach.insert(b);
                    }
                }
                if reach.len() == before {
                    break;
                }
            }
            reach.len() == deg.len()
        };
        deg.values().all(|&d| d <= 2) && connected && (ends == 0) != bverts.contains(&v) && (ends == 0 || ends == 2)
    })
}

/// Disks with exactly `n` triangles up to isomorphism, by trying every set
/// of `n` triangles on `v` vertices that uses all of them.
pub fn brute_force_disks(n: usize) -> BTreeSet<Facets> {
    let mut out = BTreeSet::new();
    for v in 3..=(n + 2) as u32 {
        let triangles: Facets = (0..v).combinations(3).collect();
        for set in triangles.iter().combinations(n) {
            let f: Facets = set.into_iter().cloned().collect();
            if vertices(&f).len() == v as usize && f[0] == vec![0, 1, 2] && is_disk(&f) {
                out.insert(brute_canonical(&f));
            }
        }
    }
    out
}

/// Triangulations of the convex `m`-gon as sets of `m − 3` pairwise
/// non-crossing diagonals.
pub fn polygon_triangulations_by_diagonals(m: usize) -> Vec<Vec<(usize, usize)>> {
    let diagonals: Vec<(usize, usize)> =
        (0..m).flat_map(|a| (a + 2..m).map(move |b| (a, b))).filter(|&(a, b)| !(a == 0 && b == m - 1)).collect();
    let crosses = |(a, b): (usize, usize), (c, d): (usize, usize)| (a < c && c < b && b < d) || (c < a && a < d && d < b);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        i: usize,
        need: usize,
        diagonals: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
        crosses: &dyn Fn((usize, usize), (usize, usize)) -> bool,
    ) {
        if chosen.len() == need {
            out.push(chosen.clone());
            return;
        }
        if diagonals.len() - i < need - chosen.len() {
            return;
        }
        let d = diagonals[i];
        if chosen.iter().all(|&c| !crosses(c, d)) {
            chosen.push(d);
            rec(i + 1, need, diagonals, chosen, out, crosses);
            chosen.pop();
        }
        rec(i + 1, need, diagonals, chosen, out, crosses);
    }
    if m >= 3 {
        rec(0, m - 3, &diagonals, &mut chosen, &mut out, &crosses);
    }
    out
}

/// Triangles of the triangulation given by a maximal set of diagonals.
pub fn triangles_from_diagonals(m: usize, diagonals: &[(usize, usize)]) -> Facets {
    let mut edges: BTreeSet<(usize, usize)> = diagonals.iter().copied().collect();
    edges.extend((0..m).map(|i| (i.min((i + 1) % m), i.max((i + 1) % m))));
    (0..m)
        .combinations(3)
        .filter(|t| edges.contains(&(t[0], t[1])) && edges.contains(&(t[1], t[2])) && edges.contains(&(t[0], t[2])))
        .map(|t| t.into_iter().map(|v| v as u32).collect())
        .collect()
}
