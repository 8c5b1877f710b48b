mod common;

use std::collections::BTreeMap;

use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scx::census::{canonical_label, enumerate_closed_surfaces, enumerate_disks};
use scx::collapse::{elementary_collapse, free_faces};
use scx::random::{random_complex, shuffled};
use scx::subdivision::derived_neighborhood;
use scx::{classify_surface, iso, sd, SimplicialComplex, SurfaceClass};

#[test]
fn sphere_census_matches_vertex_splits() {
    let oracle = spheres_by_vertex_splits(8);
    for n in 4..=8 {
        let census: Vec<Facets> = enumerate_closed_surfaces(n)
            .iter()
            .filter(|c| classify_surface(c).is_sphere())
            .map(|c| brute_canonical(&facets_of(c)))
            .collect();
        let mut sorted = census.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), census.len(), "duplicate spheres on {n} vertices");
        assert_eq!(sorted, oracle[&n], "spheres on {n} vertices");
    }
}

#[test]
fn closed_surface_counts() {
    // (n, type) -> count, for all closed surfaces up to 9 vertices
    let mut found: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for n in 4..=9 {
        for c in enumerate_closed_surfaces(n) {
            assert!(is_closed_surface(&facets_of(&c)));
            let kind = match classify_surface(&c) {
                SurfaceClass::Closed { genus, orientable: true } => format!("T{genus}"),
                SurfaceClass::Closed { genus, orientable: false } => format!("N{genus}"),
                other => panic!("{other:?}"),
            };
            *found.entry((n, kind)).or_default() += 1;
        }
    }
    let expected = [
        (4, "T0", 1),
        (5, "T0", 1),
        (6, "T0", 2),
        (6, "N1", 1),
        (7, "T0", 5),
        (7, "N1", 3),
        (7, "T1", 1),
        (8, "T0", 14),
        (8, "N1", 16),
        (8, "T1", 7),
        (8, "N2", 6),
        (9, "T0", 50),
        (9, "N1", 134),
        (9, "T1", 112),
        (9, "N2", 187),
        (9, "N3", 133),
        (9, "N4", 37),
        (9, "N5", 2),
    ];
    let expected: BTreeMap<(usize, String), usize> =
        expected.iter().map(|&(n, k, c)| ((n, k.to_string()), c)).collect();
    assert_eq!(found, expected);
}

#[test]
fn disk_census_matches_brute_force() {
    let levels = enumerate_disks(6);
    for n in 1..=6 {
        let census: Vec<Facets> = levels[n - 1].iter().map(|c| brute_canonical(&facets_of(c))).collect();
        let oracle: Vec<Facets> = brute_force_disks(n).into_iter().collect();
        let mut sorted = census.clone();
        sorted.sort();
        assert_eq!(sorted, oracle, "disks with {n} triangles");
    }
}

#[test]
fn canonical_labels_separate_census_surfaces() {
    let all: Vec<SimplicialComplex> = (4..=8).flat_map(enumerate_closed_surfaces).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (i, a) in all.iter().enumerate() {
        assert_eq!(canonical_label(a), canonical_label(&shuffled(&mut rng, a)));
        for b in &all[i + 1..] {
            assert_ne!(canonical_label(a), canonical_label(b));
        }
    }
}

#[test]
fn free_faces_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let c = random_complex(&mut rng, 3, 8, 6);
        let faces = closure(&facets_of(&c));
        // free: lies in exactly one other face, which is then a facet one dimension up
        let mut oracle: Vec<(Vec<u32>, Vec<u32>)> = faces
            .iter()
            .filter_map(|s| {
                let above: Vec<&Vec<u32>> =
                    faces.iter().filter(|g| g.len() > s.len() && s.iter().all(|v| g.contains(v))).collect();
                (above.len() == 1).then(|| (s.clone(), above[0].clone()))
            })
            .collect();
        oracle.sort();
        let mut lib: Vec<(Vec<u32>, Vec<u32>)> =
            free_faces(&c).iter().map(|p| (p.free.vertices().to_vec(), p.coface.vertices().to_vec())).collect();
        lib.sort();
        assert_eq!(lib, oracle);
        for p in free_faces(&c) {
            let after = elementary_collapse(&c, &p).unwrap();
            let mut expected = faces.clone();
            expected.remove(p.free.vertices());
            expected.remove(p.coface.vertices());
            assert_eq!(closure(&facets_of(&after)), expected);
        }
    }
}

#[test]
fn derived_neighborhood_of_a_vertex_is_a_disk() {
    let surfaces: Vec<SimplicialComplex> = (4..=7).flat_map(enumerate_closed_surfaces).collect();
    for c in &surfaces {
        let v = SimplicialComplex::new(vec![vec![c.vertices()[0]]]).unwrap();
        for k in 1..=2 {
            let n = derived_neighborhood(c, &v, k, 1_000_000).unwrap();
            // facets of sd^k C meeting sd^k D
            let sub: Vec<u32> = n.subdivided_sub.vertices().to_vec();
            let oracle: Facets = facets_of(&n.subdivided)
                .into_iter()
                .filter(|f| f.iter().any(|x| sub.contains(x)))
                .collect();
            assert_eq!(facets_of(&n.neighborhood), oracle);
            assert!(is_disk(&oracle));
        }
    }
}

#[test]
fn sd_of_sd_matches_face_poset_count() {
    // facets of sd^2 C: each facet F of sd C contributes (dim F + 1)!
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let c = random_complex(&mut rng, 3, 9, 8);
        let s1 = sd(&c).0;
        let s2 = sd(&s1).0;
        let expected: u128 = facets_of(&s1).iter().map(|f| factorial(f.len())).sum();
        assert_eq!(s2.n_facets() as u128, expected);
        assert_eq!(euler(&facets_of(&s2)), euler(&facets_of(&c)));
        assert!(iso(&s1, &shuffled(&mut rng, &s1)).is_some());
    }
}
