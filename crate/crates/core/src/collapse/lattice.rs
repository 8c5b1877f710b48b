//! Indexed face lattice and the mutable alive/free bookkeeping used by every search.

use std::collections::{BTreeSet, HashMap};

use crate::complex::{Face, SimplicialComplex};

/// All faces of a complex in lexicographic order, with codimension-one incidences.
#[derive(Debug)]
pub(crate) struct FaceLattice {
    pub faces: Vec<Face>,
    pub dim: Vec<u8>,
    pub up: Vec<Vec<u32>>,
    pub down: Vec<Vec<u32>>,
    pub by_dim: Vec<Vec<u32>>,
    index: HashMap<Face, u32>,
}

impl FaceLattice {
    pub fn new(c: &SimplicialComplex) -> Self {
        let mut faces: Vec<Face> = c.all_faces().cloned().collect();
        faces.sort_unstable();
        let index: HashMap<Face, u32> =
            faces.iter().enumerate().map(|(i, f)| (f.clone(), i as u32)).collect();
        let n = faces.len();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        let top = c.dim().map_or(0, |d| d + 1);
        let mut by_dim = vec![Vec::new(); top];
        let mut dim = Vec::with_capacity(n);
        for (i, f) in faces.iter().enumerate() {
            dim.push(f.dim() as u8);
            by_dim[f.dim()].push(i as u32);
            for r in f.boundary() {
                let j = index[&r];
                down[i].push(j);
                up[j as usize].push(i as u32);
            }
        }
        FaceLattice { faces, dim, up, down, by_dim, index }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn index_of(&self, f: &Face) -> Option<u32> {
        self.index.get(f).copied()
    }

    /// Mask of the faces of a subcomplex, whose facets must all be present.
    pub fn mask_of(&self, sub: &SimplicialComplex) -> Option<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for f in sub.facets() {
            let i = self.index_of(f)?;
            self.mark_closure(i, &mut mask);
        }
        Some(mask)
    }

    fn mark_closure(&self, i: u32, mask: &mut [bool]) {
        if mask[i as usize] {
            return;
        }
        mask[i as usize] = true;
        for &j in &self.down[i as usize] {
            self.mark_closure(j, mask);
        }
    }
}

/// Alive faces and live coface counts during a collapse.
#[derive(Clone)]
pub(crate) struct State<'a> {
    pub lat: &'a FaceLattice,
    pub alive: Vec<bool>,
    pub up_alive: Vec<u32>,
    pub protected: Vec<bool>,
    /// Alive, unprotected faces per dimension.
    pub open_by_dim: Vec<usize>,
}

impl<'a> State<'a> {
    pub fn new(lat: &'a FaceLattice, protected: Vec<bool>) -> Self {
        let up_alive = lat.up.iter().map(|u| u.len() as u32).collect();
        let mut open_by_dim = vec![0; lat.by_dim.len()];
        for (i, &d) in lat.dim.iter().enumerate() {
            if !protected[i] {
                open_by_dim[d as usize] += 1;
            }
        }
        State { lat, alive: vec![true; lat.len()], up_alive, protected, open_by_dim }
    }

    /// Removes a face with no alive cofaces.
    pub fn remove(&mut self, i: u32) {
        let i = i as usize;
        debug_assert!(self.alive[i] && self.up_alive[i] == 0);
        self.alive[i] = false;
        if !self.protected[i] {
            self.open_by_dim[self.lat.dim[i] as usize] -= 1;
        }
        for &j in &self.lat.down[i] {
            self.up_alive[j as usize] -= 1;
        }
    }

    pub fn restore(&mut self, i: u32) {
        let i = i as usize;
        debug_assert!(!self.alive[i]);
        self.alive[i] = true;
        if !self.protected[i] {
            self.open_by_dim[self.lat.dim[i] as usize] += 1;
        }
        for &j in &self.lat.down[i] {
            self.up_alive[j as usize] += 1;
        }
    }

    /// The unique alive coface of `i` if `i` is an unprotected free face.
    pub fn free_partner(&self, i: u32) -> Option<u32> {
        let iu = i as usize;
        if !self.alive[iu] || self.protected[iu] || self.up_alive[iu] != 1 {
            return None;
        }
        let c = *self.lat.up[iu].iter().find(|&&c| self.alive[c as usize])?;
        (self.up_alive[c as usize] == 0).then_some(c)
    }

    pub fn collapse(&mut self, sigma: u32, big: u32) {
        self.remove(big);
        self.remove(sigma);
    }

    pub fn uncollapse(&mut self, sigma: u32, big: u32) {
        self.restore(sigma);
        self.restore(big);
    }

    /// Highest dimension with an alive unprotected face.
    pub fn open_dim(&self) -> Option<usize> {
        self.open_by_dim.iter().rposition(|&n| n > 0)
    }

    pub fn key(&self) -> Vec<u64> {
        let mut words = vec![0u64; self.alive.len().div_ceil(64)];
        for (i, &a) in self.alive.iter().enumerate() {
            if a {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        words
    }

    /// Faces whose free status may change after `touched` lost alive cofaces or died.
    pub fn affected(&self, touched: &[u32]) -> Vec<u32> {
        let mut out: Vec<u32> = touched.to_vec();
        for &t in touched {
            for &j in &self.lat.down[t as usize] {
                out.push(j);
                out.extend_from_slice(&self.lat.down[j as usize]);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// The set of currently free faces, kept in sync with a [`State`].
pub(crate) struct FreeSet {
    items: Vec<u32>,
    pos: Vec<u32>,
    ordered: Option<BTreeSet<u32>>,
}

const ABSENT: u32 = u32::MAX;

impl FreeSet {
    pub fn new(state: &State<'_>, ordered: bool) -> Self {
        let mut s = FreeSet {
            items: Vec::new(),
            pos: vec![ABSENT; state.alive.len()],
            ordered: ordered.then(BTreeSet::new),
        };
        for i in 0..state.alive.len() as u32 {
            s.refresh(state, i);
        }
        s
    }

    pub fn refresh(&mut self, state: &State<'_>, i: u32) {
        let free = state.free_partner(i).is_some();
        let present = self.pos[i as usize] != ABSENT;
        if free && !present {
            self.pos[i as usize] = self.items.len() as u32;
            self.items.push(i);
            if let Some(o) = &mut self.ordered {
                o.insert(i);
            }
        } else if !free && present {
            let p = self.pos[i as usize] as usize;
            self.items.swap_remove(p);
            if p < self.items.len() {
                self.pos[self.items[p] as usize] = p as u32;
            }
            self.pos[i as usize] = ABSENT;
            if let Some(o) = &mut self.ordered {
                o.remove(&i);
            }
        }
    }

    pub fn refresh_all(&mut self, state: &State<'_>, faces: &[u32]) {
        for &f in faces {
            self.refresh(state, f);
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn nth(&self, k: usize) -> u32 {
        self.items[k]
    }

    pub fn first_ordered(&self) -> Option<u32> {
        self.ordered.as_ref().and_then(|o| o.first().copied())
    }
}
