//! Replays collapse certificates on a plain face set.
//!
//! Deliberately naive: faces live in a `BTreeSet` and freeness is checked by
//! scanning for supersets, so nothing here depends on the search machinery.

use std::collections::BTreeSet;

use thiserror::Error;

use super::CollapseSequence;
use crate::complex::{Face, SimplicialComplex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("removed face {0} is not a facet")]
    RemovedNotFacet(Face),
    #[error("step {step}: {face} is not present")]
    Missing { step: usize, face: Face },
    #[error("step {step}: {free} is not a codimension-one face of {coface}")]
    NotACoface { step: usize, free: Face, coface: Face },
    #[error("step {step}: {free} has {cofaces} proper cofaces, expected exactly one")]
    NotFree { step: usize, free: Face, cofaces: usize },
    #[error("replay ends at a complex different from the recorded terminal complex")]
    TerminalMismatch,
    #[error("certificate does not support the claim: {0}")]
    WrongClaim(&'static str),
}

/// What a certificate is meant to show about its complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// Collapses onto a single vertex.
    Collapsible,
    /// Minus one facet, collapses onto its boundary (or a vertex if closed).
    EndoCollapsible,
    /// Collapses onto this subcomplex.
    CollapsesOnto(SimplicialComplex),
}

fn all_subsets(facets: &[Face]) -> BTreeSet<Vec<VertexId>> {
    let mut out = BTreeSet::new();
    for f in facets {
        let v = f.vertices();
        for mask in 1u64..(1u64 << v.len()) {
            out.insert((0..v.len()).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect());
        }
    }
    out
}

fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|x| b.contains(x))
}

/// Replays `seq` on `c` and checks that it supports `claim`.
pub fn verify_certificate(
    c: &SimplicialComplex,
    seq: &CollapseSequence,
    claim: &Claim,
) -> Result<(), CertificateError> {
    let mut faces = all_subsets(c.facets());
    if let Some(r) = &seq.removed {
        let rv = r.vertices().to_vec();
        let is_facet = faces.contains(&rv)
            && !faces.iter().any(|f| f.len() > rv.len() && is_subset(&rv, f));
        if !is_facet {
            return Err(CertificateError::RemovedNotFacet(r.clone()));
        }
        faces.remove(&rv);
    }
    for (step, pair) in seq.pairs.iter().enumerate() {
        let s = pair.free.vertices().to_vec();
        let b = pair.coface.vertices().to_vec();
        for (f, v) in [(&pair.free, &s), (&pair.coface, &b)] {
            if !faces.contains(v) {
                return Err(CertificateError::Missing { step, face: f.clone() });
            }
        }
        if b.len() != s.len() + 1 || !is_subset(&s, &b) {
            return Err(CertificateError::NotACoface {
                step,
                free: pair.free.clone(),
                coface: pair.coface.clone(),
            });
        }
        let cofaces = faces.iter().filter(|f| f.len() > s.len() && is_subset(&s, f)).count();
        if cofaces != 1 {
            return Err(CertificateError::NotFree { step, free: pair.free.clone(), cofaces });
        }
        faces.remove(&s);
        faces.remove(&b);
    }
    if faces != all_subsets(&seq.terminal) {
        return Err(CertificateError::TerminalMismatch);
    }

    let terminal = SimplicialComplex::from_facets(seq.terminal.iter().cloned());
    match claim {
        Claim::Collapsible => {
            if seq.removed.is_some() {
                return Err(CertificateError::WrongClaim("a facet was removed"));
            }
            if terminal.n_vertices() != 1 || terminal.dim() != Some(0) {
                return Err(CertificateError::WrongClaim("terminal complex is not a point"));
            }
        }
        Claim::EndoCollapsible => {
            if c.is_empty() {
                return Ok(());
            }
            if seq.removed.is_none() {
                return Err(CertificateError::WrongClaim("no facet was removed"));
            }
            let bd = c.boundary().map_err(|_| CertificateError::WrongClaim("complex is not pure"))?;
            let ok = if !bd.is_empty() {
                terminal == bd
            } else if c.dim() == Some(0) && c.n_vertices() == 1 {
                // a point is a 0-ball with empty boundary
                terminal.is_empty()
            } else {
                terminal.n_vertices() == 1 && terminal.dim() == Some(0)
            };
            if !ok {
                return Err(CertificateError::WrongClaim("terminal complex is not the boundary or a point"));
            }
        }
        Claim::CollapsesOnto(t) => {
            if seq.removed.is_some() {
                return Err(CertificateError::WrongClaim("a facet was removed"));
            }
            if &terminal != t {
                return Err(CertificateError::WrongClaim("terminal complex differs from target"));
            }
        }
    }
    Ok(())
}
