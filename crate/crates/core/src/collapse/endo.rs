//! Endo-collapsibility and the subdivided-link check.

use std::sync::Mutex;

use super::lattice::FaceLattice;
use super::{is_collapsible, run, CollapseError, CollapseSequence, SearchStrategy, Verdict};
use crate::complex::{Face, SimplicialComplex};
use crate::par;
use crate::subdivision::sd;

/// Decides whether `c` minus the interior of a facet collapses onto `∂c`
/// (onto a vertex when `∂c` is empty).
///
/// With `sigma = None` every facet is tried in order and the first success
/// is returned. A point counts as a 0-ball (removing it leaves nothing to
/// collapse) and two points as a 0-sphere; the empty complex is trivially
/// endo-collapsible.
pub fn is_endo_collapsible(
    c: &SimplicialComplex,
    sigma: Option<&Face>,
    strategy: &SearchStrategy,
) -> Result<Verdict, CollapseError> {
    if c.is_empty() {
        return Ok(Verdict::Yes(CollapseSequence { removed: None, pairs: Vec::new(), terminal: Vec::new() }));
    }
    if !c.is_pseudo_manifold() || (c.dim() == Some(0) && c.n_vertices() > 2) {
        return Err(CollapseError::NotPseudoManifold);
    }
    if let Some(s) = sigma {
        if !c.facets().contains(s) {
            return Err(CollapseError::NotAFacet(s.clone()));
        }
    }
    let lat = FaceLattice::new(c);
    let boundary = c.boundary()?;

    let attempt = |facet: &Face| -> Verdict {
        let protected = if !boundary.is_empty() {
            lat.mask_of(&boundary).expect("boundary is a subcomplex")
        } else if c.n_vertices() == 1 {
            vec![false; lat.len()]
        } else {
            let v = *c.vertices().iter().find(|&&v| Face::vertex(v) != *facet).expect("two vertices");
            let mut m = vec![false; lat.len()];
            m[lat.index_of(&Face::vertex(v)).unwrap() as usize] = true;
            m
        };
        run(&lat, protected, lat.index_of(facet), strategy)
    };

    match sigma {
        Some(s) => Ok(attempt(s)),
        None => {
            let unknown = Mutex::new(None);
            let yes = par::find_map_first(c.facets(), |f| match attempt(f) {
                Verdict::Yes(seq) => Some(seq),
                Verdict::Unknown(why) => {
                    unknown.lock().unwrap().get_or_insert(why);
                    None
                }
                Verdict::No => None,
            });
            Ok(match (yes, unknown.into_inner().unwrap()) {
                (Some(seq), _) => Verdict::Yes(seq),
                (None, Some(why)) => Verdict::Unknown(why),
                (None, None) => Verdict::No,
            })
        }
    }
}

/// Result of checking one face of `B`.
#[derive(Debug, Clone)]
pub struct LinkCheck {
    pub face: Face,
    /// `None` when the subdivided link is not a pseudo-manifold.
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone)]
pub struct LinkCheckReport {
    /// Collapsibility of `B` itself.
    pub collapsible: Verdict,
    /// Endo-collapsibility of `sd(lk(σ, B))` for every face `σ`.
    pub links: Vec<LinkCheck>,
    /// Endo-collapsibility of `sd B`, decided directly.
    pub subdivision: Verdict,
}

impl LinkCheckReport {
    pub fn all_links_endo(&self) -> bool {
        self.links.iter().all(|l| l.verdict.as_ref().is_some_and(Verdict::is_yes))
    }

    /// Positive hypotheses never come with a negative conclusion.
    ///
    /// An `Unknown` conclusion is not counted as a contradiction.
    pub fn consistent(&self) -> bool {
        !(self.collapsible.is_yes() && self.all_links_endo() && self.subdivision == Verdict::No)
    }
}

/// Checks, for a complex `B`, whether `B` is collapsible, whether every
/// subdivided link is endo-collapsible, and whether `sd B` is endo-collapsible.
pub fn check_subdivided_links(
    b: &SimplicialComplex,
    strategy: &SearchStrategy,
) -> Result<LinkCheckReport, CollapseError> {
    let collapsible = is_collapsible(b, strategy);
    let faces: Vec<Face> = b.all_faces().cloned().collect();
    let links = par::map(&faces, |f| {
        let link = b.link(f.vertices()).expect("face of b");
        let verdict = is_endo_collapsible(&sd(&link).0, None, strategy).ok();
        LinkCheck { face: f.clone(), verdict }
    });
    let (sdb, _) = sd(b);
    let subdivision = is_endo_collapsible(&sdb, None, strategy)?;
    Ok(LinkCheckReport { collapsible, links, subdivision })
}
