//! Canonical labels, isomorphism, and small censuses of surfaces.

mod bounds;
mod canon;
mod enumerate;
mod iso;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use bounds::{
    check_bounds, check_family, convex_ball_bound_bits, endo_bound_bits, row_bound_bits, BoundCheck, BoundsReport,
};
pub use canon::{canonical_complex, canonical_form, canonical_label, CanonicalForm, CanonicalLabel};
pub use enumerate::{enumerate_closed_surfaces, enumerate_disks};
pub use iso::{determine_gluing, iso, GluingError, IsoCertificate};

use crate::collapse::{is_endo_collapsible, CollapseError, SearchStrategy, Verdict};
use crate::complex::SimplicialComplex;
use crate::par;
use crate::surface::{classify_surface, SurfaceClass};

/// Largest vertex count accepted by [`enumerate_surfaces`].
pub const MAX_CENSUS_VERTICES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census limited to {max} vertices, asked for {requested}")]
    TooLarge { requested: usize, max: usize },
    #[error(transparent)]
    Collapse(#[from] CollapseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowKind {
    Closed { orientable: bool, genus: u32 },
    Disk,
}

impl fmt::Display for RowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowKind::Closed { orientable: true, genus } => write!(f, "{genus}"),
            RowKind::Closed { orientable: false, genus } => write!(f, "N{genus}"),
            RowKind::Disk => write!(f, "disk"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub d: usize,
    pub n_vertices: usize,
    pub n_facets: usize,
    pub kind: RowKind,
    pub count: usize,
    /// Number of endo-collapsible types, where checked.
    pub endo: Option<usize>,
}

/// Counts of isomorphism types, one row per `(n_vertices, N, type)`, with
/// the complexes themselves in row order.
#[derive(Debug, Clone, Default)]
pub struct CensusTable {
    pub rows: Vec<CensusRow>,
    pub complexes: Vec<SimplicialComplex>,
}

/// Complexes with their endo flag, keyed by `(n_vertices, N, kind)`.
type Groups = BTreeMap<(usize, usize, RowKind), Vec<(SimplicialComplex, Option<bool>)>>;

impl CensusTable {
    /// Complexes whose row satisfies `pred`.
    pub fn complexes_where(&self, pred: impl Fn(&CensusRow) -> bool) -> Vec<&SimplicialComplex> {
        let mut out = Vec::new();
        let mut offset = 0;
        for r in &self.rows {
            if pred(r) {
                out.extend(&self.complexes[offset..offset + r.count]);
            }
            offset += r.count;
        }
        out
    }

    /// Total sphere count per vertex number.
    pub fn spheres_by_vertices(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for r in &self.rows {
            if r.kind == (RowKind::Closed { orientable: true, genus: 0 }) {
                *m.entry(r.n_vertices).or_insert(0) += r.count;
            }
        }
        m
    }

    fn from_groups(groups: Groups) -> Self {
        let mut table = CensusTable::default();
        for ((n_vertices, n_facets, kind), items) in groups {
            let endo = if items.iter().all(|(_, e)| e.is_some()) {
                Some(items.iter().filter(|(_, e)| *e == Some(true)).count())
            } else {
                None
            };
            table.rows.push(CensusRow { d: 2, n_vertices, n_facets, kind, count: items.len(), endo });
            table.complexes.extend(items.into_iter().map(|(c, _)| c));
        }
        table
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "d\tn_vertices\tN_facets\tgenus\tcount\tbound\tslack\tendo")?;
        for r in &self.rows {
            let check = BoundCheck::new("", r.count as u128, row_bound_bits(r));
            let endo = r.endo.map_or_else(|| "-".to_string(), |e| e.to_string());
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t2^{}\t{:.2}\t{}",
                r.d, r.n_vertices, r.n_facets, r.kind, r.count, check.bound_bits, check.slack_bits, endo
            )?;
        }
        Ok(())
    }
}

fn endo_flag(c: &SimplicialComplex, strategy: Option<&SearchStrategy>) -> Result<Option<bool>, CollapseError> {
    match strategy {
        None => Ok(None),
        Some(s) => Ok(match is_endo_collapsible(c, None, s)? {
            Verdict::Yes(_) => Some(true),
            Verdict::No => Some(false),
            Verdict::Unknown(_) => None,
        }),
    }
}

/// Closed surfaces with `4..=n_vertices_max` vertices, split by genus.
///
/// With a strategy, spheres are tested for endo-collapsibility; other
/// closed surfaces never are (a closed endo-collapsible surface is a sphere)
/// and get no flag.
pub fn enumerate_surfaces(
    n_vertices_max: usize,
    endo: Option<&SearchStrategy>,
) -> Result<CensusTable, CensusError> {
    if n_vertices_max > MAX_CENSUS_VERTICES {
        return Err(CensusError::TooLarge { requested: n_vertices_max, max: MAX_CENSUS_VERTICES });
    }
    let mut groups = Groups::new();
    for n in 4..=n_vertices_max {
        let found = enumerate_closed_surfaces(n);
        let flagged = par::map(&found, |c| -> Result<_, CollapseError> {
            let class = classify_surface(c);
            let SurfaceClass::Closed { genus, orientable } = class else {
                unreachable!("census produced a non-surface")
            };
            let flag = if class.is_sphere() { endo_flag(c, endo)? } else { None };
            Ok((RowKind::Closed { orientable, genus }, flag))
        });
        for (c, r) in found.into_iter().zip(flagged) {
            let (kind, flag) = r?;
            groups.entry((n, c.n_facets(), kind)).or_default().push((c, flag));
        }
    }
    Ok(CensusTable::from_groups(groups))
}

/// Disks with up to `max_triangles` triangles, one row per `(n_vertices, N)`.
pub fn disk_census(max_triangles: usize, endo: Option<&SearchStrategy>) -> Result<CensusTable, CensusError> {
    let mut groups = Groups::new();
    for level in enumerate_disks(max_triangles) {
        let flags = par::map(&level, |c| endo_flag(c, endo));
        for (c, flag) in level.into_iter().zip(flags) {
            groups.entry((c.n_vertices(), c.n_facets(), RowKind::Disk)).or_default().push((c, flag?));
        }
    }
    Ok(CensusTable::from_groups(groups))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_groups_and_prints() {
        let t = enumerate_surfaces(6, Some(&SearchStrategy::default())).unwrap();
        assert_eq!(t.spheres_by_vertices(), BTreeMap::from([(4, 1), (5, 1), (6, 2)]));
        assert_eq!(t.complexes.len(), t.rows.iter().map(|r| r.count).sum::<usize>());
        let text = t.to_string();
        assert!(text.starts_with("d\tn_vertices\tN_facets\tgenus"));
        assert!(text.contains("2\t6\t10\tN1\t1\t2^40\t40.00\t-"));
        assert!(check_bounds(&t).passed());
        assert!(matches!(enumerate_surfaces(11, None), Err(CensusError::TooLarge { .. })));
    }
}
