//! Counts of distinct complexes produced by the three families.

use std::collections::BTreeSet;
use std::fmt;

use super::polygon::{catalan, dyck_words};
use super::torus::{torus_catalan, TorusOutcome};
use super::{genus_surface_appendix, genus_surface_fig3, Permutation};
use crate::census::{canonical_label, endo_bound_bits};
use crate::complex::SimplicialComplex;
use crate::par;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundRow {
    pub family: &'static str,
    /// `g` for the surface families, `r` for the torus family.
    pub parameter: usize,
    pub n_facets: usize,
    /// Inputs tried: permutations or diagonal patterns.
    pub generated: u128,
    /// Inputs giving a simplicial complex.
    pub accepted: usize,
    /// Pairwise non-isomorphic complexes among the accepted ones.
    pub distinct: usize,
    /// Exponent of the `2^{4N}` bound.
    pub bound_bits: u128,
}

impl fmt::Display for LowerBoundRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t2^{}",
            self.family, self.parameter, self.n_facets, self.generated, self.accepted, self.distinct, self.bound_bits
        )
    }
}

fn distinct(cs: &[SimplicialComplex]) -> usize {
    par::map(cs, canonical_label).into_iter().collect::<BTreeSet<_>>().len()
}

fn surface_row(
    family: &'static str,
    g: usize,
    build: fn(&Permutation) -> (SimplicialComplex, super::ConstructionReport),
) -> LowerBoundRow {
    let perms = Permutation::all(g);
    let cs: Vec<SimplicialComplex> = par::map(&perms, |p| build(p).0);
    let n_facets = cs[0].n_facets();
    LowerBoundRow {
        family,
        parameter: g,
        n_facets,
        generated: perms.len() as u128,
        accepted: cs.len(),
        distinct: distinct(&cs),
        bound_bits: endo_bound_bits(2, n_facets),
    }
}

fn torus_row(r: usize) -> LowerBoundRow {
    let words = dyck_words(2 * r);
    let accepted: Vec<SimplicialComplex> = par::map(&words, |w| match torus_catalan(r, w) {
        Ok(TorusOutcome::Accepted(c, _)) => Some(c),
        _ => None,
    })
    .into_iter()
    .flatten()
    .collect();
    LowerBoundRow {
        family: "torus",
        parameter: r,
        n_facets: 2 * r,
        generated: catalan(2 * r),
        accepted: accepted.len(),
        distinct: distinct(&accepted),
        bound_bits: endo_bound_bits(2, 2 * r),
    }
}

/// Rows for Fig-3 surfaces and `M_g(π)` with `g ≤ max_g`, and tori with `r ≤ max_r`.
pub fn lower_bound_table(max_g: usize, max_r: usize) -> Vec<LowerBoundRow> {
    let mut rows: Vec<LowerBoundRow> = (1..=max_g).map(|g| surface_row("fig3", g, genus_surface_fig3)).collect();
    rows.extend((1..=max_g).map(|g| surface_row("appendix", g, genus_surface_appendix)));
    rows.extend((1..=max_r).map(torus_row));
    rows
}
