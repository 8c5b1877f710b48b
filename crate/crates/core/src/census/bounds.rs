//! Counting bounds for endo-collapsible triangulations.

use std::fmt;

use super::{CensusRow, CensusTable, RowKind};

/// Exponent of the bound on endo-collapsible `d`-manifolds with `n` facets: `d² n`.
pub fn endo_bound_bits(d: usize, n_facets: usize) -> u128 {
    (d * d) as u128 * n_facets as u128
}

/// Exponent of the bound on geometric triangulations of convex `d`-balls
/// with `n` facets: `d² (d+1)! n`, from subdividing once before counting.
pub fn convex_ball_bound_bits(d: usize, n_facets: usize) -> u128 {
    let fact: u128 = (1..=(d as u128 + 1)).product();
    endo_bound_bits(d, n_facets) * fact
}

/// One observed count measured against a bound `2^bits`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub label: String,
    pub count: u128,
    pub bound_bits: u128,
    /// `bound_bits - log2(count)`; negative means violated.
    pub slack_bits: f64,
}

impl BoundCheck {
    pub fn new(label: impl Into<String>, count: u128, bound_bits: u128) -> Self {
        let log = if count == 0 { 0.0 } else { (count as f64).log2() };
        BoundCheck { label: label.into(), count, bound_bits, slack_bits: bound_bits as f64 - log }
    }

    pub fn passed(&self) -> bool {
        // exact when the bound fits; any count we can hold is below 2^128
        self.bound_bits >= 128 || self.count <= 1u128 << self.bound_bits
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(BoundCheck::passed)
    }
}

impl fmt::Display for BoundsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{}\t{}\t2^{}\t{:.2}\t{}",
                c.label,
                c.count,
                c.bound_bits,
                c.slack_bits,
                if c.passed() { "pass" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// The bound that applies to a census row: `2^{d²N}` for closed surfaces,
/// `2^{d²(d+1)!N}` for disks.
pub fn row_bound_bits(row: &CensusRow) -> u128 {
    match row.kind {
        RowKind::Closed { .. } => endo_bound_bits(row.d, row.n_facets),
        RowKind::Disk => convex_ball_bound_bits(row.d, row.n_facets),
    }
}

/// Checks every row of the table against its bound.
///
/// The bound for closed surfaces only concerns endo-collapsible ones, so
/// rows are compared through their total count, which dominates it.
pub fn check_bounds(table: &CensusTable) -> BoundsReport {
    let checks = table
        .rows
        .iter()
        .map(|r| {
            let label = format!("d={} n={} N={} {}", r.d, r.n_vertices, r.n_facets, r.kind);
            BoundCheck::new(label, r.count as u128, row_bound_bits(r))
        })
        .collect();
    BoundsReport { checks }
}

/// Checks a family of `count` distinct `d`-dimensional triangulations with `n_facets` facets.
pub fn check_family(label: &str, d: usize, n_facets: usize, count: u128) -> BoundCheck {
    BoundCheck::new(label, count, endo_bound_bits(d, n_facets))
}
