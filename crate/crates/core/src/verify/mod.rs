//! Scripted checks: the table of rings with dihedral unit groups, and the
//! desk checks of the facts the non-realizability arguments rely on.

mod props;
mod table;

pub use props::{
    check_center_and_normal_subgroups, check_characteristic_exclusion, check_characteristic_two_branches,
    check_f2_dihedral_algebras, check_gamma_sweep, check_gl_orders, check_indecomposability, check_one_plus_two_t,
    check_quaternions, check_radical_corpus, check_rank_bounds, check_un_formula, corpus, radical_corpus_timed,
    verify_props, PropOptions,
};
pub use table::{table_rows, verify_table, RowResult, TableRow};

use serde::Serialize;

use crate::dsl::{eval_ring_expr, parse_ring_expr};
use crate::error::{Error, Result};
use crate::ring::{Budget, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub description: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn new(id: &str, description: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self { id: id.into(), description: description.into(), pass, detail: detail.into() }
    }
}

/// Rings used by the radical and indecomposability suites.
pub const CORPUS: &[&str] = &[
    "GA(GF(2),D(2))",
    "GA(GF(2),D(2)) x GA(GF(2),D(2))",
    "M(2,GF(2))",
    "UT(3,GF(2))",
    "GA(GF(2),D(6))",
    "GF(3)",
    "GF(3) x GF(3)",
    "UT(2,GF(3))",
    "Z(4)",
    "Z(4) x Z(4)",
    "EndC4C2",
    "Z(4) x M(2,GF(2))",
    "GF(2) x GF(3)",
    "GF(2) x GF(3) x GF(3)",
    "GF(2) x UT(2,GF(3))",
    "Z(8)",
    "Z(12)",
    "GA(GF(2),D(4))",
    "GA(GF(2),D(12))",
    "PQ(Z(4),[1,0,0,0,1])",
    "PQ(GF(2),[0,0,1])",
    "PQ(GF(2),[0,0,0,1])",
    "PQ(GF(3),[0,0,1])",
    "PQ(GF(5),[0,0,0,1])",
    "PQ(GF(2),[0,0,0,0,0,0,1])",
    "M(2,Z(4))",
    "GA(Z(4),C(2))",
    "GF(4) x Z(9)",
];

pub fn build(expr: &str, budget: Budget) -> Result<FiniteRing> {
    let e = parse_ring_expr(expr).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    eval_ring_expr(&e, budget)?
        .ring()
        .cloned()
        .ok_or_else(|| Error::InvalidArgument(format!("{expr} is not a finite ring")))
}
