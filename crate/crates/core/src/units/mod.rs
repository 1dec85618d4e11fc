//! Unit groups, the Jacobson radical, and closed forms for unit groups.

mod formula;
mod radical;

pub use formula::{
    gl_order, rankprop_bound, truncated_poly_unit_census, un_formula, un_formula_oracle, wild_decomposition,
    wild_decomposition_as_displayed,
};
pub use radical::{
    has_trivial_radical, jacobson_radical, nilpotency_index, one_plus_j_is_normal, radical_by_ideal_criterion,
    radical_counting_check, RadicalReport,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{abelian_invariants, recognize_dihedral, AbelianInvariants, GroupTable};
use crate::ring::{FiniteRing, UnitTable, TABLE_LIMIT};

/// Largest unit group we turn into an explicit table.
pub const UNIT_TABLE_LIMIT: usize = 4096;

/// How a unit group was identified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    /// Dihedral of order `2n`. Abelian cases (`n <= 2`) also carry invariants.
    Dihedral {
        n: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        invariants: Option<AbelianInvariants>,
    },
    Abelian {
        invariants: AbelianInvariants,
    },
    Unclassified {
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
}

impl Structure {
    pub fn dihedral_n(&self) -> Option<usize> {
        match self {
            Structure::Dihedral { n, .. } => Some(*n),
            _ => None,
        }
    }

    pub fn invariants(&self) -> Option<&AbelianInvariants> {
        match self {
            Structure::Dihedral { invariants, .. } => invariants.as_ref(),
            Structure::Abelian { invariants } => Some(invariants),
            Structure::Unclassified { .. } => None,
        }
    }

    pub fn with_note(self, note: impl Into<String>) -> Self {
        match self {
            Structure::Unclassified { .. } => Structure::Unclassified { note: Some(note.into()) },
            other => other,
        }
    }
}

impl std::fmt::Display for Structure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Structure::Dihedral { n, .. } => write!(f, "D{}", 2 * n),
            Structure::Abelian { invariants } => write!(f, "abelian {invariants}"),
            Structure::Unclassified { note: Some(note) } => write!(f, "unclassified ({note})"),
            Structure::Unclassified { note: None } => write!(f, "unclassified"),
        }
    }
}

/// Dihedral first, then abelian, else unclassified.
pub fn classify(group: &GroupTable) -> Structure {
    let invariants = if group.is_abelian() { abelian_invariants(group).ok() } else { None };
    if let Some(n) = recognize_dihedral(group) {
        return Structure::Dihedral { n, invariants };
    }
    match invariants {
        Some(invariants) => Structure::Abelian { invariants },
        None => Structure::Unclassified { note: None },
    }
}

/// Classification of an abelian group known only through its invariants.
pub fn classify_abelian(invariants: AbelianInvariants) -> Structure {
    match invariants.factors() {
        [2] => Structure::Dihedral { n: 1, invariants: Some(invariants) },
        [2, 2] => Structure::Dihedral { n: 2, invariants: Some(invariants) },
        _ => Structure::Abelian { invariants },
    }
}

/// Unit test by bijectivity of `y -> x y`. Returns the right inverse, which is
/// two-sided since finite rings are Dedekind-finite.
pub fn left_mul_inverse(ring: &FiniteRing, x: usize, seen: &mut [u32], stamp: u32) -> Option<usize> {
    let mut inverse = None;
    for y in ring.elements() {
        let p = ring.mul(x, y);
        if seen[p] == stamp {
            return None;
        }
        seen[p] = stamp;
        if p == ring.one() {
            inverse = Some(y);
        }
    }
    inverse
}

/// Unit test through the power sequence `x, x^2, ...`: a unit returns to 1,
/// anything else falls into a cycle avoiding 1 (Brent's detection).
/// Returns `(order, inverse)` for units.
pub fn power_orbit(ring: &FiniteRing, x: usize) -> Option<(u64, usize)> {
    let one = ring.one();
    if x == one {
        return Some((1, one));
    }
    let mut prev = x;
    let mut hare = ring.mul(x, x);
    let mut k: u64 = 2;
    let mut tortoise = x;
    let mut power: u64 = 1;
    let mut lam: u64 = 1;
    loop {
        if hare == one {
            return Some((k, prev));
        }
        if hare == tortoise {
            return None;
        }
        if power == lam {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        prev = hare;
        hare = ring.mul(hare, x);
        k += 1;
        lam += 1;
    }
}

fn scan_units(ring: &FiniteRing) -> UnitTable {
    let n = ring.order();
    let mut inverse = vec![None; n];
    if n <= TABLE_LIMIT {
        ring.tabulate();
        let mut seen = vec![0u32; n];
        for x in ring.elements() {
            if inverse[x].is_some() {
                continue;
            }
            if let Some(y) = left_mul_inverse(ring, x, &mut seen, x as u32 + 1) {
                inverse[x] = Some(y);
                inverse[y] = Some(x);
            }
        }
    } else {
        for x in ring.elements() {
            if inverse[x].is_none() {
                if let Some((_, y)) = power_orbit(ring, x) {
                    inverse[x] = Some(y);
                    inverse[y] = Some(x);
                }
            }
        }
    }
    UnitTable::from_inverses(inverse)
}

pub(crate) fn unit_table(ring: &FiniteRing) -> &UnitTable {
    ring.unit_cache().get_or_init(|| scan_units(ring))
}

/// All two-sided units, ascending.
pub fn unit_set(ring: &FiniteRing) -> Vec<usize> {
    unit_table(ring).units.clone()
}

pub fn unit_count(ring: &FiniteRing) -> usize {
    unit_table(ring).units.len()
}

pub fn is_unit(ring: &FiniteRing, x: usize) -> bool {
    x < ring.order() && unit_table(ring).is_unit(x)
}

pub fn unit_inverse(ring: &FiniteRing, x: usize) -> Option<usize> {
    if x < ring.order() {
        unit_table(ring).inverse_of(x)
    } else {
        None
    }
}

/// Unit group of a finite ring as an explicit table.
#[derive(Debug, Clone)]
pub struct UnitGroupReport {
    pub ring: FiniteRing,
    pub unit_indices: Vec<usize>,
    pub group: GroupTable,
    pub structure: Structure,
}

pub fn unit_group(ring: &FiniteRing) -> Result<UnitGroupReport> {
    let units = unit_set(ring);
    let m = units.len();
    if m > UNIT_TABLE_LIMIT {
        return Err(Error::BudgetExceeded {
            requested: (m as u128) * (m as u128),
            budget: UNIT_TABLE_LIMIT * UNIT_TABLE_LIMIT,
        });
    }
    let group = ring_group_table(ring, &units)?.named(format!("{}^x", ring.tag()));
    let structure = classify(&group);
    Ok(UnitGroupReport { ring: ring.clone(), unit_indices: units, group, structure })
}

/// Group table on a set of ring elements closed under multiplication, with
/// element `i` of the table standing for `elems[i]`.
pub fn ring_group_table(ring: &FiniteRing, elems: &[usize]) -> Result<GroupTable> {
    let m = elems.len();
    let mut local = vec![u32::MAX; ring.order()];
    for (i, &u) in elems.iter().enumerate() {
        local[u] = i as u32;
    }
    let mut mul = Vec::with_capacity(m * m);
    for &a in elems {
        for &b in elems {
            let p = local[ring.mul(a, b)];
            if p == u32::MAX {
                return Err(Error::UnitGroupCheck(format!("{} * {} leaves the set", ring.label(a), ring.label(b))));
            }
            mul.push(p);
        }
    }
    let identity = local[ring.one()];
    if identity == u32::MAX {
        return Err(Error::UnitGroupCheck("set does not contain 1".into()));
    }
    let labels = elems.iter().map(|&u| ring.label(u)).collect();
    GroupTable::new(m, mul, identity as usize, Some(labels))
}

/// Multiplicative closure of `gens` together with 1, ascending.
pub fn multiplicative_closure(ring: &FiniteRing, gens: &[usize]) -> Vec<usize> {
    let mut member = vec![false; ring.order()];
    member[ring.one()] = true;
    let mut elems = vec![ring.one()];
    let mut frontier = vec![ring.one()];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = ring.mul(x, g);
            if !member[y] {
                member[y] = true;
                elems.push(y);
                frontier.push(y);
            }
        }
    }
    elems.sort_unstable();
    elems
}

/// Count of units of each multiplicative order.
pub fn unit_order_census(ring: &FiniteRing) -> BTreeMap<u64, u64> {
    let mut census = BTreeMap::new();
    for &u in &unit_table(ring).units {
        let (k, _) = power_orbit(ring, u).expect("unit has finite order");
        *census.entry(k).or_insert(0) += 1;
    }
    census
}

/// Structure of the unit group without requiring a table when the ring is
/// commutative (abelian invariants from the order census).
pub fn unit_structure(ring: &FiniteRing) -> Structure {
    if unit_count(ring) <= UNIT_TABLE_LIMIT {
        if let Ok(report) = unit_group(ring) {
            return report.structure;
        }
    }
    if ring.is_commutative() {
        if let Ok(inv) = AbelianInvariants::from_census(&unit_order_census(ring)) {
            return classify_abelian(inv);
        }
    }
    Structure::Unclassified { note: Some("unit group too large to tabulate".into()) }
}
