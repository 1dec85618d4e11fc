use serde::Serialize;

use super::build;
use crate::gamma::gamma_unit_group;
use crate::group::GroupTable;
use crate::ring::Budget;
use crate::units::{classify, unit_group, Structure};

/// One line of the table: characteristic, dihedral group order, ring.
#[derive(Debug, Clone, Copy)]
pub struct TableRow {
    pub characteristic: usize,
    pub dihedral_order: usize,
    pub ring: &'static str,
    pub display: &'static str,
}

const fn row(characteristic: usize, dihedral_order: usize, ring: &'static str, display: &'static str) -> TableRow {
    TableRow { characteristic, dihedral_order, ring, display }
}

pub fn table_rows() -> Vec<TableRow> {
    vec![
        row(2, 2, "GA(GF(2),D(2))", "F2[D2]"),
        row(2, 4, "GA(GF(2),D(2)) x GA(GF(2),D(2))", "F2[D2] x F2[D2]"),
        row(2, 6, "M(2,GF(2))", "M2(F2)"),
        row(2, 8, "UT(3,GF(2))", "U3(F2)"),
        row(2, 12, "GA(GF(2),D(6))", "F2[D6]"),
        row(3, 2, "GF(3)", "F3"),
        row(3, 4, "GF(3) x GF(3)", "F3 x F3"),
        row(3, 12, "UT(2,GF(3))", "U2(F3)"),
        row(4, 2, "Z(4)", "Z4"),
        row(4, 4, "Z(4) x Z(4)", "Z4 x Z4"),
        row(4, 8, "EndC4C2", "End(C4 x C2)"),
        row(4, 12, "Z(4) x M(2,GF(2))", "Z4 x M2(F2)"),
        row(6, 2, "GF(2) x GF(3)", "F2 x F3"),
        row(6, 4, "GF(2) x GF(3) x GF(3)", "F2 x F3 x F3"),
        row(6, 12, "GF(2) x UT(2,GF(3))", "F2 x U2(F3)"),
        row(8, 4, "Z(8)", "Z8"),
        row(12, 4, "Z(12)", "Z12"),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct RowResult {
    pub characteristic: usize,
    pub group: String,
    pub ring: String,
    pub found_characteristic: usize,
    pub found: String,
    pub pass: bool,
}

fn matches_dihedral(s: &Structure, n: usize) -> bool {
    s.dihedral_n() == Some(n)
}

/// The units `{1, -1}` of the integers.
fn integer_units() -> GroupTable {
    // index 0 is 1, index 1 is -1
    GroupTable::from_fn(2, 0, Some(vec!["1".into(), "-1".into()]), |a, b| a ^ b).expect("C2")
}

/// All 19 rows: 17 finite rings, the integers, and `Gamma_k` for k = 1, 3, 5, 7.
pub fn verify_table(budget: Budget) -> Vec<RowResult> {
    let mut out = Vec::new();
    let z = classify(&integer_units());
    out.push(RowResult {
        characteristic: 0,
        group: "D2".into(),
        ring: "Z".into(),
        found_characteristic: 0,
        pass: matches_dihedral(&z, 1),
        found: z.to_string(),
    });
    let ks = [1u64, 3, 5, 7];
    let mut found = Vec::new();
    let mut pass = true;
    for &k in &ks {
        match gamma_unit_group(k, budget) {
            Ok(g) => {
                let ok = g.relations_hold && matches_dihedral(&g.structure, 2 * k as usize);
                pass &= ok;
                found.push(format!("k={k}: {}", g.structure));
            }
            Err(e) => {
                pass = false;
                found.push(format!("k={k}: error {e}"));
            }
        }
    }
    out.push(RowResult {
        characteristic: 0,
        group: "D4k, k odd".into(),
        ring: "Gamma(k), k in {1,3,5,7}".into(),
        found_characteristic: 0,
        found: found.join(", "),
        pass,
    });
    for r in table_rows() {
        let n = r.dihedral_order / 2;
        let res = build(r.ring, budget).and_then(|ring| Ok((ring.characteristic(), unit_group(&ring)?.structure)));
        out.push(match res {
            Ok((c, s)) => RowResult {
                characteristic: r.characteristic,
                group: format!("D{}", r.dihedral_order),
                ring: r.display.into(),
                found_characteristic: c,
                pass: c == r.characteristic && matches_dihedral(&s, n),
                found: s.to_string(),
            },
            Err(e) => RowResult {
                characteristic: r.characteristic,
                group: format!("D{}", r.dihedral_order),
                ring: r.display.into(),
                found_characteristic: 0,
                pass: false,
                found: format!("error: {e}"),
            },
        });
    }
    out
}
