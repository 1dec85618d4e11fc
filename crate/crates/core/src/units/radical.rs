use super::{is_unit, unit_count, unit_set, unit_table};
use crate::error::Result;
use crate::ring::{extend_ideal, ideal_closure, ideal_product, make_quotient, FiniteRing, IdealSpan};

/// The Jacobson radical with the unit counting data of `R -> R/J`.
#[derive(Debug, Clone)]
pub struct RadicalReport {
    pub radical: IdealSpan,
    pub one_plus_j_order: usize,
    pub quotient: FiniteRing,
    pub quotient_units_order: usize,
}

impl RadicalReport {
    pub fn j_order(&self) -> usize {
        self.radical.len()
    }

    pub fn counting_identity_holds(&self) -> bool {
        unit_count(self.radical.parent()) == self.quotient_units_order * self.radical.len()
    }
}

// Visit r = 1, -1, then the rest in a stride order that is coprime to |R|,
// so a failing r is usually found early.
fn probe_order(ring: &FiniteRing) -> Vec<usize> {
    let n = ring.order();
    let mut stride = (n as f64 * 0.618_033_988_7) as usize | 1;
    while num_integer::gcd(stride, n) != 1 {
        stride += 2;
    }
    let mut order = vec![ring.one(), ring.neg(ring.one())];
    order.extend((0..n).map(|k| (k * stride) % n));
    order
}

fn in_radical(ring: &FiniteRing, x: usize, probes: &[usize]) -> bool {
    let one = ring.one();
    let units = unit_table(ring);
    probes.iter().all(|&r| units.is_unit(ring.sub(one, ring.mul(r, x))))
}

/// `J = {x : 1 - r x is a unit for every r}`.
///
/// Every confirmed element is folded into the running ideal, so only one
/// full scan is needed per generator of `J`.
pub fn jacobson_radical(ring: &FiniteRing) -> Result<RadicalReport> {
    ring.tabulate();
    let probes = probe_order(ring);
    let mut radical = ideal_closure(ring, &[]);
    for x in ring.elements() {
        if radical.contains(x) || is_unit(ring, x) {
            continue;
        }
        if in_radical(ring, x, &probes) {
            radical = extend_ideal(&radical, &[x]);
        }
    }
    let quotient = make_quotient(ring, &radical)?;
    let quotient_units_order = unit_count(&quotient);
    Ok(RadicalReport { one_plus_j_order: radical.len(), radical, quotient, quotient_units_order })
}

/// `{x : 1 + I(x) consists of units}` where `I(x)` is the two-sided ideal
/// generated by `x`. Cubic cost; a cross-check for small rings.
pub fn radical_by_ideal_criterion(ring: &FiniteRing) -> Vec<usize> {
    let one = ring.one();
    ring.elements()
        .filter(|&x| ideal_closure(ring, &[x]).elements().iter().all(|&y| is_unit(ring, ring.add(one, y))))
        .collect()
}

pub fn has_trivial_radical(ring: &FiniteRing) -> Result<bool> {
    Ok(jacobson_radical(ring)?.radical.is_zero())
}

/// Checks `|R^x| = |(R/J)^x| |J|`, that units of `R/J` lift to units of `R`,
/// and that the units mapping to 1 are exactly `1 + J`.
pub fn radical_counting_check(ring: &FiniteRing) -> Result<bool> {
    let report = jacobson_radical(ring)?;
    let q = &report.quotient;
    let one = ring.one();
    let mut hit = vec![false; q.order()];
    let mut kernel = 0usize;
    for u in unit_set(ring) {
        let c = q.project(u).expect("quotient of ring");
        hit[c] = true;
        if c == q.one() {
            if !report.radical.contains(ring.sub(u, one)) {
                return Ok(false);
            }
            kernel += 1;
        }
    }
    let surjective = unit_set(q).iter().all(|&c| hit[c]);
    Ok(report.counting_identity_holds() && surjective && kernel == report.radical.len())
}

/// Whether `1 + J` is a normal subgroup of `R^x`. Costs `|R^x| |J|` products.
pub fn one_plus_j_is_normal(report: &RadicalReport) -> bool {
    let ring = report.radical.parent();
    let one = ring.one();
    let shifted: Vec<usize> = report.radical.elements().iter().map(|&j| ring.add(one, j)).collect();
    if !shifted.iter().all(|&u| is_unit(ring, u)) {
        return false;
    }
    let table = unit_table(ring);
    table.units.iter().all(|&u| {
        let ui = table.inverse_of(u).expect("unit");
        shifted.iter().all(|&v| report.radical.contains(ring.sub(ring.mul(ring.mul(u, v), ui), one)))
    })
}

/// Least `k` with `I^k = 0`, if any.
pub fn nilpotency_index(ideal: &IdealSpan) -> Option<u32> {
    let mut acc = ideal.clone();
    let mut k = 1;
    loop {
        if acc.is_zero() {
            return Some(k);
        }
        let next = ideal_product(&acc, ideal);
        if next.len() == acc.len() {
            return None;
        }
        acc = next;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::make_dihedral;
    use crate::ring::{
        make_gf, make_group_algebra, make_matrix_ring, make_poly_quotient, make_product, make_zn, Budget, MatrixShape,
    };

    fn f2() -> FiniteRing {
        make_gf(2, 1).unwrap()
    }

    #[test]
    fn radical_of_small_rings() {
        let z4 = jacobson_radical(&make_zn(4)).unwrap();
        assert_eq!(z4.radical.elements(), &[0, 2]);
        assert_eq!(z4.quotient.order(), 2);
        let dual = make_poly_quotient(&f2(), &[0, 0, 1], Budget::default()).unwrap();
        let x = dual.poly_generator().unwrap();
        assert_eq!(jacobson_radical(&dual).unwrap().radical.elements(), &[0, x]);
        let m2 = make_matrix_ring(2, &f2(), MatrixShape::Full, Budget::default()).unwrap();
        assert!(has_trivial_radical(&m2).unwrap());
        let f3f3 = make_product(&make_gf(3, 1).unwrap(), &make_gf(3, 1).unwrap(), Budget::default()).unwrap();
        assert!(has_trivial_radical(&f3f3).unwrap());
        let d2 = make_group_algebra(&f2(), &make_dihedral(2).unwrap(), Budget::default()).unwrap();
        assert!(!has_trivial_radical(&d2).unwrap());
        // 1 + s is index 1 + 2 = 3
        assert_eq!(jacobson_radical(&d2).unwrap().radical.elements(), &[0, 3]);
    }

    #[test]
    fn counting_identity_on_group_algebras() {
        let d4 = make_group_algebra(&f2(), &make_dihedral(4).unwrap(), Budget::default()).unwrap();
        let rep = jacobson_radical(&d4).unwrap();
        assert_eq!((rep.j_order(), rep.quotient_units_order), (8, 1));
        assert!(radical_counting_check(&d4).unwrap());
        let d6 = make_group_algebra(&f2(), &make_dihedral(6).unwrap(), Budget::default()).unwrap();
        let rep = jacobson_radical(&d6).unwrap();
        assert_eq!((rep.j_order(), rep.quotient_units_order), (2, 6));
        assert!(radical_counting_check(&d6).unwrap());
        assert!(one_plus_j_is_normal(&rep));
        assert_eq!(nilpotency_index(&rep.radical), Some(2));
    }

    #[test]
    fn agrees_with_ideal_criterion() {
        let rings = vec![
            make_zn(72),
            make_group_algebra(&f2(), &make_dihedral(8).unwrap(), Budget::default()).unwrap(),
            make_matrix_ring(2, &make_zn(4), MatrixShape::UpperTriangular, Budget::default()).unwrap(),
            make_poly_quotient(&make_zn(4), &[1, 0, 0, 0, 1], Budget::default()).unwrap(),
        ];
        for r in rings {
            let rep = jacobson_radical(&r).unwrap();
            assert_eq!(rep.radical.elements(), radical_by_ideal_criterion(&r).as_slice(), "{}", r.tag());
            assert!(nilpotency_index(&rep.radical).is_some());
            assert!(radical_counting_check(&r).unwrap());
        }
    }

    #[test]
    fn trivial_ring() {
        let r = make_zn(1);
        let rep = jacobson_radical(&r).unwrap();
        assert_eq!(rep.j_order(), 1);
        assert_eq!(rep.quotient_units_order, 1);
    }
}
