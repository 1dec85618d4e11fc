use super::{Elem, Gen, GroupExpr, RingExpr};
use crate::error::{Error, Result};
use crate::group::{make_cyclic, make_dihedral};
use crate::numtheory::prime_power;
use crate::ring::{
    ideal_closure, make_end_c4c2, make_gf, make_group_algebra, make_matrix_ring, make_poly_quotient, make_product,
    make_quotient, make_zn, Budget, FiniteRing, MatrixShape,
};

/// Result of evaluating an expression. `Gamma(k)` is infinite and only its
/// unit group is available.
#[derive(Debug, Clone)]
pub enum Evaluated {
    Ring(FiniteRing),
    Gamma(u64),
}

impl Evaluated {
    pub fn ring(&self) -> Option<&FiniteRing> {
        match self {
            Evaluated::Ring(r) => Some(r),
            Evaluated::Gamma(_) => None,
        }
    }
}

pub fn eval_ring_expr(expr: &RingExpr, budget: Budget) -> Result<Evaluated> {
    match expr {
        RingExpr::Gamma(k) => Ok(Evaluated::Gamma(*k)),
        other => Ok(Evaluated::Ring(finite(other, budget)?)),
    }
}

fn usize_arg(v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidArgument(format!("{v} is too large")))
}

fn finite(expr: &RingExpr, budget: Budget) -> Result<FiniteRing> {
    match expr {
        RingExpr::Zn(n) => {
            budget.admit(u128::from(*n))?;
            Ok(make_zn(usize_arg(*n)?))
        }
        RingExpr::GF(q) => {
            budget.admit(u128::from(*q))?;
            let (p, k) = prime_power(*q).ok_or(Error::NotPrimePower(*q))?;
            make_gf(p, k)
        }
        RingExpr::Mat(m, base) => make_matrix_ring(usize_arg(*m)?, &finite(base, budget)?, MatrixShape::Full, budget),
        RingExpr::UT(m, base) => {
            make_matrix_ring(usize_arg(*m)?, &finite(base, budget)?, MatrixShape::UpperTriangular, budget)
        }
        RingExpr::GA(base, g) => {
            let base = finite(base, budget)?;
            let n = match g {
                GroupExpr::Cyclic(n) | GroupExpr::Dihedral(n) => *n,
            };
            // the algebra has |base|^n elements; check before building an n x n table
            budget
                .admit((base.order() as u128).checked_pow(u32::try_from(n).unwrap_or(u32::MAX)).unwrap_or(u128::MAX))?;
            let group = match g {
                GroupExpr::Cyclic(n) => make_cyclic(usize_arg(*n)?),
                GroupExpr::Dihedral(n) => make_dihedral(usize_arg(*n)?)?,
            };
            make_group_algebra(&base, &group, budget)
        }
        RingExpr::PQ(base, coeffs) => make_poly_quotient(&finite(base, budget)?, coeffs, budget),
        RingExpr::Prod(l, r) => make_product(&finite(l, budget)?, &finite(r, budget)?, budget),
        RingExpr::EndC4C2 => Ok(make_end_c4c2()),
        RingExpr::Gamma(_) => {
            Err(Error::InvalidArgument("Gamma(k) is not a finite ring; only its unit group is available".into()))
        }
        RingExpr::Quot(base, elems) => {
            let ring = finite(base, budget)?;
            let gens = elems.iter().map(|e| elem_value(base, &ring, e)).collect::<Result<Vec<_>>>()?;
            make_quotient(&ring, &ideal_closure(&ring, &gens))
        }
    }
}

/// Value of an element expression in the ring built from `expr`.
pub fn elem_value(expr: &RingExpr, ring: &FiniteRing, elem: &Elem) -> Result<usize> {
    if let RingExpr::Quot(inner, _) = expr {
        let parent = ring.quotient_parent().expect("quotient ring");
        let v = elem_value(inner, parent, elem)?;
        return Ok(ring.project(v).expect("parent element"));
    }
    let mut acc = ring.zero();
    for t in &elem.terms {
        let basis = gen_value(expr, ring, t.gen)?;
        let coeff = i64::try_from(t.coeff).map_err(|_| Error::InvalidArgument("coefficient too large".into()))?;
        acc = ring.add(acc, ring.scalar(coeff, basis));
    }
    Ok(acc)
}

fn gen_value(expr: &RingExpr, ring: &FiniteRing, gen: Gen) -> Result<usize> {
    let unavailable = || Error::InvalidArgument(format!("generator {gen} is not available in {}", ring.tag()));
    match (gen, expr) {
        (Gen::One, _) => Ok(ring.one()),
        (Gen::R { exp, reflect }, RingExpr::GA(_, GroupExpr::Dihedral(order))) => {
            let n = order / 2;
            // r^i s^j has group index i + n j
            let g = (exp % n) + if reflect { n } else { 0 };
            ring.group_element(g as usize).ok_or_else(unavailable)
        }
        (Gen::S, RingExpr::GA(_, GroupExpr::Dihedral(order))) => {
            ring.group_element((order / 2) as usize).ok_or_else(unavailable)
        }
        (Gen::G(exp), RingExpr::GA(_, GroupExpr::Cyclic(n))) => {
            ring.group_element((exp % n) as usize).ok_or_else(unavailable)
        }
        (Gen::X(exp), RingExpr::PQ(..)) => Ok(ring.pow(ring.poly_generator().ok_or_else(unavailable)?, exp)),
        _ => Err(unavailable()),
    }
}
