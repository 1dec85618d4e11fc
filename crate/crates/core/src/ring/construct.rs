use std::sync::Arc;

use super::fp_poly::smallest_irreducible;
use super::{Budget, FiniteRing, Kind, ABSENT, MAX_COORDS};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::numtheory::is_prime;

/// `F_p[a]/(modulus)` with `modulus` monic irreducible of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub k: u32,
    /// Ascending coefficients over `Z_p`, last entry 1.
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixShape {
    Full,
    UpperTriangular,
}

fn coordinate_count(len: usize) -> Result<()> {
    if len > MAX_COORDS {
        return Err(Error::InvalidArgument(format!("{len} coordinates exceed the supported maximum of {MAX_COORDS}")));
    }
    Ok(())
}

fn power_order(q: usize, len: usize, budget: Budget) -> Result<usize> {
    let requested = (q as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    budget.admit(requested)
}

/// Integers modulo `n`.
pub fn make_zn(n: usize) -> FiniteRing {
    assert!(n >= 1, "Z_n needs n >= 1");
    FiniteRing::from_kind(n, 0, 1 % n, format!("Z({n})"), Kind::Zn { n })
}

/// The field of order `p^k`, built over the smallest monic irreducible modulus.
pub fn make_gf(p: u64, k: u32) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("field degree must be at least 1".into()));
    }
    let q = Budget::default().admit((p as u128).checked_pow(k).unwrap_or(u128::MAX))?;
    let modulus = smallest_irreducible(p, k);
    let base = make_zn(p as usize);
    let low: Vec<usize> = modulus[..k as usize].iter().map(|&c| c as usize).collect();
    coordinate_count(low.len())?;
    let ring = FiniteRing::from_kind(q, 0, 1, format!("GF({q})"), Kind::Poly { base, low, var: "a" });
    Ok(ring.with_field(FieldSpec { p, k, modulus }))
}

/// Full or upper-triangular `m x m` matrices over `base`.
pub fn make_matrix_ring(m: usize, base: &FiniteRing, shape: MatrixShape, budget: Budget) -> Result<FiniteRing> {
    if m == 0 {
        return Err(Error::InvalidArgument("matrix size must be at least 1".into()));
    }
    let cells = match shape {
        MatrixShape::Full => (m as u128) * (m as u128),
        MatrixShape::UpperTriangular => (m as u128) * (m as u128 + 1) / 2,
    };
    // refuse before allocating anything proportional to m^2
    power_order(base.order(), cells.min(u128::from(u32::MAX)) as usize, budget)?;
    coordinate_count(cells.min(usize::MAX as u128) as usize)?;
    let mut slot = vec![ABSENT; m * m];
    let mut npos = 0usize;
    for i in 0..m {
        for j in 0..m {
            if shape == MatrixShape::Full || i <= j {
                slot[i * m + j] = npos as u32;
                npos += 1;
            }
        }
    }
    let order = power_order(base.order(), npos, budget)?;
    coordinate_count(npos)?;
    let q = base.order();
    let mut one_digits = vec![base.zero(); npos];
    for i in 0..m {
        one_digits[slot[i * m + i] as usize] = base.one();
    }
    let one = super::encode(&one_digits, q);
    let zero = super::encode(&vec![base.zero(); npos], q);
    let prefix = match shape {
        MatrixShape::Full => "M",
        MatrixShape::UpperTriangular => "UT",
    };
    Ok(FiniteRing::from_kind(
        order,
        zero,
        one,
        format!("{prefix}({m},{})", base.tag()),
        Kind::Matrix { base: base.clone(), m, slot, npos },
    ))
}

/// `base[G]` with convolution product; coordinate `g` is the coefficient of group element `g`.
pub fn make_group_algebra(base: &FiniteRing, group: &GroupTable, budget: Budget) -> Result<FiniteRing> {
    let n = group.order();
    let order = power_order(base.order(), n, budget)?;
    coordinate_count(n)?;
    let q = base.order();
    let zero = super::encode(&vec![base.zero(); n], q);
    let mut one_digits = vec![base.zero(); n];
    one_digits[group.identity()] = base.one();
    let one = super::encode(&one_digits, q);
    Ok(FiniteRing::from_kind(
        order,
        zero,
        one,
        format!("GA({},{})", base.tag(), group.name()),
        Kind::GroupAlgebra { base: base.clone(), group: Arc::new(group.clone()) },
    ))
}

/// `base[x]/(modulus)` for an ascending integer coefficient list; each
/// coefficient is mapped to `c * 1` in `base`.
pub fn make_poly_quotient(base: &FiniteRing, modulus: &[i64], budget: Budget) -> Result<FiniteRing> {
    let elems: Vec<usize> = modulus.iter().map(|&c| base.from_int(c)).collect();
    let tag = format!("PQ({},[{}])", base.tag(), modulus.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
    build_poly_quotient(base, &elems, budget, tag)
}

/// Same as [`make_poly_quotient`] with coefficients given as base-ring elements.
pub fn make_poly_quotient_elems(base: &FiniteRing, modulus: &[usize], budget: Budget) -> Result<FiniteRing> {
    let tag = format!("PQ({},[{}])", base.tag(), modulus.iter().map(|&c| base.label(c)).collect::<Vec<_>>().join(","));
    build_poly_quotient(base, modulus, budget, tag)
}

fn build_poly_quotient(base: &FiniteRing, modulus: &[usize], budget: Budget, tag: String) -> Result<FiniteRing> {
    if modulus.len() < 2 {
        return Err(Error::ConstantModulus);
    }
    if modulus.iter().any(|&c| c >= base.order()) {
        return Err(Error::InvalidArgument("modulus coefficient out of range".into()));
    }
    if *modulus.last().unwrap() != base.one() {
        return Err(Error::NonMonicModulus);
    }
    if !base.is_commutative() {
        return Err(Error::NonCommutativeBase);
    }
    let d = modulus.len() - 1;
    let order = power_order(base.order(), d, budget)?;
    coordinate_count(d)?;
    let q = base.order();
    let zero = super::encode(&vec![base.zero(); d], q);
    let mut one_digits = vec![base.zero(); d];
    one_digits[0] = base.one();
    let one = super::encode(&one_digits, q);
    Ok(FiniteRing::from_kind(
        order,
        zero,
        one,
        tag,
        Kind::Poly { base: base.clone(), low: modulus[..d].to_vec(), var: "x" },
    ))
}

/// Componentwise product `R x S`; `(r, s)` has index `r * |S| + s`.
pub fn make_product(left: &FiniteRing, right: &FiniteRing, budget: Budget) -> Result<FiniteRing> {
    let order = budget.admit(left.order() as u128 * right.order() as u128)?;
    let w = right.order();
    Ok(FiniteRing::from_kind(
        order,
        left.zero() * w + right.zero(),
        left.one() * w + right.one(),
        format!("{} x {}", left.tag(), right.tag()),
        Kind::Product { left: left.clone(), right: right.clone() },
    ))
}

/// Endomorphisms of `C4 x C2`. The map sending `e1 -> a e1 + c e2` and
/// `e2 -> b e1 + d e2` is stored as `[[a, b], [c, d]]` with `a` mod 4,
/// `b` in `{0, 2}`, `c, d` mod 2; product is composition.
pub fn make_end_c4c2() -> FiniteRing {
    // index = a + 4*(b/2) + 8*c + 16*d; identity is a = 1, d = 1
    FiniteRing::from_kind(32, 0, 1 + 16, "EndC4C2".into(), Kind::EndC4C2)
}

/// `B ⊕ A` with `(b, a)(b', a') = (b f(a') + b' g(a), a a')`; the pair has
/// index `b + |B| * a`. Callers validate `f` and `g`.
pub(crate) fn make_semidirect_raw(
    b: &FiniteRing,
    a: &FiniteRing,
    f: Vec<usize>,
    g: Vec<usize>,
    budget: Budget,
) -> Result<FiniteRing> {
    let order = budget.admit(a.order() as u128 * b.order() as u128)?;
    let w = b.order();
    Ok(FiniteRing::from_kind(
        order,
        a.zero() * w + b.zero(),
        a.one() * w + b.zero(),
        format!("Semidirect({},{})", b.tag(), a.tag()),
        Kind::Semidirect {
            b: b.clone(),
            a: a.clone(),
            f: f.into_iter().map(|x| x as u32).collect(),
            g: g.into_iter().map(|x| x as u32).collect(),
        },
    ))
}
