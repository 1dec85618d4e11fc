use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::group::AbelianInvariants;
use crate::numtheory::{ceil_div, factorize, is_prime, valuation};
use crate::ring::{make_gf, make_poly_quotient, Budget};

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Unit group of `F_p[x]/(x^n)` in closed form.
pub fn un_formula(p: u64, n: u64) -> Result<AbelianInvariants> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut cyclic = Vec::new();
    if p > 2 {
        cyclic.push(p - 1);
    }
    // k runs while p^(k-1) < n
    let mut pk_minus_1: u64 = 1;
    while pk_minus_1 < n {
        let pk = pk_minus_1 * p;
        let mult = ceil_div(n, pk_minus_1) + ceil_div(n, pk * p) - 2 * ceil_div(n, pk);
        cyclic.extend(std::iter::repeat_n(pk, mult as usize));
        pk_minus_1 = pk;
    }
    Ok(AbelianInvariants::from_cyclic_orders(&cyclic))
}

/// Order census of the units of `F_p[x]/(x^n)`, found without a group table.
/// Units are the elements with nonzero constant term. Each order divides the
/// number of units, so it is found by stripping prime factors from that count.
pub fn truncated_poly_unit_census(p: u64, n: u32, budget: Budget) -> Result<BTreeMap<u64, u64>> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut modulus = vec![0i64; n as usize + 1];
    modulus[n as usize] = 1;
    let ring = make_poly_quotient(&make_gf(p, 1)?, &modulus, budget)?;
    // coordinate 0 (the constant term) is the least significant digit
    let units: Vec<usize> = ring.elements().filter(|&x| x % p as usize != 0).collect();
    let exponent = units.len() as u64;
    let factors = factorize(exponent);
    let mut census = BTreeMap::new();
    for &x in &units {
        if ring.pow(x, exponent) != ring.one() {
            return Err(Error::UnitGroupCheck(format!("{} has a unit constant term but is not a unit", ring.label(x))));
        }
        // the q-part of the order is the order of x^(exponent / q^e)
        let mut k = 1;
        for &(q, e) in &factors {
            let mut y = ring.pow(x, exponent / q.pow(e));
            while y != ring.one() {
                y = ring.pow(y, q);
                k *= q;
            }
        }
        *census.entry(k).or_insert(0) += 1;
    }
    Ok(census)
}

pub fn un_formula_oracle(p: u64, n: u32, budget: Budget) -> Result<AbelianInvariants> {
    AbelianInvariants::from_census(&truncated_poly_unit_census(p, n, budget)?)
}

/// Lower bound on the number of cyclic factors forced by an element of order `p^r`.
pub fn rankprop_bound(p: u64, r: u32) -> Result<u64> {
    require_prime(p)?;
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    Ok(if p == 2 { 1 << (r - 2) } else { 1 + (p - 1) * p.pow(r - 2) })
}

/// `U_{p^(r-1)+1}` written out factor by factor:
/// `C_{p-1} x C_{p^r} x C_{p^(r-1)}^(p-2) x prod_{k=1}^{r-2} C_{p^k}^(p^(r-2-k) (p-1)^2)`.
pub fn wild_decomposition(p: u64, r: u32) -> Result<AbelianInvariants> {
    require_prime(p)?;
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    let mut cyclic = vec![p - 1, p.pow(r)];
    cyclic.extend(std::iter::repeat_n(p.pow(r - 1), p as usize - 2));
    for k in 1..=r - 2 {
        let mult = p.pow(r - 2 - k) * (p - 1) * (p - 1);
        cyclic.extend(std::iter::repeat_n(p.pow(k), mult as usize));
    }
    Ok(AbelianInvariants::from_cyclic_orders(&cyclic))
}

/// The same product with the top block read as `C_{p^(r-1)}^(p-1)`. It has
/// the right number of factors but not the right order.
pub fn wild_decomposition_as_displayed(p: u64, r: u32) -> Result<AbelianInvariants> {
    require_prime(p)?;
    if r < 2 {
        return Err(Error::InvalidArgument(format!("r must be at least 2, got {r}")));
    }
    let mut cyclic = vec![p - 1];
    cyclic.extend(std::iter::repeat_n(p.pow(r - 1), p as usize - 1));
    for j in 1..=r - 2 {
        let mult = p.pow(j - 1) * (p - 1) * (p - 1);
        cyclic.extend(std::iter::repeat_n(p.pow(r - 1 - j), mult as usize));
    }
    Ok(AbelianInvariants::from_cyclic_orders(&cyclic))
}

/// `|GL_m(F_{p^k})| = prod_{i<m} (p^{mk} - p^{ik})`.
pub fn gl_order(m: u32, p: u64, k: u32) -> Result<BigUint> {
    require_prime(p)?;
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument("m and k must be positive".into()));
    }
    let q = BigUint::from(p);
    let top = q.pow(m * k);
    let mut order = BigUint::one();
    for i in 0..m {
        order *= &top - q.pow(i * k);
    }
    let expected = u64::from(k) * u64::from(m) * u64::from(m - 1) / 2;
    assert_eq!(valuation(&order, p), Some(expected), "p-part of GL order");
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(v: &[u64]) -> AbelianInvariants {
        AbelianInvariants::from_prime_powers(v.to_vec()).unwrap()
    }

    #[test]
    fn small_un_values() {
        assert_eq!(un_formula(2, 3).unwrap(), inv(&[4]));
        assert_eq!(un_formula(3, 2).unwrap(), inv(&[2, 3]));
        assert_eq!(un_formula(2, 2).unwrap(), inv(&[2]));
        assert_eq!(un_formula(2, 1).unwrap(), AbelianInvariants::trivial());
        assert_eq!(un_formula(4, 2), Err(Error::NotPrime(4)));
    }

    #[test]
    fn un_order_is_p_power_times_p_minus_1() {
        for p in [2u64, 3, 5, 7] {
            for n in 1..=20u64 {
                let u = un_formula(p, n).unwrap();
                assert_eq!(u.order(), p.pow(n as u32 - 1) * (p - 1), "p={p} n={n}");
            }
        }
    }

    #[test]
    fn oracle_small() {
        for (p, n) in [(2, 3), (3, 2), (2, 4), (3, 3)] {
            assert_eq!(un_formula_oracle(p, n, Budget::default()).unwrap(), un_formula(p, n as u64).unwrap());
        }
    }

    #[test]
    fn rank_bounds() {
        assert_eq!(rankprop_bound(3, 2).unwrap(), 3);
        assert_eq!(rankprop_bound(2, 3).unwrap(), 2);
        assert_eq!(rankprop_bound(2, 2).unwrap(), 1);
        assert!(rankprop_bound(2, 1).is_err());
    }

    #[test]
    fn wild_decomposition_matches_formula() {
        for (p, r) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)] {
            let n = p.pow(r - 1) + 1;
            let u = un_formula(p, n).unwrap();
            assert_eq!(wild_decomposition(p, r).unwrap(), u, "p={p} r={r}");
            let shown = wild_decomposition_as_displayed(p, r).unwrap();
            assert_eq!(shown.p_rank(p), u.p_rank(p));
            assert_ne!(shown.order(), u.order());
        }
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(3, 2, 1).unwrap(), BigUint::from(168u32));
        assert_eq!(gl_order(2, 2, 1).unwrap(), BigUint::from(6u32));
        assert_eq!(gl_order(2, 3, 1).unwrap(), BigUint::from(48u32));
        assert_eq!(gl_order(2, 2, 2).unwrap(), BigUint::from(180u32));
        for m in 1..=4 {
            for k in 1..=3 {
                for p in [2, 3] {
                    gl_order(m, p, k).unwrap();
                }
            }
        }
    }
}
