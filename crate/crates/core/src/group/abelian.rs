use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{direct_product, make_cyclic, GroupTable};
use crate::error::{Error, Result};
use crate::numtheory::{exact_log, factorize, primary_parts, prime_power};

/// Canonical primary decomposition of a finite abelian group: the multiset
/// of prime-power cyclic factor orders, kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AbelianInvariants {
    factors: Vec<u64>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    /// Every entry must be a prime power greater than one.
    pub fn from_prime_powers(mut factors: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = factors.iter().find(|&&f| prime_power(f).is_none()) {
            return Err(Error::NotPrimePower(bad));
        }
        factors.sort_unstable();
        Ok(Self { factors })
    }

    /// Decomposition of `C_{n_1} x C_{n_2} x ...` for arbitrary cyclic orders.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut factors: Vec<u64> = orders.iter().flat_map(|&n| primary_parts(n)).collect();
        factors.sort_unstable();
        Self { factors }
    }

    /// Recovers the decomposition from the number of elements of each order.
    ///
    /// For each prime `p`, `alpha_k` = #elements of order dividing `p^k` equals
    /// `p^(s_k)` with `s_k = sum_j min(j, k) * beta_j`, so the count of
    /// `C_{p^k}` factors is `beta_k = 2 s_k - s_{k-1} - s_{k+1}`.
    pub fn from_census(census: &BTreeMap<u64, u64>) -> Result<Self> {
        let order: u64 = census.values().sum();
        let mut factors = Vec::new();
        for (p, e) in factorize(order) {
            let full = p.pow(e);
            let mut s = vec![0u32];
            let mut pk = 1u64;
            loop {
                pk *= p;
                let alpha: u64 = census.iter().filter(|(&o, _)| pk.is_multiple_of(o)).map(|(_, &c)| c).sum();
                let sk = exact_log(alpha, p).ok_or(Error::NotAbelian)?;
                s.push(sk);
                if alpha == full {
                    break;
                }
                if s.len() > 64 {
                    return Err(Error::NotAbelian);
                }
            }
            let top = s.len() - 1;
            for k in 1..=top {
                let next = if k == top { s[top] } else { s[k + 1] };
                let beta = 2 * i64::from(s[k]) - i64::from(s[k - 1]) - i64::from(next);
                if beta < 0 {
                    return Err(Error::NotAbelian);
                }
                factors.extend(std::iter::repeat_n(p.pow(k as u32), beta as usize));
            }
        }
        factors.sort_unstable();
        let inv = Self { factors };
        if inv.order() != order {
            return Err(Error::NotAbelian);
        }
        Ok(inv)
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of cyclic factors, `d(G)`.
    pub fn d(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Number of factors whose order is a power of `p`.
    pub fn p_rank(&self, p: u64) -> usize {
        self.factors.iter().filter(|&&f| f % p == 0).count()
    }

    /// Product of cyclic groups with these orders.
    pub fn to_group(&self) -> GroupTable {
        self.factors.iter().fold(make_cyclic(1), |acc, &f| direct_product(&acc, &make_cyclic(f as usize)))
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|c| format!("C{c}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

pub fn abelian_invariants(g: &GroupTable) -> Result<AbelianInvariants> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    AbelianInvariants::from_census(&g.order_census())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{census_isomorphic, make_dihedral};

    /// Independent census oracle: count element orders by brute-force powering.
    fn census_by_powering(g: &GroupTable) -> BTreeMap<u64, u64> {
        let mut m = BTreeMap::new();
        for x in 0..g.order() {
            let mut k = 1u64;
            let mut acc = x;
            while acc != g.identity() {
                acc = g.mul(acc, x);
                k += 1;
            }
            *m.entry(k).or_insert(0) += 1;
        }
        m
    }

    #[test]
    fn cyclic_six_splits_by_crt() {
        let g = make_cyclic(6);
        let census = census_by_powering(&g);
        assert_eq!(census, BTreeMap::from([(1, 1), (2, 1), (3, 2), (6, 2)]));
        let inv = abelian_invariants(&g).unwrap();
        assert_eq!(inv.factors(), &[2, 3]);
        assert_eq!(inv.d(), 2);
    }

    #[test]
    fn klein_four_from_d4() {
        let inv = abelian_invariants(&make_dihedral(4).unwrap()).unwrap();
        assert_eq!(inv.factors(), &[2, 2]);
    }

    #[test]
    fn trivial_group_has_no_factors() {
        let inv = abelian_invariants(&make_cyclic(1)).unwrap();
        assert_eq!(inv.d(), 0);
        assert_eq!(inv.to_string(), "1");
    }

    #[test]
    fn nonabelian_rejected() {
        assert_eq!(abelian_invariants(&make_dihedral(6).unwrap()), Err(Error::NotAbelian));
    }

    #[test]
    fn rebuilt_groups_match() {
        for orders in [vec![4, 2], vec![8, 2, 2], vec![9, 3], vec![2, 4, 3], vec![16, 4]] {
            let g = AbelianInvariants::from_cyclic_orders(&orders).to_group();
            let inv = abelian_invariants(&g).unwrap();
            assert!(census_isomorphic(&g, &inv.to_group()));
            assert_eq!(inv.order() as usize, g.order());
        }
    }

    #[test]
    fn prime_power_validation() {
        assert!(AbelianInvariants::from_prime_powers(vec![4, 6]).is_err());
        assert_eq!(AbelianInvariants::from_prime_powers(vec![4, 2]).unwrap().factors(), &[2, 4]);
    }
}
