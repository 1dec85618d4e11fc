//! Finite groups stored as explicit multiplication tables.

mod abelian;
mod dihedral;

pub use abelian::{abelian_invariants, AbelianInvariants};
pub use dihedral::recognize_dihedral;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOC_ORDER: usize = 24;
pub const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

impl GroupTable {
    /// Builds a table from a row-major product array. Rows and columns must be
    /// permutations and `identity` must be a two-sided identity.
    pub fn new(order: usize, mul: Vec<u32>, identity: usize, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 || mul.len() != order * order || identity >= order {
            return Err(Error::InvalidArgument("malformed group table".into()));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidArgument("label count differs from order".into()));
            }
        }
        let mut seen = vec![false; order];
        for i in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for j in 0..order {
                let v = mul[i * order + j] as usize;
                if v >= order || seen[v] {
                    return Err(Error::InvalidArgument(format!("row {i} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        for j in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for i in 0..order {
                let v = mul[i * order + j] as usize;
                if seen[v] {
                    return Err(Error::InvalidArgument(format!("column {j} is not a permutation")));
                }
                seen[v] = true;
            }
        }
        for g in 0..order {
            if mul[identity * order + g] as usize != g || mul[g * order + identity] as usize != g {
                return Err(Error::InvalidArgument("identity is not two-sided".into()));
            }
        }
        let mut inverse = vec![0u32; order];
        for g in 0..order {
            let row = &mul[g * order..(g + 1) * order];
            let h = row.iter().position(|&v| v as usize == identity).expect("row is a permutation");
            if mul[h * order + g] as usize != identity {
                return Err(Error::InvalidArgument(format!("element {g} has no two-sided inverse")));
            }
            inverse[g] = h as u32;
        }
        Ok(Self { order, mul, identity, inverse, labels, name: None })
    }

    /// Tabulates a closed operation on `0..order`.
    pub fn from_fn(
        order: usize,
        identity: usize,
        labels: Option<Vec<String>>,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = op(a, b);
                if c >= order {
                    return Err(Error::InvalidArgument("operation is not closed".into()));
                }
                mul.push(c as u32);
            }
        }
        Self::new(order, mul, identity, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, g: usize, mut e: u64) -> usize {
        let mut base = g;
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("e{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Display name such as `D(12)`; unnamed tables report their order.
    pub fn name(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("G{}", self.order))
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Associativity: exhaustive for small orders, otherwise sampled triples.
    pub fn check_associativity(&self, seed: u64) -> bool {
        let n = self.order;
        let assoc = |a: usize, b: usize, c: usize| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c));
        if n <= EXHAUSTIVE_ASSOC_ORDER {
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| assoc(a, b, c))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..SAMPLED_ASSOC_TRIPLES).all(|_| assoc(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
        }
    }

    /// Count of elements of each order.
    pub fn order_census(&self) -> BTreeMap<u64, u64> {
        let mut census = BTreeMap::new();
        for g in 0..self.order {
            *census.entry(element_order(self, g)).or_insert(0) += 1;
        }
        census
    }
}

/// The cyclic group of order `n` written additively on indices.
pub fn make_cyclic(n: usize) -> GroupTable {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    GroupTable::from_fn(n, 0, Some(labels), |a, b| (a + b) % n).expect("cyclic table is valid").named(format!("C({n})"))
}

/// Label of `r^i s^j` in the dihedral presentation.
pub fn dihedral_label(i: usize, reflect: bool) -> String {
    let rot = match i {
        0 => String::new(),
        1 => "r".to_string(),
        _ => format!("r^{i}"),
    };
    match (rot.is_empty(), reflect) {
        (true, false) => "1".to_string(),
        (true, true) => "s".to_string(),
        (false, false) => rot,
        (false, true) => format!("{rot}*s"),
    }
}

/// The dihedral group of order `two_n`; element `r^i s^j` has index `i + n*j`.
pub fn make_dihedral(two_n: usize) -> Result<GroupTable> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::OddDihedralOrder(two_n));
    }
    let n = two_n / 2;
    let labels = (0..two_n).map(|g| dihedral_label(g % n, g >= n)).collect();
    GroupTable::from_fn(two_n, 0, Some(labels), |a, b| {
        let (i, sa) = (a % n, a / n);
        let (j, sb) = (b % n, b / n);
        // r^i s^sa r^j s^sb = r^(i ± j) s^(sa+sb)
        let rot = if sa == 0 { (i + j) % n } else { (i + n - j) % n };
        rot + n * ((sa + sb) % 2)
    })
    .map(|g| g.named(format!("D({two_n})")))
}

/// Componentwise product; `(g, h)` has index `g * |H| + h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let (m, n) = (g.order(), h.order());
    let labels = (0..m * n).map(|x| format!("({}, {})", g.label(x / n), h.label(x % n))).collect();
    GroupTable::from_fn(m * n, g.identity() * n + h.identity(), Some(labels), |a, b| {
        g.mul(a / n, b / n) * n + h.mul(a % n, b % n)
    })
    .expect("product of valid tables is valid")
    .named(format!("{}x{}", g.name(), h.name()))
}

pub fn element_order(g: &GroupTable, x: usize) -> u64 {
    let mut acc = x;
    let mut k = 1;
    while acc != g.identity() {
        acc = g.mul(acc, x);
        k += 1;
    }
    k
}

/// Elements commuting with everything, ascending.
pub fn center(g: &GroupTable) -> Vec<usize> {
    (0..g.order()).filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z))).collect()
}

/// Smallest subgroup containing `gens`, ascending.
pub fn subgroup_generated(g: &GroupTable, gens: &[usize]) -> Vec<usize> {
    let mut member = vec![false; g.order()];
    member[g.identity()] = true;
    let mut elems = vec![g.identity()];
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                elems.push(y);
                frontier.push(y);
            }
        }
    }
    // finite: closure under right multiplication by generators is a subgroup
    elems.sort_unstable();
    elems
}

/// The table of a subgroup, elements renumbered in the order given.
pub fn subgroup_table(g: &GroupTable, set: &[usize]) -> Result<GroupTable> {
    if !is_subgroup(g, set) {
        return Err(Error::NotSubgroup);
    }
    let mut local = vec![0u32; g.order()];
    for (i, &x) in set.iter().enumerate() {
        local[x] = i as u32;
    }
    let mul = set.iter().flat_map(|&a| set.iter().map(move |&b| (a, b))).map(|(a, b)| local[g.mul(a, b)]).collect();
    let labels = set.iter().map(|&x| g.label(x)).collect();
    GroupTable::new(set.len(), mul, local[g.identity()] as usize, Some(labels))
}

pub fn is_subgroup(g: &GroupTable, set: &[usize]) -> bool {
    let mut member = vec![false; g.order()];
    for &x in set {
        if x >= g.order() {
            return false;
        }
        member[x] = true;
    }
    member[g.identity()] && set.iter().all(|&a| set.iter().all(|&b| member[g.mul(a, b)]))
}

/// True iff `g S g^-1 = S` for every `g`. Errors if `S` is not a subgroup.
pub fn is_normal(g: &GroupTable, set: &[usize]) -> Result<bool> {
    if !is_subgroup(g, set) {
        return Err(Error::NotSubgroup);
    }
    let mut member = vec![false; g.order()];
    set.iter().for_each(|&x| member[x] = true);
    Ok((0..g.order()).all(|x| {
        let xi = g.inv(x);
        set.iter().all(|&s| member[g.mul(g.mul(x, s), xi)])
    }))
}

/// Two finite abelian groups are isomorphic iff their order censuses agree.
pub fn census_isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    a.order() == b.order() && a.order_census() == b.order_census()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(two_n: usize) -> GroupTable {
        make_dihedral(two_n).unwrap()
    }

    #[test]
    fn cyclic_small_cases() {
        let c1 = make_cyclic(1);
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.mul(0, 0), 0);
        let c2 = make_cyclic(2);
        assert_eq!(c2.mul(1, 1), 0);
        assert_eq!(c2.mul(0, 1), 1);
        assert_eq!(c2.mul(1, 0), 1);
    }

    #[test]
    fn dihedral_presentation_holds() {
        let g = d(12);
        let r = 1;
        let s = 6;
        assert_eq!(g.label(r), "r");
        assert_eq!(g.label(s), "s");
        assert_eq!(element_order(&g, r), 6);
        assert_eq!(g.mul(g.mul(s, r), s), g.pow(r, 5));
        for refl in 6..12 {
            assert_eq!(element_order(&g, refl), 2);
        }
        assert_eq!(element_order(&g, g.identity()), 1);
        assert!(matches!(make_dihedral(7), Err(Error::OddDihedralOrder(7))));
        assert!(make_dihedral(0).is_err());
    }

    #[test]
    fn centers_of_small_dihedrals() {
        assert_eq!(center(&d(6)), vec![0]);
        let z = center(&d(8));
        assert_eq!(z.len(), 2);
        assert_eq!(d(8).label(z[1]), "r^2");
    }

    #[test]
    fn subgroups_and_normality() {
        let g = d(12);
        assert_eq!(subgroup_generated(&g, &[]), vec![0]);
        assert_eq!(subgroup_generated(&g, &[1]), (0..6).collect::<Vec<_>>());
        let g8 = d(8);
        assert_eq!(subgroup_generated(&g8, &[2, 4]).len(), 4);

        let g24 = d(24);
        let r3 = subgroup_generated(&g24, &[3]);
        assert_eq!(r3.len(), 4);
        assert!(is_normal(&g24, &r3).unwrap());

        let g6 = d(6);
        let s = subgroup_generated(&g6, &[3]);
        assert!(!is_normal(&g6, &s).unwrap());
        let all: Vec<usize> = (0..6).collect();
        assert!(is_normal(&g6, &all).unwrap());
        assert_eq!(is_normal(&g6, &[0, 1]), Err(Error::NotSubgroup));
    }

    #[test]
    fn direct_product_identity_case() {
        let g = d(6);
        let p = direct_product(&make_cyclic(1), &g);
        assert_eq!(p.order(), 6);
        assert_eq!(recognize_dihedral(&p), Some(3));
        assert_eq!(p.order_census(), g.order_census());
    }

    #[test]
    fn malformed_tables_rejected() {
        assert!(GroupTable::new(2, vec![0, 1, 1, 1], 0, None).is_err());
        assert!(GroupTable::new(2, vec![0, 1, 1, 0], 1, None).is_err());
        assert!(GroupTable::new(2, vec![0, 1], 0, None).is_err());
    }

    #[test]
    fn associativity_checks_pass_on_constructions() {
        for two_n in [2, 4, 12, 24, 48] {
            assert!(d(two_n).check_associativity(7));
        }
        assert!(make_cyclic(30).check_associativity(1));
    }
}
