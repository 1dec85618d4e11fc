use super::{FiniteRing, Kind};
use crate::error::{Error, Result};

/// A two-sided ideal, stored as the sorted list of its elements.
#[derive(Debug, Clone)]
pub struct IdealSpan {
    parent: FiniteRing,
    elements: Vec<usize>,
    member: Vec<bool>,
}

impl IdealSpan {
    /// Wraps an explicit element set after checking the ideal axioms.
    pub fn new(parent: &FiniteRing, elements: &[usize]) -> Result<Self> {
        let mut member = vec![false; parent.order()];
        for &x in elements {
            if x >= parent.order() {
                return Err(Error::OutOfRange { index: x, order: parent.order() });
            }
            member[x] = true;
        }
        let mut elems: Vec<usize> = (0..parent.order()).filter(|&x| member[x]).collect();
        elems.dedup();
        let ideal = Self { parent: parent.clone(), elements: elems, member };
        if !ideal.satisfies_axioms() {
            return Err(Error::NotIdeal);
        }
        Ok(ideal)
    }

    fn satisfies_axioms(&self) -> bool {
        let r = &self.parent;
        if !self.member[r.zero()] {
            return false;
        }
        let closed_add = self
            .elements
            .iter()
            .all(|&a| self.member[r.neg(a)] && self.elements.iter().all(|&b| self.member[r.add(a, b)]));
        closed_add
            && self.elements.iter().all(|&a| r.elements().all(|x| self.member[r.mul(x, a)] && self.member[r.mul(a, x)]))
    }

    pub fn parent(&self) -> &FiniteRing {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.member.get(x).copied().unwrap_or(false)
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }
}

/// Smallest two-sided ideal containing `gens`.
///
/// Grows an additive subgroup one generator at a time (adding whole cosets
/// `S + k g`), and queues `r g` and `g r` for every ring element `r` and every
/// generator `g` taken in.
pub fn ideal_closure(ring: &FiniteRing, gens: &[usize]) -> IdealSpan {
    let mut member = vec![false; ring.order()];
    member[ring.zero()] = true;
    grow(ring, member, vec![ring.zero()], gens)
}

/// Smallest ideal containing `ideal` and `gens`.
pub fn extend_ideal(ideal: &IdealSpan, gens: &[usize]) -> IdealSpan {
    grow(ideal.parent(), ideal.member.clone(), ideal.elements.clone(), gens)
}

fn grow(ring: &FiniteRing, mut member: Vec<bool>, mut elems: Vec<usize>, gens: &[usize]) -> IdealSpan {
    let n = ring.order();
    let mut pending: Vec<usize> = gens.iter().copied().filter(|&g| g < n).collect();
    while let Some(g) = pending.pop() {
        if member[g] {
            continue;
        }
        let base_len = elems.len();
        let mut multiple = g;
        while !member[multiple] {
            for i in 0..base_len {
                let s = ring.add(elems[i], multiple);
                member[s] = true;
                elems.push(s);
            }
            multiple = ring.add(multiple, g);
        }
        for r in ring.elements() {
            let left = ring.mul(r, g);
            if !member[left] {
                pending.push(left);
            }
            let right = ring.mul(g, r);
            if !member[right] {
                pending.push(right);
            }
        }
    }
    elems.sort_unstable();
    IdealSpan { parent: ring.clone(), elements: elems, member }
}

/// The ideal generated by all products `a b`, `a` in `i`, `b` in `j`.
pub fn ideal_product(i: &IdealSpan, j: &IdealSpan) -> IdealSpan {
    let ring = i.parent();
    let mut seen = vec![false; ring.order()];
    let mut prods = Vec::new();
    for &a in i.elements() {
        for &b in j.elements() {
            let p = ring.mul(a, b);
            if !seen[p] {
                seen[p] = true;
                prods.push(p);
            }
        }
    }
    ideal_closure(ring, &prods)
}

/// `I^k` for `k >= 1`.
pub fn ideal_power(i: &IdealSpan, k: u32) -> IdealSpan {
    assert!(k >= 1);
    let mut acc = i.clone();
    for _ in 1..k {
        acc = ideal_product(&acc, i);
    }
    acc
}

/// The coset ring `R / I`; each coset is represented by its least element index.
pub fn make_quotient(ring: &FiniteRing, ideal: &IdealSpan) -> Result<FiniteRing> {
    if !ideal.parent().same_ring(ring) {
        if ideal.parent().order() != ring.order() || ideal.parent().tag() != ring.tag() {
            return Err(Error::NotIdeal);
        }
        IdealSpan::new(ring, ideal.elements())?;
    }
    let n = ring.order();
    let mut coset = vec![u32::MAX; n];
    let mut reps: Vec<u32> = Vec::new();
    for a in ring.elements() {
        if coset[a] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(a as u32);
        for &i in ideal.elements() {
            coset[ring.add(a, i)] = id;
        }
    }
    let order = reps.len();
    let zero = coset[ring.zero()] as usize;
    let one = coset[ring.one()] as usize;
    Ok(FiniteRing::from_kind(
        order,
        zero,
        one,
        format!("{}/I{}", ring.tag(), ideal.len()),
        Kind::Quotient { parent: ring.clone(), reps, coset },
    ))
}

impl FiniteRing {
    /// Image of a parent element in a quotient ring.
    pub fn project(&self, x: usize) -> Option<usize> {
        match self.kind() {
            Kind::Quotient { coset, .. } => coset.get(x).map(|&c| c as usize),
            _ => None,
        }
    }

    /// Least-index representative of a coset.
    pub fn lift(&self, c: usize) -> Option<usize> {
        match self.kind() {
            Kind::Quotient { reps, .. } => reps.get(c).map(|&r| r as usize),
            _ => None,
        }
    }

    /// The ring a quotient was formed from.
    pub fn quotient_parent(&self) -> Option<&FiniteRing> {
        match self.kind() {
            Kind::Quotient { parent, .. } => Some(parent),
            _ => None,
        }
    }
}
