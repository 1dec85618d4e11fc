use super::{FiniteRing, Kind};
use crate::error::{Error, Result};

pub fn is_central_idempotent(ring: &FiniteRing, e: usize) -> bool {
    e < ring.order() && ring.mul(e, e) == e && ring.is_central(e)
}

/// All central idempotents, ascending. Always contains 0 and 1.
pub fn central_idempotents(ring: &FiniteRing) -> Vec<usize> {
    ring.elements().filter(|&e| ring.mul(e, e) == e).filter(|&e| ring.is_central(e)).collect()
}

/// True iff the only central idempotents are 0 and 1.
pub fn is_indecomposable(ring: &FiniteRing) -> Result<bool> {
    if ring.is_trivial() {
        return Err(Error::TrivialRing);
    }
    Ok(central_idempotents(ring).len() == 2)
}

fn corner(ring: &FiniteRing, e: usize) -> FiniteRing {
    let mut local = vec![u32::MAX; ring.order()];
    let mut elems = Vec::new();
    for r in ring.elements() {
        let x = ring.mul(e, r);
        if local[x] == u32::MAX {
            local[x] = 0;
            elems.push(x as u32);
        }
    }
    elems.sort_unstable();
    for (i, &x) in elems.iter().enumerate() {
        local[x as usize] = i as u32;
    }
    let zero = local[ring.zero()] as usize;
    let one = local[e] as usize;
    FiniteRing::from_kind(
        elems.len(),
        zero,
        one,
        format!("({})*{}", ring.label(e), ring.tag()),
        Kind::Corner { parent: ring.clone(), elems, local },
    )
}

/// Splits `R = eR x (1-e)R` at a nontrivial central idempotent `e`.
pub fn peirce_split(ring: &FiniteRing, e: usize) -> Result<(FiniteRing, FiniteRing)> {
    if !is_central_idempotent(ring, e) {
        return Err(Error::NotCentralIdempotent(e));
    }
    if e == ring.zero() || e == ring.one() {
        return Err(Error::TrivialIdempotent);
    }
    let f = ring.sub(ring.one(), e);
    Ok((corner(ring, e), corner(ring, f)))
}

impl FiniteRing {
    /// Parent element of a Peirce corner element.
    pub fn corner_embed(&self, x: usize) -> Option<usize> {
        match self.kind() {
            Kind::Corner { elems, .. } => elems.get(x).map(|&v| v as usize),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_gf, make_product, make_zn, Budget};

    #[test]
    fn fields_have_only_trivial_idempotents() {
        let f = make_gf(3, 1).unwrap();
        assert_eq!(central_idempotents(&f), vec![0, 1]);
        assert!(is_indecomposable(&make_gf(2, 2).unwrap()).unwrap());
        assert_eq!(is_indecomposable(&make_zn(1)), Err(Error::TrivialRing));
    }

    #[test]
    fn product_of_fields_splits() {
        let r = make_product(&make_gf(2, 1).unwrap(), &make_gf(3, 1).unwrap(), Budget::default()).unwrap();
        assert_eq!(central_idempotents(&r).len(), 4);
        assert!(!is_indecomposable(&r).unwrap());
        // (1, 0) has index 1 * 3 + 0
        let (a, b) = peirce_split(&r, 3).unwrap();
        assert_eq!((a.order(), b.order()), (2, 3));
        assert_eq!(a.characteristic(), 2);
        assert_eq!(b.characteristic(), 3);
        a.validate_axioms(0).unwrap();
        b.validate_axioms(0).unwrap();
    }

    #[test]
    fn split_rejects_bad_idempotents() {
        let r = make_zn(6);
        assert_eq!(peirce_split(&r, 2).unwrap_err(), Error::NotCentralIdempotent(2));
        assert_eq!(peirce_split(&r, 1).unwrap_err(), Error::TrivialIdempotent);
        let (a, b) = peirce_split(&r, 3).unwrap();
        assert_eq!(a.order() * b.order(), 6);
    }
}
