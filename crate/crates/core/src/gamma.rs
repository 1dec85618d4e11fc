//! The ring `Gamma_k = Z_k ⊕ Z[C2]` and the finite square-zero extension
//! `B ⊕ A` built from two central homomorphisms `f, g : A -> B`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::group::{center, recognize_dihedral, subgroup_generated, subgroup_table, GroupTable};
use crate::quaternion::Coefficient;
use crate::ring::{make_semidirect_raw, Budget, FiniteRing};
use crate::units::{classify, multiplicative_closure, ring_group_table, unit_inverse, unit_set, Structure};

/// `a + b s` in `Z[C2]` is a unit iff both evaluations `s = +-1` are `+-1`.
pub fn zc2_is_unit<T: Coefficient + Signed>(a: &T, b: &T) -> bool {
    (a.clone() + b.clone()).abs().is_one() && (a.clone() - b.clone()).abs().is_one()
}

fn residue<T: Coefficient + Integer + ToPrimitive + FromPrimitive>(x: T, k: u64) -> u64 {
    let m = T::from_u64(k).expect("modulus fits");
    x.mod_floor(&m).to_u64().expect("residue fits")
}

/// `(S(a + bs), D(a + bs)) = (a + b mod k, a - b mod k)`.
pub fn gamma_maps<T: Coefficient + Integer + ToPrimitive + FromPrimitive>(k: u64, a: &T, b: &T) -> (u64, u64) {
    (residue(a.clone() + b.clone(), k), residue(a.clone() - b.clone(), k))
}

/// `(t, a + b s)` with `t` reduced mod `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaElement<T> {
    pub t: u64,
    pub a: T,
    pub b: T,
}

impl<T: Coefficient + Integer + ToPrimitive + FromPrimitive> GammaElement<T> {
    pub fn new(k: u64, t: i64, a: T, b: T) -> Self {
        let t = t.rem_euclid(k as i64) as u64;
        Self { t, a, b }
    }

    pub fn one() -> Self {
        Self { t: 0, a: T::one(), b: T::zero() }
    }
}

impl<T: std::fmt::Display> std::fmt::Display for GammaElement<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}{:+}s)", self.t, self.a, self.b)
    }
}

/// `(t, u)(t', v) = (t D(v) + t' S(u), u v)`
pub fn gamma_mul<T: Coefficient + Integer + ToPrimitive + FromPrimitive>(
    k: u64,
    x: &GammaElement<T>,
    y: &GammaElement<T>,
) -> GammaElement<T> {
    let (su, _) = gamma_maps(k, &x.a, &x.b);
    let (_, dv) = gamma_maps(k, &y.a, &y.b);
    let k128 = u128::from(k);
    let t = ((u128::from(x.t) * u128::from(dv) + u128::from(y.t) * u128::from(su)) % k128) as u64;
    let m = |p: &T, q: &T| p.clone() * q.clone();
    GammaElement { t, a: m(&x.a, &y.a) + m(&x.b, &y.b), b: m(&x.a, &y.b) + m(&x.b, &y.a) }
}

pub fn gamma_add<T: Coefficient + Integer + ToPrimitive + FromPrimitive>(
    k: u64,
    x: &GammaElement<T>,
    y: &GammaElement<T>,
) -> GammaElement<T> {
    GammaElement { t: (x.t + y.t) % k, a: x.a.clone() + y.a.clone(), b: x.b.clone() + y.b.clone() }
}

pub type Gamma = GammaElement<BigInt>;

/// The unit group of `Gamma_k`: the `4k` pairs `(t, u)` with `u` in `{+-1, +-s}`.
#[derive(Debug, Clone)]
pub struct GammaUnitGroup {
    pub k: u64,
    pub elements: Vec<Gamma>,
    pub group: GroupTable,
    pub structure: Structure,
    pub r: usize,
    pub s: usize,
    pub minus_one: usize,
    pub relations_hold: bool,
    /// `<-1>` is a central complement of `<r, s>` and `<r, s>` is dihedral of order `2k`.
    pub splits_as_c2_times_dihedral: bool,
}

const ZC2_UNITS: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

pub fn gamma_unit_group(k: u64, budget: Budget) -> Result<GammaUnitGroup> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let order = budget.admit(4 * u128::from(k))?;
    let elements: Vec<Gamma> = ZC2_UNITS
        .iter()
        .flat_map(|&(a, b)| (0..k).map(move |t| Gamma { t, a: BigInt::from(a), b: BigInt::from(b) }))
        .collect();
    let index_of = |x: &Gamma| -> Option<usize> {
        let ui = ZC2_UNITS.iter().position(|&(a, b)| x.a == BigInt::from(a) && x.b == BigInt::from(b))?;
        Some(ui * k as usize + x.t as usize)
    };
    let mut mul = Vec::with_capacity(order * order);
    for x in &elements {
        for y in &elements {
            let p = gamma_mul(k, x, y);
            let i = index_of(&p)
                .ok_or_else(|| Error::UnitGroupCheck(format!("{x} * {y} = {p} is outside the unit set")))?;
            mul.push(i as u32);
        }
    }
    let one = Gamma::one();
    for x in &elements {
        if !elements.iter().any(|y| gamma_mul(k, x, y) == one && gamma_mul(k, y, x) == one) {
            return Err(Error::UnitGroupCheck(format!("{x} has no inverse in the unit set")));
        }
    }
    let labels = elements.iter().map(|x| x.to_string()).collect();
    let identity = index_of(&one).expect("identity listed");
    let group = GroupTable::new(order, mul, identity, Some(labels))?.named(format!("Gamma({k})^x"));

    let r = index_of(&Gamma { t: 1 % k, a: BigInt::from(1), b: BigInt::from(0) }).expect("r");
    let s = index_of(&Gamma { t: 0, a: BigInt::from(0), b: BigInt::from(1) }).expect("s");
    let minus_one = index_of(&Gamma { t: 0, a: BigInt::from(-1), b: BigInt::from(0) }).expect("-1");
    let relations_hold =
        group.pow(r, k) == identity && group.mul(s, s) == identity && group.mul(group.mul(s, r), s) == group.inv(r);
    let splits = splits_as_c2_times_dihedral(&group, r, s, minus_one, k as usize);
    let mut structure = classify(&group);
    if splits && matches!(structure, Structure::Unclassified { .. }) {
        structure = structure.with_note(format!("C2 x D{}", 2 * k));
    }
    Ok(GammaUnitGroup {
        k,
        elements,
        group,
        structure,
        r,
        s,
        minus_one,
        relations_hold,
        splits_as_c2_times_dihedral: splits,
    })
}

/// `z` central of order 2 outside `H = <r, s>`, `H` dihedral of order `2k`,
/// and `H <z> = G`.
fn splits_as_c2_times_dihedral(g: &GroupTable, r: usize, s: usize, z: usize, k: usize) -> bool {
    let h = subgroup_generated(g, &[r, s]);
    if h.len() * 2 != g.order() || h.contains(&z) || g.mul(z, z) != g.identity() || !center(g).contains(&z) {
        return false;
    }
    match subgroup_table(g, &h) {
        Ok(t) => recognize_dihedral(&t) == Some(k),
        Err(_) => false,
    }
}

/// Data for the ring `B ⊕ A` with `(b, a)(b', a') = (b f(a') + b' g(a), a a')`.
#[derive(Debug, Clone)]
pub struct SemidirectSpec {
    pub b: FiniteRing,
    pub a: FiniteRing,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

impl SemidirectSpec {
    pub fn new(b: &FiniteRing, a: &FiniteRing, f: Vec<usize>, g: Vec<usize>) -> Result<Self> {
        let spec = Self { b: b.clone(), a: a.clone(), f, g };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, h) in [("f", &self.f), ("g", &self.g)] {
            check_central_hom(&self.a, &self.b, h).map_err(|e| Error::InvalidSemidirect(format!("{name}: {e}")))?;
        }
        Ok(())
    }
}

fn check_central_hom(a: &FiniteRing, b: &FiniteRing, h: &[usize]) -> std::result::Result<(), String> {
    if h.len() != a.order() || h.iter().any(|&y| y >= b.order()) {
        return Err("map has the wrong domain or codomain".into());
    }
    if h[a.one()] != b.one() {
        return Err("does not send 1 to 1".into());
    }
    for x in a.elements() {
        if !b.is_central(h[x]) {
            return Err(format!("image of {} is not central", a.label(x)));
        }
        for y in a.elements() {
            if h[a.add(x, y)] != b.add(h[x], h[y]) {
                return Err(format!("not additive at ({}, {})", a.label(x), a.label(y)));
            }
            if h[a.mul(x, y)] != b.mul(h[x], h[y]) {
                return Err(format!("not multiplicative at ({}, {})", a.label(x), a.label(y)));
            }
        }
    }
    Ok(())
}

pub fn semidirect_ring(spec: &SemidirectSpec, budget: Budget) -> Result<FiniteRing> {
    spec.validate()?;
    make_semidirect_raw(&spec.b, &spec.a, spec.f.clone(), spec.g.clone(), budget)
}

fn pair(spec: &SemidirectSpec, b: usize, a: usize) -> usize {
    b + spec.b.order() * a
}

/// Checks the unit group of `B ⊕ A` is `B' ⋊ A^x` with `B' = {(b, 1)}`,
/// conjugation `(0,a)(b,1)(0,a)^-1 = (g(a) f(a^-1) b, 1)`, and the inverse
/// formula `(b, a)^-1 = (-b g(a^-1) f(a^-1), a^-1)`.
pub fn semidirect_unit_check(spec: &SemidirectSpec, budget: Budget) -> Result<bool> {
    let t = semidirect_ring(spec, budget)?;
    let (bb, aa) = (&spec.b, &spec.a);
    let units = unit_set(&t);
    let a_units = unit_set(aa);
    if units.len() != bb.order() * a_units.len() {
        return Ok(false);
    }
    let mut is_unit = vec![false; t.order()];
    units.iter().for_each(|&u| is_unit[u] = true);
    let b_prime: Vec<usize> = bb.elements().map(|b| pair(spec, b, aa.one())).collect();
    let a_prime: Vec<usize> = a_units.iter().map(|&a| pair(spec, bb.zero(), a)).collect();
    if !b_prime.iter().chain(&a_prime).all(|&x| is_unit[x]) {
        return Ok(false);
    }
    // A' closed; B' ∩ A' = 1; B' A' covers the units
    let mut in_a = vec![false; t.order()];
    a_prime.iter().for_each(|&x| in_a[x] = true);
    if !a_prime.iter().all(|&x| a_prime.iter().all(|&y| in_a[t.mul(x, y)])) {
        return Ok(false);
    }
    if b_prime.iter().filter(|&&x| in_a[x]).count() != 1 {
        return Ok(false);
    }
    let mut covered = vec![false; t.order()];
    for &x in &b_prime {
        for &y in &a_prime {
            covered[t.mul(x, y)] = true;
        }
    }
    if !units.iter().all(|&u| covered[u]) {
        return Ok(false);
    }
    // B' normal
    let mut in_b = vec![false; t.order()];
    b_prime.iter().for_each(|&x| in_b[x] = true);
    for &u in &units {
        let ui = unit_inverse(&t, u).expect("unit");
        if !b_prime.iter().all(|&x| in_b[t.mul(t.mul(u, x), ui)]) {
            return Ok(false);
        }
    }
    for &a in &a_units {
        let ai = unit_inverse(aa, a).expect("unit");
        let twist = bb.mul(spec.g[a], spec.f[ai]);
        let c = pair(spec, bb.zero(), a);
        let ci = pair(spec, bb.zero(), ai);
        for b in bb.elements() {
            if t.mul(t.mul(c, pair(spec, b, aa.one())), ci) != pair(spec, bb.mul(twist, b), aa.one()) {
                return Ok(false);
            }
            let x = pair(spec, b, a);
            let claimed = pair(spec, bb.neg(bb.mul(bb.mul(b, spec.g[ai]), spec.f[ai])), ai);
            if unit_inverse(&t, x) != Some(claimed) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A small set of elements generating `ring` as a ring with 1.
pub fn ring_generators(ring: &FiniteRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut sub = subring_closure(ring, &gens);
    for x in ring.elements() {
        if !sub[x] {
            gens.push(x);
            sub = subring_closure(ring, &gens);
        }
    }
    gens
}

fn subring_closure(ring: &FiniteRing, gens: &[usize]) -> Vec<bool> {
    let mut member = vec![false; ring.order()];
    let mut elems = vec![ring.zero()];
    member[ring.zero()] = true;
    let mut queue = vec![ring.one()];
    queue.extend_from_slice(gens);
    while let Some(x) = queue.pop() {
        if member[x] {
            continue;
        }
        member[x] = true;
        elems.push(x);
        for &y in &elems {
            for z in [ring.add(x, y), ring.mul(x, y), ring.mul(y, x), ring.neg(x)] {
                if !member[z] {
                    queue.push(z);
                }
            }
        }
    }
    member
}

/// All unital ring homomorphisms `A -> B` landing in the center of `B`, as
/// image tables. Generator images range over the center; each choice is
/// extended by closure and kept only if consistent.
pub fn central_homomorphisms(a: &FiniteRing, b: &FiniteRing) -> Vec<Vec<usize>> {
    let gens = ring_generators(a);
    let zb: Vec<usize> = b.elements().filter(|&x| b.is_central(x)).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().map(|&c| zb[c]).collect();
        if let Some(h) = extend_hom(a, b, &gens, &images) {
            if check_central_hom(a, b, &h).is_ok() {
                out.push(h);
            }
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                out.sort();
                out.dedup();
                return out;
            }
            choice[i] += 1;
            if choice[i] < zb.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn extend_hom(a: &FiniteRing, b: &FiniteRing, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const UNSET: usize = usize::MAX;
    let mut h = vec![UNSET; a.order()];
    let mut known = Vec::new();
    let mut queue = vec![(a.zero(), b.zero()), (a.one(), b.one())];
    queue.extend(gens.iter().copied().zip(images.iter().copied()));
    while let Some((x, y)) = queue.pop() {
        if h[x] != UNSET {
            if h[x] != y {
                return None;
            }
            continue;
        }
        h[x] = y;
        known.push(x);
        for &z in &known {
            queue.push((a.add(x, z), b.add(y, h[z])));
            queue.push((a.mul(x, z), b.mul(y, h[z])));
            queue.push((a.mul(z, x), b.mul(h[z], y)));
        }
    }
    h.iter().all(|&v| v != UNSET).then_some(h)
}

/// Bridge to `Gamma_k`: inside `Z_k ⊕ Z_m[C2]` with `f = D`, `g = S`, the units
/// generated by `r = (1, 1)`, `s = (0, s)` and `-1`.
pub fn gamma_bridge_group(k: u64, budget: Budget) -> Result<(FiniteRing, GroupTable)> {
    use crate::group::make_cyclic;
    use crate::ring::{make_group_algebra, make_zn};
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let m = (k..).step_by(k as usize).find(|&m| m >= 3).expect("multiple exists") as usize;
    let zm = make_zn(m);
    let a = make_group_algebra(&zm, &make_cyclic(2), budget)?;
    let b = make_zn(k as usize);
    // coordinates of a + b s in Z_m[C2] are (a, b)
    let coords = |x: usize| a.coordinates(x).expect("group algebra");
    let f: Vec<usize> = a
        .elements()
        .map(|x| {
            let c = coords(x);
            (c[0] + m - c[1]) % k as usize
        })
        .collect();
    let g: Vec<usize> = a
        .elements()
        .map(|x| {
            let c = coords(x);
            (c[0] + c[1]) % k as usize
        })
        .collect();
    let spec = SemidirectSpec::new(&b, &a, f, g)?;
    let t = semidirect_ring(&spec, budget)?;
    let s_elem = a.group_element(1).expect("C2 generator");
    let r = pair(&spec, 1 % k as usize, a.one());
    let s = pair(&spec, 0, s_elem);
    let minus = pair(&spec, 0, a.neg(a.one()));
    let elems = multiplicative_closure(&t, &[r, s, minus]);
    let group = ring_group_table(&t, &elems)?;
    Ok((t, group))
}
