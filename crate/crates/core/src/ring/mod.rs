//! Finite rings with canonically indexed elements.
//!
//! Every ring is a set `0..order` of element indices with total `add`, `mul`
//! and `neg`. Coefficient-vector rings (polynomial quotients, matrices, group
//! algebras) index elements in mixed radix: coordinate 0 is the least
//! significant digit, each digit an element index of the base ring.

mod construct;
pub(crate) mod fp_poly;
mod ideal;
mod idempotent;

pub(crate) use construct::make_semidirect_raw;
pub use construct::{
    make_end_c4c2, make_gf, make_group_algebra, make_matrix_ring, make_poly_quotient, make_poly_quotient_elems,
    make_product, make_zn, FieldSpec, MatrixShape,
};
pub use ideal::{extend_ideal, ideal_closure, ideal_power, ideal_product, make_quotient, IdealSpan};
pub use idempotent::{central_idempotents, is_central_idempotent, is_indecomposable, peirce_split};

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::GroupTable;

/// Default cap on the number of elements any constructor will enumerate.
pub const DEFAULT_BUDGET: usize = 1 << 20;

/// Rings up to this order may cache a full multiplication table.
pub const TABLE_LIMIT: usize = 4096;

pub(crate) const MAX_COORDS: usize = 64;

const ABSENT: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    pub(crate) fn admit(self, requested: u128) -> Result<usize> {
        if requested > self.0 as u128 {
            Err(Error::BudgetExceeded { requested, budget: self.0 })
        } else {
            Ok(requested as usize)
        }
    }
}

/// Cached unit membership and inverses.
#[derive(Debug)]
pub(crate) struct UnitTable {
    pub(crate) inverse: Vec<u32>,
    pub(crate) units: Vec<usize>,
}

impl UnitTable {
    pub(crate) fn is_unit(&self, x: usize) -> bool {
        self.inverse[x] != ABSENT
    }

    pub(crate) fn inverse_of(&self, x: usize) -> Option<usize> {
        let v = self.inverse[x];
        (v != ABSENT).then_some(v as usize)
    }

    pub(crate) fn from_inverses(inverse: Vec<Option<usize>>) -> Self {
        let units = (0..inverse.len()).filter(|&i| inverse[i].is_some()).collect();
        let inverse = inverse.into_iter().map(|v| v.map_or(ABSENT, |u| u as u32)).collect();
        Self { inverse, units }
    }
}

#[derive(Debug)]
pub(crate) enum Kind {
    Zn { n: usize },
    Poly { base: FiniteRing, low: Vec<usize>, var: &'static str },
    Matrix { base: FiniteRing, m: usize, slot: Vec<u32>, npos: usize },
    GroupAlgebra { base: FiniteRing, group: Arc<GroupTable> },
    Product { left: FiniteRing, right: FiniteRing },
    EndC4C2,
    Quotient { parent: FiniteRing, reps: Vec<u32>, coset: Vec<u32> },
    Corner { parent: FiniteRing, elems: Vec<u32>, local: Vec<u32> },
    Semidirect { b: FiniteRing, a: FiniteRing, f: Vec<u32>, g: Vec<u32> },
}

#[derive(Debug)]
pub(crate) struct RingInner {
    order: usize,
    zero: usize,
    one: usize,
    characteristic: usize,
    tag: String,
    field: Option<FieldSpec>,
    kind: Kind,
    table: OnceLock<Box<[u32]>>,
    units: OnceLock<UnitTable>,
}

/// A finite ring with identity. Cloning is cheap; the structure is immutable.
#[derive(Debug, Clone)]
pub struct FiniteRing(Arc<RingInner>);

#[inline]
fn decode(mut idx: usize, q: usize, len: usize, out: &mut [usize]) {
    for d in out.iter_mut().take(len) {
        *d = idx % q;
        idx /= q;
    }
}

#[inline]
fn encode(digits: &[usize], q: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * q + d)
}

impl FiniteRing {
    pub(crate) fn from_kind(order: usize, zero: usize, one: usize, tag: String, kind: Kind) -> Self {
        let mut ring = FiniteRing(Arc::new(RingInner {
            order,
            zero,
            one,
            characteristic: 0,
            tag,
            field: None,
            kind,
            table: OnceLock::new(),
            units: OnceLock::new(),
        }));
        let mut acc = one;
        let mut k = 1;
        while acc != zero {
            acc = ring.add(acc, one);
            k += 1;
        }
        Arc::get_mut(&mut ring.0).expect("fresh ring is uniquely owned").characteristic = k;
        ring
    }

    pub(crate) fn with_field(self, spec: FieldSpec) -> Self {
        let mut inner = Arc::try_unwrap(self.0).expect("fresh ring is uniquely owned");
        inner.field = Some(spec);
        FiniteRing(Arc::new(inner))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn zero(&self) -> usize {
        self.0.zero
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    /// Additive order of `one`.
    pub fn characteristic(&self) -> usize {
        self.0.characteristic
    }

    /// Constructor provenance, e.g. `M(2,GF(2))`.
    pub fn tag(&self) -> &str {
        &self.0.tag
    }

    pub fn field_spec(&self) -> Option<&FieldSpec> {
        self.0.field.as_ref()
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.0.order
    }

    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub(crate) fn unit_cache(&self) -> &OnceLock<UnitTable> {
        &self.0.units
    }

    /// Precomputes the multiplication table when the order allows it.
    pub fn tabulate(&self) {
        let n = self.0.order;
        if n > TABLE_LIMIT || self.0.table.get().is_some() {
            return;
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(self.mul_structural(a, b) as u32);
            }
        }
        let _ = self.0.table.set(table.into_boxed_slice());
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.0.kind {
            Kind::Zn { n } => (a + b) % n,
            Kind::Poly { base, low, .. } => coordwise_add(base, low.len(), a, b),
            Kind::Matrix { base, npos, .. } => coordwise_add(base, *npos, a, b),
            Kind::GroupAlgebra { base, group } => coordwise_add(base, group.order(), a, b),
            Kind::Product { left, right } => {
                let w = right.order();
                left.add(a / w, b / w) * w + right.add(a % w, b % w)
            }
            Kind::EndC4C2 => {
                let (x, y) = (end_decode(a), end_decode(b));
                end_encode([(x[0] + y[0]) % 4, (x[1] + y[1]) % 4, (x[2] + y[2]) % 2, (x[3] + y[3]) % 2])
            }
            Kind::Quotient { parent, reps, coset } => coset[parent.add(reps[a] as usize, reps[b] as usize)] as usize,
            Kind::Corner { parent, elems, local } => local[parent.add(elems[a] as usize, elems[b] as usize)] as usize,
            Kind::Semidirect { b: bring, a: aring, .. } => {
                let w = bring.order();
                aring.add(a / w, b / w) * w + bring.add(a % w, b % w)
            }
        }
    }

    pub fn neg(&self, a: usize) -> usize {
        match &self.0.kind {
            Kind::Zn { n } => (n - a) % n,
            Kind::Poly { base, low, .. } => coordwise_neg(base, low.len(), a),
            Kind::Matrix { base, npos, .. } => coordwise_neg(base, *npos, a),
            Kind::GroupAlgebra { base, group } => coordwise_neg(base, group.order(), a),
            Kind::Product { left, right } => {
                let w = right.order();
                left.neg(a / w) * w + right.neg(a % w)
            }
            Kind::EndC4C2 => {
                let x = end_decode(a);
                end_encode([(4 - x[0]) % 4, (4 - x[1]) % 4, x[2], x[3]])
            }
            Kind::Quotient { parent, reps, coset } => coset[parent.neg(reps[a] as usize)] as usize,
            Kind::Corner { parent, elems, local } => local[parent.neg(elems[a] as usize)] as usize,
            Kind::Semidirect { b: bring, a: aring, .. } => {
                let w = bring.order();
                aring.neg(a / w) * w + bring.neg(a % w)
            }
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        if let Some(t) = self.0.table.get() {
            return t[a * self.0.order + b] as usize;
        }
        self.mul_structural(a, b)
    }

    fn mul_structural(&self, a: usize, b: usize) -> usize {
        match &self.0.kind {
            Kind::Zn { n } => a * b % n,
            Kind::Poly { base, low, .. } => poly_mul(base, low, a, b),
            Kind::Matrix { base, m, slot, npos } => matrix_mul(base, *m, slot, *npos, a, b),
            Kind::GroupAlgebra { base, group } => group_algebra_mul(base, group, a, b),
            Kind::Product { left, right } => {
                let w = right.order();
                left.mul(a / w, b / w) * w + right.mul(a % w, b % w)
            }
            Kind::EndC4C2 => {
                let (x, y) = (end_decode(a), end_decode(b));
                // [[a, b], [c, d]] with a, b mod 4 (b even) and c, d mod 2
                end_encode([
                    (x[0] * y[0] + x[1] * y[2]) % 4,
                    (x[0] * y[1] + x[1] * y[3]) % 4,
                    (x[2] * y[0] + x[3] * y[2]) % 2,
                    (x[3] * y[3]) % 2,
                ])
            }
            Kind::Quotient { parent, reps, coset } => coset[parent.mul(reps[a] as usize, reps[b] as usize)] as usize,
            Kind::Corner { parent, elems, local } => local[parent.mul(elems[a] as usize, elems[b] as usize)] as usize,
            Kind::Semidirect { b: bring, a: aring, f, g } => {
                // (b, a)(b', a') = (b f(a') + b' g(a), a a')
                let w = bring.order();
                let (b1, a1) = (a % w, a / w);
                let (b2, a2) = (b % w, b / w);
                let bpart = bring.add(bring.mul(b1, f[a2] as usize), bring.mul(b2, g[a1] as usize));
                aring.mul(a1, a2) * w + bpart
            }
        }
    }

    /// `n` when the ring is `Z_n` with index `i` standing for the residue `i`.
    /// Prime fields qualify: their elements are single digits modulo `p`.
    fn residue_modulus(&self) -> Option<usize> {
        match (&self.0.kind, &self.0.field) {
            (Kind::Zn { n }, _) => Some(*n),
            (_, Some(f)) if f.k == 1 => Some(f.p as usize),
            _ => None,
        }
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut base = x;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `k * x` by repeated doubling; negative `k` negates.
    pub fn scalar(&self, k: i64, x: usize) -> usize {
        let mut acc = self.zero();
        let mut base = if k < 0 { self.neg(x) } else { x };
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            e >>= 1;
        }
        acc
    }

    /// The image of an integer, `k * 1`.
    pub fn from_int(&self, k: i64) -> usize {
        self.scalar(k, self.one())
    }

    pub fn is_commutative(&self) -> bool {
        match &self.0.kind {
            Kind::Zn { .. } | Kind::Poly { .. } => true,
            // E11 E12 = E12 but E12 E11 = 0
            Kind::Matrix { base, m, .. } => *m == 1 && base.is_commutative() || base.is_trivial(),
            Kind::GroupAlgebra { base, group } => base.is_commutative() && group.is_abelian(),
            Kind::Product { left, right } => left.is_commutative() && right.is_commutative(),
            Kind::Quotient { parent, .. } if parent.is_commutative() => true,
            _ => {
                let n = self.order();
                (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
            }
        }
    }

    /// Elements commuting with every element of the ring.
    pub fn is_central(&self, z: usize) -> bool {
        self.elements().all(|x| self.mul(z, x) == self.mul(x, z))
    }

    /// Element `c * x^i` of a polynomial quotient, reduced.
    pub fn poly_generator(&self) -> Option<usize> {
        match &self.0.kind {
            Kind::Poly { base, low, .. } => {
                if low.len() >= 2 {
                    Some(base.order())
                } else {
                    // x = -c0 when the modulus is linear
                    Some(base.neg(low[0]))
                }
            }
            _ => None,
        }
    }

    /// Basis element of a group algebra for group element `g`.
    pub fn group_element(&self, g: usize) -> Option<usize> {
        match &self.0.kind {
            Kind::GroupAlgebra { base, group } if g < group.order() => {
                let mut digits = [0usize; MAX_COORDS];
                digits[g] = base.one();
                Some(encode(&digits[..group.order()], base.order()))
            }
            _ => None,
        }
    }

    pub fn group(&self) -> Option<&GroupTable> {
        match &self.0.kind {
            Kind::GroupAlgebra { group, .. } => Some(group),
            _ => None,
        }
    }

    /// Coefficient vector of a coefficient-vector ring element.
    pub fn coordinates(&self, x: usize) -> Option<Vec<usize>> {
        let (base, len) = match &self.0.kind {
            Kind::Poly { base, low, .. } => (base, low.len()),
            Kind::Matrix { base, npos, .. } => (base, *npos),
            Kind::GroupAlgebra { base, group } => (base, group.order()),
            _ => return None,
        };
        let mut d = vec![0usize; len];
        decode(x, base.order(), len, &mut d);
        Some(d)
    }

    /// Inverse of [`FiniteRing::coordinates`].
    pub fn from_coordinates(&self, coords: &[usize]) -> Option<usize> {
        let (base, len) = match &self.0.kind {
            Kind::Poly { base, low, .. } => (base, low.len()),
            Kind::Matrix { base, npos, .. } => (base, *npos),
            Kind::GroupAlgebra { base, group } => (base, group.order()),
            _ => return None,
        };
        (coords.len() == len && coords.iter().all(|&c| c < base.order())).then(|| encode(coords, base.order()))
    }

    /// Base ring of a coefficient-vector ring.
    pub fn base_ring(&self) -> Option<&FiniteRing> {
        match &self.0.kind {
            Kind::Poly { base, .. } | Kind::Matrix { base, .. } | Kind::GroupAlgebra { base, .. } => Some(base),
            _ => None,
        }
    }

    pub fn label(&self, x: usize) -> String {
        match &self.0.kind {
            Kind::Zn { .. } => x.to_string(),
            Kind::Poly { base, low, var } => {
                let mut d = vec![0usize; low.len()];
                decode(x, base.order(), low.len(), &mut d);
                let terms: Vec<(usize, String)> = d
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let mono = match i {
                            0 => "1".to_string(),
                            1 => var.to_string(),
                            _ => format!("{var}^{i}"),
                        };
                        (c, mono)
                    })
                    .collect();
                sum_label(base, &terms)
            }
            Kind::Matrix { base, m, slot, npos } => {
                let mut d = vec![0usize; *npos];
                decode(x, base.order(), *npos, &mut d);
                let mut s = String::from("[");
                for i in 0..*m {
                    s.push('[');
                    for j in 0..*m {
                        let v = match slot[i * m + j] {
                            ABSENT => base.zero(),
                            k => d[k as usize],
                        };
                        if j > 0 {
                            s.push(',');
                        }
                        s.push_str(&base.label(v));
                    }
                    s.push(']');
                    if i + 1 < *m {
                        s.push(',');
                    }
                }
                s.push(']');
                s
            }
            Kind::GroupAlgebra { base, group } => {
                let mut d = vec![0usize; group.order()];
                decode(x, base.order(), group.order(), &mut d);
                let terms: Vec<(usize, String)> = d.iter().enumerate().map(|(g, &c)| (c, group.label(g))).collect();
                sum_label(base, &terms)
            }
            Kind::Product { left, right } => {
                let w = right.order();
                format!("({}, {})", left.label(x / w), right.label(x % w))
            }
            Kind::EndC4C2 => {
                let e = end_decode(x);
                format!("[[{},{}],[{},{}]]", e[0], e[1], e[2], e[3])
            }
            Kind::Quotient { parent, reps, .. } => format!("[{}]", parent.label(reps[x] as usize)),
            Kind::Corner { parent, elems, .. } => parent.label(elems[x] as usize),
            Kind::Semidirect { b, a, .. } => {
                let w = b.order();
                format!("({}, {})", b.label(x % w), a.label(x / w))
            }
        }
    }

    /// Checks the ring axioms: additive group laws on every element, additive
    /// commutativity and the multiplicative laws exhaustively for orders up to
    /// 64, and on `10^5` seeded random triples above that.
    pub fn validate_axioms(&self, seed: u64) -> std::result::Result<(), String> {
        let n = self.order();
        let (zero, one) = (self.zero(), self.one());
        for a in self.elements() {
            if self.add(a, zero) != a || self.add(zero, a) != a {
                return Err(format!("zero is not additive identity at {a}"));
            }
            if self.add(a, self.neg(a)) != zero {
                return Err(format!("neg fails at {a}"));
            }
            if self.mul(a, one) != a || self.mul(one, a) != a {
                return Err(format!("one is not multiplicative identity at {a}"));
            }
        }
        let check = |a: usize, b: usize, c: usize| -> std::result::Result<(), String> {
            if self.add(a, b) != self.add(b, a) {
                return Err(format!("addition not commutative at ({a},{b})"));
            }
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(format!("addition not associative at ({a},{b},{c})"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(format!("multiplication not associative at ({a},{b},{c})"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(format!("left distributivity fails at ({a},{b},{c})"));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return Err(format!("right distributivity fails at ({a},{b},{c})"));
            }
            Ok(())
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..100_000 {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        if self.characteristic() == 0 || !n.is_multiple_of(self.characteristic()) {
            return Err("characteristic does not divide the order".into());
        }
        Ok(())
    }
}

fn sum_label(base: &FiniteRing, terms: &[(usize, String)]) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if *c == base.zero() {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        if *c == base.one() {
            out.push_str(mono);
        } else {
            let coef = base.label(*c);
            let coef = if matches!(base.kind(), Kind::Zn { .. }) { coef } else { format!("({coef})") };
            if mono == "1" {
                out.push_str(&coef);
            } else {
                let _ = write!(out, "{coef}*{mono}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coordwise_add(base: &FiniteRing, len: usize, a: usize, b: usize) -> usize {
    let q = base.order();
    let mut da = [0usize; MAX_COORDS];
    let mut db = [0usize; MAX_COORDS];
    decode(a, q, len, &mut da);
    decode(b, q, len, &mut db);
    for i in 0..len {
        da[i] = base.add(da[i], db[i]);
    }
    encode(&da[..len], q)
}

fn coordwise_neg(base: &FiniteRing, len: usize, a: usize) -> usize {
    let q = base.order();
    let mut d = [0usize; MAX_COORDS];
    decode(a, q, len, &mut d);
    for x in d.iter_mut().take(len) {
        *x = base.neg(*x);
    }
    encode(&d[..len], q)
}

fn poly_mul(base: &FiniteRing, low: &[usize], a: usize, b: usize) -> usize {
    if let Some(n) = base.residue_modulus() {
        return poly_mul_zn(n, low, a, b);
    }
    let q = base.order();
    let d = low.len();
    let mut da = [0usize; MAX_COORDS];
    let mut db = [0usize; MAX_COORDS];
    decode(a, q, d, &mut da);
    decode(b, q, d, &mut db);
    let zero = base.zero();
    let mut prod = [zero; 2 * MAX_COORDS];
    for i in 0..d {
        if da[i] == zero {
            continue;
        }
        for j in 0..d {
            if db[j] != zero {
                prod[i + j] = base.add(prod[i + j], base.mul(da[i], db[j]));
            }
        }
    }
    // x^d = -sum low[i] x^i
    for deg in (d..2 * d - 1).rev() {
        let c = prod[deg];
        if c == zero {
            continue;
        }
        prod[deg] = zero;
        for (i, &fi) in low.iter().enumerate() {
            if fi != zero {
                prod[deg - d + i] = base.sub(prod[deg - d + i], base.mul(c, fi));
            }
        }
    }
    encode(&prod[..d], q)
}

/// `poly_mul` specialised to `Z_n` coefficients.
fn poly_mul_zn(n: usize, low: &[usize], a: usize, b: usize) -> usize {
    let d = low.len();
    let mut da = [0usize; MAX_COORDS];
    let mut db = [0usize; MAX_COORDS];
    decode(a, n, d, &mut da);
    decode(b, n, d, &mut db);
    let mut prod = [0usize; 2 * MAX_COORDS];
    for i in 0..d {
        if da[i] == 0 {
            continue;
        }
        for j in 0..d {
            prod[i + j] += da[i] * db[j];
        }
    }
    for c in prod.iter_mut().take(2 * d - 1) {
        *c %= n;
    }
    for deg in (d..2 * d - 1).rev() {
        let c = prod[deg] % n;
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &fi) in low.iter().enumerate() {
            // subtract c * f_i
            prod[deg - d + i] = (prod[deg - d + i] + n * n - c * fi % n) % n;
        }
    }
    encode(&prod[..d], n)
}

fn matrix_mul(base: &FiniteRing, m: usize, slot: &[u32], npos: usize, a: usize, b: usize) -> usize {
    let q = base.order();
    let mut da = [0usize; MAX_COORDS];
    let mut db = [0usize; MAX_COORDS];
    decode(a, q, npos, &mut da);
    decode(b, q, npos, &mut db);
    let zero = base.zero();
    let entry = |d: &[usize], i: usize, j: usize| match slot[i * m + j] {
        ABSENT => zero,
        k => d[k as usize],
    };
    let mut out = [zero; MAX_COORDS];
    for i in 0..m {
        for j in 0..m {
            let k_slot = slot[i * m + j];
            if k_slot == ABSENT {
                continue;
            }
            let mut acc = zero;
            for k in 0..m {
                let x = entry(&da, i, k);
                if x == zero {
                    continue;
                }
                let y = entry(&db, k, j);
                if y != zero {
                    acc = base.add(acc, base.mul(x, y));
                }
            }
            out[k_slot as usize] = acc;
        }
    }
    encode(&out[..npos], q)
}

fn group_algebra_mul(base: &FiniteRing, group: &GroupTable, a: usize, b: usize) -> usize {
    let q = base.order();
    let n = group.order();
    if let Some(modulus) = base.residue_modulus() {
        let mut da = [0usize; MAX_COORDS];
        let mut db = [0usize; MAX_COORDS];
        decode(a, q, n, &mut da);
        decode(b, q, n, &mut db);
        let mut out = [0usize; MAX_COORDS];
        for g in 0..n {
            if da[g] == 0 {
                continue;
            }
            for h in 0..n {
                if db[h] != 0 {
                    out[group.mul(g, h)] += da[g] * db[h];
                }
            }
        }
        for c in out.iter_mut().take(n) {
            *c %= modulus;
        }
        return encode(&out[..n], q);
    }
    let mut da = [0usize; MAX_COORDS];
    let mut db = [0usize; MAX_COORDS];
    decode(a, q, n, &mut da);
    decode(b, q, n, &mut db);
    let zero = base.zero();
    let mut out = [zero; MAX_COORDS];
    for (g, &x) in da[..n].iter().enumerate() {
        if x == zero {
            continue;
        }
        for (h, &y) in db[..n].iter().enumerate() {
            if y != zero {
                let gh = group.mul(g, h);
                out[gh] = base.add(out[gh], base.mul(x, y));
            }
        }
    }
    encode(&out[..n], q)
}

fn end_decode(x: usize) -> [usize; 4] {
    // index = a + 4*(b/2) + 8*c + 16*d
    [x % 4, 2 * ((x / 4) % 2), (x / 8) % 2, (x / 16) % 2]
}

fn end_encode(e: [usize; 4]) -> usize {
    e[0] + 4 * (e[1] / 2) + 8 * e[2] + 16 * e[3]
}
