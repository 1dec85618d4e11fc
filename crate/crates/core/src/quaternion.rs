//! Split quaternions `a + b i + c s + d is` with `i^2 = -1`, `s^2 = 1`, `si = -is`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Num, One, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitQuaternion<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

pub trait Coefficient: Clone + Num + Neg<Output = Self> {}
impl<T: Clone + Num + Neg<Output = T>> Coefficient for T {}

impl<T: Coefficient> SplitQuaternion<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_scalar(a: T) -> Self {
        Self::new(a, T::zero(), T::zero(), T::zero())
    }

    pub fn one() -> Self {
        Self::from_scalar(T::one())
    }

    pub fn zero() -> Self {
        Self::from_scalar(T::zero())
    }

    pub fn i() -> Self {
        Self::new(T::zero(), T::one(), T::zero(), T::zero())
    }

    pub fn s() -> Self {
        Self::new(T::zero(), T::zero(), T::one(), T::zero())
    }

    pub fn is() -> Self {
        Self::new(T::zero(), T::zero(), T::zero(), T::one())
    }

    /// The real part `a`.
    pub fn re(&self) -> &T {
        &self.a
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(
            k.clone() * self.a.clone(),
            k.clone() * self.b.clone(),
            k.clone() * self.c.clone(),
            k.clone() * self.d.clone(),
        )
    }
}

pub fn sq_mul<T: Coefficient>(x: &SplitQuaternion<T>, y: &SplitQuaternion<T>) -> SplitQuaternion<T> {
    let (a1, b1, c1, d1) = (&x.a, &x.b, &x.c, &x.d);
    let (a2, b2, c2, d2) = (&y.a, &y.b, &y.c, &y.d);
    let m = |p: &T, q: &T| p.clone() * q.clone();
    SplitQuaternion {
        a: m(a1, a2) - m(b1, b2) + m(c1, c2) + m(d1, d2),
        b: m(a1, b2) + m(b1, a2) - m(c1, d2) + m(d1, c2),
        c: m(a1, c2) + m(c1, a2) - m(b1, d2) + m(d1, b2),
        d: m(a1, d2) + m(d1, a2) + m(b1, c2) - m(c1, b2),
    }
}

pub fn sq_conj<T: Coefficient>(x: &SplitQuaternion<T>) -> SplitQuaternion<T> {
    SplitQuaternion::new(x.a.clone(), -x.b.clone(), -x.c.clone(), -x.d.clone())
}

/// `a^2 + b^2 - c^2 - d^2`
pub fn sq_norm<T: Coefficient>(x: &SplitQuaternion<T>) -> T {
    let sq = |v: &T| v.clone() * v.clone();
    sq(&x.a) + sq(&x.b) - sq(&x.c) - sq(&x.d)
}

/// Square-and-multiply; `x^0 = 1`.
pub fn sq_pow<T: Coefficient>(x: &SplitQuaternion<T>, mut e: u64) -> SplitQuaternion<T> {
    let mut acc = SplitQuaternion::one();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = sq_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = sq_mul(&base, &base);
        }
    }
    acc
}

/// Inverse of a norm `+-1` element: `N(x) conj(x)`.
pub fn sq_inverse<T: Coefficient>(x: &SplitQuaternion<T>) -> Option<SplitQuaternion<T>> {
    let n = sq_norm(x);
    if n.is_one() || (-n.clone()).is_one() {
        Some(sq_conj(x).scale(&n))
    } else {
        None
    }
}

impl<T: Coefficient> Add for SplitQuaternion<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl<T: Coefficient> Sub for SplitQuaternion<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl<T: Coefficient> Neg for SplitQuaternion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl<T: Coefficient> Mul for SplitQuaternion<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        sq_mul(&self, &o)
    }
}

impl<T: Coefficient + fmt::Display> fmt::Display for SplitQuaternion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}s + {}is", self.a, self.b, self.c, self.d)
    }
}

/// The element `z = (1 + 4i) + (3 + 3i)s`, of norm -1 with `z^2 = 2z + 1`.
pub fn obstruction_z() -> SplitQuaternion<BigInt> {
    let n = |v: i64| BigInt::from(v);
    SplitQuaternion::new(n(1), n(4), n(3), n(3))
}

/// `(P_j, P_{j-1})` with `z^j = P_j z + P_{j-1}` whenever `z^2 = 2z + 1`.
pub fn pell_pair(j: u64) -> (BigInt, BigInt) {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
    for _ in 0..j {
        let next = &cur * 2 + &prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionCertificate {
    pub k: u64,
    #[serde(serialize_with = "as_string")]
    pub norm_value: BigInt,
    #[serde(serialize_with = "as_string")]
    pub re_value: BigInt,
    pub nonzero: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `N(z^{8k} - 1)` and `Re(z^{8k})`, computed by powering and checked against
/// the two-term recurrence in the span of `1` and `z`.
pub fn obstruction_certificate(k: u64) -> crate::error::Result<ObstructionCertificate> {
    if k == 0 {
        return Err(crate::error::Error::InvalidArgument("k must be positive".into()));
    }
    let z = obstruction_z();
    let w = sq_pow(&z, 8 * k);
    let (p, q) = pell_pair(8 * k);
    let by_recurrence = z.scale(&p) + SplitQuaternion::from_scalar(q);
    assert_eq!(w, by_recurrence, "power and recurrence disagree");
    assert!(sq_norm(&w).is_one(), "N(z^8k) must be 1");
    let norm_value = sq_norm(&(w.clone() - SplitQuaternion::one()));
    Ok(ObstructionCertificate { k, nonzero: !norm_value.is_zero(), norm_value, re_value: w.a })
}
