//! Small integer helpers shared by the constructors and formulas.

use num_bigint::BigUint;
use num_traits::Zero;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    match factorize(q).as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// Prime-power parts of `n`, e.g. 12 -> [4, 3].
pub fn primary_parts(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, e)| p.pow(e)).collect()
}

/// Exponent of `p` in `n`, with `n = 0` reported as `None`.
pub fn valuation(n: &BigUint, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    Some(v)
}

/// Exact `log_p(n)` when `n` is a power of `p`.
pub fn exact_log(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut n = n;
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (n == 1).then_some(k)
}

pub fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Euler's totient, used for the characteristic exclusion checks.
pub fn totient(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}
