//! Dense polynomials over a prime field, used to pick finite-field moduli.

/// Ascending coefficients over `Z_p`; trailing zeros trimmed.
pub(crate) fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a != 0
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Remainder of `f` modulo `g` over `Z_p` (`g` nonzero).
pub(crate) fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let g = trim(g.to_vec());
    let mut r = trim(f.to_vec());
    let lead_inv = inv_mod(*g.last().expect("nonzero divisor"), p);
    while r.len() >= g.len() {
        let shift = r.len() - g.len();
        let c = r.last().unwrap() * lead_inv % p;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * gi % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of degree `k` whose lower coefficients are the base-`p`
/// digits of `code` (constant term least significant).
pub(crate) fn monic_from_code(code: u64, p: u64, k: u32) -> Vec<u64> {
    let mut c = code;
    let mut f = Vec::with_capacity(k as usize + 1);
    for _ in 0..k {
        f.push(c % p);
        c /= p;
    }
    f.push(1);
    f
}

/// Irreducibility by trial division with every monic polynomial of degree at most `deg/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() as u32 - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let g = monic_from_code(code, p, d);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `k` over `Z_p`,
/// comparing coefficients from the highest degree down.
pub(crate) fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    (0..p.pow(k))
        .map(|code| monic_from_code(code, p, k))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
