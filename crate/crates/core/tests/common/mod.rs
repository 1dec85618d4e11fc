//! Seeded property suites shared by the acceptance run and the property tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unitring::dsl::{parse_bytes, parse_ring_expr};
use unitring::gamma::{
    central_homomorphisms, gamma_add, gamma_mul, semidirect_unit_check, GammaElement, SemidirectSpec,
};
use unitring::quaternion::{sq_conj, sq_inverse, sq_mul, sq_norm, SplitQuaternion};
use unitring::ring::{make_gf, make_poly_quotient, make_product, make_zn, Budget, FiniteRing};
use unitring::units::unit_count;
use unitring::verify::build;

pub type Q = SplitQuaternion<BigInt>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_q(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    let mut c = || BigInt::from(rng.gen_range(-bound..=bound));
    Q::new(c(), c(), c(), c())
}

/// An even-length product of norm -1 elements (norm 1), or an odd one (norm -1).
pub fn random_norm_pm1(rng: &mut ChaCha8Rng) -> Q {
    let z = Q::new(1.into(), 4.into(), 3.into(), 3.into());
    let pool = [Q::s(), Q::is(), z.clone(), sq_conj(&z), Q::i()];
    let len = rng.gen_range(1..=6);
    (0..len).fold(Q::one(), |acc, _| sq_mul(&acc, &pool[rng.gen_range(0..pool.len())]))
}

pub fn quaternion_laws(seed: u64, samples: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    for _ in 0..samples {
        let (a, b, c) = (random_q(&mut rng, 1 << 40), random_q(&mut rng, 1 << 40), random_q(&mut rng, 1 << 40));
        if sq_mul(&sq_mul(&a, &b), &c) != sq_mul(&a, &sq_mul(&b, &c)) {
            return Err(format!("associativity fails at {a}, {b}, {c}"));
        }
        if sq_conj(&sq_mul(&a, &b)) != sq_mul(&sq_conj(&b), &sq_conj(&a)) {
            return Err(format!("conjugation fails at {a}, {b}"));
        }
        if sq_norm(&sq_mul(&a, &b)) != sq_norm(&a) * sq_norm(&b) {
            return Err(format!("norm fails at {a}, {b}"));
        }
        let u = random_norm_pm1(&mut rng);
        let n = sq_norm(&u);
        if n != BigInt::from(1) && n != BigInt::from(-1) {
            return Err(format!("sampler produced norm {n}"));
        }
        let inv = sq_inverse(&u).ok_or_else(|| format!("no inverse for {u}"))?;
        if sq_mul(&u, &inv) != Q::one() || sq_mul(&inv, &u) != Q::one() {
            return Err(format!("inverse fails at {u}"));
        }
        // a generic element has norm other than +-1 and no integral inverse
        if sq_norm(&a).magnitude() > &1u32.into() && sq_inverse(&a).is_some() {
            return Err(format!("{a} has an inverse but norm {}", sq_norm(&a)));
        }
    }
    Ok(())
}

pub type G = GammaElement<i64>;

pub fn random_gamma(rng: &mut ChaCha8Rng, k: u64) -> G {
    G::new(k, rng.gen_range(0..k as i64), rng.gen_range(-50..=50), rng.gen_range(-50..=50))
}

pub fn gamma_ring_laws(seed: u64, samples: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    for _ in 0..samples {
        let k = rng.gen_range(1..=12);
        let (x, y, z) = (random_gamma(&mut rng, k), random_gamma(&mut rng, k), random_gamma(&mut rng, k));
        let m = |a: &G, b: &G| gamma_mul(k, a, b);
        let a = |a: &G, b: &G| gamma_add(k, a, b);
        if m(&m(&x, &y), &z) != m(&x, &m(&y, &z)) {
            return Err(format!("k={k}: associativity at {x}, {y}, {z}"));
        }
        if m(&x, &a(&y, &z)) != a(&m(&x, &y), &m(&x, &z)) || m(&a(&x, &y), &z) != a(&m(&x, &z), &m(&y, &z)) {
            return Err(format!("k={k}: distributivity at {x}, {y}, {z}"));
        }
        if m(&G::one(), &x) != x || m(&x, &G::one()) != x {
            return Err(format!("k={k}: identity at {x}"));
        }
    }
    Ok(())
}

/// Small rings for the semidirect construction.
pub fn semidirect_pool() -> Vec<(String, FiniteRing)> {
    let b = Budget::default();
    let gf2 = make_gf(2, 1).unwrap();
    vec![
        ("Z2".into(), make_zn(2)),
        ("Z3".into(), make_zn(3)),
        ("Z4".into(), make_zn(4)),
        ("Z6".into(), make_zn(6)),
        ("GF4".into(), make_gf(2, 2).unwrap()),
        ("F2[x]/(x^2)".into(), make_poly_quotient(&gf2, &[0, 0, 1], b).unwrap()),
        ("F2xF2".into(), make_product(&gf2, &gf2, b).unwrap()),
        ("Z2[C2]".into(), build("GA(Z(2),C(2))", b).unwrap()),
        ("M2(F2)".into(), build("M(2,GF(2))", b).unwrap()),
        ("UT2(F2)".into(), build("UT(2,GF(2))", b).unwrap()),
    ]
}

/// `|T^x| = |B| |A^x|` together with the conjugation action, for random
/// `(B, A, f, g)` drawn from the pool.
pub fn semidirect_law(seed: u64, samples: usize) -> Result<usize, String> {
    let mut rng = rng(seed);
    let pool = semidirect_pool();
    let mut tried = 0;
    let mut attempts = 0;
    while tried < samples && attempts < 50 * samples {
        attempts += 1;
        let (bn, bring) = &pool[rng.gen_range(0..pool.len())];
        let (an, aring) = &pool[rng.gen_range(0..pool.len())];
        if bring.order() * aring.order() > 256 {
            continue;
        }
        let homs = central_homomorphisms(aring, bring);
        if homs.is_empty() {
            continue;
        }
        let f = homs[rng.gen_range(0..homs.len())].clone();
        let g = homs[rng.gen_range(0..homs.len())].clone();
        let spec = SemidirectSpec::new(bring, aring, f, g).map_err(|e| format!("{bn}, {an}: {e}"))?;
        let ok = semidirect_unit_check(&spec, Budget::default()).map_err(|e| e.to_string())?;
        if !ok {
            return Err(format!("semidirect law fails for B = {bn}, A = {an}"));
        }
        let t = unitring::gamma::semidirect_ring(&spec, Budget::default()).map_err(|e| e.to_string())?;
        if unit_count(&t) != bring.order() * unit_count(aring) {
            return Err(format!("|T^x| != |B||A^x| for B = {bn}, A = {an}"));
        }
        tried += 1;
    }
    if tried < samples {
        return Err(format!("only {tried} semidirect samples found"));
    }
    Ok(tried)
}

/// Random byte strings, biased toward grammar tokens. Every input must give
/// an expression or a diagnostic whose offset lies inside the input.
pub fn parser_fuzz(seed: u64, inputs: usize) -> Result<usize, String> {
    const TOKENS: &[&[u8]] = &[
        b"Z(",
        b"GF(",
        b"M(",
        b"UT(",
        b"GA(",
        b"PQ(",
        b"Gamma(",
        b"EndC4C2",
        b"Quot(",
        b"C(",
        b"D(",
        b"x",
        b"(",
        b")",
        b",",
        b"[",
        b"]",
        b";",
        b"+",
        b"*",
        b"^",
        b"r",
        b"s",
        b"g",
        b"1",
        b"2",
        b"4",
        b"12",
        b" ",
        b"-",
        b"99999999999999999999999",
    ];
    let mut rng = rng(seed);
    let mut ok = 0;
    for _ in 0..inputs {
        let len = rng.gen_range(0..40);
        let mut buf = Vec::with_capacity(len * 3);
        for _ in 0..len {
            if rng.gen_bool(0.3) {
                buf.push(rng.gen());
            } else {
                buf.extend_from_slice(TOKENS[rng.gen_range(0..TOKENS.len())]);
            }
        }
        let res = std::panic::catch_unwind(|| parse_bytes(&buf));
        match res {
            Ok(Ok(_)) => ok += 1,
            Ok(Err(e)) if e.offset <= buf.len() => {}
            Ok(Err(e)) => return Err(format!("offset {} beyond input of length {}", e.offset, buf.len())),
            Err(_) => return Err(format!("parser panicked on {:?}", String::from_utf8_lossy(&buf))),
        }
    }
    Ok(ok)
}

#[derive(Clone, Copy, PartialEq)]
enum Ctx {
    Plain,
    Dihedral(u64),
    Cyclic(u64),
    Poly,
}

fn gen_elem(rng: &mut ChaCha8Rng, ctx: Ctx) -> String {
    let n = rng.gen_range(1..=3);
    let mut terms = Vec::new();
    for _ in 0..n {
        let g = match (ctx, rng.gen_range(0..3)) {
            (Ctx::Dihedral(_), 0) => "s".to_string(),
            (Ctx::Dihedral(m), 1) => {
                let e = rng.gen_range(1..=m);
                let s = if rng.gen_bool(0.5) { "*s" } else { "" };
                if e == 1 {
                    format!("r{s}")
                } else {
                    format!("r^{e}{s}")
                }
            }
            (Ctx::Cyclic(m), 0 | 1) => format!("g^{}", rng.gen_range(1..=m)),
            (Ctx::Poly, 0 | 1) => format!("x^{}", rng.gen_range(1..=4)),
            _ => "1".to_string(),
        };
        if rng.gen_bool(0.4) {
            terms.push(format!("{}*{g}", rng.gen_range(2..=5)));
        } else {
            terms.push(g);
        }
    }
    terms.join("+")
}

fn gen_atom(rng: &mut ChaCha8Rng, depth: u32) -> (String, Ctx) {
    let leaf = depth == 0 || rng.gen_bool(0.35);
    let choice = if leaf { rng.gen_range(0..4) } else { rng.gen_range(0..10) };
    match choice {
        0 => (format!("Z({})", rng.gen_range(1..=12)), Ctx::Plain),
        1 => (format!("GF({})", [2, 3, 4, 5, 7, 8, 9][rng.gen_range(0..7)]), Ctx::Plain),
        2 => ("EndC4C2".into(), Ctx::Plain),
        3 => (format!("Gamma({})", rng.gen_range(1..=9)), Ctx::Plain),
        4 => (format!("M({},{})", rng.gen_range(1..=3), gen_expr(rng, depth - 1)), Ctx::Plain),
        5 => (format!("UT({},{})", rng.gen_range(1..=3), gen_expr(rng, depth - 1)), Ctx::Plain),
        6 => {
            let n = rng.gen_range(1..=6);
            (format!("GA({},D({}))", gen_expr(rng, depth - 1), 2 * n), Ctx::Dihedral(n))
        }
        7 => {
            let n = rng.gen_range(1..=6);
            (format!("GA({},C({n}))", gen_expr(rng, depth - 1)), Ctx::Cyclic(n))
        }
        8 => {
            let d = rng.gen_range(1..=4);
            let mut cs: Vec<String> = (0..d).map(|_| rng.gen_range(-3..=3).to_string()).collect();
            cs.push("1".into());
            (format!("PQ({},[{}])", gen_expr(rng, depth - 1), cs.join(",")), Ctx::Poly)
        }
        _ => {
            let (inner, ctx) = gen_atom(rng, depth - 1);
            let k = rng.gen_range(1..=3);
            let elems: Vec<String> = (0..k).map(|_| gen_elem(rng, ctx)).collect();
            (format!("Quot({inner},[{}])", elems.join(";")), ctx)
        }
    }
}

/// A random sentence of the grammar, with whitespace sprinkled in.
pub fn gen_expr(rng: &mut ChaCha8Rng, depth: u32) -> String {
    let factors = if rng.gen_bool(0.25) { rng.gen_range(2..=3) } else { 1 };
    let parts: Vec<String> = (0..factors).map(|_| gen_atom(rng, depth).0).collect();
    parts.join(if rng.gen_bool(0.5) { " x " } else { "x" })
}

/// `display(parse(t))` reparses to the same tree.
pub fn roundtrip_corpus(seed: u64, cases: usize) -> Result<(), String> {
    let mut rng = rng(seed);
    for _ in 0..cases {
        let text = gen_expr(&mut rng, 3);
        let ast = parse_ring_expr(&text).map_err(|e| format!("{text:?}: {e}"))?;
        let printed = ast.to_string();
        let again = parse_ring_expr(&printed).map_err(|e| format!("{printed:?}: {e}"))?;
        if again != ast {
            return Err(format!("{text:?} printed as {printed:?} reparses differently"));
        }
    }
    Ok(())
}
