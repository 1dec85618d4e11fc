mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use unitring::dsl::{parse_bytes, parse_ring_expr};
use unitring::gamma::{gamma_add, gamma_mul, zc2_is_unit, GammaElement};
use unitring::group::{
    abelian_invariants, census_isomorphic, direct_product, make_cyclic, make_dihedral, recognize_dihedral, GroupTable,
};
use unitring::quaternion::{sq_conj, sq_inverse, sq_mul, sq_norm, SplitQuaternion};

type Q = SplitQuaternion<BigInt>;

fn quat() -> impl Strategy<Value = Q> {
    prop::array::uniform4(any::<i64>()).prop_map(|[a, b, c, d]| Q::new(a.into(), b.into(), c.into(), d.into()))
}

fn gamma(k: u64) -> impl Strategy<Value = GammaElement<i64>> {
    (0..k as i64, -1000i64..=1000, -1000i64..=1000).prop_map(move |(t, a, b)| GammaElement::new(k, t, a, b))
}

fn abelian_group() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=8, 1..=3).prop_filter("order <= 64", |v| v.iter().product::<usize>() <= 64)
}

fn product_of_cyclics(orders: &[usize]) -> GroupTable {
    orders.iter().fold(make_cyclic(1), |g, &n| direct_product(&g, &make_cyclic(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn quaternion_laws(a in quat(), b in quat(), c in quat()) {
        prop_assert_eq!(sq_mul(&sq_mul(&a, &b), &c), sq_mul(&a, &sq_mul(&b, &c)));
        prop_assert_eq!(sq_conj(&sq_mul(&a, &b)), sq_mul(&sq_conj(&b), &sq_conj(&a)));
        prop_assert_eq!(sq_norm(&sq_mul(&a, &b)), sq_norm(&a) * sq_norm(&b));
        prop_assert_eq!(sq_mul(&a, &sq_conj(&a)), Q::from_scalar(sq_norm(&a)));
    }

    #[test]
    fn quaternion_inverses(seed in any::<u64>()) {
        let u = common::random_norm_pm1(&mut common::rng(seed));
        let inv = sq_inverse(&u).expect("norm +-1");
        prop_assert_eq!(sq_mul(&u, &inv), Q::one());
        prop_assert_eq!(sq_mul(&inv, &u), Q::one());
    }

    #[test]
    fn gamma_ring_laws((k, x, y, z) in (1u64..=12).prop_flat_map(|k| (Just(k), gamma(k), gamma(k), gamma(k)))) {
        let m = |a: &GammaElement<i64>, b: &GammaElement<i64>| gamma_mul(k, a, b);
        let p = |a: &GammaElement<i64>, b: &GammaElement<i64>| gamma_add(k, a, b);
        prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
        prop_assert_eq!(m(&x, &p(&y, &z)), p(&m(&x, &y), &m(&x, &z)));
        prop_assert_eq!(m(&p(&x, &y), &z), p(&m(&x, &z), &m(&y, &z)));
        prop_assert_eq!(m(&GammaElement::one(), &x), x.clone());
        prop_assert_eq!(m(&x, &GammaElement::one()), x);
    }

    #[test]
    fn parser_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        match parse_bytes(&bytes) {
            Ok(_) => {}
            Err(e) => prop_assert!(e.offset <= bytes.len()),
        }
    }

    #[test]
    fn parser_roundtrip(seed in any::<u64>()) {
        let text = common::gen_expr(&mut common::rng(seed), 3);
        let ast = parse_ring_expr(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(parse_ring_expr(&ast.to_string()).ok(), Some(ast));
    }

    #[test]
    fn abelian_rebuild(orders in abelian_group()) {
        let g = product_of_cyclics(&orders);
        let inv = abelian_invariants(&g).unwrap();
        prop_assert_eq!(inv.order() as usize, g.order());
        let rebuilt = product_of_cyclics(&inv.factors().iter().map(|&f| f as usize).collect::<Vec<_>>());
        prop_assert!(census_isomorphic(&g, &rebuilt));
    }
}

#[test]
fn zc2_units_bounded_falsification() {
    // a + bs has an inverse c + ds iff ac + bd = 1 and ad + bc = 0
    let r = 12i64;
    for a in -r..=r {
        for b in -r..=r {
            let brute = (-r..=r).any(|c| (-r..=r).any(|d| a * c + b * d == 1 && a * d + b * c == 0));
            assert_eq!(zc2_is_unit(&a, &b), brute, "{a} + {b}s");
        }
    }
}

#[test]
fn dihedral_recognition() {
    for n in 1..=16 {
        assert_eq!(recognize_dihedral(&make_dihedral(2 * n).unwrap()), Some(n));
    }
    for n in 3..=32 {
        assert_eq!(recognize_dihedral(&make_cyclic(n)), None);
    }
}

#[test]
fn seeded_suites() {
    for seed in [3, 4, 5] {
        common::quaternion_laws(seed, 500).unwrap();
        common::gamma_ring_laws(seed, 500).unwrap();
        assert!(common::semidirect_law(seed, 10).unwrap() >= 10);
        common::parser_fuzz(seed, 20_000).unwrap();
    }
}

#[test]
fn roundtrip_200_cases() {
    common::roundtrip_corpus(17, 200).unwrap();
}
