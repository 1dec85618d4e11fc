use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{build, CheckResult, CORPUS};
use crate::gamma::{gamma_bridge_group, gamma_unit_group};
use crate::group::{
    census_isomorphic, center, direct_product, is_normal, make_cyclic, make_dihedral, recognize_dihedral,
    subgroup_generated, subgroup_table,
};
use crate::numtheory::valuation;
use crate::quaternion::{obstruction_certificate, sq_conj, sq_inverse, sq_mul, sq_norm, SplitQuaternion};
use crate::ring::{ideal_power, is_central_idempotent, is_indecomposable, make_quotient, make_zn, Budget, FiniteRing};
use crate::units::{
    gl_order, jacobson_radical, nilpotency_index, one_plus_j_is_normal, radical_by_ideal_criterion,
    radical_counting_check, rankprop_bound, un_formula, un_formula_oracle, unit_count, unit_group, unit_set,
    wild_decomposition, wild_decomposition_as_displayed,
};

#[derive(Debug, Clone, Copy, Default)]
pub struct PropOptions {
    pub seed: u64,
    pub budget: Budget,
}

fn summarize(id: &str, description: &str, failures: Vec<String>, ok_detail: String) -> CheckResult {
    if failures.is_empty() {
        CheckResult::new(id, description, true, ok_detail)
    } else {
        CheckResult::new(id, description, false, failures.join("; "))
    }
}

/// Centers and proper normal subgroups of `D_2n`, and `D_4k = C2 x D_2k` for odd `k`.
pub fn check_center_and_normal_subgroups(max_n: usize) -> CheckResult {
    let mut fails = Vec::new();
    for n in 1..=max_n {
        let g = make_dihedral(2 * n).expect("even order");
        let z = center(&g);
        if n <= 2 {
            if !g.is_abelian() {
                fails.push(format!("D{} not abelian", 2 * n));
            }
            continue;
        }
        let expected_center = if n % 2 == 1 { vec![0] } else { vec![0, n / 2] };
        if z != expected_center {
            fails.push(format!("center of D{} is {z:?}", 2 * n));
        }
        // every subgroup of a dihedral group is generated by at most two elements
        let mut subgroups: Vec<Vec<usize>> = Vec::new();
        for a in 0..g.order() {
            for b in a..g.order() {
                let h = subgroup_generated(&g, &[a, b]);
                if !subgroups.contains(&h) {
                    subgroups.push(h);
                }
            }
        }
        let mut normal: Vec<Vec<usize>> =
            subgroups.into_iter().filter(|h| h.len() < g.order() && is_normal(&g, h).unwrap_or(false)).collect();
        normal.sort();
        let mut expected: Vec<Vec<usize>> =
            (1..=n).filter(|d| n % d == 0).map(|d| subgroup_generated(&g, &[d % n])).collect();
        if n % 2 == 0 {
            for extra in [subgroup_generated(&g, &[2, n]), subgroup_generated(&g, &[2, 1 + n])] {
                let t = subgroup_table(&g, &extra).expect("subgroup");
                if extra.len() != n || recognize_dihedral(&t) != Some(n / 2) {
                    fails.push(format!("D{}: <r^2, s>-type subgroup is not D{n}", 2 * n));
                }
                expected.push(extra);
            }
        }
        expected.sort();
        expected.dedup();
        if normal != expected {
            fails.push(format!("D{}: {} proper normal subgroups, expected {}", 2 * n, normal.len(), expected.len()));
        }
        if n % 2 == 0 && (n / 2) % 2 == 1 {
            let k = n / 2;
            let p = direct_product(&make_cyclic(2), &make_dihedral(2 * k).expect("even"));
            if !census_isomorphic(&p, &g) || recognize_dihedral(&p) != Some(n) {
                fails.push(format!("D{} is not C2 x D{}", 2 * n, 2 * k));
            }
        }
    }
    summarize(
        "dihedral-subgroups",
        "dihedral centers, normal subgroups, C2 x D2k splitting",
        fails,
        format!("n = 1..={max_n}"),
    )
}

/// For `c` in 5..=24 other than 6, 8, 12, `Z_c^x` cannot sit inside a dihedral
/// center (which is elementary abelian of order at most 4).
pub fn check_characteristic_exclusion() -> CheckResult {
    let mut fails = Vec::new();
    let mut seen = Vec::new();
    for c in (5..=24).filter(|c| ![6, 8, 12].contains(c)) {
        let rep = unit_group(&make_zn(c)).expect("small");
        let inv = rep.structure.invariants().cloned().expect("abelian");
        let fits = inv.order() <= 4 && inv.factors().iter().all(|&f| f == 2);
        if fits {
            fails.push(format!("Z{c}^x = {inv} fits in a dihedral center"));
        }
        seen.push(format!("Z{c}^x={inv}"));
    }
    summarize(
        "characteristic-exclusion",
        "characteristics 5..=24 other than 6, 8, 12 are excluded",
        fails,
        seen.join(", "),
    )
}

/// Closed form against the powering census for `F_p[x]/(x^n)`.
pub fn check_un_formula(budget: Budget) -> CheckResult {
    let start = Instant::now();
    let mut cases: Vec<(u64, u32)> = Vec::new();
    for p in [2, 3, 5] {
        cases.extend((1..=8).map(|n| (p, n)));
    }
    cases.extend((9..=12).map(|n| (2, n)));
    let mut fails = Vec::new();
    for &(p, n) in &cases {
        let formula = un_formula(p, u64::from(n));
        let oracle = un_formula_oracle(p, n, budget);
        match (formula, oracle) {
            (Ok(f), Ok(o)) if f == o => {}
            (f, o) => fails.push(format!("p={p} n={n}: formula {f:?} oracle {o:?}")),
        }
    }
    let detail = format!("{} cases in {:.1}s", cases.len(), start.elapsed().as_secs_f64());
    summarize("truncated-poly-units", "unit group of F_p[x]/(x^n) in closed form", fails, detail)
}

/// Factor counts of `U_{p^(r-1)+1}` against the rank bound.
pub fn check_rank_bounds() -> CheckResult {
    let mut fails = Vec::new();
    for (p, r) in [(2u64, 2u32), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (5, 3), (7, 2)] {
        let n = p.pow(r - 1) + 1;
        let u = un_formula(p, n).expect("prime");
        let bound = rankprop_bound(p, r).expect("r >= 2") as usize;
        if wild_decomposition(p, r).ok().as_ref() != Some(&u) {
            fails.push(format!("p={p} r={r}: factorwise decomposition differs from the formula"));
        }
        let shown = wild_decomposition_as_displayed(p, r).expect("prime");
        if shown.p_rank(p) != u.p_rank(p) {
            fails.push(format!("p={p} r={r}: displayed factor count differs"));
        }
        // the bound counts C_{p-1} as one factor when p > 2
        let counted = u.p_rank(p) + usize::from(p > 2);
        if counted != bound || u.d() < bound {
            fails.push(format!("p={p} r={r}: {counted} factors, bound {bound}"));
        }
    }
    summarize("rank-bounds", "rank bounds from an element of order p^r", fails, "9 (p, r) pairs".into())
}

pub fn corpus(budget: Budget) -> Vec<(&'static str, FiniteRing)> {
    CORPUS.iter().filter_map(|&s| build(s, budget).ok().map(|r| (s, r))).collect()
}

/// Radical invariants over the corpus.
pub fn check_radical_corpus(budget: Budget) -> CheckResult {
    radical_corpus_timed(budget).0
}

/// As [`check_radical_corpus`], also returning the seconds spent on each ring.
pub fn radical_corpus_timed(budget: Budget) -> (CheckResult, Vec<(&'static str, f64)>) {
    let mut timings = Vec::new();
    let mut fails = Vec::new();
    let rings = corpus(budget);
    if rings.len() != CORPUS.len() {
        fails.push(format!("only {} of {} corpus rings built", rings.len(), CORPUS.len()));
    }
    let mut slowest = (0.0, "");
    for (name, r) in &rings {
        let start = Instant::now();
        let Ok(rep) = jacobson_radical(r) else {
            fails.push(format!("{name}: radical failed"));
            continue;
        };
        let j = rep.j_order();
        let units = unit_count(r);
        if r.order() % j != 0 || !units.is_multiple_of(j) {
            fails.push(format!("{name}: |J| = {j} does not divide |R| and |R^x|"));
        }
        if !radical_counting_check(r).unwrap_or(false) {
            fails.push(format!("{name}: counting identity"));
        }
        if !one_plus_j_is_normal(&rep) {
            fails.push(format!("{name}: 1 + J not normal"));
        }
        if nilpotency_index(&rep.radical).is_none() {
            fails.push(format!("{name}: J not nilpotent"));
        }
        if r.order() <= 256 && radical_by_ideal_criterion(r) != rep.radical.elements() {
            fails.push(format!("{name}: J differs from the ideal characterization"));
        }
        let t = start.elapsed().as_secs_f64();
        timings.push((*name, t));
        if t > slowest.0 {
            slowest = (t, name);
        }
    }
    let detail = format!("{} rings; slowest {} at {:.1}s", rings.len(), slowest.1, slowest.0);
    (summarize("radical-corpus", "radical counting identities over the corpus", fails, detail), timings)
}

/// `R` indecomposable iff `R/J^2` indecomposable, for corpus rings of order <= 256.
pub fn check_indecomposability(budget: Budget) -> CheckResult {
    let mut fails = Vec::new();
    let mut count = 0;
    for (name, r) in corpus(budget).into_iter().filter(|(_, r)| r.order() <= 256) {
        count += 1;
        let rep = jacobson_radical(&r).expect("budgeted");
        let j2 = ideal_power(&rep.radical, 2);
        let q = make_quotient(&r, &j2).expect("ideal");
        if is_indecomposable(&r).ok() != is_indecomposable(&q).ok() {
            fails.push(format!("{name}: R and R/J^2 disagree"));
        }
    }
    summarize("indecomposability", "indecomposability of R and R/J^2 agree", fails, format!("{count} rings"))
}

fn units_center(r: &FiniteRing) -> Vec<usize> {
    let units = unit_set(r);
    units.iter().copied().filter(|&u| units.iter().all(|&v| r.mul(u, v) == r.mul(v, u))).collect()
}

pub fn check_gl_orders(budget: Budget) -> CheckResult {
    let mut fails = Vec::new();
    for (m, p, k, want) in [(2u32, 2u64, 1u32, 6u32), (2, 3, 1, 48), (3, 2, 1, 168)] {
        if gl_order(m, p, k).ok() != Some(want.into()) {
            fails.push(format!("GL_{m}(F_{}) order", p.pow(k)));
        }
    }
    for m in 1..=4u32 {
        for k in 1..=3u32 {
            for p in [2u64, 3] {
                let v = gl_order(m, p, k).ok().and_then(|o| valuation(&o, p));
                if v != Some(u64::from(k * m * (m - 1) / 2)) {
                    fails.push(format!("valuation of |GL_{m}(F_{})|", p.pow(k)));
                }
            }
        }
    }
    for (q, p, k) in [(2u64, 2u64, 1u32), (3, 3, 1), (4, 2, 2)] {
        let r = build(&format!("M(2,GF({q}))"), budget).expect("small");
        if gl_order(2, p, k).ok() != Some(unit_count(&r).into()) {
            fails.push(format!("|M2(F{q})^x| differs from the GL order"));
        }
    }
    for (expr, want) in [("M(2,GF(4))", 3), ("M(2,GF(8))", 7), ("M(3,GF(2))", 1)] {
        match build(expr, budget) {
            Ok(r) => {
                let z = units_center(&r).len();
                if z != want {
                    fails.push(format!("center of {expr}^x has order {z}, expected {want}"));
                }
            }
            Err(e) => fails.push(format!("{expr}: {e}")),
        }
    }
    summarize("gl-orders", "GL orders, p-parts, and centers", fails, "GL2(F4): 3, GL2(F8): 7, GL3(F2): 1".into())
}

pub fn check_f2_dihedral_algebras(budget: Budget) -> CheckResult {
    let mut fails = Vec::new();
    match build("GA(GF(2),D(12))", budget) {
        Ok(r) => {
            let r2 = r.group_element(2).expect("r^2");
            let r4 = r.group_element(4).expect("r^4");
            let e = r.add(r2, r4);
            if !is_central_idempotent(&r, e) {
                fails.push("r^2 + r^4 is not a central idempotent of F2[D12]".into());
            }
            let f = r.sub(r.one(), e);
            if !is_central_idempotent(&r, f) || r.mul(e, f) != r.zero() {
                fails.push("1 + r^2 + r^4 is not the complementary idempotent".into());
            }
        }
        Err(e) => fails.push(format!("F2[D12]: {e}")),
    }
    match build("GA(GF(2),D(4))", budget) {
        Ok(r) => {
            let units = unit_set(&r);
            if r.order() != 16 || units.len() != 8 {
                fails.push(format!("F2[D4] has {} elements and {} units", r.order(), units.len()));
            }
            if !units.iter().all(|&u| r.mul(u, u) == r.one()) {
                fails.push("F2[D4] has a unit of order 4".into());
            }
        }
        Err(e) => fails.push(format!("F2[D4]: {e}")),
    }
    summarize(
        "f2-dihedral-algebras",
        "F2[D12] idempotent and F2[D4] units",
        fails,
        "r^2 + r^4 central idempotent; 16 elements, 8 units".into(),
    )
}

pub fn check_one_plus_two_t(budget: Budget) -> CheckResult {
    let r = match build("PQ(Z(4),[1,0,0,0,1])", budget) {
        Ok(r) => r,
        Err(e) => return CheckResult::new("one-plus-two-t", "(1 + 2t)^2 = 1", false, e.to_string()),
    };
    let two = r.from_int(2);
    let good = r.elements().filter(|&t| {
        let u = r.add(r.one(), r.mul(two, t));
        r.mul(u, u) == r.one()
    });
    let n = good.count();
    CheckResult::new(
        "one-plus-two-t",
        "(1 + 2t)^2 = 1 in Z4[x]/(x^4+1)",
        n == r.order(),
        format!("{n}/{} elements", r.order()),
    )
}

pub fn check_characteristic_two_branches(budget: Budget) -> CheckResult {
    let mut fails = Vec::new();
    let branches = [
        "Quot(PQ(Z(4),[1,0,0,0,1]),[2*x])",
        "Quot(PQ(Z(4),[1,0,0,0,1]),[2*x+2*1;1+3*x+3*x^2+x^3])",
        "Quot(PQ(Z(4),[1,0,0,0,1]),[2*x+2*1;3*1+3*x+3*x^2+x^3])",
    ];
    for b in branches {
        match build(b, budget) {
            Ok(q) if q.characteristic() == 2 => {}
            Ok(q) => fails.push(format!("{b} has characteristic {}", q.characteristic())),
            Err(e) => fails.push(format!("{b}: {e}")),
        }
    }
    // with x^4 = -1 and 2x = 2, (1 + (1 + x)^3)^2 = 1
    match build("Quot(PQ(Z(4),[1,0,0,0,1]),[2*x+2*1])", budget) {
        Ok(q) => {
            let x = q.project(q.quotient_parent().and_then(|p| p.poly_generator()).expect("x")).expect("coset");
            let y = q.pow(q.add(q.one(), x), 3);
            let w = q.add(q.one(), y);
            if q.mul(w, w) != q.one() {
                fails.push("(1 + (1 + x)^3)^2 != 1 modulo 2x - 2".into());
            }
        }
        Err(e) => fails.push(e.to_string()),
    }
    summarize(
        "characteristic-two-branches",
        "branches of Z4[x]/(x^4+1) collapse to characteristic 2",
        fails,
        "3 branches".into(),
    )
}

pub fn check_gamma_sweep(budget: Budget) -> CheckResult {
    let mut fails = Vec::new();
    for k in 1..=25u64 {
        match gamma_unit_group(k, budget) {
            Ok(g) => {
                if g.group.order() != 4 * k as usize || !g.relations_hold || !g.splits_as_c2_times_dihedral {
                    fails.push(format!("k={k}: unit group is not C2 x D{}", 2 * k));
                }
                if k % 2 == 1 && g.structure.dihedral_n() != Some(2 * k as usize) {
                    fails.push(format!("k={k}: not recognized as D{}", 4 * k));
                }
            }
            Err(e) => fails.push(format!("k={k}: {e}")),
        }
    }
    for k in [1u64, 3, 5, 7, 9] {
        match gamma_bridge_group(k, budget) {
            Ok((_, g)) if g.order() == 4 * k as usize && recognize_dihedral(&g) == Some(2 * k as usize) => {}
            Ok((_, g)) => fails.push(format!("bridge k={k}: order {}", g.order())),
            Err(e) => fails.push(format!("bridge k={k}: {e}")),
        }
    }
    summarize("gamma-units", "Gamma_k unit groups", fails, "k = 1..=25; bridge k = 1, 3, 5, 7, 9".into())
}

type Q = SplitQuaternion<BigInt>;

fn random_q(rng: &mut ChaCha8Rng, bound: i64) -> Q {
    let mut c = || BigInt::from(rng.gen_range(-bound..=bound));
    Q::new(c(), c(), c(), c())
}

/// Products of an even number of norm -1 elements.
pub fn random_norm_one(rng: &mut ChaCha8Rng) -> Q {
    let z = crate::quaternion::obstruction_z();
    let pool = [Q::s(), Q::is(), z.clone(), sq_conj(&z)];
    let len = 2 * rng.gen_range(1..=4);
    (0..len).fold(Q::one(), |acc, _| sq_mul(&acc, &pool[rng.gen_range(0..pool.len())]))
}

pub fn check_quaternions(seed: u64, samples: usize) -> CheckResult {
    let mut fails = Vec::new();
    for k in 1..=64 {
        match obstruction_certificate(k) {
            Ok(c) if c.nonzero && c.re_value > BigInt::one() => {}
            Ok(c) => fails.push(format!("k={k}: certificate {c:?}")),
            Err(e) => fails.push(format!("k={k}: {e}")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b, c) = (random_q(&mut rng, 1_000_000), random_q(&mut rng, 1_000_000), random_q(&mut rng, 1_000_000));
        if sq_mul(&sq_mul(&a, &b), &c) != sq_mul(&a, &sq_mul(&b, &c)) {
            fails.push("associativity".into());
            break;
        }
        if sq_conj(&sq_mul(&a, &b)) != sq_mul(&sq_conj(&b), &sq_conj(&a)) {
            fails.push("conjugation".into());
            break;
        }
        if sq_norm(&sq_mul(&a, &b)) != sq_norm(&a) * sq_norm(&b) {
            fails.push("norm multiplicativity".into());
            break;
        }
        let n = Q::from_scalar(sq_norm(&a));
        if sq_mul(&a, &sq_conj(&a)) != n || sq_mul(&sq_conj(&a), &a) != n {
            fails.push("a conj(a) = N(a)".into());
            break;
        }
        let u = random_norm_one(&mut rng);
        if sq_norm(&u) != BigInt::one() {
            fails.push("norm-one sampler".into());
            break;
        }
        let inv = sq_inverse(&u).expect("norm 1");
        if sq_mul(&u, &inv) != Q::one() || sq_mul(&inv, &u) != Q::one() {
            fails.push("constructive inverse".into());
            break;
        }
        let shifted = u.clone() - Q::one();
        if sq_norm(&shifted).is_zero() && u.a != BigInt::one() {
            fails.push("N(u) = 1 and N(u - 1) = 0 but Re(u) != 1".into());
            break;
        }
    }
    summarize(
        "split-quaternions",
        "split quaternion laws and the obstruction certificate",
        fails,
        format!("k = 1..=64; {samples} samples"),
    )
}

pub fn verify_props(opts: PropOptions) -> Vec<CheckResult> {
    vec![
        check_center_and_normal_subgroups(12),
        check_characteristic_exclusion(),
        check_un_formula(opts.budget),
        check_rank_bounds(),
        check_radical_corpus(opts.budget),
        check_indecomposability(opts.budget),
        check_gl_orders(opts.budget),
        check_f2_dihedral_algebras(opts.budget),
        check_one_plus_two_t(opts.budget),
        check_characteristic_two_branches(opts.budget),
        check_gamma_sweep(opts.budget),
        check_quaternions(opts.seed, 1000),
    ]
}
