//! End-to-end acceptance checks, one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use reeskit_core::diagram::{
    canonical_valuation_indices, det_asymptotic_resurgence, rees_package_diagrams, symbolic_intersection_exponents,
};
use reeskit_core::geometry::polyhedron_membership;
use reeskit_core::oracle::{closure_membership_bruteforce, facets_fourier_motzkin, ClosureVerdict, DEFAULT_M_CAP};
use reeskit_core::package::DEFAULT_CAP;
use reeskit_core::random::{random_diagram_ideal, random_monomial_ideal, random_polyhedron, random_polynomial_ideal, rng};
use reeskit_core::semigroup::{cone_facet_valuations, rational_power_generators, rees_package_monomial};
use reeskit_core::summation::{
    alpha_term_list, asymptotic_sandwich_check, check_summation_monomial, same_ring_counterexample, JoinedPackage,
    Verdict,
};
use reeskit_core::{
    AffineSemigroup, Diagram, DiagramIdeal, Hyperplane, MatrixFamily, MonomialIdeal, PositivePolyhedron, Rational,
    ReesPackage,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn hp(n: &[i64], c: i64) -> Hyperplane {
    Hyperplane::from_i64(n, c).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Debug>(err: E) -> String {
    format!("{err:?}")
}

fn mon_sem() -> MonomialIdeal {
    let s = AffineSemigroup::new(2, vec![vec![2, 1], vec![1, 3]]).unwrap();
    MonomialIdeal::new(s, vec![vec![4, 2], vec![3, 4]]).unwrap()
}

fn det_ideal() -> DiagramIdeal {
    let lambda = vec![Diagram::new(vec![2]).unwrap(), Diagram::new(vec![1, 1, 1]).unwrap()];
    DiagramIdeal::new(MatrixFamily::generic(2, 3).unwrap(), lambda).unwrap()
}

fn semigroup_ring_example() -> Outcome {
    let start = Instant::now();
    let i = mon_sem();
    let vals: Vec<Vec<i64>> = cone_facet_valuations(i.semigroup()).iter().map(|v| v.normal().to_vec()).collect();
    ensure(vals == vec![vec![-1, 2], vec![3, -1]], || format!("cone valuations {vals:?}"))?;
    let pkg = rees_package_monomial(&i).map_err(e)?;
    let expected = vec![hp(&[0, 1], 5), hp(&[1, 1], 10)];
    ensure(pkg.facets() == expected.as_slice(), || format!("facets {:?}", pkg.facets()))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("facets v1 + v2 = 10, v2 = 5 in {elapsed:?}"))
}

fn determinantal_example() -> Outcome {
    let d = det_ideal();
    let gamma = d.gamma_polyhedron();
    let expected_gens = PositivePolyhedron::from_integer_points(2, &[vec![2, 1], vec![3, 0]]).unwrap();
    ensure(gamma == expected_gens, || format!("Γ = {gamma:?}"))?;
    let pkg = rees_package_diagrams(&d).map_err(e)?;
    ensure(pkg.facets() == [hp(&[1, 0], 2), hp(&[1, 1], 3)], || format!("facets {:?}", pkg.facets()))?;
    for w in ["0", "1/3", "1/2", "1", "3/2", "7/3", "3"] {
        let w = q(w);
        let got = symbolic_intersection_exponents(&d, &w, DEFAULT_CAP).map_err(e)?;
        // minimal a with a1 ≥ 2w and a1 + a2 ≥ 3w, by scanning a box
        let side: i64 = (&w * &q("3")).ceil().try_into().unwrap();
        let holds = |a1: i64, a2: i64| {
            a1 >= 0 && a2 >= 0 && Rational::from_int(a1) >= &w * &q("2") && Rational::from_int(a1 + a2) >= &w * &q("3")
        };
        let mut expected = Vec::new();
        for a1 in 0..=side {
            for a2 in 0..=side {
                if holds(a1, a2) && !holds(a1 - 1, a2) && !holds(a1, a2 - 1) {
                    expected.push(vec![a1, a2]);
                }
            }
        }
        ensure(got == expected, || format!("w = {w}: {got:?} vs {expected:?}"))?;
    }
    Ok("Γ = conv{(2,1),(3,0)} + orthant; facets X1 = 2, X1 + X2 = 3; exponents match at 7 levels".into())
}

fn star_products() -> Outcome {
    let x4 = MonomialIdeal::in_polynomial_ring(1, vec![vec![4]]).unwrap();
    let jp = JoinedPackage::new(rees_package_monomial(&x4).map_err(e)?, rees_package_diagrams(&det_ideal()).map_err(e)?)
        .map_err(e)?;
    let mut stars: Vec<Hyperplane> = jp.paired_facets().iter().map(|p| p.hyperplane.clone()).collect();
    stars.sort();
    let expected = vec![hp(&[1, 2, 0], 4), hp(&[3, 4, 4], 12)];
    ensure(stars == expected, || format!("stars {stars:?}"))?;
    ensure(jp.omega_facets() == expected.as_slice(), || format!("join facets {:?}", jp.omega_facets()))?;
    let fm = facets_fourier_motzkin(jp.omega()).map_err(e)?;
    ensure(fm == expected, || format!("FM facets {fm:?}"))?;
    Ok("3X + 4X1 + 4X2 = 12 and X + 2X1 = 4 from stars, DD and FM".into())
}

fn summation_terms() -> Outcome {
    let jp = JoinedPackage::new(rees_package_monomial(&mon_sem()).map_err(e)?, rees_package_diagrams(&det_ideal()).map_err(e)?)
        .map_err(e)?;
    let terms = alpha_term_list(&jp, &q("3/2"), DEFAULT_CAP).map_err(e)?;
    ensure(terms == vec![q("0"), q("1/2"), q("1"), q("3/2")], || format!("terms {terms:?}"))?;
    let gens = rational_power_generators(&mon_sem(), &q("3/2"), DEFAULT_CAP).map_err(e)?;
    ensure(gens == vec![vec![6, 3], vec![5, 5]], || format!("generators {gens:?}"))?;
    Ok("α ∈ {0, 1/2, 1, 3/2}; generators (6,3), (5,5)".into())
}

fn same_ring() -> Outcome {
    for n in 1..=5 {
        let r = same_ring_counterexample(n).map_err(e)?;
        let c = 4 * i64::from(n) + 2;
        ensure(r.witness == vec![c, c] && r.in_closure && !r.in_sum, || format!("n = {n}: {r:?}"))?;
    }
    Ok("n = 1..5: witness in closure, in no product term".into())
}

fn random_package(r: &mut impl Rng) -> ReesPackage {
    if r.gen_bool(0.5) {
        rees_package_monomial(&random_monomial_ideal(r, 3, 4, 6)).unwrap()
    } else {
        rees_package_diagrams(&random_diagram_ideal(r)).unwrap()
    }
}

fn counting_law() -> Outcome {
    let mut r = rng(6);
    for k in 0..50 {
        let (p1, p2) = (random_package(&mut r), random_package(&mut r));
        let (n1, n2) = (p1.facets().len(), p2.facets().len());
        let jp = JoinedPackage::new(p1, p2).map_err(e)?;
        ensure(jp.paired_facets().len() == n1 * n2, || format!("pair {k}: {} stars", jp.paired_facets().len()))?;
        ensure(jp.omega_facets().len() == n1 * n2 && jp.star_products_are_facets(), || {
            format!("pair {k}: join has {} facets, expected {}", jp.omega_facets().len(), n1 * n2)
        })?;
    }
    Ok("50 pairs: facets of the join are exactly the |RV(I)|·|RV(J)| star products".into())
}

fn summation_formula() -> Outcome {
    let start = Instant::now();
    let mut r = rng(7);
    let levels = ["1/2", "1", "3/2", "7/3"].map(q);
    let mut checked = 0;
    for k in 0..50 {
        let i = random_monomial_ideal(&mut r, 3, 4, 6);
        let j = random_monomial_ideal(&mut r, 3, 4, 6);
        for w in &levels {
            let rep = check_summation_monomial(&i, &j, w, DEFAULT_CAP).map_err(e)?;
            ensure(rep.verdict == Verdict::Equal, || format!("pair {k}, w = {w}: {rep:?}"))?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} instances EQUAL in {elapsed:.2?}"))
}

fn oracle_equivalence() -> Outcome {
    let mut r = rng(8);
    for k in 0..500 {
        let rank = r.gen_range(1..=3);
        let i = random_polynomial_ideal(&mut r, rank, 4, 6);
        let p: u32 = r.gen_range(1..=3);
        let a: Vec<i64> = (0..rank).map(|_| r.gen_range(0..=6 * i64::from(p))).collect();
        let point: Vec<Rational> = a.iter().map(|&x| Rational::from_int(x)).collect();
        let lp = polyhedron_membership(&i.newton_polyhedron(), &Rational::from_int(i64::from(p)), &point).map_err(e)?;
        let brute = closure_membership_bruteforce(&i, p, &a, DEFAULT_M_CAP).map_err(e)?;
        ensure(brute != ClosureVerdict::Inconclusive, || format!("triple {k}: inconclusive, LP says {lp}"))?;
        ensure(brute.as_bool() == Some(lp), || format!("triple {k}: {i:?}, p = {p}, a = {a:?}: {brute:?} vs {lp}"))?;
    }
    for k in 0..200 {
        let dim = r.gen_range(1..=4);
        let p = random_polyhedron(&mut r, dim, 5, 6);
        let fm = facets_fourier_motzkin(&p).map_err(e)?;
        ensure(fm == p.facets(), || format!("polyhedron {k}: {p:?}"))?;
    }
    Ok("500 closure triples and 200 facet systems agree".into())
}

fn resurgence() -> Outcome {
    for m in 1..=8u32 {
        for t in 1..=m {
            let got = det_asymptotic_resurgence(m, t).map_err(e)?;
            let expected = Rational::new(i64::from(t * (m - t + 1)), i64::from(m)).unwrap();
            ensure(got == expected, || format!("m = {m}, t = {t}: {got}"))?;
        }
    }
    for m in 1..=5u32 {
        for t in 1..=m {
            let d = DiagramIdeal::new(MatrixFamily::generic(m, m).unwrap(), vec![Diagram::new(vec![t]).unwrap()]).unwrap();
            let pkg = rees_package_diagrams(&d).map_err(e)?;
            let mut idx = canonical_valuation_indices(&pkg).ok_or_else(|| format!("m = {m}, t = {t}: non-canonical"))?;
            idx.sort_unstable();
            let expected: Vec<usize> = (1..=t as usize).collect();
            ensure(idx == expected, || format!("m = {m}, t = {t}: γ indices {idx:?}"))?;
        }
    }
    Ok("t(m−t+1)/m for m ≤ 8; RV(I_t) = {γ1, …, γt} for m ≤ 5".into())
}

fn sandwich() -> Outcome {
    let mut r = rng(10);
    let mut widest = q("0");
    for k in 0..20 {
        let i = random_monomial_ideal(&mut r, 3, 4, 6);
        let j = random_monomial_ideal(&mut r, 3, 4, 6);
        let jp = JoinedPackage::new(rees_package_monomial(&i).map_err(e)?, rees_package_monomial(&j).map_err(e)?)
            .map_err(e)?;
        for w in ["2", "4"].map(q) {
            let tau = &w / &q("2");
            let rep = asymptotic_sandwich_check(&jp, &w, &tau, DEFAULT_CAP).map_err(e)?;
            ensure(rep.left_inclusion, || format!("pair {k}, w = {w}: left inclusion fails: {rep:?}"))?;
            let w0 = rep.w0.clone().ok_or_else(|| format!("pair {k}, w = {w}: no w0 on the grid"))?;
            ensure(rep.right_inclusion, || format!("pair {k}, w = {w}: right inclusion fails at τ = {tau}"))?;
            if w0 > widest {
                widest = w0;
            }
        }
    }
    Ok(format!("40 instances; largest empirical w0 = {widest}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("semigroup ring example", semigroup_ring_example),
        ("determinantal example", determinantal_example),
        ("star products of the join", star_products),
        ("summation terms of the mixed example", summation_terms),
        ("same-ring counterexample", same_ring),
        ("valuation counting law", counting_law),
        ("summation formula on random pairs", summation_formula),
        ("oracle equivalence", oracle_equivalence),
        ("determinantal resurgence", resurgence),
        ("asymptotic sandwich", sandwich),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{elapsed:.2?}]", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
