use proptest::prelude::*;
use rand::Rng;
use reeskit_core::geometry::polyhedron_membership;
use reeskit_core::oracle::{closure_membership_bruteforce, ClosureVerdict, DEFAULT_M_CAP};
use reeskit_core::package::DEFAULT_CAP;
use reeskit_core::random::{random_monomial_ideal, random_polynomial_ideal, rng};
use reeskit_core::semigroup::rees_package_monomial;
use reeskit_core::summation::{check_summation, check_weaker_form, join_packages, summation_split, Verdict};
use reeskit_core::Rational;

fn level() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn join_facets_count_multiplies(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = rees_package_monomial(&random_monomial_ideal(&mut r, 3, 4, 6)).unwrap();
        let q = rees_package_monomial(&random_monomial_ideal(&mut r, 3, 4, 6)).unwrap();
        let expected = p.facets().len() * q.facets().len();
        let jp = join_packages(&p, &q).unwrap();
        prop_assert_eq!(jp.omega_facets().len(), expected);
        prop_assert!(jp.star_products_are_facets());
    }

    #[test]
    fn split_exists_exactly_inside_the_join(seed in any::<u64>(), w in level()) {
        let mut r = rng(seed);
        let p = rees_package_monomial(&random_monomial_ideal(&mut r, 2, 3, 5)).unwrap();
        let q = rees_package_monomial(&random_monomial_ideal(&mut r, 2, 3, 5)).unwrap();
        let jp = join_packages(&p, &q).unwrap();
        let dim = jp.left_dim() + jp.right_dim();
        for _ in 0..10 {
            let point: Vec<Rational> = (0..dim).map(|_| Rational::new(r.gen_range(0..=24), r.gen_range(1..=3)).unwrap()).collect();
            let inside = polyhedron_membership(jp.omega(), &w, &point).unwrap();
            let split = summation_split(&jp, &w, &point).unwrap();
            prop_assert_eq!(split.is_some(), inside);
        }
    }

    #[test]
    fn summation_formula_holds(seed in any::<u64>(), w in level()) {
        let mut r = rng(seed);
        let p = rees_package_monomial(&random_monomial_ideal(&mut r, 2, 3, 5)).unwrap();
        let q = rees_package_monomial(&random_monomial_ideal(&mut r, 2, 3, 5)).unwrap();
        let jp = join_packages(&p, &q).unwrap();
        let rep = check_summation(&jp, &w, DEFAULT_CAP).unwrap();
        prop_assert_eq!(rep.verdict, Verdict::Equal, "{:?}", rep);
        prop_assert!(check_weaker_form(&jp, &w, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn closure_matches_newton_polyhedron(seed in any::<u64>(), p in 1u32..=3) {
        let mut r = rng(seed);
        let rank = r.gen_range(1..=3);
        let i = random_polynomial_ideal(&mut r, rank, 3, 5);
        let a: Vec<i64> = (0..rank).map(|_| r.gen_range(0..=5 * i64::from(p))).collect();
        let point: Vec<Rational> = a.iter().map(|&x| Rational::from_int(x)).collect();
        let lp = polyhedron_membership(&i.newton_polyhedron(), &Rational::from_int(i64::from(p)), &point).unwrap();
        let brute = closure_membership_bruteforce(&i, p, &a, DEFAULT_M_CAP).unwrap();
        prop_assert_ne!(brute.clone(), ClosureVerdict::Inconclusive);
        prop_assert_eq!(brute.as_bool(), Some(lp));
    }
}
