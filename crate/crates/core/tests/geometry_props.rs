use proptest::prelude::*;
use reeskit_core::geometry::{
    polyhedron_membership, satisfies_facets, scale_and_ceil_lattice, FacetSystem, Hyperplane, Level, PositivePolyhedron,
    Rational,
};
use reeskit_core::oracle::{facets_fourier_motzkin, lattice_points_naive};

fn polyhedron(max_dim: usize, max_gens: usize, max_coord: i64) -> impl Strategy<Value = PositivePolyhedron> {
    (1..=max_dim).prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec(0..=max_coord, d), 1..=max_gens)
            .prop_map(move |g| PositivePolyhedron::from_integer_points(d, &g).unwrap())
    })
}

fn level() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec!["0", "1/3", "1", "7/2"]).prop_map(|s| s.parse().unwrap())
}

fn rational_point(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((0i64..=45, 1i64..=3).prop_map(|(n, q)| Rational::new(n, q).unwrap()), d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lp_and_facets_agree((p, pts) in polyhedron(4, 6, 12).prop_flat_map(|p| {
        let d = p.dim();
        (Just(p), prop::collection::vec(rational_point(d), 8))
    }), w in level()) {
        let facets = p.facets();
        for x in &pts {
            prop_assert_eq!(polyhedron_membership(&p, &w, x).unwrap(), satisfies_facets(&facets, &w, x));
        }
    }

    #[test]
    fn scaling_is_homogeneous((p, x) in polyhedron(3, 4, 8).prop_flat_map(|p| {
        let d = p.dim();
        (Just(p), rational_point(d))
    }), w in level(), t in (1i64..=5, 1i64..=4)) {
        let t = Rational::new(t.0, t.1).unwrap();
        let tx: Vec<Rational> = x.iter().map(|v| &t * v).collect();
        prop_assert_eq!(polyhedron_membership(&p, &w, &x).unwrap(), polyhedron_membership(&p, &(&t * &w), &tx).unwrap());
    }

    #[test]
    fn generators_are_irredundant(p in polyhedron(3, 6, 8)) {
        let gens = p.generators();
        for (i, g) in gens.iter().enumerate() {
            let others: Vec<Vec<Rational>> = gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, h)| h.clone()).collect();
            if let Ok(rest) = PositivePolyhedron::new(p.dim(), others) {
                prop_assert!(!rest.contains(&Rational::one(), g).unwrap());
            }
        }
    }

    #[test]
    fn every_facet_is_needed(p in polyhedron(3, 4, 6)) {
        let facets = p.facets();
        for k in 0..facets.len() {
            let rest: Vec<Hyperplane> = facets.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, h)| h.clone()).collect();
            let all = FacetSystem::new(p.dim(), &facets).unwrap();
            let fewer = FacetSystem::new(p.dim(), &rest).unwrap();
            // the region cut off by facet k contains lattice points once scaled up
            let top = all.offsets().iter().max().copied().unwrap_or(0);
            let found = (1..=4).any(|w| {
                let level = Level { num: w, den: 1 };
                let side = top * w as i64 + 1;
                box_points(p.dim(), side).any(|x| fewer.contains(level, &x) && !all.contains(level, &x))
            });
            prop_assert!(found, "facet {} of {:?} is redundant", facets[k], p);
        }
    }

    #[test]
    fn join_facets_are_star_products(p1 in polyhedron(2, 3, 6), p2 in polyhedron(2, 3, 6)) {
        let mut stars: Vec<Hyperplane> = p1.facets().iter().flat_map(|h1| p2.facets().into_iter().map(move |h2| h1.star(&h2))).collect();
        stars.sort();
        stars.dedup();
        prop_assert_eq!(p1.join(&p2).facets(), stars);
    }

    #[test]
    fn double_description_matches_fourier_motzkin(p in polyhedron(4, 5, 9)) {
        prop_assert_eq!(p.facets(), facets_fourier_motzkin(&p).unwrap());
    }

    #[test]
    fn lattice_enumeration_matches_box_scan(p in polyhedron(3, 3, 4), w in level(), b in 0i64..=6) {
        let bounds = vec![b; p.dim()];
        prop_assert_eq!(scale_and_ceil_lattice(&p, &w, &bounds).unwrap(), lattice_points_naive(&p, &w, &bounds).unwrap());
    }

    #[test]
    fn hyperplanes_are_canonical(n in prop::collection::vec(0i64..=6, 1..=4), c in 1i64..=12, k in 1i64..=5) {
        prop_assume!(n.iter().any(|&x| x != 0));
        let scaled: Vec<i64> = n.iter().map(|&x| x * k).collect();
        prop_assert_eq!(Hyperplane::from_i64(&n, c).unwrap(), Hyperplane::from_i64(&scaled, c * k).unwrap());
    }
}

fn box_points(d: usize, side: i64) -> impl Iterator<Item = Vec<i64>> {
    let total = (side as usize + 1).pow(d as u32);
    (0..total).map(move |mut i| {
        (0..d)
            .map(|_| {
                let x = (i % (side as usize + 1)) as i64;
                i /= side as usize + 1;
                x
            })
            .collect()
    })
}
