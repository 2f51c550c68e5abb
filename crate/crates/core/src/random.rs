//! Seeded random instances for property checks and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, DiagramIdeal, MatrixFamily};
use crate::geometry::PositivePolyhedron;
use crate::semigroup::{AffineSemigroup, MonomialIdeal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The orthant half the time; otherwise a strongly convex full-rank
/// semigroup with `rank` or `rank + 1` generators of coordinates at most 3.
pub fn random_semigroup(rng: &mut impl Rng, rank: usize) -> AffineSemigroup {
    if rng.gen_bool(0.5) {
        return AffineSemigroup::orthant(rank);
    }
    loop {
        let count = rng.gen_range(rank..=rank + 1);
        let gens: Vec<Vec<i64>> = (0..count).map(|_| (0..rank).map(|_| rng.gen_range(0..=3)).collect()).collect();
        if let Ok(s) = AffineSemigroup::new(rank, gens) {
            return s;
        }
    }
}

/// A monomial ideal with 1 to `max_gens` nonzero exponents of coordinates at
/// most `max_coord`.
pub fn random_ideal(rng: &mut impl Rng, s: &AffineSemigroup, max_gens: usize, max_coord: i64) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let mut exps = Vec::with_capacity(count);
    while exps.len() < count {
        let mut e = vec![0i64; s.rank()];
        let steps = rng.gen_range(1..=4);
        for _ in 0..steps {
            let g = s.generators().choose(rng).expect("semigroups have generators");
            let next: Vec<i64> = e.iter().zip(g).map(|(a, b)| a + b).collect();
            if next.iter().all(|&x| x <= max_coord) {
                e = next;
            }
        }
        if e.iter().any(|&x| x != 0) {
            exps.push(e);
        }
    }
    MonomialIdeal::new(s.clone(), exps).expect("sums of generators lie in the semigroup")
}

/// A random ideal in a random semigroup ring of rank `1..=max_rank`.
pub fn random_monomial_ideal(rng: &mut impl Rng, max_rank: usize, max_gens: usize, max_coord: i64) -> MonomialIdeal {
    let rank = rng.gen_range(1..=max_rank);
    let s = random_semigroup(rng, rank);
    random_ideal(rng, &s, max_gens, max_coord)
}

/// A random ideal of `k[x_1, …, x_rank]`.
pub fn random_polynomial_ideal(rng: &mut impl Rng, rank: usize, max_gens: usize, max_coord: i64) -> MonomialIdeal {
    random_ideal(rng, &AffineSemigroup::orthant(rank), max_gens, max_coord)
}

/// A positive polyhedron with up to `max_gens` integer generators.
pub fn random_polyhedron(rng: &mut impl Rng, dim: usize, max_gens: usize, max_coord: i64) -> PositivePolyhedron {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Vec<i64>> = (0..count).map(|_| (0..dim).map(|_| rng.gen_range(0..=max_coord)).collect()).collect();
    PositivePolyhedron::from_integer_points(dim, &gens).expect("nonnegative generators")
}

/// A diagram ideal in a small matrix family: one to three shapes of at most
/// three parts (a single shape for Hankel products).
pub fn random_diagram_ideal(rng: &mut impl Rng) -> DiagramIdeal {
    let family = match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(1..=4);
            MatrixFamily::generic(rng.gen_range(1..=n.min(3)), n)
        }
        1 => MatrixFamily::symmetric(rng.gen_range(1..=3)),
        2 => MatrixFamily::pfaffian(rng.gen_range(2..=5)),
        _ => MatrixFamily::hankel(rng.gen_range(1..=5)),
    }
    .expect("parameters are in range");
    let count = if family.is_hankel() { 1 } else { rng.gen_range(1..=3) };
    let bound = family.part_bound();
    let lambda = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            Diagram::new((0..len).map(|_| rng.gen_range(1..=bound)).collect()).expect("parts are positive")
        })
        .collect();
    DiagramIdeal::new(family, lambda).expect("shapes fit the family")
}
