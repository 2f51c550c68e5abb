//! Affine semigroups, their cone valuations, and monomial ideals in
//! semigroup rings.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::geometry::dd::extreme_rays;
use crate::geometry::linalg::rank;
use crate::geometry::{PositivePolyhedron, Rational};
use crate::package::{ReesPackage, ValueMap, ValueSemigroup};
use crate::Error;

/// The valuation `x^n ↦ ⟨f, n⟩` of a facet of the semigroup's cone, with
/// `f` the primitive inner normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeValuation {
    normal: Vec<i64>,
}

impl ConeValuation {
    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn evaluate(&self, n: &[i64]) -> i64 {
        self.normal.iter().zip(n).map(|(a, b)| a * b).sum()
    }
}

/// A finitely generated subsemigroup of `ℤ^rank` whose cone is
/// full-dimensional and strongly convex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSemigroup {
    rank: usize,
    generators: Vec<Vec<i64>>,
    valuations: Vec<ConeValuation>,
}

impl AffineSemigroup {
    pub fn new(rank: usize, generators: Vec<Vec<i64>>) -> Result<Self, Error> {
        if rank == 0 {
            return Err(Error::InvalidInput("semigroup rank must be positive".into()));
        }
        for g in &generators {
            if g.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, found: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidInput("semigroup generators must be nonzero".into()));
            }
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        let valuations = facet_normals(rank, &generators)?;
        Ok(AffineSemigroup { rank, generators, valuations })
    }

    /// `ℕ^rank`, the semigroup of the polynomial ring.
    pub fn orthant(rank: usize) -> Self {
        let unit = |i: usize| (0..rank).map(|j| i64::from(i == j)).collect::<Vec<_>>();
        let mut generators: Vec<Vec<i64>> = (0..rank).map(unit).collect();
        generators.sort();
        let mut valuations: Vec<ConeValuation> = (0..rank).map(|i| ConeValuation { normal: unit(i) }).collect();
        valuations.sort();
        AffineSemigroup { rank, generators, valuations }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn valuations(&self) -> &[ConeValuation] {
        &self.valuations
    }

    /// `(v_1(x^n), …, v_d(x^n))`.
    pub fn values(&self, n: &[i64]) -> Vec<i64> {
        self.valuations.iter().map(|v| v.evaluate(n)).collect()
    }

    pub fn contains(&self, n: &[i64]) -> bool {
        if n.len() != self.rank {
            return false;
        }
        let mut failed = HashSet::new();
        self.search(n.to_vec(), &mut failed)
    }

    // Depth-first search over generator subtractions. Every generator has a
    // nonzero value vector, so the values strictly decrease and stay
    // nonnegative along any path that can still succeed.
    fn search(&self, n: Vec<i64>, failed: &mut HashSet<Vec<i64>>) -> bool {
        if n.iter().all(|&x| x == 0) {
            return true;
        }
        if self.values(&n).iter().any(|&x| x < 0) || failed.contains(&n) {
            return false;
        }
        for g in &self.generators {
            let rest: Vec<i64> = n.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.search(rest, failed) {
                return true;
            }
        }
        failed.insert(n);
        false
    }

    /// `a ≤_S b`, i.e. `b − a ∈ S`.
    pub fn divides(&self, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
        self.contains(&diff)
    }

    pub fn value_semigroup(&self) -> ValueSemigroup {
        let values = self.generators.iter().map(|g| self.values(g)).collect();
        ValueSemigroup::new(self.valuations.len(), values, self.generators.clone())
            .expect("cone valuations are positive on generators")
    }
}

fn facet_normals(s: usize, generators: &[Vec<i64>]) -> Result<Vec<ConeValuation>, Error> {
    let rows: Vec<Vec<BigInt>> = generators.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
    if rows.is_empty() || rank(&rows) < s {
        return Err(Error::NotFullDimensional);
    }
    let rays = extreme_rays(&rows).ok_or(Error::NotFullDimensional)?;
    if rays.is_empty() || rank(&rays) < s {
        return Err(Error::NotStronglyConvex);
    }
    rays.into_iter()
        .map(|r| {
            let normal: Option<Vec<i64>> = r.iter().map(ToPrimitive::to_i64).collect();
            normal.map(|normal| ConeValuation { normal }).ok_or(Error::Overflow)
        })
        .collect()
}

/// Primitive inner facet normals of the cone of `S`, in lexicographic order.
pub fn cone_facet_valuations(s: &AffineSemigroup) -> Vec<ConeValuation> {
    s.valuations.clone()
}

pub fn membership_in_semigroup(s: &AffineSemigroup, n: &[i64]) -> Result<bool, Error> {
    if n.len() != s.rank {
        return Err(Error::DimensionMismatch { expected: s.rank, found: n.len() });
    }
    Ok(s.contains(n))
}

/// A monomial ideal of `k[S]`, given by the exponents of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    semigroup: AffineSemigroup,
    exponents: Vec<Vec<i64>>,
}

impl MonomialIdeal {
    /// Validates that every exponent lies in `S` and keeps the ones minimal
    /// under `≤_S`, sorted lexicographically.
    pub fn new(semigroup: AffineSemigroup, exponents: Vec<Vec<i64>>) -> Result<Self, Error> {
        if exponents.is_empty() {
            return Err(Error::InvalidInput("a monomial ideal needs at least one generator".into()));
        }
        for e in &exponents {
            if e.len() != semigroup.rank {
                return Err(Error::DimensionMismatch { expected: semigroup.rank, found: e.len() });
            }
            if !semigroup.contains(e) {
                return Err(Error::InvalidInput(format!("exponent {e:?} is not in the semigroup")));
            }
        }
        let mut exponents = exponents;
        exponents.sort();
        exponents.dedup();
        let minimal: Vec<Vec<i64>> = exponents
            .iter()
            .filter(|b| !exponents.iter().any(|a| a != *b && semigroup.divides(a, b)))
            .cloned()
            .collect();
        Ok(MonomialIdeal { semigroup, exponents: minimal })
    }

    pub fn in_polynomial_ring(rank: usize, exponents: Vec<Vec<i64>>) -> Result<Self, Error> {
        MonomialIdeal::new(AffineSemigroup::orthant(rank), exponents)
    }

    pub fn semigroup(&self) -> &AffineSemigroup {
        &self.semigroup
    }

    pub fn exponents(&self) -> &[Vec<i64>] {
        &self.exponents
    }

    /// `Σ = conv(v̲(log I)) + ℝ^d_{≥0}`.
    pub fn value_polyhedron(&self) -> PositivePolyhedron {
        let points: Vec<Vec<i64>> = self.exponents.iter().map(|e| self.semigroup.values(e)).collect();
        PositivePolyhedron::from_integer_points(self.semigroup.valuations.len(), &points)
            .expect("values of semigroup elements are nonnegative")
    }

    /// The Newton polyhedron `conv(log I) + ℝ^s_{≥0}` of an ideal in a
    /// polynomial ring.
    pub fn newton_polyhedron(&self) -> PositivePolyhedron {
        PositivePolyhedron::from_integer_points(self.semigroup.rank, &self.exponents)
            .expect("exponents in the orthant are nonnegative")
    }
}

/// `(x^S, v̲, Σ)`.
pub fn rees_package_monomial(i: &MonomialIdeal) -> Result<ReesPackage, Error> {
    ReesPackage::new(ValueMap::ConeFacets(i.semigroup.clone()), i.value_polyhedron())
}

/// `x^n ∈ overline(I^w)`, i.e. `n ∈ S` and `v̲(n) ∈ wΣ`.
pub fn rational_power_membership(i: &MonomialIdeal, w: &Rational, n: &[i64]) -> Result<bool, Error> {
    let s = &i.semigroup;
    if n.len() != s.rank {
        return Err(Error::DimensionMismatch { expected: s.rank, found: n.len() });
    }
    if w.is_negative() {
        return Err(Error::InvalidInput("level must be nonnegative".into()));
    }
    if !s.contains(n) {
        return Ok(false);
    }
    rees_package_monomial(i)?.contains_value(w, &s.values(n))
}

/// Exponents of the minimal monomial generators of `overline(I^w)`, ordered
/// lexicographically by valuation vector.
pub fn rational_power_generators(i: &MonomialIdeal, w: &Rational, cap: u64) -> Result<Vec<Vec<i64>>, Error> {
    let pkg = rees_package_monomial(i)?;
    Ok(pkg.minimal_generators(w, cap)?.into_iter().map(|e| e.label).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Hyperplane;
    use crate::package::DEFAULT_CAP;

    fn example_semigroup() -> AffineSemigroup {
        AffineSemigroup::new(2, vec![vec![2, 1], vec![1, 3]]).unwrap()
    }

    fn example_ideal() -> MonomialIdeal {
        MonomialIdeal::new(example_semigroup(), vec![vec![4, 2], vec![3, 4]]).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn cone_valuations() {
        let normals = |s: &AffineSemigroup| -> Vec<Vec<i64>> {
            cone_facet_valuations(s).iter().map(|v| v.normal().to_vec()).collect()
        };
        assert_eq!(normals(&example_semigroup()), vec![vec![-1, 2], vec![3, -1]]);
        assert_eq!(normals(&AffineSemigroup::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap()), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(normals(&AffineSemigroup::orthant(2)), vec![vec![0, 1], vec![1, 0]]);
        let s = AffineSemigroup::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(normals(&s), vec![vec![0, 1], vec![2, -1]]);
    }

    #[test]
    fn degenerate_cones_are_rejected() {
        assert_eq!(AffineSemigroup::new(2, vec![vec![1, 1], vec![2, 2]]), Err(Error::NotFullDimensional));
        assert_eq!(
            AffineSemigroup::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1]]),
            Err(Error::NotStronglyConvex)
        );
    }

    #[test]
    fn semigroup_membership() {
        let s = example_semigroup();
        assert!(membership_in_semigroup(&s, &[5, 5]).unwrap());
        assert!(membership_in_semigroup(&s, &[0, 0]).unwrap());
        assert!(!membership_in_semigroup(&s, &[1, 0]).unwrap());
        assert!(!membership_in_semigroup(&s, &[2, 2]).unwrap());
        assert!(membership_in_semigroup(&s, &[1]).is_err());
    }

    #[test]
    fn package_of_example_ideal() {
        let pkg = rees_package_monomial(&example_ideal()).unwrap();
        assert_eq!(
            pkg.facets(),
            &[Hyperplane::from_i64(&[0, 1], 5).unwrap(), Hyperplane::from_i64(&[1, 1], 10).unwrap()]
        );
        assert_eq!(pkg.denominator_bound(), BigInt::from(10));
        let principal = MonomialIdeal::in_polynomial_ring(1, vec![vec![1]]).unwrap();
        let p = rees_package_monomial(&principal).unwrap();
        assert_eq!(p.facets(), &[Hyperplane::from_i64(&[1], 1).unwrap()]);
        assert_eq!(p.denominator_bound(), BigInt::from(1));
        let two = MonomialIdeal::in_polynomial_ring(2, vec![vec![1, 3], vec![3, 1]]).unwrap();
        let facets: Vec<String> = rees_package_monomial(&two).unwrap().facets().iter().map(|h| h.to_string()).collect();
        assert_eq!(facets, vec!["X2 = 1", "X1 = 1", "X1 + X2 = 4"]);
    }

    #[test]
    fn rational_powers_of_example_ideal() {
        let i = example_ideal();
        assert!(rational_power_membership(&i, &q("3/2"), &[6, 3]).unwrap());
        assert!(!rational_power_membership(&i, &q("3/2"), &[4, 2]).unwrap());
        assert!(rational_power_membership(&i, &q("0"), &[1, 3]).unwrap());
        assert!(!rational_power_membership(&i, &q("0"), &[2, 2]).unwrap());
        assert_eq!(rational_power_generators(&i, &q("3/2"), DEFAULT_CAP).unwrap(), vec![vec![6, 3], vec![5, 5]]);
        assert_eq!(rational_power_generators(&i, &q("0"), DEFAULT_CAP).unwrap(), vec![vec![0, 0]]);
        assert_eq!(rational_power_generators(&i, &q("1"), DEFAULT_CAP).unwrap(), vec![vec![4, 2], vec![3, 4]]);
    }

    #[test]
    fn exponents_are_minimized() {
        let i = MonomialIdeal::new(example_semigroup(), vec![vec![4, 2], vec![6, 3], vec![3, 4]]).unwrap();
        assert_eq!(i.exponents(), &[vec![3, 4], vec![4, 2]]);
        assert!(MonomialIdeal::new(example_semigroup(), vec![vec![1, 1]]).is_err());
    }
}
