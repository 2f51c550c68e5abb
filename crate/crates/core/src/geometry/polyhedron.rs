use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::dd::extreme_rays;
use super::hyperplane::Hyperplane;
use super::linalg::integer_ray;
use super::lp::{minimize, LpOutcome};
use super::rational::Rational;
use crate::Error;

/// `conv(generators) + ℝ^dim_{≥0}` for finitely many nonnegative rational
/// generators.
///
/// The generator list is kept inclusion-minimal (no generator lies in the
/// polyhedron spanned by the others) and sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPolyhedron", into = "RawPolyhedron")]
pub struct PositivePolyhedron {
    dim: usize,
    generators: Vec<Vec<Rational>>,
}

impl PositivePolyhedron {
    pub fn new(dim: usize, generators: Vec<Vec<Rational>>) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::InvalidInput("polyhedron dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::InvalidInput("polyhedron needs at least one generator".into()));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
            if g.iter().any(Rational::is_negative) {
                return Err(Error::InvalidInput("polyhedron generators must be nonnegative".into()));
            }
        }
        let mut generators = generators;
        generators.sort();
        generators.dedup();
        Ok(PositivePolyhedron { dim, generators: minimize_generators(generators) })
    }

    pub fn from_integer_points(dim: usize, points: &[Vec<i64>]) -> Result<Self, Error> {
        let generators = points.iter().map(|p| p.iter().map(|&x| Rational::from_int(x)).collect()).collect();
        PositivePolyhedron::new(dim, generators)
    }

    /// The nonnegative orthant itself (the polyhedron of the unit ideal).
    pub fn orthant(dim: usize) -> Self {
        PositivePolyhedron { dim, generators: vec![vec![Rational::zero(); dim]] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    pub fn contains_origin(&self) -> bool {
        self.generators.iter().any(|g| g.iter().all(Rational::is_zero))
    }

    /// Non-coordinate facets, by double description on the homogenized cone.
    pub fn facets(&self) -> Vec<Hyperplane> {
        facet_enumeration(self)
    }

    /// Membership of `point` in `w·self`, decided by exact LP.
    pub fn contains(&self, w: &Rational, point: &[Rational]) -> Result<bool, Error> {
        polyhedron_membership(self, w, point)
    }

    /// Convex hull of `self × {0}` and `{0} × other`, plus the orthant.
    pub fn join(&self, other: &PositivePolyhedron) -> PositivePolyhedron {
        conv_join(self, other)
    }
}

/// Drops generators lying in the polyhedron of the remaining ones.
fn minimize_generators(mut gens: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut i = 0;
    while i < gens.len() && gens.len() > 1 {
        let others: Vec<Vec<Rational>> =
            gens.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, g)| g.clone()).collect();
        if lp_membership(&others, &Rational::one(), &gens[i]).is_some() {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

/// Solves `λ ≥ 0, Σλ = w, Σ λ_i g_i ≤ point` exactly; returns a feasible `λ`.
pub(crate) fn lp_membership(gens: &[Vec<Rational>], w: &Rational, point: &[Rational]) -> Option<Vec<Rational>> {
    if w.is_negative() || point.iter().any(Rational::is_negative) {
        return None;
    }
    let dim = point.len();
    let n = gens.len();
    // variables: λ_1..λ_n, slack_1..slack_dim
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(dim + 1);
    let mut b: Vec<BigRational> = Vec::with_capacity(dim + 1);
    for j in 0..dim {
        let mut row: Vec<BigRational> = gens.iter().map(|g| g[j].inner().clone()).collect();
        row.extend((0..dim).map(|k| if k == j { BigRational::one() } else { BigRational::zero() }));
        a.push(row);
        b.push(point[j].inner().clone());
    }
    let mut row = vec![BigRational::one(); n];
    row.extend(std::iter::repeat_n(BigRational::zero(), dim));
    a.push(row);
    b.push(w.inner().clone());
    match minimize(&a, &b, None) {
        LpOutcome::Optimal(x) => Some(x[..n].iter().cloned().map(Rational::from).collect()),
        _ => None,
    }
}

/// The non-coordinate supporting hyperplanes of `p`, deduplicated and sorted by
/// `(normal, offset)`.
///
/// The polyhedron is homogenized to the cone spanned by `(1, g)` for each
/// generator and `(0, e_j)` for each coordinate direction; each facet
/// `a₀t + ⟨a, X⟩ ≥ 0` of that cone with `a₀ < 0` is the facet `⟨a, X⟩ ≥ -a₀`.
pub fn facet_enumeration(p: &PositivePolyhedron) -> Vec<Hyperplane> {
    let d = p.dim;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(p.generators.len() + d);
    for g in &p.generators {
        let homog: Vec<BigRational> =
            std::iter::once(BigRational::one()).chain(g.iter().map(|x| x.inner().clone())).collect();
        rows.push(integer_ray(&homog));
    }
    for j in 0..d {
        rows.push((0..=d).map(|k| if k == j + 1 { BigInt::one() } else { BigInt::zero() }).collect());
    }
    let rays = extreme_rays(&rows).expect("homogenized positive polyhedron is full-dimensional");
    let mut facets: Vec<Hyperplane> = rays
        .into_iter()
        .filter(|r| r[0].is_negative())
        .map(|r| Hyperplane::new(r[1..].to_vec(), -&r[0]).expect("facet normal of a positive polyhedron"))
        .collect();
    facets.sort();
    facets.dedup();
    facets
}

/// Whether `point ∈ w·P`, via exact LP feasibility of
/// `λ ≥ 0, Σλ_i = w, point ≥ Σ λ_i g_i`.
pub fn polyhedron_membership(p: &PositivePolyhedron, w: &Rational, point: &[Rational]) -> Result<bool, Error> {
    if point.len() != p.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: point.len() });
    }
    if w.is_negative() {
        return Err(Error::InvalidInput("scaling factor must be nonnegative".into()));
    }
    Ok(lp_membership(&p.generators, w, point).is_some())
}

/// Membership through the H-representation: `⟨h_k, point⟩ ≥ w·c_k` for every
/// facet, plus nonnegativity.
pub fn satisfies_facets(facets: &[Hyperplane], w: &Rational, point: &[Rational]) -> bool {
    point.iter().all(|x| !x.is_negative()) && facets.iter().all(|h| h.satisfied_at(w, point))
}

/// `conv(P1 ⊕ 0, 0 ⊕ P2) + ℝ^{d1+d2}_{≥0}`.
pub fn conv_join(p1: &PositivePolyhedron, p2: &PositivePolyhedron) -> PositivePolyhedron {
    let zeros = |n: usize| std::iter::repeat_n(Rational::zero(), n);
    let mut gens: Vec<Vec<Rational>> = Vec::new();
    for g in &p1.generators {
        gens.push(g.iter().cloned().chain(zeros(p2.dim)).collect());
    }
    for g in &p2.generators {
        gens.push(zeros(p1.dim).chain(g.iter().cloned()).collect());
    }
    PositivePolyhedron::new(p1.dim + p2.dim, gens).expect("join of valid polyhedra is valid")
}

#[derive(Serialize, Deserialize)]
struct RawPolyhedron {
    dim: usize,
    generators: Vec<Vec<Rational>>,
}

impl TryFrom<RawPolyhedron> for PositivePolyhedron {
    type Error = Error;
    fn try_from(raw: RawPolyhedron) -> Result<Self, Error> {
        PositivePolyhedron::new(raw.dim, raw.generators)
    }
}

impl From<PositivePolyhedron> for RawPolyhedron {
    fn from(p: PositivePolyhedron) -> Self {
        RawPolyhedron { dim: p.dim, generators: p.generators }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, pts: &[&[i64]]) -> PositivePolyhedron {
        let pts: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        PositivePolyhedron::from_integer_points(dim, &pts).unwrap()
    }

    fn hp(n: &[i64], c: i64) -> Hyperplane {
        Hyperplane::from_i64(n, c).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn qv(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn facets_of_example_polyhedra() {
        assert_eq!(poly(2, &[&[2, 1], &[3, 0]]).facets(), vec![hp(&[1, 0], 2), hp(&[1, 1], 3)]);
        assert_eq!(poly(2, &[&[0, 10], &[5, 5]]).facets(), vec![hp(&[0, 1], 5), hp(&[1, 1], 10)]);
        assert_eq!(
            poly(3, &[&[1, 1, 1]]).facets(),
            vec![hp(&[0, 0, 1], 1), hp(&[0, 1, 0], 1), hp(&[1, 0, 0], 1)]
        );
    }

    #[test]
    fn origin_gives_no_facets() {
        assert!(poly(2, &[&[0, 0], &[1, 3]]).facets().is_empty());
        assert!(PositivePolyhedron::orthant(3).facets().is_empty());
    }

    #[test]
    fn dominated_generators_are_dropped() {
        let p = poly(2, &[&[1, 3], &[3, 1], &[2, 2], &[4, 4]]);
        assert_eq!(p.generators().len(), 2);
    }

    #[test]
    fn membership_examples() {
        let sigma = poly(2, &[&[0, 10], &[5, 5]]);
        assert!(sigma.contains(&q("3/2"), &qv(&["0", "15"])).unwrap());
        assert!(sigma.contains(&q("0"), &qv(&["0", "0"])).unwrap());
        let gamma = poly(2, &[&[2, 1], &[3, 0]]);
        assert!(!gamma.contains(&q("1"), &qv(&["1", "0"])).unwrap());
        assert!(matches!(
            gamma.contains(&q("1"), &qv(&["1"])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn join_example() {
        let g1 = poly(1, &[&[4]]);
        let g2 = poly(2, &[&[2, 1], &[3, 0]]);
        let omega = g1.join(&g2);
        assert_eq!(omega.generators().len(), 3);
        assert_eq!(omega.facets(), vec![hp(&[1, 2, 0], 4), hp(&[3, 4, 4], 12)]);
        let simplex = poly(1, &[&[1]]).join(&poly(1, &[&[1]]));
        assert_eq!(simplex.facets(), vec![hp(&[1, 1], 1)]);
    }

    #[test]
    fn json_encoding() {
        let p = PositivePolyhedron::new(2, vec![qv(&["1/2", "3"])]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"dim":2,"generators":[["1/2","3"]]}"#);
        assert!(serde_json::from_str::<PositivePolyhedron>(r#"{"dim":2,"generators":[["-1","0"]]}"#).is_err());
    }
}
