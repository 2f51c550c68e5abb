//! Machine-integer views of facet systems, used in the enumeration loops.

use std::cmp::Ordering;

use num_traits::ToPrimitive;

use super::hyperplane::Hyperplane;
use super::polyhedron::PositivePolyhedron;
use super::rational::Rational;
use crate::Error;

/// A nonnegative rational level `w = num/den` in machine integers.
#[derive(Clone, Copy, Debug)]
pub struct Level {
    pub num: i128,
    pub den: i128,
}

impl Level {
    pub fn new(w: &Rational) -> Result<Self, Error> {
        if w.is_negative() {
            return Err(Error::InvalidInput("level must be nonnegative".into()));
        }
        let num = w.numer().to_i128().ok_or(Error::Overflow)?;
        let den = w.denom().to_i128().ok_or(Error::Overflow)?;
        Ok(Level { num, den })
    }

    pub fn zero() -> Self {
        Level { num: 0, den: 1 }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.num, self.den).expect("positive denominator")
    }
}

impl PartialEq for Level {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Level {}

impl PartialOrd for Level {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Level {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

/// The largest level at which a point still lies in the scaled polyhedron:
/// `min_k ⟨h_k, x⟩ / c_k`, or `Infinite` when there are no facets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(Level),
    Infinite,
}

impl Order {
    pub fn at_least(self, w: Level) -> bool {
        match self {
            Order::Infinite => true,
            Order::Finite(o) => o >= w,
        }
    }
}

/// Facet inequalities `⟨h_k, x⟩ ≥ w·c_k` with `i64` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSystem {
    normals: Vec<Vec<i64>>,
    offsets: Vec<i64>,
    dim: usize,
}

impl FacetSystem {
    pub fn new(dim: usize, facets: &[Hyperplane]) -> Result<Self, Error> {
        let mut normals = Vec::with_capacity(facets.len());
        let mut offsets = Vec::with_capacity(facets.len());
        for h in facets {
            if h.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: h.dim() });
            }
            let n: Option<Vec<i64>> = h.normal().iter().map(ToPrimitive::to_i64).collect();
            normals.push(n.ok_or(Error::Overflow)?);
            offsets.push(h.offset().to_i64().ok_or(Error::Overflow)?);
        }
        Ok(FacetSystem { normals, offsets, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    fn value(normal: &[i64], x: &[i64]) -> i128 {
        normal.iter().zip(x).map(|(&h, &v)| h as i128 * v as i128).sum()
    }

    /// `x ∈ w·P` for a nonnegative integer point `x`.
    pub fn contains(&self, w: Level, x: &[i64]) -> bool {
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(h, &c)| Self::value(h, x) * w.den >= w.num * c as i128)
    }

    pub fn order(&self, x: &[i64]) -> Order {
        self.normals
            .iter()
            .zip(&self.offsets)
            .map(|(h, &c)| Level { num: Self::value(h, x), den: c as i128 })
            .min()
            .map_or(Order::Infinite, Order::Finite)
    }
}

/// All lattice points `p` with `0 ≤ p ≤ bounds` and `p ∈ w·P`, in
/// lexicographic order.
///
/// Coordinates are fixed one at a time; prefixes that cannot be completed
/// inside the box are pruned, and the last coordinate runs from its smallest
/// feasible value up to the bound.
pub fn scale_and_ceil_lattice(p: &PositivePolyhedron, w: &Rational, bounds: &[i64]) -> Result<Vec<Vec<i64>>, Error> {
    if bounds.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: bounds.len() });
    }
    if bounds.iter().any(|&b| b < 0) {
        return Err(Error::InvalidInput("box bounds must be nonnegative".into()));
    }
    let system = FacetSystem::new(p.dim(), &p.facets())?;
    let level = Level::new(w)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.dim());
    extend_prefix(&system, level, bounds, &mut prefix, &mut out);
    Ok(out)
}

fn extend_prefix(system: &FacetSystem, w: Level, bounds: &[i64], prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let k = prefix.len();
    let d = bounds.len();
    // best case: every remaining coordinate at its bound
    let viable = system.normals.iter().zip(&system.offsets).all(|(h, &c)| {
        let fixed: i128 = (0..k).map(|i| h[i] as i128 * prefix[i] as i128).sum();
        let rest: i128 = (k..d).map(|i| h[i] as i128 * bounds[i] as i128).sum();
        (fixed + rest) * w.den >= w.num * c as i128
    });
    if !viable {
        return;
    }
    if k + 1 == d {
        let mut lo: i128 = 0;
        for (h, &c) in system.normals.iter().zip(&system.offsets) {
            let last = h[k] as i128;
            if last == 0 {
                continue;
            }
            let fixed: i128 = (0..k).map(|i| h[i] as i128 * prefix[i] as i128).sum();
            // last·x·den ≥ num·c − fixed·den
            let need = w.num * c as i128 - fixed * w.den;
            let denom = last * w.den;
            lo = lo.max(div_ceil(need, denom));
        }
        for x in lo..=bounds[k] as i128 {
            let mut point = prefix.clone();
            point.push(x as i64);
            out.push(point);
        }
        return;
    }
    for x in 0..=bounds[k] {
        prefix.push(x);
        extend_prefix(system, w, bounds, prefix, out);
        prefix.pop();
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    let q = a.div_euclid(b);
    if a.rem_euclid(b) == 0 {
        q
    } else {
        q + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(dim: usize, pts: &[&[i64]]) -> PositivePolyhedron {
        let pts: Vec<Vec<i64>> = pts.iter().map(|p| p.to_vec()).collect();
        PositivePolyhedron::from_integer_points(dim, &pts).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn lattice_examples() {
        let gamma = poly(2, &[&[2, 1], &[3, 0]]);
        assert_eq!(
            scale_and_ceil_lattice(&gamma, &q("1"), &[3, 1]).unwrap(),
            vec![vec![2, 1], vec![3, 0], vec![3, 1]]
        );
        assert_eq!(
            scale_and_ceil_lattice(&gamma, &q("0"), &[1, 1]).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let ray = poly(1, &[&[4]]);
        assert_eq!(scale_and_ceil_lattice(&ray, &q("1/2"), &[2]).unwrap(), vec![vec![2]]);
    }

    #[test]
    fn order_and_levels() {
        let sigma = poly(2, &[&[0, 10], &[5, 5]]);
        let sys = FacetSystem::new(2, &sigma.facets()).unwrap();
        assert_eq!(sys.order(&[0, 15]), Order::Finite(Level { num: 15, den: 10 }));
        assert!(sys.order(&[0, 15]).at_least(Level::new(&q("3/2")).unwrap()));
        assert!(!sys.order(&[0, 10]).at_least(Level::new(&q("3/2")).unwrap()));
        let unit = FacetSystem::new(2, &[]).unwrap();
        assert_eq!(unit.order(&[0, 0]), Order::Infinite);
    }

    #[test]
    fn negative_division_rounds_up() {
        assert_eq!(div_ceil(-7, 2), -3);
        assert_eq!(div_ceil(7, 2), 4);
        assert_eq!(div_ceil(6, 3), 2);
    }
}
