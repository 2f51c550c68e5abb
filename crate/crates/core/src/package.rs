//! Rees packages: a tuple of valuations on a basis together with a positive
//! polyhedron whose non-coordinate facets are the Rees valuations.
//!
//! The basis elements themselves are only ever handled through their
//! valuation vectors, which form an affine semigroup [`ValueSemigroup`].

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use serde::Serialize;

use crate::diagram::MatrixFamily;
use crate::geometry::{FacetSystem, Hyperplane, Level, Order, PositivePolyhedron, Rational};
use crate::semigroup::AffineSemigroup;
use crate::Error;

/// Default bound on the number of semigroup elements a single enumeration may
/// visit.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// How basis elements are mapped to valuation vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueMap {
    /// Monomials `x^n` of a semigroup ring, valued by the facet normals of
    /// the semigroup's cone.
    ConeFacets(AffineSemigroup),
    /// Standard monomials of a matrix family, valued by `γ_1, …, γ_d` of
    /// their shape.
    Gamma(MatrixFamily),
}

impl ValueMap {
    pub fn dim(&self) -> usize {
        match self {
            ValueMap::ConeFacets(s) => s.valuations().len(),
            ValueMap::Gamma(f) => f.gamma_dim(),
        }
    }

    /// Stem for coordinate names: `v` for cone valuations, `gamma` for shapes.
    pub fn stem(&self) -> &'static str {
        match self {
            ValueMap::ConeFacets(_) => "v",
            ValueMap::Gamma(_) => "gamma",
        }
    }

    pub fn value_semigroup(&self) -> ValueSemigroup {
        match self {
            ValueMap::ConeFacets(s) => s.value_semigroup(),
            ValueMap::Gamma(f) => f.value_semigroup(),
        }
    }
}

/// A semigroup element in valuation coordinates, with the label of the basis
/// element it comes from (an exponent vector, or part multiplicities of a
/// shape).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Element {
    pub value: Vec<i64>,
    pub label: Vec<i64>,
}

/// The semigroup of valuation vectors of basis elements, generated by
/// nonnegative vectors `g_j` with labels mapping additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueSemigroup {
    dim: usize,
    generators: Vec<Vec<i64>>,
    labels: Vec<Vec<i64>>,
}

impl ValueSemigroup {
    pub fn new(dim: usize, generators: Vec<Vec<i64>>, labels: Vec<Vec<i64>>) -> Result<Self, Error> {
        if generators.len() != labels.len() {
            return Err(Error::InvalidInput("every generator needs a label".into()));
        }
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
            if g.iter().any(|&x| x < 0) || g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidInput("value generators must be nonnegative and nonzero".into()));
            }
        }
        Ok(ValueSemigroup { dim, generators, labels })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn labels(&self) -> &[Vec<i64>] {
        &self.labels
    }

    pub fn label_dim(&self) -> usize {
        self.labels.first().map_or(0, Vec::len)
    }

    /// Whether `value` is a sum of generators.
    pub fn contains(&self, value: &[i64]) -> bool {
        let mut failed = HashSet::new();
        self.contains_memo(value.to_vec(), &mut failed)
    }

    fn contains_memo(&self, value: Vec<i64>, failed: &mut HashSet<Vec<i64>>) -> bool {
        if value.iter().any(|&x| x < 0) {
            return false;
        }
        if value.iter().all(|&x| x == 0) {
            return true;
        }
        if failed.contains(&value) {
            return false;
        }
        for g in &self.generators {
            let rest: Vec<i64> = value.iter().zip(g).map(|(a, b)| a - b).collect();
            if self.contains_memo(rest, failed) {
                return true;
            }
        }
        failed.insert(value);
        false
    }

    /// All elements with valuation vector `≤ bounds`, keyed by value.
    pub fn enumerate(&self, bounds: &[i64], cap: u64) -> Result<Enumeration, Error> {
        if bounds.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: bounds.len() });
        }
        let zero_label = vec![0; self.label_dim()];
        let mut points: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        points.insert(vec![0; self.dim], zero_label);
        queue.push_back(vec![0; self.dim]);
        while let Some(x) = queue.pop_front() {
            for (g, l) in self.generators.iter().zip(&self.labels) {
                let y: Vec<i64> = x.iter().zip(g).map(|(a, b)| a + b).collect();
                if y.iter().zip(bounds).any(|(a, b)| a > b) || points.contains_key(&y) {
                    continue;
                }
                if points.len() as u64 >= cap {
                    return Err(Error::CapExceeded { needed: box_volume(bounds), cap });
                }
                let label = points[&x].iter().zip(l).map(|(a, b)| a + b).collect();
                points.insert(y.clone(), label);
                queue.push_back(y);
            }
        }
        Ok(Enumeration { points })
    }

    /// Per-coordinate bound on minimal elements of
    /// `{y : ⟨normal_f, y⟩ ≥ threshold_f for all f}`.
    ///
    /// If a minimal element is written as `Σ n_j g_j`, removing any `g_j`
    /// with `n_j ≥ 1` must break some inequality `f`; as every term of
    /// `⟨normal_f, y⟩` is nonnegative this forces
    /// `n_j ≤ ⌈threshold_f / ⟨normal_f, g_j⟩⌉`. Summing the largest such
    /// multiples of every generator bounds every minimal element.
    pub fn critical_bounds(&self, normals: &[Vec<i64>], thresholds: &[Level]) -> Result<Vec<i64>, Error> {
        let mut bounds = vec![0i64; self.dim];
        for g in &self.generators {
            let mut mult: i128 = 0;
            for (h, t) in normals.iter().zip(thresholds) {
                let hg = dot(h, g);
                if hg > 0 && t.num > 0 {
                    mult = mult.max(ceil_div(t.num, t.den.checked_mul(hg).ok_or(Error::Overflow)?));
                }
            }
            for (b, &x) in bounds.iter_mut().zip(g) {
                let add = mult.checked_mul(x as i128).ok_or(Error::Overflow)?;
                let total = (*b as i128).checked_add(add).ok_or(Error::Overflow)?;
                *b = i64::try_from(total).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(bounds)
    }

    /// Minimal elements (under divisibility in the semigroup) of the ideal
    /// `{y : ⟨normal_f, y⟩ ≥ threshold_f for all f}`, ordered
    /// lexicographically by value.
    pub fn minimal_elements(&self, normals: &[Vec<i64>], thresholds: &[Level], cap: u64) -> Result<Vec<Element>, Error> {
        let bounds = self.critical_bounds(normals, thresholds)?;
        let all = self.enumerate(&bounds, cap)?;
        let inside = |y: &[i64]| satisfies(normals, thresholds, y);
        let mut out: Vec<Element> = all
            .points
            .iter()
            .filter(|(y, _)| inside(y))
            .filter(|(y, _)| {
                self.generators.iter().all(|g| {
                    let below: Vec<i64> = y.iter().zip(g).map(|(a, b)| a - b).collect();
                    !(all.points.contains_key(&below) && inside(&below))
                })
            })
            .map(|(y, l)| Element { value: y.clone(), label: l.clone() })
            .collect();
        out.sort();
        Ok(out)
    }

    /// `b − a` lies in the semigroup.
    pub fn divides(&self, a: &[i64], b: &[i64]) -> bool {
        let diff: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
        self.contains(&diff)
    }
}

/// Result of a bounded enumeration of a [`ValueSemigroup`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    points: HashMap<Vec<i64>, Vec<i64>>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, value: &[i64]) -> bool {
        self.points.contains_key(value)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[i64], &[i64])> {
        self.points.iter().map(|(k, l)| (k.as_slice(), l.as_slice()))
    }

    pub fn label(&self, value: &[i64]) -> Option<&[i64]> {
        self.points.get(value).map(Vec::as_slice)
    }

    /// Elements in lexicographic order of value.
    pub fn sorted(&self) -> Vec<Element> {
        let mut v: Vec<Element> =
            self.points.iter().map(|(k, l)| Element { value: k.clone(), label: l.clone() }).collect();
        v.sort();
        v
    }
}

pub(crate) fn dot(h: &[i64], x: &[i64]) -> i128 {
    h.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum()
}

pub(crate) fn satisfies(normals: &[Vec<i64>], thresholds: &[Level], y: &[i64]) -> bool {
    normals.iter().zip(thresholds).all(|(h, t)| dot(h, y) * t.den >= t.num)
}

fn ceil_div(a: i128, b: i128) -> i128 {
    a.div_euclid(b) + i128::from(a.rem_euclid(b) != 0)
}

fn box_volume(bounds: &[i64]) -> u128 {
    bounds.iter().fold(1u128, |acc, &b| acc.saturating_mul(b as u128 + 1))
}

/// A Rees package `(B, v̲, P)`: the valuation map, the polyhedron and its
/// non-coordinate facets `⟨h_k, X⟩ = c_k`, whose offsets are the values of
/// the Rees valuations on the ideal.
#[derive(Clone, Debug)]
pub struct ReesPackage {
    value_map: ValueMap,
    polyhedron: PositivePolyhedron,
    facets: Vec<Hyperplane>,
    system: FacetSystem,
}

impl ReesPackage {
    pub fn new(value_map: ValueMap, polyhedron: PositivePolyhedron) -> Result<Self, Error> {
        if value_map.dim() != polyhedron.dim() {
            return Err(Error::DimensionMismatch { expected: value_map.dim(), found: polyhedron.dim() });
        }
        let facets = polyhedron.facets();
        let system = FacetSystem::new(polyhedron.dim(), &facets)?;
        Ok(ReesPackage { value_map, polyhedron, facets, system })
    }

    pub fn ambient_dim(&self) -> usize {
        self.polyhedron.dim()
    }

    pub fn value_map(&self) -> &ValueMap {
        &self.value_map
    }

    pub fn polyhedron(&self) -> &PositivePolyhedron {
        &self.polyhedron
    }

    pub fn facets(&self) -> &[Hyperplane] {
        &self.facets
    }

    pub fn facet_system(&self) -> &FacetSystem {
        &self.system
    }

    /// `c_k = V_k(I)` for each Rees valuation.
    pub fn facet_values(&self) -> Vec<BigInt> {
        self.facets.iter().map(|h| h.offset().clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn denominator_bound(&self) -> BigInt {
        self.facets.iter().fold(BigInt::one(), |acc, h| acc.lcm(h.offset()))
    }

    /// `⌈we⌉/e`, which defines the same rational power as `w`.
    pub fn stabilize(&self, w: &Rational) -> Rational {
        w.round_up_to_grid(&self.denominator_bound())
    }

    pub fn order(&self, value: &[i64]) -> Order {
        self.system.order(value)
    }

    pub fn contains_value(&self, w: &Rational, value: &[i64]) -> Result<bool, Error> {
        if value.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: value.len() });
        }
        Ok(self.system.contains(Level::new(w)?, value))
    }

    pub fn value_semigroup(&self) -> ValueSemigroup {
        self.value_map.value_semigroup()
    }

    /// Thresholds `w·c_k` for the facet inequalities at level `w`.
    pub fn thresholds(&self, w: &Rational) -> Result<Vec<Level>, Error> {
        let w = Level::new(w)?;
        self.system
            .offsets()
            .iter()
            .map(|&c| {
                let num = w.num.checked_mul(c as i128).ok_or(Error::Overflow)?;
                Ok(Level { num, den: w.den })
            })
            .collect()
    }

    /// Minimal basis valuation vectors spanning `overline(I^w)`.
    pub fn minimal_generators(&self, w: &Rational, cap: u64) -> Result<Vec<Element>, Error> {
        let w = self.stabilize(w);
        let thresholds = self.thresholds(&w)?;
        self.value_semigroup().minimal_elements(self.system.normals(), &thresholds, cap)
    }
}

/// `lcm` of the facet offsets; `overline(I^w) = overline(I^{⌈we⌉/e})`.
pub fn denominator_bound(pkg: &ReesPackage) -> BigInt {
    pkg.denominator_bound()
}
