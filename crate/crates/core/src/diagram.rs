//! Shapes of standard monomials for determinantal, symmetric, Pfaffian and
//! Hankel ideals, and their Rees packages in terms of `γ_1, γ_2, …`.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::geometry::{scale_and_ceil_lattice, FacetSystem, Level, PositivePolyhedron, Rational};
use crate::package::{ReesPackage, ValueMap, ValueSemigroup};
use crate::Error;

/// A weakly decreasing tuple of positive parts `(s_1, …, s_p)`; the empty
/// diagram stands for the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Diagram {
    parts: Vec<u32>,
}

impl Diagram {
    /// Parts may be given in any order.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput("diagram parts must be positive".into()));
        }
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Diagram { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `self ⊆ other`: no more parts, each at most the corresponding part.
    pub fn is_contained_in(&self, other: &Diagram) -> bool {
        self.parts.len() <= other.parts.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// `(γ_1(σ), …, γ_d(σ))`.
    pub fn gamma_vector(&self, d: usize) -> Vec<i64> {
        (1..=d as u32).map(|t| gamma(t, self) as i64).collect()
    }

    /// Number of parts equal to `t`, for `t = 1..=bound`.
    pub fn multiplicities(&self, bound: u32) -> Vec<i64> {
        (1..=bound).map(|t| self.parts.iter().filter(|&&s| s == t).count() as i64).collect()
    }

    pub fn from_multiplicities(m: &[i64]) -> Result<Self, Error> {
        let mut parts = Vec::new();
        for (i, &k) in m.iter().enumerate() {
            let k = usize::try_from(k).map_err(|_| Error::InvalidInput("negative multiplicity".into()))?;
            parts.extend(std::iter::repeat_n(i as u32 + 1, k));
        }
        Diagram::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Diagram {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self, Error> {
        Diagram::new(parts)
    }
}

impl From<Diagram> for Vec<u32> {
    fn from(d: Diagram) -> Self {
        d.parts
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `γ_t(σ) = Σ_i max(0, s_i − t + 1)`.
pub fn gamma(t: u32, sigma: &Diagram) -> u64 {
    assert!(t >= 1, "γ_t is defined for t ≥ 1");
    sigma.parts.iter().map(|&s| u64::from((s + 1).saturating_sub(t))).sum()
}

/// The matrix whose minors (or Pfaffians) index the ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub enum MatrixFamily {
    Generic { m: u32, n: u32 },
    Symmetric { n: u32 },
    Pfaffian { n: u32 },
    Hankel { n: u32 },
}

impl MatrixFamily {
    pub fn generic(m: u32, n: u32) -> Result<Self, Error> {
        MatrixFamily::Generic { m, n }.validated()
    }

    pub fn symmetric(n: u32) -> Result<Self, Error> {
        MatrixFamily::Symmetric { n }.validated()
    }

    pub fn pfaffian(n: u32) -> Result<Self, Error> {
        MatrixFamily::Pfaffian { n }.validated()
    }

    pub fn hankel(n: u32) -> Result<Self, Error> {
        MatrixFamily::Hankel { n }.validated()
    }

    fn validated(self) -> Result<Self, Error> {
        match self {
            MatrixFamily::Generic { m, n } if m == 0 || m > n => {
                Err(Error::InvalidInput("generic family needs 1 ≤ m ≤ n".into()))
            }
            MatrixFamily::Symmetric { n: 0 } | MatrixFamily::Hankel { n: 0 } => {
                Err(Error::InvalidInput("matrix size must be positive".into()))
            }
            MatrixFamily::Pfaffian { n } if n < 2 => Err(Error::InvalidInput("Pfaffian family needs n ≥ 2".into())),
            f => Ok(f),
        }
    }

    /// Largest allowed part of a shape.
    pub fn part_bound(&self) -> u32 {
        match *self {
            MatrixFamily::Generic { m, .. } => m,
            MatrixFamily::Symmetric { n } => n,
            MatrixFamily::Pfaffian { n } => n / 2,
            MatrixFamily::Hankel { n } => n.div_ceil(2),
        }
    }

    /// Number of `γ_t` in the valuation tuple.
    pub fn gamma_dim(&self) -> usize {
        (match *self {
            MatrixFamily::Generic { m, .. } => m,
            MatrixFamily::Symmetric { n } | MatrixFamily::Hankel { n } => n,
            MatrixFamily::Pfaffian { n } => n / 2,
        }) as usize
    }

    pub fn is_hankel(&self) -> bool {
        matches!(self, MatrixFamily::Hankel { .. })
    }

    /// Shapes add by concatenation, so their `γ`-vectors form the semigroup
    /// generated by `γ̲((t)) = (t, t−1, …, 1, 0, …)`; labels count parts.
    pub fn value_semigroup(&self) -> ValueSemigroup {
        let b = self.part_bound();
        let d = self.gamma_dim();
        let gens = (1..=b).map(|t| Diagram { parts: vec![t] }.gamma_vector(d)).collect();
        let labels = (1..=b).map(|t| (1..=b).map(|s| i64::from(s == t)).collect()).collect();
        ValueSemigroup::new(d, gens, labels).expect("single-part shapes have nonzero γ-vectors")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawFamily {
    Generic { m: u32, n: u32 },
    Symmetric { n: u32 },
    Pfaffian { n: u32 },
    Hankel { n: u32 },
}

impl TryFrom<RawFamily> for MatrixFamily {
    type Error = Error;
    fn try_from(raw: RawFamily) -> Result<Self, Error> {
        match raw {
            RawFamily::Generic { m, n } => MatrixFamily::generic(m, n),
            RawFamily::Symmetric { n } => MatrixFamily::symmetric(n),
            RawFamily::Pfaffian { n } => MatrixFamily::pfaffian(n),
            RawFamily::Hankel { n } => MatrixFamily::hankel(n),
        }
    }
}

impl From<MatrixFamily> for RawFamily {
    fn from(f: MatrixFamily) -> Self {
        match f {
            MatrixFamily::Generic { m, n } => RawFamily::Generic { m, n },
            MatrixFamily::Symmetric { n } => RawFamily::Symmetric { n },
            MatrixFamily::Pfaffian { n } => RawFamily::Pfaffian { n },
            MatrixFamily::Hankel { n } => RawFamily::Hankel { n },
        }
    }
}

/// `I_Λ`, `J_Λ`, `P_Λ` or `H_σ`: a sum of products indexed by an antichain
/// of shapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagramIdeal", into = "RawDiagramIdeal")]
pub struct DiagramIdeal {
    family: MatrixFamily,
    lambda: Vec<Diagram>,
}

impl DiagramIdeal {
    /// Drops every shape containing another one and sorts the rest.
    pub fn new(family: MatrixFamily, lambda: Vec<Diagram>) -> Result<Self, Error> {
        if lambda.is_empty() {
            return Err(Error::InvalidInput("at least one diagram is required".into()));
        }
        if family.is_hankel() && lambda.len() != 1 {
            return Err(Error::InvalidInput("Hankel ideals are products H_σ: give exactly one diagram".into()));
        }
        let bound = family.part_bound();
        if let Some(bad) = lambda.iter().find(|s| s.largest_part() > bound) {
            return Err(Error::InvalidInput(format!("diagram {bad} has a part larger than {bound}")));
        }
        let mut lambda = lambda;
        lambda.sort();
        lambda.dedup();
        let minimal = lambda
            .iter()
            .filter(|s| !lambda.iter().any(|t| t != *s && t.is_contained_in(s)))
            .cloned()
            .collect();
        Ok(DiagramIdeal { family, lambda: minimal })
    }

    pub fn family(&self) -> &MatrixFamily {
        &self.family
    }

    pub fn lambda(&self) -> &[Diagram] {
        &self.lambda
    }

    pub fn gamma_polyhedron(&self) -> PositivePolyhedron {
        let d = self.family.gamma_dim();
        let points: Vec<Vec<i64>> = self.lambda.iter().map(|s| s.gamma_vector(d)).collect();
        PositivePolyhedron::from_integer_points(d, &points).expect("γ-vectors are nonnegative")
    }

    fn check_shape(&self, sigma: &Diagram) -> Result<(), Error> {
        let bound = self.family.part_bound();
        if sigma.largest_part() > bound {
            return Err(Error::InvalidInput(format!("diagram {sigma} has a part larger than {bound}")));
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RawDiagramIdeal {
    family: MatrixFamily,
    lambda: Vec<Diagram>,
}

impl TryFrom<RawDiagramIdeal> for DiagramIdeal {
    type Error = Error;
    fn try_from(raw: RawDiagramIdeal) -> Result<Self, Error> {
        DiagramIdeal::new(raw.family, raw.lambda)
    }
}

impl From<DiagramIdeal> for RawDiagramIdeal {
    fn from(d: DiagramIdeal) -> Self {
        RawDiagramIdeal { family: d.family, lambda: d.lambda }
    }
}

/// `(B, γ̲, conv(γ̲(Λ)) + ℝ^d_{≥0})`.
pub fn rees_package_diagrams(d: &DiagramIdeal) -> Result<ReesPackage, Error> {
    let pkg = ReesPackage::new(ValueMap::Gamma(d.family), d.gamma_polyhedron())?;
    if d.family.is_hankel() {
        let s1 = d.lambda[0].largest_part() as usize;
        debug_assert!(canonical_valuation_indices(&pkg).is_some_and(|ts| ts.iter().all(|&t| t <= s1)));
    }
    Ok(pkg)
}

/// If every Rees valuation of the package is a single coordinate valuation
/// `γ_t`, the indices `t` (1-based) in facet order.
pub fn canonical_valuation_indices(pkg: &ReesPackage) -> Option<Vec<usize>> {
    pkg.facets()
        .iter()
        .map(|h| {
            let nonzero: Vec<usize> = h.normal().iter().enumerate().filter(|(_, x)| x.to_u8() != Some(0)).map(|(i, _)| i).collect();
            match nonzero.as_slice() {
                [i] if h.normal()[*i].to_u8() == Some(1) => Some(i + 1),
                _ => None,
            }
        })
        .collect()
}

/// Whether standard monomials of shape `sigma` lie in `overline(I_Λ^w)`.
pub fn rational_power_shape_membership(d: &DiagramIdeal, w: &Rational, sigma: &Diagram) -> Result<bool, Error> {
    d.check_shape(sigma)?;
    let gamma = d.gamma_polyhedron();
    let system = FacetSystem::new(gamma.dim(), &gamma.facets())?;
    Ok(system.contains(Level::new(w)?, &sigma.gamma_vector(gamma.dim())))
}

/// Exponent vectors `a` with `overline(I_Λ^w) = Σ_a ∩_i I_i^{(a_i)}`: the
/// componentwise-minimal lattice points of `wΓ`. For a Hankel product this is
/// the single vector `(⌈wγ_i(σ)⌉)_i`.
pub fn symbolic_intersection_exponents(d: &DiagramIdeal, w: &Rational, cap: u64) -> Result<Vec<Vec<i64>>, Error> {
    if w.is_negative() {
        return Err(Error::InvalidInput("level must be nonnegative".into()));
    }
    let dim = d.family.gamma_dim();
    if d.family.is_hankel() {
        let a: Option<Vec<i64>> =
            d.lambda[0].gamma_vector(dim).into_iter().map(|g| (w * &Rational::from_int(g)).ceil().to_i64()).collect();
        return Ok(vec![a.ok_or(Error::Overflow)?]);
    }
    let gamma = d.gamma_polyhedron();
    let facets = gamma.facets();
    let top = facets.iter().map(|h| h.offset().clone()).max().unwrap_or_default();
    let side = (w * &Rational::from_int(top)).ceil().to_i64().ok_or(Error::Overflow)?;
    let volume = (side as u128 + 1).saturating_pow(dim as u32);
    if volume > u128::from(cap) {
        return Err(Error::CapExceeded { needed: volume, cap });
    }
    let points = scale_and_ceil_lattice(&gamma, w, &vec![side; dim])?;
    let system = FacetSystem::new(dim, &facets)?;
    let level = Level::new(w)?;
    Ok(points
        .iter()
        .filter(|a| {
            (0..dim).all(|i| {
                if a[i] == 0 {
                    return true;
                }
                let mut below = a.to_vec();
                below[i] -= 1;
                !system.contains(level, &below)
            })
        })
        .cloned()
        .collect())
}

/// `ρ_a(I_t) = t(m − t + 1)/m` for the ideal of `t`-minors of a generic
/// `m × n` matrix.
pub fn det_asymptotic_resurgence(m: u32, t: u32) -> Result<Rational, Error> {
    if t == 0 || t > m {
        return Err(Error::InvalidInput(format!("need 1 ≤ t ≤ m, got t = {t}, m = {m}")));
    }
    Rational::new(i64::from(t) * i64::from(m - t + 1), i64::from(m))
}
