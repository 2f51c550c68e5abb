//! Ideals `IT + JT` with `I` and `J` in the two tensor factors of `T`: the
//! joined Rees package, the summation formula for rational powers and the
//! asymptotic sandwich around it.
//!
//! Basis elements of `T` are pairs `(x, y)` of basis elements of the two
//! factors, handled through their valuation vectors. A point of `wΩ` splits as
//! `αΓ + (w − α)Σ`, so `(x, y)` lies in `wΩ` exactly when some
//! `α ≤ ord₁(x)` has `w − α ≤ ord₂(y)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::geometry::lp::{minimize, LpOutcome};
use crate::geometry::{lcm_all, polyhedron_membership, FacetSystem, Hyperplane, Level, Order, PositivePolyhedron, Rational};
use crate::package::{Element, Enumeration, ReesPackage, ValueSemigroup};
use crate::semigroup::{rational_power_generators, rees_package_monomial, MonomialIdeal};
use crate::Error;

/// A Rees valuation of `IT + JT` obtained as the star product of the `left`-th
/// Rees valuation of `I` and the `right`-th of `J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairedFacet {
    pub hyperplane: Hyperplane,
    pub left: usize,
    pub right: usize,
}

/// `(B ⊗ C, (v̲, γ̲), Ω)` with `Ω = conv(Γ ⊕ 0, 0 ⊕ Σ) + ℝ_{≥0}`.
#[derive(Clone, Debug)]
pub struct JoinedPackage {
    left: ReesPackage,
    right: ReesPackage,
    omega: PositivePolyhedron,
    omega_facets: Vec<Hyperplane>,
    omega_system: FacetSystem,
    paired_facets: Vec<PairedFacet>,
}

impl JoinedPackage {
    pub fn new(left: ReesPackage, right: ReesPackage) -> Result<Self, Error> {
        let omega = left.polyhedron().join(right.polyhedron());
        let omega_facets = omega.facets();
        let omega_system = FacetSystem::new(omega.dim(), &omega_facets)?;
        let mut paired_facets = Vec::with_capacity(left.facets().len() * right.facets().len());
        for (k1, h1) in left.facets().iter().enumerate() {
            for (k2, h2) in right.facets().iter().enumerate() {
                paired_facets.push(PairedFacet { hyperplane: h1.star(h2), left: k1, right: k2 });
            }
        }
        Ok(JoinedPackage { left, right, omega, omega_facets, omega_system, paired_facets })
    }

    pub fn left(&self) -> &ReesPackage {
        &self.left
    }

    pub fn right(&self) -> &ReesPackage {
        &self.right
    }

    pub fn omega(&self) -> &PositivePolyhedron {
        &self.omega
    }

    pub fn paired_facets(&self) -> &[PairedFacet] {
        &self.paired_facets
    }

    /// Facets of `Ω` computed directly from its generators.
    pub fn omega_facets(&self) -> &[Hyperplane] {
        &self.omega_facets
    }

    /// Whether the facets of `Ω` are exactly the star products.
    pub fn star_products_are_facets(&self) -> bool {
        let mut stars: Vec<Hyperplane> = self.paired_facets.iter().map(|p| p.hyperplane.clone()).collect();
        stars.sort();
        stars.dedup();
        stars == self.omega_facets
    }

    pub fn left_dim(&self) -> usize {
        self.left.ambient_dim()
    }

    pub fn right_dim(&self) -> usize {
        self.right.ambient_dim()
    }

    /// `lcm(e₁, e₂, den w)`: every rational power of either factor below `w`
    /// is attained on the grid `ℤ/E`.
    pub fn grid(&self, w: &Rational) -> BigInt {
        lcm_all([&self.left.denominator_bound(), &self.right.denominator_bound(), w.denom()])
    }

    /// `(x, y) ∈ wΩ`.
    pub fn contains_pair(&self, w: &Rational, x: &[i64], y: &[i64]) -> Result<bool, Error> {
        let point: Vec<i64> = x.iter().chain(y).copied().collect();
        if point.len() != self.omega.dim() {
            return Err(Error::DimensionMismatch { expected: self.omega.dim(), found: point.len() });
        }
        Ok(self.omega_system.contains(Level::new(w)?, &point))
    }
}

pub fn join_packages(p: &ReesPackage, q: &ReesPackage) -> Result<JoinedPackage, Error> {
    JoinedPackage::new(p.clone(), q.clone())
}

/// A decomposition `point = left_point + right_point` with
/// `left_point ∈ αΓ` and `right_point ∈ (w − α)Σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaCertificate {
    pub alpha: Rational,
    pub left_point: Vec<Rational>,
    pub right_point: Vec<Rational>,
}

/// Splits a point of `wΩ` by exact LP, taking the largest feasible `α`.
/// Returns `None` when the point is not in `wΩ`.
pub fn summation_split(jp: &JoinedPackage, w: &Rational, point: &[Rational]) -> Result<Option<AlphaCertificate>, Error> {
    let (d1, d2) = (jp.left_dim(), jp.right_dim());
    if point.len() != d1 + d2 {
        return Err(Error::DimensionMismatch { expected: d1 + d2, found: point.len() });
    }
    if w.is_negative() {
        return Err(Error::InvalidInput("level must be nonnegative".into()));
    }
    if point.iter().any(Rational::is_negative) {
        return Ok(None);
    }
    let gl = jp.left.polyhedron().generators();
    let gr = jp.right.polyhedron().generators();
    let (n1, n2) = (gl.len(), gr.len());
    let width = n1 + n2 + d1 + d2;
    let zero = BigRational::zero;
    // variables: λ (left generators), μ (right generators), slack per coordinate
    let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(d1 + d2 + 1);
    let mut b: Vec<BigRational> = Vec::with_capacity(d1 + d2 + 1);
    for k in 0..d1 + d2 {
        let mut row = vec![zero(); width];
        if k < d1 {
            for (i, g) in gl.iter().enumerate() {
                row[i] = g[k].inner().clone();
            }
        } else {
            for (j, g) in gr.iter().enumerate() {
                row[n1 + j] = g[k - d1].inner().clone();
            }
        }
        row[n1 + n2 + k] = BigRational::one();
        a.push(row);
        b.push(point[k].inner().clone());
    }
    let mut row = vec![zero(); width];
    for x in row.iter_mut().take(n1 + n2) {
        *x = BigRational::one();
    }
    a.push(row);
    b.push(w.inner().clone());
    let mut c = vec![zero(); width];
    for x in c.iter_mut().take(n1) {
        *x = -BigRational::one();
    }
    let LpOutcome::Optimal(sol) = minimize(&a, &b, Some(&c)) else {
        return Ok(None);
    };
    let alpha: Rational = sol[..n1].iter().fold(BigRational::zero(), |acc, x| acc + x).into();
    let cert = AlphaCertificate {
        alpha: alpha.clone(),
        left_point: point[..d1].to_vec(),
        right_point: point[d1..].to_vec(),
    };
    let rest = w - &alpha;
    assert!(
        polyhedron_membership(jp.left.polyhedron(), &alpha, &cert.left_point)?
            && polyhedron_membership(jp.right.polyhedron(), &rest, &cert.right_point)?,
        "LP split failed verification"
    );
    Ok(Some(cert))
}

fn capped(o: Order, w: Level) -> Level {
    match o {
        Order::Finite(x) if x < w => x,
        _ => w,
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// One tensor factor: its value semigroup enumerated in a box, with the
/// orders of the enumerated elements.
struct Side<'a> {
    pkg: &'a ReesPackage,
    semigroup: ValueSemigroup,
    points: Enumeration,
    /// Distinct finite orders attained in the box, ascending.
    orders: Vec<Level>,
}

impl<'a> Side<'a> {
    fn new(pkg: &'a ReesPackage, extra: &[i64], w: &Rational, cap: u64) -> Result<Self, Error> {
        let semigroup = pkg.value_semigroup();
        let own = semigroup.critical_bounds(pkg.facet_system().normals(), &pkg.thresholds(w)?)?;
        let bounds: Vec<i64> = own.iter().zip(extra).map(|(a, b)| *a.max(b)).collect();
        let points = semigroup.enumerate(&bounds, cap)?;
        let mut orders: Vec<Level> = points
            .iter()
            .filter_map(|(v, _)| match pkg.order(v) {
                Order::Finite(l) => Some(l),
                Order::Infinite => None,
            })
            .collect();
        orders.sort();
        orders.dedup();
        Ok(Side { pkg, semigroup, points, orders })
    }

    /// The least attained order `≥ α`; `overline(I^α)` equals the rational
    /// power at that order.
    fn attained(&self, alpha: Level) -> Level {
        if self.pkg.is_unit() {
            return Level::zero();
        }
        let i = self.orders.partition_point(|o| *o < alpha);
        *self.orders.get(i).expect("the box holds the generators of every power up to w")
    }

    /// Elements that can occur in a minimal pair at level `w`: no element
    /// one generator below has at least the same order (capped at `w`).
    fn candidates(&self, w: Level) -> Vec<Element> {
        let mut out: Vec<Element> = self
            .points
            .iter()
            .filter(|(x, _)| {
                let ox = capped(self.pkg.order(x), w);
                self.semigroup.generators().iter().all(|g| {
                    let below = sub(x, g);
                    !self.points.contains(&below) || capped(self.pkg.order(&below), w) < ox
                })
            })
            .map(|(x, l)| Element { value: x.to_vec(), label: l.to_vec() })
            .collect();
        out.sort();
        out
    }

    /// Elements one generator below `x` inside the box.
    fn below(&self, x: &[i64]) -> Vec<Vec<i64>> {
        self.semigroup
            .generators()
            .iter()
            .map(|g| sub(x, g))
            .filter(|b| self.points.contains(b))
            .collect()
    }
}

/// A pair of basis elements, one per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PairElement {
    pub left: Element,
    pub right: Element,
}

impl PairElement {
    /// Concatenated labels (exponents or part multiplicities).
    pub fn label(&self) -> Vec<i64> {
        self.left.label.iter().chain(&self.right.label).copied().collect()
    }
}

/// Minimal pairs of `left × right` candidates for a membership test that
/// factors through per-element profiles.
fn minimal_pairs<P>(
    left: &Side<'_>,
    right: &Side<'_>,
    cand1: &[Element],
    cand2: &[Element],
    profile1: impl Fn(&[i64]) -> P,
    profile2: impl Fn(&[i64]) -> P,
    member: impl Fn(&P, &P) -> bool,
) -> Vec<PairElement> {
    let below1: Vec<Vec<P>> = cand1.iter().map(|x| left.below(&x.value).iter().map(|b| profile1(b)).collect()).collect();
    let below2: Vec<Vec<P>> = cand2.iter().map(|y| right.below(&y.value).iter().map(|b| profile2(b)).collect()).collect();
    let p1: Vec<P> = cand1.iter().map(|x| profile1(&x.value)).collect();
    let p2: Vec<P> = cand2.iter().map(|y| profile2(&y.value)).collect();
    let mut out = Vec::new();
    for (i, x) in cand1.iter().enumerate() {
        for (j, y) in cand2.iter().enumerate() {
            if member(&p1[i], &p2[j])
                && !below1[i].iter().any(|b| member(b, &p2[j]))
                && !below2[j].iter().any(|b| member(&p1[i], b))
            {
                out.push(PairElement { left: x.clone(), right: y.clone() });
            }
        }
    }
    out
}

/// Grid points `k/E` for `k = 0..=wE` as levels, ascending.
fn grid_levels(w: &Rational, e: &BigInt) -> Result<Vec<Level>, Error> {
    let top = (w * &Rational::from_int(e.clone())).floor();
    let top = top.to_i128().ok_or(Error::Overflow)?;
    let e = e.to_i128().ok_or(Error::Overflow)?;
    Ok((0..=top).map(|k| Level { num: k, den: e }).collect())
}

fn level_sub(w: Level, a: Level) -> Level {
    Level { num: w.num * a.den - a.num * w.den, den: w.den * a.den }
}

/// The joined package prepared for one level `w`.
struct PairSpace<'a> {
    jp: &'a JoinedPackage,
    w: Rational,
    level: Level,
    left: Side<'a>,
    right: Side<'a>,
    grid: BigInt,
}

impl<'a> PairSpace<'a> {
    fn new(jp: &'a JoinedPackage, w: &Rational, cap: u64) -> Result<Self, Error> {
        if w.is_negative() {
            return Err(Error::InvalidInput("level must be nonnegative".into()));
        }
        let level = Level::new(w)?;
        let (d1, d2) = (jp.left_dim(), jp.right_dim());
        let normals = jp.omega_system.normals();
        let thresholds: Vec<Level> = jp
            .omega_system
            .offsets()
            .iter()
            .map(|&c| Level { num: level.num * c as i128, den: level.den })
            .collect();
        let n1: Vec<Vec<i64>> = normals.iter().map(|h| h[..d1].to_vec()).collect();
        let n2: Vec<Vec<i64>> = normals.iter().map(|h| h[d1..d1 + d2].to_vec()).collect();
        let b1 = jp.left.value_semigroup().critical_bounds(&n1, &thresholds)?;
        let b2 = jp.right.value_semigroup().critical_bounds(&n2, &thresholds)?;
        let left = Side::new(&jp.left, &b1, w, cap)?;
        let right = Side::new(&jp.right, &b2, w, cap)?;
        Ok(PairSpace { jp, w: w.clone(), level, left, right, grid: jp.grid(w) })
    }

    fn alpha_terms(&self) -> Result<Vec<Rational>, Error> {
        let mut kept: Vec<(Level, Level, Level)> = Vec::new();
        for alpha in grid_levels(&self.w, &self.grid)?.into_iter().rev() {
            let a = self.left.attained(alpha);
            let b = self.right.attained(level_sub(self.level, alpha));
            if !kept.iter().any(|&(_, a2, b2)| a2 <= a && b2 <= b) {
                kept.push((alpha, a, b));
            }
        }
        let survivors: Vec<Level> = kept
            .iter()
            .enumerate()
            .filter(|&(i, &(_, a, b))| !kept.iter().enumerate().any(|(j, &(_, a2, b2))| j != i && a2 <= a && b2 <= b))
            .map(|(_, &(alpha, _, _))| alpha)
            .collect();
        let mut out: Vec<Rational> = survivors.into_iter().map(Level::to_rational).collect();
        out.sort();
        Ok(out)
    }

    fn omega_profile(&self, block: std::ops::Range<usize>) -> impl Fn(&[i64]) -> Vec<i128> + '_ {
        move |x: &[i64]| {
            self.jp
                .omega_system
                .normals()
                .iter()
                .map(|h| h[block.clone()].iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum())
                .collect()
        }
    }

    /// Minimal generators of `overline((IT + JT)^w)`, from the facets of `Ω`.
    fn lhs(&self) -> Vec<PairElement> {
        let (d1, d2) = (self.jp.left_dim(), self.jp.right_dim());
        let offsets = self.jp.omega_system.offsets();
        let level = self.level;
        let member = |p: &Vec<i128>, q: &Vec<i128>| {
            p.iter().zip(q).zip(offsets).all(|((a, b), &c)| (a + b) * level.den >= level.num * c as i128)
        };
        let mut out = minimal_pairs(
            &self.left,
            &self.right,
            &self.left.candidates(level),
            &self.right.candidates(level),
            self.omega_profile(0..d1),
            self.omega_profile(d1..d1 + d2),
            member,
        );
        out.sort();
        out
    }

    /// Minimal generators of `Σ_α overline(I^α) overline(J^{w−α})` over the
    /// given terms.
    fn rhs(&self, terms: &[Rational], cap: u64) -> Result<Vec<PairElement>, Error> {
        let mut all = Vec::new();
        for alpha in terms {
            let g1 = self.jp.left.minimal_generators(alpha, cap)?;
            let g2 = self.jp.right.minimal_generators(&(&self.w - alpha), cap)?;
            for x in &g1 {
                for y in &g2 {
                    all.push(PairElement { left: x.clone(), right: y.clone() });
                }
            }
        }
        all.sort();
        all.dedup();
        let minimal = all
            .iter()
            .filter(|q| !all.iter().any(|p| p != *q && self.divides(p, q)))
            .cloned()
            .collect();
        Ok(minimal)
    }

    /// Minimal generators of `∩_τ (overline(I^τ)T + overline(J^{w−τ})T)` over
    /// the grid `τ ∈ ℤ/2E`.
    fn weaker_form(&self) -> Result<Vec<PairElement>, Error> {
        let taus = grid_levels(&self.w, &(&self.grid * BigInt::from(2)))?;
        let level = self.level;
        let member = |p: &Order, q: &Order| {
            taus.iter().all(|&t| p.at_least(t) || q.at_least(level_sub(level, t)))
        };
        let mut out = minimal_pairs(
            &self.left,
            &self.right,
            &self.left.candidates(level),
            &self.right.candidates(level),
            |x| self.jp.left.order(x),
            |y| self.jp.right.order(y),
            member,
        );
        out.sort();
        Ok(out)
    }

    fn divides(&self, p: &PairElement, q: &PairElement) -> bool {
        let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
        le(&p.left.value, &q.left.value)
            && le(&p.right.value, &q.right.value)
            && self.left.semigroup.divides(&p.left.value, &q.left.value)
            && self.right.semigroup.divides(&p.right.value, &q.right.value)
    }

    /// First element of `a` not divisible by any element of `b`.
    fn undominated<'b>(&self, a: &'b [PairElement], b: &[PairElement]) -> Option<&'b PairElement> {
        a.iter().find(|q| !b.iter().any(|p| self.divides(p, q)))
    }

    fn in_omega(&self, p: &PairElement) -> bool {
        let point: Vec<i64> = p.left.value.iter().chain(&p.right.value).copied().collect();
        self.jp.omega_system.contains(self.level, &point)
    }
}

/// The irredundant list of `α` in `{0, 1/E, …, w}` whose terms
/// `overline(I^α) overline(J^{w−α})` sum to `overline((IT + JT)^w)`.
///
/// Each term equals the product at the least attained orders `a(α) ≥ α` and
/// `b(α) ≥ w − α`; a term is redundant exactly when another term has both
/// orders no larger. Scanning from the largest `α` keeps the first of equal
/// terms.
pub fn alpha_term_list(jp: &JoinedPackage, w: &Rational, cap: u64) -> Result<Vec<Rational>, Error> {
    PairSpace::new(jp, w, cap)?.alpha_terms()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Equal,
    LhsNotInRhs,
    RhsNotInLhs,
}

/// Outcome of comparing both sides of the summation formula at one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SummationReport {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    pub alpha_terms: Vec<Rational>,
    pub lhs: Vec<Vec<i64>>,
    pub rhs: Vec<Vec<i64>>,
    pub status: &'static str,
}

/// Compares the minimal generators of `overline((IT + JT)^w)` (from the facets
/// of `Ω`) with those of the sum over [`alpha_term_list`], by mutual
/// divisibility.
pub fn check_summation(jp: &JoinedPackage, w: &Rational, cap: u64) -> Result<SummationReport, Error> {
    let space = PairSpace::new(jp, w, cap)?;
    let alpha_terms = space.alpha_terms()?;
    let lhs = space.lhs();
    let rhs = space.rhs(&alpha_terms, cap)?;
    let (verdict, witness) = if let Some(q) = space.undominated(&lhs, &rhs) {
        (Verdict::LhsNotInRhs, Some(q.label()))
    } else if let Some(q) = space.undominated(&rhs, &lhs) {
        (Verdict::RhsNotInLhs, Some(q.label()))
    } else {
        (Verdict::Equal, None)
    };
    Ok(SummationReport {
        verdict,
        witness,
        alpha_terms,
        lhs: lhs.iter().map(PairElement::label).collect(),
        rhs: rhs.iter().map(PairElement::label).collect(),
        status: if verdict == Verdict::Equal { "consistent with conjecture" } else { "implementation inconsistency" },
    })
}

pub fn check_summation_monomial(i: &MonomialIdeal, j: &MonomialIdeal, w: &Rational, cap: u64) -> Result<SummationReport, Error> {
    let jp = JoinedPackage::new(rees_package_monomial(i)?, rees_package_monomial(j)?)?;
    check_summation(&jp, w, cap)
}

/// Whether the intersection `∩_τ (overline(I^τ)T + overline(J^{w−τ})T)`
/// equals `overline((IT + JT)^w)`.
pub fn check_weaker_form(jp: &JoinedPackage, w: &Rational, cap: u64) -> Result<bool, Error> {
    let space = PairSpace::new(jp, w, cap)?;
    let lhs = space.lhs();
    let meet = space.weaker_form()?;
    Ok(space.undominated(&lhs, &meet).is_none() && space.undominated(&meet, &lhs).is_none())
}

/// Both inclusions of the asymptotic sandwich at one `τ`, checked on
/// generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichReport {
    pub w: Rational,
    pub tau: Rational,
    /// Every grid term `overline(I^α) overline(J^{w−α})` lies in
    /// `overline((IT + JT)^w)`.
    pub left_inclusion: bool,
    /// `overline((IT + JT)^w) ⊆ overline(I^τ)T + overline(J^{w−τ})T`.
    pub right_inclusion: bool,
    /// The right inclusion at every grid `τ ∈ [0, w]`.
    pub right_inclusion_all_grid: bool,
    /// Least grid `w₀ > 0` with the right inclusion for all grid
    /// `τ ∈ [w₀, w − w₀]`.
    pub w0: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
}

pub fn asymptotic_sandwich_check(jp: &JoinedPackage, w: &Rational, tau: &Rational, cap: u64) -> Result<SandwichReport, Error> {
    if tau.is_negative() || tau > w {
        return Err(Error::InvalidInput("need 0 ≤ tau ≤ w".into()));
    }
    let space = PairSpace::new(jp, w, cap)?;
    let grid = grid_levels(w, &space.grid)?;
    let mut witness = None;
    let mut left_inclusion = true;
    for alpha in &grid {
        let alpha = alpha.to_rational();
        let g1 = jp.left.minimal_generators(&alpha, cap)?;
        let g2 = jp.right.minimal_generators(&(w - &alpha), cap)?;
        for x in &g1 {
            for y in &g2 {
                let p = PairElement { left: x.clone(), right: y.clone() };
                if left_inclusion && !space.in_omega(&p) {
                    left_inclusion = false;
                    witness = Some(p.label());
                }
            }
        }
    }
    let lhs = space.lhs();
    let right_at = |t: Level| -> Option<&PairElement> {
        let rest = level_sub(space.level, t);
        lhs.iter().find(|p| !(jp.left.order(&p.left.value).at_least(t) || jp.right.order(&p.right.value).at_least(rest)))
    };
    let tau_level = Level::new(tau)?;
    let right_fail = right_at(tau_level);
    if witness.is_none() {
        witness = right_fail.map(PairElement::label);
    }
    let holds: Vec<bool> = grid.iter().map(|&t| right_at(t).is_none()).collect();
    let w0 = (1..grid.len())
        .take_while(|&k| 2 * k < grid.len())
        .find(|&k| holds[k..grid.len() - k].iter().all(|&h| h))
        .map(|k| grid[k].to_rational());
    Ok(SandwichReport {
        w: w.clone(),
        tau: tau.clone(),
        left_inclusion,
        right_inclusion: right_fail.is_none(),
        right_inclusion_all_grid: holds.iter().all(|&h| h),
        w0,
        witness,
    })
}

pub fn asymptotic_sandwich_check_monomial(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    w: &Rational,
    tau: &Rational,
    cap: u64,
) -> Result<SandwichReport, Error> {
    let jp = JoinedPackage::new(rees_package_monomial(i)?, rees_package_monomial(j)?)?;
    asymptotic_sandwich_check(&jp, w, tau, cap)
}

/// Whether `x^point` lies in `Σ_α overline(I^α) overline(J^{w−α})` for two
/// ideals of the same polynomial ring, over the grid `ℤ/E`.
pub fn same_ring_sum_membership(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    w: &Rational,
    point: &[i64],
    cap: u64,
) -> Result<bool, Error> {
    let (pi, pj) = (rees_package_monomial(i)?, rees_package_monomial(j)?);
    let e = lcm_all([&pi.denominator_bound(), &pj.denominator_bound(), w.denom()]);
    for alpha in grid_levels(w, &e)? {
        let alpha = alpha.to_rational();
        let g1 = rational_power_generators(i, &alpha, cap)?;
        let g2 = rational_power_generators(j, &(w - &alpha), cap)?;
        let hit = g1.iter().any(|a| {
            g2.iter().any(|b| {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                i.semigroup().divides(&sum, point)
            })
        });
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `x^{4n+2} y^{4n+2}` against `I = (xy³)`, `J = (x³y)` at `w = 2n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub n: u32,
    pub witness: Vec<i64>,
    pub in_closure: bool,
    pub in_sum: bool,
}

pub fn same_ring_counterexample(n: u32) -> Result<CounterexampleReport, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let i = MonomialIdeal::in_polynomial_ring(2, vec![vec![1, 3]])?;
    let j = MonomialIdeal::in_polynomial_ring(2, vec![vec![3, 1]])?;
    let sum = MonomialIdeal::in_polynomial_ring(2, vec![vec![1, 3], vec![3, 1]])?;
    let w = Rational::from_int(2 * i64::from(n) + 1);
    let c = 4 * i64::from(n) + 2;
    let witness = vec![c, c];
    let point: Vec<Rational> = witness.iter().map(|&x| Rational::from_int(x)).collect();
    let in_closure = polyhedron_membership(&sum.newton_polyhedron(), &w, &point)?;
    let in_sum = same_ring_sum_membership(&i, &j, &w, &witness, crate::package::DEFAULT_CAP)?;
    Ok(CounterexampleReport { n, witness, in_closure, in_sum })
}
