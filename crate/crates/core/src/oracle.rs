//! Brute-force cross-checks, algorithmically disjoint from the main paths:
//! Fourier–Motzkin facets, integral closure by integer search, and lattice
//! points by a full box scan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::geometry::linalg::{make_primitive, rank};
use crate::geometry::{Hyperplane, PositivePolyhedron, Rational};
use crate::semigroup::MonomialIdeal;
use crate::Error;

/// Largest dimension [`facets_fourier_motzkin`] accepts.
pub const MAX_FM_DIM: usize = 5;

/// Default bound on the multiplier `m` in [`closure_membership_bruteforce`].
pub const DEFAULT_M_CAP: u32 = 32;

/// Facets of `P` by projecting `{(X, λ) : X ≥ Σ λ_i g_i, λ ≥ 0, Σ λ_i = 1}`
/// onto `X`. Same contract as the double description path.
pub fn facets_fourier_motzkin(p: &PositivePolyhedron) -> Result<Vec<Hyperplane>, Error> {
    let d = p.dim();
    if d > MAX_FM_DIM {
        return Err(Error::DimensionCap { dim: d, max: MAX_FM_DIM });
    }
    let gens = p.generators();
    let n = gens.len();
    let k = n - 1;
    // row layout: [X (d) | λ_1..λ_{n-1} | constant], meaning row·(X, λ, 1) ≥ 0
    let width = d + k + 1;
    let last = &gens[n - 1];
    let mut rows: Vec<Row> = Vec::new();
    let mut origin = 0;
    let mut push = |coeffs: Vec<Rational>, rows: &mut Vec<Row>| {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut v: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        make_primitive(&mut v);
        rows.push(Row { coeffs: v, origins: vec![origin] });
        origin += 1;
    };
    for i in 0..k {
        let mut c = vec![Rational::zero(); width];
        c[d + i] = Rational::one();
        push(c, &mut rows);
    }
    let mut c = vec![Rational::zero(); width];
    for x in &mut c[d..d + k] {
        *x = -Rational::one();
    }
    c[width - 1] = Rational::one();
    push(c, &mut rows);
    for j in 0..d {
        // X_j − g_n[j] − Σ λ_i (g_i[j] − g_n[j]) ≥ 0
        let mut c = vec![Rational::zero(); width];
        c[j] = Rational::one();
        for i in 0..k {
            c[d + i] = &last[j] - &gens[i][j];
        }
        c[width - 1] = -last[j].clone();
        push(c, &mut rows);
    }
    for (eliminated, col) in (d..d + k).enumerate() {
        rows = eliminate(rows, col, eliminated + 1);
    }
    let mut facets: Vec<Hyperplane> = Vec::new();
    for row in rows {
        let normal = row.coeffs[..d].to_vec();
        let offset = -&row.coeffs[width - 1];
        if normal.iter().any(Signed::is_negative) || normal.iter().all(Zero::is_zero) || !offset.is_positive() {
            continue;
        }
        if tight_rank(p, &normal, &offset) == d {
            facets.push(Hyperplane::new(normal, offset)?);
        }
    }
    facets.sort();
    facets.dedup();
    Ok(facets)
}

struct Row {
    coeffs: Vec<BigInt>,
    origins: Vec<usize>,
}

/// One Fourier–Motzkin step on `col`, keeping only combinations whose
/// ancestry has at most `step + 1` original rows.
fn eliminate(rows: Vec<Row>, col: usize, step: usize) -> Vec<Row> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coeffs[col].is_positive() {
            pos.push(r);
        } else if r.coeffs[col].is_negative() {
            neg.push(r);
        } else {
            out.push(r);
        }
    }
    for p in &pos {
        for q in &neg {
            let mut origins: Vec<usize> = p.origins.iter().chain(&q.origins).copied().collect();
            origins.sort_unstable();
            origins.dedup();
            if origins.len() > step + 1 {
                continue;
            }
            let (a, b) = (-&q.coeffs[col], p.coeffs[col].clone());
            let mut coeffs: Vec<BigInt> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| &a * x + &b * y).collect();
            make_primitive(&mut coeffs);
            out.push(Row { coeffs, origins });
        }
    }
    out
}

/// Rank of the homogenized generators and coordinate rays on which
/// `⟨normal, X⟩ ≥ offset` is tight.
fn tight_rank(p: &PositivePolyhedron, normal: &[BigInt], offset: &BigInt) -> usize {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let target = Rational::from_int(offset.clone());
    for g in p.generators() {
        let value: Rational = normal.iter().zip(g).map(|(h, x)| &Rational::from_int(h.clone()) * x).fold(Rational::zero(), |a, b| a + b);
        if value == target {
            let den = g.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let mut row = vec![den.clone()];
            row.extend(g.iter().map(|x| x.numer() * (&den / x.denom())));
            rows.push(row);
        }
    }
    for (j, h) in normal.iter().enumerate() {
        if h.is_zero() {
            let mut row = vec![BigInt::zero(); normal.len() + 1];
            row[j + 1] = BigInt::one();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        0
    } else {
        rank(&rows)
    }
}

/// Answer of the integer search for `x^a ∈ overline(I^p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosureVerdict {
    /// `m·a` dominates a sum of `p·m` generator exponents.
    Member { m: u32 },
    /// A facet of the Newton polyhedron separates `a` from `p·NP(I)`.
    Separated { facet: Hyperplane },
    /// Neither was found up to the multiplier cap.
    Inconclusive,
}

impl ClosureVerdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            ClosureVerdict::Member { .. } => Some(true),
            ClosureVerdict::Separated { .. } => Some(false),
            ClosureVerdict::Inconclusive => None,
        }
    }
}

/// `x^a ∈ overline(I^p)` for a monomial ideal of a polynomial ring, from the
/// definition: some `(x^a)^m ∈ (I^p)^m`, or a separating facet.
pub fn closure_membership_bruteforce(i: &MonomialIdeal, p: u32, a: &[i64], m_cap: u32) -> Result<ClosureVerdict, Error> {
    let s = i.semigroup();
    if *s != crate::semigroup::AffineSemigroup::orthant(s.rank()) {
        return Err(Error::InvalidInput("brute-force closure needs a polynomial ring".into()));
    }
    if a.len() != s.rank() {
        return Err(Error::DimensionMismatch { expected: s.rank(), found: a.len() });
    }
    if a.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput("exponent must be nonnegative".into()));
    }
    let np = i.newton_polyhedron();
    for h in facets_fourier_motzkin(&np)? {
        let lhs: BigInt = h.normal().iter().zip(a).map(|(x, &y)| x * BigInt::from(y)).sum();
        if lhs < h.offset() * BigInt::from(p) {
            return Ok(ClosureVerdict::Separated { facet: h });
        }
    }
    for m in 1..=m_cap {
        let target: Vec<i64> = a.iter().map(|&x| x * i64::from(m)).collect();
        if dominates_sum(i.exponents(), &target, (p * m) as usize) {
            return Ok(ClosureVerdict::Member { m });
        }
    }
    Ok(ClosureVerdict::Inconclusive)
}

/// Whether `target` is componentwise `≥` some sum of `count` generators,
/// tracking only the minimal partial sums that stay below `target`.
fn dominates_sum(gens: &[Vec<i64>], target: &[i64], count: usize) -> bool {
    let mut layer: Vec<Vec<i64>> = vec![vec![0; target.len()]];
    for _ in 0..count {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for s in &layer {
            for g in gens {
                let t: Vec<i64> = s.iter().zip(g).map(|(x, y)| x + y).collect();
                if t.iter().zip(target).all(|(x, y)| x <= y) {
                    next.push(t);
                }
            }
        }
        next.sort();
        next.dedup();
        layer = antichain(next);
        if layer.is_empty() {
            return false;
        }
    }
    true
}

fn antichain(points: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    points.iter().filter(|p| !points.iter().any(|q| q != *p && le(q, p))).cloned().collect()
}

/// Minimal exponents `a ≤ bounds` with `x^a ∈ overline(I^p)`, each decided by
/// [`closure_membership_bruteforce`].
pub fn closure_generators_bruteforce(i: &MonomialIdeal, p: u32, bounds: &[i64], m_cap: u32) -> Result<Vec<Vec<i64>>, Error> {
    let mut members = Vec::new();
    for a in box_points(bounds) {
        match closure_membership_bruteforce(i, p, &a, m_cap)? {
            ClosureVerdict::Member { .. } => members.push(a),
            ClosureVerdict::Separated { .. } => {}
            ClosureVerdict::Inconclusive => {
                return Err(Error::InvalidInput(format!("closure membership of {a:?} is inconclusive")))
            }
        }
    }
    Ok(antichain(members))
}

/// Lattice points of `wP` with `0 ≤ p ≤ bounds`, by testing every point of
/// the box against the Fourier–Motzkin facets.
pub fn lattice_points_naive(p: &PositivePolyhedron, w: &Rational, bounds: &[i64]) -> Result<Vec<Vec<i64>>, Error> {
    if bounds.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: bounds.len() });
    }
    if w.is_negative() || bounds.iter().any(|&b| b < 0) {
        return Err(Error::InvalidInput("level and box bounds must be nonnegative".into()));
    }
    let facets = facets_fourier_motzkin(p)?;
    Ok(box_points(bounds)
        .filter(|x| {
            let point: Vec<Rational> = x.iter().map(|&v| Rational::from_int(v)).collect();
            facets.iter().all(|h| h.satisfied_at(w, &point))
        })
        .collect())
}

/// All points of `[0, bounds]` in lexicographic order.
fn box_points(bounds: &[i64]) -> impl Iterator<Item = Vec<i64>> + '_ {
    let mut next = Some(vec![0i64; bounds.len()]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for j in (0..bounds.len()).rev() {
            if succ[j] < bounds[j] {
                succ[j] += 1;
                next = Some(succ);
                break;
            }
            succ[j] = 0;
        }
        Some(current)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::scale_and_ceil_lattice;

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

    #[test]
    fn fm_facets() {
        assert_eq!(facets_fourier_motzkin(&poly(2, &[&[2, 1], &[3, 0]])).unwrap(), vec![hp(&[1, 0], 2), hp(&[1, 1], 3)]);
        assert_eq!(facets_fourier_motzkin(&poly(2, &[&[1, 1]])).unwrap(), vec![hp(&[0, 1], 1), hp(&[1, 0], 1)]);
        let p = poly(3, &[&[1, 3, 0], &[3, 1, 2], &[0, 0, 4], &[2, 2, 2]]);
        assert_eq!(facets_fourier_motzkin(&p).unwrap(), p.facets());
        assert!(facets_fourier_motzkin(&PositivePolyhedron::orthant(2)).unwrap().is_empty());
        assert!(matches!(facets_fourier_motzkin(&poly(6, &[&[1; 6]])), Err(Error::DimensionCap { .. })));
    }

    #[test]
    fn closure_examples() {
        let i = MonomialIdeal::in_polynomial_ring(2, vec![vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(closure_membership_bruteforce(&i, 3, &[6, 6], DEFAULT_M_CAP).unwrap(), ClosureVerdict::Member { m: 2 });
        assert_eq!(closure_membership_bruteforce(&i, 2, &[2, 6], DEFAULT_M_CAP).unwrap(), ClosureVerdict::Member { m: 1 });
        let x2 = MonomialIdeal::in_polynomial_ring(1, vec![vec![2]]).unwrap();
        assert_eq!(
            closure_membership_bruteforce(&x2, 1, &[1], DEFAULT_M_CAP).unwrap(),
            ClosureVerdict::Separated { facet: hp(&[1], 2) }
        );
        assert_eq!(closure_generators_bruteforce(&i, 1, &[4, 4], DEFAULT_M_CAP).unwrap(), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }

    #[test]
    fn naive_lattice_points_agree() {
        let gamma = poly(2, &[&[2, 1], &[3, 0]]);
        for (w, b) in [("1", vec![3, 1]), ("0", vec![1, 1])] {
            assert_eq!(
                lattice_points_naive(&gamma, &q(w), &b).unwrap(),
                scale_and_ceil_lattice(&gamma, &q(w), &b).unwrap()
            );
        }
        assert_eq!(lattice_points_naive(&poly(1, &[&[4]]), &q("1/2"), &[2]).unwrap(), vec![vec![2]]);
    }
}
