//! Double description method for pointed polyhedral cones.
//!
//! Given integer rows `a_1, …, a_m` of full column rank, [`extreme_rays`]
//! returns the extreme rays of `{x : ⟨a_i, x⟩ ≥ 0 for all i}`. Applied to the
//! generators of a cone, the result is the list of its facet normals.
//!
//! The cone starts as the simplicial cone cut out by a maximal independent set
//! of rows; the remaining rows are added one at a time. New rays come from
//! pairs of adjacent rays on opposite sides of the new hyperplane, with
//! adjacency decided by the combinatorial zero-set test.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::{dot, independent_rows, integer_ray, inverse, make_primitive};

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(len: usize) -> Self {
        ZeroSet(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug)]
struct Ray {
    dir: Vec<BigInt>,
    zeros: ZeroSet,
}

/// Extreme rays of `{x : rows·x ≥ 0}`, each primitive, sorted
/// lexicographically. Returns `None` when the rows do not have full column
/// rank (the cone would have a lineality space).
pub fn extreme_rays(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<BigInt>>> {
    let dim = rows.first()?.len();
    let basis = independent_rows(rows);
    if basis.len() < dim {
        return None;
    }
    let m = rows.len();
    let square: Vec<Vec<BigInt>> = basis.iter().map(|&i| rows[i].clone()).collect();
    let inv = inverse(&square)?;

    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let column: Vec<_> = inv.iter().map(|row| row[j].clone()).collect();
            let mut zeros = ZeroSet::empty(m);
            for (k, &i) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(i);
                }
            }
            Ray { dir: integer_ray(&column), zeros }
        })
        .collect();

    let rest = (0..m).filter(|i| !basis.contains(i));
    for i in rest {
        let row = &rows[i];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.dir)).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for (ray, v) in rays.iter().zip(&values) {
            if v.is_zero() {
                let mut r = ray.clone();
                r.zeros.insert(i);
                next.push(r);
            } else if v.is_positive() {
                next.push(ray.clone());
            }
        }
        for (p, vp) in rays.iter().zip(&values).filter(|(_, v)| v.is_positive()) {
            for (q, vq) in rays.iter().zip(&values).filter(|(_, v)| v.is_negative()) {
                let common = p.zeros.intersect(&q.zeros);
                if common.len() + 2 < dim {
                    continue;
                }
                let blocked = rays.iter().any(|r| {
                    !std::ptr::eq(r, p) && !std::ptr::eq(r, q) && common.is_subset_of(&r.zeros)
                });
                if blocked {
                    continue;
                }
                let mut dir: Vec<BigInt> = p
                    .dir
                    .iter()
                    .zip(&q.dir)
                    .map(|(a, b)| vp * b - vq * a)
                    .collect();
                make_primitive(&mut dir);
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray { dir, zeros });
            }
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.dir).collect();
    out.sort();
    out.dedup();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn dual_of_planar_cone() {
        // cone spanned by (2,1),(1,3): inner normals (-1,2) and (3,-1)
        let rays = extreme_rays(&[ints(&[2, 1]), ints(&[1, 3])]).unwrap();
        assert_eq!(rays, vec![ints(&[-1, 2]), ints(&[3, -1])]);
    }

    #[test]
    fn redundant_generator_is_ignored() {
        let rays = extreme_rays(&[ints(&[1, 0]), ints(&[1, 1]), ints(&[1, 2])]).unwrap();
        assert_eq!(rays, vec![ints(&[0, 1]), ints(&[2, -1])]);
    }

    #[test]
    fn square_pyramid() {
        // cone over a square has four facets
        let gens = [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]];
        let rows: Vec<_> = gens.iter().map(|g| ints(g)).collect();
        let rays = extreme_rays(&rows).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            for g in &rows {
                assert!(!dot(r, g).is_negative());
            }
        }
    }

    #[test]
    fn rank_deficient_rows() {
        assert!(extreme_rays(&[ints(&[1, 1]), ints(&[2, 2])]).is_none());
    }
}
