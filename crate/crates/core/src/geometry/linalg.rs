//! Small exact linear-algebra kernels over integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = gcd_of(v);
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Clears denominators of a rational vector, returning the primitive integer
/// vector on the same ray.
pub fn integer_ray(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    make_primitive(&mut out);
    out
}

fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect()
}

/// Row echelon form by Gaussian elimination; returns the rank.
fn eliminate(m: &mut [Vec<BigRational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, below) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (x, p) in row[c..cols].iter_mut().zip(&pivot_row[c..cols]) {
                *x -= &f * p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    eliminate(&mut to_rational_rows(rows))
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily
/// in input order.
pub fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Inverse of a square nonsingular integer matrix, as rationals.
pub fn inverse(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = to_rational_rows(m);
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
    }
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn is_nonnegative(v: &[BigInt]) -> bool {
    v.iter().all(|x| !x.is_negative())
}
