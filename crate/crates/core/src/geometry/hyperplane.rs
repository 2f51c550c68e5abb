use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::gcd_of;
use super::rational::Rational;
use crate::Error;

/// A non-coordinate supporting hyperplane `⟨normal, X⟩ = offset` of a positive
/// polyhedron, with the polyhedron on the side `⟨normal, X⟩ ≥ offset`.
///
/// The normal is a nonzero vector of nonnegative integers and the offset is a
/// positive integer; the pair is divided by its joint gcd so that equal
/// hyperplanes have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawHyperplane", into = "RawHyperplane")]
pub struct Hyperplane {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Hyperplane {
    pub fn new(normal: Vec<BigInt>, offset: BigInt) -> Result<Self, Error> {
        if normal.is_empty() || normal.iter().all(Zero::is_zero) {
            return Err(Error::InvalidInput("hyperplane normal must be nonzero".into()));
        }
        if normal.iter().any(Signed::is_negative) {
            return Err(Error::InvalidInput("hyperplane normal must be nonnegative".into()));
        }
        if !offset.is_positive() {
            return Err(Error::InvalidInput("hyperplane offset must be positive".into()));
        }
        let g = gcd_of(&normal).gcd(&offset);
        let (normal, offset) = if g.is_one() {
            (normal, offset)
        } else {
            (normal.iter().map(|x| x / &g).collect(), &offset / &g)
        };
        Ok(Hyperplane { normal, offset })
    }

    pub fn from_i64(normal: &[i64], offset: i64) -> Result<Self, Error> {
        Hyperplane::new(normal.iter().map(|&x| BigInt::from(x)).collect(), offset.into())
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `⟨normal, point⟩`.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(point)
            .map(|(h, x)| &Rational::from_int(h.clone()) * x)
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Whether `point` lies on the polyhedron side of the hyperplane scaled by
    /// `w`, i.e. `⟨normal, point⟩ ≥ w·offset`.
    pub fn satisfied_at(&self, w: &Rational, point: &[Rational]) -> bool {
        self.evaluate(point) >= w * &Rational::from_int(self.offset.clone())
    }

    /// The star product: `⟨c₂h₁ + c₁h₂, (X₁, X₂)⟩ = c₁c₂` in the joined
    /// coordinates (left block first).
    pub fn star(&self, other: &Hyperplane) -> Hyperplane {
        let normal = self
            .normal
            .iter()
            .map(|h| h * &other.offset)
            .chain(other.normal.iter().map(|h| h * &self.offset))
            .collect();
        Hyperplane::new(normal, &self.offset * &other.offset).expect("star of valid hyperplanes is valid")
    }

    /// Renders `a X1 + b X2 = c` with the given variable names; zero terms are
    /// omitted and unit coefficients are implicit.
    pub fn render(&self, names: &[String]) -> String {
        let terms: Vec<String> = self
            .normal
            .iter()
            .zip(names)
            .filter(|(h, _)| !h.is_zero())
            .map(|(h, n)| if h.is_one() { n.clone() } else { format!("{h}{n}") })
            .collect();
        format!("{} = {}", terms.join(" + "), self.offset)
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names("X", self.dim());
        f.write_str(&self.render(&names))
    }
}

/// `X1, X2, …` (or `X` alone in dimension one).
pub fn default_names(stem: &str, dim: usize) -> Vec<String> {
    if dim == 1 {
        vec![stem.to_string()]
    } else {
        (1..=dim).map(|i| format!("{stem}{i}")).collect()
    }
}

/// Star product of two hyperplanes.
pub fn star(h1: &Hyperplane, h2: &Hyperplane) -> Hyperplane {
    h1.star(h2)
}

#[derive(Serialize, Deserialize)]
struct RawHyperplane {
    #[serde(with = "crate::io::bigint_vec")]
    normal: Vec<BigInt>,
    #[serde(with = "crate::io::bigint")]
    offset: BigInt,
}

impl TryFrom<RawHyperplane> for Hyperplane {
    type Error = Error;
    fn try_from(raw: RawHyperplane) -> Result<Self, Error> {
        Hyperplane::new(raw.normal, raw.offset)
    }
}

impl From<Hyperplane> for RawHyperplane {
    fn from(h: Hyperplane) -> Self {
        RawHyperplane { normal: h.normal, offset: h.offset }
    }
}
