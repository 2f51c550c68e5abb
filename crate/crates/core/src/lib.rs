//! Rees packages for monomial ideals in affine semigroup rings and for
//! diagram-indexed determinantal, symmetric, Pfaffian and Hankel ideals.
//!
//! A Rees package bundles a tuple of valuations with a positive polyhedron:
//! the non-coordinate facets of the polyhedron are the Rees valuations of
//! the ideal, and the rational power `overline(I^w)` is spanned by the basis
//! elements whose valuation vector lies in `w` times the polyhedron. All
//! arithmetic is exact.

pub mod diagram;
pub mod error;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod package;
pub mod random;
pub mod semigroup;
pub mod summation;

pub use diagram::{Diagram, DiagramIdeal, MatrixFamily};
pub use error::Error;
pub use geometry::{Hyperplane, PositivePolyhedron, Rational};
pub use num_bigint::BigInt;
pub use package::{ReesPackage, ValueMap, ValueSemigroup, DEFAULT_CAP};
pub use semigroup::{AffineSemigroup, ConeValuation, MonomialIdeal};
