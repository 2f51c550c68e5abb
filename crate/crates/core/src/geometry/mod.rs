//! Exact rational geometry of positive polyhedra: facet enumeration,
//! membership, joins and star products of hyperplanes.

pub mod dd;
pub mod hyperplane;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod polyhedron;
pub mod rational;

pub use hyperplane::{default_names, star, Hyperplane};
pub use lattice::{scale_and_ceil_lattice, FacetSystem, Level, Order};
pub use polyhedron::{conv_join, facet_enumeration, polyhedron_membership, satisfies_facets, PositivePolyhedron};
pub use rational::{lcm_all, Rational};
