//! Exact computations for weighted Hodge ideals of hypersurface singularities.
//!
//! The crate covers two regimes where these ideals are explicitly computable:
//! simple normal crossings local models, handled by closed-form monomial
//! generators in [`snc`], and isolated singularities with nondegenerate Newton
//! boundary, handled through the Newton polyhedron in [`newton`] and the
//! invariants in [`invariants`]. [`dims`] carries the dimension formulas and
//! the point-count bounds for projective hypersurfaces.
//!
//! All arithmetic is exact. Rationals are [`Rational`] (arbitrary precision),
//! and nothing in the crate touches floating point.

pub mod dims;
pub mod error;
pub mod groebner;
pub mod invariants;
mod lp;
pub mod monomial;
pub mod monomial_ideal;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod snc;

pub use dims::{GrFDims, HodgeNumberTable};
pub use error::{Error, Result};
pub use groebner::GroebnerLimits;
pub use invariants::{AnalysisOptions, JacobianWitness, SingularityReport, VDegreeQuery};
pub use monomial::ExponentVector;
pub use monomial_ideal::MonomialIdeal;
pub use newton::{CompactFacet, NewtonPolyhedron};
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;
pub use rational::Rational;
pub use snc::SncModel;
