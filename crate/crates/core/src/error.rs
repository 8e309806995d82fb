use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("length mismatch: expected {expected} entries, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "instance exceeds the Groebner size guard ({vars} variables, {terms} generator terms; \
         limits are {max_vars} variables and {max_terms} terms)"
    )]
    GroebnerGuard {
        vars: usize,
        terms: usize,
        max_vars: usize,
        max_terms: usize,
    },

    #[error("the zero polynomial has no Newton polyhedron")]
    ZeroPolynomial,

    #[error("support contains the origin: the polynomial does not vanish at 0")]
    OriginInSupport,

    #[error("polynomial is not convenient: no pure power of {0}")]
    NotConvenient(String),

    #[error("the Newton polyhedron has no compact facets")]
    NoCompactFacets,

    #[error("the point 1/{level} * (1,...,1) does not lie on the compact boundary")]
    NotOnBoundary { level: u32 },

    #[error("minimal exponent {0} is not of the form p+1 with p a nonnegative integer")]
    NotIntegralMinimalExponent(String),

    #[error("inconsistent Hodge table: {0}")]
    InconsistentHodgeTable(String),

    #[error("dimension invariant violated: {0}")]
    DimensionInvariant(String),

    #[error("missing entry for r = {0} in the Gr_F dimensions")]
    MissingEntry(u32),
}
