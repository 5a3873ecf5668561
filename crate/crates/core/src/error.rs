use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not a positive integer")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; a numerical semigroup needs gcd 1")]
    NonCoprimeGenerators(i64),
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(i64),
    #[error("ideal generator {0} is not an element of the semigroup")]
    GeneratorNotInSemigroup(i64),
    #[error("generator 0 produces the unit ideal, which is not m-primary")]
    UnitIdeal,
    #[error("ideals live in different semigroup rings")]
    AmbientMismatch,
    #[error("powers did not stabilize within {cap} steps")]
    StabilizationCapExceeded { cap: usize },
    #[error("table has {len} entries, need at least {needed}")]
    TableTooShort { len: usize, needed: usize },
    #[error("table entry {index} is {found}, fitted polynomial gives {expected}")]
    PolynomialFitInconsistent {
        index: usize,
        found: i64,
        expected: i64,
    },
    #[error("horizon {horizon} is below numerator degree {degree}")]
    HorizonTooSmall { horizon: usize, degree: usize },
    #[error("threshold right-hand side {0} is negative")]
    ThresholdUndefined(i64),
    #[error("binomial C({0}, 2) with negative upper index")]
    NegativeBinomial(i64),
    #[error("inconsistent invariants: {0}")]
    InvalidInvariants(String),
}
