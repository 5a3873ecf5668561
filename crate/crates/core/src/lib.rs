//! Exact Hilbert-Samuel functions, Hilbert coefficients and their upper bounds
//! for m-primary monomial ideals of one-dimensional semigroup rings.

pub mod bounds;
pub mod error;
pub mod harness;
pub mod hilbert;
pub mod ideal;
pub mod semigroup;
pub mod series;

pub use bounds::{BoundCheck, CheckScope, ExternalReport, InstanceReport, Sense, Value};
pub use error::{Error, Result};
pub use harness::{SuiteConfig, SuiteReport};
pub use hilbert::{ExternalHilbertData, HilbertRecord};
pub use ideal::{IdealPower, IdealProfile, SemigroupIdeal};
pub use semigroup::NumericalSemigroup;
pub use series::{RationalSeries, SeriesComparison, SeriesRelation, TailVerdict};
