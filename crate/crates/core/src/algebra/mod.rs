//! Exact two-variable Laurent arithmetic, Pochhammer primitives and partitions.

mod fraction;
mod laurent;
mod partition;
mod pochhammer;
mod series;
mod serialize;

pub use fraction::{PochFactor, QTFraction};
pub use laurent::{Exponent, Monomial, QTLaurent, Var};
pub use partition::Partition;
pub use pochhammer::{binom2, chain_multinomial, poch, qbinom, qfactorial};
pub use serialize::{FactorRecord, FractionRecord, TermRecord, VarConvention};
pub use series::{QSeries, TSeries};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("substitution image must be a single term")]
    NonMonomialImage,
    #[error("a q-substitution image must be a pure power of q with nonzero exponent")]
    InvalidQImage,
    #[error("coefficient {0} has no inverse in Z")]
    NonInvertibleCoefficient(i64),
    #[error("exponent out of range")]
    ExponentOverflow,
    #[error("Pochhammer length must be nonnegative, got {0}")]
    NegativeLength(i64),
    #[error("Pochhammer step must be nonzero")]
    ZeroStep,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    NotDivisible,
    #[error("denominator vanishes at the requested specialization")]
    VanishingDenominator,
    #[error("series constant term is not a unit")]
    NonUnitConstantTerm,
    #[error("negative t-exponent {0} cannot be read as a power series")]
    NegativeTExponent(i64),
    #[error("negative q-exponent {0} cannot be read as a power series")]
    NegativeQExponent(i64),
    #[error("expected a pure-q polynomial")]
    NotPureQ,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition does not fit in the rectangle ({m}^{n})")]
    NotInRectangle { m: u32, n: u32 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse coefficient '{0}'")]
    InvalidCoefficient(String),
    #[error("tuple lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
}
