//! Brute-force ground truth from explicit finite modules over small prime fields.
//!
//! Every count here comes from enumerating subspaces; nothing calls into the closed
//! forms in [`crate::qseries`] or [`crate::zeta`].

mod counts;
mod export;
mod field;
mod linalg;
mod module;
mod setups;

pub use counts::{
    hall_count_oracle, hall_table, moebius_oracle, quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle, saturation_zeta_oracle,
};
pub use export::{write_csv, OracleRecord, CSV_VERSION};
pub use field::FieldSpec;
pub use linalg::{Matrix, Subspace};
pub use module::{
    enumerate_submodules, enumerate_with, module_cotype, module_type, EnumOptions, ModuleSpec,
    Strategy,
};
pub use setups::{dvr_module, inert_m1_quotient, saturation_setup, SaturationSetup};

use thiserror::Error;

/// Upper bound on the number of candidate subspaces an enumeration may examine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard(pub u64);

impl Guard {
    pub const DEFAULT: Guard = Guard(10_000_000);
    pub const ENV: &'static str = "QZETA_GUARD";

    /// `QZETA_GUARD` if set and parseable, otherwise the default.
    pub fn from_env() -> Guard {
        std::env::var(Self::ENV)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse().ok())
            .map(Guard)
            .unwrap_or(Self::DEFAULT)
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime or the square of a prime")]
    NotPrimePower(u64),
    #[error("p = {0} is too large for the oracle")]
    FieldTooLarge(u32),
    #[error("x^2 + {a}x + {b} is reducible over F_{p}")]
    Reducible { p: u32, a: u32, b: u32 },
    #[error("this oracle needs a prime field, got q = {0}")]
    RequiresPrimeField(u64),
    #[error("this oracle needs a quadratic field, got q = {0}")]
    RequiresQuadraticField(u64),
    #[error("generator '{0}' has the wrong shape or characteristic")]
    ShapeMismatch(String),
    #[error("generator '{0}' is not nilpotent")]
    NotNilpotent(String),
    #[error("generators '{0}' and '{1}' do not commute")]
    NonCommuting(String, String),
    #[error("the field generator does not match the field")]
    ScalarMismatch,
    #[error("no generator named '{0}'")]
    UnknownGenerator(String),
    #[error("subspace is not a submodule")]
    NotInvariant,
    #[error("enumeration needs about {estimate} candidates, over the guard of {guard}")]
    GuardExceeded { estimate: u128, guard: u64 },
    #[error("levels {level} and {} disagree at t^{degree}", level + 1)]
    TruncationMismatch { level: u32, degree: u32 },
    #[error("internal check failed: {0}")]
    InvariantViolated(String),
}
