//! Hall polynomials and the finitized Andrews-Gordon / Bressoud sums.

mod hall;
mod sums;

pub use hall::{g_skew, hall_g};
pub use sums::{ag_multisum, br_multisum, infinite_sum, product_side, singlesum, TSign};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SumKind {
    #[serde(rename = "AG")]
    AndrewsGordon,
    #[serde(rename = "Br")]
    Bressoud,
}

/// A sum family together with its depth `m`; the modulus is `2m+3` (AG) or `2m+2` (Br).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SumFamily {
    pub kind: SumKind,
    pub m: u32,
}

impl SumFamily {
    pub fn new(kind: SumKind, m: u32) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidParameter("m must be at least 1".into()));
        }
        Ok(SumFamily { kind, m })
    }

    pub fn ag(m: u32) -> Self {
        SumFamily::new(SumKind::AndrewsGordon, m).expect("m >= 1")
    }

    pub fn br(m: u32) -> Self {
        SumFamily::new(SumKind::Bressoud, m).expect("m >= 1")
    }

    pub fn modulus(&self) -> u32 {
        match self.kind {
            SumKind::AndrewsGordon => 2 * self.m + 3,
            SumKind::Bressoud => 2 * self.m + 2,
        }
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            SumKind::AndrewsGordon => "AG",
            SumKind::Bressoud => "Br",
        };
        write!(f, "{tag}(mod {})", self.modulus())
    }
}

impl FromStr for SumKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ag" | "andrews-gordon" => Ok(SumKind::AndrewsGordon),
            "br" | "bressoud" => Ok(SumKind::Bressoud),
            other => Err(AlgebraError::InvalidParameter(format!("unknown sum kind '{other}'"))),
        }
    }
}
