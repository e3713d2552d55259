//! Lattice zeta functions of the three quadratic order families.
//!
//! Everything is a polynomial or fraction in `q` and `t = q^{-s}`.

mod coh;
mod inert_m1;
mod saturation;
mod s_zero;

pub use coh::{
    closed_form_coh, coh_finitized, nakayama_compose, normalize_nuhat, reflection_check,
    ClosedForm, Reflection,
};
pub use inert_m1::{inert_m1_count, CountForm};
pub use s_zero::{nuhat_zero, NuhatForm};
pub use saturation::{rtilde_numerator, rtilde_zeta, saturation_zeta, solomon_zeta};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZetaError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("sub-zeta for r = {0} is missing")]
    MissingSubZeta(usize),
    #[error("{0}: no closed form in scope")]
    NoClosedForm(OrderFamily),
    #[error("normalization left a non-polynomial remainder")]
    NonPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Ramified,
    Split,
    Inert,
}

impl FromStr for OrderKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ramified" | "ram" => Ok(OrderKind::Ramified),
            "split" => Ok(OrderKind::Split),
            "inert" => Ok(OrderKind::Inert),
            other => Err(AlgebraError::InvalidParameter(format!("unknown family '{other}'"))),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Ramified => "ramified",
            OrderKind::Split => "split",
            OrderKind::Inert => "inert",
        })
    }
}

/// How a module type over the normalization quotient `B` becomes a type over `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DescentRule {
    /// `F[T]/T^k` over `F[T^2]`: each part splits into `ceil(k/2), floor(k/2)`.
    HalfSplit,
    /// Two factors over the diagonal: parts of both partitions are collected.
    Concat,
    /// `F_{q^2}[T]/T^k` over `F_q[T]`: each part is duplicated.
    Duplicate,
}

impl DescentRule {
    pub fn apply(&self, parts: &[Partition]) -> Partition {
        match self {
            DescentRule::HalfSplit => parts[0].half_split(),
            DescentRule::Concat => parts[0].concat(&parts[1]),
            DescentRule::Duplicate => parts[0].duplicate(),
        }
    }
}

/// One DVR-quotient factor of `B`: residue field of size `q^e`, nilpotency length `len`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BFactor {
    pub e: i64,
    pub len: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrderFamily {
    pub kind: OrderKind,
    pub m: u32,
}

impl OrderFamily {
    pub fn new(kind: OrderKind, m: u32) -> Result<Self, AlgebraError> {
        if m == 0 {
            return Err(AlgebraError::InvalidParameter("m must be at least 1".into()));
        }
        Ok(OrderFamily { kind, m })
    }

    pub fn ramified(m: u32) -> Self {
        OrderFamily::new(OrderKind::Ramified, m).expect("m >= 1")
    }

    pub fn split(m: u32) -> Self {
        OrderFamily::new(OrderKind::Split, m).expect("m >= 1")
    }

    pub fn inert(m: u32) -> Self {
        OrderFamily::new(OrderKind::Inert, m).expect("m >= 1")
    }

    /// `D = |R~/R| = q^d`.
    pub fn d(&self) -> i64 {
        self.m as i64
    }

    /// Residue field exponents of the DVR factors of the normalization.
    pub fn residue_exponents(&self) -> Vec<i64> {
        match self.kind {
            OrderKind::Ramified => vec![1],
            OrderKind::Split => vec![1, 1],
            OrderKind::Inert => vec![2],
        }
    }

    /// Factors of `B = R~/c` together with the descent rule down to `A = R/c`.
    pub fn conductor_quotient(&self) -> (Vec<BFactor>, DescentRule) {
        let m = self.m;
        match self.kind {
            OrderKind::Ramified => (vec![BFactor { e: 1, len: 2 * m }], DescentRule::HalfSplit),
            OrderKind::Split => (
                vec![BFactor { e: 1, len: m }, BFactor { e: 1, len: m }],
                DescentRule::Concat,
            ),
            OrderKind::Inert => (vec![BFactor { e: 2, len: m }], DescentRule::Duplicate),
        }
    }
}

impl fmt::Display for OrderFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={}", self.kind, self.m)
    }
}

/// Whether a value rests on a proved result or on a conjectured identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Conjectural,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Theorem => "theorem",
            Status::Conjectural => "conjectural",
        })
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::algebra::{poch, Monomial, QTFraction, Var};
    use crate::qseries::{singlesum, SumFamily};

    fn coh_via_nakayama(n: u32) -> QTFraction {
        let subs: BTreeMap<usize, QTFraction> =
            (0..=n).map(|r| (r as usize, rtilde_zeta(OrderFamily::inert(1), r))).collect();
        nakayama_compose(&subs, n as usize)
            .unwrap()
            .substitute(Var::T, Monomial::new(1, -(n as i64), 1))
            .unwrap()
    }

    #[test]
    fn nakayama_reproduces_double_sum() {
        for n in 0..=4 {
            let direct = coh_finitized(OrderFamily::inert(1), n).unwrap();
            assert!(coh_via_nakayama(n).cross_eq(&direct), "n={n}");
        }
    }

    #[test]
    fn inert_m1_double_sum_matches_bressoud() {
        for n in 0..=5 {
            let f = OrderFamily::inert(1);
            assert!(coh_finitized(f, n).unwrap().cross_eq(&closed_form_coh(f, n).value), "n={n}");
        }
    }

    #[test]
    fn normalized_values_at_t_one() {
        for n in 0..=4 {
            for m in 1..=2 {
                let ram = OrderFamily::ramified(m);
                let nu = normalize_nuhat(&closed_form_coh(ram, n).value, ram, n).unwrap();
                assert_eq!(nu.at_t_one(), nuhat_zero(ram, n, NuhatForm::Theorem), "{ram} n={n}");
                let ag = singlesum(SumFamily::ag(m), n).invert_q().to_laurent().unwrap();
                assert_eq!(nu.at_t_one(), ag);

                let split = OrderFamily::split(m);
                let nu = normalize_nuhat(&closed_form_coh(split, n).value, split, n).unwrap();
                assert!(nu.at_t_one().is_one(), "{split} n={n}");
                assert!(nuhat_zero(split, n, NuhatForm::Theorem).is_one());

                let inert = OrderFamily::inert(m);
                let nu = normalize_nuhat(&closed_form_coh(inert, n).value, inert, n).unwrap();
                assert_eq!(nu.at_t_one(), nuhat_zero(inert, n, NuhatForm::Theorem), "{inert} n={n}");
                let br = singlesum(SumFamily::br(m), n).invert_q();
                let lifted = br.mul_laurent(&poch(Monomial::new(-1, -1, 0), -1, n as i64).unwrap());
                assert!(lifted.cross_eq(&nu.at_t_one().into()));
            }
        }
    }

    #[test]
    fn reflection_for_inert_m1() {
        for n in 0..=4 {
            let f = OrderFamily::inert(1);
            let nu = normalize_nuhat(&coh_finitized(f, n).unwrap(), f, n).unwrap();
            assert!(reflection_check(&nu, n, f.d()).holds, "n={n}");
        }
    }

    #[test]
    fn counts_in_numerator() {
        for n in 0..=4u32 {
            let num = rtilde_numerator(OrderFamily::inert(1), n);
            for r in 0..=2 * n as i64 {
                assert_eq!(num.t_coeff(r), inert_m1_count(n, r, CountForm::Closed), "n={n} r={r}");
            }
        }
    }
}
