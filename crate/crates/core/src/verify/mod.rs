//! Named identity suites with single-term witnesses and machine-readable reports.

mod report;
mod stability;
mod suites;

pub use report::{Outcome, PointResult, Report, Totals};
pub use stability::{stabilization_check, StabilityMode, StabilityPoint};
pub use suites::{run_suite, suite, suite_names, Ranges, Suite, FORMULA_OPS, SUITES};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, QTFraction, QTLaurent};
use crate::oracle::OracleError;
use crate::zeta::{Status, ZetaError};

/// One term `coeff * q^e_q * t^e_t` of a difference.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub e_q: i64,
    pub e_t: i64,
    pub coeff: String,
}

impl Witness {
    pub fn new(e_q: i64, e_t: i64, coeff: &BigInt) -> Self {
        Witness { e_q, e_t, coeff: coeff.to_string() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*q^{}*t^{}", self.coeff, self.e_q, self.e_t)
    }
}

/// Result of an exact comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub holds: bool,
    pub witness: Option<Witness>,
}

/// Decides `lhs = rhs` by cross-multiplication; the witness is the lowest term of
/// `num(lhs) den(rhs) - num(rhs) den(lhs)` in `(t, q)` order.
pub fn check_identity(lhs: &QTFraction, rhs: &QTFraction) -> Identity {
    lowest_term(&lhs.cross_difference(rhs))
}

fn lowest_term(diff: &QTLaurent) -> Identity {
    let witness = diff.lowest().map(|(e, c)| Witness::new(e.q, e.t, c));
    Identity { holds: witness.is_none(), witness }
}

/// A value produced by one side of a check.
#[derive(Clone, Debug)]
pub enum Value {
    Laurent(QTLaurent),
    Fraction(QTFraction),
    /// Integer coefficients of `t^0, t^1, ...` at a numeric `q`.
    Counts(Vec<BigInt>),
}

impl From<QTLaurent> for Value {
    fn from(p: QTLaurent) -> Self {
        Value::Laurent(p)
    }
}

impl From<QTFraction> for Value {
    fn from(f: QTFraction) -> Self {
        Value::Fraction(f)
    }
}

impl From<Vec<u64>> for Value {
    fn from(v: Vec<u64>) -> Self {
        Value::Counts(v.into_iter().map(BigInt::from).collect())
    }
}

impl Value {
    fn display(&self) -> String {
        match self {
            Value::Laurent(p) => p.to_string(),
            Value::Fraction(f) => f.to_string(),
            Value::Counts(c) => format!("[{}]", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")),
        }
    }

    fn as_fraction(&self) -> Option<QTFraction> {
        match self {
            Value::Laurent(p) => Some(QTFraction::from_laurent(p.clone())),
            Value::Fraction(f) => Some(f.clone()),
            Value::Counts(_) => None,
        }
    }
}

/// Compares two values; counts are compared entrywise with implicit trailing zeros.
pub fn compare(lhs: &Value, rhs: &Value) -> Result<Identity, CheckError> {
    match (lhs, rhs) {
        (Value::Counts(a), Value::Counts(b)) => {
            let len = a.len().max(b.len());
            let zero = BigInt::zero();
            for j in 0..len {
                let (x, y) = (a.get(j).unwrap_or(&zero), b.get(j).unwrap_or(&zero));
                if x != y {
                    return Ok(Identity { holds: false, witness: Some(Witness::new(0, j as i64, &(x - y))) });
                }
            }
            Ok(Identity { holds: true, witness: None })
        }
        (a, b) => match (a.as_fraction(), b.as_fraction()) {
            (Some(x), Some(y)) => Ok(check_identity(&x, &y)),
            _ => Err(CheckError::Mismatch("cannot compare counts with a symbolic value".into())),
        },
    }
}

/// `t`-coefficients of a pure-`t`-at-numeric-`q` evaluation, each required to be an integer.
pub fn counts_at(p: &QTLaurent, q: i64) -> Result<Vec<BigInt>, CheckError> {
    let vals = p.eval_q(q);
    let top = vals.keys().next_back().copied().unwrap_or(0);
    if let Some((&j, _)) = vals.iter().find(|(&j, _)| j < 0) {
        return Err(CheckError::Mismatch(format!("negative t-degree {j}")));
    }
    (0..=top)
        .map(|j| match vals.get(&j) {
            None => Ok(BigInt::zero()),
            Some(v) if v.is_integer() => Ok(v.to_integer()),
            Some(v) => Err(CheckError::Mismatch(format!("t^{j} coefficient {v} is not an integer"))),
        })
        .collect()
}

pub(crate) fn is_nonnegative(v: &BigInt) -> bool {
    !v.is_negative()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{0}")]
    Mismatch(String),
}

impl CheckError {
    fn is_resource(&self) -> bool {
        matches!(self, CheckError::Oracle(OracleError::GuardExceeded { .. }))
    }
}

/// A parameter point. Fields not used by a check are `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Point {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Point {
    pub fn family(mut self, f: impl fmt::Display) -> Self {
        self.family = Some(f.to_string());
        self
    }
    pub fn m(mut self, v: u32) -> Self {
        self.m = Some(v as i64);
        self
    }
    pub fn n(mut self, v: u32) -> Self {
        self.n = Some(v as i64);
        self
    }
    pub fn q(mut self, v: u64) -> Self {
        self.q = Some(v as i64);
        self
    }
    pub fn r(mut self, v: i64) -> Self {
        self.r = Some(v);
        self
    }
    pub fn k(mut self, v: u32) -> Self {
        self.k = Some(v as i64);
        self
    }
    pub fn label(mut self, s: impl Into<String>) -> Self {
        self.label = Some(s.into());
        self
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(v) = &self.family {
            parts.push(v.clone());
        }
        for (name, v) in [("m", self.m), ("n", self.n), ("q", self.q), ("r", self.r), ("K", self.k)] {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        if let Some(v) = &self.label {
            parts.push(v.clone());
        }
        f.write_str(&parts.join(" "))
    }
}

type Thunk = Box<dyn Fn() -> Result<Value, CheckError> + Send + Sync>;
type Predicate = Box<dyn Fn() -> Result<Option<Witness>, CheckError> + Send + Sync>;

enum Body {
    Identity { lhs: Thunk, rhs: Thunk },
    Predicate(Predicate),
}

/// One claim at one parameter point.
pub struct Check {
    pub name: String,
    pub point: Point,
    pub status: Status,
    body: Body,
}

impl Check {
    /// `lhs = rhs`, with the two sides computed independently.
    pub fn identity(
        name: &str,
        point: Point,
        status: Status,
        lhs: impl Fn() -> Result<Value, CheckError> + Send + Sync + 'static,
        rhs: impl Fn() -> Result<Value, CheckError> + Send + Sync + 'static,
    ) -> Self {
        Check { name: name.into(), point, status, body: Body::Identity { lhs: Box::new(lhs), rhs: Box::new(rhs) } }
    }

    /// A property that returns a witness when it fails.
    pub fn predicate(
        name: &str,
        point: Point,
        status: Status,
        f: impl Fn() -> Result<Option<Witness>, CheckError> + Send + Sync + 'static,
    ) -> Self {
        Check { name: name.into(), point, status, body: Body::Predicate(Box::new(f)) }
    }

    pub fn run(&self) -> PointResult {
        let evaluated = match &self.body {
            Body::Identity { lhs, rhs } => lhs().and_then(|l| {
                let r = rhs()?;
                let id = compare(&l, &r)?;
                let shown = l.display();
                Ok((id.witness, (shown.len() <= 60).then_some(shown)))
            }),
            Body::Predicate(f) => f().map(|w| (w, None)),
        };
        let (outcome, witness, value) = match evaluated {
            Ok((None, value)) => (Outcome::Pass, None, value),
            Ok((Some(w), value)) => {
                let o = match self.status {
                    Status::Theorem => Outcome::Fail,
                    Status::Conjectural => Outcome::ConjectureFalsified,
                };
                (o, Some(w), value)
            }
            Err(e) if e.is_resource() => (Outcome::Skipped, None, Some(e.to_string())),
            Err(e) => (Outcome::Error, None, Some(e.to_string())),
        };
        PointResult { check: self.name.clone(), point: self.point.clone(), status: self.status, outcome, witness, value }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, PochFactor};

    #[test]
    fn identity_examples() {
        let a = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::t_pow(1), 1, 1)]);
        let one_plus_t = QTLaurent::one() + QTLaurent::t_pow(1);
        let b = QTFraction::new(one_plus_t, vec![PochFactor::new(Monomial::t_pow(2), 1, 1)]);
        assert!(check_identity(&a, &b).holds);
        let bumped = QTFraction::new(QTLaurent::one() + QTLaurent::q_pow(3), a.den().to_vec());
        let id = check_identity(&bumped, &a);
        assert!(!id.holds);
        assert_eq!(id.witness, Some(Witness::new(3, 0, &BigInt::from(1))));
    }

    #[test]
    fn counts_compare_with_padding() {
        let a: Value = vec![1, 3].into();
        let b: Value = vec![1, 3, 0].into();
        assert!(compare(&a, &b).unwrap().holds);
        let c: Value = vec![1, 4].into();
        assert_eq!(compare(&a, &c).unwrap().witness, Some(Witness::new(0, 1, &BigInt::from(-1))));
        assert!(compare(&a, &Value::Laurent(QTLaurent::one())).is_err());
    }

    #[test]
    fn numeric_counts() {
        let p = QTLaurent::from_terms([(0, 0, 1.into()), (1, 1, 1.into()), (0, 1, 1.into())]);
        assert_eq!(counts_at(&p, 2).unwrap(), vec![BigInt::from(1), BigInt::from(3)]);
        assert!(counts_at(&QTLaurent::q_pow(-1), 2).is_err());
    }

    #[test]
    fn statuses_map_to_outcomes() {
        let bad = || Ok(Value::Laurent(QTLaurent::one()));
        let two = || Ok(Value::Laurent(QTLaurent::constant(2)));
        let thm = Check::identity("x", Point::default(), Status::Theorem, bad, two);
        assert_eq!(thm.run().outcome, Outcome::Fail);
        let conj = Check::identity("x", Point::default(), Status::Conjectural, bad, two);
        assert_eq!(conj.run().outcome, Outcome::ConjectureFalsified);
        let skip = Check::predicate("x", Point::default(), Status::Theorem, || {
            Err(OracleError::GuardExceeded { estimate: 10, guard: 1 }.into())
        });
        assert_eq!(skip.run().outcome, Outcome::Skipped);
    }
}
