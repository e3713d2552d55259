//! Exact Laurent polynomials in two variables `q` and `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Exponent pair of a monomial `q^q t^t`.
///
/// Field order matters: the derived `Ord` is lexicographic by `(t, q)`, which is
/// the canonical term order used for iteration and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponent {
    pub t: i64,
    pub q: i64,
}

impl Exponent {
    pub fn new(q: i64, t: i64) -> Self {
        Exponent { t, q }
    }

    fn checked_add(self, other: Exponent) -> Exponent {
        Exponent {
            t: self.t.checked_add(other.t).expect("t-exponent overflow"),
            q: self.q.checked_add(other.q).expect("q-exponent overflow"),
        }
    }

    fn checked_sub(self, other: Exponent) -> Exponent {
        Exponent {
            t: self.t.checked_sub(other.t).expect("t-exponent overflow"),
            q: self.q.checked_sub(other.q).expect("q-exponent overflow"),
        }
    }
}

/// The two variables of [`QTLaurent`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
}

/// A single term `coeff * q^q * t^t` with a machine-size coefficient.
///
/// Used for Pochhammer bases and substitution images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub coeff: i64,
    pub q: i64,
    pub t: i64,
}

impl Monomial {
    pub fn new(coeff: i64, q: i64, t: i64) -> Self {
        Monomial { coeff, q, t }
    }

    pub fn one() -> Self {
        Monomial::new(1, 0, 0)
    }

    pub fn q_pow(k: i64) -> Self {
        Monomial::new(1, k, 0)
    }

    pub fn t_pow(k: i64) -> Self {
        Monomial::new(1, 0, k)
    }

    pub fn exponent(&self) -> Exponent {
        Exponent::new(self.q, self.t)
    }

    pub fn to_laurent(self) -> QTLaurent {
        QTLaurent::monomial(BigInt::from(self.coeff), self.q, self.t)
    }

    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            coeff: self.coeff.checked_mul(other.coeff).expect("coefficient overflow"),
            q: self.q.checked_add(other.q).expect("q-exponent overflow"),
            t: self.t.checked_add(other.t).expect("t-exponent overflow"),
        }
    }

    /// Applies a monomial substitution for one variable.
    pub fn substitute(self, var: Var, image: Monomial) -> Result<Monomial, AlgebraError> {
        let power = match var {
            Var::Q => self.q,
            Var::T => self.t,
        };
        let scale = unit_power(image.coeff, power)?;
        let (q, t) = match var {
            Var::Q => (0, self.t),
            Var::T => (self.q, 0),
        };
        let base = Monomial::new(self.coeff.checked_mul(scale).expect("coefficient overflow"), q, t);
        Ok(base.mul(Monomial::new(1, image.q * power, image.t * power)))
    }

    /// Returns `true` when the monomial is exactly `1`.
    pub fn is_one(&self) -> bool {
        self.coeff == 1 && self.q == 0 && self.t == 0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

/// `c^k` where negative `k` is only allowed for units.
fn unit_power(c: i64, k: i64) -> Result<i64, AlgebraError> {
    if k >= 0 {
        let k = u32::try_from(k).map_err(|_| AlgebraError::ExponentOverflow)?;
        c.checked_pow(k).ok_or(AlgebraError::ExponentOverflow)
    } else {
        match c {
            1 => Ok(1),
            -1 => Ok(if k % 2 == 0 { 1 } else { -1 }),
            _ => Err(AlgebraError::NonInvertibleCoefficient(c)),
        }
    }
}

fn big_unit_power(c: &BigInt, k: i64) -> Result<BigInt, AlgebraError> {
    if k >= 0 {
        let k = u32::try_from(k).map_err(|_| AlgebraError::ExponentOverflow)?;
        Ok(num_traits::pow(c.clone(), k as usize))
    } else if c.is_one() {
        Ok(BigInt::one())
    } else if *c == BigInt::from(-1) {
        Ok(if k % 2 == 0 { BigInt::one() } else { BigInt::from(-1) })
    } else {
        Err(AlgebraError::NonInvertibleCoefficient(
            i64::try_from(c).unwrap_or(i64::MAX),
        ))
    }
}

/// Laurent polynomial in `q` and `t` with arbitrary-precision integer coefficients.
///
/// Stored terms are never zero, so structural equality is mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QTLaurent {
    terms: BTreeMap<Exponent, BigInt>,
}

impl QTLaurent {
    pub fn zero() -> Self {
        QTLaurent::default()
    }

    pub fn one() -> Self {
        QTLaurent::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QTLaurent::monomial(BigInt::from(c), 0, 0)
    }

    pub fn monomial(coeff: BigInt, q: i64, t: i64) -> Self {
        let mut p = QTLaurent::zero();
        p.add_term(Exponent::new(q, t), coeff);
        p
    }

    pub fn q_pow(k: i64) -> Self {
        QTLaurent::monomial(BigInt::one(), k, 0)
    }

    pub fn t_pow(k: i64) -> Self {
        QTLaurent::monomial(BigInt::one(), 0, k)
    }

    /// Builds a pure-`q` polynomial from dense coefficients of `x = q^base_exp`.
    pub fn from_dense_in(coeffs: &[BigInt], base_exp: i64) -> Self {
        let mut p = QTLaurent::zero();
        for (j, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.terms.insert(Exponent::new(base_exp * j as i64, 0), c.clone());
            }
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64, BigInt)>>(terms: I) -> Self {
        let mut p = QTLaurent::zero();
        for (q, t, c) in terms {
            p.add_term(Exponent::new(q, t), c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exponent::new(0, 0))
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: lexicographic by `(e_t, e_q)`.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, q: i64, t: i64) -> BigInt {
        self.terms
            .get(&Exponent::new(q, t))
            .cloned()
            .unwrap_or_default()
    }

    /// The single term of a monomial, if this polynomial is one.
    pub fn as_monomial(&self) -> Option<(Exponent, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Small-coefficient monomial view, used for substitution images.
    pub fn to_small_monomial(&self) -> Result<Monomial, AlgebraError> {
        let (e, c) = self.as_monomial().ok_or(AlgebraError::NonMonomialImage)?;
        let c = i64::try_from(c).map_err(|_| AlgebraError::NonMonomialImage)?;
        Ok(Monomial::new(c, e.q, e.t))
    }

    pub fn is_pure_q(&self) -> bool {
        self.terms.keys().all(|e| e.t == 0)
    }

    pub fn lowest(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    pub fn highest(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn t_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.t).min()?;
        let hi = self.terms.keys().map(|e| e.t).max()?;
        Some((lo, hi))
    }

    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.q).min()?;
        let hi = self.terms.keys().map(|e| e.q).max()?;
        Some((lo, hi))
    }

    /// Pure-`q` coefficient of `t^j`.
    pub fn t_coeff(&self, j: i64) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (e, c) in self.terms.range(Exponent::new(i64::MIN, j)..=Exponent::new(i64::MAX, j)) {
            out.terms.insert(Exponent::new(e.q, 0), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> QTLaurent {
        if c.is_zero() {
            return QTLaurent::zero();
        }
        QTLaurent {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> QTLaurent {
        if m.coeff == 0 {
            return QTLaurent::zero();
        }
        let shift = m.exponent();
        let c = BigInt::from(m.coeff);
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.checked_add(shift), v * &c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> QTLaurent {
        let mut acc = QTLaurent::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a monomial for one variable.
    ///
    /// The image must be a single term; a `q` image may not involve `t` and must
    /// have nonzero `q`-exponent. Negative powers of the image coefficient are only
    /// defined for `±1`.
    pub fn substitute(&self, var: Var, image: &QTLaurent) -> Result<QTLaurent, AlgebraError> {
        let (ie, ic) = image.as_monomial().ok_or(AlgebraError::NonMonomialImage)?;
        if var == Var::Q && (ie.t != 0 || ie.q == 0) {
            return Err(AlgebraError::InvalidQImage);
        }
        let mut out = QTLaurent::zero();
        for (e, c) in &self.terms {
            let k = match var {
                Var::Q => e.q,
                Var::T => e.t,
            };
            let scale = big_unit_power(ic, k)?;
            let base = match var {
                Var::Q => Exponent::new(0, e.t),
                Var::T => Exponent::new(e.q, 0),
            };
            let img = Exponent::new(
                ie.q.checked_mul(k).expect("q-exponent overflow"),
                ie.t.checked_mul(k).expect("t-exponent overflow"),
            );
            out.add_term(base.checked_add(img), c * scale);
        }
        Ok(out)
    }

    /// Infallible form of [`QTLaurent::substitute`] for a small monomial image.
    pub fn subs(&self, var: Var, image: Monomial) -> QTLaurent {
        self.substitute(var, &image.to_laurent())
            .expect("monomial substitution with unit coefficient")
    }

    /// `q -> q^{-1}`.
    pub fn invert_q(&self) -> QTLaurent {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (Exponent::new(-e.q, e.t), c.clone()))
                .collect(),
        }
    }

    /// `t -> 1`, collapsing onto a pure-`q` polynomial.
    pub fn at_t_one(&self) -> QTLaurent {
        let mut out = QTLaurent::zero();
        for (e, c) in &self.terms {
            out.add_term(Exponent::new(e.q, 0), c.clone());
        }
        out
    }

    /// Evaluates at a numeric `q`, returning the rational coefficient of each power of `t`.
    pub fn eval_q(&self, q: i64) -> BTreeMap<i64, BigRational> {
        assert!(q != 0, "cannot evaluate a Laurent polynomial at q = 0");
        let qq = BigRational::from_integer(BigInt::from(q));
        let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let v = BigRational::from_integer(c.clone()) * num_traits::pow::Pow::pow(&qq, e.q as i32);
            let slot = out.entry(e.t).or_insert_with(BigRational::zero);
            *slot += v;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Exact quotient `self / divisor`, or an error if the division leaves a remainder.
    ///
    /// Division by leading terms in the `(e_t, e_q)` group order. The Newton polygon
    /// of a product is the Minkowski sum of the factors' polygons, so every quotient
    /// term lies in the box `min(self) - min(divisor)` coordinatewise; leaving the box
    /// proves inexactness and bounds the loop.
    pub fn div_exact(&self, divisor: &QTLaurent) -> Result<QTLaurent, AlgebraError> {
        let (dlead_e, dlead_c) = divisor.highest().ok_or(AlgebraError::DivisionByZero)?;
        let dlead_c = dlead_c.clone();
        if self.is_zero() {
            return Ok(QTLaurent::zero());
        }
        let (st, _) = self.t_range().unwrap();
        let (sq, _) = self.q_range().unwrap();
        let (dt, _) = divisor.t_range().unwrap();
        let (dq, _) = divisor.q_range().unwrap();
        let (t_floor, q_floor) = (st - dt, sq - dq);
        let mut rem = self.clone();
        let mut quot = QTLaurent::zero();
        while let Some((re, rc)) = rem.highest() {
            let qe = re.checked_sub(dlead_e);
            if qe.t < t_floor || qe.q < q_floor {
                return Err(AlgebraError::NotDivisible);
            }
            if !(rc % &dlead_c).is_zero() {
                return Err(AlgebraError::NotDivisible);
            }
            let qc = rc / &dlead_c;
            for (de, dc) in &divisor.terms {
                rem.add_term(de.checked_add(qe), -(dc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// Exact division by the binomial `1 - m`.
    pub fn div_one_minus(&self, m: Monomial) -> Result<QTLaurent, AlgebraError> {
        let d = QTLaurent::one() - m.to_laurent();
        self.div_exact(&d)
    }
}

impl fmt::Debug for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTLaurent({self})")
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_const = e.q == 0 && e.t == 0;
            let mut first = true;
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                first = false;
            }
            fmt_var(f, "q", e.q, &mut first)?;
            fmt_var(f, "t", e.t, &mut first)?;
        }
        Ok(())
    }
}

impl From<i64> for QTLaurent {
    fn from(c: i64) -> Self {
        QTLaurent::constant(c)
    }
}

impl From<Monomial> for QTLaurent {
    fn from(m: Monomial) -> Self {
        m.to_laurent()
    }
}

impl AddAssign<&QTLaurent> for QTLaurent {
    fn add_assign(&mut self, rhs: &QTLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QTLaurent> for QTLaurent {
    fn sub_assign(&mut self, rhs: &QTLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&QTLaurent> for &QTLaurent {
    type Output = QTLaurent;
    fn add(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QTLaurent> for &QTLaurent {
    type Output = QTLaurent;
    fn sub(self, rhs: &QTLaurent) -> QTLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&QTLaurent> for &QTLaurent {
    type Output = QTLaurent;
    fn mul(self, rhs: &QTLaurent) -> QTLaurent {
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let e = ea.checked_add(*eb);
                let v = ca * cb;
                match acc.entry(e) {
                    std::collections::btree_map::Entry::Vacant(slot) => {
                        slot.insert(v);
                    }
                    std::collections::btree_map::Entry::Occupied(mut slot) => {
                        *slot.get_mut() += v;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QTLaurent { terms: acc }
    }
}

impl Neg for &QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        QTLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTLaurent> for QTLaurent {
            type Output = QTLaurent;
            fn $m(self, rhs: QTLaurent) -> QTLaurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QTLaurent> for QTLaurent {
            type Output = QTLaurent;
            fn $m(self, rhs: &QTLaurent) -> QTLaurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<QTLaurent> for &QTLaurent {
            type Output = QTLaurent;
            fn $m(self, rhs: QTLaurent) -> QTLaurent {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        -&self
    }
}

impl AddAssign<QTLaurent> for QTLaurent {
    fn add_assign(&mut self, rhs: QTLaurent) {
        *self += &rhs;
    }
}

impl std::iter::Sum for QTLaurent {
    fn sum<I: Iterator<Item = QTLaurent>>(iter: I) -> QTLaurent {
        let mut acc = QTLaurent::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

impl std::iter::Product for QTLaurent {
    fn product<I: Iterator<Item = QTLaurent>>(iter: I) -> QTLaurent {
        let mut acc = QTLaurent::one();
        for p in iter {
            acc = &acc * &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QTLaurent {
        QTLaurent::q_pow(1)
    }
    fn t() -> QTLaurent {
        QTLaurent::t_pow(1)
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (q() + t()) * (q() - t());
        let rhs = q().pow(2) - t().pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let p = q() * t() + QTLaurent::constant(3);
        assert_eq!(&p + &QTLaurent::zero(), p);
    }

    #[test]
    fn laurent_product() {
        let lhs = (QTLaurent::one() + q()) * (QTLaurent::one() + QTLaurent::q_pow(-1));
        let rhs = QTLaurent::q_pow(-1) + QTLaurent::constant(2) + q();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &(q() + t()) - &q();
        assert_eq!(p.len(), 1);
        assert_eq!(p, t());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(
            QTLaurent::q_pow(2).substitute(Var::Q, &QTLaurent::q_pow(-1)).unwrap(),
            QTLaurent::q_pow(-2)
        );
        assert_eq!(
            QTLaurent::t_pow(2).substitute(Var::T, &(q() * t())).unwrap(),
            q().pow(2) * t().pow(2)
        );
        let p = QTLaurent::one() + q() + q().pow(2);
        let expect = QTLaurent::one() + q().pow(2) + q().pow(4);
        assert_eq!(p.substitute(Var::Q, &q().pow(2)).unwrap(), expect);
    }

    #[test]
    fn substitution_rejects_bad_images() {
        let p = q() + t();
        assert_eq!(
            p.substitute(Var::T, &(q() + t())),
            Err(AlgebraError::NonMonomialImage)
        );
        assert_eq!(p.substitute(Var::Q, &t()), Err(AlgebraError::InvalidQImage));
        assert_eq!(
            p.substitute(Var::Q, &QTLaurent::one()),
            Err(AlgebraError::InvalidQImage)
        );
        let inv_t = QTLaurent::t_pow(-1);
        assert!(matches!(
            inv_t.substitute(Var::T, &QTLaurent::constant(2)),
            Err(AlgebraError::NonInvertibleCoefficient(2))
        ));
    }

    #[test]
    fn negating_t_flips_odd_terms() {
        let p = t() + t().pow(2);
        let m = p.subs(Var::T, Monomial::new(-1, 0, 1));
        assert_eq!(m, t().pow(2) - t());
    }

    #[test]
    fn exact_division() {
        let a = QTLaurent::one() - q();
        let b = QTLaurent::one() + q() * t() + QTLaurent::q_pow(-3);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        let c = QTLaurent::one() + q();
        assert_eq!(c.div_exact(&a), Err(AlgebraError::NotDivisible));
        assert_eq!(
            QTLaurent::constant(3).div_exact(&QTLaurent::constant(2)),
            Err(AlgebraError::NotDivisible)
        );
    }

    #[test]
    fn evaluation_at_integer_q() {
        let p = QTLaurent::q_pow(-1) + t() * (q() + QTLaurent::one());
        let v = p.eval_q(2);
        assert_eq!(v[&0], BigRational::new(1.into(), 2.into()));
        assert_eq!(v[&1], BigRational::from_integer(3.into()));
    }

    #[test]
    fn display_is_readable() {
        let p = QTLaurent::one() + QTLaurent::q_pow(-1) * t() - QTLaurent::constant(2) * t().pow(2);
        assert_eq!(p.to_string(), "1 + q^-1*t - 2*t^2");
    }
}
