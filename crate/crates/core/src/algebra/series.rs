//! Truncated power series: in `t` with Laurent-in-`q` coefficients, and in `q` with
//! integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Exponent, QTLaurent};

/// `sum_{j=0}^{order} c_j(q) t^j`, each `c_j` a pure-`q` Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSeries {
    order: usize,
    coeffs: Vec<QTLaurent>,
}

impl TSeries {
    pub fn new(order: usize, mut coeffs: Vec<QTLaurent>) -> Self {
        coeffs.resize(order + 1, QTLaurent::zero());
        coeffs.truncate(order + 1);
        debug_assert!(coeffs.iter().all(QTLaurent::is_pure_q));
        TSeries { order, coeffs }
    }

    /// Reads a polynomial with nonnegative `t`-exponents as a series.
    pub fn from_laurent(p: &QTLaurent, order: usize) -> Result<Self, AlgebraError> {
        let mut coeffs = vec![QTLaurent::zero(); order + 1];
        for (e, c) in p.terms() {
            if e.t < 0 {
                return Err(AlgebraError::NegativeTExponent(e.t));
            }
            if (e.t as usize) <= order {
                coeffs[e.t as usize].add_term(Exponent::new(e.q, 0), c.clone());
            }
        }
        Ok(TSeries { order, coeffs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, j: usize) -> &QTLaurent {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[QTLaurent] {
        &self.coeffs
    }

    pub fn add(&self, other: &TSeries) -> TSeries {
        let order = self.order.min(other.order);
        TSeries::new(
            order,
            (0..=order).map(|j| &self.coeffs[j] + &other.coeffs[j]).collect(),
        )
    }

    pub fn mul(&self, other: &TSeries) -> TSeries {
        let order = self.order.min(other.order);
        let mut out = vec![QTLaurent::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if !other.coeffs[j].is_zero() {
                    out[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        TSeries { order, coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit `±q^k`.
    pub fn inverse(&self) -> Result<TSeries, AlgebraError> {
        let c0 = &self.coeffs[0];
        let (e, c) = c0.as_monomial().ok_or(AlgebraError::NonUnitConstantTerm)?;
        if !c.abs().is_one() {
            return Err(AlgebraError::NonUnitConstantTerm);
        }
        let inv0 = QTLaurent::monomial(c.clone(), -e.q, 0);
        let mut out = vec![QTLaurent::zero(); self.order + 1];
        out[0] = inv0.clone();
        for j in 1..=self.order {
            let mut acc = QTLaurent::zero();
            for i in 1..=j {
                if !self.coeffs[i].is_zero() && !out[j - i].is_zero() {
                    acc += &self.coeffs[i] * &out[j - i];
                }
            }
            out[j] = -(&acc * &inv0);
        }
        Ok(TSeries { order: self.order, coeffs: out })
    }

    /// Coefficientwise comparison of the first `upto + 1` terms.
    pub fn prefix_eq(&self, other: &TSeries, upto: usize) -> bool {
        upto <= self.order.min(other.order) && (0..=upto).all(|j| self.coeffs[j] == other.coeffs[j])
    }
}

/// `sum_{k=0}^{order} a_k q^k` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        coeffs.truncate(order + 1);
        QSeries { coeffs }
    }

    /// Truncates a pure-`q` polynomial; negative exponents are rejected.
    pub fn from_laurent(p: &QTLaurent, order: usize) -> Result<Self, AlgebraError> {
        let mut s = QSeries::zero(order);
        for (e, c) in p.terms() {
            if e.t != 0 {
                return Err(AlgebraError::NotPureQ);
            }
            if e.q < 0 {
                return Err(AlgebraError::NegativeQExponent(e.q));
            }
            if (e.q as usize) <= order {
                s.coeffs[e.q as usize] += c;
            }
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add_assign(&mut self, other: &QSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    /// Multiplies by `q^k`, shifting and truncating.
    pub fn shift(&self, k: usize) -> QSeries {
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for i in 0..=order {
            if i + k <= order {
                out[i + k] = self.coeffs[i].clone();
            }
        }
        QSeries { coeffs: out }
    }

    /// Multiplies by `1 - q^k` in place.
    pub fn mul_one_minus(&mut self, k: usize) {
        assert!(k > 0);
        for i in (k..self.coeffs.len()).rev() {
            let v = self.coeffs[i - k].clone();
            self.coeffs[i] -= v;
        }
    }

    /// Divides by `1 - q^k` in place (multiplication by the geometric series).
    pub fn div_one_minus(&mut self, k: usize) {
        assert!(k > 0);
        for i in k..self.coeffs.len() {
            let v = self.coeffs[i - k].clone();
            self.coeffs[i] += v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        // 1/(1 - q t) = sum q^j t^j
        let d = QTLaurent::one() - QTLaurent::monomial(1.into(), 1, 1);
        let s = TSeries::from_laurent(&d, 5).unwrap().inverse().unwrap();
        for j in 0..=5 {
            assert_eq!(s.coeff(j), &QTLaurent::q_pow(j as i64));
        }
    }

    #[test]
    fn non_unit_constant_rejected() {
        let d = QTLaurent::constant(2) - QTLaurent::t_pow(1);
        assert_eq!(
            TSeries::from_laurent(&d, 3).unwrap().inverse(),
            Err(AlgebraError::NonUnitConstantTerm)
        );
    }

    #[test]
    fn qseries_division_roundtrip() {
        let mut s = QSeries::one(10);
        s.div_one_minus(3);
        assert_eq!(s.coeffs()[9], BigInt::one());
        assert_eq!(s.coeffs()[8], BigInt::zero());
        s.mul_one_minus(3);
        assert_eq!(s, QSeries::one(10));
    }
}
