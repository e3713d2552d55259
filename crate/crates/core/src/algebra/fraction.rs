//! Fractions whose denominators are products of finite Pochhammer symbols.

use std::fmt;

use num_bigint::BigInt;

use super::pochhammer::poch;
use super::series::TSeries;
use super::{AlgebraError, Monomial, QTLaurent, Var};

/// `(base; q^step)_len` as a denominator factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PochFactor {
    pub base: Monomial,
    pub step: i64,
    pub len: u32,
}

impl PochFactor {
    pub fn new(base: Monomial, step: i64, len: u32) -> Self {
        assert!(step != 0, "Pochhammer step must be nonzero");
        PochFactor { base, step, len }
    }

    /// The binomial `1 - base q^{step k}` at position `k`, represented by its monomial.
    fn binomial(&self, k: u32) -> Monomial {
        self.base.mul(Monomial::q_pow(self.step * k as i64))
    }

    pub fn expand(&self) -> QTLaurent {
        poch(self.base, self.step, self.len as i64).expect("valid factor")
    }

    /// Same binomials, listed with a positive step.
    fn ascending(&self) -> PochFactor {
        if self.step > 0 || self.len == 0 {
            return *self;
        }
        PochFactor {
            base: self.binomial(self.len - 1),
            step: -self.step,
            len: self.len,
        }
    }

    /// Whether the binomials of `other` are a contiguous run of this factor's binomials.
    /// Returns the offset of the run in ascending order.
    fn covers(&self, other: &PochFactor) -> Option<u32> {
        let (a, b) = (self.ascending(), other.ascending());
        if a.step != b.step || b.len > a.len || a.base.coeff != b.base.coeff || a.base.t != b.base.t {
            return None;
        }
        let dq = b.base.q - a.base.q;
        if dq % a.step != 0 {
            return None;
        }
        let j = dq / a.step;
        if j < 0 || j as u64 + b.len as u64 > a.len as u64 {
            return None;
        }
        Some(j as u32)
    }

    /// Product of this factor's binomials outside the ascending run `[j, j+len)`.
    fn expand_without(&self, j: u32, len: u32) -> QTLaurent {
        let a = self.ascending();
        let mut acc = QTLaurent::one();
        for k in (0..a.len).filter(|k| *k < j || *k >= j + len) {
            acc = &acc * &(QTLaurent::one() - a.binomial(k).to_laurent());
        }
        acc
    }

    fn vanishes(&self) -> bool {
        (0..self.len).any(|k| self.binomial(k).is_one())
    }

    pub fn substitute(&self, var: Var, image: Monomial) -> Result<PochFactor, AlgebraError> {
        let base = self.base.substitute(var, image)?;
        let step = match var {
            Var::T => self.step,
            Var::Q => {
                if image.coeff != 1 || image.t != 0 {
                    return Err(AlgebraError::InvalidQImage);
                }
                self.step * image.q
            }
        };
        Ok(PochFactor::new(base, step, self.len))
    }
}

impl fmt::Display for PochFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            1 => write!(f, "({}; q)_{}", self.base, self.len),
            s => write!(f, "({}; q^{s})_{}", self.base, self.len),
        }
    }
}

/// Numerator over a product of Pochhammer factors.
///
/// Never reduced to lowest terms; equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct QTFraction {
    num: QTLaurent,
    den: Vec<PochFactor>,
}

impl QTFraction {
    pub fn new(num: QTLaurent, den: Vec<PochFactor>) -> Self {
        let mut den: Vec<PochFactor> = den.into_iter().filter(|f| f.len > 0).collect();
        den.sort();
        QTFraction { num, den }
    }

    pub fn from_laurent(num: QTLaurent) -> Self {
        QTFraction::new(num, Vec::new())
    }

    pub fn one() -> Self {
        QTFraction::from_laurent(QTLaurent::one())
    }

    pub fn num(&self) -> &QTLaurent {
        &self.num
    }

    pub fn den(&self) -> &[PochFactor] {
        &self.den
    }

    pub fn den_expanded(&self) -> QTLaurent {
        self.den.iter().map(PochFactor::expand).product()
    }

    /// `num * other.den - other.num * den`; zero iff the fractions are equal.
    pub fn cross_difference(&self, other: &QTFraction) -> QTLaurent {
        &self.num * &other.den_expanded() - &other.num * &self.den_expanded()
    }

    pub fn cross_eq(&self, other: &QTFraction) -> bool {
        self.cross_difference(other).is_zero()
    }

    pub fn mul(&self, other: &QTFraction) -> QTFraction {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        QTFraction::new(&self.num * &other.num, den)
    }

    pub fn mul_laurent(&self, p: &QTLaurent) -> QTFraction {
        QTFraction::new(&self.num * p, self.den.clone())
    }

    pub fn neg(&self) -> QTFraction {
        QTFraction::new(-&self.num, self.den.clone())
    }

    /// Sum over a shared denominator. Factors of `other` that are contiguous runs of
    /// an unused factor of `self` are absorbed instead of multiplied in.
    pub fn add(&self, other: &QTFraction) -> QTFraction {
        let mut used = vec![false; self.den.len()];
        // (index in self.den, offset, len) for absorbed factors
        let mut absorbed: Vec<(usize, u32, u32)> = Vec::new();
        let mut extra: Vec<PochFactor> = Vec::new();
        for y in &other.den {
            let hit = self
                .den
                .iter()
                .enumerate()
                .find_map(|(i, x)| if used[i] { None } else { x.covers(y).map(|j| (i, j)) });
            match hit {
                Some((i, j)) => {
                    used[i] = true;
                    absorbed.push((i, j, y.len));
                }
                None => extra.push(*y),
            }
        }
        let extra_expanded: QTLaurent = extra.iter().map(PochFactor::expand).product();
        let mut self_rest = QTLaurent::one();
        for (i, x) in self.den.iter().enumerate() {
            if let Some(&(_, j, len)) = absorbed.iter().find(|(k, _, _)| *k == i) {
                self_rest = &self_rest * &x.expand_without(j, len);
            } else {
                self_rest = &self_rest * &x.expand();
            }
        }
        // other's factors not absorbed appear in `extra`, so other.den * self_rest == den
        let num = &(&self.num * &extra_expanded) + &(&other.num * &self_rest);
        let mut den = self.den.clone();
        den.extend(extra);
        QTFraction::new(num, den)
    }

    pub fn sub(&self, other: &QTFraction) -> QTFraction {
        self.add(&other.neg())
    }

    pub fn substitute(&self, var: Var, image: Monomial) -> Result<QTFraction, AlgebraError> {
        let num = self.num.substitute(var, &image.to_laurent())?;
        let den = self
            .den
            .iter()
            .map(|f| f.substitute(var, image))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QTFraction::new(num, den))
    }

    /// `q -> q^{-1}` on numerator and denominator.
    pub fn invert_q(&self) -> QTFraction {
        self.substitute(Var::Q, Monomial::q_pow(-1))
            .expect("q inversion is always defined")
    }

    /// Specialization `t = 1`; fails if a denominator factor vanishes there.
    pub fn at_t_one(&self) -> Result<QTFraction, AlgebraError> {
        let out = self.substitute(Var::T, Monomial::one())?;
        if out.den.iter().any(PochFactor::vanishes) {
            return Err(AlgebraError::VanishingDenominator);
        }
        Ok(out)
    }

    /// Exact Laurent polynomial value, if the denominator divides the numerator.
    pub fn to_laurent(&self) -> Result<QTLaurent, AlgebraError> {
        let mut acc = self.num.clone();
        for f in &self.den {
            for k in 0..f.len {
                acc = acc.div_one_minus(f.binomial(k))?;
            }
        }
        Ok(acc)
    }

    /// Power series in `t` truncated at `order`; needs a unit `t^0` denominator term.
    pub fn to_tseries(&self, order: usize) -> Result<TSeries, AlgebraError> {
        let num = TSeries::from_laurent(&self.num, order)?;
        let den = TSeries::from_laurent(&self.den_expanded(), order)?;
        Ok(num.mul(&den.inverse()?))
    }

    /// Integer scaling of the numerator.
    pub fn scale(&self, c: &BigInt) -> QTFraction {
        QTFraction::new(self.num.scale(c), self.den.clone())
    }
}

impl From<QTLaurent> for QTFraction {
    fn from(p: QTLaurent) -> Self {
        QTFraction::from_laurent(p)
    }
}

impl fmt::Display for QTFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ", self.num)?;
        for (i, d) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> QTLaurent {
        QTLaurent::t_pow(1)
    }

    #[test]
    fn cross_multiplied_equality() {
        // 1/(1-t) == (1+t)/(1-t^2)
        let a = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::t_pow(1), 1, 1)]);
        let b = QTFraction::new(
            QTLaurent::one() + t(),
            vec![PochFactor::new(Monomial::t_pow(2), 1, 1)],
        );
        assert!(a.cross_eq(&b));
        let c = QTFraction::new(QTLaurent::one() + t() + t(), b.den().to_vec());
        assert!(!a.cross_eq(&c));
    }

    #[test]
    fn addition_absorbs_sub_runs() {
        // 1/(t;q)_3 + 1/(tq;q)_1: the second denominator is the middle binomial of the first.
        let big = PochFactor::new(Monomial::t_pow(1), 1, 3);
        let small = PochFactor::new(Monomial::new(1, 1, 1), 1, 1);
        let a = QTFraction::new(QTLaurent::one(), vec![big]);
        let b = QTFraction::new(QTLaurent::one(), vec![small]);
        let s = a.add(&b);
        assert_eq!(s.den(), &[big]);
        // compare against naive product denominator
        let naive = QTFraction::new(
            &a.den_expanded() + &b.den_expanded(),
            vec![big, small],
        );
        assert!(s.cross_eq(&naive));
    }

    #[test]
    fn addition_absorbs_reversed_runs() {
        // (t^2 q^-4; q^2)_2 lists the same binomials as a sub-run of (t^2 q^-2; q^-2)_3
        let big = PochFactor::new(Monomial::new(1, -2, 2), -2, 3);
        let small = PochFactor::new(Monomial::new(1, -4, 2), 2, 2);
        let a = QTFraction::new(QTLaurent::one(), vec![big]);
        let b = QTFraction::new(t(), vec![small]);
        let s = a.add(&b);
        assert_eq!(s.den(), &[big]);
        let naive = QTFraction::new(
            &b.den_expanded() + &(&t() * &a.den_expanded()),
            vec![big, small],
        );
        assert!(s.cross_eq(&naive));
    }

    #[test]
    fn substitution_moves_into_factors() {
        let f = QTFraction::new(t(), vec![PochFactor::new(Monomial::t_pow(1), 1, 2)]);
        let g = f.substitute(Var::T, Monomial::new(1, 3, 1)).unwrap();
        assert_eq!(g.den()[0].base, Monomial::new(1, 3, 1));
        let h = f.invert_q();
        assert_eq!(h.den()[0].step, -1);
    }

    #[test]
    fn t_one_detects_vanishing_denominator() {
        let f = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::t_pow(1), 1, 2)]);
        assert_eq!(f.at_t_one().unwrap_err(), AlgebraError::VanishingDenominator);
        let g = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::new(1, 1, 1), 1, 2)]);
        assert!(g.at_t_one().is_ok());
    }

    #[test]
    fn exact_laurent_value() {
        let den = vec![PochFactor::new(Monomial::new(1, -2, 2), -2, 2)];
        let base = QTLaurent::one() + t();
        let f = QTFraction::new(&base * &QTFraction::new(QTLaurent::one(), den.clone()).den_expanded(), den.clone());
        assert_eq!(f.to_laurent().unwrap(), base);
        let g = QTFraction::new(QTLaurent::one(), den);
        assert_eq!(g.to_laurent(), Err(AlgebraError::NotDivisible));
    }
}
