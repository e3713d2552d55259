//! Plain record forms of polynomials and fractions for JSON/CSV output.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, Exponent, Monomial, PochFactor, QTFraction, QTLaurent};

/// One term. Coefficients are decimal strings so no reader truncates them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub e_q: i64,
    pub e_t: i64,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub base: TermRecord,
    pub step: i64,
    pub len: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionRecord {
    pub num: Vec<TermRecord>,
    pub den: Vec<FactorRecord>,
}

/// Which variable a value is printed in: `q` itself or `q^{-1}`.
///
/// Under `QInv` every exponent of `q` is negated, so a record reads as a polynomial
/// in `x = q^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum VarConvention {
    #[default]
    Q,
    Qinv,
}

impl VarConvention {
    fn sign(self) -> i64 {
        match self {
            VarConvention::Q => 1,
            VarConvention::Qinv => -1,
        }
    }
}

impl QTLaurent {
    /// Terms in canonical `(e_t, e_q)` order.
    pub fn to_records(&self, var: VarConvention) -> Vec<TermRecord> {
        let mut out: Vec<TermRecord> = self
            .terms()
            .map(|(e, c)| TermRecord { e_q: var.sign() * e.q, e_t: e.t, coeff: c.to_string() })
            .collect();
        out.sort_by_key(|r| (r.e_t, r.e_q));
        out
    }

    pub fn from_records(records: &[TermRecord], var: VarConvention) -> Result<Self, AlgebraError> {
        let mut p = QTLaurent::zero();
        for r in records {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| AlgebraError::InvalidCoefficient(r.coeff.clone()))?;
            p.add_term(Exponent::new(var.sign() * r.e_q, r.e_t), c);
        }
        Ok(p)
    }
}

impl QTFraction {
    pub fn to_record(&self, var: VarConvention) -> FractionRecord {
        FractionRecord {
            num: self.num().to_records(var),
            den: self
                .den()
                .iter()
                .map(|f| FactorRecord {
                    base: TermRecord {
                        e_q: var.sign() * f.base.q,
                        e_t: f.base.t,
                        coeff: f.base.coeff.to_string(),
                    },
                    step: var.sign() * f.step,
                    len: f.len,
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &FractionRecord, var: VarConvention) -> Result<Self, AlgebraError> {
        let num = QTLaurent::from_records(&rec.num, var)?;
        let den = rec
            .den
            .iter()
            .map(|f| {
                let coeff: i64 = f
                    .base
                    .coeff
                    .parse()
                    .map_err(|_| AlgebraError::InvalidCoefficient(f.base.coeff.clone()))?;
                if f.step == 0 {
                    return Err(AlgebraError::ZeroStep);
                }
                Ok(PochFactor::new(
                    Monomial::new(coeff, var.sign() * f.base.e_q, f.base.e_t),
                    var.sign() * f.step,
                    f.len,
                ))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QTFraction::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_sorted_by_t_then_q() {
        let p = QTLaurent::from_terms([(2, 0, 1.into()), (-1, 1, 3.into()), (0, 0, (-5).into())]);
        let r = p.to_records(VarConvention::Q);
        let keys: Vec<_> = r.iter().map(|x| (x.e_t, x.e_q)).collect();
        assert_eq!(keys, vec![(0, 0), (0, 2), (1, -1)]);
        assert_eq!(r[0].coeff, "-5");
    }

    #[test]
    fn fraction_roundtrip_in_both_conventions() {
        let f = QTFraction::new(
            QTLaurent::from_terms([(0, 0, 1.into()), (-1, 1, 1.into()), (-1, 2, 1.into())]),
            vec![PochFactor::new(Monomial::new(1, -2, 2), -2, 1)],
        );
        for var in [VarConvention::Q, VarConvention::Qinv] {
            let rec = f.to_record(var);
            let json = serde_json::to_string(&rec).unwrap();
            let back: FractionRecord = serde_json::from_str(&json).unwrap();
            let g = QTFraction::from_record(&back, var).unwrap();
            assert!(g.cross_eq(&f));
        }
        assert_eq!(f.to_record(VarConvention::Qinv).num[1].e_q, 1);
    }

    #[test]
    fn huge_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = QTLaurent::monomial(big.clone(), 1, 0);
        let back = QTLaurent::from_records(&p.to_records(VarConvention::Q), VarConvention::Q).unwrap();
        assert_eq!(back, p);
    }
}
