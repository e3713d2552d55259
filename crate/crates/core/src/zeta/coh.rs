use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{OrderFamily, OrderKind, Status, ZetaError};
use crate::algebra::{binom2, poch, qbinom, Exponent, Monomial, PochFactor, QTFraction, QTLaurent, Var};
use crate::qseries::{ag_multisum, br_multisum, TSign};

/// `ζ_{R^n}^R = sum_r [n,r]_q t^r ζ_{m R^r}^R(t -> q^{n-r} t)` for a local ring with
/// residue field `F_q`.
pub fn nakayama_compose(
    sub_zetas: &BTreeMap<usize, QTFraction>,
    n: usize,
) -> Result<QTFraction, ZetaError> {
    let mut acc: Option<QTFraction> = None;
    // largest denominators first so later terms are absorbed as sub-runs
    for r in (0..=n).rev() {
        let z = sub_zetas.get(&r).ok_or(ZetaError::MissingSubZeta(r))?;
        let shifted = z.substitute(Var::T, Monomial::new(1, (n - r) as i64, 1))?;
        let w = qbinom(n as i64, r as i64, 1).mul_monomial(Monomial::t_pow(r as i64));
        let term = shifted.mul_laurent(&w);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    Ok(acc.expect("n + 1 >= 1 terms"))
}

/// The double-sum formula for the finitized Coh zeta function of the `m = 1` inert
/// order, over the common denominator `(t^2 q^{-2}; q^{-2})_n`.
pub fn coh_finitized(family: OrderFamily, n: u32) -> Result<QTFraction, ZetaError> {
    if family.kind != OrderKind::Inert || family.m != 1 {
        return Err(ZetaError::NoClosedForm(family));
    }
    let n = n as i64;
    let mut num = QTLaurent::zero();
    for i in 0..=n {
        let outer = qbinom(n, i, -1);
        let fill = poch(Monomial::new(1, -2 - 2 * i, 2), -2, n - i)?;
        for j in 0..=i {
            // (q^{2i};q^{-2})_j / (q^{-1};q^{-1})_j = (-1)^j q^{binom(j+1,2)} [i,j]_{q^2} (-q;q)_j
            let ratio = (&qbinom(i, j, 2) * &poch(Monomial::new(-1, 1, 0), 1, j)?)
                .mul_monomial(Monomial::q_pow(binom2(j + 1)));
            // the two (-1)^j signs cancel
            let mono = Monomial::new(1, -(i * i + i * j + j), i + j);
            num += (&(&outer * &ratio) * &fill).mul_monomial(mono);
        }
    }
    Ok(QTFraction::new(
        num,
        vec![PochFactor::new(Monomial::new(1, -2, 2), -2, n as u32)],
    ))
}

/// A closed form together with whether it is proved.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub value: QTFraction,
    pub status: Status,
}

/// The AG / Bressoud closed forms for the finitized Coh zeta functions, all over
/// `(t q^{-1}; q^{-1})_n`. The inert one is conjectural.
pub fn closed_form_coh(family: OrderFamily, n: u32) -> ClosedForm {
    let lead = PochFactor::new(Monomial::new(1, -1, 1), -1, n);
    let (sum, status) = match family.kind {
        OrderKind::Ramified => (QTFraction::from_laurent(ag_multisum(family.m, n)), Status::Theorem),
        OrderKind::Split => (br_multisum(family.m, n, TSign::Minus), Status::Theorem),
        OrderKind::Inert => (br_multisum(family.m, n, TSign::Plus), Status::Conjectural),
    };
    let sum = sum.invert_q();
    let mut den = sum.den().to_vec();
    den.push(lead);
    ClosedForm { value: QTFraction::new(sum.num().clone(), den), status }
}

/// `ν̂ = ζ̂_{R,n} / ζ̂_{R~,n}`, i.e. `z * prod_e (t^e q^{-e}; q^{-e})_n`, as an exact
/// Laurent polynomial.
pub fn normalize_nuhat(z: &QTFraction, family: OrderFamily, n: u32) -> Result<QTLaurent, ZetaError> {
    let mut lift = QTLaurent::one();
    for e in family.residue_exponents() {
        lift = &lift * &poch(Monomial::new(1, -e, e), -e, n as i64)?;
    }
    z.mul_laurent(&lift).to_laurent().map_err(|_| ZetaError::NonPolynomial)
}

/// Outcome of a functional-equation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reflection {
    pub holds: bool,
    /// Lowest term of `ν̂ - (reflected ν̂)` when the check fails.
    pub witness: Option<(Exponent, BigInt)>,
}

/// Checks `ν̂(t) = q^{-dn^2} t^{2nd} ν̂(q^n / t)`, the reflection principle for a Gorenstein
/// order with `|R~/R| = q^d`, written in `t = q^{-s}`.
pub fn reflection_check(nu: &QTLaurent, n: u32, d: i64) -> Reflection {
    let n = n as i64;
    let reflected = nu
        .subs(Var::T, Monomial::new(1, n, -1))
        .mul_monomial(Monomial::new(1, -d * n * n, 2 * n * d));
    let diff = nu - &reflected;
    let witness = diff.lowest().map(|(e, c)| (e, c.clone()));
    Reflection { holds: witness.is_none(), witness }
}
