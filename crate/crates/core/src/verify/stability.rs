use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Witness;
use crate::algebra::{AlgebraError, QTFraction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StabilityMode {
    /// The `t`-coefficients up to the degree bound are identical.
    Exact,
    /// The `t`-coefficients up to the degree bound agree modulo `q^{-(n+1)}`, i.e. the
    /// difference between `n` and `n + 1` only has `q`-exponents `<= -(n+1)`.
    QAdic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityPoint {
    pub n: u32,
    pub holds: bool,
    /// Offending term of `coeff_{n+1} - coeff_n`.
    pub witness: Option<Witness>,
}

/// Compares the `t`-expansions of consecutive members of `series_at` up to `t^{degree(n)}`.
pub fn stabilization_check(
    series_at: &BTreeMap<u32, QTFraction>,
    degree: impl Fn(u32) -> usize,
    mode: StabilityMode,
) -> Result<Vec<StabilityPoint>, AlgebraError> {
    let mut out = Vec::new();
    for (&n, z) in series_at {
        let Some(next) = series_at.get(&(n + 1)) else {
            continue;
        };
        let d = degree(n);
        let (a, b) = (z.to_tseries(d)?, next.to_tseries(d)?);
        let mut witness = None;
        for j in 0..=d {
            let diff = b.coeff(j) - a.coeff(j);
            let bad = match mode {
                StabilityMode::Exact => diff.highest(),
                StabilityMode::QAdic => diff.terms().filter(|(e, _)| e.q > -(n as i64 + 1)).last(),
            };
            if let Some((e, c)) = bad {
                witness = Some(Witness::new(e.q, j as i64, c));
                break;
            }
        }
        out.push(StabilityPoint { n, holds: witness.is_none(), witness });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, PochFactor, QTLaurent};
    use crate::zeta::{coh_finitized, OrderFamily};

    fn family(f: impl Fn(u32) -> QTFraction) -> BTreeMap<u32, QTFraction> {
        (0..=4).map(|n| (n, f(n))).collect()
    }

    #[test]
    fn constant_family_is_stable() {
        let geo = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::t_pow(1), 1, 2)]);
        let fam = family(|_| geo.clone());
        for mode in [StabilityMode::Exact, StabilityMode::QAdic] {
            assert!(stabilization_check(&fam, |n| n as usize + 2, mode).unwrap().iter().all(|p| p.holds));
        }
    }

    #[test]
    fn injected_drift_fails_everywhere() {
        let fam = family(|n| QTFraction::from_laurent(QTLaurent::one() + QTLaurent::t_pow(1).scale(&(n as i64).into())));
        for mode in [StabilityMode::Exact, StabilityMode::QAdic] {
            let pts = stabilization_check(&fam, |n| n as usize, mode).unwrap();
            assert_eq!(pts.len(), 4);
            for p in pts.iter().filter(|p| p.n >= 1) {
                assert!(!p.holds);
                assert_eq!(p.witness.as_ref().unwrap().e_t, 1);
            }
        }
    }

    #[test]
    fn inert_m1_converges_q_adically() {
        let fam: BTreeMap<u32, QTFraction> =
            (0..=5).map(|n| (n, coh_finitized(OrderFamily::inert(1), n).unwrap())).collect();
        let pts = stabilization_check(&fam, |n| n as usize, StabilityMode::QAdic).unwrap();
        assert!(pts.iter().all(|p| p.holds));
        // the number of index-q submodules of R^n is [n,1]_q, so t^1 keeps moving
        let exact = stabilization_check(&fam, |n| n as usize, StabilityMode::Exact).unwrap();
        let w = exact[1].witness.as_ref().unwrap();
        assert_eq!((w.e_q, w.e_t), (-2, 1));
    }

    #[test]
    fn rejects_non_unit_constant_term() {
        let bad = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::new(1, 0, 0), 1, 1)]);
        let fam: BTreeMap<u32, QTFraction> = [(0, bad.clone()), (1, bad)].into();
        assert!(stabilization_check(&fam, |_| 1, StabilityMode::Exact).is_err());
    }
}
