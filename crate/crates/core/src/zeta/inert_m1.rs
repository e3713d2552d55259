use serde::{Deserialize, Serialize};

use crate::algebra::{binom2, poch, qbinom, Monomial, QTLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountForm {
    /// From ordered `F_{q^2}`-independent tuples in the dual space.
    Closed,
    /// From Möbius inversion over `F_{q^2}`-subspaces.
    Alternating,
}

/// Number of `r`-codimensional `F_q`-subspaces `W ⊆ F_{q^2}^n` with `F_{q^2} W = F_{q^2}^n`.
pub fn inert_m1_count(n: u32, r: i64, form: CountForm) -> QTLaurent {
    let n = n as i64;
    match form {
        // q^{binom(r,2)} (q^{2n};q^{-2})_r / (q;q)_r, using
        // (q^{2n};q^{-2})_r = [n,r]_{q^2} (q^2;q^2)_r and (q^2;q^2)_r = (q;q)_r (-q;q)_r
        CountForm::Closed => {
            if r < 0 || r > n {
                return QTLaurent::zero();
            }
            let neg = poch(Monomial::new(-1, 1, 0), 1, r).expect("r >= 0");
            (&qbinom(n, r, 2) * &neg).mul_monomial(Monomial::q_pow(binom2(r)))
        }
        CountForm::Alternating => (0..=n)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                (&qbinom(n, i, 2) * &qbinom(2 * n - 2 * i, 2 * n - r, 1))
                    .mul_monomial(Monomial::new(sign, i * i - i, 0))
            })
            .sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qfactorial;

    #[test]
    fn small_counts() {
        let q1 = QTLaurent::q_pow(1) + QTLaurent::one();
        for form in [CountForm::Closed, CountForm::Alternating] {
            assert_eq!(inert_m1_count(1, 1, form), q1);
            for n in 0..4 {
                assert!(inert_m1_count(n, 0, form).is_one());
            }
            assert!(inert_m1_count(1, 2, form).is_zero());
            assert!(inert_m1_count(2, -1, form).is_zero());
        }
    }

    #[test]
    fn closed_form_matches_pochhammer_ratio() {
        // cross-multiplied: count * (q;q)_r == q^{binom(r,2)} (q^{2n};q^{-2})_r
        for n in 0..=6u32 {
            for r in 0..=n as i64 {
                let lhs = &inert_m1_count(n, r, CountForm::Closed) * &qfactorial(r, 1);
                let rhs = poch(Monomial::q_pow(2 * n as i64), -2, r)
                    .unwrap()
                    .mul_monomial(Monomial::q_pow(binom2(r)));
                assert_eq!(lhs, rhs, "n={n} r={r}");
            }
        }
    }
}
