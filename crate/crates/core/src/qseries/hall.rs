use crate::algebra::{qbinom, AlgebraError, Partition, QTLaurent};

fn weakly_decreasing_nonneg(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.windows(2).all(|w| w[0] >= w[1])
}

/// `G^r_s(q) = q^{sum s_i (r_i - s_i)} prod_i [r_i - s_{i+1} choose r_i - s_i]_{q^{-1}}`
/// with `r_{m+1} = s_{m+1} = 0`.
///
/// Returns zero unless `r` and `s` are weakly decreasing, nonnegative and `r_i >= s_i`.
pub fn g_skew(r: &[i64], s: &[i64]) -> Result<QTLaurent, AlgebraError> {
    if r.len() != s.len() {
        return Err(AlgebraError::LengthMismatch(r.len(), s.len()));
    }
    if !weakly_decreasing_nonneg(r)
        || !weakly_decreasing_nonneg(s)
        || r.iter().zip(s).any(|(a, b)| a < b)
    {
        return Ok(QTLaurent::zero());
    }
    let m = r.len();
    let mut shift = 0i64;
    let mut acc = QTLaurent::one();
    for i in 0..m {
        shift += s[i] * (r[i] - s[i]);
        let s_next = if i + 1 < m { s[i + 1] } else { 0 };
        let b = qbinom(r[i] - s_next, r[i] - s[i], -1);
        if b.is_zero() {
            return Ok(QTLaurent::zero());
        }
        acc = &acc * &b;
    }
    Ok(acc.mul_monomial(crate::algebra::Monomial::q_pow(shift)))
}

/// `g^lambda_mu(q) = G^{lambda'}_{mu'}(q)`: the number of submodules of type `mu`
/// in a module of type `lambda`.
pub fn hall_g(lambda: &Partition, mu: &Partition) -> QTLaurent {
    if !lambda.contains(mu) {
        return QTLaurent::zero();
    }
    let m = lambda.largest() as usize;
    let r = lambda.conjugate_padded(m);
    let s = mu.conjugate_padded(m);
    g_skew(&r, &s).expect("padded to equal length")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> QTLaurent {
        QTLaurent::q_pow(1)
    }

    #[test]
    fn lines_in_a_plane() {
        assert_eq!(g_skew(&[2], &[1]).unwrap(), q() + QTLaurent::one());
    }

    #[test]
    fn vanishing_guard() {
        assert!(g_skew(&[1, 2], &[1, 1]).unwrap().is_zero());
        assert!(g_skew(&[2, 1], &[3, 0]).unwrap().is_zero());
        assert!(g_skew(&[2, 1], &[-1, -1]).unwrap().is_zero());
        assert_eq!(g_skew(&[1], &[1, 0]), Err(AlgebraError::LengthMismatch(1, 2)));
    }

    #[test]
    fn empty_submodule() {
        for n in 0..6 {
            assert!(g_skew(&[n], &[0]).unwrap().is_one());
        }
    }

    #[test]
    fn rectangle_columns_are_gaussian() {
        for m in 1..4u32 {
            for n in 0..4u32 {
                for r in 0..=n {
                    let g = hall_g(&Partition::rectangle(m, n), &Partition::column(r));
                    assert_eq!(g, qbinom(n as i64, r as i64, 1), "m={m} n={n} r={r}");
                }
            }
        }
    }

    #[test]
    fn hall_trivial_cases() {
        let l = Partition::new(vec![2, 2]).unwrap();
        assert!(hall_g(&l, &Partition::new(vec![3]).unwrap()).is_zero());
        for lam in [vec![3, 1], vec![2, 2, 1], vec![1]] {
            let l = Partition::new(lam).unwrap();
            assert!(hall_g(&l, &l).is_one());
            assert!(hall_g(&l, &Partition::empty()).is_one());
        }
    }

    #[test]
    fn coefficients_nonnegative() {
        for a in 0..=4i64 {
            for b in 0..=a {
                for c in 0..=a {
                    for d in 0..=c.min(b) {
                        let g = g_skew(&[a, b], &[c, d]).unwrap();
                        assert!(g.terms().all(|(_, x)| x.sign() != num_bigint::Sign::Minus));
                    }
                }
            }
        }
    }
}
