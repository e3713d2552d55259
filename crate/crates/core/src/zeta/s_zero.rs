use serde::{Deserialize, Serialize};

use super::saturation::rtilde_sum;
use super::{OrderFamily, OrderKind};
use crate::algebra::{binom2, qbinom, Monomial, QTLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NuhatForm {
    /// `q^{-mn^2}` times the explicit `ζ_{R~^n}^R` numerator at `t = 1`.
    Theorem,
    /// The rewritten multi-sum in `q^{-1}` whose coefficients visibly stabilize in `n`.
    Alternative,
}

/// The normalized finitized Coh zeta function at `s = 0`.
pub fn nuhat_zero(family: OrderFamily, n: u32, form: NuhatForm) -> QTLaurent {
    match form {
        NuhatForm::Theorem => {
            let shift = -(family.m as i64) * (n as i64) * (n as i64);
            rtilde_sum(family, n, false).mul_monomial(Monomial::q_pow(shift))
        }
        NuhatForm::Alternative => alternative(family, n as i64),
    }
}

fn sign(r: i64) -> i64 {
    if r.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Calls `f` with every tail `(s_2, ..., s_m)`, `s_1 >= s_2 >= ... >= s_m >= -n`.
fn for_each_tail(s1: i64, m: usize, n: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(cap: i64, left: usize, n: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if left == 0 {
            f(cur);
            return;
        }
        for v in -n..=cap {
            cur.push(v);
            rec(v, left - 1, n, cur, f);
            cur.pop();
        }
    }
    rec(s1, m - 1, n, &mut Vec::with_capacity(m), f);
}

/// `(x;x)_{n+s_1} / [(x;x)_{n+s_m} prod_k (x;x)_{s_k-s_{k+1}}]` with `x = q^{-1}`,
/// telescoped into `prod_k [n+s_k choose s_k-s_{k+1}]_x`.
fn tail_ratio(n: i64, s1: i64, tail: &[i64]) -> QTLaurent {
    let mut acc = QTLaurent::one();
    let mut prev = s1;
    for &s in tail {
        let b = qbinom(n + prev, prev - s, -1);
        if b.is_zero() {
            return b;
        }
        acc = &acc * &b;
        prev = s;
    }
    acc
}

fn alternative(family: OrderFamily, n: i64) -> QTLaurent {
    let m = family.m as usize;
    let mut acc = QTLaurent::zero();
    // the outer binomial forces s_1 into [r - n, n] (ramified, split) or [2r - n, n] (inert)
    let add_tails = |s1: i64, head: QTLaurent, head_exp: i64, acc: &mut QTLaurent| {
        if head.is_zero() {
            return;
        }
        for_each_tail(s1, m, n, &mut |tail| {
            let ratio = tail_ratio(n, s1, tail);
            if ratio.is_zero() {
                return;
            }
            let sq: i64 = tail.iter().map(|s| s * s).sum();
            *acc += (&head * &ratio).mul_monomial(Monomial::q_pow(head_exp - sq));
        });
    };
    match family.kind {
        OrderKind::Ramified => {
            for r in 0..=n {
                for s1 in (r - n)..=n {
                    let head = (&qbinom(n, r, -1) * &qbinom(2 * n - r, n - r + s1, -1)).scale(&sign(r).into());
                    let e = -(binom2(s1) + binom2(r - s1) + r);
                    add_tails(s1, head, e, &mut acc);
                }
            }
        }
        OrderKind::Split => {
            for r1 in 0..=n {
                for r2 in 0..=n {
                    let r = r1 + r2;
                    for s1 in (r - n)..=n {
                        let head = (&(&qbinom(n, r1, -1) * &qbinom(n, r2, -1))
                            * &qbinom(2 * n - r, n - r + s1, -1))
                            .scale(&sign(r).into());
                        // the printed split exponent also subtracts binom(r_1 + r_2 + 1, 2); the
                        // base change of the theorem form does not produce that term
                        let e = r * s1 - s1 * s1 - binom2(r1 + 1) - binom2(r2 + 1);
                        add_tails(s1, head, e, &mut acc);
                    }
                }
            }
        }
        OrderKind::Inert => {
            for r in 0..=n {
                for s1 in (2 * r - n)..=n {
                    let head = (&qbinom(n, r, -2) * &qbinom(2 * n - 2 * r, n - s1, -1)).scale(&sign(r).into());
                    let e = -r - (s1 - r) * (s1 - r);
                    add_tails(s1, head, e, &mut acc);
                }
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64)]) -> QTLaurent {
        QTLaurent::from_terms(terms.iter().map(|&(q, c)| (q, 0, c.into())))
    }

    #[test]
    fn m1_n1_values() {
        for form in [NuhatForm::Theorem, NuhatForm::Alternative] {
            assert_eq!(nuhat_zero(OrderFamily::ramified(1), 1, form), poly(&[(0, 1), (-1, 1)]));
            assert!(nuhat_zero(OrderFamily::split(1), 1, form).is_one());
            assert_eq!(nuhat_zero(OrderFamily::inert(1), 1, form), poly(&[(0, 1), (-1, 2)]));
        }
    }

    #[test]
    fn empty_module_is_one() {
        for kind in [OrderKind::Ramified, OrderKind::Split, OrderKind::Inert] {
            for m in 1..=3 {
                let f = OrderFamily::new(kind, m).unwrap();
                assert!(nuhat_zero(f, 0, NuhatForm::Theorem).is_one());
                assert!(nuhat_zero(f, 0, NuhatForm::Alternative).is_one());
            }
        }
    }

    #[test]
    fn forms_agree_on_small_grid() {
        for kind in [OrderKind::Ramified, OrderKind::Split, OrderKind::Inert] {
            for m in 1..=2 {
                for n in 0..=3 {
                    let f = OrderFamily::new(kind, m).unwrap();
                    assert_eq!(
                        nuhat_zero(f, n, NuhatForm::Theorem),
                        nuhat_zero(f, n, NuhatForm::Alternative),
                        "{f} n={n}"
                    );
                }
            }
        }
    }
}
