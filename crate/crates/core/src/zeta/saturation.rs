use std::collections::HashMap;

use super::{OrderFamily, OrderKind};
use crate::algebra::{
    binom2, qbinom, Monomial, Partition, PochFactor, QTFraction, QTLaurent, Var,
};
use crate::qseries::{g_skew, hall_g};

fn sign(r: i64) -> i64 {
    if r % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Saturation zeta function of `B^n` over `A ⊆ B`, by Möbius inversion on the
/// `B`-submodule poset.
///
/// Only cotypes `(1^r)` carry Möbius weight, and inside a rectangle such a submodule has
/// the complementary type, so the sum runs over `r` per factor of `B`.
pub fn saturation_zeta(family: OrderFamily, n: u32) -> QTLaurent {
    let (factors, rule) = family.conductor_quotient();
    let top: i64 = factors.iter().map(|f| f.e * f.len as i64 * n as i64).sum();
    let mut inner_cache: HashMap<Partition, QTLaurent> = HashMap::new();
    let mut total = QTLaurent::zero();
    let mut rs = vec![0u32; factors.len()];
    loop {
        let mut weight = QTLaurent::one();
        let mut cotype_complements = Vec::with_capacity(factors.len());
        for (f, &r) in factors.iter().zip(&rs) {
            let rect = Partition::rectangle(f.len, n);
            let g = hall_g(&rect, &Partition::column(r)).subs(Var::Q, Monomial::q_pow(f.e));
            let r = r as i64;
            weight = (&weight * &g).mul_monomial(Monomial::new(sign(r), f.e * binom2(r), 0));
            cotype_complements.push(Partition::column(r as u32).complement(f.len, n).expect("r <= n"));
        }
        let desc = rule.apply(&cotype_complements);
        let inner = inner_cache
            .entry(desc.clone())
            .or_insert_with(|| {
                desc.sub_partitions()
                    .iter()
                    .map(|rho| hall_g(&desc, rho).mul_monomial(Monomial::t_pow(top - rho.size() as i64)))
                    .sum()
            });
        total += &weight * &*inner;

        // next r-vector in [0, n]^l
        let mut i = 0;
        loop {
            if i == rs.len() {
                return total;
            }
            if rs[i] < n {
                rs[i] += 1;
                break;
            }
            rs[i] = 0;
            i += 1;
        }
    }
}

/// Weakly decreasing `s` with `0 <= s_i <= r_i`; every other `s` gives `G^r_s = 0`.
fn for_each_s(r: &[i64], f: &mut impl FnMut(&[i64])) {
    fn rec(r: &[i64], i: usize, cap: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if i == r.len() {
            f(cur);
            return;
        }
        for v in 0..=cap.min(r[i]) {
            cur.push(v);
            rec(r, i + 1, v, cur, f);
            cur.pop();
        }
    }
    rec(r, 0, i64::MAX, &mut Vec::with_capacity(r.len()), f);
}

/// `sum_s G^{((2n)^{m-1}, 2n-c)}_s(q) t^{2mn-|s|}`, or its value at `t = 1`.
pub(super) fn g_sum(m: u32, n: u32, c: i64, with_t: bool) -> QTLaurent {
    let n = n as i64;
    let mut r = vec![2 * n; m as usize];
    *r.last_mut().expect("m >= 1") = 2 * n - c;
    let mut acc = QTLaurent::zero();
    if r.iter().any(|&x| x < 0) {
        return acc;
    }
    let top = 2 * m as i64 * n;
    for_each_s(&r, &mut |s| {
        let g = g_skew(&r, s).expect("equal lengths");
        if with_t {
            let size: i64 = s.iter().sum();
            acc += g.mul_monomial(Monomial::t_pow(top - size));
        } else {
            acc += g;
        }
    });
    acc
}

/// The right-hand side sum of the explicit formula for `ζ_{R~^n}^R`, with the Solomon
/// denominator cleared. Pass `with_t = false` for its value at `t = 1`.
pub(super) fn rtilde_sum(family: OrderFamily, n: u32, with_t: bool) -> QTLaurent {
    let m = family.m;
    let ni = n as i64;
    let mut cache: HashMap<i64, QTLaurent> = HashMap::new();
    let mut inner = |c: i64| cache.entry(c).or_insert_with(|| g_sum(m, n, c, with_t)).clone();
    let mut acc = QTLaurent::zero();
    match family.kind {
        OrderKind::Ramified => {
            for r in 0..=ni {
                let w = qbinom(ni, r, 1).mul_monomial(Monomial::new(sign(r), binom2(r), 0));
                acc += &w * &inner(r);
            }
        }
        OrderKind::Split => {
            for r1 in 0..=ni {
                for r2 in 0..=ni {
                    let w = (&qbinom(ni, r1, 1) * &qbinom(ni, r2, 1))
                        .mul_monomial(Monomial::new(sign(r1 + r2), binom2(r1) + binom2(r2), 0));
                    acc += &w * &inner(r1 + r2);
                }
            }
        }
        OrderKind::Inert => {
            for r in 0..=ni {
                let w = qbinom(ni, r, 2).mul_monomial(Monomial::new(sign(r), r * r - r, 0));
                acc += &w * &inner(2 * r);
            }
        }
    }
    acc
}

/// The explicit numerator of `ζ_{R~^n}^R` over its Solomon denominator.
pub fn rtilde_numerator(family: OrderFamily, n: u32) -> QTLaurent {
    rtilde_sum(family, n, true)
}

/// `prod_i 1/(t^{e_i}; q^{e_i})_n`.
pub fn solomon_zeta(residue_exponents: &[i64], n: u32) -> QTFraction {
    QTFraction::new(
        QTLaurent::one(),
        residue_exponents
            .iter()
            .map(|&e| PochFactor::new(Monomial::new(1, 0, e), e, n))
            .collect(),
    )
}

/// `ζ_{R~^n}^R` as a fraction: the explicit numerator over `(t;q)_n`, `(t;q)_n^2` or
/// `(t^2;q^2)_n`.
pub fn rtilde_zeta(family: OrderFamily, n: u32) -> QTFraction {
    let den = solomon_zeta(&family.residue_exponents(), n);
    QTFraction::new(rtilde_numerator(family, n), den.den().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, i64, i64)]) -> QTLaurent {
        QTLaurent::from_terms(terms.iter().map(|&(q, t, c)| (q, t, c.into())))
    }

    #[test]
    fn zero_module() {
        for kind in [OrderKind::Ramified, OrderKind::Split, OrderKind::Inert] {
            for m in 1..=3 {
                let f = OrderFamily::new(kind, m).unwrap();
                assert!(saturation_zeta(f, 0).is_one());
                assert!(rtilde_zeta(f, 0).cross_eq(&QTFraction::one()));
            }
        }
    }

    #[test]
    fn inert_m1_n1() {
        // 1 + (q+1) t: the whole space and the q+1 lines of F_{q^2}
        let expect = poly(&[(0, 0, 1), (0, 1, 1), (1, 1, 1)]);
        assert_eq!(saturation_zeta(OrderFamily::inert(1), 1), expect);
        assert_eq!(rtilde_numerator(OrderFamily::inert(1), 1), expect);
    }

    #[test]
    fn engine_matches_explicit_sums() {
        for kind in [OrderKind::Ramified, OrderKind::Split, OrderKind::Inert] {
            for m in 1..=2 {
                for n in 0..=3 {
                    let f = OrderFamily::new(kind, m).unwrap();
                    assert_eq!(saturation_zeta(f, n), rtilde_numerator(f, n), "{f} n={n}");
                }
            }
        }
    }

    #[test]
    fn solomon_shapes() {
        assert!(solomon_zeta(&[], 4).cross_eq(&QTFraction::one()));
        let s = solomon_zeta(&[2], 3);
        assert_eq!(s.den(), &[PochFactor::new(Monomial::t_pow(2), 2, 3)]);
    }
}
