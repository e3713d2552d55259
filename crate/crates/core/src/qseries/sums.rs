use super::{SumFamily, SumKind};
use crate::algebra::{
    chain_multinomial, poch, qbinom, Monomial, PochFactor, QSeries, QTFraction, QTLaurent,
};

/// Sign of `t` in the Bressoud denominator `(-tq; q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TSign {
    Plus,
    Minus,
}

impl TSign {
    fn as_i64(self) -> i64 {
        match self {
            TSign::Plus => 1,
            TSign::Minus => -1,
        }
    }
}

/// Calls `f` on every chain `top >= n_1 >= ... >= n_m >= 0`.
fn for_each_chain(top: i64, m: usize, f: &mut impl FnMut(&[i64])) {
    fn rec(cap: i64, left: usize, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if left == 0 {
            f(cur);
            return;
        }
        for v in 0..=cap {
            cur.push(v);
            rec(v, left - 1, cur, f);
            cur.pop();
        }
    }
    rec(top, m, &mut Vec::with_capacity(m), f);
}

/// `(q;q)_n / [(q;q)_{n-n_1} ... (q;q)_{n_{m-1}-n_m} (q;q)_{n_m}] * q^{sum n_i^2} t^{2 sum n_i}`.
fn multisum_term(n: i64, ns: &[i64]) -> QTLaurent {
    let mut chain = Vec::with_capacity(ns.len() + 2);
    chain.push(n);
    chain.extend_from_slice(ns);
    chain.push(0);
    let sq: i64 = ns.iter().map(|x| x * x).sum();
    let lin: i64 = ns.iter().sum();
    chain_multinomial(&chain, 1).mul_monomial(Monomial::new(1, sq, 2 * lin))
}

/// `AG_n(q, t; 2m+3)`.
pub fn ag_multisum(m: u32, n: u32) -> QTLaurent {
    let n = n as i64;
    let mut acc = QTLaurent::zero();
    for_each_chain(n, m as usize, &mut |ns| acc += multisum_term(n, ns));
    acc
}

/// `Br_n(q, ±t; 2m+2)` over the common denominator `(∓tq; q)_n`.
pub fn br_multisum(m: u32, n: u32, sign: TSign) -> QTFraction {
    let n = n as i64;
    let sg = sign.as_i64();
    let mut num = QTLaurent::zero();
    for_each_chain(n, m as usize, &mut |ns| {
        let last = *ns.last().unwrap_or(&n);
        // (-sg t q; q)_{n_m} times the missing binomials q^{n_m+1} .. q^n gives (-sg t q; q)_n
        let fill = poch(Monomial::new(-sg, last + 1, 1), 1, n - last).expect("n >= n_m");
        num += &multisum_term(n, ns) * &fill;
    });
    QTFraction::new(num, vec![PochFactor::new(Monomial::new(-sg, 1, 1), 1, n as u32)])
}

/// The single-sum form at `t = 1`:
/// `(q;q)_n sum_r (-1)^r q^{e(r)} / ((q;q)_{n-r} (q;q)_{n+r})` with
/// `e(r) = binom(r,2) + (m+1) r^2` (AG) or `(m+1) r^2` (Br).
///
/// The AG value is a polynomial. The Br value equals the multisum at `t = 1` and is
/// returned over `(-q; q)_n`.
pub fn singlesum(family: SumFamily, n: u32) -> QTFraction {
    let n = n as i64;
    let m = family.m as i64;
    // 1/((q;q)_{n-r}(q;q)_{n+r}) = [2n, n-r]/(q;q)_{2n}, so the value is S/(q^{n+1};q)_n
    let mut s = QTLaurent::zero();
    for r in -n..=n {
        let mut e = (m + 1) * r * r;
        if family.kind == SumKind::AndrewsGordon {
            e += r * (r - 1) / 2;
        }
        let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
        s += qbinom(2 * n, n - r, 1).mul_monomial(Monomial::new(sign, e, 0));
    }
    let divisor = poch(Monomial::q_pow(n + 1), 1, n).expect("n >= 0");
    match family.kind {
        SumKind::AndrewsGordon => {
            QTFraction::from_laurent(s.div_exact(&divisor).expect("AG single sum is a polynomial"))
        }
        SumKind::Bressoud => {
            let lift = poch(Monomial::new(-1, 1, 0), 1, n).expect("n >= 0");
            let num = (&s * &lift)
                .div_exact(&divisor)
                .expect("Br single sum times (-q;q)_n is a polynomial");
            QTFraction::new(num, vec![PochFactor::new(Monomial::new(-1, 1, 0), 1, n as u32)])
        }
    }
}

/// `1 / (q^k; q^k)_j` applied to `s` in place.
fn divide_by_factorial(s: &mut QSeries, j: i64, k: usize) {
    for i in 1..=j as usize {
        s.div_one_minus(k * i);
    }
}

/// The infinite `m`-fold sum truncated at `q^order`. The chain ends in `(q;q)_{n_m}` (AG)
/// or `(q^2;q^2)_{n_m}` (Br).
pub fn infinite_sum(family: SumFamily, order: usize) -> QSeries {
    let m = family.m as usize;
    let mut total = QSeries::zero(order);
    fn rec(
        family: SumFamily,
        order: usize,
        left: usize,
        cap: i64,
        sq: usize,
        cur: &mut Vec<i64>,
        total: &mut QSeries,
    ) {
        if left == 0 {
            let mut term = QSeries::one(order).shift(sq);
            for w in cur.windows(2) {
                divide_by_factorial(&mut term, w[0] - w[1], 1);
            }
            let last = *cur.last().unwrap_or(&0);
            match family.kind {
                SumKind::AndrewsGordon => divide_by_factorial(&mut term, last, 1),
                SumKind::Bressoud => divide_by_factorial(&mut term, last, 2),
            }
            total.add_assign(&term);
            return;
        }
        // remaining parts are at most v, so the cone is cut by sq + v^2 <= order
        let mut v = 0i64;
        while v <= cap && sq + (v * v) as usize <= order {
            cur.push(v);
            rec(family, order, left - 1, v, sq + (v * v) as usize, cur, total);
            cur.pop();
            v += 1;
        }
    }
    rec(family, order, m, i64::MAX, 0, &mut Vec::new(), &mut total);
    total
}

/// The product side `(q^a, q^b, q^M; q^M)_inf / (q;q)_inf` truncated at `q^order`, with
/// `(a, b, M) = (m+1, m+2, 2m+3)` (AG) or `(m+1, m+1, 2m+2)` (Br).
pub fn product_side(family: SumFamily, order: usize) -> QSeries {
    let m = family.m as usize;
    let (a, b, modulus) = match family.kind {
        SumKind::AndrewsGordon => (m + 1, m + 2, 2 * m + 3),
        SumKind::Bressoud => (m + 1, m + 1, 2 * m + 2),
    };
    let mut s = QSeries::one(order);
    for start in [a, b, modulus] {
        let mut k = start;
        while k <= order {
            s.mul_one_minus(k);
            k += modulus;
        }
    }
    for k in 1..=order {
        s.div_one_minus(k);
    }
    s
}
