//! Finite q-Pochhammer products and Gaussian binomial coefficients.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{AlgebraError, Monomial, QTLaurent};

/// `(base; q^step)_n = prod_{k=0}^{n-1} (1 - base * q^{step k})`.
pub fn poch(base: Monomial, step: i64, n: i64) -> Result<QTLaurent, AlgebraError> {
    if n < 0 {
        return Err(AlgebraError::NegativeLength(n));
    }
    if step == 0 {
        return Err(AlgebraError::ZeroStep);
    }
    let mut acc = QTLaurent::one();
    for k in 0..n {
        let factor = QTLaurent::one() - base.mul(Monomial::q_pow(step * k)).to_laurent();
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// `(q^a; q^a)_n`, the common special case.
pub fn qfactorial(n: i64, base_exp: i64) -> QTLaurent {
    poch(Monomial::q_pow(base_exp), base_exp, n).expect("nonnegative length")
}

type Dense = Arc<Vec<BigInt>>;

fn cache() -> &'static Mutex<HashMap<(u32, u32), Dense>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Dense>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dense coefficients of `[n choose k]_x`, by the Pascal recurrence
/// `[n,k] = [n-1,k-1] + x^k [n-1,k]`.
fn gaussian_dense(n: u32, k: u32) -> Dense {
    if k == 0 || k == n {
        return Arc::new(vec![BigInt::from(1)]);
    }
    if let Some(hit) = cache().lock().unwrap().get(&(n, k)) {
        return hit.clone();
    }
    let a = gaussian_dense(n - 1, k - 1);
    let b = if k <= n - 1 { gaussian_dense(n - 1, k) } else { Arc::new(vec![]) };
    let len = (k * (n - k) + 1) as usize;
    let mut out = vec![BigInt::zero(); len];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + k as usize] += c;
    }
    let out = Arc::new(out);
    cache().lock().unwrap().insert((n, k), out.clone());
    out
}

/// Gaussian binomial `[n choose k]` in the variable `q^base_exp`.
///
/// Zero whenever `k < 0` or `k > n` (which covers every negative `n`).
pub fn qbinom(n: i64, k: i64, base_exp: i64) -> QTLaurent {
    assert!(base_exp != 0, "q-binomial base exponent must be nonzero");
    if k < 0 || k > n {
        return QTLaurent::zero();
    }
    let n = u32::try_from(n).expect("q-binomial size out of range");
    let k = k as u32;
    QTLaurent::from_dense_in(&gaussian_dense(n, k), base_exp)
}

/// q-multinomial `(x;x)_{top} / prod_i (x;x)_{gaps_i}` for a chain
/// `top = c_0 >= c_1 >= ... >= c_k`, as the telescoping product
/// `prod_i [c_{i-1} choose c_i]`. The last part `c_k` is included as a gap.
pub fn chain_multinomial(chain: &[i64], base_exp: i64) -> QTLaurent {
    chain
        .windows(2)
        .map(|w| qbinom(w[0], w[1], base_exp))
        .product()
}

pub fn binom2(r: i64) -> i64 {
    r * (r - 1) / 2
}
