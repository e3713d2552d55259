//! Exact arithmetic with bivariate Laurent polynomials and Pochhammer fractions.

use qzeta::algebra::{poch, qbinom, Monomial, PochFactor, QTFraction, QTLaurent, Var, VarConvention};

fn main() {
    let a = QTLaurent::from(Monomial::new(1, 1, 0)) + QTLaurent::from(1);
    let b = QTLaurent::from(Monomial::new(-1, -1, 1)) + QTLaurent::from(1);
    println!("a = {a}");
    println!("b = {b}");
    println!("a * b = {}", &a * &b);
    println!("a(q -> q^-1) = {}", a.invert_q());
    println!("b(t -> q t) = {}", b.subs(Var::T, Monomial::new(1, 1, 1)));

    println!("[4, 2]_q = {}", qbinom(4, 2, 1));
    println!("(t; q)_3 = {}", poch(Monomial::t_pow(1), 1, 3).unwrap());

    // 1 / (1 - t) written two ways
    let geo = QTFraction::new(QTLaurent::one(), vec![PochFactor::new(Monomial::t_pow(1), 1, 1)]);
    let same = QTFraction::new(QTLaurent::one() + QTLaurent::from(Monomial::t_pow(1)), vec![PochFactor::new(Monomial::t_pow(2), 1, 1)]);
    println!("{geo} == {same}: {}", geo.cross_eq(&same));
    let series = geo.to_tseries(5).unwrap();
    println!("expansion to t^5: {:?}", series.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let records = a.to_records(VarConvention::Qinv);
    println!("records of a in q^-1: {}", serde_json::to_string(&records).unwrap());
}
