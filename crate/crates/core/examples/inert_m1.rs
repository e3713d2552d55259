//! The m = 1 inert order: subspace counts, the double sum, its closed form, and the
//! coefficient-wise limit as n grows.

use std::collections::BTreeMap;

use qzeta::algebra::{Monomial, Var};
use qzeta::verify::{stabilization_check, StabilityMode};
use qzeta::zeta::{closed_form_coh, coh_finitized, inert_m1_count, CountForm, OrderFamily};

fn main() {
    let family = OrderFamily::inert(1);
    for r in 0..=4 {
        let closed = inert_m1_count(2, r, CountForm::Closed);
        let alt = inert_m1_count(2, r, CountForm::Alternating);
        println!("n=2 r={r}: {closed}   (alternating form agrees: {})", closed == alt);
    }

    for n in 0..=3 {
        let z = coh_finitized(family, n).unwrap();
        let closed = closed_form_coh(family, n);
        println!("n={n}: {z}");
        println!("     matches the {:?} closed form: {}", closed.status, z.cross_eq(&closed.value));
    }

    // zeta of R^1 itself: t -> q t
    let z1 = coh_finitized(family, 1).unwrap().substitute(Var::T, Monomial::new(1, 1, 1)).unwrap();
    let s = z1.to_tseries(4).unwrap();
    println!("zeta_R(s) = {}", s.coeffs().iter().enumerate().map(|(j, c)| format!("({c}) t^{j}")).collect::<Vec<_>>().join(" + "));

    let fam: BTreeMap<u32, _> = (0..=6).map(|n| (n, coh_finitized(family, n).unwrap())).collect();
    for p in stabilization_check(&fam, |n| n as usize, StabilityMode::QAdic).unwrap() {
        println!("n={} -> n+1 agree mod q^-{} up to t^{}: {}", p.n, p.n + 1, p.n, p.holds);
    }
}
