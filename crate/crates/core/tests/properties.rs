use num_bigint::BigInt;
use proptest::prelude::*;

use qzeta::algebra::{
    poch, qbinom, Monomial, Partition, PochFactor, QTFraction, QTLaurent, Var, VarConvention,
};
use qzeta::oracle::{dvr_module, enumerate_with, module_type, EnumOptions, FieldSpec, Guard, Strategy as EnumStrategy};
use qzeta::qseries::hall_g;
use qzeta::verify::{check_identity, counts_at};

fn laurent() -> impl Strategy<Value = QTLaurent> {
    prop::collection::vec((-3i64..=3, 0i64..=3, -5i64..=5), 0..6)
        .prop_map(|terms| QTLaurent::from_terms(terms.into_iter().map(|(q, t, c)| (q, t, BigInt::from(c)))))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (prop_oneof![Just(1i64), Just(-1)], -2i64..=2, -2i64..=2).prop_map(|(c, q, t)| Monomial::new(c, q, t))
}

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_map(a in laurent(), b in laurent(), img in monomial(), var in prop_oneof![Just(Var::Q), Just(Var::T)]) {
        // a q-image must be a nonzero power of q alone
        prop_assume!(var == Var::T || (img.t == 0 && img.q != 0));
        let lhs = (&a * &b).subs(var, img);
        let rhs = &a.subs(var, img) * &b.subs(var, img);
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!((&a + &b).subs(var, img), &a.subs(var, img) + &b.subs(var, img));
    }

    #[test]
    fn invert_q_is_an_involution(a in laurent()) {
        prop_assert_eq!(a.invert_q().invert_q(), a.clone());
        prop_assert_eq!(a.invert_q(), a.subs(Var::Q, Monomial::q_pow(-1)));
    }

    #[test]
    fn records_round_trip(a in laurent(), qinv in any::<bool>()) {
        let var = if qinv { VarConvention::Qinv } else { VarConvention::Q };
        prop_assert_eq!(QTLaurent::from_records(&a.to_records(var), var).unwrap(), a);
    }

    #[test]
    fn gaussian_binomials(n in 0i64..=8, k in 0i64..=8, base in prop_oneof![Just(1i64), Just(-1), Just(2)]) {
        prop_assert_eq!(qbinom(n, k, base), qbinom(n, n - k, base));
        if n >= 1 && k >= 1 {
            // [n,k] = [n-1,k-1] + x^k [n-1,k] with x = q^base
            let pascal = &qbinom(n - 1, k - 1, base) + &qbinom(n - 1, k, base).mul_monomial(Monomial::q_pow(base * k));
            prop_assert_eq!(qbinom(n, k, base), pascal);
        }
        if (0..=n).contains(&k) {
            let at_one: Vec<BigInt> = counts_at(&qbinom(n, k, base), 1).unwrap();
            let binom = (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1));
            prop_assert_eq!(at_one, vec![binom]);
        }
    }

    #[test]
    fn fraction_expansion_inverts_denominator(num in laurent(), len in 0u32..=3, step in 1i64..=2) {
        let num = num.mul_monomial(Monomial::q_pow(0));
        let den = PochFactor::new(Monomial::new(1, 1, 1), step, len);
        let f = QTFraction::new(num.clone(), vec![den.clone()]);
        let order = 4;
        let series = f.to_tseries(order).unwrap();
        let expanded = den.expand();
        let back: QTLaurent = (0..=order)
            .map(|j| series.coeff(j).mul_monomial(Monomial::t_pow(j as i64)))
            .sum::<QTLaurent>();
        let prod = &back * &expanded;
        for j in 0..=order as i64 {
            prop_assert_eq!(prod.t_coeff(j), num.t_coeff(j));
        }
    }

    #[test]
    fn identity_checker_sees_representation_changes(num in laurent(), extra in 1u32..=3) {
        let a = QTFraction::new(num.clone(), vec![]);
        let factor = PochFactor::new(Monomial::new(1, 1, 1), 1, extra);
        let b = QTFraction::new(&num * &factor.expand(), vec![factor]);
        prop_assert!(check_identity(&a, &b).holds);
        let bumped = QTFraction::new(&num + &QTLaurent::monomial(1.into(), 7, 5), vec![]);
        let id = check_identity(&a, &bumped);
        prop_assert!(!id.holds);
        let w = id.witness.unwrap();
        prop_assert_eq!((w.e_q, w.e_t), (7, 5));
    }

    #[test]
    fn pochhammer_splits(n1 in 0i64..=4, n2 in 0i64..=4, base in monomial(), step in prop_oneof![Just(1i64), Just(-1), Just(2)]) {
        let whole = poch(base, step, n1 + n2).unwrap();
        let shifted = Monomial::new(base.coeff, base.q + step * n1, base.t);
        let parts = &poch(base, step, n1).unwrap() * &poch(shifted, step, n2).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn partition_operations(l in partition(4, 4)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
        prop_assert_eq!(l.half_split().size(), l.size());
        prop_assert_eq!(l.duplicate().size(), 2 * l.size());
        let c = l.complement(4, 4).unwrap();
        prop_assert_eq!(c.complement(4, 4).unwrap(), l.clone());
        prop_assert_eq!(c.size() + l.size(), 16);
        for mu in l.sub_partitions() {
            prop_assert!(l.contains(&mu));
        }
    }

    #[test]
    fn hall_polynomial_edges(l in partition(3, 3), mu in partition(3, 3)) {
        prop_assert!(hall_g(&l, &l).is_one());
        prop_assert!(hall_g(&l, &Partition::empty()).is_one());
        if !l.contains(&mu) {
            prop_assert!(hall_g(&l, &mu).is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn enumeration_strategies_agree(l in partition(3, 2), p in prop_oneof![Just(2u32), Just(3)]) {
        let m = dvr_module(&l, FieldSpec::prime(p).unwrap()).unwrap();
        let layered = enumerate_with(&m, EnumOptions::new(Guard::DEFAULT)).unwrap();
        let echelon = enumerate_with(&m, EnumOptions::new(Guard::DEFAULT).strategy(EnumStrategy::Echelon)).unwrap();
        prop_assert_eq!(&layered, &echelon);
        // total count is the sum of Hall polynomials over all types
        let total: BigInt = l
            .sub_partitions()
            .iter()
            .map(|mu| counts_at(&hall_g(&l, mu), p as i64).unwrap()[0].clone())
            .sum();
        prop_assert_eq!(BigInt::from(layered.len()), total);
        prop_assert_eq!(module_type(&m.whole(), &m, "T").unwrap(), l);
    }
}
