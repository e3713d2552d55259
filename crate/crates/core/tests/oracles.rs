use qzeta::algebra::{qbinom, Partition, QTLaurent};
use qzeta::oracle::{
    dvr_module, enumerate_submodules, hall_count_oracle, module_type, moebius_oracle,
    quot_zeta_oracle_inert_m1, saturating_subspace_count_oracle, saturation_zeta_oracle, FieldSpec, Guard,
    Matrix, ModuleSpec, OracleError, Subspace,
};
use qzeta::qseries::hall_g;
use qzeta::verify::counts_at;
use qzeta::zeta::{inert_m1_count, saturation_zeta, CountForm, OrderFamily};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn f(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn at(p: &QTLaurent, q: i64) -> Vec<u64> {
    counts_at(p, q).unwrap().iter().map(|c| u64::try_from(c).unwrap()).collect()
}

#[test]
fn plane_with_zero_operator_has_five_subspaces() {
    let m = ModuleSpec::new(f(2), 2, vec![("T".into(), Matrix::zero(2, 2))], None).unwrap();
    let subs = enumerate_submodules(&m, Guard::DEFAULT).unwrap();
    assert_eq!(subs.len(), 5);
    assert_eq!(subs.iter().map(|w| w.dim()).collect::<Vec<_>>(), [0, 1, 1, 1, 2]);
}

#[test]
fn zero_dimensional_module_has_only_zero() {
    let m = ModuleSpec::new(f(3), 0, vec![], None).unwrap();
    let subs = enumerate_submodules(&m, Guard::DEFAULT).unwrap();
    assert_eq!(subs.len(), 1);
    assert_eq!(subs[0].dim(), 0);
}

#[test]
fn jordan_block_has_a_chain_of_submodules() {
    let m = dvr_module(&part("2"), f(2)).unwrap();
    let subs = enumerate_submodules(&m, Guard::DEFAULT).unwrap();
    assert_eq!(subs.len(), 3);
    let um = m.whole().image(m.op("T").unwrap());
    assert_eq!(subs[1], um);
    assert_eq!(module_type(&m.whole(), &m, "T").unwrap(), part("2"));
    assert_eq!(module_type(&um, &m, "T").unwrap(), part("1"));
    let m21 = dvr_module(&part("2,1"), f(3)).unwrap();
    assert_eq!(module_type(&m21.whole(), &m21, "T").unwrap(), part("2,1"));
}

#[test]
fn module_type_rejects_non_invariant_subspaces() {
    let m = dvr_module(&part("2"), f(2)).unwrap();
    let line = Subspace::span(2, 2, [vec![1, 0]]);
    let other = Subspace::span(2, 2, [vec![0, 1]]);
    // exactly one of the two coordinate lines is u-invariant
    let results = [module_type(&line, &m, "T"), module_type(&other, &m, "T")];
    assert_eq!(results.iter().filter(|r| matches!(r, Err(OracleError::NotInvariant))).count(), 1);
}

#[test]
fn hall_counts() {
    assert_eq!(hall_count_oracle(&part("1,1"), &part("1"), f(2), Guard::DEFAULT).unwrap(), 3);
    for l in ["2,1", "3,1,1", "2,2"] {
        assert_eq!(hall_count_oracle(&part(l), &part(l), f(3), Guard::DEFAULT).unwrap(), 1);
    }
    // rectangular λ against a column μ = (1^r) gives a Gaussian binomial in the number of rows
    let lam = part("2,2");
    for r in 0..=2 {
        let mu = Partition::from_unsorted(vec![1; r]);
        let expect = at(&qbinom(2, r as i64, 1), 3)[0];
        assert_eq!(hall_count_oracle(&lam, &mu, f(3), Guard::DEFAULT).unwrap(), expect);
        assert_eq!(at(&hall_g(&lam, &mu), 3)[0], expect);
    }
}

#[test]
fn moebius_values() {
    let g = Guard::DEFAULT;
    let m = dvr_module(&part("1,1"), f(2)).unwrap();
    assert_eq!(moebius_oracle(&m, &m.whole(), g).unwrap(), 1);
    // quotient of type (1^2): (-1)^2 q^1
    assert_eq!(moebius_oracle(&m, &m.zero_subspace(), g).unwrap(), 2);
    let m2 = dvr_module(&part("2"), f(2)).unwrap();
    assert_eq!(moebius_oracle(&m2, &m2.zero_subspace(), g).unwrap(), 0);
    let m3 = dvr_module(&part("1,1,1"), f(2)).unwrap();
    assert_eq!(moebius_oracle(&m3, &m3.zero_subspace(), g).unwrap(), -8);
}

#[test]
fn saturating_subspaces() {
    let q2 = FieldSpec::quadratic(2).unwrap();
    let g = Guard::DEFAULT;
    assert_eq!(saturating_subspace_count_oracle(q2, 1, 1, g).unwrap(), 3);
    assert_eq!(saturating_subspace_count_oracle(q2, 2, 1, g).unwrap(), 15);
    assert_eq!(at(&inert_m1_count(2, 1, CountForm::Closed), 2)[0], 15);
    for n in 0..=2 {
        assert_eq!(saturating_subspace_count_oracle(q2, n, 0, g).unwrap(), 1);
    }
    assert!(matches!(
        saturating_subspace_count_oracle(f(2), 1, 1, g),
        Err(OracleError::RequiresQuadraticField(2))
    ));
}

#[test]
fn saturation_zeta_by_enumeration() {
    let g = Guard::DEFAULT;
    assert_eq!(saturation_zeta_oracle(OrderFamily::inert(1), 1, f(2), g).unwrap(), [1, 3]);
    assert_eq!(saturation_zeta_oracle(OrderFamily::split(1), 0, f(2), g).unwrap(), [1]);
    for q in [2, 3] {
        let fam = OrderFamily::ramified(1);
        let oracle = saturation_zeta_oracle(fam, 1, f(q), g).unwrap();
        assert_eq!(oracle, at(&saturation_zeta(fam, 1), q as i64));
    }
}

#[test]
fn quot_zeta_prefixes() {
    let g = Guard::DEFAULT;
    assert_eq!(quot_zeta_oracle_inert_m1(f(2), 1, 2, g).unwrap(), [1, 1, 3]);
    assert_eq!(quot_zeta_oracle_inert_m1(f(3), 1, 2, g).unwrap(), [1, 1, 4]);
    assert_eq!(quot_zeta_oracle_inert_m1(f(2), 0, 2, g).unwrap()[0], 1);
}

#[test]
fn guard_is_enforced() {
    let m = dvr_module(&part("3,3,3"), f(3)).unwrap();
    match enumerate_submodules(&m, Guard(10)) {
        Err(OracleError::GuardExceeded { guard, estimate }) => {
            assert_eq!(guard, 10);
            assert!(estimate > 10);
        }
        other => panic!("expected a guard error, got {other:?}"),
    }
}

#[test]
fn enumeration_is_repeatable() {
    let m = dvr_module(&part("2,2,1"), f(2)).unwrap();
    let a = enumerate_submodules(&m, Guard::DEFAULT).unwrap();
    let b = rayon::ThreadPoolBuilder::new()
        .num_threads(3)
        .build()
        .unwrap()
        .install(|| enumerate_submodules(&m, Guard::DEFAULT).unwrap());
    assert_eq!(a, b);
}
