//! Brute-force submodule enumeration over small finite fields.

use qzeta::algebra::Partition;
use qzeta::oracle::{
    dvr_module, enumerate_submodules, module_cotype, module_type, moebius_oracle, quot_zeta_oracle_inert_m1,
    saturating_subspace_count_oracle, saturation_zeta_oracle, FieldSpec, Guard,
};
use qzeta::zeta::OrderFamily;

fn main() {
    let guard = Guard::from_env();
    let f2 = FieldSpec::prime(2).unwrap();

    let lambda: Partition = "2,1".parse().unwrap();
    let m = dvr_module(&lambda, f2).unwrap();
    let subs = enumerate_submodules(&m, guard).unwrap();
    println!("M{lambda} over F_2 has {} submodules", subs.len());
    for w in &subs {
        println!(
            "  dim {}  type {:<6} cotype {:<6} moebius {}",
            w.dim(),
            module_type(w, &m, "T").unwrap().to_string(),
            module_cotype(w, &m, "T").unwrap().to_string(),
            moebius_oracle(&m, w, guard).unwrap()
        );
    }

    let f4 = FieldSpec::quadratic(2).unwrap();
    for r in 0..=4 {
        println!("saturating F_2-subspaces of F_4^2 of codimension {r}: {}", saturating_subspace_count_oracle(f4, 2, r, guard).unwrap());
    }
    for family in [OrderFamily::ramified(1), OrderFamily::split(1), OrderFamily::inert(1)] {
        println!("{family:?} n=2 saturation counts at q=2: {:?}", saturation_zeta_oracle(family, 2, f2, guard).unwrap());
    }
    println!("index counts of R-submodules of R, q=2, up to t^3: {:?}", quot_zeta_oracle_inert_m1(f2, 1, 3, guard).unwrap());
}
