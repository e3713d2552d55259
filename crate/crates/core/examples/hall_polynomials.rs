//! Hall polynomials from the skew hypergeometric formula, checked against submodule counts.

use qzeta::algebra::Partition;
use qzeta::oracle::{hall_table, FieldSpec, Guard};
use qzeta::qseries::{g_skew, hall_g};
use qzeta::verify::counts_at;

fn main() {
    println!("g_skew((2), (1)) = {}", g_skew(&[2], &[1]).unwrap());

    let lambda: Partition = "2,2,1".parse().unwrap();
    let field = FieldSpec::prime(2).unwrap();
    let table = hall_table(&lambda, field, Guard::DEFAULT).unwrap();
    println!("submodules of M{lambda} over F_2 by type:");
    for mu in lambda.sub_partitions() {
        let g = hall_g(&lambda, &mu);
        let formula = &counts_at(&g, 2).unwrap()[0];
        let counted: u64 = table.iter().filter(|((ty, _), _)| *ty == mu).map(|(_, c)| c).sum();
        println!("  {:<9} g = {g:<40} at q=2: {formula:>3}  enumerated: {counted:>3}", mu.to_string(), g = g.to_string());
    }
}
