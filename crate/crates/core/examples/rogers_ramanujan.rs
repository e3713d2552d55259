//! Finitized Andrews-Gordon and Bressoud sums, and the sum side against the product side.

use qzeta::qseries::{ag_multisum, br_multisum, infinite_sum, product_side, singlesum, SumFamily, TSign};

fn main() {
    let order = 30;
    for family in [SumFamily::ag(1), SumFamily::ag(2), SumFamily::br(1)] {
        let sum = infinite_sum(family, order);
        let product = product_side(family, order);
        println!("{family:?}: sum = product to q^{order}: {}", sum == product);
        println!("  first coefficients {:?}", &sum.coeffs()[..12]);
    }

    println!("AG multisum, m = 1, n = 3: {}", ag_multisum(1, 3));
    println!("Br multisum, m = 1, n = 2: {}", br_multisum(1, 2, TSign::Plus));
    let multi = br_multisum(2, 3, TSign::Plus).at_t_one().unwrap();
    let single = singlesum(SumFamily::br(2), 3);
    println!("Br m = 2, n = 3: multisum at t = 1 equals the single sum: {}", multi.cross_eq(&single));
}
