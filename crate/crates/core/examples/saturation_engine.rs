//! Saturation zeta functions of the three quadratic order families and the resulting
//! finitized zeta functions.

use qzeta::zeta::{rtilde_zeta, saturation_zeta, OrderFamily};

fn main() {
    for family in [OrderFamily::ramified(1), OrderFamily::split(1), OrderFamily::inert(1), OrderFamily::inert(2)] {
        for n in 0..=2 {
            println!("{family:?} n={n}");
            println!("  saturation zeta: {}", saturation_zeta(family, n));
            println!("  finitized zeta:  {}", rtilde_zeta(family, n));
        }
    }
}
