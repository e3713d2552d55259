//! Normalized zeta functions at s = 0, in the theorem form and the alternative form.

use qzeta::zeta::{nuhat_zero, NuhatForm, OrderFamily};

fn main() {
    for family in [OrderFamily::split(2), OrderFamily::ramified(2), OrderFamily::inert(2)] {
        for n in 1..=3 {
            let thm = nuhat_zero(family, n, NuhatForm::Theorem);
            let alt = nuhat_zero(family, n, NuhatForm::Alternative);
            println!("{family:?} n={n}: {thm}   (forms agree: {})", thm == alt);
        }
    }
}
