//! Runs a few verification suites and prints their reports.

use qzeta::verify::{run_suite, suite, suite_names};

fn main() {
    println!("available suites: {}", suite_names().join(", "));
    for name in ["split-s0", "conj-m1", "hall"] {
        let s = suite(name).unwrap();
        let report = run_suite(s, &s.defaults(), true);
        println!("\n== {name}: {}", s.description);
        print!("{}", report.to_text());
        println!("exit code would be {}", report.exit_code());
    }
}
