//! Seeded invariant suites, the same ones behind the command line `selftest`.

use hyperalg::selftest;

fn main() {
    for r in selftest::run(1, 1, &[]) {
        match &r.failure {
            None => println!("{:<14} ok   {:>5} cases {:>6} ms", r.name, r.cases, r.millis),
            Some(f) => println!("{:<14} FAIL {f}", r.name),
        }
    }
}
