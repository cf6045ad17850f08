//! Runs every executable check up to a size (default 3).

use esfg::suite::run_theorem_suite;

fn main() {
    let n = std::env::args()
        .nth(1)
        .map_or(3, |a| a.parse().expect("a size"));
    let report = run_theorem_suite(n).unwrap();
    for check in &report.checks {
        println!("{check}");
    }
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
