//! Counting labeled event structures and full graphs.

use esfg::bijection::Evidence;
use esfg::enumeration::{count_report, enumerate_partial_orders};

fn main() {
    for n in 0..=5 {
        let evidence = if n <= 3 {
            Evidence::BruteForce
        } else {
            Evidence::Recognition
        };
        let report = count_report(n, evidence).unwrap();
        println!(
            "n={n}: {:>5} orders, {:>6} event structures, {:>6} full graphs ({evidence:?}), {:.2?}",
            enumerate_partial_orders(n).unwrap().len(),
            report.es_count,
            report.fg_count,
            report.elapsed
        );
        assert!(report.counts_agree());
    }
}
