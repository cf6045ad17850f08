//! Executable checks of the representation and bijection theorems over
//! every labeled structure up to a size.

use std::fmt;

use crate::bijection::{
    es_to_fg, f_complement, fg_to_es, symmetric_subsets, verify_bijection, BijectionConfig,
    Evidence,
};
use crate::enumeration::{
    count_es, count_fg, count_fg_with, enumerate_partial_orders, event_structures, EnumerationError,
};
use crate::event_structure::is_event_structure;
use crate::full_graph::is_fg_representation;
use crate::oracle::{default_label_bound, find_representation_bruteforce};
use crate::relation::Relation;
use crate::representation::{build_representation, is_representation};

/// Above this size the exhaustive witness search is skipped.
pub const ORACLE_MAX_N: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn record(&mut self, name: String, failures: usize, total: usize) {
        self.checks.push(CheckResult {
            name,
            passed: failures == 0,
            detail: format!("{failures} failures out of {total}"),
        });
    }
}

/// Runs every check for `n = 0..=max_n`.
pub fn run_theorem_suite(max_n: usize) -> Result<SuiteReport, EnumerationError> {
    let mut report = SuiteReport::default();
    for n in 0..=max_n {
        let structures = event_structures(n)?;

        let failures = structures
            .iter()
            .filter(
                |es| match build_representation(es.causality(), es.conflict()) {
                    Ok(cert) => !cert.verify() || cert.fresh_label_bound as usize > n * n + 1,
                    Err(_) => true,
                },
            )
            .count();
        report.record(
            format!("n={n} representation built for every event structure"),
            failures,
            structures.len(),
        );

        let failures = structures
            .iter()
            .filter(|es| {
                let g = es_to_fg(es);
                let f = g.certificate().expect("es_to_fg attaches a certificate");
                let t = f_complement(es.causality(), es.conflict());
                !(is_representation(f, es.causality(), es.conflict())
                    && is_fg_representation(f, es.causality(), &t))
            })
            .count();
        report.record(
            format!("n={n} one family certifies both sides"),
            failures,
            structures.len(),
        );

        let failures = structures
            .iter()
            .filter(|es| {
                let g = es_to_fg(es);
                match fg_to_es(g.directed(), g.undirected()) {
                    Ok(back) => back != **es,
                    Err(_) => true,
                }
            })
            .count();
        report.record(
            format!("n={n} event structure -> full graph -> event structure"),
            failures,
            structures.len(),
        );

        let orders = enumerate_partial_orders(n)?;
        let config = BijectionConfig::default();
        let failures = orders
            .iter()
            .filter(|d| {
                !verify_bijection(d, &config)
                    .map(|r| r.holds())
                    .unwrap_or(false)
            })
            .count();
        report.record(
            format!("n={n} complement map is a bijection"),
            failures,
            orders.len(),
        );

        let es_count = count_es(n)?;
        let fg_count = count_fg(n)?;
        report.checks.push(CheckResult {
            name: format!("n={n} event structure and full graph counts coincide"),
            passed: es_count == fg_count,
            detail: format!("{es_count} event structures, {fg_count} full graphs"),
        });

        if n <= ORACLE_MAX_N {
            let brute = count_fg_with(n, Evidence::BruteForce)?;
            report.checks.push(CheckResult {
                name: format!("n={n} full graph count by witness search"),
                passed: brute == es_count,
                detail: format!("{brute} found by search, {es_count} event structures"),
            });

            let mut total = 0;
            let mut failures = 0;
            for d in &orders {
                let square = Relation::square(d.universe(), d.field());
                for u in symmetric_subsets(&square) {
                    total += 1;
                    let found =
                        find_representation_bruteforce(d, &u, default_label_bound(d)).is_some();
                    if found != is_event_structure(d, &u).is_valid() {
                        failures += 1;
                    }
                }
            }
            report.record(
                format!("n={n} witness search agrees with the event structure axioms"),
                failures,
                total,
            );
        }
    }
    Ok(report)
}
