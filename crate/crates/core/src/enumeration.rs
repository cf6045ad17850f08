//! Labeled enumeration of event structures and full graphs on `{0..n-1}`.
//!
//! Both counts start from the same list of partial orders; per order, the
//! event-structure side counts admissible conflicts and the full-graph side
//! counts recognised undirected edge sets.

use std::collections::BTreeSet;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::bijection::{
    enumerate_admissible_conflicts, enumerate_fullgraph_edge_sets,
    enumerate_fullgraph_edge_sets_with, Evidence,
};
use crate::document::StructureDocument;
use crate::event_structure::EventStructure;
use crate::full_graph::FullGraph;
use crate::relation::{Relation, VertexSet};

/// Largest `n` the enumerators accept.
pub const DEFAULT_LIMIT: usize = 5;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the enumeration limit of {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("write failed: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    EventStructure,
    FullGraph,
}

fn check_limit(n: usize, limit: usize) -> Result<(), EnumerationError> {
    if n > limit {
        Err(EnumerationError::LimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// Every partial order on exactly `{0..n-1}` (reflexive encoding), each
/// once, in ascending [`Relation`] order.
pub fn enumerate_partial_orders(n: usize) -> Result<Vec<Relation>, EnumerationError> {
    check_limit(n, DEFAULT_LIMIT)?;
    Ok(partial_orders(n))
}

/// Grows orders one maximal element at a time: the new element takes any
/// position in the labelling and sits above any down-set of the smaller
/// order. Every order arises (remove a maximal element), possibly more than
/// once, so results are deduplicated.
fn partial_orders(n: usize) -> Vec<Relation> {
    let mut current: BTreeSet<Relation> = BTreeSet::from([Relation::empty(0)]);
    for k in 1..=n {
        let mut next = BTreeSet::new();
        for smaller in &current {
            let down_sets = down_sets(smaller, k - 1);
            for position in 0..k {
                let shift = |x: usize| if x >= position { x + 1 } else { x };
                let mut base = Relation::empty(k);
                for (x, y) in smaller.pairs() {
                    base.insert(shift(x), shift(y));
                }
                base.insert(position, position);
                for down in &down_sets {
                    let mut order = base.clone();
                    for x in down.iter() {
                        order.insert(shift(x), position);
                    }
                    next.insert(order);
                }
            }
        }
        current = next;
    }
    current.into_iter().collect()
}

fn down_sets(order: &Relation, size: usize) -> Vec<VertexSet> {
    (0u64..1u64 << size)
        .map(VertexSet::from_bits)
        .filter(|set| set.iter().all(|y| order.predecessors(y).is_subset(*set)))
        .collect()
}

/// Number of event structures whose event set is exactly `{0..n-1}`.
pub fn count_es(n: usize) -> Result<u64, EnumerationError> {
    let orders = enumerate_partial_orders(n)?;
    Ok(orders
        .par_iter()
        .map(|d| enumerate_admissible_conflicts(d).len() as u64)
        .sum())
}

/// Number of full graphs on exactly `{0..n-1}`, through recognition.
pub fn count_fg(n: usize) -> Result<u64, EnumerationError> {
    count_fg_with(n, Evidence::Recognition)
}

/// [`count_fg`] with a choice of evidence. Brute force is meant for `n <= 3`.
pub fn count_fg_with(n: usize, evidence: Evidence) -> Result<u64, EnumerationError> {
    let orders = enumerate_partial_orders(n)?;
    Ok(orders
        .par_iter()
        .map(|d| enumerate_fullgraph_edge_sets_with(d, evidence).len() as u64)
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: usize,
    pub es_count: u64,
    pub fg_count: u64,
    /// Admissible conflicts per order.
    pub per_order_breakdown: Vec<(Relation, u64)>,
    pub elapsed: Duration,
}

impl CountReport {
    pub fn counts_agree(&self) -> bool {
        self.es_count == self.fg_count
            && self.es_count == self.per_order_breakdown.iter().map(|(_, c)| c).sum::<u64>()
    }
}

/// Both counts for `n`, the full-graph side computed with `fg_evidence`.
pub fn count_report(n: usize, fg_evidence: Evidence) -> Result<CountReport, EnumerationError> {
    let start = Instant::now();
    let orders = enumerate_partial_orders(n)?;
    let per_order_breakdown: Vec<(Relation, u64)> = orders
        .par_iter()
        .map(|d| (d.clone(), enumerate_admissible_conflicts(d).len() as u64))
        .collect();
    let es_count = per_order_breakdown.iter().map(|(_, c)| c).sum();
    let fg_count = orders
        .par_iter()
        .map(|d| enumerate_fullgraph_edge_sets_with(d, fg_evidence).len() as u64)
        .sum();
    Ok(CountReport {
        n,
        es_count,
        fg_count,
        per_order_breakdown,
        elapsed: start.elapsed(),
    })
}

/// Every event structure on exactly `{0..n-1}`, in emission order.
pub fn event_structures(n: usize) -> Result<Vec<EventStructure>, EnumerationError> {
    let orders = enumerate_partial_orders(n)?;
    Ok(orders
        .iter()
        .flat_map(|d| {
            enumerate_admissible_conflicts(d)
                .into_iter()
                .map(move |u| EventStructure::new(d.clone(), u).expect("admissible"))
        })
        .collect())
}

/// Every full graph on exactly `{0..n-1}`, in emission order, without
/// certificates.
pub fn full_graphs(n: usize) -> Result<Vec<(Relation, Relation)>, EnumerationError> {
    let orders = enumerate_partial_orders(n)?;
    Ok(orders
        .iter()
        .flat_map(|d| {
            enumerate_fullgraph_edge_sets(d)
                .into_iter()
                .map(move |t| (d.clone(), t))
        })
        .collect())
}

/// Writes one canonical JSON document per line; returns the record count.
pub fn emit_structures(
    n: usize,
    kind: StructureKind,
    sink: &mut dyn Write,
) -> Result<u64, EnumerationError> {
    let mut count = 0u64;
    match kind {
        StructureKind::EventStructure => {
            for es in event_structures(n)? {
                writeln!(
                    sink,
                    "{}",
                    StructureDocument::event_structure(n, &es).to_canonical()
                )?;
                count += 1;
            }
        }
        StructureKind::FullGraph => {
            for (d, t) in full_graphs(n)? {
                let g = FullGraph::new(d, t).expect("recognised full graph");
                writeln!(
                    sink,
                    "{}",
                    StructureDocument::full_graph(n, &g, false).to_canonical()
                )?;
                count += 1;
            }
        }
    }
    sink.flush()?;
    Ok(count)
}
