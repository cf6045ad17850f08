//! The complement map between full-graph edge sets and admissible conflicts.
//!
//! For a fixed causality `D`, `F_D(R) = incomparable(D) \ R` sends every set
//! of undirected edges making a full graph of `D` to an admissible conflict
//! relation for `D`, and back. One family witnesses both sides: containment
//! is shared, and over incomparable pairs "disjoint" and "overlap" are exact
//! complements.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::event_structure::{is_event_structure, EsError, EventStructure};
use crate::full_graph::{is_full_graph, FgRejection, FullGraph};
use crate::oracle::{
    default_label_bound, find_fg_representation_bruteforce, find_representation_bruteforce,
};
use crate::relation::Relation;
use crate::representation::build_representation;

/// `(field(D)² \ (D ∪ D⁻¹)) \ R`.
pub fn f_complement(causality: &Relation, r: &Relation) -> Relation {
    causality.sym_complement().difference(r)
}

/// Maps an event structure to the full graph on the same order. The
/// certificate is the event structure's own representation.
pub fn es_to_fg(es: &EventStructure) -> FullGraph {
    let undirected = f_complement(es.causality(), es.conflict());
    let certificate = build_representation(es.causality(), es.conflict())
        .expect("validated event structure")
        .family;
    FullGraph::with_certificate(es.causality().clone(), undirected, certificate)
        .expect("a representation of (D, U) is an fg-representation of (D, F_D(U))")
}

/// Validating variant of [`es_to_fg`] for raw relations.
pub fn es_to_fg_parts(causality: &Relation, conflict: &Relation) -> Result<FullGraph, EsError> {
    let es = EventStructure::new(causality.clone(), conflict.clone())?;
    Ok(es_to_fg(&es))
}

/// Maps a full graph `(D, T)` to the event structure `(D, F_D(T))`.
pub fn fg_to_es(directed: &Relation, undirected: &Relation) -> Result<EventStructure, FgRejection> {
    let recognition = is_full_graph(directed, undirected, false);
    if let Some(r) = recognition.rejection {
        return Err(r);
    }
    let conflict = f_complement(directed, undirected);
    Ok(EventStructure::new(directed.clone(), conflict).expect("recognition checked admissibility"))
}

/// How membership in X and Y is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Evidence {
    /// Event-structure predicate and full-graph recognition, over subsets of
    /// the incomparability square.
    #[default]
    Recognition,
    /// Exhaustive witness search over every symmetric relation on the field,
    /// assuming neither theorem. Practical up to three vertices.
    BruteForce,
}

/// Every symmetric sub-relation of `base`, ordered by unordered-pair mask.
///
/// `base` must itself be symmetric; pairs are picked as mirror twins.
pub fn symmetric_subsets(base: &Relation) -> impl Iterator<Item = Relation> + '_ {
    let twins: Vec<(usize, usize)> = base.pairs().filter(|&(x, y)| x <= y).collect();
    assert!(twins.len() < 64, "too many unordered pairs to enumerate");
    (0u64..1u64 << twins.len()).map(move |mask| {
        let mut r = Relation::empty(base.universe());
        for (i, &(x, y)) in twins.iter().enumerate() {
            if mask & (1u64 << i) != 0 {
                r.insert(x, y);
                r.insert(y, x);
            }
        }
        r
    })
}

fn is_order(causality: &Relation) -> bool {
    causality.properties().is_partial_order()
}

/// Y: conflicts `U` for which `(D, U)` has an injective, empty-free
/// representation.
pub fn enumerate_admissible_conflicts(causality: &Relation) -> Vec<Relation> {
    enumerate_admissible_conflicts_with(causality, Evidence::Recognition)
}

pub fn enumerate_admissible_conflicts_with(
    causality: &Relation,
    evidence: Evidence,
) -> Vec<Relation> {
    match evidence {
        Evidence::Recognition => {
            if !is_order(causality) {
                return Vec::new();
            }
            symmetric_subsets(&causality.sym_complement())
                .filter(|u| is_event_structure(causality, u).is_valid())
                .collect()
        }
        Evidence::BruteForce => {
            let bound = default_label_bound(causality);
            let square = Relation::square(causality.universe(), causality.field());
            symmetric_subsets(&square)
                .filter(|u| find_representation_bruteforce(causality, u, bound).is_some())
                .collect()
        }
    }
}

/// X: edge sets `T` that make a full graph of `D`.
pub fn enumerate_fullgraph_edge_sets(causality: &Relation) -> Vec<Relation> {
    enumerate_fullgraph_edge_sets_with(causality, Evidence::Recognition)
}

pub fn enumerate_fullgraph_edge_sets_with(
    causality: &Relation,
    evidence: Evidence,
) -> Vec<Relation> {
    match evidence {
        Evidence::Recognition => {
            if !is_order(causality) {
                return Vec::new();
            }
            symmetric_subsets(&causality.sym_complement())
                .filter(|t| is_full_graph(causality, t, false).is_full_graph())
                .collect()
        }
        Evidence::BruteForce => {
            let bound = default_label_bound(causality);
            let square = Relation::square(causality.universe(), causality.field());
            symmetric_subsets(&square)
                .filter(|t| find_fg_representation_bruteforce(causality, t, bound).is_some())
                .collect()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BijectionConfig {
    /// Largest `|field(D)|` accepted.
    pub max_vertices: usize,
    pub evidence: Evidence,
}

impl Default for BijectionConfig {
    fn default() -> Self {
        BijectionConfig {
            max_vertices: 6,
            evidence: Evidence::Recognition,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("field of D has {found} vertices, above the limit of {limit}")]
    SizeLimit { found: usize, limit: usize },
}

/// What [`verify_bijection`] found for one causality relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionReport {
    pub base_relation: Relation,
    pub x_size: usize,
    pub y_size: usize,
    pub forward_onto: bool,
    pub backward_onto: bool,
    pub injective_on_x: bool,
    pub injective_on_y: bool,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.forward_onto
            && self.backward_onto
            && self.injective_on_x
            && self.injective_on_y
            && self.x_size == self.y_size
    }
}

/// Materialises X and Y for `D` and checks that the complement map is a
/// bijection between them.
pub fn verify_bijection(
    causality: &Relation,
    config: &BijectionConfig,
) -> Result<BijectionReport, BijectionError> {
    let found = causality.field().len();
    if found > config.max_vertices {
        return Err(BijectionError::SizeLimit {
            found,
            limit: config.max_vertices,
        });
    }
    let x: BTreeSet<Relation> = enumerate_fullgraph_edge_sets_with(causality, config.evidence)
        .into_iter()
        .collect();
    let y: BTreeSet<Relation> = enumerate_admissible_conflicts_with(causality, config.evidence)
        .into_iter()
        .collect();
    let image = |set: &BTreeSet<Relation>| -> BTreeSet<Relation> {
        set.iter().map(|r| f_complement(causality, r)).collect()
    };
    let fx = image(&x);
    let fy = image(&y);
    Ok(BijectionReport {
        base_relation: causality.clone(),
        x_size: x.len(),
        y_size: y.len(),
        forward_onto: fx == y,
        backward_onto: fy == x,
        injective_on_x: fx.len() == x.len(),
        injective_on_y: fy.len() == y.len(),
    })
}
