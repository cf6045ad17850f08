//! Set-family representations of event structures.
//!
//! A family `f` represents `(D, U)` when, over its keys, `(x, y) ∈ D` exactly
//! when `f(x) ⊇ f(y)` and `(x, y) ∈ U` exactly when `f(x) ∩ f(y) = ∅`. A pair
//! `(D, U)` is an event structure iff it has an injective representation with
//! nonempty finite sets keyed by the events. [`build_representation`]
//! constructs one by peeling off terminal events and adding them back one at
//! a time with [`extend_with_terminal`].

use thiserror::Error;

use crate::event_structure::{is_event_structure, terminal_events, EsDiagnostic};
use crate::family::{Label, LabelSet, SetFamily};
use crate::relation::{Relation, VertexId, VertexSet};

/// Containment and disjointness biconditionals over `keys(f)²`.
pub fn is_representation(f: &SetFamily, causality: &Relation, conflict: &Relation) -> bool {
    f.iter().all(|(x, fx)| {
        f.iter().all(|(y, fy)| {
            causality.contains(x, y) == fx.is_superset(fy)
                && conflict.contains(x, y) == fx.is_disjoint(fy)
        })
    })
}

/// A representation together with the structure it certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationCertificate {
    pub family: SetFamily,
    pub for_causality: Relation,
    pub for_conflict: Relation,
    /// Every label in the family is below this bound.
    pub fresh_label_bound: Label,
}

impl RepresentationCertificate {
    /// Re-checks every certificate invariant from scratch.
    pub fn verify(&self) -> bool {
        is_representation(&self.family, &self.for_causality, &self.for_conflict)
            && self.family.key_set() == self.for_causality.field()
            && self.family.is_injective()
            && !self.family.has_empty_set()
            && self
                .family
                .union_of_range()
                .max_label()
                .is_none_or(|m| m < self.fresh_label_bound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("event {0} is not terminal in the causality relation")]
    NotTerminal(VertexId),
    #[error("event {0} is already a key of the family")]
    StaleKey(VertexId),
    #[error("event {0} is in conflict with itself")]
    ConflictSelfLoop(VertexId),
    #[error("the family maps vertex {0} to the empty set")]
    EmptySet(VertexId),
    #[error("family keys {found:?} differ from the remaining events {expected:?}")]
    KeyMismatch {
        expected: VertexSet,
        found: VertexSet,
    },
    #[error("the family does not represent the structure without event {0}")]
    NotARepresentation(VertexId),
}

/// Adds terminal event `s` to a representation of `(D, U)` with `s` removed.
///
/// Every event concurrent with `s` (neither a cause of `s` nor in conflict
/// with it) receives a fresh bridge label, shared with its own causes and with
/// the causes of `s`. One more fresh label marks the causes of `s`. The new
/// event's set is the union of those fresh labels, so it sits below its
/// causes, overlaps concurrent events and misses conflicting ones. Old sets
/// only ever grow.
pub fn extend_with_terminal(
    f: &SetFamily,
    causality: &Relation,
    conflict: &Relation,
    s: VertexId,
) -> Result<SetFamily, ExtendError> {
    if !causality.contains(s, s) || !terminal_events(causality).contains(s) {
        return Err(ExtendError::NotTerminal(s));
    }
    if f.contains_key(s) {
        return Err(ExtendError::StaleKey(s));
    }
    if conflict.contains(s, s) {
        return Err(ExtendError::ConflictSelfLoop(s));
    }
    if let Some((x, _)) = f.iter().find(|(_, set)| set.is_empty()) {
        return Err(ExtendError::EmptySet(x));
    }
    let others = causality.field().without(s);
    if f.key_set() != others {
        return Err(ExtendError::KeyMismatch {
            expected: others,
            found: f.key_set(),
        });
    }
    let reduced_causality = causality.remove_vertex_pairs(s, s);
    let reduced_conflict = conflict.remove_vertex_pairs(s, s);
    if !is_representation(f, &reduced_causality, &reduced_conflict) {
        return Err(ExtendError::NotARepresentation(s));
    }

    let causality_inv = causality.converse();
    let ancestors = causality_inv.successors(s).without(s);
    let conflicting = conflict.converse().successors(s);
    let concurrent = others.difference(ancestors).difference(conflicting);
    debug_assert!(conflicting.intersection(ancestors).is_empty());
    debug_assert!(concurrent.is_subset(causality.fixed_points()));

    let mut next = f.next_fresh_label();
    let mut g = f.clone();
    let mut new_set = LabelSet::new();
    for x in concurrent {
        let bridge = next;
        next += 1;
        let receivers = causality_inv.successors(x).union(ancestors);
        g = g.point_union(&singleton_on(receivers, bridge));
        new_set.insert(bridge);
    }
    let marker = next;
    g = g.point_union(&singleton_on(ancestors, marker));
    new_set.insert(marker);

    debug_assert!(is_representation(&g, &reduced_causality, &reduced_conflict));
    Ok(g.paste(s, new_set))
}

fn singleton_on(receivers: VertexSet, label: Label) -> SetFamily {
    SetFamily::from_entries(receivers.iter().map(|x| (x, LabelSet::from([label]))))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{0}")]
    NotAnEventStructure(EsDiagnostic),
    #[error("extension failed: {0}")]
    Extend(#[from] ExtendError),
}

/// Builds an injective, empty-free representation of an event structure.
///
/// The smallest-id terminal event is always removed first, and fresh labels
/// are allocated in ascending order, so the output is a function of the
/// input alone. At most `n(n+1)/2` labels are used for `n` events.
pub fn build_representation(
    causality: &Relation,
    conflict: &Relation,
) -> Result<RepresentationCertificate, BuildError> {
    let diagnostic = is_event_structure(causality, conflict);
    if !diagnostic.is_valid() {
        return Err(BuildError::NotAnEventStructure(diagnostic));
    }

    // Peel terminal events, remembering each intermediate structure.
    let mut stack = Vec::new();
    let mut d = causality.clone();
    let mut u = conflict.clone();
    while let Some(s) = terminal_events(&d).min() {
        let reduced_d = d.remove_vertex_pairs(s, s);
        let reduced_u = u.remove_vertex_pairs(s, s);
        stack.push((s, d, u));
        d = reduced_d;
        u = reduced_u;
    }
    debug_assert!(
        d.field().is_empty(),
        "finite orders always have a terminal event"
    );

    let mut family = SetFamily::new();
    while let Some((s, d, u)) = stack.pop() {
        family = extend_with_terminal(&family, &d, &u, s)?;
    }

    let certificate = RepresentationCertificate {
        fresh_label_bound: family.next_fresh_label(),
        family,
        for_causality: causality.clone(),
        for_conflict: conflict.clone(),
    };
    debug_assert!(certificate.verify());
    Ok(certificate)
}

/// Structural consequences of a representation.
///
/// The four unconditional flags always hold for a representation; the two
/// conditional ones hold whenever their premise does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureFlags {
    pub transitive: bool,
    pub reflexive_over_field: bool,
    /// True when the family is not injective, else whether D is antisymmetric.
    pub antisymmetric_if_injective: bool,
    pub conflict_symmetric: bool,
    pub conflict_propagating: bool,
    /// True when the family has an empty set, else whether U is irreflexive.
    pub conflict_irreflexive_if_no_empty: bool,
}

impl StructureFlags {
    pub fn all(&self) -> bool {
        self.transitive
            && self.reflexive_over_field
            && self.antisymmetric_if_injective
            && self.conflict_symmetric
            && self.conflict_propagating
            && self.conflict_irreflexive_if_no_empty
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("the family is not a representation of the given relations")]
    NotARepresentation,
    #[error("vertices {0:?} of the relations are not keys of the family")]
    UncoveredVertices(VertexSet),
}

/// Reads off what a representation forces on `(D, U)`.
pub fn structure_from_representation(
    f: &SetFamily,
    causality: &Relation,
    conflict: &Relation,
) -> Result<StructureFlags, StructureError> {
    let covered = causality.field().union(conflict.field());
    let uncovered = covered.difference(f.key_set());
    if !uncovered.is_empty() {
        return Err(StructureError::UncoveredVertices(uncovered));
    }
    if !is_representation(f, causality, conflict) {
        return Err(StructureError::NotARepresentation);
    }
    let d = causality.properties();
    let u = conflict.properties();
    Ok(StructureFlags {
        transitive: d.transitive,
        reflexive_over_field: d.reflexive_over_field,
        antisymmetric_if_injective: !f.is_injective() || d.antisymmetric,
        conflict_symmetric: u.symmetric,
        conflict_propagating: crate::event_structure::is_conflict_propagating(conflict, causality),
        conflict_irreflexive_if_no_empty: f.has_empty_set() || u.irreflexive,
    })
}
