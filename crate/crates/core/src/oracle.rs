//! Exhaustive search for set-family witnesses.
//!
//! These searches share no code with the constructive builder or with the
//! event-structure predicate: they assign label sets event by event and
//! prune on the defining biconditionals directly. They answer "does an
//! injective, empty-free family keyed by `field(D)` with labels below the
//! bound exist?" and are the independent side of every oracle test.
//!
//! Labels that so far belong to exactly the same assigned events are
//! interchangeable, so a new set only picks *how many* labels from each such
//! class (always the smallest ones) plus a number of brand-new labels. Every
//! family is equivalent under a label permutation to one reached this way,
//! which keeps the search exhaustive.

use crate::family::{Label, SetFamily};
use crate::relation::{Relation, VertexId, VertexSet};

/// Labels are tracked in a single word.
pub const MAX_ORACLE_LABELS: usize = 64;

/// How the second relation is read off a pair of sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkSemantics {
    /// `(x, y)` related iff the sets are disjoint (conflict).
    Disjoint,
    /// `(x, y)` related iff the sets overlap (full-graph edge).
    Overlap,
}

impl LinkSemantics {
    fn holds(self, a: u64, b: u64) -> bool {
        let common = a & b;
        match self {
            LinkSemantics::Disjoint => common == 0,
            LinkSemantics::Overlap => common != 0 && common != a && common != b,
        }
    }
}

/// `|field(D)|²`, enough labels for any representable structure.
pub fn default_label_bound(causality: &Relation) -> usize {
    let n = causality.field().len();
    n * n
}

/// Searches for an injective, empty-free representation of `(D, U)` keyed by
/// `field(D)` with every label below `label_bound` (capped at
/// [`MAX_ORACLE_LABELS`]).
pub fn find_representation_bruteforce(
    causality: &Relation,
    conflict: &Relation,
    label_bound: usize,
) -> Option<SetFamily> {
    search(causality, conflict, LinkSemantics::Disjoint, label_bound)
}

/// Searches for an injective, empty-free fg-representation of `(D, T)`.
pub fn find_fg_representation_bruteforce(
    directed: &Relation,
    undirected: &Relation,
    label_bound: usize,
) -> Option<SetFamily> {
    search(directed, undirected, LinkSemantics::Overlap, label_bound)
}

/// The generic search behind both oracles. Returns `None` when `link`
/// touches a vertex outside `field(containment)`.
pub fn search(
    containment: &Relation,
    link: &Relation,
    semantics: LinkSemantics,
    label_bound: usize,
) -> Option<SetFamily> {
    let field = containment.field();
    let order = assignment_order(containment, field);
    let bound = label_bound.min(MAX_ORACLE_LABELS);

    // A link to a vertex without a set can never be witnessed.
    if !link.field().is_subset(field) {
        return None;
    }
    // A nonempty set contains itself, meets itself and never overlaps itself.
    for &e in &order {
        if !containment.contains(e, e) || link.contains(e, e) {
            return None;
        }
    }

    let mut search = Search {
        containment,
        link,
        semantics,
        order: &order,
        bound,
        assigned: Vec::with_capacity(order.len()),
    };
    if !search.descend(0) {
        return None;
    }
    let family = SetFamily::from_entries(order.iter().zip(&search.assigned).map(|(&e, &mask)| {
        (
            e,
            (0..64u32)
                .filter(|&l| mask & (1u64 << l) != 0)
                .collect::<crate::family::LabelSet>(),
        )
    }));
    Some(family)
}

/// Causes before effects where possible: a vertex with fewer predecessors
/// inside the field goes first, ties broken by id.
fn assignment_order(containment: &Relation, field: VertexSet) -> Vec<VertexId> {
    let mut order = field.to_vec();
    order.sort_by_key(|&x| (containment.predecessors(x).intersection(field).len(), x));
    order
}

struct Search<'a> {
    containment: &'a Relation,
    link: &'a Relation,
    semantics: LinkSemantics,
    order: &'a [VertexId],
    bound: usize,
    assigned: Vec<u64>,
}

impl Search<'_> {
    fn used_labels(&self) -> usize {
        let all = self.assigned.iter().fold(0u64, |acc, &m| acc | m);
        // Canonical labelling keeps the used labels contiguous from 0.
        (64 - all.leading_zeros()) as usize
    }

    fn descend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let used = self.used_labels();
        for candidate in self.candidates(used) {
            if self.compatible(depth, candidate) {
                self.assigned.push(candidate);
                if self.descend(depth + 1) {
                    return true;
                }
                self.assigned.pop();
            }
        }
        false
    }

    /// Canonical candidate sets for the next event, given `used` labels.
    fn candidates(&self, used: usize) -> Vec<u64> {
        // Group used labels by which assigned events contain them.
        let mut classes: Vec<(u64, Vec<Label>)> = Vec::new();
        for label in 0..used as Label {
            let bit = 1u64 << label;
            let signature = self
                .assigned
                .iter()
                .enumerate()
                .filter(|(_, &m)| m & bit != 0)
                .fold(0u64, |acc, (i, _)| acc | (1u64 << i));
            match classes.iter_mut().find(|(sig, _)| *sig == signature) {
                Some((_, labels)) => labels.push(label),
                None => classes.push((signature, vec![label])),
            }
        }

        let mut old_parts = vec![0u64];
        for (_, labels) in &classes {
            let mut next = Vec::with_capacity(old_parts.len() * (labels.len() + 1));
            for &base in &old_parts {
                let mut mask = base;
                next.push(mask);
                for &l in labels {
                    mask |= 1u64 << l;
                    next.push(mask);
                }
            }
            old_parts = next;
        }

        let mut out = Vec::new();
        for &old in &old_parts {
            let mut fresh = 0u64;
            for extra in 0..=self.bound.saturating_sub(used) {
                if extra > 0 {
                    fresh |= 1u64 << (used + extra - 1);
                }
                let candidate = old | fresh;
                if candidate != 0 {
                    out.push(candidate);
                }
            }
        }
        out
    }

    fn compatible(&self, depth: usize, candidate: u64) -> bool {
        let e = self.order[depth];
        self.assigned.iter().enumerate().all(|(i, &other)| {
            let x = self.order[i];
            candidate != other
                && self.containment.contains(e, x) == (candidate & other == other)
                && self.containment.contains(x, e) == (candidate & other == candidate)
                && self.link.contains(e, x) == self.semantics.holds(candidate, other)
                && self.link.contains(x, e) == self.semantics.holds(other, candidate)
        })
    }
}
