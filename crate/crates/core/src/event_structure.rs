//! Prime event structures: a causality order together with a conflict
//! relation that is inherited along causality.
//!
//! Causality is stored reflexively: every event `e` carries `(e, e)`, and the
//! events of a structure are exactly the field of its causality relation.

use std::fmt;

use thiserror::Error;

use crate::relation::{Relation, VertexId, VertexSet};

/// One conjunct of the event-structure predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EsConjunct {
    /// Conflict is inherited along causality.
    Propagation,
    ConflictSymmetric,
    ConflictIrreflexive,
    CausalityTransitive,
    CausalityAntisymmetric,
    CausalityReflexive,
    /// Every conflicting vertex is an event.
    ConflictWithinEvents,
}

impl EsConjunct {
    pub const ALL: [EsConjunct; 7] = [
        EsConjunct::Propagation,
        EsConjunct::ConflictSymmetric,
        EsConjunct::ConflictIrreflexive,
        EsConjunct::CausalityTransitive,
        EsConjunct::CausalityAntisymmetric,
        EsConjunct::CausalityReflexive,
        EsConjunct::ConflictWithinEvents,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EsConjunct::Propagation => "propagation",
            EsConjunct::ConflictSymmetric => "conflict-symmetric",
            EsConjunct::ConflictIrreflexive => "conflict-irreflexive",
            EsConjunct::CausalityTransitive => "causality-transitive",
            EsConjunct::CausalityAntisymmetric => "causality-antisymmetric",
            EsConjunct::CausalityReflexive => "causality-reflexive",
            EsConjunct::ConflictWithinEvents => "conflict-within-events",
        }
    }
}

impl fmt::Display for EsConjunct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of [`is_event_structure`]: the failed conjuncts, if any.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EsDiagnostic {
    pub failed: Vec<EsConjunct>,
}

impl EsDiagnostic {
    pub fn is_valid(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn fails(&self, conjunct: EsConjunct) -> bool {
        self.failed.contains(&conjunct)
    }
}

impl fmt::Display for EsDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failed.is_empty() {
            return f.write_str("valid event structure");
        }
        f.write_str("not an event structure; failed: ")?;
        for (i, c) in self.failed.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EsError {
    #[error("{0}")]
    Invalid(EsDiagnostic),
    #[error("vertex {0} is not an event of the structure")]
    NotAnEvent(VertexId),
}

/// `∀(x, y) ∈ causality. conflict``{x} ⊆ conflict``{y}`.
pub fn is_conflict_propagating(conflict: &Relation, causality: &Relation) -> bool {
    causality
        .pairs()
        .all(|(x, y)| conflict.successors(x).is_subset(conflict.successors(y)))
}

/// Checks every event-structure conjunct and names the ones that fail.
pub fn is_event_structure(causality: &Relation, conflict: &Relation) -> EsDiagnostic {
    let d = causality.properties();
    let u = conflict.properties();
    let checks = [
        (
            EsConjunct::Propagation,
            is_conflict_propagating(conflict, causality),
        ),
        (EsConjunct::ConflictSymmetric, u.symmetric),
        (EsConjunct::ConflictIrreflexive, u.irreflexive),
        (EsConjunct::CausalityTransitive, d.transitive),
        (EsConjunct::CausalityAntisymmetric, d.antisymmetric),
        (EsConjunct::CausalityReflexive, d.reflexive_over_field),
        (
            EsConjunct::ConflictWithinEvents,
            conflict.field().is_subset(causality.field()),
        ),
    ];
    EsDiagnostic {
        failed: checks
            .into_iter()
            .filter(|&(_, ok)| !ok)
            .map(|(c, _)| c)
            .collect(),
    }
}

/// Events with no causal successor other than themselves.
pub fn terminal_events(causality: &Relation) -> VertexSet {
    causality
        .field()
        .iter()
        .filter(|&s| causality.successors(s).is_subset(VertexSet::singleton(s)))
        .collect()
}

/// A validated event structure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EventStructure {
    causality: Relation,
    conflict: Relation,
}

impl EventStructure {
    pub fn new(causality: Relation, conflict: Relation) -> Result<Self, EsError> {
        let diagnostic = is_event_structure(&causality, &conflict);
        if !diagnostic.is_valid() {
            return Err(EsError::Invalid(diagnostic));
        }
        let universe = causality.universe().max(conflict.universe());
        Ok(EventStructure {
            causality: causality.with_universe(universe).expect("same pairs fit"),
            conflict: conflict.with_universe(universe).expect("same pairs fit"),
        })
    }

    pub fn empty() -> Self {
        EventStructure {
            causality: Relation::empty(0),
            conflict: Relation::empty(0),
        }
    }

    pub fn causality(&self) -> &Relation {
        &self.causality
    }

    pub fn conflict(&self) -> &Relation {
        &self.conflict
    }

    pub fn universe(&self) -> usize {
        self.causality.universe()
    }

    pub fn events(&self) -> VertexSet {
        self.causality.field()
    }

    pub fn terminal_events(&self) -> VertexSet {
        terminal_events(&self.causality)
    }

    /// Excises event `s`: every causality or conflict pair touching it.
    pub fn remove_event(&self, s: VertexId) -> Result<EventStructure, EsError> {
        if !self.events().contains(s) {
            return Err(EsError::NotAnEvent(s));
        }
        // Restrictions of an event structure to a subset of its events are
        // event structures.
        let reduced = EventStructure {
            causality: self.causality.remove_vertex_pairs(s, s),
            conflict: self.conflict.remove_vertex_pairs(s, s),
        };
        debug_assert!(is_event_structure(&reduced.causality, &reduced.conflict).is_valid());
        Ok(reduced)
    }

    pub fn into_parts(self) -> (Relation, Relation) {
        (self.causality, self.conflict)
    }
}

impl fmt::Debug for EventStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EventStructure")
            .field("causality", &self.causality)
            .field("conflict", &self.conflict)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagation_examples() {
        let any_d = Relation::of(&[(0, 0), (1, 1), (0, 1)]);
        assert!(is_conflict_propagating(&Relation::empty(0), &any_d));
        assert!(!is_conflict_propagating(
            &Relation::of(&[(0, 1), (1, 0)]),
            &Relation::of(&[(0, 0), (1, 1), (0, 1)])
        ));
    }

    #[test]
    fn propagation_matches_scan() {
        let d = Relation::of(&[(0, 0), (1, 1), (2, 2), (0, 1)]);
        let u = Relation::of(&[(0, 2), (2, 0), (1, 2), (2, 1)]);
        // x0 # y and x0 <= x1 imply x1 # y, checked over every triple.
        let mut scan = true;
        for x0 in 0..3 {
            for x1 in 0..3 {
                for y in 0..3 {
                    if u.contains(x0, y) && d.contains(x0, x1) && !u.contains(x1, y) {
                        scan = false;
                    }
                }
            }
        }
        assert!(scan);
        assert!(is_conflict_propagating(&u, &d));
    }

    #[test]
    fn event_structure_examples() {
        assert!(is_event_structure(&Relation::empty(0), &Relation::empty(0)).is_valid());
        assert!(is_event_structure(
            &Relation::of(&[(0, 0), (1, 1)]),
            &Relation::of(&[(0, 1), (1, 0)])
        )
        .is_valid());
        let diag = is_event_structure(
            &Relation::of(&[(0, 0), (1, 1), (0, 1)]),
            &Relation::of(&[(0, 1), (1, 0)]),
        );
        assert_eq!(diag.failed, vec![EsConjunct::Propagation]);
        assert!(diag.to_string().contains("propagation"));
    }

    #[test]
    fn diagnostic_names_every_failure() {
        let d = Relation::of(&[(0, 1), (1, 0)]);
        let u = Relation::of(&[(2, 2)]);
        let diag = is_event_structure(&d, &u);
        for c in [
            EsConjunct::ConflictIrreflexive,
            EsConjunct::CausalityTransitive,
            EsConjunct::CausalityAntisymmetric,
            EsConjunct::CausalityReflexive,
            EsConjunct::ConflictWithinEvents,
        ] {
            assert!(diag.fails(c), "{c} should fail");
        }
        assert!(!diag.fails(EsConjunct::ConflictSymmetric));
    }

    #[test]
    fn terminal_examples() {
        let t = |pairs: &[(usize, usize)]| terminal_events(&Relation::of(pairs)).to_vec();
        assert_eq!(t(&[(0, 0), (1, 1), (0, 1)]), vec![1]);
        assert_eq!(t(&[(0, 0), (1, 1)]), vec![0, 1]);
        assert_eq!(t(&[]), Vec::<usize>::new());
    }

    #[test]
    fn remove_event_examples() {
        let es = EventStructure::new(Relation::of(&[(0, 0), (1, 1), (0, 1)]), Relation::empty(2))
            .unwrap();
        let r = es.remove_event(1).unwrap();
        assert!(r.causality().same_pairs(&Relation::of(&[(0, 0)])));
        assert!(r.conflict().is_empty());

        let es = EventStructure::new(Relation::of(&[(0, 0)]), Relation::empty(0)).unwrap();
        let r = es.remove_event(0).unwrap();
        assert!(r.causality().is_empty() && r.conflict().is_empty());

        let es = EventStructure::new(
            Relation::of(&[(0, 0), (1, 1), (2, 2), (0, 2)]),
            Relation::of(&[(1, 2), (2, 1)]),
        );
        // 0 <= 2 and 1 # 2 without 1 # 0 is fine: conflict flows forward only.
        let es = es.unwrap();
        let r = es.remove_event(2).unwrap();
        assert!(r.causality().same_pairs(&Relation::of(&[(0, 0), (1, 1)])));
        assert!(r.conflict().is_empty());

        assert_eq!(es.remove_event(7), Err(EsError::NotAnEvent(7)));
    }

    #[test]
    fn constructor_rejects_invalid() {
        let err = EventStructure::new(
            Relation::of(&[(0, 0), (1, 1), (0, 1)]),
            Relation::of(&[(0, 1), (1, 0)]),
        )
        .unwrap_err();
        match err {
            EsError::Invalid(d) => assert!(d.fails(EsConjunct::Propagation)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
