//! Full graphs: mixed graphs whose directed edges are set containment and
//! whose undirected edges are set overlap, for some injective family of
//! nonempty sets.
//!
//! Recognition goes through event structures. `T` makes a full graph of `D`
//! exactly when the complement of `T` inside the incomparability square of
//! `D` is an admissible conflict for `D`, and the family built for that
//! event structure certifies the full graph as well.

use std::fmt;

use thiserror::Error;

use crate::event_structure::{is_event_structure, EsDiagnostic};
use crate::family::{LabelSet, SetFamily};
use crate::relation::{Relation, VertexSet};
use crate::representation::build_representation;

/// `A ∩ B ∉ {A, B, ∅}`.
pub fn overlaps(a: &LabelSet, b: &LabelSet) -> bool {
    a.overlaps(b)
}

/// Containment and overlap biconditionals over `keys(f)²`.
pub fn is_fg_representation(f: &SetFamily, directed: &Relation, undirected: &Relation) -> bool {
    f.iter().all(|(x, fx)| {
        f.iter().all(|(y, fy)| {
            directed.contains(x, y) == fx.is_superset(fy)
                && undirected.contains(x, y) == fx.overlaps(fy)
        })
    })
}

/// Why a pair `(D, T)` is not a full graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FgRejection {
    #[error("undirected edges touch vertices {0:?} outside the field of the directed edges")]
    OutsideField(VertexSet),
    #[error("undirected edge relation is not symmetric")]
    Asymmetric,
    #[error("undirected edges join comparable or identical vertices")]
    NotIncomparable,
    #[error("the complementary conflict is not admissible: {0}")]
    ComplementNotAdmissible(EsDiagnostic),
}

/// Outcome of [`is_full_graph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FgRecognition {
    pub rejection: Option<FgRejection>,
    pub certificate: Option<SetFamily>,
}

impl FgRecognition {
    pub fn is_full_graph(&self) -> bool {
        self.rejection.is_none()
    }
}

/// Decides whether `undirected` makes a full graph of `directed`, optionally
/// producing an fg-representation as witness.
pub fn is_full_graph(
    directed: &Relation,
    undirected: &Relation,
    with_certificate: bool,
) -> FgRecognition {
    let rejected = |r| FgRecognition {
        rejection: Some(r),
        certificate: None,
    };
    let outside = undirected.field().difference(directed.field());
    if !outside.is_empty() {
        return rejected(FgRejection::OutsideField(outside));
    }
    if !undirected.is_symmetric() {
        return rejected(FgRejection::Asymmetric);
    }
    let incomparable = directed.sym_complement();
    if !undirected.is_subset(&incomparable) {
        return rejected(FgRejection::NotIncomparable);
    }
    let conflict = incomparable.difference(undirected);
    let diagnostic = is_event_structure(directed, &conflict);
    if !diagnostic.is_valid() {
        return rejected(FgRejection::ComplementNotAdmissible(diagnostic));
    }
    let certificate = with_certificate.then(|| {
        build_representation(directed, &conflict)
            .expect("validated event structure")
            .family
    });
    FgRecognition {
        rejection: None,
        certificate,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FullGraphError {
    #[error("{0}")]
    Rejected(FgRejection),
    #[error("certificate does not witness the full graph")]
    BadCertificate,
}

/// A recognised full graph with an optional witness family.
#[derive(Clone, PartialEq, Eq)]
pub struct FullGraph {
    directed: Relation,
    undirected: Relation,
    certificate: Option<SetFamily>,
}

impl FullGraph {
    /// Recognises `(D, T)` and attaches a certificate.
    pub fn new(directed: Relation, undirected: Relation) -> Result<Self, FullGraphError> {
        let recognition = is_full_graph(&directed, &undirected, true);
        if let Some(r) = recognition.rejection {
            return Err(FullGraphError::Rejected(r));
        }
        Self::assemble(directed, undirected, recognition.certificate)
    }

    /// Accepts a caller-supplied witness after checking it.
    pub fn with_certificate(
        directed: Relation,
        undirected: Relation,
        certificate: SetFamily,
    ) -> Result<Self, FullGraphError> {
        let ok = undirected.is_symmetric()
            && undirected.field().is_subset(directed.field())
            && certificate.key_set() == directed.field()
            && certificate.is_injective()
            && !certificate.has_empty_set()
            && is_fg_representation(&certificate, &directed, &undirected);
        if !ok {
            return Err(FullGraphError::BadCertificate);
        }
        Self::assemble(directed, undirected, Some(certificate))
    }

    fn assemble(
        directed: Relation,
        undirected: Relation,
        certificate: Option<SetFamily>,
    ) -> Result<Self, FullGraphError> {
        let universe = directed.universe().max(undirected.universe());
        Ok(FullGraph {
            directed: directed.with_universe(universe).expect("fits"),
            undirected: undirected.with_universe(universe).expect("fits"),
            certificate,
        })
    }

    pub fn directed(&self) -> &Relation {
        &self.directed
    }

    pub fn undirected(&self) -> &Relation {
        &self.undirected
    }

    pub fn certificate(&self) -> Option<&SetFamily> {
        self.certificate.as_ref()
    }

    pub fn universe(&self) -> usize {
        self.directed.universe()
    }

    pub fn vertices(&self) -> VertexSet {
        self.directed.field()
    }
}

impl fmt::Debug for FullGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FullGraph")
            .field("directed", &self.directed)
            .field("undirected", &self.undirected)
            .field("certificate", &self.certificate)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Label;
    use crate::oracle::find_fg_representation_bruteforce;

    fn fam(entries: &[(usize, &[Label])]) -> SetFamily {
        SetFamily::from_entries(
            entries
                .iter()
                .map(|&(k, s)| (k, s.iter().copied().collect::<LabelSet>())),
        )
    }

    #[test]
    fn fg_representation_examples() {
        let e = Relation::empty(0);
        assert!(is_fg_representation(&SetFamily::new(), &e, &e));
        assert!(is_fg_representation(
            &fam(&[(0, &[1, 2]), (1, &[0, 1])]),
            &Relation::of(&[(0, 0), (1, 1)]),
            &Relation::of(&[(0, 1), (1, 0)])
        ));
        assert!(!is_fg_representation(
            &fam(&[(0, &[1]), (1, &[1])]),
            &Relation::of(&[(0, 0), (1, 1)]),
            &e
        ));
    }

    #[test]
    fn recognition_examples() {
        let discrete = Relation::of(&[(0, 0), (1, 1)]);
        let edge = Relation::of(&[(0, 1), (1, 0)]);
        let r = is_full_graph(&discrete, &edge, true);
        assert!(r.is_full_graph());
        let cert = r.certificate.unwrap();
        assert!(is_fg_representation(&cert, &discrete, &edge));
        // The conflict side is empty here; the oracle agrees independently.
        assert!(find_fg_representation_bruteforce(&discrete, &edge, 4).is_some());

        let chain = Relation::of(&[(0, 0), (1, 1), (0, 1)]);
        assert_eq!(
            is_full_graph(&chain, &edge, false).rejection,
            Some(FgRejection::NotIncomparable)
        );

        let e = Relation::empty(0);
        let r = is_full_graph(&e, &e, true);
        assert!(r.is_full_graph());
        assert_eq!(r.certificate, Some(SetFamily::new()));
    }

    #[test]
    fn recognition_rejections() {
        let discrete = Relation::of(&[(0, 0), (1, 1)]);
        assert_eq!(
            is_full_graph(&discrete, &Relation::of(&[(0, 1)]), false).rejection,
            Some(FgRejection::Asymmetric)
        );
        assert!(matches!(
            is_full_graph(&discrete, &Relation::of(&[(0, 2), (2, 0)]), false).rejection,
            Some(FgRejection::OutsideField(_))
        ));
        assert!(matches!(
            is_full_graph(&Relation::of(&[(0, 1)]), &Relation::empty(2), false).rejection,
            Some(FgRejection::ComplementNotAdmissible(_))
        ));
    }

    #[test]
    fn self_loops_never_overlap() {
        let d = Relation::of(&[(0, 0)]);
        let t = Relation::of(&[(0, 0)]);
        assert!(!is_full_graph(&d, &t, false).is_full_graph());
    }

    #[test]
    fn full_graph_constructors() {
        let discrete = Relation::of(&[(0, 0), (1, 1)]);
        let edge = Relation::of(&[(0, 1), (1, 0)]);
        let g = FullGraph::new(discrete.clone(), edge.clone()).unwrap();
        assert!(g.certificate().is_some());
        let ok = FullGraph::with_certificate(
            discrete.clone(),
            edge.clone(),
            fam(&[(0, &[1, 2]), (1, &[0, 1])]),
        );
        assert!(ok.is_ok());
        let bad = FullGraph::with_certificate(discrete, edge, fam(&[(0, &[1]), (1, &[2])]));
        assert_eq!(bad.unwrap_err(), FullGraphError::BadCertificate);
    }
}
