//! Finite prime event structures, full graphs, and the set-family
//! representations that connect them.
//!
//! An event structure `(D, U)` is exactly a pair that admits an injective
//! family of nonempty finite sets in which causality is containment and
//! conflict is disjointness ([`representation`]). Swapping disjointness for
//! overlap turns the same family into a witness for a full graph, and the
//! complement map of [`bijection`] makes that correspondence exact for every
//! order `D`.
//!
//! Each capability has a runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example event_structure_basics
//! cargo run --example build_representation
//! cargo run --example full_graph_recognition
//! cargo run --example es_fg_bijection
//! cargo run --example count_structures
//! cargo run --example witness_search
//! cargo run --example hasse_dot
//! cargo run --example oeis_crosscheck
//! cargo run --example theorem_suite
//! ```

pub mod bijection;
pub mod cli;
pub mod document;
pub mod dot;
pub mod enumeration;
pub mod event_structure;
pub mod family;
pub mod full_graph;
pub mod oeis;
pub mod oracle;
pub mod relation;
pub mod representation;
pub mod suite;

pub use bijection::{
    es_to_fg, f_complement, fg_to_es, verify_bijection, BijectionReport, Evidence,
};
pub use document::{DocumentKind, StructureDocument};
pub use event_structure::{is_event_structure, EventStructure};
pub use family::{Label, LabelSet, SetFamily};
pub use full_graph::{is_fg_representation, is_full_graph, FullGraph};
pub use relation::{Relation, VertexId, VertexSet};
pub use representation::{build_representation, is_representation, RepresentationCertificate};
