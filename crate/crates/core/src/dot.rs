//! Graphviz rendering of documents as mixed graphs.
//!
//! Causality (or containment) is drawn as solid arrows, conflict (or
//! overlap) as dashed undirected edges. Self-loops are never drawn.

use std::fmt::Write;

use crate::document::{DocumentKind, StructureDocument};
use crate::relation::RelationError;

/// Renders `doc` as a `digraph`. With `hasse`, only covering pairs of the
/// order are drawn, which requires the directed part to be a partial order.
pub fn export_dot(doc: &StructureDocument, hasse: bool) -> Result<String, RelationError> {
    let arrows = if hasse {
        doc.directed.transitive_reduction()?
    } else {
        doc.directed.clone()
    };
    let name = match doc.kind {
        DocumentKind::EventStructure => "es",
        DocumentKind::FullGraph => "fg",
        DocumentKind::Representation => "representation",
    };
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    let vertices = doc.directed.field().union(doc.undirected.field());
    for v in vertices {
        match doc.family.as_ref().and_then(|f| f.get(v)) {
            Some(set) => {
                let labels: Vec<String> = set.iter().map(|l| l.to_string()).collect();
                writeln!(out, "  {v} [label=\"{v}: {{{}}}\"];", labels.join(",")).unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (x, y) in arrows.pairs().filter(|(x, y)| x != y) {
        writeln!(out, "  {x} -> {y};").unwrap();
    }
    for (x, y) in doc.undirected.pairs().filter(|(x, y)| x < y) {
        writeln!(out, "  {x} -> {y} [dir=none, style=dashed];").unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
