//! Graphviz output for a representation document.

use esfg::dot::export_dot;
use esfg::representation::build_representation;
use esfg::{Relation, StructureDocument};

fn main() {
    let causality = Relation::of(&[
        (0, 0),
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 1),
        (1, 3),
        (2, 2),
        (2, 3),
        (3, 3),
    ]);
    let conflict = Relation::empty(4);
    let family = build_representation(&causality, &conflict).unwrap().family;
    let doc = StructureDocument::representation(4, &causality, &conflict, family);
    println!("{}", doc.to_canonical());
    print!("{}", export_dot(&doc, true).unwrap());
}
