//! Deciding whether a mixed graph is a full graph, with a witness family.

use esfg::full_graph::{is_full_graph, FullGraph};
use esfg::Relation;

fn main() {
    let directed = Relation::of(&[(0, 0), (1, 1), (2, 2), (0, 2)]);

    for (name, undirected) in [
        ("no edges", Relation::empty(3)),
        ("0 - 1", Relation::of(&[(0, 1), (1, 0)])),
        ("1 - 2 only", Relation::of(&[(1, 2), (2, 1)])),
        ("0 - 2 (comparable)", Relation::of(&[(0, 2), (2, 0)])),
    ] {
        let verdict = is_full_graph(&directed, &undirected, true);
        match (&verdict.rejection, &verdict.certificate) {
            (None, Some(f)) => println!("{name}: full graph, witness {f:?}"),
            (Some(why), _) => println!("{name}: rejected ({why})"),
            (None, None) => println!("{name}: full graph"),
        }
    }

    let g = FullGraph::new(directed, Relation::of(&[(0, 1), (1, 0)])).unwrap();
    println!(
        "vertices {:?}, certificate attached: {}",
        g.vertices().to_vec(),
        g.certificate().is_some()
    );
}
