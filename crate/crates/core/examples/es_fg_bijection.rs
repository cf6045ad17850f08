//! The complement map between conflicts and full-graph edges, and the one
//! family that certifies both sides.

use esfg::bijection::{
    enumerate_admissible_conflicts, enumerate_fullgraph_edge_sets, BijectionConfig, Evidence,
};
use esfg::{
    es_to_fg, f_complement, fg_to_es, is_fg_representation, is_representation, verify_bijection,
};
use esfg::{EventStructure, Relation};

fn main() {
    // Three unrelated events.
    let d = Relation::of(&[(0, 0), (1, 1), (2, 2)]);
    let conflicts = enumerate_admissible_conflicts(&d);
    let edges = enumerate_fullgraph_edge_sets(&d);
    println!(
        "{} admissible conflicts, {} full-graph edge sets",
        conflicts.len(),
        edges.len()
    );

    let u = Relation::of(&[(0, 1), (1, 0)]);
    let t = f_complement(&d, &u);
    println!(
        "conflict {:?} <-> edges {:?}",
        u.pairs().collect::<Vec<_>>(),
        t.pairs().collect::<Vec<_>>()
    );

    let es = EventStructure::new(d.clone(), u.clone()).unwrap();
    let g = es_to_fg(&es);
    let f = g.certificate().unwrap();
    println!("shared family {f:?}");
    println!(
        "  represents the event structure: {}",
        is_representation(f, &d, &u)
    );
    println!(
        "  represents the full graph:      {}",
        is_fg_representation(f, &d, &t)
    );
    println!(
        "  back again: {}",
        fg_to_es(g.directed(), g.undirected()).unwrap() == es
    );

    for evidence in [Evidence::Recognition, Evidence::BruteForce] {
        let config = BijectionConfig {
            evidence,
            ..Default::default()
        };
        let report = verify_bijection(&d, &config).unwrap();
        println!(
            "{evidence:?}: bijection holds = {} ({} = {})",
            report.holds(),
            report.x_size,
            report.y_size
        );
    }
}
