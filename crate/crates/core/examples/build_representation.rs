//! Turning an event structure into sets: causes become supersets and
//! conflicting events get disjoint sets.

use esfg::representation::{
    build_representation, extend_with_terminal, structure_from_representation,
};
use esfg::{EventStructure, Relation};

fn main() {
    // 0 below both 1 and 2; 1 and 2 conflict; 3 is unrelated to everything.
    let causality = Relation::of(&[(0, 0), (0, 1), (0, 2), (1, 1), (2, 2), (3, 3)]);
    let conflict = Relation::of(&[(1, 2), (2, 1)]);

    let cert = build_representation(&causality, &conflict).expect("an event structure");
    for (event, set) in cert.family.iter() {
        println!("event {event} -> {set:?}");
    }
    println!("certificate verifies: {}", cert.verify());
    println!("labels used: {}", cert.fresh_label_bound);

    // The same result one step at a time: represent everything but event 3,
    // then add 3 back.
    let es = EventStructure::new(causality.clone(), conflict.clone()).unwrap();
    let rest = es.remove_event(3).unwrap();
    let f = build_representation(rest.causality(), rest.conflict())
        .unwrap()
        .family;
    let g = extend_with_terminal(&f, &causality, &conflict, 3).unwrap();
    println!("after adding 3 back: {:?}", g.apply(3));

    // Any family induces relations with the expected shape.
    let flags = structure_from_representation(&g, &causality, &conflict).unwrap();
    println!("{flags:?}");
}
