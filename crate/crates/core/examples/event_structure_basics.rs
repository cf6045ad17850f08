//! Validating event structures and reading the diagnostics.

use esfg::event_structure::{is_event_structure, EventStructure};
use esfg::Relation;

fn main() {
    // 0 enables 1; 2 is an alternative to 0 and, by inheritance, to 1.
    let causality = Relation::of(&[(0, 0), (0, 1), (1, 1), (2, 2)]);
    let conflict = Relation::of(&[(0, 2), (2, 0), (1, 2), (2, 1)]);
    let es = EventStructure::new(causality.clone(), conflict).expect("valid");
    println!("events: {:?}", es.events().to_vec());
    println!("terminal events: {:?}", es.terminal_events().to_vec());

    let smaller = es.remove_event(1).expect("1 is an event");
    println!(
        "without 1: causality {:?}, conflict {:?}",
        smaller.causality(),
        smaller.conflict()
    );

    // Dropping the inherited conflict breaks propagation.
    let partial = Relation::of(&[(0, 2), (2, 0)]);
    let diagnostic = is_event_structure(&causality, &partial);
    println!("inherited conflict missing: {diagnostic}");

    let cyclic = Relation::of(&[(0, 0), (1, 1), (0, 1), (1, 0)]);
    println!(
        "cyclic causality: {}",
        is_event_structure(&cyclic, &Relation::empty(2))
    );
}
