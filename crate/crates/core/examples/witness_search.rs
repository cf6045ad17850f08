//! Exhaustive search for a representing family within a label budget.

use esfg::oracle::{find_fg_representation_bruteforce, find_representation_bruteforce};
use esfg::Relation;

fn main() {
    let d = Relation::of(&[(0, 0), (1, 1), (2, 2)]);
    let u = Relation::of(&[(0, 1), (1, 0), (1, 2), (2, 1)]);
    for bound in 1..=4 {
        match find_representation_bruteforce(&d, &u, bound) {
            Some(f) => {
                println!("{bound} labels: {f:?}");
                break;
            }
            None => println!("{bound} labels: none"),
        }
    }

    // A symmetric edge between comparable vertices has no witness.
    let chain = Relation::of(&[(0, 0), (0, 1), (1, 1)]);
    let edge = Relation::of(&[(0, 1), (1, 0)]);
    println!(
        "comparable overlap: {:?}",
        find_fg_representation_bruteforce(&chain, &edge, 4)
    );
    println!(
        "no overlap:         {:?}",
        find_fg_representation_bruteforce(&chain, &Relation::empty(2), 4)
    );
}
