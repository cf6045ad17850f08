//! Naive reference models shared by the integration tests. Everything here
//! works on plain pair sets and avoids the library's own predicates.

#![allow(dead_code)]

use std::collections::BTreeSet;

use esfg::{LabelSet, Relation, SetFamily};
use rand::Rng;

pub type Pairs = BTreeSet<(usize, usize)>;

/// The relation on `{0..n-1}` whose pairs are the set bits of `mask`, bit
/// `x * n + y` standing for `(x, y)`.
pub fn pairs_from_mask(n: usize, mask: u64) -> Pairs {
    (0..n * n)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i / n, i % n))
        .collect()
}

pub fn to_relation(n: usize, pairs: &Pairs) -> Relation {
    Relation::from_pairs(n, pairs.iter().copied()).unwrap()
}

pub fn to_pairs(r: &Relation) -> Pairs {
    r.pairs().collect()
}

pub fn field(r: &Pairs) -> BTreeSet<usize> {
    r.iter().flat_map(|&(x, y)| [x, y]).collect()
}

pub fn is_symmetric(r: &Pairs) -> bool {
    r.iter().all(|&(x, y)| r.contains(&(y, x)))
}

/// Reflexive on its field, antisymmetric and transitive.
pub fn is_order_on_field(d: &Pairs) -> bool {
    let f = field(d);
    f.iter().all(|&x| d.contains(&(x, x)))
        && d.iter().all(|&(x, y)| x == y || !d.contains(&(y, x)))
        && d.iter().all(|&(x, y)| {
            d.iter()
                .filter(|&&(y2, _)| y2 == y)
                .all(|&(_, z)| d.contains(&(x, z)))
        })
}

/// Event structure axioms stated directly on pair sets.
pub fn is_event_structure(d: &Pairs, u: &Pairs) -> bool {
    let events = field(d);
    is_order_on_field(d)
        && is_symmetric(u)
        && u.iter().all(|&(x, y)| x != y)
        && field(u).is_subset(&events)
        && u.iter().all(|&(x, y)| {
            d.iter()
                .filter(|&&(x0, _)| x0 == x)
                .all(|&(_, x1)| u.contains(&(x1, y)))
        })
}

/// Number of pairs `(D, U)` on `{0..n-1}` with every vertex an event, by
/// scanning all `2^(n^2) * 2^(n^2)` candidates.
pub fn count_event_structures_naively(n: usize) -> u64 {
    let all: u64 = 1 << (n * n);
    let everything: BTreeSet<usize> = (0..n).collect();
    let mut count = 0;
    for dm in 0..all {
        let d = pairs_from_mask(n, dm);
        if field(&d) != everything || !is_order_on_field(&d) {
            continue;
        }
        for um in 0..all {
            if is_event_structure(&d, &pairs_from_mask(n, um)) {
                count += 1;
            }
        }
    }
    count
}

/// Containment, disjointness and overlap relations induced by a family.
pub fn induced(n: usize, f: &SetFamily) -> (Relation, Relation, Relation) {
    let mut contain = Pairs::new();
    let mut disjoint = Pairs::new();
    let mut overlap = Pairs::new();
    for (x, a) in f.iter() {
        for (y, b) in f.iter() {
            let a: BTreeSet<u32> = a.iter().collect();
            let b: BTreeSet<u32> = b.iter().collect();
            let common = a.intersection(&b).count();
            if b.is_subset(&a) {
                contain.insert((x, y));
            }
            if common == 0 {
                disjoint.insert((x, y));
            }
            if common != 0 && common != a.len() && common != b.len() {
                overlap.insert((x, y));
            }
        }
    }
    (
        to_relation(n, &contain),
        to_relation(n, &disjoint),
        to_relation(n, &overlap),
    )
}

pub fn random_relation(rng: &mut impl Rng, n: usize, density: f64) -> Relation {
    let mut r = Relation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if rng.gen_bool(density) {
                r.insert(x, y);
            }
        }
    }
    r
}

/// Random family on keys `{0..n-1}` drawing labels from `0..labels`; empty
/// and repeated sets occur.
pub fn random_family(rng: &mut impl Rng, n: usize, labels: u32) -> SetFamily {
    SetFamily::from_entries((0..n).map(|x| {
        let set: LabelSet = (0..labels).filter(|_| rng.gen_bool(0.4)).collect();
        (x, set)
    }))
}
