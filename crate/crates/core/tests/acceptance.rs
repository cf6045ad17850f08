//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! fails. Runs without the libtest harness so the lines always print.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use esfg::bijection::{
    es_to_fg, f_complement, fg_to_es, verify_bijection, BijectionConfig, Evidence,
};
use esfg::enumeration::{
    count_es, count_fg, count_fg_with, emit_structures, enumerate_partial_orders, event_structures,
    full_graphs, StructureKind,
};
use esfg::event_structure::is_event_structure;
use esfg::full_graph::is_fg_representation;
use esfg::oeis::{oeis_crosscheck, OeisError};
use esfg::oracle::find_representation_bruteforce;
use esfg::relation::Relation;
use esfg::representation::{
    build_representation, is_representation, structure_from_representation,
};
use esfg::{SetFamily, StructureDocument};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{
    count_event_structures_naively, field, induced, is_order_on_field, pairs_from_mask,
    random_family, random_relation, to_relation, Pairs,
};

type Outcome = Result<String, String>;

/// Families found by the witness search in criterion 2, replayed by
/// criterion 3.
type Found = Vec<(SetFamily, Relation, Relation)>;

type Criterion = Box<dyn FnOnce(&mut Found) -> Outcome>;

fn ensure(ok: bool, failure: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(failure())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || {
        format!("{what} took {elapsed:.2?}, limit {limit:?}")
    })
}

fn completeness() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 0..=4 {
        for es in event_structures(n).map_err(|e| e.to_string())? {
            total += 1;
            let cert = build_representation(es.causality(), es.conflict())
                .map_err(|e| format!("n={n}: build failed on {es:?}: {e}"))?;
            ensure(cert.verify(), || {
                format!("n={n}: certificate rejected for {es:?}")
            })?;
            ensure(cert.family.len() == es.events().len(), || {
                format!("n={n}: keys differ from events")
            })?;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(120), "n <= 4")?;
    Ok(format!(
        "{total} event structures represented in {elapsed:.2?}"
    ))
}

fn oracle_agrees(n: usize, d: &Relation, u: &Relation, found: &mut Found) -> Result<(), String> {
    let witness = find_representation_bruteforce(d, u, n * n);
    let valid = is_event_structure(d, u).is_valid();
    ensure(witness.is_some() == valid, || {
        format!(
            "n={n}: search {} but axioms say {valid} for D={d:?} U={u:?}",
            witness.is_some()
        )
    })?;
    if let Some(f) = witness {
        found.push((f, d.clone(), u.clone()));
    }
    Ok(())
}

fn soundness_and_exactness(found: &mut Found) -> Outcome {
    let mut checked = 0usize;

    // Every pair over two points with field(U) inside field(D).
    for dm in 0..16 {
        let d = pairs_from_mask(2, dm);
        for um in 0..16 {
            let u = pairs_from_mask(2, um);
            if !field(&u).is_subset(&field(&d)) {
                continue;
            }
            oracle_agrees(2, &to_relation(2, &d), &to_relation(2, &u), found)?;
            checked += 1;
        }
    }

    // Orders on any subset of three points, against every symmetric conflict.
    let orders: Vec<Pairs> = (0..512)
        .map(|m| pairs_from_mask(3, m))
        .filter(is_order_on_field)
        .collect();
    ensure(orders.len() == 32, || {
        format!("poset filter kept {} relations, expected 32", orders.len())
    })?;
    for d in &orders {
        let events: Vec<usize> = field(d).into_iter().collect();
        let square: Vec<(usize, usize)> = events
            .iter()
            .flat_map(|&x| events.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| x <= y)
            .collect();
        for mask in 0u64..1 << square.len() {
            let u: Pairs = square
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .flat_map(|(_, &(x, y))| [(x, y), (y, x)])
                .collect();
            oracle_agrees(3, &to_relation(3, d), &to_relation(3, &u), found)?;
            checked += 1;
        }
    }

    // Random causality relations that are not orders.
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    let mut probes = 0;
    while probes < 10_000 {
        let d = pairs_from_mask(3, rng.gen_range(0..512));
        if is_order_on_field(&d) {
            continue;
        }
        let events: Vec<usize> = field(&d).into_iter().collect();
        let u: Pairs = events
            .iter()
            .flat_map(|&x| events.iter().map(move |&y| (x, y)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        oracle_agrees(3, &to_relation(3, &d), &to_relation(3, &u), found)?;
        probes += 1;
    }
    Ok(format!(
        "{} pairs agree, {} witnesses found",
        checked + probes,
        found.len()
    ))
}

fn structure_flags(found: &Found) -> Outcome {
    for (f, d, u) in found {
        let flags = structure_from_representation(f, d, u).map_err(|e| format!("{e} for {f:?}"))?;
        ensure(flags.all(), || format!("{flags:?} for {f:?}"))?;
    }
    // Families with repeated and empty sets exercise the conditional flags.
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    let mut premises = [0usize; 2];
    for _ in 0..2_000 {
        let n = rng.gen_range(1..=4);
        let f = random_family(&mut rng, n, 4);
        let (d, u, _) = induced(n, &f);
        let flags =
            structure_from_representation(&f, &d, &u).map_err(|e| format!("{e} for {f:?}"))?;
        ensure(flags.all(), || format!("{flags:?} for {f:?}"))?;
        premises[0] += usize::from(!f.is_injective());
        premises[1] += usize::from(f.has_empty_set());
    }
    Ok(format!(
        "{} found witnesses and 2000 random families ({} non-injective, {} with an empty set)",
        found.len(),
        premises[0],
        premises[1]
    ))
}

fn bijection() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 0..=3 {
        for d in enumerate_partial_orders(n).map_err(|e| e.to_string())? {
            for evidence in [Evidence::Recognition, Evidence::BruteForce] {
                let config = BijectionConfig {
                    evidence,
                    ..Default::default()
                };
                let report = verify_bijection(&d, &config).map_err(|e| e.to_string())?;
                ensure(report.holds(), || format!("{report:?}"))?;
            }
            checked += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for _ in 0..1_000 {
        let n = rng.gen_range(0..=3);
        let d = random_relation(&mut rng, n, 0.5);
        let config = BijectionConfig {
            evidence: Evidence::BruteForce,
            ..Default::default()
        };
        let report = verify_bijection(&d, &config).map_err(|e| e.to_string())?;
        ensure(report.holds(), || format!("{report:?}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60), "bijection checks")?;
    Ok(format!("{checked} base relations in {elapsed:.2?}"))
}

fn count_coincidence() -> Outcome {
    let mut counts = Vec::new();
    for n in 0..=4 {
        let es = count_es(n).map_err(|e| e.to_string())?;
        let fg = count_fg(n).map_err(|e| e.to_string())?;
        ensure(es == fg, || {
            format!("n={n}: {es} event structures, {fg} full graphs")
        })?;
        if n <= 3 {
            let searched = count_fg_with(n, Evidence::BruteForce).map_err(|e| e.to_string())?;
            ensure(searched == es, || {
                format!("n={n}: witness search found {searched} full graphs")
            })?;
            let naive = count_event_structures_naively(n);
            ensure(naive == es, || {
                format!("n={n}: naive scan found {naive} event structures")
            })?;
        }
        counts.push(es);
    }
    ensure(counts[1] == 1 && counts[2] == 4, || {
        format!("small counts {counts:?}")
    })?;
    Ok(format!("counts {counts:?}"))
}

fn shared_certificate() -> Outcome {
    let mut total = 0;
    for n in 0..=3 {
        for es in event_structures(n).map_err(|e| e.to_string())? {
            let g = es_to_fg(&es);
            let f = g.certificate().ok_or("no certificate attached")?;
            let t = f_complement(es.causality(), es.conflict());
            ensure(is_representation(f, es.causality(), es.conflict()), || {
                format!("not a representation: {es:?}")
            })?;
            ensure(is_fg_representation(f, es.causality(), &t), || {
                format!("not an fg-representation: {es:?}")
            })?;
            let (_, _, overlap) = induced(n, f);
            ensure(overlap.same_pairs(&t), || {
                format!("induced overlap differs for {es:?}")
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} event structures"))
}

fn subsets(base: &Relation) -> Vec<Relation> {
    let pairs: Vec<(usize, usize)> = base.pairs().collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let mut r = Relation::empty(base.universe());
            for (i, &(x, y)) in pairs.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    r.insert(x, y);
                }
            }
            r
        })
        .collect()
}

fn random_partial_function(rng: &mut impl Rng, n: usize) -> Relation {
    let mut r = Relation::empty(n);
    for x in 0..n {
        if rng.gen_bool(0.6) {
            r.insert(x, rng.gen_range(0..n));
        }
    }
    r
}

fn roundtrips_and_algebra() -> Outcome {
    let mut trips = 0;
    for n in 0..=3 {
        for es in event_structures(n).map_err(|e| e.to_string())? {
            let g = es_to_fg(&es);
            let back =
                fg_to_es(g.directed(), g.undirected()).map_err(|e| format!("{e} for {es:?}"))?;
            ensure(back == es, || format!("es roundtrip changed {es:?}"))?;
            trips += 1;
        }
        for (d, t) in full_graphs(n).map_err(|e| e.to_string())? {
            let es = fg_to_es(&d, &t).map_err(|e| format!("{e} for D={d:?} T={t:?}"))?;
            let g = es_to_fg(&es);
            ensure(*g.directed() == d && *g.undirected() == t, || {
                format!("fg roundtrip changed D={d:?} T={t:?}")
            })?;
            trips += 1;
        }
    }

    let mut algebra = 0;
    for n in 0..=3 {
        for d in enumerate_partial_orders(n).map_err(|e| e.to_string())? {
            let all = subsets(&d.sym_complement());
            let mut images = BTreeSet::new();
            for r in &all {
                let image = f_complement(&d, r);
                ensure(f_complement(&d, &image) == *r, || {
                    format!("not an involution at {r:?}")
                })?;
                images.insert(image);
            }
            ensure(images.len() == all.len(), || {
                format!("complement map not injective for {d:?}")
            })?;
            algebra += all.len();
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=8);
        let r = random_partial_function(&mut rng, n);
        let q = random_partial_function(&mut rng, n);
        let updated = r.override_with(&q);
        ensure(updated.is_right_unique(), || {
            format!("{r:?} overridden by {q:?} is not right-unique")
        })?;
    }
    Ok(format!(
        "{trips} roundtrips, {algebra} complement subsets, 10000 overrides"
    ))
}

fn document_roundtrip(line: &str) -> Result<(), String> {
    let doc = StructureDocument::parse(line.as_bytes()).map_err(|e| format!("{e} in {line}"))?;
    let again = doc.to_canonical();
    ensure(again == line, || format!("{line} reserialized as {again}"))
}

fn io() -> Outcome {
    let mut lines = BTreeSet::new();
    let mut total = 0;
    for n in 0..=3 {
        for kind in [StructureKind::EventStructure, StructureKind::FullGraph] {
            let mut buf = Vec::new();
            emit_structures(n, kind, &mut buf).map_err(|e| e.to_string())?;
            for line in String::from_utf8(buf).map_err(|e| e.to_string())?.lines() {
                document_roundtrip(line)?;
                lines.insert(line.to_owned());
                total += 1;
            }
        }
        for es in event_structures(n).map_err(|e| e.to_string())? {
            let cert =
                build_representation(es.causality(), es.conflict()).map_err(|e| e.to_string())?;
            let doc =
                StructureDocument::representation(n, es.causality(), es.conflict(), cert.family);
            document_roundtrip(&doc.to_canonical())?;
            lines.insert(doc.to_canonical());
            total += 1;
        }
        let g = es_to_fg(&event_structures(n).map_err(|e| e.to_string())?[0]);
        document_roundtrip(&StructureDocument::full_graph(n, &g, true).to_canonical())?;
    }
    ensure(lines.len() == total, || {
        format!("{} distinct lines for {total} documents", lines.len())
    })?;

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    std::fs::write(dir.path().join("A000001.txt"), "1 1\n2 4\n").map_err(|e| e.to_string())?;
    let hit =
        oeis_crosscheck("A000001", vec![1, 4], dir.path(), true).map_err(|e| e.to_string())?;
    ensure(hit.match_prefix_length == 2 && hit.agrees(), || {
        format!("{hit:?}")
    })?;
    let mismatch =
        oeis_crosscheck("A000001", vec![1, 5], dir.path(), true).map_err(|e| e.to_string())?;
    ensure(
        mismatch.match_prefix_length == 1 && mismatch.first_mismatch().is_some(),
        || format!("{mismatch:?}"),
    )?;
    let empty = tempfile::tempdir().map_err(|e| e.to_string())?;
    let miss = oeis_crosscheck("A000001", vec![1], empty.path(), true);
    ensure(matches!(miss, Err(OeisError::CacheMiss(_))), || {
        format!("{miss:?}")
    })?;

    Ok(format!(
        "{total} documents roundtrip, offline cache hit/mismatch/miss behave"
    ))
}

fn main() -> ExitCode {
    let mut found = Found::new();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("1 completeness", Box::new(|_| completeness())),
        (
            "2 soundness and exactness",
            Box::new(soundness_and_exactness),
        ),
        (
            "3 structure of representations",
            Box::new(|found: &mut Found| structure_flags(found)),
        ),
        ("4 bijection", Box::new(|_| bijection())),
        ("5 count coincidence", Box::new(|_| count_coincidence())),
        ("6 shared certificate", Box::new(|_| shared_certificate())),
        (
            "7 roundtrips and algebra",
            Box::new(|_| roundtrips_and_algebra()),
        ),
        ("8 document and b-file I/O", Box::new(|_| io())),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run(&mut found) {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
