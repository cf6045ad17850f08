//! Comparing local counts against an OEIS b-file.
//!
//! ```bash
//! cargo run --example oeis_crosscheck -- A000112 es 4
//! ```
//!
//! Without arguments a throwaway cache is filled with a small b-file so the
//! run is offline.

use esfg::enumeration::{count_es, count_fg};
use esfg::oeis::{default_cache_dir, oeis_crosscheck};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let scratch = tempfile::tempdir().unwrap();
    let (id, kind, upto, cache, offline) = match args.as_slice() {
        [id, kind, upto] => (
            id.clone(),
            kind.clone(),
            upto.parse().unwrap(),
            default_cache_dir(),
            false,
        ),
        _ => {
            std::fs::write(scratch.path().join("A999999.txt"), "0 1\n1 1\n2 4\n3 41\n").unwrap();
            (
                "A999999".to_owned(),
                "es".to_owned(),
                3usize,
                scratch.path().to_path_buf(),
                true,
            )
        }
    };
    let local: Vec<u64> = (0..=upto)
        .map(|n| {
            if kind == "fg" {
                count_fg(n)
            } else {
                count_es(n)
            }
            .unwrap()
        })
        .collect();
    match oeis_crosscheck(&id, local, &cache, offline) {
        Ok(check) => {
            println!(
                "{id}: matching prefix {} of {:?}",
                check.match_prefix_length, check.local_terms
            );
            if let Some((i, mine, theirs)) = check.first_mismatch() {
                println!("first difference at position {i}: {mine} here, {theirs} in the b-file");
            }
        }
        Err(e) => eprintln!("{id}: {e}"),
    }
}
