//! The `esfg` command line.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bijection::{es_to_fg_parts, fg_to_es};
use crate::document::{DocumentKind, StructureDocument};
use crate::dot::export_dot;
use crate::enumeration::{count_es, count_fg, emit_structures, StructureKind, DEFAULT_LIMIT};
use crate::event_structure::is_event_structure;
use crate::full_graph::{is_fg_representation, is_full_graph};
use crate::oeis::{compare_terms, default_cache_dir, load_b_file, HttpFetcher};
use crate::representation::{build_representation, RepresentationCertificate};
use crate::suite::run_theorem_suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest n run without `--allow-large`.
const FAST_LIMIT: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "esfg",
    version,
    about = "Event structures, full graphs and their set representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Es,
    Fg,
}

impl From<Kind> for StructureKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Es => StructureKind::EventStructure,
            Kind::Fg => StructureKind::FullGraph,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a document against the axioms of its kind.
    Check {
        /// Document path, or `-` for stdin.
        file: PathBuf,
    },
    /// Build a set representation of an event structure.
    Represent {
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Convert between event structures and full graphs.
    Convert {
        #[arg(long, value_enum)]
        to: Kind,
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Enumerate every labeled structure on n vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        count_only: bool,
        /// Write `<kind>-n<K>.jsonl` into this directory instead of stdout.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Permit n = 5.
        #[arg(long)]
        allow_large: bool,
    },
    /// Run the theorem suite for every n up to K.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        allow_large: bool,
    },
    /// Render a document in Graphviz dot.
    Dot {
        file: PathBuf,
        /// Draw only covering pairs of the order.
        #[arg(long)]
        hasse: bool,
    },
    /// Compare local counts with an OEIS b-file.
    Oeis {
        #[arg(long)]
        sequence: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        upto: usize,
        #[arg(long)]
        offline: bool,
        /// Defaults to $ESFG_CACHE, else `.esfg-cache`.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
}

/// Outcome of a subcommand that did not fail on input.
type Outcome = Result<i32, String>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file } => check(&read_document(&file)?, out),
        Command::Represent { file, pretty } => represent(&read_document(&file)?, pretty, out),
        Command::Convert { to, file, pretty } => convert(&read_document(&file)?, to, pretty, out),
        Command::Enumerate {
            n,
            kind,
            count_only,
            emit,
            allow_large,
        } => enumerate(n, kind, count_only, emit.as_deref(), allow_large, out),
        Command::Verify { n, allow_large } => verify(n, allow_large, out),
        Command::Dot { file, hasse } => {
            let doc = read_document(&file)?;
            let dot = export_dot(&doc, hasse).map_err(|e| e.to_string())?;
            out.write_all(dot.as_bytes()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Oeis {
            sequence,
            kind,
            upto,
            offline,
            cache_dir,
            allow_large,
        } => oeis(&sequence, kind, upto, offline, cache_dir, allow_large, out),
    }
}

fn io_err(e: io::Error) -> String {
    e.to_string()
}

fn read_document(path: &Path) -> Result<StructureDocument, String> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_err)?;
        buf
    } else {
        fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?
    };
    StructureDocument::parse(&bytes).map_err(|e| format!("[{}] {e}", e.code()))
}

fn write_doc(doc: &StructureDocument, pretty: bool, out: &mut dyn Write) -> Result<(), String> {
    let text = if pretty {
        doc.to_pretty()
    } else {
        doc.to_canonical()
    };
    writeln!(out, "{text}").map_err(io_err)
}

fn check(doc: &StructureDocument, out: &mut dyn Write) -> Outcome {
    let mut problems = Vec::new();
    match doc.kind {
        DocumentKind::EventStructure | DocumentKind::Representation => {
            let diagnostic = is_event_structure(&doc.directed, &doc.undirected);
            if !diagnostic.is_valid() {
                problems.push(diagnostic.to_string());
            }
            if let Some(family) = &doc.family {
                let cert = RepresentationCertificate {
                    family: family.clone(),
                    for_causality: doc.directed.clone(),
                    for_conflict: doc.undirected.clone(),
                    fresh_label_bound: family.next_fresh_label(),
                };
                if !cert.verify() {
                    problems.push(
                        "family is not an injective, empty-free representation keyed by the events"
                            .into(),
                    );
                }
            }
        }
        DocumentKind::FullGraph => {
            if let Some(r) = is_full_graph(&doc.directed, &doc.undirected, false).rejection {
                problems.push(format!("not a full graph: {r}"));
            }
            if let Some(family) = &doc.family {
                let ok = family.key_set() == doc.directed.field()
                    && family.is_injective()
                    && !family.has_empty_set()
                    && is_fg_representation(family, &doc.directed, &doc.undirected);
                if !ok {
                    problems.push("family is not an injective, empty-free fg-representation keyed by the vertices".into());
                }
            }
        }
    }
    if problems.is_empty() {
        writeln!(out, "ok: valid {}", doc.kind.as_str()).map_err(io_err)?;
        Ok(EXIT_OK)
    } else {
        for p in problems {
            writeln!(out, "violation: {p}").map_err(io_err)?;
        }
        Ok(EXIT_VIOLATION)
    }
}

fn represent(doc: &StructureDocument, pretty: bool, out: &mut dyn Write) -> Outcome {
    if doc.kind == DocumentKind::FullGraph {
        return Err("`represent` expects an event structure document".into());
    }
    match build_representation(&doc.directed, &doc.undirected) {
        Ok(cert) => {
            let rep = StructureDocument::representation(
                doc.universe,
                &doc.directed,
                &doc.undirected,
                cert.family,
            );
            write_doc(&rep, pretty, out)?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "violation: {e}").map_err(io_err)?;
            Ok(EXIT_VIOLATION)
        }
    }
}

fn convert(doc: &StructureDocument, to: Kind, pretty: bool, out: &mut dyn Write) -> Outcome {
    let converted = match (doc.kind, to) {
        (DocumentKind::FullGraph, Kind::Fg) | (DocumentKind::EventStructure, Kind::Es) => {
            doc.clone()
        }
        (DocumentKind::Representation, Kind::Es) => StructureDocument {
            kind: DocumentKind::EventStructure,
            family: None,
            ..doc.clone()
        },
        (DocumentKind::EventStructure | DocumentKind::Representation, Kind::Fg) => {
            match es_to_fg_parts(&doc.directed, &doc.undirected) {
                Ok(g) => StructureDocument::full_graph(doc.universe, &g, true),
                Err(e) => {
                    writeln!(out, "violation: {e}").map_err(io_err)?;
                    return Ok(EXIT_VIOLATION);
                }
            }
        }
        (DocumentKind::FullGraph, Kind::Es) => match fg_to_es(&doc.directed, &doc.undirected) {
            Ok(es) => StructureDocument::event_structure(doc.universe, &es),
            Err(e) => {
                writeln!(out, "violation: not a full graph: {e}").map_err(io_err)?;
                return Ok(EXIT_VIOLATION);
            }
        },
    };
    write_doc(&converted, pretty, out)?;
    Ok(EXIT_OK)
}

fn size_gate(n: usize, allow_large: bool) -> Result<(), String> {
    if n > DEFAULT_LIMIT {
        return Err(format!(
            "n = {n} exceeds the enumeration limit of {DEFAULT_LIMIT}"
        ));
    }
    if n > FAST_LIMIT && !allow_large {
        return Err(format!(
            "n = {n} can take a long time; pass --allow-large to run it"
        ));
    }
    Ok(())
}

fn count(n: usize, kind: Kind) -> Result<u64, String> {
    match kind {
        Kind::Es => count_es(n),
        Kind::Fg => count_fg(n),
    }
    .map_err(|e| e.to_string())
}

fn enumerate(
    n: usize,
    kind: Kind,
    count_only: bool,
    emit: Option<&Path>,
    allow_large: bool,
    out: &mut dyn Write,
) -> Outcome {
    size_gate(n, allow_large)?;
    if count_only {
        writeln!(out, "{}", count(n, kind)?).map_err(io_err)?;
        return Ok(EXIT_OK);
    }
    match emit {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(io_err)?;
            let name = match kind {
                Kind::Es => format!("es-n{n}.jsonl"),
                Kind::Fg => format!("fg-n{n}.jsonl"),
            };
            let path = dir.join(name);
            let mut file = io::BufWriter::new(fs::File::create(&path).map_err(io_err)?);
            let written = emit_structures(n, kind.into(), &mut file).map_err(|e| e.to_string())?;
            writeln!(out, "{written} records written to {}", path.display()).map_err(io_err)?;
        }
        None => {
            emit_structures(n, kind.into(), out).map_err(|e| e.to_string())?;
        }
    }
    Ok(EXIT_OK)
}

fn verify(n: usize, allow_large: bool, out: &mut dyn Write) -> Outcome {
    size_gate(n, allow_large)?;
    let report = run_theorem_suite(n).map_err(|e| e.to_string())?;
    for check in &report.checks {
        writeln!(out, "{check}").map_err(io_err)?;
    }
    Ok(if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn oeis(
    sequence: &str,
    kind: Kind,
    upto: usize,
    offline: bool,
    cache_dir: Option<PathBuf>,
    allow_large: bool,
    out: &mut dyn Write,
) -> Outcome {
    size_gate(upto, allow_large)?;
    let cache_dir = cache_dir.unwrap_or_else(default_cache_dir);
    let fetched =
        load_b_file(sequence, &cache_dir, offline, &HttpFetcher).map_err(|e| e.to_string())?;
    // Local terms start at the b-file's own offset.
    let first = fetched.first().map_or(0, |(i, _)| *i).max(0) as usize;
    let local = (first..=upto)
        .map(|n| count(n, kind))
        .collect::<Result<Vec<_>, _>>()?;
    let check = compare_terms(sequence, fetched, local);
    writeln!(
        out,
        "{}: {} local terms from n={first}, {} fetched, matching prefix {}",
        check.sequence_id,
        check.local_terms.len(),
        check.fetched_terms.len(),
        check.match_prefix_length
    )
    .map_err(io_err)?;
    match check.first_mismatch() {
        Some((i, local, fetched)) => writeln!(
            out,
            "mismatch at n={}: local {local}, OEIS {fetched}",
            first + i
        ),
        None => writeln!(out, "all compared terms agree"),
    }
    .map_err(io_err)?;
    Ok(EXIT_OK)
}
