//! JSON documents for event structures, full graphs and representations.
//!
//! ```json
//! {"kind":"es","universe":2,"causality":[[0,0],[1,1]],"conflict":[[0,1],[1,0]]}
//! {"kind":"fg","universe":2,"directed":[[0,0],[1,1]],"undirected":[],"family":[[0,[1]],[1,[0]]]}
//! ```
//!
//! `es` and `representation` documents carry `causality` and `conflict`;
//! `fg` documents carry `directed` and `undirected`. `family` is optional
//! everywhere and required for `representation`. Canonical output sorts
//! every list and has no insignificant whitespace, so equal structures
//! serialize to equal bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::event_structure::EventStructure;
use crate::family::{Label, LabelSet, SetFamily};
use crate::full_graph::FullGraph;
use crate::relation::{Relation, VertexId, MAX_UNIVERSE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DocumentKind {
    EventStructure,
    FullGraph,
    Representation,
}

impl DocumentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DocumentKind::EventStructure => "es",
            DocumentKind::FullGraph => "fg",
            DocumentKind::Representation => "representation",
        }
    }

    fn field_names(self) -> (&'static str, &'static str) {
        match self {
            DocumentKind::FullGraph => ("directed", "undirected"),
            _ => ("causality", "conflict"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("universe {0} exceeds the supported maximum of {MAX_UNIVERSE}")]
    UniverseTooLarge(usize),
    #[error("vertex {vertex} in `{field}` is outside a universe of size {universe}")]
    OutOfBounds {
        field: &'static str,
        vertex: VertexId,
        universe: usize,
    },
    #[error("`{0}` is not symmetric")]
    Asymmetric(&'static str),
    #[error("family key {0} appears more than once")]
    DuplicateFamilyKey(VertexId),
}

impl DocumentError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            DocumentError::Malformed(_) => "malformed",
            DocumentError::UniverseTooLarge(_) => "universe-too-large",
            DocumentError::OutOfBounds { .. } => "out-of-bounds",
            DocumentError::Asymmetric(_) => "asymmetric",
            DocumentError::DuplicateFamilyKey(_) => "duplicate-family-key",
        }
    }
}

/// A parsed, validated document. `directed` holds causality or directed
/// edges; `undirected` holds conflict or undirected edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureDocument {
    pub kind: DocumentKind,
    pub universe: usize,
    pub directed: Relation,
    pub undirected: Relation,
    pub family: Option<SetFamily>,
}

type PairList = Vec<[VertexId; 2]>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    kind: String,
    universe: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    causality: Option<PairList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    conflict: Option<PairList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    directed: Option<PairList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    undirected: Option<PairList>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<Vec<(VertexId, Vec<Label>)>>,
}

impl StructureDocument {
    pub fn event_structure(universe: usize, es: &EventStructure) -> Self {
        Self::build(
            DocumentKind::EventStructure,
            universe,
            es.causality(),
            es.conflict(),
            None,
        )
    }

    pub fn full_graph(universe: usize, g: &FullGraph, with_certificate: bool) -> Self {
        let family = if with_certificate {
            g.certificate().cloned()
        } else {
            None
        };
        Self::build(
            DocumentKind::FullGraph,
            universe,
            g.directed(),
            g.undirected(),
            family,
        )
    }

    pub fn representation(
        universe: usize,
        causality: &Relation,
        conflict: &Relation,
        family: SetFamily,
    ) -> Self {
        Self::build(
            DocumentKind::Representation,
            universe,
            causality,
            conflict,
            Some(family),
        )
    }

    fn build(
        kind: DocumentKind,
        universe: usize,
        directed: &Relation,
        undirected: &Relation,
        family: Option<SetFamily>,
    ) -> Self {
        let universe = universe.max(directed.universe()).max(undirected.universe());
        StructureDocument {
            kind,
            universe,
            directed: directed.with_universe(universe).expect("fits"),
            undirected: undirected.with_universe(universe).expect("fits"),
            family,
        }
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, DocumentError> {
        let raw: RawDocument =
            serde_json::from_slice(bytes).map_err(|e| DocumentError::Malformed(e.to_string()))?;
        let kind = match raw.kind.as_str() {
            "es" => DocumentKind::EventStructure,
            "fg" => DocumentKind::FullGraph,
            "representation" => DocumentKind::Representation,
            other => return Err(DocumentError::Malformed(format!("unknown kind `{other}`"))),
        };
        if raw.universe > MAX_UNIVERSE {
            return Err(DocumentError::UniverseTooLarge(raw.universe));
        }
        let (first_name, second_name) = kind.field_names();
        let (first, second, stray) = match kind {
            DocumentKind::FullGraph => {
                (raw.directed, raw.undirected, raw.causality.or(raw.conflict))
            }
            _ => (raw.causality, raw.conflict, raw.directed.or(raw.undirected)),
        };
        if stray.is_some() {
            return Err(DocumentError::Malformed(format!(
                "a `{}` document takes `{first_name}` and `{second_name}` only",
                kind.as_str()
            )));
        }
        let missing = |name: &str| DocumentError::Malformed(format!("missing field `{name}`"));
        let universe = raw.universe;
        let directed = to_relation(
            first_name,
            universe,
            &first.ok_or_else(|| missing(first_name))?,
        )?;
        let undirected = to_relation(
            second_name,
            universe,
            &second.ok_or_else(|| missing(second_name))?,
        )?;
        if !undirected.is_symmetric() {
            return Err(DocumentError::Asymmetric(second_name));
        }
        let family = match raw.family {
            None if kind == DocumentKind::Representation => return Err(missing("family")),
            None => None,
            Some(entries) => {
                let mut family = SetFamily::new();
                for (vertex, labels) in entries {
                    if vertex >= universe {
                        return Err(DocumentError::OutOfBounds {
                            field: "family",
                            vertex,
                            universe,
                        });
                    }
                    if family.contains_key(vertex) {
                        return Err(DocumentError::DuplicateFamilyKey(vertex));
                    }
                    family = family.paste(vertex, labels.into_iter().collect::<LabelSet>());
                }
                Some(family)
            }
        };
        Ok(StructureDocument {
            kind,
            universe,
            directed,
            undirected,
            family,
        })
    }

    fn to_raw(&self) -> RawDocument {
        let pairs = |r: &Relation| Some(r.pairs().map(|(x, y)| [x, y]).collect::<PairList>());
        let family = self
            .family
            .as_ref()
            .map(|f| f.iter().map(|(k, s)| (k, s.iter().collect())).collect());
        let mut raw = RawDocument {
            kind: self.kind.as_str().to_owned(),
            universe: self.universe,
            causality: None,
            conflict: None,
            directed: None,
            undirected: None,
            family,
        };
        match self.kind {
            DocumentKind::FullGraph => {
                raw.directed = pairs(&self.directed);
                raw.undirected = pairs(&self.undirected);
            }
            _ => {
                raw.causality = pairs(&self.directed);
                raw.conflict = pairs(&self.undirected);
            }
        }
        raw
    }

    /// Compact canonical JSON (no trailing newline).
    pub fn to_canonical(&self) -> String {
        serde_json::to_string(&self.to_raw()).expect("plain data serializes")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("plain data serializes")
    }
}

fn to_relation(
    field: &'static str,
    universe: usize,
    pairs: &PairList,
) -> Result<Relation, DocumentError> {
    if let Some(&[x, y]) = pairs.iter().find(|&&[x, y]| x >= universe || y >= universe) {
        return Err(DocumentError::OutOfBounds {
            field,
            vertex: if x >= universe { x } else { y },
            universe,
        });
    }
    Ok(Relation::from_pairs(universe, pairs.iter().map(|&[x, y]| (x, y))).expect("bounds checked"))
}
