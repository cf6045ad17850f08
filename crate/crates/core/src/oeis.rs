//! Cross-checking local counts against an OEIS b-file.
//!
//! b-files are fetched from `https://oeis.org/<ID>/b<digits>.txt` and cached
//! verbatim as `<cache_dir>/<ID>.txt`. Offline mode only reads the cache.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use thiserror::Error;

/// Overrides the default cache directory.
pub const CACHE_ENV: &str = "ESFG_CACHE";
pub const DEFAULT_CACHE_DIR: &str = ".esfg-cache";

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("`{0}` is not an OEIS A-number (expected `A` followed by six digits)")]
    InvalidId(String),
    #[error("no cached b-file for {0} and offline mode is on")]
    CacheMiss(String),
    #[error("fetching {url} failed: {reason}")]
    Network { url: String, reason: String },
    #[error("malformed b-file line {line}: `{content}`")]
    MalformedBFile { line: usize, content: String },
    #[error("cache I/O failed: {0}")]
    Io(#[from] io::Error),
}

/// Result of comparing local terms against fetched ones, position by
/// position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisCheck {
    pub sequence_id: String,
    /// Index of the first b-file term, if there are any.
    pub first_index: Option<i64>,
    pub fetched_terms: Vec<BigUint>,
    pub local_terms: Vec<u64>,
    pub match_prefix_length: usize,
}

impl OeisCheck {
    /// Every position both lists have agrees.
    pub fn agrees(&self) -> bool {
        self.match_prefix_length == self.fetched_terms.len().min(self.local_terms.len())
    }

    /// First disagreeing position with both values.
    pub fn first_mismatch(&self) -> Option<(usize, u64, &BigUint)> {
        if self.agrees() {
            return None;
        }
        let i = self.match_prefix_length;
        Some((i, self.local_terms[i], &self.fetched_terms[i]))
    }
}

pub fn validate_sequence_id(id: &str) -> Result<(), OeisError> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(OeisError::InvalidId(id.to_owned()))
    }
}

pub fn b_file_url(id: &str) -> String {
    format!("https://oeis.org/{id}/b{}.txt", &id[1..])
}

/// Cache directory from `ESFG_CACHE`, else `.esfg-cache`.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

/// Parses `index value` lines, skipping blanks and `#` comments.
pub fn parse_b_file(text: &str) -> Result<Vec<(i64, BigUint)>, OeisError> {
    let mut terms = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || OeisError::MalformedBFile {
            line: i + 1,
            content: line.to_owned(),
        };
        let mut parts = trimmed.split_whitespace();
        let (Some(index), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        let value: BigUint = value.parse().map_err(|_| malformed())?;
        terms.push((index, value));
    }
    Ok(terms)
}

/// Source of b-file text for a URL.
pub trait BFileFetcher {
    fn fetch(&self, url: &str) -> Result<String, OeisError>;
}

/// Blocking HTTPS GET.
pub struct HttpFetcher;

impl BFileFetcher for HttpFetcher {
    fn fetch(&self, url: &str) -> Result<String, OeisError> {
        let network = |reason: String| OeisError::Network {
            url: url.to_owned(),
            reason,
        };
        let mut response = ureq::get(url).call().map_err(|e| network(e.to_string()))?;
        response
            .body_mut()
            .read_to_string()
            .map_err(|e| network(e.to_string()))
    }
}

/// Reads the cached b-file for `id`, fetching and caching it unless
/// `offline`.
pub fn load_b_file(
    id: &str,
    cache_dir: &Path,
    offline: bool,
    fetcher: &dyn BFileFetcher,
) -> Result<Vec<(i64, BigUint)>, OeisError> {
    validate_sequence_id(id)?;
    let cached = cache_dir.join(format!("{id}.txt"));
    let text = match fs::read_to_string(&cached) {
        Ok(text) => text,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            if offline {
                return Err(OeisError::CacheMiss(id.to_owned()));
            }
            let text = fetcher.fetch(&b_file_url(id))?;
            // Refuse to cache something that is not a b-file.
            parse_b_file(&text)?;
            fs::create_dir_all(cache_dir)?;
            fs::write(&cached, &text)?;
            text
        }
        Err(e) => return Err(e.into()),
    };
    parse_b_file(&text)
}

/// Longest common prefix of `local` and `fetched`.
pub fn compare_terms(
    sequence_id: &str,
    fetched: Vec<(i64, BigUint)>,
    local_terms: Vec<u64>,
) -> OeisCheck {
    let first_index = fetched.first().map(|(i, _)| *i);
    let fetched_terms: Vec<BigUint> = fetched.into_iter().map(|(_, v)| v).collect();
    let match_prefix_length = fetched_terms
        .iter()
        .zip(&local_terms)
        .take_while(|(f, &l)| **f == BigUint::from(l))
        .count();
    OeisCheck {
        sequence_id: sequence_id.to_owned(),
        first_index,
        fetched_terms,
        local_terms,
        match_prefix_length,
    }
}

/// Fetches (or reads from cache) and compares. A mismatch is a value, not an
/// error.
pub fn oeis_crosscheck(
    sequence_id: &str,
    local_terms: Vec<u64>,
    cache_dir: &Path,
    offline: bool,
) -> Result<OeisCheck, OeisError> {
    oeis_crosscheck_with(sequence_id, local_terms, cache_dir, offline, &HttpFetcher)
}

pub fn oeis_crosscheck_with(
    sequence_id: &str,
    local_terms: Vec<u64>,
    cache_dir: &Path,
    offline: bool,
    fetcher: &dyn BFileFetcher,
) -> Result<OeisCheck, OeisError> {
    let fetched = load_b_file(sequence_id, cache_dir, offline, fetcher)?;
    Ok(compare_terms(sequence_id, fetched, local_terms))
}
