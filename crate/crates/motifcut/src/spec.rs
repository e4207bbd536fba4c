//! Motif specifications.
//!
//! A specification is a comma separated list of items:
//!
//! * a preset name (`edge`, `triangle`, `path2`, `path3`, `cycleK`, `cliqueK`),
//!   optionally suffixed with `:d` or `:u` to pick the variant;
//! * a motif in the edge-list format, read from `file:PATH` or given inline
//!   with `;` in place of newlines, e.g. `3;u;0 1;1 2`.
//!
//! Presets without a suffix take the kind of the host graph.

use motifcut_core::{Kind, Motif};

use crate::io::{parse_motif, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum SpecError {
    #[error("unknown motif {0:?}")]
    Unknown(String),
    #[error("empty motif specification")]
    Empty,
    #[error("motif {item:?}: {source}")]
    Parse { item: String, source: ParseError },
    #[error("motif {item:?}: {source}")]
    Io { item: String, source: std::io::Error },
}

fn preset(item: &str, default: Kind) -> Result<Motif, SpecError> {
    let (name, kind) = match item.rsplit_once(':') {
        Some((name, "d")) => (name, Kind::Directed),
        Some((name, "u")) => (name, Kind::Undirected),
        Some(_) => return Err(SpecError::Unknown(item.to_string())),
        None => (item, default),
    };
    Motif::preset(name, kind).map_err(|_| SpecError::Unknown(item.to_string()))
}

fn parse_item(item: &str, default: Kind) -> Result<Motif, SpecError> {
    if let Some(path) = item.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|source| SpecError::Io { item: item.to_string(), source })?;
        return parse_motif(&text).map_err(|source| SpecError::Parse { item: item.to_string(), source });
    }
    if item.contains(';') {
        let text = item.replace(';', "\n");
        return parse_motif(&text).map_err(|source| SpecError::Parse { item: item.to_string(), source });
    }
    preset(item, default)
}

/// Parses a motif specification; `default` is the kind used by bare preset names.
pub fn parse_motifs(spec: &str, default: Kind) -> Result<Vec<Motif>, SpecError> {
    let motifs = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| parse_item(item, default))
        .collect::<Result<Vec<_>, _>>()?;
    if motifs.is_empty() {
        return Err(SpecError::Empty);
    }
    Ok(motifs)
}
