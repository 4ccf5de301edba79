//! On-disk form of a set system.
//!
//! JSON:
//!
//! ```text
//! {
//!   "ground": 3,
//!   "sets": [
//!     [],
//!     [1],
//!     [1, 2]
//!   ]
//! }
//! ```
//!
//! Plain text (`.txt`): a `ground N` header, then one set per line as
//! comma-separated indices, `-` for the empty set. `#` starts a comment line.
//!
//! Writers sort sets by size, then lexicographically.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::system::{GroundSet, SetSystem, SubsetMask, MAX_GROUND};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("invalid JSON document: {0}")]
    Json(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("ground size {0} outside 1..={MAX_GROUND}")]
    Ground(u32),
    #[error("set #{index} {set:?}: {message}")]
    Entry {
        index: usize,
        set: Vec<u32>,
        message: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl Format {
    /// `.txt` selects plain text; anything else is JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("txt") => Format::Text,
            _ => Format::Json,
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" | "txt" => Ok(Format::Text),
            other => Err(format!("unknown format `{other}` (expected json|text)")),
        }
    }
}

/// A set system as ground size plus 1-based element lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub ground: u32,
    pub sets: Vec<Vec<u32>>,
}

impl SystemDocument {
    /// Document for `sys`, sets ordered by (size, lexicographic).
    pub fn from_system(sys: &SetSystem) -> Self {
        let mut sets: Vec<Vec<u32>> = sys.iter().map(|m| m.elements().collect()).collect();
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SystemDocument {
            ground: sys.ground().size(),
            sets,
        }
    }

    /// Validates and converts, naming the first offending entry.
    pub fn to_system(&self) -> Result<SetSystem, DocumentError> {
        let ground = GroundSet::new(self.ground).map_err(|_| DocumentError::Ground(self.ground))?;
        let entry = |index: usize, set: &[u32], message: String| DocumentError::Entry {
            index: index + 1,
            set: set.to_vec(),
            message,
        };
        let mut seen = std::collections::HashMap::with_capacity(self.sets.len());
        let mut masks = Vec::with_capacity(self.sets.len());
        for (i, set) in self.sets.iter().enumerate() {
            if let Some(&e) = set.iter().find(|&&e| !ground.contains_element(e)) {
                return Err(entry(i, set, format!("element {e} outside 1..={}", self.ground)));
            }
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(entry(i, set, "elements not strictly increasing".into()));
            }
            let mask = SubsetMask::from_elements(set.iter().copied());
            if let Some(first) = seen.insert(mask, i) {
                return Err(entry(i, set, format!("duplicate of set #{}", first + 1)));
            }
            masks.push(mask);
        }
        Ok(SetSystem::new(ground, masks).expect("validated above"))
    }

    pub fn parse(input: &str, format: Format) -> Result<Self, DocumentError> {
        match format {
            Format::Json => serde_json::from_str(input).map_err(|e| DocumentError::Json(e.to_string())),
            Format::Text => parse_text(input),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Text => self.render_text(),
        }
    }

    /// JSON with one set per line; stable byte-for-byte.
    pub fn render_json(&self) -> String {
        let mut out = String::new();
        self.write_json(&mut out, 0);
        out.push('\n');
        out
    }

    /// Writes the JSON object at the given indentation depth, without a
    /// trailing newline.
    pub(crate) fn write_json(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let _ = write!(out, "{{\n{pad}  \"ground\": {},\n{pad}  \"sets\": [", self.ground);
        for (i, set) in self.sets.iter().enumerate() {
            let items: Vec<String> = set.iter().map(u32::to_string).collect();
            let sep = if i + 1 < self.sets.len() { "," } else { "" };
            let _ = write!(out, "\n{pad}    [{}]{sep}", items.join(", "));
        }
        if !self.sets.is_empty() {
            let _ = write!(out, "\n{pad}  ");
        }
        let _ = write!(out, "]\n{pad}}}");
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("ground {}\n", self.ground);
        for set in &self.sets {
            if set.is_empty() {
                out.push('-');
            } else {
                let items: Vec<String> = set.iter().map(u32::to_string).collect();
                out.push_str(&items.join(","));
            }
            out.push('\n');
        }
        out
    }
}

fn parse_text(input: &str) -> Result<SystemDocument, DocumentError> {
    let mut ground = None;
    let mut sets = Vec::new();
    for (n, raw) in input.lines().enumerate() {
        let line = raw.trim();
        let lineno = n + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax = |message: String| DocumentError::Syntax {
            line: lineno,
            message,
        };
        if ground.is_none() {
            let value = line
                .strip_prefix("ground")
                .map(str::trim)
                .ok_or_else(|| syntax("expected `ground N` header".into()))?;
            ground = Some(
                value
                    .parse::<u32>()
                    .map_err(|_| syntax(format!("bad ground size `{value}`")))?,
            );
            continue;
        }
        if line == "-" {
            sets.push(Vec::new());
            continue;
        }
        let set = line
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| syntax(format!("bad element `{tok}`")))
            })
            .collect::<Result<Vec<u32>, _>>()?;
        sets.push(set);
    }
    let ground = ground.ok_or(DocumentError::Syntax {
        line: 0,
        message: "missing `ground N` header".into(),
    })?;
    Ok(SystemDocument { ground, sets })
}
