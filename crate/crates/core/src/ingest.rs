//! Roster CSV: one supervisor per line, `name,r1,...,rn`.
//!
//! No header row and no quoting. LF and CRLF are both accepted, blank lines
//! are skipped, and every other malformed line is an error that names its
//! 1-based line number.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::path::Path;

use thiserror::Error;

use crate::domain::{
    AreaSchema, InterestVector, Roster, SupervisorProfile, MAX_RATING, MIN_RATING,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    FieldCount,
    NonNumeric,
    OutOfRange,
    EmptyName,
    DuplicateName,
    EmptyFile,
}

impl ParseErrorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseErrorKind::FieldCount => "FieldCount",
            ParseErrorKind::NonNumeric => "NonNumeric",
            ParseErrorKind::OutOfRange => "OutOfRange",
            ParseErrorKind::EmptyName => "EmptyName",
            ParseErrorKind::DuplicateName => "DuplicateName",
            ParseErrorKind::EmptyFile => "EmptyFile",
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line_number}: {kind}: {detail}")]
pub struct ParseError {
    pub line_number: usize,
    pub kind: ParseErrorKind,
    pub detail: String,
}

impl ParseError {
    fn new(line_number: usize, kind: ParseErrorKind, detail: impl Into<String>) -> Self {
        Self {
            line_number,
            kind,
            detail: detail.into(),
        }
    }
}

/// Failure to load a roster file from disk.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Digits with an optional fractional part and an optional leading minus.
fn is_plain_decimal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let (int, frac) = match digits.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (digits, None),
    };
    let all_digits = |p: &str| !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit());
    all_digits(int) && frac.is_none_or(all_digits)
}

fn parse_rating(field: &str, line_number: usize, column: usize) -> Result<f64, ParseError> {
    if !is_plain_decimal(field) {
        return Err(ParseError::new(
            line_number,
            ParseErrorKind::NonNumeric,
            format!("field {column} {field:?} is not a decimal number"),
        ));
    }
    let value: f64 = field.parse().map_err(|_| {
        ParseError::new(
            line_number,
            ParseErrorKind::NonNumeric,
            format!("field {column} {field:?} is not a decimal number"),
        )
    })?;
    if !(MIN_RATING..=MAX_RATING).contains(&value) {
        return Err(ParseError::new(
            line_number,
            ParseErrorKind::OutOfRange,
            format!("field {column} value {field} is outside [0, 5]"),
        ));
    }
    Ok(value)
}

fn parse_line(
    line: &str,
    line_number: usize,
    schema: &AreaSchema,
) -> Result<SupervisorProfile, ParseError> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    let expected = schema.len() + 1;
    if fields.len() != expected {
        return Err(ParseError::new(
            line_number,
            ParseErrorKind::FieldCount,
            format!(
                "expected {expected} fields (name + {} ratings), found {}",
                schema.len(),
                fields.len()
            ),
        ));
    }
    let name = fields[0];
    if name.is_empty() {
        return Err(ParseError::new(
            line_number,
            ParseErrorKind::EmptyName,
            "name field is empty",
        ));
    }
    let ratings = fields[1..]
        .iter()
        .enumerate()
        .map(|(i, f)| parse_rating(f, line_number, i + 2))
        .collect::<Result<Vec<_>, _>>()?;
    // Range and name were checked above, so these constructors cannot fail.
    let vector = InterestVector::new(ratings).expect("ratings validated");
    Ok(SupervisorProfile::new(name, vector).expect("name validated"))
}

/// Parses roster text. Returns the first failing line as an error.
pub fn parse_roster(text: &str, schema: &AreaSchema) -> Result<Roster, ParseError> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    let mut profiles = Vec::new();
    let mut seen = HashSet::new();
    for (index, raw) in text.split('\n').enumerate() {
        let line_number = index + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() {
            continue;
        }
        let profile = parse_line(line, line_number, schema)?;
        if !seen.insert(profile.name().to_string()) {
            return Err(ParseError::new(
                line_number,
                ParseErrorKind::DuplicateName,
                format!(
                    "supervisor {:?} already appears earlier in the file",
                    profile.name()
                ),
            ));
        }
        profiles.push(profile);
    }
    if profiles.is_empty() {
        return Err(ParseError::new(
            1,
            ParseErrorKind::EmptyFile,
            "no supervisor records",
        ));
    }
    Ok(Roster::new(schema.clone(), profiles).expect("roster invariants checked while parsing"))
}

/// Reads and parses a roster file (UTF-8).
pub fn load_roster(path: impl AsRef<Path>, schema: &AreaSchema) -> Result<Roster, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_roster(&text, schema)?)
}

/// Shortest decimal form that parses back to the same value: `4`, `4.5`, `0.25`.
pub fn format_rating(value: f64) -> String {
    if value == 0.0 {
        // also folds -0.0
        return "0".to_string();
    }
    value.to_string()
}

/// Writes the roster in the same format `parse_roster` reads, LF-terminated.
pub fn serialize_roster(roster: &Roster) -> String {
    let mut out = String::new();
    for profile in roster.profiles() {
        out.push_str(profile.name());
        for &r in profile.vector().as_slice() {
            let _ = write!(out, ",{}", format_rating(r));
        }
        out.push('\n');
    }
    out
}
