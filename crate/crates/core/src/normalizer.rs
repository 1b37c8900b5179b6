//! Maps raw text to character shape classes so that distances compare layout
//! rather than content.

use std::fmt;
use std::str::FromStr;

/// How characters are folded into shape classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum NormalizationMode {
    /// Letters become `a`, digits become `9`.
    Simple,
    /// Lowercase letters become `a`, uppercase letters `A`, digits `9`.
    #[default]
    Cased,
    /// Identity.
    None,
}

impl NormalizationMode {
    pub fn normalize_char(self, c: char) -> char {
        match self {
            NormalizationMode::None => c,
            NormalizationMode::Simple => {
                if c.is_alphabetic() {
                    'a'
                } else if c.is_numeric() {
                    '9'
                } else {
                    c
                }
            }
            NormalizationMode::Cased => {
                if c.is_uppercase() {
                    'A'
                } else if c.is_alphabetic() {
                    // lowercase, titlecase-less scripts, and modifier letters
                    'a'
                } else if c.is_numeric() {
                    '9'
                } else {
                    c
                }
            }
        }
    }
}

impl FromStr for NormalizationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simple" => Ok(Self::Simple),
            "cased" => Ok(Self::Cased),
            "none" => Ok(Self::None),
            other => Err(format!(
                "unknown normalization mode {other:?} (expected simple, cased or none)"
            )),
        }
    }
}

impl fmt::Display for NormalizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Simple => "simple",
            Self::Cased => "cased",
            Self::None => "none",
        })
    }
}

/// Normalizes one line. The result has the same number of characters as the
/// input and whitespace is never touched.
pub fn normalize_line(line: &str, mode: NormalizationMode) -> String {
    match mode {
        NormalizationMode::None => line.to_string(),
        _ => line.chars().map(|c| mode.normalize_char(c)).collect(),
    }
}

/// Replaces each tab with spaces up to the next multiple of `tab_width`
/// columns. Columns are counted in characters.
pub fn expand_tabs(line: &str, tab_width: usize) -> String {
    assert!(tab_width >= 1, "tab width must be at least 1");
    if !line.contains('\t') {
        return line.to_string();
    }
    let mut out = String::with_capacity(line.len() + tab_width);
    let mut column = 0usize;
    for c in line.chars() {
        if c == '\t' {
            let pad = tab_width - column % tab_width;
            out.extend(std::iter::repeat_n(' ', pad));
            column += pad;
        } else {
            out.push(c);
            column += 1;
        }
    }
    out
}
