//! Edit-cost configuration shared by every distance computation.
//!
//! A [`CostModel`] holds a per-character insertion/deletion cost, a table of
//! replacement costs for ordered character pairs, and the character that is
//! treated as whitespace when a string runs out. Models are immutable once
//! built and can be loaded from (and written back to) a small JSON document:
//!
//! ```json
//! {
//!   "indel_default": 1,
//!   "indel": { "x": 2 },
//!   "replace_default": 999,
//!   "replace": [ { "a": "a", "b": "A", "cost": 2 } ],
//!   "symmetric": true,
//!   "whitespace_char": " "
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Non-negative integer edit cost.
pub type Cost = u64;

/// Errors raised while building or loading a [`CostModel`].
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("malformed cost model document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("{key}: cost must be non-negative, got {value}")]
    NegativeCost { key: String, value: i64 },
    #[error("{key}: replacing a character with itself must cost 0, got {value}")]
    NonZeroIdentity { key: String, value: i64 },
    #[error("{key}: model is declared symmetric but the reverse pair costs differ ({forward} vs {reverse})")]
    Asymmetric {
        key: String,
        forward: Cost,
        reverse: Cost,
    },
    #[error("{key}: declared more than once with different costs")]
    Conflict { key: String },
    #[error("{key}: expected exactly one character, got {value:?}")]
    NotAChar { key: String, value: String },
}

/// Insertion/deletion and replacement costs.
///
/// `replace(c, c)` is always 0. Pairs without an explicit entry cost the
/// model's replacement default; characters without an explicit indel entry
/// cost the indel default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostModel {
    indel_default: Cost,
    indel: BTreeMap<char, Cost>,
    replace_default: Cost,
    replace: BTreeMap<(char, char), Cost>,
    symmetric: bool,
    whitespace_char: char,
}

impl CostModel {
    /// An empty symmetric model: every indel costs `indel_default`, every
    /// replacement of distinct characters costs `replace_default`.
    pub fn new(indel_default: Cost, replace_default: Cost) -> Self {
        Self {
            indel_default,
            indel: BTreeMap::new(),
            replace_default,
            replace: BTreeMap::new(),
            symmetric: true,
            whitespace_char: ' ',
        }
    }

    /// Like [`CostModel::new`], but replacement entries apply to the ordered
    /// pair only.
    pub fn directed(indel_default: Cost, replace_default: Cost) -> Self {
        Self {
            symmetric: false,
            ..Self::new(indel_default, replace_default)
        }
    }

    pub fn with_whitespace_char(mut self, c: char) -> Self {
        self.whitespace_char = c;
        self
    }

    pub fn set_indel(&mut self, c: char, cost: Cost) {
        self.indel.insert(c, cost);
    }

    /// Sets the cost of replacing `a` with `b` (and `b` with `a` when the
    /// model is symmetric). Identity entries must be 0 and are not stored.
    pub fn set_replace(&mut self, a: char, b: char, cost: Cost) -> Result<(), ModelError> {
        if a == b {
            if cost != 0 {
                return Err(ModelError::NonZeroIdentity {
                    key: pair_key(a, b),
                    value: cost as i64,
                });
            }
            return Ok(());
        }
        self.replace.insert((a, b), cost);
        if self.symmetric {
            self.replace.insert((b, a), cost);
        }
        Ok(())
    }

    pub fn indel(&self, c: char) -> Cost {
        self.indel.get(&c).copied().unwrap_or(self.indel_default)
    }

    pub fn replace(&self, a: char, b: char) -> Cost {
        if a == b {
            return 0;
        }
        self.replace
            .get(&(a, b))
            .copied()
            .unwrap_or(self.replace_default)
    }

    pub fn indel_default(&self) -> Cost {
        self.indel_default
    }

    pub fn replace_default(&self) -> Cost {
        self.replace_default
    }

    pub fn whitespace_char(&self) -> char {
        self.whitespace_char
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Cheapest way to get rid of `c` once the other string has run out:
    /// delete it, or turn it into the other side's imagined whitespace.
    pub fn to_whitespace_cost(&self, c: char) -> Cost {
        self.indel(c).min(self.replace(c, self.whitespace_char))
    }

    /// Cheapest way to produce `c` once this string has run out: insert it,
    /// or turn this side's imagined whitespace into it.
    pub fn from_whitespace_cost(&self, c: char) -> Cost {
        self.indel(c).min(self.replace(self.whitespace_char, c))
    }

    /// Characters with an explicit entry anywhere in the model, plus the
    /// whitespace character.
    pub fn alphabet(&self) -> Vec<char> {
        let mut chars: Vec<char> = self
            .indel
            .keys()
            .copied()
            .chain(self.replace.keys().flat_map(|&(a, b)| [a, b]))
            .chain(std::iter::once(self.whitespace_char))
            .collect();
        chars.sort_unstable();
        chars.dedup();
        chars
    }

    /// Parses and validates a JSON cost model document.
    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let file: ModelFile = serde_json::from_str(text)?;
        file.into_model()
    }

    /// Renders the model as a JSON document accepted by [`CostModel::from_json`].
    pub fn to_json(&self) -> String {
        let replace = self
            .replace
            .iter()
            .filter(|((a, b), _)| !self.symmetric || a < b)
            .map(|(&(a, b), &cost)| ReplaceEntry {
                a: a.to_string(),
                b: b.to_string(),
                cost: cost as i64,
            })
            .collect();
        let file = ModelFile {
            indel_default: self.indel_default as i64,
            indel: self
                .indel
                .iter()
                .map(|(c, &cost)| (c.to_string(), cost as i64))
                .collect(),
            replace_default: self.replace_default as i64,
            replace_identity: None,
            replace,
            symmetric: self.symmetric,
            whitespace_char: self.whitespace_char.to_string(),
        };
        serde_json::to_string_pretty(&file).expect("cost model serialization is infallible")
    }

    /// Unit costs: every insertion, deletion and replacement of distinct
    /// characters costs 1.
    pub fn unit() -> Self {
        Self::new(1, 1)
    }

    /// The replacement matrix over `a A 9 ( ) , $ <space>` with unit
    /// insertion/deletion. Pairs outside the matrix cost 999.
    pub fn appendix_a() -> Self {
        let mut model = Self::new(1, 999);
        for (row, &a) in APPENDIX_ALPHABET.iter().enumerate() {
            for (col, &b) in APPENDIX_ALPHABET.iter().enumerate() {
                model.replace.insert((a, b), APPENDIX_MATRIX[row][col]);
            }
        }
        // the diagonal is implicit
        model.replace.retain(|&(a, b), _| a != b);
        model
    }

    /// Looks up a built-in model by its CLI name.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "unit" => Some(Self::unit()),
            "appendix-a" | "appendix_a" => Some(Self::appendix_a()),
            _ => None,
        }
    }
}

impl Default for CostModel {
    fn default() -> Self {
        Self::unit()
    }
}

/// Row/column order of [`APPENDIX_MATRIX`].
pub const APPENDIX_ALPHABET: [char; 8] = ['a', 'A', '9', '(', ')', ',', '$', ' '];

/// `APPENDIX_MATRIX[r][c]` is the cost of replacing `APPENDIX_ALPHABET[r]`
/// with `APPENDIX_ALPHABET[c]`.
#[rustfmt::skip]
pub const APPENDIX_MATRIX: [[Cost; 8]; 8] = [
    //  a    A    9    (    )    ,    $   ' '
    [   0,   2,   4, 999, 999, 999, 999,   1], // a
    [   2,   0,   4, 999, 999, 999, 999,   1], // A
    [   4,   4,   0, 999, 999, 999, 999,   4], // 9
    [ 999, 999, 999,   0, 999, 999, 999, 999], // (
    [ 999, 999, 999, 999,   0, 999, 999, 999], // )
    [ 999, 999, 999, 999, 999,   0, 999, 999], // ,
    [ 999, 999, 999, 999, 999, 999,   0, 999], // $
    [   1,   1,   4, 999, 999, 999, 999,   0], // ' '
];

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    indel_default: i64,
    #[serde(default)]
    indel: BTreeMap<String, i64>,
    replace_default: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    replace_identity: Option<i64>,
    #[serde(default)]
    replace: Vec<ReplaceEntry>,
    #[serde(default = "default_true")]
    symmetric: bool,
    #[serde(default = "default_whitespace")]
    whitespace_char: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReplaceEntry {
    a: String,
    b: String,
    cost: i64,
}

fn default_true() -> bool {
    true
}

fn default_whitespace() -> String {
    " ".to_string()
}

impl ModelFile {
    fn into_model(self) -> Result<CostModel, ModelError> {
        let indel_default = non_negative("indel_default", self.indel_default)?;
        let replace_default = non_negative("replace_default", self.replace_default)?;
        if let Some(identity) = self.replace_identity {
            if identity != 0 {
                return Err(ModelError::NonZeroIdentity {
                    key: "replace_identity".to_string(),
                    value: identity,
                });
            }
        }
        let whitespace_char = single_char("whitespace_char", &self.whitespace_char)?;

        let mut model = CostModel {
            indel_default,
            indel: BTreeMap::new(),
            replace_default,
            replace: BTreeMap::new(),
            symmetric: self.symmetric,
            whitespace_char,
        };

        for (key, value) in &self.indel {
            let c = single_char(&format!("indel[{key:?}]"), key)?;
            let cost = non_negative(&format!("indel[{key:?}]"), *value)?;
            model.indel.insert(c, cost);
        }

        for entry in &self.replace {
            let a = single_char("replace.a", &entry.a)?;
            let b = single_char("replace.b", &entry.b)?;
            let key = pair_key(a, b);
            if a == b {
                if entry.cost != 0 {
                    return Err(ModelError::NonZeroIdentity {
                        key,
                        value: entry.cost,
                    });
                }
                continue;
            }
            let cost = non_negative(&key, entry.cost)?;
            if let Some(&existing) = model.replace.get(&(a, b)) {
                if existing != cost {
                    return Err(if model.symmetric {
                        ModelError::Asymmetric {
                            key,
                            forward: existing,
                            reverse: cost,
                        }
                    } else {
                        ModelError::Conflict { key }
                    });
                }
            }
            model.replace.insert((a, b), cost);
            if model.symmetric {
                model.replace.insert((b, a), cost);
            }
        }

        Ok(model)
    }
}

fn pair_key(a: char, b: char) -> String {
    format!("replace[{a:?},{b:?}]")
}

fn non_negative(key: &str, value: i64) -> Result<Cost, ModelError> {
    Cost::try_from(value).map_err(|_| ModelError::NegativeCost {
        key: key.to_string(),
        value,
    })
}

fn single_char(key: &str, value: &str) -> Result<char, ModelError> {
    let mut chars = value.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(ModelError::NotAChar {
            key: key.to_string(),
            value: value.to_string(),
        }),
    }
}
