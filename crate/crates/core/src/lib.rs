//! String metrics for comparing plaintext rows.
//!
//! * [`cost_model`]: insertion/deletion and replacement costs.
//! * [`normalizer`]: folds characters into shape classes (`a`, `A`, `9`).
//! * [`distance`]: classical and trailing-whitespace-agnostic Levenshtein
//!   distance, with reference implementations.
//! * [`table_detect`]: finds table regions from adjacent-row similarity.

pub mod cost_model;
pub mod distance;
pub mod normalizer;
pub mod table_detect;

pub use cost_model::{Cost, CostModel, ModelError};
pub use distance::{
    distance, levenshtein_standard, levenshtein_ws_agnostic, ws_agnostic_naive,
    ws_agnostic_recursive_unit, Algorithm, DistanceError, DistanceResult,
};
pub use normalizer::{expand_tabs, normalize_line, NormalizationMode};
pub use table_detect::{detect_tables, row_similarity, DetectConfig, TableRegion};
