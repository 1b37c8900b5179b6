//! Locates table regions in plaintext by comparing adjacent rows.
//!
//! Each line is tab-expanded and normalized, then every pair of adjacent
//! non-blank lines is scored with [`row_similarity`]. A region is a maximal
//! run of consecutive non-blank lines whose adjacent similarities all reach
//! the threshold, kept only if it spans at least `min_rows` lines.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cost_model::{Cost, CostModel};
use crate::distance::levenshtein_ws_agnostic_with_limit;
use crate::normalizer::{expand_tabs, normalize_line, NormalizationMode};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("threshold must lie in [0, 1], got {0}")]
    Threshold(f64),
    #[error("min_rows must be at least 2, got {0}")]
    MinRows(usize),
    #[error("tab_width must be at least 1, got {0}")]
    TabWidth(usize),
}

/// A detected table: inclusive 0-based line range and the mean adjacent-row
/// similarity inside it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRegion {
    pub start_line: usize,
    pub end_line: usize,
    pub score: f64,
}

impl TableRegion {
    pub fn line_count(&self) -> usize {
        self.end_line - self.start_line + 1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DetectConfig {
    threshold: f64,
    min_rows: usize,
    mode: NormalizationMode,
    model: CostModel,
    tab_width: usize,
}

impl Default for DetectConfig {
    fn default() -> Self {
        Self {
            threshold: 0.5,
            min_rows: 3,
            mode: NormalizationMode::Cased,
            model: CostModel::appendix_a(),
            tab_width: 8,
        }
    }
}

impl DetectConfig {
    pub fn with_threshold(mut self, threshold: f64) -> Result<Self, ConfigError> {
        if !(0.0..=1.0).contains(&threshold) {
            return Err(ConfigError::Threshold(threshold));
        }
        self.threshold = threshold;
        Ok(self)
    }

    pub fn with_min_rows(mut self, min_rows: usize) -> Result<Self, ConfigError> {
        if min_rows < 2 {
            return Err(ConfigError::MinRows(min_rows));
        }
        self.min_rows = min_rows;
        Ok(self)
    }

    pub fn with_tab_width(mut self, tab_width: usize) -> Result<Self, ConfigError> {
        if tab_width < 1 {
            return Err(ConfigError::TabWidth(tab_width));
        }
        self.tab_width = tab_width;
        Ok(self)
    }

    pub fn with_mode(mut self, mode: NormalizationMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_model(mut self, model: CostModel) -> Self {
        self.model = model;
        self
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn min_rows(&self) -> usize {
        self.min_rows
    }

    pub fn mode(&self) -> NormalizationMode {
        self.mode
    }

    pub fn model(&self) -> &CostModel {
        &self.model
    }

    pub fn tab_width(&self) -> usize {
        self.tab_width
    }
}

/// Cost of turning the whole line into imagined whitespace.
fn whitespace_cost(line: &str, model: &CostModel) -> Cost {
    line.chars().map(|c| model.to_whitespace_cost(c)).sum()
}

/// `1 - d / D` where `d` is the trailing-whitespace-agnostic distance and `D`
/// is the larger of the two lines' costs against pure whitespace. Two blank
/// lines are fully similar. Clamped to `[0, 1]`: `d` can exceed `D` when
/// leading spaces or forbidden replacements force real indels.
pub fn row_similarity(line1: &str, line2: &str, model: &CostModel) -> f64 {
    let denom = whitespace_cost(line1, model).max(whitespace_cost(line2, model));
    if denom == 0 {
        return 1.0;
    }
    let d =
        levenshtein_ws_agnostic_with_limit(line1, line2, model, u64::MAX).expect("no cell limit");
    (1.0 - d as f64 / denom as f64).clamp(0.0, 1.0)
}

/// Finds table regions. Blank lines (empty or whitespace only) always end a
/// run; regions come back sorted, disjoint and at least `min_rows` long.
pub fn detect_tables<S: AsRef<str>>(lines: &[S], config: &DetectConfig) -> Vec<TableRegion> {
    let prepared: Vec<Option<String>> = lines
        .iter()
        .map(|line| {
            let expanded = expand_tabs(line.as_ref(), config.tab_width);
            if expanded.trim().is_empty() {
                None
            } else {
                Some(normalize_line(&expanded, config.mode))
            }
        })
        .collect();

    let mut regions = Vec::new();
    let mut run_start: Option<usize> = None;
    let mut sims: Vec<f64> = Vec::new();

    let mut close = |start: usize, end: usize, sims: &mut Vec<f64>| {
        if end + 1 - start >= config.min_rows {
            let score = sims.iter().sum::<f64>() / sims.len() as f64;
            regions.push(TableRegion {
                start_line: start,
                end_line: end,
                score,
            });
        }
        sims.clear();
    };

    for i in 0..prepared.len() {
        let Some(line) = &prepared[i] else {
            if let Some(start) = run_start.take() {
                close(start, i - 1, &mut sims);
            }
            continue;
        };
        match run_start {
            None => run_start = Some(i),
            Some(start) => {
                let prev = prepared[i - 1].as_deref().expect("run lines are non-blank");
                let sim = row_similarity(prev, line, &config.model);
                if sim >= config.threshold {
                    sims.push(sim);
                } else {
                    close(start, i - 1, &mut sims);
                    run_start = Some(i);
                }
            }
        }
    }
    if let Some(start) = run_start {
        close(start, prepared.len() - 1, &mut sims);
    }
    regions
}
