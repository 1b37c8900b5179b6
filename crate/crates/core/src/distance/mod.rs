//! Weighted Levenshtein distance, classical and trailing-whitespace agnostic.
//!
//! The trailing-whitespace-agnostic variant behaves as if both strings were
//! followed by an unbounded run of the model's whitespace character. Once a
//! string is exhausted, the other string's whitespace is absorbed for free and
//! any other character `c` costs `min(indel(c), replace(c, whitespace))`.
//!
//! Both production routines run in `O(|s1|·|s2|)` time with two rolling rows
//! sized by the shorter input. [`oracle`] holds slow reference versions used to
//! check them.

pub mod oracle;

use thiserror::Error;

use crate::cost_model::{Cost, CostModel};

pub use oracle::{ws_agnostic_naive, ws_agnostic_naive_bounded, ws_agnostic_recursive_unit};

/// Default cap on `|s1|·|s2|` for the DP routines (2^26 cells).
pub const DEFAULT_MAX_CELLS: u64 = 1 << 26;

/// Largest `|s1| + |s2|` accepted by [`ws_agnostic_naive`].
pub const NAIVE_MAX_COMBINED_LEN: usize = 512;

/// Largest length of either input accepted by [`ws_agnostic_recursive_unit`].
pub const RECURSIVE_MAX_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("input too large: {len1} x {len2} characters exceeds the {limit}-cell limit")]
    TooLarge {
        len1: usize,
        len2: usize,
        limit: u64,
    },
    #[error("reference implementation limit exceeded: lengths {len1} and {len2} (limit {limit})")]
    OracleLimit {
        len1: usize,
        len2: usize,
        limit: usize,
    },
    #[error("the recursive reference only supports the unit cost model")]
    UnitCostsOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Standard,
    WsAgnostic,
    NaiveOracle,
    RecursiveReference,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceResult {
    pub cost: Cost,
    pub algorithm: Algorithm,
    pub len1: usize,
    pub len2: usize,
}

/// Runs `algorithm` on the pair, using the default cell limit.
///
/// [`Algorithm::RecursiveReference`] is defined for unit costs only and
/// rejects any other model.
pub fn distance(
    algorithm: Algorithm,
    s1: &str,
    s2: &str,
    model: &CostModel,
) -> Result<DistanceResult, DistanceError> {
    let cost = match algorithm {
        Algorithm::Standard => levenshtein_standard(s1, s2, model)?,
        Algorithm::WsAgnostic => levenshtein_ws_agnostic(s1, s2, model)?,
        Algorithm::NaiveOracle => ws_agnostic_naive(s1, s2, model)?,
        Algorithm::RecursiveReference => {
            if *model != CostModel::unit() {
                return Err(DistanceError::UnitCostsOnly);
            }
            ws_agnostic_recursive_unit(s1, s2)?
        }
    };
    Ok(DistanceResult {
        cost,
        algorithm,
        len1: s1.chars().count(),
        len2: s2.chars().count(),
    })
}

/// Classical weighted Levenshtein distance.
pub fn levenshtein_standard(s1: &str, s2: &str, model: &CostModel) -> Result<Cost, DistanceError> {
    levenshtein_standard_with_limit(s1, s2, model, DEFAULT_MAX_CELLS)
}

pub fn levenshtein_standard_with_limit(
    s1: &str,
    s2: &str,
    model: &CostModel,
    max_cells: u64,
) -> Result<Cost, DistanceError> {
    let a: Vec<char> = s1.chars().collect();
    let b: Vec<char> = s2.chars().collect();
    check_cells(a.len(), b.len(), max_cells)?;
    Ok(run(&a, &b, model, false))
}

/// Trailing-whitespace-agnostic weighted Levenshtein distance.
///
/// An empty input is treated as already exhausted, so
/// `levenshtein_ws_agnostic("", s, m)` is the sum of
/// `min(indel(c), replace(whitespace, c))` over the characters of `s`.
pub fn levenshtein_ws_agnostic(
    s1: &str,
    s2: &str,
    model: &CostModel,
) -> Result<Cost, DistanceError> {
    levenshtein_ws_agnostic_with_limit(s1, s2, model, DEFAULT_MAX_CELLS)
}

pub fn levenshtein_ws_agnostic_with_limit(
    s1: &str,
    s2: &str,
    model: &CostModel,
    max_cells: u64,
) -> Result<Cost, DistanceError> {
    let a: Vec<char> = s1.chars().collect();
    let b: Vec<char> = s2.chars().collect();
    check_cells(a.len(), b.len(), max_cells)?;
    Ok(run(&a, &b, model, true))
}

fn check_cells(len1: usize, len2: usize, limit: u64) -> Result<(), DistanceError> {
    let cells = (len1 as u128) * (len2 as u128);
    if cells > limit as u128 {
        return Err(DistanceError::TooLarge { len1, len2, limit });
    }
    Ok(())
}

/// Above this many distinct characters the replacement costs are looked up
/// in the model directly instead of through a dense table.
const DENSE_ALPHABET_MAX: usize = 256;

/// Per-position costs along one axis of the DP lattice.
struct Axis {
    indel: Vec<Cost>,
    /// Cost of consuming the character once the other string is exhausted.
    at_end: Vec<Cost>,
}

fn run(s1: &[char], s2: &[char], model: &CostModel, ws_agnostic: bool) -> Cost {
    let axis1 = Axis {
        indel: s1.iter().map(|&c| model.indel(c)).collect(),
        at_end: s1
            .iter()
            .map(|&c| {
                if ws_agnostic {
                    model.to_whitespace_cost(c)
                } else {
                    model.indel(c)
                }
            })
            .collect(),
    };
    let axis2 = Axis {
        indel: s2.iter().map(|&c| model.indel(c)).collect(),
        at_end: s2
            .iter()
            .map(|&c| {
                if ws_agnostic {
                    model.from_whitespace_cost(c)
                } else {
                    model.indel(c)
                }
            })
            .collect(),
    };

    // Keep the shorter string on the inner (column) axis.
    let transpose = s1.len() < s2.len();

    let mut alphabet: Vec<char> = s1.iter().chain(s2).copied().collect();
    alphabet.sort_unstable();
    alphabet.dedup();

    if alphabet.len() <= DENSE_ALPHABET_MAX {
        let k = alphabet.len();
        let index = |c: &char| alphabet.binary_search(c).expect("character in alphabet");
        let i1: Vec<usize> = s1.iter().map(index).collect();
        let i2: Vec<usize> = s2.iter().map(index).collect();
        let mut table = vec![0; k * k];
        for (x, &a) in alphabet.iter().enumerate() {
            for (y, &b) in alphabet.iter().enumerate() {
                table[x * k + y] = model.replace(a, b);
            }
        }
        if transpose {
            lattice(&axis2, &axis1, |i, j| table[i1[j] * k + i2[i]])
        } else {
            lattice(&axis1, &axis2, |i, j| table[i1[i] * k + i2[j]])
        }
    } else if transpose {
        lattice(&axis2, &axis1, |i, j| model.replace(s1[j], s2[i]))
    } else {
        lattice(&axis1, &axis2, |i, j| model.replace(s1[i], s2[j]))
    }
}

/// Fills the lattice row by row. `rows` is consumed going down, `cols` going
/// right; `replace(i, j)` is the cost of aligning row character `i` with
/// column character `j`. The last column applies `rows.at_end` and the last
/// row applies `cols.at_end`, which is where an exhausted string stands at its
/// imagined whitespace.
fn lattice<F>(rows: &Axis, cols: &Axis, replace: F) -> Cost
where
    F: Fn(usize, usize) -> Cost,
{
    let n = rows.indel.len();
    let m = cols.indel.len();

    let first_row = if n == 0 { &cols.at_end } else { &cols.indel };
    let mut prev: Vec<Cost> = Vec::with_capacity(m + 1);
    prev.push(0);
    for j in 0..m {
        prev.push(prev[j] + first_row[j]);
    }
    if n == 0 {
        return prev[m];
    }

    let mut cur: Vec<Cost> = vec![0; m + 1];
    for i in 0..n {
        let down = rows.indel[i];
        let down_at_end = rows.at_end[i];
        let right = if i + 1 == n {
            &cols.at_end
        } else {
            &cols.indel
        };

        cur[0] = prev[0] + if m == 0 { down_at_end } else { down };
        for j in 1..=m {
            let vertical = if j == m { down_at_end } else { down };
            let del = prev[j] + vertical;
            let ins = cur[j - 1] + right[j - 1];
            let sub = prev[j - 1] + replace(i, j - 1);
            cur[j] = del.min(ins).min(sub);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> CostModel {
        CostModel::unit()
    }

    fn appendix() -> CostModel {
        CostModel::appendix_a()
    }

    #[test]
    fn standard_examples() {
        assert_eq!(levenshtein_standard("", "abc", &unit()), Ok(3));
        assert_eq!(levenshtein_standard("abc", "", &unit()), Ok(3));
        assert_eq!(levenshtein_standard("", "", &unit()), Ok(0));
        assert_eq!(levenshtein_standard("kitten", "sitting", &unit()), Ok(3));
        assert_eq!(
            levenshtein_standard("aaaaA  99  99", "aaaaA", &appendix()),
            Ok(8)
        );
    }

    #[test]
    fn ws_agnostic_examples() {
        assert_eq!(levenshtein_ws_agnostic("abc   ", "abc", &unit()), Ok(0));
        assert_eq!(levenshtein_ws_agnostic("abc", "abc   ", &unit()), Ok(0));
        assert_eq!(levenshtein_ws_agnostic("", "   ", &unit()), Ok(0));
        assert_eq!(levenshtein_ws_agnostic("", "", &unit()), Ok(0));
        assert_eq!(
            levenshtein_ws_agnostic("aaaaA  99  99", "aaaaA", &appendix()),
            Ok(4)
        );
        assert_eq!(
            levenshtein_ws_agnostic("aaaaA      99", "aaaaA", &appendix()),
            Ok(2)
        );
    }

    #[test]
    fn empty_input_costs_whitespace_transformation() {
        let m = appendix();
        // a -> 1, space -> 0, 9 -> min(1, 4), ( -> min(1, 999)
        assert_eq!(levenshtein_ws_agnostic("", "a 9(", &m), Ok(3));
        assert_eq!(levenshtein_ws_agnostic("a 9(", "", &m), Ok(3));
    }

    #[test]
    fn non_unit_indel_uses_cumulative_boundaries() {
        let mut m = CostModel::new(1, 10);
        m.set_indel('x', 5);
        assert_eq!(levenshtein_standard("xx", "", &m), Ok(10));
        assert_eq!(levenshtein_standard("", "xax", &m), Ok(11));
        // x against imagined whitespace: min(5, 10)
        assert_eq!(levenshtein_ws_agnostic("", "xax", &m), Ok(11));
        m.set_replace('x', ' ', 2).unwrap();
        assert_eq!(levenshtein_ws_agnostic("", "xax", &m), Ok(5));
        assert_eq!(levenshtein_ws_agnostic("a", "axx", &m), Ok(4));
    }

    #[test]
    fn directed_model_uses_argument_order() {
        let mut m = CostModel::directed(10, 10);
        m.set_replace('a', 'b', 1).unwrap();
        m.set_replace('b', 'a', 7).unwrap();
        assert_eq!(levenshtein_standard("a", "b", &m), Ok(1));
        assert_eq!(levenshtein_standard("b", "a", &m), Ok(7));
        // longer s2 forces the transposed lattice
        assert_eq!(levenshtein_standard("a", "bbbb", &m), Ok(31));
        assert_eq!(levenshtein_standard("bbbb", "a", &m), Ok(37));
    }

    #[test]
    fn directed_boundary_costs() {
        let mut m = CostModel::directed(5, 9);
        m.set_replace('x', ' ', 1).unwrap();
        m.set_replace(' ', 'x', 3).unwrap();
        assert_eq!(levenshtein_ws_agnostic("x", "", &m), Ok(1));
        assert_eq!(levenshtein_ws_agnostic("", "x", &m), Ok(3));
    }

    #[test]
    fn cell_limit() {
        let err = levenshtein_ws_agnostic_with_limit("abcd", "abc", &unit(), 11).unwrap_err();
        assert_eq!(
            err,
            DistanceError::TooLarge {
                len1: 4,
                len2: 3,
                limit: 11
            }
        );
        assert_eq!(
            levenshtein_standard_with_limit("abcd", "abc", &unit(), 12),
            Ok(1)
        );
        assert_eq!(
            levenshtein_standard_with_limit("", "abc", &unit(), 0),
            Ok(3)
        );
    }

    #[test]
    fn large_alphabet_falls_back_to_model_lookup() {
        let s1: String = (0..400u32)
            .filter_map(|c| char::from_u32(0x4e00 + c))
            .collect();
        let mut s2 = s1.clone();
        s2.replace_range(0..3, "x");
        s2.push_str("   ");
        assert_eq!(levenshtein_standard(&s1, &s2, &unit()), Ok(4));
        assert_eq!(levenshtein_ws_agnostic(&s1, &s2, &unit()), Ok(1));
    }

    #[test]
    fn dispatch() {
        let m = appendix();
        for (alg, want) in [
            (Algorithm::Standard, 8),
            (Algorithm::WsAgnostic, 4),
            (Algorithm::NaiveOracle, 4),
        ] {
            let r = distance(alg, "aaaaA  99  99", "aaaaA", &m).unwrap();
            assert_eq!(r.cost, want);
            assert_eq!(r.algorithm, alg);
            assert_eq!((r.len1, r.len2), (13, 5));
        }
        assert_eq!(
            distance(Algorithm::RecursiveReference, "a", "b", &m),
            Err(DistanceError::UnitCostsOnly)
        );
        let r = distance(Algorithm::RecursiveReference, "abc", "abd", &unit()).unwrap();
        assert_eq!(r.cost, 1);
    }
}
