//! Slow reference implementations of the trailing-whitespace-agnostic
//! distance. Neither shares code with the rolling-row DP in the parent module.

use super::{DistanceError, NAIVE_MAX_COMBINED_LEN, RECURSIVE_MAX_LEN};
use crate::cost_model::{Cost, CostModel};

/// Minimum classical distance over every trailing padding of either string
/// with up to `|s1| + |s2|` whitespace characters. `O(n^3)`.
pub fn ws_agnostic_naive(s1: &str, s2: &str, model: &CostModel) -> Result<Cost, DistanceError> {
    let len1 = s1.chars().count();
    let len2 = s2.chars().count();
    if len1 + len2 > NAIVE_MAX_COMBINED_LEN {
        return Err(DistanceError::OracleLimit {
            len1,
            len2,
            limit: NAIVE_MAX_COMBINED_LEN,
        });
    }
    Ok(ws_agnostic_naive_bounded(s1, s2, model, len1 + len2))
}

/// [`ws_agnostic_naive`] with an explicit padding bound and no size check.
pub fn ws_agnostic_naive_bounded(s1: &str, s2: &str, model: &CostModel, max_pad: usize) -> Cost {
    let ws = model.whitespace_char();
    let a: Vec<char> = s1.chars().collect();
    let padded_b: Vec<char> = s2.chars().chain(std::iter::repeat_n(ws, max_pad)).collect();
    let len2 = s2.chars().count();

    let mut best = Cost::MAX;
    let mut padded_a = a.clone();
    for _ in 0..=max_pad {
        // The bottom row of the full table holds the distance from padded_a
        // to every prefix of padded_b, covering each padding q of s2 at once.
        let table = full_table(&padded_a, &padded_b, model);
        let bottom = &table[padded_a.len()];
        best = best.min(bottom[len2..].iter().copied().min().expect("non-empty row"));
        padded_a.push(ws);
    }
    best
}

fn full_table(a: &[char], b: &[char], model: &CostModel) -> Vec<Vec<Cost>> {
    let mut d = vec![vec![0; b.len() + 1]; a.len() + 1];
    for i in 1..=a.len() {
        d[i][0] = d[i - 1][0] + model.indel(a[i - 1]);
    }
    for j in 1..=b.len() {
        d[0][j] = d[0][j - 1] + model.indel(b[j - 1]);
    }
    for i in 1..=a.len() {
        for j in 1..=b.len() {
            d[i][j] = (d[i - 1][j] + model.indel(a[i - 1]))
                .min(d[i][j - 1] + model.indel(b[j - 1]))
                .min(d[i - 1][j - 1] + model.replace(a[i - 1], b[j - 1]));
        }
    }
    d
}

/// Memoized transcription of the four-case recurrence over strings that end
/// in the infinite-whitespace symbol, with unit costs and `' '` as whitespace.
pub fn ws_agnostic_recursive_unit(s1: &str, s2: &str) -> Result<Cost, DistanceError> {
    let a: Vec<char> = s1.chars().collect();
    let b: Vec<char> = s2.chars().collect();
    if a.len() > RECURSIVE_MAX_LEN || b.len() > RECURSIVE_MAX_LEN {
        return Err(DistanceError::OracleLimit {
            len1: a.len(),
            len2: b.len(),
            limit: RECURSIVE_MAX_LEN,
        });
    }
    let mut rec = Recurrence {
        memo: vec![None; (a.len() + 1) * (b.len() + 1)],
        a,
        b,
    };
    Ok(rec.lev(0, 0))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Symbol {
    Char(char),
    Infinity,
}

/// Suffixes are identified by their start index; index `len` is the suffix
/// consisting of the infinity symbol alone.
struct Recurrence {
    a: Vec<char>,
    b: Vec<char>,
    memo: Vec<Option<Cost>>,
}

impl Recurrence {
    fn head(s: &[char], i: usize) -> Symbol {
        s.get(i).map_or(Symbol::Infinity, |&c| Symbol::Char(c))
    }

    /// Drops the first symbol; a suffix of length <= 1 becomes `{inf}`.
    fn tail(s: &[char], i: usize) -> usize {
        (i + 1).min(s.len())
    }

    fn lev(&mut self, i: usize, j: usize) -> Cost {
        let slot = i * (self.b.len() + 1) + j;
        if let Some(cost) = self.memo[slot] {
            return cost;
        }
        let ha = Self::head(&self.a, i);
        let hb = Self::head(&self.b, j);
        let ti = Self::tail(&self.a, i);
        let tj = Self::tail(&self.b, j);
        let cost = match (ha, hb) {
            (Symbol::Infinity, Symbol::Infinity) => 0,
            (x, y) if x == y => self.lev(ti, tj),
            (Symbol::Char(' '), Symbol::Infinity) => self.lev(ti, j),
            (Symbol::Infinity, Symbol::Char(' ')) => self.lev(i, tj),
            _ => {
                // tail of {inf} is {inf}, so some branches lead back to (i, j);
                // those are 1 + lev(i, j) and can never be the minimum.
                let best = [(i, tj), (ti, j), (ti, tj)]
                    .into_iter()
                    .filter(|&next| next != (i, j))
                    .map(|(ni, nj)| self.lev(ni, nj))
                    .min()
                    .expect("at least one string has a character left");
                1 + best
            }
        };
        self.memo[slot] = Some(cost);
        cost
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursive_examples() {
        assert_eq!(ws_agnostic_recursive_unit("", ""), Ok(0));
        assert_eq!(ws_agnostic_recursive_unit("a", "a"), Ok(0));
        assert_eq!(ws_agnostic_recursive_unit("abc", "abd"), Ok(1));
        assert_eq!(ws_agnostic_recursive_unit("abc   ", "abc"), Ok(0));
        assert_eq!(ws_agnostic_recursive_unit("", "   "), Ok(0));
        assert_eq!(ws_agnostic_recursive_unit("", "a b"), Ok(2));
    }

    #[test]
    fn recursive_limit() {
        let long = "a".repeat(RECURSIVE_MAX_LEN + 1);
        assert!(matches!(
            ws_agnostic_recursive_unit(&long, "a"),
            Err(DistanceError::OracleLimit { .. })
        ));
        assert!(ws_agnostic_recursive_unit(&long[1..], &long[1..]).is_ok());
    }

    #[test]
    fn naive_examples() {
        let unit = CostModel::unit();
        let appendix = CostModel::appendix_a();
        assert_eq!(ws_agnostic_naive("abc   ", "abc", &unit), Ok(0));
        assert_eq!(ws_agnostic_naive("", "", &unit), Ok(0));
        assert_eq!(
            ws_agnostic_naive("aaaaA  99  99", "aaaaA", &appendix),
            Ok(4)
        );
        assert_eq!(
            ws_agnostic_naive("aaaaA      99", "aaaaA", &appendix),
            Ok(2)
        );
    }

    #[test]
    fn naive_limit() {
        let half = "a".repeat(NAIVE_MAX_COMBINED_LEN / 2);
        assert!(ws_agnostic_naive(&half, &half, &CostModel::unit()).is_ok());
        let over = format!("{half}b");
        assert_eq!(
            ws_agnostic_naive(&over, &half, &CostModel::unit()),
            Err(DistanceError::OracleLimit {
                len1: NAIVE_MAX_COMBINED_LEN / 2 + 1,
                len2: NAIVE_MAX_COMBINED_LEN / 2,
                limit: NAIVE_MAX_COMBINED_LEN
            })
        );
    }
}
