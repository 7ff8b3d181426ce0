//! Admissible Hilbert functions of local Artin algebras (Macaulay
//! O-sequences).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::binomial;

/// `H(0), ..., H(s)` with `H(0) = 1` and `H(s) > 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct HilbertFunction(Vec<u64>);

impl HilbertFunction {
    /// Trailing zeros are trimmed; interior zeros and `H(0) != 1` are rejected.
    pub fn new(mut values: Vec<u64>) -> Result<Self> {
        while values.len() > 1 && values.last() == Some(&0) {
            values.pop();
        }
        if values.first() != Some(&1) || values.contains(&0) {
            return Err(Error::Inadmissible(values));
        }
        Ok(HilbertFunction(values))
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// `H(i)`, zero past the socle degree.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Colength `k = sum H(i)`.
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn socle_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn embedding_dim(&self) -> u64 {
        self.get(1)
    }
}

impl TryFrom<Vec<u64>> for HilbertFunction {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        HilbertFunction::new(v)
    }
}

impl From<HilbertFunction> for Vec<u64> {
    fn from(h: HilbertFunction) -> Vec<u64> {
        h.0
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The `d`-th Macaulay representation `h = C(a_d,d) + C(a_{d-1},d-1) + ...`
/// with `a_d > a_{d-1} > ... >= 1`, as `(a_i, i)` pairs.
pub fn macaulay_representation(mut h: u64, d: u32) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut i = d;
    while h > 0 && i >= 1 {
        let mut a = i as u64;
        while binomial(a as i64 + 1, i as i64) as u64 <= h {
            a += 1;
        }
        h -= binomial(a as i64, i as i64) as u64;
        out.push((a, i));
        i -= 1;
    }
    out
}

/// Largest admissible `H(d+1)` given `H(d) = h`.
pub fn macaulay_growth_bound(h: u64, d: u32) -> u64 {
    assert!(d >= 1, "growth bound is defined for d >= 1");
    macaulay_representation(h, d)
        .into_iter()
        .map(|(a, i)| binomial(a as i64 + 1, i as i64 + 1) as u64)
        .sum()
}

/// Macaulay's criterion on a raw sequence. `H(0)` must be 1.
pub fn is_o_sequence_values(h: &[u64]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    (1..h.len().saturating_sub(1)).all(|d| h[d + 1] <= macaulay_growth_bound(h[d], d as u32))
}

pub fn is_o_sequence(h: &HilbertFunction) -> bool {
    is_o_sequence_values(h.values())
}

/// Filters for O-sequence enumeration. Indices without a stated bound are
/// unconstrained; a minimum at an index past the socle degree compares
/// against 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFConstraints {
    pub h1: Option<u64>,
    pub min: BTreeMap<usize, u64>,
    pub max: BTreeMap<usize, u64>,
    pub max_trailing: Option<u64>,
}

impl HFConstraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_h1(mut self, v: u64) -> Self {
        self.h1 = Some(v);
        self
    }

    pub fn with_min(mut self, i: usize, v: u64) -> Self {
        self.min.insert(i, v);
        self
    }

    pub fn with_max(mut self, i: usize, v: u64) -> Self {
        self.max.insert(i, v);
        self
    }

    pub fn with_max_trailing(mut self, v: u64) -> Self {
        self.max_trailing = Some(v);
        self
    }

    fn allows_at(&self, i: usize, v: u64) -> bool {
        if i == 1 && self.h1.is_some_and(|h| h != v) {
            return false;
        }
        if self.min.get(&i).is_some_and(|&m| v < m) {
            return false;
        }
        !self.max.get(&i).is_some_and(|&m| v > m)
    }

    pub fn accepts(&self, h: &[u64]) -> bool {
        if self.h1.is_some() && h.len() < 2 {
            return self.h1 == Some(0);
        }
        let upto = h.len().max(self.min.keys().next_back().map_or(0, |&i| i + 1));
        if !(1..upto).all(|i| self.allows_at(i, h.get(i).copied().unwrap_or(0))) {
            return false;
        }
        !self.max_trailing.is_some_and(|t| h.last().is_some_and(|&l| l > t))
    }

    /// Sum of lower bounds strictly after index `i`.
    fn min_sum_after(&self, i: usize) -> u64 {
        self.min.range(i + 1..).map(|(_, &v)| v).sum()
    }
}

/// All O-sequences with sum `k` satisfying `c`, in lexicographic order.
pub fn enumerate_o_sequences(k: u64, c: &HFConstraints) -> Vec<HilbertFunction> {
    assert!(k >= 1, "colength must be positive");
    let mut out = Vec::new();
    let mut cur = vec![1u64];
    extend(&mut cur, k - 1, c, &mut out);
    out
}

fn extend(cur: &mut Vec<u64>, rem: u64, c: &HFConstraints, out: &mut Vec<HilbertFunction>) {
    if rem == 0 {
        if c.accepts(cur) {
            out.push(HilbertFunction(cur.clone()));
        }
        return;
    }
    let i = cur.len();
    let bound = if i == 1 { rem } else { macaulay_growth_bound(cur[i - 1], (i - 1) as u32).min(rem) };
    for v in 1..=bound {
        if !c.allows_at(i, v) || c.min_sum_after(i) > rem - v {
            continue;
        }
        cur.push(v);
        extend(cur, rem - v, c, out);
        cur.pop();
    }
}

/// Dimension `(n-1)(k-1)` of the curvilinear locus.
pub fn expected_dimension(n: u64, k: u64) -> u64 {
    assert!(n >= 1 && k >= 1);
    (n - 1) * (k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_bounds() {
        for d in 1..8 {
            assert_eq!(macaulay_growth_bound(1, d), 1);
        }
        assert_eq!(macaulay_growth_bound(3, 1), 6);
        assert_eq!(macaulay_growth_bound(4, 2), 5);
        assert_eq!(macaulay_growth_bound(0, 3), 0);
        // 6 = C(4,2): full degree-2 piece in 3 variables grows to C(5,3)
        assert_eq!(macaulay_growth_bound(6, 2), 10);
    }

    #[test]
    fn growth_bound_monotone_in_h() {
        for d in 1..6 {
            let v: Vec<u64> = (0..60).map(|h| macaulay_growth_bound(h, d)).collect();
            assert!(v.windows(2).all(|w| w[0] <= w[1]), "d={d}: {v:?}");
        }
    }

    #[test]
    fn o_sequence_examples() {
        assert!(is_o_sequence_values(&[1, 3, 3, 2, 1]));
        assert!(!is_o_sequence_values(&[1, 1, 2]));
        assert!(is_o_sequence_values(&[1, 2, 3]));
        assert!(!is_o_sequence_values(&[1, 2, 4]));
    }

    #[test]
    fn unconstrained_counts() {
        let counts: Vec<usize> =
            (1..=11).map(|k| enumerate_o_sequences(k, &HFConstraints::none()).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 8, 12, 18, 27, 40, 57]);
    }

    #[test]
    fn constrained_colength_eleven() {
        let c = HFConstraints::none().with_min(1, 4).with_min(2, 3).with_min(3, 2);
        let got: Vec<Vec<u64>> =
            enumerate_o_sequences(11, &c).into_iter().map(Vec::from).collect();
        assert_eq!(got, vec![vec![1, 4, 3, 2, 1], vec![1, 4, 3, 3], vec![1, 4, 4, 2], vec![1, 5, 3, 2]]);
    }

    #[test]
    fn enumeration_is_sorted_and_admissible() {
        let all = enumerate_o_sequences(10, &HFConstraints::none());
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|h| is_o_sequence(h) && h.sum() == 10));
    }

    #[test]
    fn expected_dimensions() {
        assert_eq!(expected_dimension(3, 11), 20);
        assert_eq!(expected_dimension(7, 1), 0);
        assert_eq!(expected_dimension(4, 11), 30);
    }

    #[test]
    fn serializes_as_array() {
        let h = HilbertFunction::new(vec![1, 3, 3, 2, 1]).unwrap();
        assert_eq!(serde_json::to_string(&h).unwrap(), "[1,3,3,2,1]");
        let back: HilbertFunction = serde_json::from_str("[1,3,3,2,1]").unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<HilbertFunction>("[2,1]").is_err());
    }
}
