//! Integer partitions and their Young diagrams.
//!
//! Boxes use 1-based `(row, col)` coordinates in the English convention:
//! rows grow south, columns grow east. A box `(i, j)` belongs to `λ` iff
//! `j <= λ_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }

    /// `j - i`, the content of the box.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The `b`-residue `(j - i) mod b` of a box, in `[0, b)`.
pub fn residue(cell: BoxCoord, b: usize) -> usize {
    assert!(b >= 1, "residue modulus must be positive");
    cell.content().rem_euclid(b as i64) as usize
}

/// A partition: a non-increasing sequence of positive parts.
///
/// The empty partition is a valid value. Trailing zeros are never stored, so
/// structural equality is equality of partitions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, validating the parts. Trailing zeros are dropped;
    /// a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            if w[1] == 0 {
                return Err(Error::ZeroPart);
            }
            if w[0] < w[1] {
                return Err(Error::NotNonIncreasing { prev: w[0], next: w[1] });
            }
        }
        if parts.first() == Some(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts known to be valid. Trailing zeros are
    /// stripped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for 1-based `i`; zero past the last part (and for `i = 0`).
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `(λ^Tr)_j`: the number of boxes in column `j`.
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.partition_point(|&p| p >= j)
    }

    pub fn contains(&self, cell: BoxCoord) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row(cell.row)
    }

    /// All boxes, row by row, west to east.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| BoxCoord::new(i + 1, j)))
    }

    pub fn transpose(&self) -> Partition {
        let width = self.row(1);
        Partition {
            parts: (1..=width).map(|j| self.col(j)).collect(),
        }
    }

    /// No index `i` with `λ_i = … = λ_{i+b-1} > 0`.
    pub fn is_b_regular(&self, b: usize) -> bool {
        assert!(b >= 1, "regularity modulus must be positive");
        if self.parts.len() < b {
            return true;
        }
        !self.parts.windows(b).any(|w| w[0] == w[b - 1])
    }

    /// Dominance `self ⊴ other`: every prefix sum of `self` is at most the
    /// corresponding prefix sum of `other`, parts past the length read as 0.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        let (mut lhs, mut rhs) = (0usize, 0usize);
        for i in 1..=k {
            lhs += self.row(i);
            rhs += other.row(i);
            if lhs > rhs {
                return false;
            }
        }
        true
    }

    /// `λ ⊕ μ`; fails unless `μ_1 <= λ_{l(λ)}` (or either side is empty).
    pub fn concat(&self, other: &Partition) -> Result<Partition> {
        if let (Some(&last), Some(&first)) = (self.parts.last(), other.parts.first()) {
            if first > last {
                return Err(Error::NotAPartition {
                    left_last: last,
                    right_first: first,
                });
            }
        }
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Ok(Partition { parts })
    }

    /// `λ_{[i,j]}`, 1-based and inclusive; indices past the end are clipped.
    pub fn rows(&self, from: usize, to: usize) -> Partition {
        let from = from.max(1);
        let to = to.min(self.len());
        if from > to {
            return Partition::empty();
        }
        Partition {
            parts: self.parts[from - 1..to].to_vec(),
        }
    }

    /// Exponential notation `(1^{m_1} 2^{m_2} …)`, largest part first.
    pub fn exponential(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&q| q == p).count();
            out.push(if run == 1 { p.to_string() } else { format!("{p}^{run}") });
            i += run;
        }
        format!("({})", out.join(" "))
    }
}

/// Parses comma- or whitespace-separated parts. `""` and `"0"` are `∅`;
/// surrounding parentheses are tolerated.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    let trimmed = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed);
    let mut parts = Vec::new();
    for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let value: usize = token
            .parse()
            .map_err(|_| Error::InvalidInteger(token.to_string()))?;
        parts.push(value);
    }
    if parts == [0] {
        return Ok(Partition::empty());
    }
    if parts.contains(&0) {
        return Err(Error::ZeroPart);
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Canonical text form: comma-separated parts, `0` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_partition(&text).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for tests and examples: `part![5, 3, 1]`. Panics on invalid parts.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

#[cfg(test)]
pub(crate) mod strategy {
    use proptest::prelude::*;

    use super::Partition;

    /// Partitions of size at most `max_size`.
    pub fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(1..=max_size.max(1), 0..=max_size).prop_map(move |mut parts| {
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let mut total = 0;
            parts.retain(|&p| {
                total += p;
                total <= max_size
            });
            parts.sort_unstable_by(|x, y| y.cmp(x));
            Partition::new(parts).expect("sorted positive parts")
        })
    }

    pub fn ab_pair(b_max: usize) -> impl Strategy<Value = crate::ladder::AbParams> {
        (2..=b_max)
            .prop_flat_map(|b| (1..b, Just(b)))
            .prop_map(|(a, b)| crate::ladder::AbParams::new(a, b).expect("1 <= a < b"))
    }
}
