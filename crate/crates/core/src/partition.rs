//! Partitions, bipartitions and Young-diagram boxes.
//!
//! Parts are stored weakly decreasing (row 1 is the longest row). Text and
//! serialized forms list parts in increasing order, e.g. `(1,1,2,3,4)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest weight `enumerate_partitions` accepts by default.
pub const DEFAULT_PARTITION_BOUND: usize = 40;

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "box coordinates are 1-based");
        BoxCoord { row, col }
    }

    /// Column minus row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Column minus row.
pub fn content(b: BoxCoord) -> i64 {
    b.content()
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parts, weakly decreasing.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Parts, weakly increasing.
    pub fn increasing(&self) -> Vec<usize> {
        self.0.iter().rev().copied().collect()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row` (1-based), zero beyond the last row.
    pub fn row_len(&self, row: usize) -> usize {
        self.0.get(row.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.col <= self.row_len(b.row)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| BoxCoord::new(r + 1, c)))
    }

    /// Boxes whose addition again gives a partition diagram, top row first.
    pub fn addable_boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for row in 1..=self.len() + 1 {
            let len = self.row_len(row);
            if row == 1 || self.row_len(row - 1) > len {
                out.push(BoxCoord::new(row, len + 1));
            }
        }
        out
    }

    /// Adds an addable box. Panics if `b` is not addable.
    pub fn with_box(&self, b: BoxCoord) -> Partition {
        let mut parts = self.0.clone();
        if b.row == parts.len() + 1 {
            assert_eq!(b.col, 1, "box {b} is not addable");
            parts.push(1);
        } else {
            assert!(b.row <= parts.len(), "box {b} is not addable");
            assert_eq!(parts[b.row - 1] + 1, b.col, "box {b} is not addable");
            assert!(b.row == 1 || parts[b.row - 2] >= b.col, "box {b} is not addable");
            parts[b.row - 1] += 1;
        }
        Partition(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// Partitions `nu ⊇ self` such that `nu / self` is a horizontal strip of
    /// `size` boxes (no two added boxes in one column).
    pub fn horizontal_strip_extensions(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let rows = self.len() + 1;
        let mut current = vec![0usize; rows];
        fn rec(
            base: &Partition,
            row: usize,
            remaining: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row == current.len() {
                if remaining == 0 {
                    out.push(Partition::new(current.clone()));
                }
                return;
            }
            let low = base.row_len(row + 1);
            let high = if row == 0 {
                low + remaining
            } else {
                base.row_len(row).min(low + remaining)
            };
            for len in (low..=high).rev() {
                current[row] = len;
                rec(base, row + 1, remaining - (len - low), current, out);
            }
        }
        rec(self, 0, size, &mut current, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma-separated parts in any order; the empty string (or `()`) is the empty
/// partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(p) if p > 0 => Ok(p),
                _ => Err(Error::ParsePartition(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.increasing().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) {
            return Err(serde::de::Error::custom("partition parts must be positive"));
        }
        Ok(Partition::new(parts))
    }
}

/// An ordered pair of partitions `(first, second)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn weight(&self) -> usize {
        self.first.weight() + self.second.weight()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// All partitions of `n`, largest first part first. Fails above
/// [`DEFAULT_PARTITION_BOUND`].
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(n, DEFAULT_PARTITION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partition weight",
            value: n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    Ok(out)
}

/// All bipartitions of total weight `n`, grouped by the weight of the first
/// component.
pub fn enumerate_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    let mut out = Vec::new();
    for k in 0..=n {
        let firsts = enumerate_partitions(k)?;
        let seconds = enumerate_partitions(n - k)?;
        for a in &firsts {
            for b in &seconds {
                out.push(Bipartition::new(a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}
