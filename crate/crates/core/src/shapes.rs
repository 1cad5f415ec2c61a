//! Strict partitions, shifted skew diagrams and the doubled alphabet.
//!
//! Coordinates are 1-based in English convention: row 1 is the top row and
//! row `i` of a shifted diagram occupies columns `i ..= i + parts[i] - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("not a strict partition: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    Containment {
        outer: StrictPartition,
        inner: StrictPartition,
    },
    #[error("cannot parse shape {0:?}")]
    Syntax(String),
}

pub fn is_strict_partition(seq: &[u32]) -> bool {
    seq.iter().all(|&p| p > 0) && seq.windows(2).all(|w| w[0] > w[1])
}

/// A strictly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if is_strict_partition(&parts) {
            Ok(StrictPartition(parts))
        } else {
            Err(ShapeError::NotStrict(parts))
        }
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn contains(&self, other: &StrictPartition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Every strict partition of `size`, in reverse lexicographic order.
    pub fn all_of_size(size: u32) -> Vec<StrictPartition> {
        fn go(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition(acc.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                acc.push(p);
                go(rest - p, p - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }

    /// Every strict partition contained in `self`, including `∅` and `self`.
    pub fn subpartitions(&self) -> Vec<StrictPartition> {
        fn go(outer: &StrictPartition, i: usize, acc: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            out.push(StrictPartition(acc.clone()));
            if i >= outer.len() {
                return;
            }
            let cap = match acc.last() {
                Some(&prev) => outer.part(i).min(prev - 1),
                None => outer.part(i),
            };
            for p in 1..=cap {
                acc.push(p);
                go(outer, i + 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<u32>> for StrictPartition {
    type Error = ShapeError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        StrictPartition::new(parts)
    }
}

impl From<StrictPartition> for Vec<u32> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = ShapeError;

    /// Accepts `5,4,1`; the empty partition is written as `` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ShapeError::Syntax(s.to_string()))?;
        StrictPartition::new(parts)
    }
}

/// A box of a shifted diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The boxes of `outer` that are not boxes of `inner`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSkew", into = "RawSkew")]
pub struct SkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
}

#[derive(Serialize, Deserialize)]
struct RawSkew {
    outer: StrictPartition,
    inner: StrictPartition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = ShapeError;

    fn try_from(raw: RawSkew) -> Result<Self, Self::Error> {
        SkewShape::new(raw.outer, raw.inner)
    }
}

impl From<SkewShape> for RawSkew {
    fn from(s: SkewShape) -> Self {
        RawSkew {
            outer: s.outer,
            inner: s.inner,
        }
    }
}

impl SkewShape {
    pub fn new(outer: StrictPartition, inner: StrictPartition) -> Result<Self, ShapeError> {
        if outer.contains(&inner) {
            Ok(SkewShape { outer, inner })
        } else {
            Err(ShapeError::Containment { outer, inner })
        }
    }

    pub fn straight(outer: StrictPartition) -> Self {
        SkewShape {
            outer,
            inner: StrictPartition::empty(),
        }
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns `(first, last)` of row `row` (1-based) that belong to the skew
    /// shape, or `None` when the row has no boxes.
    pub fn row_span(&self, row: usize) -> Option<(usize, usize)> {
        let i = row.checked_sub(1)?;
        let outer = self.outer.part(i) as usize;
        let inner = self.inner.part(i) as usize;
        (inner < outer).then(|| (row + inner, row + outer - 1))
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.row_span(cell.row)
            .is_some_and(|(a, b)| (a..=b).contains(&cell.col))
    }

    pub fn is_inner(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= cell.row
            && cell.col < cell.row + self.inner.part(cell.row - 1) as usize
    }

    pub fn size(&self) -> usize {
        (self.outer.size() - self.inner.size()) as usize
    }

    /// Row-major list of boxes.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .filter_map(|r| self.row_span(r).map(|(a, b)| (r, a, b)))
            .flat_map(|(r, a, b)| (a..=b).map(move |c| Cell::new(r, c)))
            .collect()
    }

    pub fn diagonal_cells(&self) -> Vec<Cell> {
        self.cells().into_iter().filter(|c| c.is_diagonal()).collect()
    }

    /// Number of diagonal boxes; always `ℓ(outer) − ℓ(inner)`.
    pub fn diag(&self) -> usize {
        self.outer.len() - self.inner.len()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// `5,4,1` or `5,4,1/1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Low letters sort before high letters of the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Marker {
    Low,
    High,
}

/// A letter of the doubled alphabet `1' < 1 < 2' < 2 < ⋯`.
///
/// Field order matters: the derived `Ord` compares value first, then marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub value: u32,
    pub marker: Marker,
}

impl Letter {
    pub const fn high(value: u32) -> Self {
        Letter {
            value,
            marker: Marker::High,
        }
    }

    pub const fn low(value: u32) -> Self {
        Letter {
            value,
            marker: Marker::Low,
        }
    }

    pub fn is_low(self) -> bool {
        self.marker == Marker::Low
    }

    pub fn is_high(self) -> bool {
        self.marker == Marker::High
    }

    pub fn raised(self) -> Self {
        Letter::high(self.value)
    }

    pub fn lowered(self) -> Self {
        Letter::low(self.value)
    }

    /// Position in the chain `1' < 1 < 2' < ⋯`, starting at 0.
    pub fn rank(self) -> u32 {
        2 * (self.value - 1) + u32::from(self.is_high())
    }

    pub fn from_rank(rank: u32) -> Self {
        let value = rank / 2 + 1;
        if rank.is_multiple_of(2) {
            Letter::low(value)
        } else {
            Letter::high(value)
        }
    }

    /// All letters with value at most `n`, ascending.
    pub fn alphabet(n: u32) -> impl Iterator<Item = Letter> {
        (0..2 * n).map(Letter::from_rank)
    }
}

pub fn compare_letters(a: Letter, b: Letter) -> Ordering {
    a.cmp(&b)
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.marker {
            Marker::High => write!(f, "{}", self.value),
            Marker::Low => write!(f, "{}'", self.value),
        }
    }
}

impl FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (digits, marker) = match s.strip_suffix('\'') {
            Some(d) => (d, Marker::Low),
            None => (s, Marker::High),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid letter {s:?}"));
        }
        let value: u32 = digits.parse().map_err(|_| format!("invalid letter {s:?}"))?;
        if value == 0 {
            return Err(format!("letter values start at 1, got {s:?}"));
        }
        Ok(Letter { value, marker })
    }
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
