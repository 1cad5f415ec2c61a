//! Shifted skew tableaux.

mod enumerate;
pub(crate) mod text;

pub use enumerate::{enumerate_tableaux, Mode, Tableaux};
pub use text::{parse_tableau, print_tableau, ParseError};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shapes::{Cell, Letter, SkewShape, StrictPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("row {row} has {got} entries but the shape needs {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("tableau has {got} rows but the shape has {want}")]
    RowCount { got: usize, want: usize },
}

/// A filling of a shifted skew shape by letters.
///
/// `rows[i]` holds the letters of row `i + 1` from west to east, starting at
/// the first box outside the inner shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct ShiftedTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    shape: SkewShape,
    rows: Vec<Vec<Letter>>,
}

impl TryFrom<RawTableau> for ShiftedTableau {
    type Error = TableauError;

    fn try_from(raw: RawTableau) -> Result<Self, Self::Error> {
        ShiftedTableau::new(raw.shape, raw.rows)
    }
}

impl From<ShiftedTableau> for RawTableau {
    fn from(t: ShiftedTableau) -> Self {
        RawTableau {
            shape: t.shape,
            rows: t.rows,
        }
    }
}

impl ShiftedTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self, TableauError> {
        if rows.len() != shape.num_rows() {
            return Err(TableauError::RowCount {
                got: rows.len(),
                want: shape.num_rows(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            let want = (shape.outer().part(i) - shape.inner().part(i)) as usize;
            if row.len() != want {
                return Err(TableauError::RowLength {
                    row: i + 1,
                    got: row.len(),
                    want,
                });
            }
        }
        Ok(ShiftedTableau { shape, rows })
    }

    /// Straight-shape tableau from its rows; row lengths must be strict.
    pub fn from_rows(rows: Vec<Vec<Letter>>) -> Result<Self, crate::Error> {
        let outer = StrictPartition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        Ok(ShiftedTableau::new(SkewShape::straight(outer), rows)?)
    }

    pub fn empty() -> Self {
        ShiftedTableau {
            shape: SkewShape::default(),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, cell: Cell) -> Option<Letter> {
        let (first, last) = self.shape.row_span(cell.row)?;
        (first..=last)
            .contains(&cell.col)
            .then(|| self.rows[cell.row - 1][cell.col - first])
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let first = self.shape.row_span(i + 1).map_or(0, |s| s.0);
            row.iter()
                .enumerate()
                .map(move |(k, &l)| (Cell::new(i + 1, first + k), l))
        })
    }

    /// Same shape, letters transformed cell by cell.
    pub fn map_entries(&self, mut f: impl FnMut(Cell, Letter) -> Letter) -> ShiftedTableau {
        let mut out = self.clone();
        for (i, row) in out.rows.iter_mut().enumerate() {
            let first = self.shape.row_span(i + 1).map_or(0, |s| s.0);
            for (k, l) in row.iter_mut().enumerate() {
                *l = f(Cell::new(i + 1, first + k), *l);
            }
        }
        out
    }

    pub fn max_value(&self) -> u32 {
        self.entries().map(|(_, l)| l.value).max().unwrap_or(0)
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_tableau(self))
    }
}

/// Checks the five conditions on an arbitrary set of (cell, letter) pairs.
///
/// Rows and columns of a shifted skew shape are contiguous, so it suffices
/// to compare each box with its west and north neighbours.
fn conditions_hold(t: &ShiftedTableau, raise_diagonal: bool) -> bool {
    let eff = |c: Cell| {
        t.get(c)
            .map(|l| if raise_diagonal && c.is_diagonal() { l.raised() } else { l })
    };
    t.entries().all(|(cell, _)| {
        let here = eff(cell).expect("cell in shape");
        if cell.is_diagonal() && here.is_low() {
            return false;
        }
        if cell.col > 1 {
            if let Some(west) = eff(Cell::new(cell.row, cell.col - 1)) {
                if west > here || (west == here && here.is_low()) {
                    return false;
                }
            }
        }
        if cell.row > 1 {
            if let Some(north) = eff(Cell::new(cell.row - 1, cell.col)) {
                if north > here || (north == here && here.is_high()) {
                    return false;
                }
            }
        }
        true
    })
}

pub fn is_semistandard(t: &ShiftedTableau) -> bool {
    conditions_hold(t, false)
}

/// Raising every diagonal entry yields a semistandard tableau.
pub fn is_q_tableau(t: &ShiftedTableau) -> bool {
    conditions_hold(t, true)
}

/// `counts[i]` is the number of entries of value `i + 1`, either marker.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ContentVector(pub Vec<u32>);

impl ContentVector {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Pads or checks against `n` variables; `None` if some value exceeds `n`.
    pub fn exponents(&self, n: usize) -> Option<Vec<u32>> {
        if self.0.len() > n && self.0[n..].iter().any(|&c| c > 0) {
            return None;
        }
        let mut e = self.0.clone();
        e.resize(n, 0);
        Some(e)
    }
}

pub fn content(t: &ShiftedTableau) -> ContentVector {
    let mut counts = vec![0u32; t.max_value() as usize];
    for (_, l) in t.entries() {
        counts[l.value as usize - 1] += 1;
    }
    ContentVector(counts)
}

/// Order-preserving relabelling by `1, 2, …, N` (all high).
///
/// Equal low letters are ordered north to south, equal high letters west to
/// east.
pub fn standardize(t: &ShiftedTableau) -> ShiftedTableau {
    let mut order: Vec<(Letter, usize, Cell)> = t
        .entries()
        .map(|(c, l)| {
            let tie = if l.is_low() { c.row } else { c.col };
            (l, tie, c)
        })
        .collect();
    order.sort();
    let mut label = std::collections::HashMap::with_capacity(order.len());
    for (i, &(_, _, c)) in order.iter().enumerate() {
        label.insert(c, Letter::high(i as u32 + 1));
    }
    t.map_entries(|c, _| label[&c])
}

/// Raises every low letter in a diagonal box.
pub fn raise_diagonals(t: &ShiftedTableau) -> ShiftedTableau {
    t.map_entries(|c, l| if c.is_diagonal() { l.raised() } else { l })
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// The semistandard tableau of shape (7,4,3)/(1).
    pub const SEMISTANDARD_743: &str = ". 1 1 2' 4' 6 7'\n2 2 3' 4'\n3 4' 4\n";
    /// The Q-tableau U of shape (7,4,2)/(2).
    pub const Q_TABLEAU_U: &str = ". . 1 2' 5' 6 7'\n2' 2 3' 5'\n3 4'\n";
    pub const STAND_U: &str = ". . 1 2 8 10 11\n3 4 5 9\n6 7\n";

    pub fn tab(s: &str) -> ShiftedTableau {
        parse_tableau(s).unwrap()
    }
}
