//! Tableaux with holes: a shifted grid whose boxes are gaps, bullets or letters.
//!
//! Shared by mixed jeu de taquin (many bullets) and Sagan–Worley slides (one
//! bullet). Row `r` (1-based) stores the boxes of columns `r, r+1, …`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::shapes::{Cell, Letter, SkewShape, StrictPartition};
use crate::tableau::text::{tokenize, Token};
use crate::tableau::{ParseError, ShiftedTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    /// A box of the inner shape, or one vacated for good.
    Gap,
    Bullet,
    Entry(Letter),
}

impl Slot {
    pub fn letter(self) -> Option<Letter> {
        match self {
            Slot::Entry(l) => Some(l),
            _ => None,
        }
    }

    pub fn is_bullet(self) -> bool {
        self == Slot::Bullet
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoleTableau {
    rows: Vec<Vec<Slot>>,
}

impl HoleTableau {
    /// Rows of slots; row `i` starts in column `i + 1`.
    pub fn from_slots(rows: Vec<Vec<Slot>>) -> Self {
        let mut t = HoleTableau { rows };
        t.drop_empty_rows();
        t
    }

    pub fn from_tableau(t: &ShiftedTableau) -> Self {
        let rows = t
            .rows()
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let gaps = t.shape().inner().part(i) as usize;
                std::iter::repeat_n(Slot::Gap, gaps)
                    .chain(row.iter().map(|&l| Slot::Entry(l)))
                    .collect()
            })
            .collect();
        HoleTableau::from_slots(rows)
    }

    /// Reads off an ordinary skew tableau: gaps must form a strict inner
    /// shape at the row starts and no bullets may remain.
    pub fn to_tableau(&self) -> Option<ShiftedTableau> {
        let mut outer = Vec::with_capacity(self.rows.len());
        let mut inner = Vec::new();
        let mut letters = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let gaps = row.iter().take_while(|s| **s == Slot::Gap).count();
            let entries: Option<Vec<Letter>> = row[gaps..].iter().map(|s| s.letter()).collect();
            letters.push(entries?);
            outer.push(row.len() as u32);
            if gaps > 0 {
                if inner.len() != letters.len() - 1 {
                    return None;
                }
                inner.push(gaps as u32);
            }
        }
        let shape = SkewShape::new(
            StrictPartition::new(outer).ok()?,
            StrictPartition::new(inner).ok()?,
        )
        .ok()?;
        ShiftedTableau::new(shape, letters).ok()
    }

    pub fn rows(&self) -> &[Vec<Slot>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.get(c).is_some()
    }

    pub fn get(&self, c: Cell) -> Option<Slot> {
        if c.row == 0 || c.col < c.row {
            return None;
        }
        self.rows.get(c.row - 1)?.get(c.col - c.row).copied()
    }

    /// Overwrites an existing box.
    ///
    /// # Panics
    /// If `c` is outside the grid.
    pub fn set(&mut self, c: Cell, slot: Slot) {
        assert!(self.contains(c), "{c} is outside the grid");
        self.rows[c.row - 1][c.col - c.row] = slot;
    }

    pub fn letter(&self, c: Cell) -> Option<Letter> {
        self.get(c).and_then(Slot::letter)
    }

    pub fn is_bullet(&self, c: Cell) -> bool {
        self.get(c) == Some(Slot::Bullet)
    }

    pub fn slots(&self) -> impl Iterator<Item = (Cell, Slot)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(k, &s)| (Cell::new(i + 1, i + 1 + k), s))
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (Cell, Letter)> + '_ {
        self.slots().filter_map(|(c, s)| s.letter().map(|l| (c, l)))
    }

    pub fn bullets(&self) -> Vec<Cell> {
        self.slots().filter(|(_, s)| s.is_bullet()).map(|(c, _)| c).collect()
    }

    pub fn has_bullets(&self) -> bool {
        self.slots().any(|(_, s)| s.is_bullet())
    }

    fn drop_empty_rows(&mut self) {
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
    }

    /// Removes the box at the east end of row `row`.
    pub fn pop_row_end(&mut self, row: usize) -> Option<Slot> {
        let out = self.rows.get_mut(row - 1)?.pop();
        self.drop_empty_rows();
        out
    }

    /// Deletes every bullet with no letter weakly south-east of it.
    ///
    /// Such bullets always sit at row ends, so deletion shortens rows.
    pub fn prune(&mut self) -> usize {
        // deepest row holding a letter in column >= c, per column
        let width = self.rows.iter().enumerate().map(|(i, r)| i + 1 + r.len()).max().unwrap_or(0);
        let mut deepest = vec![0usize; width + 2];
        for (c, _) in self.entries() {
            deepest[c.col] = deepest[c.col].max(c.row);
        }
        for col in (1..=width).rev() {
            deepest[col] = deepest[col].max(deepest[col + 1]);
        }
        let mut removed = 0;
        for (i, row) in self.rows.iter_mut().enumerate() {
            let r = i + 1;
            let cut = row
                .iter()
                .enumerate()
                .position(|(k, s)| s.is_bullet() && deepest[r + k] < r);
            if let Some(k) = cut {
                debug_assert!(row[k..].iter().all(|s| s.is_bullet()));
                removed += row.len() - k;
                row.truncate(k);
            }
        }
        self.drop_empty_rows();
        removed
    }

    /// Semistandardness among the letters only: bullets and gaps are skipped
    /// when comparing along rows and columns.
    pub fn letters_semistandard(&self, raise_diagonal: bool) -> bool {
        let eff = |c: Cell, l: Letter| if raise_diagonal && c.is_diagonal() { l.raised() } else { l };
        let mut by_col: std::collections::BTreeMap<usize, Vec<Letter>> = Default::default();
        for (i, row) in self.rows.iter().enumerate() {
            let mut prev: Option<Letter> = None;
            for (k, slot) in row.iter().enumerate() {
                let Slot::Entry(l) = *slot else { continue };
                let c = Cell::new(i + 1, i + 1 + k);
                let l = eff(c, l);
                if c.is_diagonal() && l.is_low() {
                    return false;
                }
                if let Some(p) = prev {
                    if p > l || (p == l && l.is_low()) {
                        return false;
                    }
                }
                prev = Some(l);
                by_col.entry(c.col).or_default().push(l);
            }
        }
        by_col
            .values()
            .all(|col| col.windows(2).all(|p| p[0] < p[1] || (p[0] == p[1] && p[1].is_low())))
    }

    /// No low letter on a diagonal box.
    pub fn no_low_diagonal(&self) -> bool {
        self.entries().all(|(c, l)| !(c.is_diagonal() && l.is_low()))
    }
}

impl fmt::Display for HoleTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|s| match s {
                    Slot::Gap => ".".to_string(),
                    Slot::Bullet => "*".to_string(),
                    Slot::Entry(l) => l.to_string(),
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for HoleTableau {
    type Err = ParseError;

    /// The tableau text format with `*` for bullets anywhere and `.` for gaps.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rows = tokenize(s)?;
        for pair in rows.windows(2) {
            if pair[1].len() >= pair[0].len() {
                let at = pair[1][0];
                return Err(ParseError {
                    line: at.line,
                    column: at.column,
                    message: "row lengths must strictly decrease".into(),
                });
            }
        }
        let slots = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| match t.token {
                        Token::Gap => Slot::Gap,
                        Token::Bullet => Slot::Bullet,
                        Token::Entry(l) => Slot::Entry(l),
                    })
                    .collect()
            })
            .collect();
        Ok(HoleTableau::from_slots(slots))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::parse_tableau;

    fn holes(s: &str) -> HoleTableau {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in [". . * 1\n* 2 3'\n4\n", "1 2\n3\n", ""] {
            assert_eq!(holes(s).to_string(), s);
        }
        assert!(". 1\n2 3".parse::<HoleTableau>().is_err());
    }

    #[test]
    fn tableau_round_trip() {
        let t = parse_tableau(". . . . 1\n. 2 4\n3").unwrap();
        let h = HoleTableau::from_tableau(&t);
        assert_eq!(h.get(Cell::new(2, 2)), Some(Slot::Gap));
        assert_eq!(h.letter(Cell::new(3, 3)), Some(Letter::high(3)));
        assert_eq!(h.to_tableau().unwrap(), t);
        assert!(holes("* 1\n2").to_tableau().is_none());
        // gaps in a row below a row without gaps
        assert!(holes("1 2 3\n. 4").to_tableau().is_none());
    }

    #[test]
    fn pruning_removes_trailing_bullets() {
        let mut h = holes(". . . . 1\n* * *\n");
        assert_eq!(h.prune(), 3);
        assert_eq!(h.to_string(), ". . . . 1\n");
        let mut h = holes("* * * * 1\n* 3\n");
        assert_eq!(h.prune(), 0);
        let mut h = holes("* * * * 1\n2 *\n");
        assert_eq!(h.prune(), 1);
        assert_eq!(h.to_string(), "* * * * 1\n2\n");
    }

    #[test]
    fn holes_aware_semistandardness() {
        assert!(holes("* 1 * 2\n3").letters_semistandard(false));
        assert!(!holes("* 2 * 1\n3").letters_semistandard(false));
        assert!(!holes("* 1'\n1'").letters_semistandard(false));
        assert!(holes("* 1'\n1'").letters_semistandard(true));
        assert!(holes("1' 2\n*").letters_semistandard(true));
        assert!(!holes("1' 2\n*").letters_semistandard(false));
        assert!(!holes("1 2' * 2'").letters_semistandard(false));
    }
}
