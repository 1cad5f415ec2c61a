//! Bounded enumeration of tableaux by backtracking.
//!
//! Boxes are filled in row-major order, each trying letters in ascending
//! order, so tableaux come out lexicographically ordered by their row-major
//! reading. Only the west and north neighbours need checking because rows and
//! columns of a shifted skew shape are contiguous.

use std::str::FromStr;

use super::ShiftedTableau;
use crate::shapes::{Cell, Letter, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Semistandard,
    /// Diagonal markers are free; raising them must give a semistandard tableau.
    QTableau,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "semistandard" | "ss" => Ok(Mode::Semistandard),
            "qtableau" | "q" => Ok(Mode::QTableau),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

/// Lazy stream of tableaux; see [`enumerate_tableaux`].
#[derive(Debug, Clone)]
pub struct Tableaux {
    shape: SkewShape,
    mode: Mode,
    alphabet: u32,
    cells: Vec<Cell>,
    west: Vec<Option<usize>>,
    north: Vec<Option<usize>>,
    next_rank: Vec<u32>,
    filled: Vec<Letter>,
    // letters as compared: diagonal boxes raised in Q-tableau mode
    effective: Vec<Letter>,
    pos: usize,
    started: bool,
    done: bool,
}

/// Every tableau of `mode` on `shape` with values at most `n`, each once.
pub fn enumerate_tableaux(shape: &SkewShape, n: u32, mode: Mode) -> Tableaux {
    let cells = shape.cells();
    let index = |c: Cell| cells.iter().position(|&d| d == c);
    let west = cells
        .iter()
        .map(|c| (c.col > 1).then(|| index(Cell::new(c.row, c.col - 1))).flatten())
        .collect();
    let north = cells
        .iter()
        .map(|c| (c.row > 1).then(|| index(Cell::new(c.row - 1, c.col))).flatten())
        .collect();
    let len = cells.len();
    Tableaux {
        shape: shape.clone(),
        mode,
        alphabet: 2 * n,
        cells,
        west,
        north,
        next_rank: vec![0; len],
        filled: vec![Letter::high(1); len],
        effective: vec![Letter::high(1); len],
        pos: 0,
        started: false,
        done: false,
    }
}

impl Tableaux {
    fn effective_letter(&self, pos: usize, l: Letter) -> Option<Letter> {
        let diagonal = self.cells[pos].is_diagonal();
        match self.mode {
            Mode::Semistandard if diagonal && l.is_low() => None,
            Mode::QTableau if diagonal => Some(l.raised()),
            _ => Some(l),
        }
    }

    fn fits(&self, pos: usize, here: Letter) -> bool {
        if let Some(w) = self.west[pos] {
            let west = self.effective[w];
            if west > here || (west == here && here.is_low()) {
                return false;
            }
        }
        if let Some(nb) = self.north[pos] {
            let north = self.effective[nb];
            if north > here || (north == here && here.is_high()) {
                return false;
            }
        }
        true
    }

    fn emit(&self) -> ShiftedTableau {
        let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); self.shape.num_rows()];
        for (cell, &l) in self.cells.iter().zip(&self.filled) {
            rows[cell.row - 1].push(l);
        }
        ShiftedTableau::new(self.shape.clone(), rows).expect("enumerated filling matches its shape")
    }
}

impl Iterator for Tableaux {
    type Item = ShiftedTableau;

    fn next(&mut self) -> Option<ShiftedTableau> {
        if self.done {
            return None;
        }
        let len = self.cells.len();
        if !self.started {
            self.started = true;
        } else if len == 0 || self.pos == 0 {
            self.done = true;
            return None;
        } else {
            self.pos -= 1;
        }
        loop {
            if self.pos == len {
                return Some(self.emit());
            }
            let pos = self.pos;
            let mut found = None;
            for rank in self.next_rank[pos]..self.alphabet {
                let l = Letter::from_rank(rank);
                if let Some(eff) = self.effective_letter(pos, l) {
                    if self.fits(pos, eff) {
                        found = Some((rank, l, eff));
                        break;
                    }
                }
            }
            match found {
                Some((rank, l, eff)) => {
                    self.filled[pos] = l;
                    self.effective[pos] = eff;
                    self.next_rank[pos] = rank + 1;
                    self.pos += 1;
                    if self.pos < len {
                        self.next_rank[self.pos] = 0;
                    }
                }
                None => {
                    if pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.pos -= 1;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{is_q_tableau, is_semistandard};
    use std::collections::BTreeSet;

    fn naive(shape: &SkewShape, n: u32, mode: Mode) -> BTreeSet<ShiftedTableau> {
        let cells = shape.cells();
        let alphabet: Vec<Letter> = Letter::alphabet(n).collect();
        let total = alphabet.len().pow(cells.len() as u32);
        let mut out = BTreeSet::new();
        for mut code in 0..total {
            let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); shape.num_rows()];
            for c in &cells {
                rows[c.row - 1].push(alphabet[code % alphabet.len()]);
                code /= alphabet.len();
            }
            let t = ShiftedTableau::new(shape.clone(), rows).unwrap();
            let ok = match mode {
                Mode::Semistandard => is_semistandard(&t),
                Mode::QTableau => is_q_tableau(&t),
            };
            if ok {
                out.insert(t);
            }
        }
        out
    }

    #[test]
    fn small_counts() {
        let one: SkewShape = "1".parse().unwrap();
        assert_eq!(enumerate_tableaux(&one, 2, Mode::Semistandard).count(), 2);
        assert_eq!(enumerate_tableaux(&one, 2, Mode::QTableau).count(), 4);
        let two: SkewShape = "2".parse().unwrap();
        let got: Vec<String> = enumerate_tableaux(&two, 2, Mode::Semistandard)
            .map(|t| t.to_string())
            .collect();
        assert_eq!(got, vec!["1 1\n", "1 2'\n", "1 2\n", "2 2\n"]);
    }

    #[test]
    fn empty_shape_has_one_filling() {
        let e: SkewShape = "3,1/3,1".parse().unwrap();
        assert_eq!(enumerate_tableaux(&e, 2, Mode::Semistandard).count(), 1);
    }

    #[test]
    fn agrees_with_filtered_brute_force() {
        for size in 1..=5u32 {
            for outer in crate::shapes::StrictPartition::all_of_size(size) {
                for inner in outer.subpartitions() {
                    let shape = SkewShape::new(outer.clone(), inner).unwrap();
                    for n in 1..=3 {
                        if (2 * n as usize).pow(shape.size() as u32) > 200_000 {
                            continue;
                        }
                        for mode in [Mode::Semistandard, Mode::QTableau] {
                            let got: Vec<_> = enumerate_tableaux(&shape, n, mode).collect();
                            let set: BTreeSet<_> = got.iter().cloned().collect();
                            assert_eq!(set.len(), got.len(), "duplicates for {shape}");
                            assert_eq!(set, naive(&shape, n, mode), "{shape} n={n} {mode:?}");
                            assert!(got.windows(2).all(|w| w[0].rows() < w[1].rows()));
                        }
                    }
                }
            }
        }
    }
}
