//! Haiman mixed insertion and the shifted plactic monoid.

mod hook;
mod plactic;

pub use hook::{enumerate_hook_set, in_hook_set, is_hook_word, longest_hook_subword_length};
pub use plactic::{
    plactic_equivalent, relation_closure, relation_instances, relation_neighbors, Family, FAMILIES,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::shapes::{Letter, StrictPartition};
use crate::tableau::{is_semistandard, ShiftedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InsertionError {
    #[error("only high letters can be mixed inserted, got {0}")]
    Marker(Letter),
    #[error("mixed insertion needs a straight-shape tableau")]
    NotStraight,
    #[error("word has length {word} but the partition has size {partition}")]
    Length { word: usize, partition: u32 },
    #[error("cannot parse word: {0}")]
    Syntax(String),
}

/// A word in the positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All words of length exactly `len` over `1..=n`, lexicographic.
    pub fn all(n: u32, len: usize) -> impl Iterator<Item = Word> {
        let total = (n as usize).pow(len as u32);
        (0..total).map(move |mut code| {
            let mut letters = vec![1; len];
            for slot in letters.iter_mut().rev() {
                *slot = (code % n as usize) as u32 + 1;
                code /= n as usize;
            }
            Word(letters)
        })
    }

    /// All words of length `1..=max_len` over `1..=n`, shortest first.
    pub fn all_up_to(n: u32, max_len: usize) -> impl Iterator<Item = Word> {
        (1..=max_len).flat_map(move |len| Word::all(n, len))
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = InsertionError;

    /// Space- and/or comma-separated positive integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(InsertionError::Syntax(format!("{t:?} is not a positive integer"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

enum Pending {
    /// Row-insert a high letter into row `.0` (0-based).
    Row(usize, Letter),
    /// Column-insert a low letter into column `.0` (0-based).
    Column(usize, Letter),
}

/// Mixed-inserts the high letter `x` into a straight-shape tableau.
pub fn mixed_insert_letter(t: &ShiftedTableau, x: Letter) -> Result<ShiftedTableau, InsertionError> {
    if x.is_low() {
        return Err(InsertionError::Marker(x));
    }
    if !t.shape().is_straight() {
        return Err(InsertionError::NotStraight);
    }
    // rows[r] starts in column r (0-based)
    let mut rows: Vec<Vec<Letter>> = t.rows().to_vec();
    let mut pending = Pending::Row(0, x);
    loop {
        match pending {
            Pending::Row(r, y) => {
                if r == rows.len() {
                    rows.push(vec![y]);
                    break;
                }
                let row = &mut rows[r];
                let Some(k) = row.iter().position(|&z| z > y) else {
                    row.push(y);
                    break;
                };
                let bumped = std::mem::replace(&mut row[k], y);
                pending = if bumped.is_high() && k != 0 {
                    Pending::Row(r + 1, bumped)
                } else {
                    Pending::Column(r + k + 1, bumped.lowered())
                };
            }
            Pending::Column(c, y) => {
                // rows meeting column c form a prefix 0..depth
                let depth = rows
                    .iter()
                    .enumerate()
                    .take_while(|(r, row)| *r <= c && c < r + row.len())
                    .count();
                match (0..depth).find(|&r| rows[r][c - r] > y) {
                    None => {
                        if depth < rows.len() {
                            debug_assert_eq!(depth + rows[depth].len(), c);
                            rows[depth].push(y);
                        } else {
                            debug_assert_eq!(depth, c);
                            rows.push(vec![y]);
                        }
                        break;
                    }
                    Some(r) => {
                        let bumped = std::mem::replace(&mut rows[r][c - r], y);
                        pending = if bumped.is_high() {
                            Pending::Row(r + 1, bumped)
                        } else {
                            Pending::Column(c + 1, bumped)
                        };
                    }
                }
            }
        }
    }
    let out = ShiftedTableau::from_rows(rows).expect("mixed insertion keeps a strict shape");
    debug_assert!(is_semistandard(&out), "mixed insertion broke semistandardness:\n{out}");
    Ok(out)
}

/// Left-to-right mixed insertion of `w`, every letter high.
pub fn mixed_insert_word(w: &[u32]) -> ShiftedTableau {
    w.iter().fold(ShiftedTableau::empty(), |t, &v| {
        mixed_insert_letter(&t, Letter::high(v)).expect("high letter into straight tableau")
    })
}

/// A shifted plactic class, identified with its mixed insertion tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlacticClass {
    representative: ShiftedTableau,
}

impl PlacticClass {
    pub fn of_word(w: &[u32]) -> Self {
        PlacticClass {
            representative: mixed_insert_word(w),
        }
    }

    /// A straight-shape semistandard tableau is its own representative.
    pub fn of_tableau(t: ShiftedTableau) -> Option<Self> {
        (t.shape().is_straight() && is_semistandard(&t)).then_some(PlacticClass { representative: t })
    }

    pub fn representative(&self) -> &ShiftedTableau {
        &self.representative
    }

    pub fn shape(&self) -> &StrictPartition {
        self.representative.shape().outer()
    }
}
