//! Extended Sagan–Worley jeu de taquin on Q-tableaux and the skew plactic
//! Schur P-function built from it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Exec;
use crate::hole::{HoleTableau, Slot};
use crate::shapes::{Cell, Letter, Marker, SkewShape};
use crate::tableau::{enumerate_tableaux, raise_diagonals, Mode, ShiftedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwError {
    #[error("the hole at {0} has no letter to its right or below")]
    NoNeighbor(Cell),
    #[error("state has no hole")]
    NoHole,
    #[error("slide at {cell} changed the south-westmost marker of value {value}")]
    MarkerChanged { value: u32, cell: Cell },
}

/// Which inner corner the next slide path starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum CornerOrder {
    /// The last box of the lowest inner row.
    #[default]
    LowestFirst,
    /// The removable inner box in the highest row.
    HighestFirst,
}

/// A Q-tableau with at most one hole, stored as a bullet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwState {
    grid: HoleTableau,
    hole: Option<Cell>,
}

impl SwState {
    pub fn new(grid: HoleTableau) -> Self {
        let hole = grid.bullets().first().copied();
        SwState { grid, hole }
    }

    pub fn grid(&self) -> &HoleTableau {
        &self.grid
    }

    pub fn hole(&self) -> Option<Cell> {
        self.hole
    }
}

fn move_into(g: &mut HoleTableau, from: Cell, to: Cell, placed: Letter) {
    g.set(to, Slot::Entry(placed));
    g.set(from, Slot::Bullet);
}

/// One local move of the hole.
///
/// Off the diagonal the smaller of the right and lower neighbours moves in;
/// for equal lows the right one moves, for equal highs the lower one. On the
/// diagonal equal values rewrite the 2×2 corner as
/// `• x′ / x′ → x′ x / •` and `• x′ / x → x x / •`.
pub fn sw_slide(state: &mut SwState) -> Result<(), SwError> {
    let h = state.hole.ok_or(SwError::NoHole)?;
    let g = &mut state.grid;
    let right_cell = Cell::new(h.row, h.col + 1);
    let right = g.letter(right_cell);
    if h.is_diagonal() {
        // the only other box of the 2×2 corner is the next diagonal box
        let diag_cell = Cell::new(h.row + 1, h.col + 1);
        let next = match (right, g.letter(diag_cell)) {
            (None, _) => return Err(SwError::NoNeighbor(h)),
            (Some(x), Some(y)) if x.value == y.value && x.is_low() => {
                let top = if y.is_low() { x } else { x.raised() };
                g.set(h, Slot::Entry(top));
                g.set(right_cell, Slot::Entry(x.raised()));
                g.set(diag_cell, Slot::Bullet);
                diag_cell
            }
            (Some(x), _) => {
                move_into(g, right_cell, h, x);
                right_cell
            }
        };
        state.hole = Some(next);
        return Ok(());
    }
    let below_cell = Cell::new(h.row + 1, h.col);
    let below = g.letter(below_cell);
    let next = match (right, below) {
        (None, None) => return Err(SwError::NoNeighbor(h)),
        (Some(x), None) => {
            move_into(g, right_cell, h, x);
            right_cell
        }
        (None, Some(y)) => {
            move_into(g, below_cell, h, y);
            below_cell
        }
        (Some(x), Some(y)) => {
            let right_moves = if x == y { x.is_low() } else { x < y };
            if right_moves {
                move_into(g, right_cell, h, x);
                right_cell
            } else {
                move_into(g, below_cell, h, y);
                below_cell
            }
        }
    };
    state.hole = Some(next);
    Ok(())
}

/// The removable inner box the next slide starts from, if any.
fn inner_corner(g: &HoleTableau, order: CornerOrder) -> Option<Cell> {
    let gaps: Vec<usize> = g
        .rows()
        .iter()
        .map(|r| r.iter().take_while(|s| **s == Slot::Gap).count())
        .collect();
    let removable = |i: usize| {
        let here = gaps[i];
        let below = gaps.get(i + 1).copied().unwrap_or(0);
        here > 0 && (here - 1 > below || (here == 1 && below == 0))
    };
    let row = match order {
        CornerOrder::LowestFirst => (0..gaps.len()).rev().find(|&i| removable(i)),
        CornerOrder::HighestFirst => (0..gaps.len()).find(|&i| removable(i)),
    }?;
    Some(Cell::new(row + 1, row + gaps[row]))
}

/// Marker of the south-westmost letter of value `x`: the one in the lowest
/// row, westmost within it.
pub fn southwestmost_marker(t: &ShiftedTableau, x: u32) -> Option<Marker> {
    southwestmost(t.entries(), x)
}

fn southwestmost(entries: impl Iterator<Item = (Cell, Letter)>, x: u32) -> Option<Marker> {
    entries
        .filter(|(_, l)| l.value == x)
        .max_by(|(a, _), (b, _)| a.row.cmp(&b.row).then(b.col.cmp(&a.col)))
        .map(|(_, l)| l.marker)
}

fn markers(g: &HoleTableau, max_value: u32) -> Vec<Option<Marker>> {
    (1..=max_value).map(|x| southwestmost(g.entries(), x)).collect()
}

/// Rectification under a chosen corner order; with `audit` set, the
/// south-westmost marker of every value is checked after every slide.
pub fn sw_rectify_with(t: &ShiftedTableau, order: CornerOrder, audit: bool) -> Result<ShiftedTableau, SwError> {
    let mut grid = HoleTableau::from_tableau(t);
    let max = t.max_value();
    let expected = if audit { markers(&grid, max) } else { Vec::new() };
    while let Some(corner) = inner_corner(&grid, order) {
        grid.set(corner, Slot::Bullet);
        let mut state = SwState::new(grid);
        loop {
            match sw_slide(&mut state) {
                Ok(()) => {
                    if audit {
                        let now = markers(&state.grid, max);
                        if let Some(i) = (0..now.len()).find(|&i| now[i] != expected[i]) {
                            return Err(SwError::MarkerChanged {
                                value: i as u32 + 1,
                                cell: state.hole.expect("hole present"),
                            });
                        }
                    }
                }
                Err(SwError::NoNeighbor(h)) => {
                    state.grid.pop_row_end(h.row);
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        grid = state.grid;
    }
    Ok(grid.to_tableau().expect("rectified grid is a straight tableau"))
}

/// Rectification with the canonical corner order.
pub fn sw_rectify(t: &ShiftedTableau) -> ShiftedTableau {
    sw_rectify_with(t, CornerOrder::LowestFirst, false).expect("unaudited slides cannot fail")
}

/// How many Q-tableaux of each straight shape tableau arise as rectifications
/// of the Q-tableaux of `shape` with values at most `n`.
pub fn rectification_counts(shape: &SkewShape, n: u32, exec: Exec) -> BTreeMap<ShiftedTableau, u64> {
    let all: Vec<ShiftedTableau> = enumerate_tableaux(shape, n, Mode::QTableau).collect();
    let mut counts = BTreeMap::new();
    for t in exec.map(&all, sw_rectify) {
        *counts.entry(t).or_insert(0) += 1;
    }
    counts
}

/// Number of Q-tableaux of `shape` (values at most `n`) rectifying to `t`.
pub fn preimage_count(t: &ShiftedTableau, shape: &SkewShape, n: u32) -> u64 {
    enumerate_tableaux(shape, n, Mode::QTableau)
        .filter(|s| sw_rectify(s) == *t)
        .count() as u64
}

/// A number `num / 2^exp` kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        while d.exp > 0 && (&d.num % 2u32).is_zero() {
            d.num /= 2;
            d.exp -= 1;
        }
        if d.num.is_zero() {
            d.exp = 0;
        }
        d
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exp = self.exp.max(rhs.exp);
        let a = &self.num << (exp - self.exp);
        let b = &rhs.num << (exp - rhs.exp);
        Dyadic::new(a + b, exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

/// Finite sum of shifted plactic classes with dyadic coefficients, keyed by
/// the semistandard straight-shape representative.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalPlacticSum {
    terms: BTreeMap<ShiftedTableau, Dyadic>,
}

impl FormalPlacticSum {
    pub fn add_term(&mut self, class: ShiftedTableau, c: Dyadic) {
        let sum = match self.terms.get(&class) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&class);
        } else {
            self.terms.insert(class, sum);
        }
    }

    pub fn coefficient(&self, class: &ShiftedTableau) -> Dyadic {
        self.terms.get(class).cloned().unwrap_or_else(|| Dyadic::integer(0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ShiftedTableau, &Dyadic)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Dyadic {
        self.terms.values().fold(Dyadic::integer(0), |acc, c| &acc + c)
    }
}

/// `2^{-diag}` times the sum over Q-tableaux `T` of `shape` of the class of
/// the rectification of `T` with its diagonal raised.
pub fn skew_plactic_schur_p(shape: &SkewShape, n: u32, exec: Exec) -> FormalPlacticSum {
    let diag = shape.diag() as u32;
    let mut out = FormalPlacticSum::default();
    for (t, count) in rectification_counts(shape, n, exec) {
        out.add_term(raise_diagonals(&t), Dyadic::new(BigInt::from(count), diag));
    }
    out
}

/// `2^k` as a big integer.
pub(crate) fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}
