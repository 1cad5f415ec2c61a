//! Mixed jeu de taquin: a bullet-driven rectification that reproduces mixed
//! insertion.
//!
//! Each pass fills the bottom row of the inner shape with bullets and
//! repeatedly slides the least available letter by the first matching rule
//! of six ordered collections.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hole::{HoleTableau, Slot};
use crate::insertion::mixed_insert_word;
use crate::shapes::{Cell, Letter, SkewShape, StrictPartition};
use crate::tableau::{is_semistandard, ShiftedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JdtError {
    #[error("tableau already has straight shape")]
    NoInnerShape,
    #[error("no slide applies to {letter} at {cell} in\n{state}")]
    Stuck { letter: Letter, cell: Cell, state: String },
    #[error("input tableau is not semistandard")]
    NotSemistandard,
    #[error("only high letters can be adjoined, got {0}")]
    LowLetter(Letter),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

/// A broken rectification invariant, found by [`audit_rectification`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantViolation {
    #[error("pass {pass}, step {step}: low letter on the diagonal")]
    LowOnDiagonal { pass: usize, step: usize },
    #[error("pass {pass}, step {step}: letters are not semistandard")]
    NotSemistandard { pass: usize, step: usize },
    #[error("pass {pass}: {later} became least available after {earlier}")]
    NotMonotone { pass: usize, earlier: Letter, later: Letter },
    #[error("pass {pass}: a letter slid again after another letter moved")]
    NotContiguous { pass: usize },
    #[error("pass {pass}: {count} bullets left with no available letter")]
    LeftoverBullets { pass: usize, count: usize },
}

/// One applied slide. `rule` is the collection number followed by a rule
/// letter, e.g. `"3a"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlideStep {
    pub collection: u8,
    pub rule: &'static str,
    pub letter: Letter,
    pub from: Cell,
    pub to: Cell,
    /// The letter as it lands, after raising or lowering.
    pub placed: Letter,
    /// A second letter moved by the same slide.
    pub partner: Option<(Cell, Cell)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub pass: usize,
    pub step: SlideStep,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.step;
        write!(
            f,
            "pass={} coll={} rule={} letter={} from={} to={}",
            self.pass, s.collection, s.rule, s.letter, s.from, s.to
        )
    }
}

/// `T ⊕ y`: a new first row whose only box holds `y`, one column east of
/// everything in `T`, with `T` shifted one box south-east.
pub fn oplus(t: &ShiftedTableau, y: Letter) -> Result<ShiftedTableau, JdtError> {
    if y.is_low() {
        return Err(JdtError::LowLetter(y));
    }
    if t.shape().num_rows() == 0 {
        return Ok(ShiftedTableau::from_rows(vec![vec![y]]).expect("one box"));
    }
    let width = t.shape().outer().part(0);
    let mut outer = vec![width + 2];
    outer.extend_from_slice(t.shape().outer().parts());
    let mut inner = vec![width + 1];
    inner.extend_from_slice(t.shape().inner().parts());
    let shape = SkewShape::new(
        StrictPartition::new(outer).expect("prepending a longer row keeps strictness"),
        StrictPartition::new(inner).expect("prepending a longer row keeps strictness"),
    )
    .expect("inner row fits");
    let mut rows = vec![vec![y]];
    rows.extend_from_slice(t.rows());
    Ok(ShiftedTableau::new(shape, rows).expect("rows match shape"))
}

/// The anti-diagonal tableau `(…((∅ ⊕ w₁) ⊕ w₂) …) ⊕ wₖ`.
pub fn staircase(w: &[u32]) -> ShiftedTableau {
    w.iter().fold(ShiftedTableau::empty(), |t, &v| {
        oplus(&t, Letter::high(v)).expect("high letters only")
    })
}

/// Turns every box of the bottom row of the inner shape into a bullet, then
/// deletes the bullets with nothing south-east of them.
pub fn place_bullets(u: &HoleTableau) -> Result<HoleTableau, JdtError> {
    let bottom = u
        .slots()
        .filter(|(_, s)| *s == Slot::Gap)
        .map(|(c, _)| c.row)
        .max()
        .ok_or(JdtError::NoInnerShape)?;
    let mut out = u.clone();
    for (c, s) in u.slots() {
        if c.row == bottom && s == Slot::Gap {
            out.set(c, Slot::Bullet);
        }
    }
    out.prune();
    Ok(out)
}

/// Letters with a bullet directly above or to the left, least first.
///
/// Equal low letters are ordered north to south, equal high letters west to
/// east.
pub fn available_entries(u: &HoleTableau) -> Vec<(Letter, Cell)> {
    let mut out: Vec<(Letter, usize, Cell)> = u
        .entries()
        .filter(|(c, _)| {
            (c.row > 1 && u.is_bullet(Cell::new(c.row - 1, c.col)))
                || (c.col > c.row && u.is_bullet(Cell::new(c.row, c.col - 1)))
        })
        .map(|(c, l)| (l, if l.is_low() { c.row } else { c.col }, c))
        .collect();
    out.sort();
    out.into_iter().map(|(l, _, c)| (l, c)).collect()
}

fn step(
    collection: u8,
    rule: &'static str,
    letter: Letter,
    from: Cell,
    to: Cell,
    placed: Letter,
) -> SlideStep {
    SlideStep {
        collection,
        rule,
        letter,
        from,
        to,
        placed,
        partner: None,
    }
}

/// Chooses the slide for the letter `y` at `b` by collection precedence.
fn choose_slide(u: &HoleTableau, y: Letter, b: Cell) -> Option<SlideStep> {
    let (r, c) = (b.row, b.col);
    let up = (r > 1).then(|| Cell::new(r - 1, c));
    let left = (c > r).then(|| Cell::new(r, c - 1));
    let up_left = (r > 1 && c > 1).then(|| Cell::new(r - 1, c - 1));
    let bullet = |cell: Option<Cell>| cell.is_some_and(|x| u.is_bullet(x));
    let letter = |cell: Option<Cell>| cell.and_then(|x| u.letter(x));
    let (u_b, l_b, ul_b) = (bullet(up), bullet(left), bullet(up_left));
    let x = letter(up_left);
    let left_diagonal = left.is_some_and(Cell::is_diagonal);

    // diagonal slides
    if u_b && ul_b && (l_b || b.is_diagonal()) {
        let rule = if l_b { "1a" } else { "1b" };
        return Some(step(1, rule, y, b, up_left?, y));
    }
    // singular slides
    if let Some(x) = x {
        if u_b && l_b && x != y {
            return Some(if y.is_low() {
                step(2, "2a", y, b, up?, y)
            } else {
                step(2, "2b", y, b, left?, y)
            });
        }
    }
    // not-singular slides
    if y.is_low() && l_b && left_diagonal && u_b && x.is_some() {
        let far = (c >= 2).then(|| Cell::new(r - 1, c - 2));
        if letter(far).is_some() {
            return Some(step(3, "3a", y, b, left?, y.raised()));
        }
    }
    if x.is_some() && u_b && l_b {
        return Some(if y.is_low() {
            step(3, "3b", y, b, left?, y)
        } else {
            step(3, "3c", y, b, up?, y)
        });
    }
    // a low letter meeting its high twin on the diagonal below
    if y.is_low() && l_b && left_diagonal {
        let below = Cell::new(r + 1, c);
        if below.is_diagonal() && u.letter(below) == Some(y.raised()) {
            let mut s = step(4, "4a", y, b, left?, y.raised());
            s.partner = Some((below, b));
            return Some(s);
        }
    }
    if l_b && left_diagonal {
        return Some(step(5, "5a", y, b, left?, y.raised()));
    }
    if y.is_high() && b.is_diagonal() && u_b && x.is_some() {
        return Some(step(5, "5b", y, b, up?, y.lowered()));
    }
    if l_b {
        return Some(step(6, "6a", y, b, left?, y));
    }
    if u_b {
        return Some(step(6, "6b", y, b, up?, y));
    }
    None
}

/// Slides the least available letter once and deletes exhausted bullets.
/// Returns `None` when no letter is available.
pub fn apply_slide_step(u: &mut HoleTableau) -> Result<Option<SlideStep>, JdtError> {
    let Some(&(y, b)) = available_entries(u).first() else {
        return Ok(None);
    };
    let s = choose_slide(u, y, b).ok_or_else(|| JdtError::Stuck {
        letter: y,
        cell: b,
        state: u.to_string(),
    })?;
    u.set(s.to, Slot::Entry(s.placed));
    u.set(s.from, Slot::Bullet);
    if let Some((pf, pt)) = s.partner {
        let moved = u.letter(pf).expect("partner is a letter");
        u.set(pt, Slot::Entry(moved));
        u.set(pf, Slot::Bullet);
    }
    u.prune();
    Ok(Some(s))
}

/// One pass: bullets placed, slides applied until nothing is available.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PassRecord {
    pub start: HoleTableau,
    pub steps: Vec<SlideStep>,
    /// State after each step.
    pub states: Vec<HoleTableau>,
    /// Bullets turned back into gaps at the end of the pass.
    pub leftover_bullets: usize,
}

fn run_pass_recorded(u: &HoleTableau, keep_states: bool) -> Result<(HoleTableau, PassRecord), JdtError> {
    let mut cur = place_bullets(u)?;
    let mut record = PassRecord {
        start: cur.clone(),
        steps: Vec::new(),
        states: Vec::new(),
        leftover_bullets: 0,
    };
    while let Some(s) = apply_slide_step(&mut cur)? {
        record.steps.push(s);
        if keep_states {
            record.states.push(cur.clone());
        }
    }
    let leftover = cur.bullets();
    record.leftover_bullets = leftover.len();
    for c in leftover {
        cur.set(c, Slot::Gap);
    }
    Ok((cur, record))
}

/// A single pass, ending with leftover bullets turned into gaps.
pub fn run_pass(u: &HoleTableau) -> Result<HoleTableau, JdtError> {
    run_pass_recorded(u, false).map(|(t, _)| t)
}

fn is_straight(u: &HoleTableau) -> bool {
    u.slots().all(|(_, s)| s != Slot::Gap)
}

fn rectify_inner(t: &ShiftedTableau, keep_states: bool) -> Result<(ShiftedTableau, Vec<PassRecord>), JdtError> {
    if !is_semistandard(t) {
        return Err(JdtError::NotSemistandard);
    }
    let mut cur = HoleTableau::from_tableau(t);
    let mut passes = Vec::new();
    while !is_straight(&cur) {
        let (next, record) = run_pass_recorded(&cur, keep_states)?;
        passes.push(record);
        cur = next;
    }
    let out = cur.to_tableau().expect("a finished pass leaves a skew tableau");
    Ok((out, passes))
}

pub fn mixed_rectify(t: &ShiftedTableau) -> Result<ShiftedTableau, JdtError> {
    rectify_inner(t, false).map(|(out, _)| out)
}

/// A rectification with its full history.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Rectification {
    pub result: ShiftedTableau,
    pub passes: Vec<PassRecord>,
}

impl Rectification {
    /// Trace lines, passes numbered from 1.
    pub fn trace(&self) -> Vec<TraceEvent> {
        self.passes
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.steps.iter().map(move |s| TraceEvent {
                    pass: i + 1,
                    step: s.clone(),
                })
            })
            .collect()
    }
}

pub fn mixed_rectify_traced(t: &ShiftedTableau) -> Result<Rectification, JdtError> {
    rectify_inner(t, true).map(|(result, passes)| Rectification { result, passes })
}

/// Checks the rectification invariants on every recorded state:
/// no low diagonal letters, semistandard letters, least available letters
/// weakly increasing within a pass, each letter's moves in one unbroken run
/// within a pass, and no bullets stranded at the end of a pass.
pub fn audit_rectification(rec: &Rectification) -> Result<(), InvariantViolation> {
    for (i, p) in rec.passes.iter().enumerate() {
        let pass = i + 1;
        for (k, state) in std::iter::once(&p.start).chain(&p.states).enumerate() {
            if !state.no_low_diagonal() {
                return Err(InvariantViolation::LowOnDiagonal { pass, step: k });
            }
            if !state.letters_semistandard(false) {
                return Err(InvariantViolation::NotSemistandard { pass, step: k });
            }
        }
        if p.leftover_bullets > 0 {
            return Err(InvariantViolation::LeftoverBullets {
                pass,
                count: p.leftover_bullets,
            });
        }
        let mut ids: HashMap<Cell, usize> = p.start.entries().enumerate().map(|(id, (c, _))| (c, id)).collect();
        let mut finished = vec![false; ids.len()];
        let mut current: Option<usize> = None;
        let mut last_start: Option<Letter> = None;
        for s in &p.steps {
            let id = ids.remove(&s.from).expect("moved letter is tracked");
            ids.insert(s.to, id);
            if let Some((pf, pt)) = s.partner {
                let pid = ids.remove(&pf).expect("partner is tracked");
                ids.insert(pt, pid);
            }
            if current != Some(id) {
                if finished[id] {
                    return Err(InvariantViolation::NotContiguous { pass });
                }
                if let Some(c) = current {
                    finished[c] = true;
                }
                if let Some(prev) = last_start {
                    if s.letter < prev {
                        return Err(InvariantViolation::NotMonotone {
                            pass,
                            earlier: prev,
                            later: s.letter,
                        });
                    }
                }
                last_start = Some(s.letter);
                current = Some(id);
            }
        }
    }
    Ok(())
}

/// Mixed rectification of the staircase of `w` agrees with its mixed
/// insertion.
pub fn check_rect_equals_insertion(w: &[u32]) -> Result<bool, JdtError> {
    Ok(mixed_rectify(&staircase(w))? == mixed_insert_word(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::parse_tableau;

    fn tab(s: &str) -> ShiftedTableau {
        parse_tableau(s).unwrap()
    }

    fn holes(s: &str) -> HoleTableau {
        s.parse().unwrap()
    }

    const EXAMPLE: &str = ". . . . 1\n. 2 4\n3";

    #[test]
    fn oplus_builds_staircases() {
        assert_eq!(oplus(&ShiftedTableau::empty(), Letter::high(5)).unwrap(), tab("5"));
        let s = staircase(&[7, 3, 9, 4]);
        assert_eq!(s.shape().to_string(), "7,5,3,1/6,4,2");
        for (cell, v) in [((1, 7), 4), ((2, 6), 9), ((3, 5), 3), ((4, 4), 7)] {
            assert_eq!(s.get(Cell::new(cell.0, cell.1)), Some(Letter::high(v)));
        }
        assert!(HoleTableau::from_tableau(&s).bullets().is_empty());
        assert_eq!(oplus(&s, Letter::low(1)), Err(JdtError::LowLetter(Letter::low(1))));
    }

    #[test]
    fn bullet_placement() {
        let u = HoleTableau::from_tableau(&tab(EXAMPLE));
        let b = place_bullets(&u).unwrap();
        assert_eq!(b.bullets(), vec![Cell::new(2, 2)]);
        let one_row = holes(". . . . . 1\n2 3' 4");
        assert_eq!(place_bullets(&one_row).unwrap().bullets().len(), 5);
        let straight = HoleTableau::from_tableau(&tab("1 2"));
        assert_eq!(place_bullets(&straight), Err(JdtError::NoInnerShape));
        // nothing south-east: the bullet vanishes at once
        let lonely = HoleTableau::from_tableau(&tab(". . . 1\n."));
        assert_eq!(place_bullets(&lonely).unwrap().to_string(), ". . . 1\n");
    }

    #[test]
    fn availability() {
        assert!(available_entries(&holes("1 2\n3")).is_empty());
        let u = place_bullets(&HoleTableau::from_tableau(&tab(EXAMPLE))).unwrap();
        assert_eq!(available_entries(&u), vec![(Letter::high(2), Cell::new(2, 3))]);
        let twin = holes("* * 1 1\n2");
        let got = available_entries(&twin);
        assert_eq!(got[0], (Letter::high(1), Cell::new(1, 3)));
        let lows = holes(". * 5'\n* 5'");
        assert_eq!(available_entries(&lows)[0].1, Cell::new(1, 3));
    }

    #[test]
    fn example_step_by_step() {
        let mut u = place_bullets(&HoleTableau::from_tableau(&tab(EXAMPLE))).unwrap();
        let expected = [
            ". . . . 1\n2 * 4\n3\n",
            ". . . . 1\n2 3' 4\n",
        ];
        let s = apply_slide_step(&mut u).unwrap().unwrap();
        assert_eq!((s.collection, s.rule), (5, "5a"));
        assert_eq!(u.to_string(), expected[0]);
        let s = apply_slide_step(&mut u).unwrap().unwrap();
        assert_eq!((s.rule, s.placed), ("5b", Letter::low(3)));
        assert_eq!(u.to_string(), expected[1]);
        assert!(apply_slide_step(&mut u).unwrap().is_none());
    }

    #[test]
    fn example_passes() {
        let u = HoleTableau::from_tableau(&tab(EXAMPLE));
        let after_one = run_pass(&u).unwrap();
        assert_eq!(after_one.to_string(), ". . . . 1\n2 3' 4\n");
        let after_two = run_pass(&after_one).unwrap();
        assert_eq!(after_two.to_tableau().unwrap(), tab("1 2' 3'\n4"));
        assert_eq!(mixed_rectify(&tab(EXAMPLE)).unwrap(), tab("1 2' 3'\n4"));
    }

    #[test]
    fn example_second_pass_displays() {
        let after_one = run_pass(&HoleTableau::from_tableau(&tab(EXAMPLE))).unwrap();
        let mut u = place_bullets(&after_one).unwrap();
        let mut seen = vec![u.to_string()];
        while apply_slide_step(&mut u).unwrap().is_some() {
            seen.push(u.to_string());
        }
        for display in [
            "* * * * 1\n2 3' 4\n",
            "1 * * *\n2 3' 4\n",
            "1 2' * *\n* 3' 4\n",
            "1 2' 3' *\n* * 4\n",
            "1 2' 3'\n4\n",
        ] {
            assert!(seen.iter().any(|s| s == display), "missing\n{display}");
        }
    }

    #[test]
    fn straight_input_is_fixed() {
        let t = tab("1 2' 3'\n4");
        assert_eq!(mixed_rectify(&t).unwrap(), t);
        assert_eq!(mixed_rectify(&tab("1'")), Err(JdtError::NotSemistandard));
    }

    #[test]
    fn staircase_example() {
        let rect = mixed_rectify(&staircase(&[7, 3, 9, 4])).unwrap();
        assert_eq!(rect, tab("3 4 7'\n9"));
        assert!(check_rect_equals_insertion(&[7, 3, 9, 4]).unwrap());
        assert!(check_rect_equals_insertion(&[]).unwrap());
    }

    #[test]
    fn trace_lines() {
        let rec = mixed_rectify_traced(&tab(EXAMPLE)).unwrap();
        let trace = rec.trace();
        assert_eq!(trace[0].to_string(), "pass=1 coll=5 rule=5a letter=2 from=(2,3) to=(2,2)");
        assert_eq!(trace[1].to_string(), "pass=1 coll=5 rule=5b letter=3 from=(3,3) to=(2,3)");
        audit_rectification(&rec).unwrap();
    }

    #[test]
    fn rectification_matches_insertion_on_short_words() {
        for w in crate::insertion::Word::all_up_to(3, 5) {
            let rec = mixed_rectify_traced(&staircase(&w.0)).unwrap();
            audit_rectification(&rec).unwrap();
            assert_eq!(rec.result, mixed_insert_word(&w.0), "{w}");
        }
    }
}
