//! The eight shifted plactic relation families on consecutive windows.

use std::collections::{BTreeSet, VecDeque};

use super::{mixed_insert_word, Word};

/// One relation family `left ∼ right` on letters `a, b, c, d`.
///
/// Patterns list variable indices (`0 = a`, …, `3 = d`) position by position.
#[derive(Debug, Clone, Copy)]
pub struct Family {
    pub name: &'static str,
    pub left: [usize; 4],
    pub right: [usize; 4],
    pub condition: fn(u32, u32, u32, u32) -> bool,
}

pub const FAMILIES: [Family; 8] = [
    Family { name: "abdc~adbc", left: [0, 1, 3, 2], right: [0, 3, 1, 2], condition: |a, b, c, d| a <= b && b <= c && c < d },
    Family { name: "acdb~acbd", left: [0, 2, 3, 1], right: [0, 2, 1, 3], condition: |a, b, c, d| a <= b && b < c && c <= d },
    Family { name: "dacb~adcb", left: [3, 0, 2, 1], right: [0, 3, 2, 1], condition: |a, b, c, d| a <= b && b < c && c < d },
    Family { name: "badc~bdac", left: [1, 0, 3, 2], right: [1, 3, 0, 2], condition: |a, b, c, d| a < b && b <= c && c < d },
    Family { name: "cbda~cdba", left: [2, 1, 3, 0], right: [2, 3, 1, 0], condition: |a, b, c, d| a < b && b < c && c <= d },
    Family { name: "dbca~bdca", left: [3, 1, 2, 0], right: [1, 3, 2, 0], condition: |a, b, c, d| a < b && b <= c && c < d },
    Family { name: "bcda~bcad", left: [1, 2, 3, 0], right: [1, 2, 0, 3], condition: |a, b, c, d| a < b && b <= c && c <= d },
    Family { name: "cadb~cdab", left: [2, 0, 3, 1], right: [2, 3, 0, 1], condition: |a, b, c, d| a <= b && b < c && c <= d },
];

impl Family {
    fn holds(&self, v: [u32; 4]) -> bool {
        (self.condition)(v[0], v[1], v[2], v[3])
    }

    fn spell(pattern: [usize; 4], v: [u32; 4]) -> [u32; 4] {
        pattern.map(|i| v[i])
    }

    /// Reads the variables off `window` through `pattern`, if the family
    /// condition holds for them.
    fn matches(&self, pattern: [usize; 4], window: &[u32]) -> Option<[u32; 4]> {
        let mut v = [0; 4];
        for (pos, &var) in pattern.iter().enumerate() {
            v[var] = window[pos];
        }
        self.holds(v).then_some(v)
    }

    /// The two sides of every instance with letters in `1..=n`.
    pub fn instances(&self, n: u32) -> Vec<(Word, Word)> {
        let mut out = Vec::new();
        for w in Word::all(n, 4) {
            let v = [w.0[0], w.0[1], w.0[2], w.0[3]];
            if self.holds(v) {
                out.push((
                    Word(Self::spell(self.left, v).to_vec()),
                    Word(Self::spell(self.right, v).to_vec()),
                ));
            }
        }
        out
    }
}

/// Instances of all families over `1..=n`.
pub fn relation_instances(n: u32) -> Vec<(&'static str, Word, Word)> {
    FAMILIES
        .iter()
        .flat_map(|f| f.instances(n).into_iter().map(move |(l, r)| (f.name, l, r)))
        .collect()
}

/// Words one relation away from `w`, in either direction.
pub fn relation_neighbors(w: &[u32]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for start in 0..w.len().saturating_sub(3) {
        let window = &w[start..start + 4];
        for f in &FAMILIES {
            for (from, to) in [(f.left, f.right), (f.right, f.left)] {
                if let Some(v) = f.matches(from, window) {
                    let mut next = w.to_vec();
                    next[start..start + 4].copy_from_slice(&Family::spell(to, v));
                    if next != w {
                        out.insert(Word(next));
                    }
                }
            }
        }
    }
    out
}

/// Breadth-first closure of `w` under [`relation_neighbors`].
pub fn relation_closure(w: &[u32]) -> BTreeSet<Word> {
    let mut seen = BTreeSet::from([Word(w.to_vec())]);
    let mut queue = VecDeque::from([Word(w.to_vec())]);
    while let Some(u) = queue.pop_front() {
        for v in relation_neighbors(&u.0) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

pub fn plactic_equivalent(u: &[u32], v: &[u32]) -> bool {
    mixed_insert_word(u) == mixed_insert_word(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_family_example() {
        assert!(relation_neighbors(&[1, 1, 3, 2]).contains(&Word(vec![1, 3, 1, 2])));
        assert!(relation_neighbors(&[1, 3, 1, 2]).contains(&Word(vec![1, 1, 3, 2])));
        assert!(relation_neighbors(&[1, 2, 3]).is_empty());
    }

    #[test]
    fn equivalence_examples() {
        assert!(plactic_equivalent(&[3, 1, 2], &[3, 1, 2]));
        assert!(plactic_equivalent(&[1, 1, 3, 2], &[1, 3, 1, 2]));
        assert!(!plactic_equivalent(&[1, 2], &[2, 1]));
    }

    #[test]
    fn every_instance_preserves_insertion() {
        for (name, l, r) in relation_instances(5) {
            assert_eq!(mixed_insert_word(&l.0), mixed_insert_word(&r.0), "{name}: {l} ~ {r}");
        }
    }

    #[test]
    fn neighbours_are_symmetric() {
        for w in Word::all(3, 5) {
            for v in relation_neighbors(&w.0) {
                assert!(relation_neighbors(&v.0).contains(&w));
            }
        }
    }

    #[test]
    fn closure_stays_in_class() {
        let w = [2, 1, 3, 1, 2];
        let t = mixed_insert_word(&w);
        let closure = relation_closure(&w);
        assert!(closure.len() > 1);
        assert!(closure.iter().all(|v| mixed_insert_word(&v.0) == t));
    }
}
