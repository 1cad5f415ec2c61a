//! Hook words and the word sets `hook(λ)` behind shifted free Schur functions.

use super::{InsertionError, Word};
use crate::shapes::StrictPartition;

/// A strictly decreasing prefix followed by a weakly increasing suffix.
pub fn is_hook_word(w: &[u32]) -> bool {
    // the maximal strictly decreasing run can always serve as the prefix
    let mut split = 0;
    while split + 1 < w.len() && w[split] > w[split + 1] {
        split += 1;
    }
    w.get(split..).unwrap_or(&[]).windows(2).all(|p| p[0] <= p[1])
}

/// Length of a longest hook subword, in `O(len²)`.
///
/// For every split point, the longest strictly decreasing subword to its left
/// plus the longest weakly increasing subword to its right.
pub fn longest_hook_subword_length(w: &[u32]) -> usize {
    let n = w.len();
    let mut dec_end = vec![1usize; n];
    for i in 0..n {
        for j in 0..i {
            if w[j] > w[i] {
                dec_end[i] = dec_end[i].max(dec_end[j] + 1);
            }
        }
    }
    let mut inc_start = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if w[j] >= w[i] {
                inc_start[i] = inc_start[i].max(inc_start[j] + 1);
            }
        }
    }
    let mut best_left = vec![0usize; n + 1];
    for s in 1..=n {
        best_left[s] = best_left[s - 1].max(dec_end[s - 1]);
    }
    let mut best_right = vec![0usize; n + 1];
    for s in (0..n).rev() {
        best_right[s] = best_right[s + 1].max(inc_start[s]);
    }
    (0..=n).map(|s| best_left[s] + best_right[s]).max().unwrap_or(0)
}

/// Block lengths of `hook(λ)`: the smallest part first.
fn block_lengths(lambda: &StrictPartition) -> Vec<usize> {
    lambda.parts().iter().rev().map(|&p| p as usize).collect()
}

pub fn in_hook_set(w: &[u32], lambda: &StrictPartition) -> Result<bool, InsertionError> {
    if w.len() != lambda.size() as usize {
        return Err(InsertionError::Length {
            word: w.len(),
            partition: lambda.size(),
        });
    }
    let mut start = 0;
    let mut prev: Option<&[u32]> = None;
    for len in block_lengths(lambda) {
        let block = &w[start..start + len];
        if !is_hook_word(block) {
            return Ok(false);
        }
        if let Some(p) = prev {
            let joined = &w[start - p.len()..start + len];
            if longest_hook_subword_length(joined) != len {
                return Ok(false);
            }
        }
        prev = Some(block);
        start += len;
    }
    Ok(true)
}

/// Every word of `hook(λ)` over `1..=n`, lexicographic.
pub fn enumerate_hook_set(lambda: &StrictPartition, n: u32) -> Vec<Word> {
    let lengths = block_lengths(lambda);
    let mut hooks_by_len: Vec<Vec<Word>> = Vec::new();
    for &len in &lengths {
        if hooks_by_len.len() <= len {
            hooks_by_len.resize(len + 1, Vec::new());
        }
        if hooks_by_len[len].is_empty() {
            hooks_by_len[len] = Word::all(n, len).filter(|w| is_hook_word(&w.0)).collect();
        }
    }
    let mut out = Vec::new();
    let mut acc: Vec<u32> = Vec::new();
    extend_blocks(&lengths, &hooks_by_len, 0, &mut acc, &mut out);
    out
}

fn extend_blocks(lengths: &[usize], hooks: &[Vec<Word>], i: usize, acc: &mut Vec<u32>, out: &mut Vec<Word>) {
    if i == lengths.len() {
        out.push(Word(acc.clone()));
        return;
    }
    let len = lengths[i];
    let prev_len = if i == 0 { 0 } else { lengths[i - 1] };
    for block in &hooks[len] {
        let start = acc.len();
        acc.extend_from_slice(&block.0);
        if i == 0 || longest_hook_subword_length(&acc[start - prev_len..]) == len {
            extend_blocks(lengths, hooks, i + 1, acc, out);
        }
        acc.truncate(start);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook_by_splits(w: &[u32]) -> bool {
        (0..=w.len()).any(|k| {
            w[..k].windows(2).all(|p| p[0] > p[1]) && w[k..].windows(2).all(|p| p[0] <= p[1])
        })
    }

    fn longest_by_subsets(w: &[u32]) -> usize {
        (0u32..1 << w.len())
            .filter_map(|mask| {
                let sub: Vec<u32> = (0..w.len()).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
                hook_by_splits(&sub).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn sp(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn hook_examples() {
        assert!(is_hook_word(&[4, 2, 1, 1, 6, 8, 8]));
        assert!(is_hook_word(&[1, 1, 2, 5]));
        assert!(is_hook_word(&[]));
        assert!(!is_hook_word(&[1, 2, 1]));
        assert!(is_hook_word(&[2, 1, 2]));
        assert!(!is_hook_word(&[2, 2, 1]));
    }

    #[test]
    fn hook_test_agrees_with_split_search() {
        for w in Word::all_up_to(4, 7) {
            assert_eq!(is_hook_word(&w.0), hook_by_splits(&w.0), "{w}");
        }
    }

    #[test]
    fn longest_examples() {
        assert_eq!(longest_hook_subword_length(&[4, 2, 1, 1, 6, 8, 8]), 7);
        assert_eq!(longest_hook_subword_length(&[1, 2, 1, 2]), 3);
        assert_eq!(longest_hook_subword_length(&[]), 0);
    }

    #[test]
    fn longest_agrees_with_subset_oracle() {
        for w in Word::all_up_to(3, 8) {
            assert_eq!(longest_hook_subword_length(&w.0), longest_by_subsets(&w.0), "{w}");
        }
    }

    #[test]
    fn hook_set_membership() {
        assert!(in_hook_set(&[4, 2, 1, 1, 6, 8, 8], &sp(&[7])).unwrap());
        assert!(!in_hook_set(&[2, 1, 2], &sp(&[2, 1])).unwrap());
        assert!(!in_hook_set(&[2, 1, 1], &sp(&[2, 1])).unwrap());
        assert!(in_hook_set(&[1, 2, 1], &sp(&[2, 1])).unwrap());
        assert!(matches!(in_hook_set(&[1, 2], &sp(&[2, 1])), Err(InsertionError::Length { .. })));
    }

    #[test]
    fn hook_set_enumeration() {
        let words = |p: &[u32], n| -> Vec<Vec<u32>> {
            enumerate_hook_set(&sp(p), n).into_iter().map(|w| w.0).collect()
        };
        assert_eq!(words(&[1], 2), vec![vec![1], vec![2]]);
        assert_eq!(words(&[2], 2), vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]);
        assert_eq!(words(&[2, 1], 2), vec![vec![1, 2, 1], vec![2, 2, 1]]);
        for lambda in [sp(&[3, 1]), sp(&[3, 2]), sp(&[2, 1])] {
            let fast = enumerate_hook_set(&lambda, 3);
            let slow: Vec<Word> = Word::all(3, lambda.size() as usize)
                .filter(|w| in_hook_set(&w.0, &lambda).unwrap())
                .collect();
            assert_eq!(fast, slow);
        }
    }
}
