//! Exhaustive backtracking over power-free words.
//!
//! Depth-first search over all words (on 2 or 3 letters) whose every factor
//! satisfies the freeness constraint. Appending a letter can only create
//! violations in factors ending at the new position, so pruning tests just
//! the suffixes of the extended word: one failure-function pass over the
//! reversed word yields the least period of every suffix.

use crate::power::{failure_function, FreenessMode};
use crate::rational::Rational;
use crate::word::{Symbol, TernaryWord};
use crate::{Error, Result};

/// Result of an avoidance search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchSummary {
    pub alphabet_size: usize,
    pub threshold: Rational,
    pub mode: FreenessMode,
    pub max_len: usize,
    /// `counts[k]` is the number of words of length `k + 1` visited. When
    /// `terminated` is true these are the exact counts of all satisfying
    /// words; otherwise the search stopped at the first word of length
    /// `max_len` and the counts cover only the part of the tree walked.
    pub counts: Vec<u64>,
    /// Longest word found (the first one of maximal length, in letter order).
    pub longest: TernaryWord,
    /// True when the whole tree was exhausted below `max_len`.
    pub terminated: bool,
}

impl SearchSummary {
    pub fn longest_length(&self) -> usize {
        self.longest.len()
    }
}

struct Searcher {
    letters: Vec<Symbol>,
    threshold: Rational,
    mode: FreenessMode,
    max_len: usize,
    word: Vec<Symbol>,
    reversed: Vec<Symbol>,
    counts: Vec<u64>,
    longest: Vec<Symbol>,
}

impl Searcher {
    /// True if every factor ending at the last position of the current word
    /// satisfies the constraint.
    fn last_position_admissible(&self) -> bool {
        let fail = failure_function(&self.reversed);
        for len in 1..=self.reversed.len() {
            let period = len - fail[len];
            let exp = Rational::new(len as i64, period as i64);
            let violated = match self.mode {
                FreenessMode::Strict => exp >= self.threshold,
                FreenessMode::Plus => exp > self.threshold,
            };
            if violated {
                return false;
            }
        }
        true
    }

    /// Returns true when a word of length `max_len` was reached, which stops
    /// the search: the tree is then known not to be exhausted below the cap.
    fn extend(&mut self) -> bool {
        for i in 0..self.letters.len() {
            let letter = self.letters[i];
            self.word.push(letter);
            self.reversed.insert(0, letter);
            if self.last_position_admissible() {
                self.counts[self.word.len() - 1] += 1;
                if self.word.len() > self.longest.len() {
                    self.longest = self.word.clone();
                }
                if self.word.len() == self.max_len || self.extend() {
                    return true;
                }
            }
            self.word.pop();
            self.reversed.remove(0);
        }
        false
    }
}

/// Depth-first search for words over `alphabet_size` letters all of whose
/// factors satisfy the `mode`/`threshold` constraint, up to `max_len`.
pub fn avoidance_search(
    alphabet_size: usize,
    threshold: Rational,
    mode: FreenessMode,
    max_len: usize,
) -> Result<SearchSummary> {
    if !(2..=3).contains(&alphabet_size) {
        return Err(Error::UnsupportedAlphabet(alphabet_size));
    }
    if threshold < Rational::from_integer(1) {
        return Err(Error::ThresholdBelowOne(threshold));
    }
    if max_len < 1 {
        return Err(Error::InvalidSearchLength);
    }
    let mut searcher = Searcher {
        letters: Symbol::ALL[..alphabet_size].to_vec(),
        threshold,
        mode,
        max_len,
        word: Vec::with_capacity(max_len),
        reversed: Vec::with_capacity(max_len),
        counts: vec![0; max_len],
        longest: Vec::new(),
    };
    let reached_cap = searcher.extend();
    Ok(SearchSummary {
        alphabet_size,
        threshold,
        mode,
        max_len,
        counts: searcher.counts,
        longest: TernaryWord::new(searcher.longest),
        terminated: !reached_cap,
    })
}
