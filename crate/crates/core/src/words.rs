//! Expressions over the generators `s_1, ..., s_n` of the type-A Coxeter group.
//!
//! Generators `s_i` and `s_j` commute when `|i - j| >= 2` and satisfy the braid
//! relation `s_i s_j s_i = s_j s_i s_j` when `|i - j| = 1`. A [`Word`] carries its
//! rank explicitly because the same letters index different diagrams at different
//! ranks.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::heaps::Heap;

/// Default state budget for the brute-force searches.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// A finite sequence of generator indices in `1..=rank`. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > rank) {
            return Err(Error::LetterOutOfRange { letter, rank });
        }
        Ok(Self { rank, letters })
    }

    pub fn empty(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated generator indices, e.g. `"2 6 1 3"`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// Number of occurrences of each generator; index 0 is `s_1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank];
        for &l in &self.letters {
            counts[l - 1] += 1;
        }
        counts
    }

    /// Swaps the commuting letters at 1-based positions `pos` and `pos + 1`.
    pub fn apply_commutation(&self, pos: usize) -> Result<Word> {
        if pos == 0 || pos >= self.len() {
            return Err(Error::OutOfRange {
                pos,
                len: self.len(),
            });
        }
        let (a, b) = (self.letters[pos - 1], self.letters[pos]);
        if a.abs_diff(b) < 2 {
            return Err(Error::PositionNotCommutable { pos });
        }
        let mut letters = self.letters.clone();
        letters.swap(pos - 1, pos);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// Replaces the braid pattern `i j i` starting at 1-based `pos` by `j i j`.
    pub fn apply_braid(&self, pos: usize) -> Result<Word> {
        if pos == 0 || pos + 2 > self.len() {
            return Err(Error::NoBraidAtPosition { pos });
        }
        let s = &self.letters[pos - 1..pos + 2];
        if s[0] != s[2] || s[0].abs_diff(s[1]) != 1 {
            return Err(Error::NoBraidAtPosition { pos });
        }
        let (i, j) = (s[0], s[1]);
        let mut letters = self.letters.clone();
        letters[pos - 1..pos + 2].copy_from_slice(&[j, i, j]);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// All words reachable from `self` by commutations, including `self`.
    pub fn commutation_class(&self, limit: usize) -> Result<BTreeSet<Word>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(self.letters.clone());
        queue.push_back(self.letters.clone());
        while let Some(cur) = queue.pop_front() {
            for next in commutation_neighbors(&cur) {
                if !seen.contains(&next) {
                    if seen.len() >= limit {
                        return Err(Error::ClassTooLarge { limit });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen
            .into_iter()
            .map(|letters| Word {
                rank: self.rank,
                letters,
            })
            .collect())
    }

    /// Brute-force reducedness test.
    ///
    /// A word is reduced iff no word reachable from it by commutations and braid
    /// moves has two equal adjacent letters.
    pub fn is_reduced_oracle(&self, budget: usize) -> Result<bool> {
        let verdict = explore(&self.letters, budget, has_adjacent_equal)?;
        Ok(verdict.is_none())
    }

    /// Whether this is a reduced expression of a fully commutative element.
    ///
    /// The heap criterion answers directly when it holds. Otherwise the word is
    /// either unreduced (an error) or reduced and not FC, which is decided by the
    /// brute-force reducedness search under `budget`.
    pub fn is_fc(&self, budget: usize) -> Result<bool> {
        if Heap::from_word(self).is_fc_reduced() {
            return Ok(true);
        }
        if self.is_reduced_oracle(budget)? {
            Ok(false)
        } else {
            Err(Error::NotReduced)
        }
    }

    /// Slow FC test: scans the whole commutation class for a braid pattern.
    pub fn is_fc_oracle(&self, budget: usize) -> Result<bool> {
        if !self.is_reduced_oracle(budget)? {
            return Err(Error::NotReduced);
        }
        let class = self.commutation_class(budget)?;
        Ok(!class.iter().any(|w| has_braid_pattern(&w.letters)))
    }

    /// One-pass brute-force verdict for "reduced and fully commutative".
    ///
    /// Explores the closure under commutations and braid moves and rejects as soon
    /// as any reachable word shows a cancellation or a braid pattern.
    pub fn fc_reduced_oracle(&self, budget: usize) -> Result<bool> {
        let hit = explore(&self.letters, budget, |w| {
            has_adjacent_equal(w) || has_braid_pattern(w)
        })?;
        Ok(hit.is_none())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

fn has_adjacent_equal(w: &[usize]) -> bool {
    w.windows(2).any(|p| p[0] == p[1])
}

fn has_braid_pattern(w: &[usize]) -> bool {
    w.windows(3)
        .any(|t| t[0] == t[2] && t[0].abs_diff(t[1]) == 1)
}

fn commutation_neighbors(w: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i].abs_diff(w[i + 1]) >= 2)
        .map(move |i| {
            let mut next = w.to_vec();
            next.swap(i, i + 1);
            next
        })
}

fn braid_neighbors(w: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0..w.len().saturating_sub(2))
        .filter(|&i| w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1)
        .map(move |i| {
            let mut next = w.to_vec();
            next[i] = w[i + 1];
            next[i + 1] = w[i];
            next[i + 2] = w[i + 1];
            next
        })
}

/// Breadth-first closure under commutations and braid moves, stopping at the
/// first state satisfying `stop`.
fn explore(
    start: &[usize],
    budget: usize,
    stop: impl Fn(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(cur) = queue.pop_front() {
        if stop(&cur) {
            return Ok(Some(cur));
        }
        for next in commutation_neighbors(&cur).chain(braid_neighbors(&cur)) {
            if !seen.contains(&next) {
                if seen.len() >= budget {
                    return Err(Error::SearchBudgetExceeded { budget });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}
