//! Heaps of type-A words.
//!
//! Entry `j` lies below entry `i` when `i` comes first in the word and the two
//! letters do not commute. Entries are kept in word order, so the id order of
//! any two entries in equal or adjacent columns is also their heap order.
//! Levels are canonical: every entry sits as high as its covers allow, which is
//! the Cartier-Foata layering.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    rank: usize,
    columns: Vec<usize>,
    /// Transitive reduction, as `(upper, lower)` entry id pairs.
    covers: Vec<(usize, usize)>,
    levels: Vec<usize>,
}

impl Heap {
    pub fn from_word(word: &Word) -> Self {
        let rank = word.rank();
        let columns = word.letters().to_vec();
        let mut last: Vec<Option<usize>> = vec![None; rank + 2];
        let mut covers = Vec::new();
        let mut levels = Vec::with_capacity(columns.len());

        for (j, &c) in columns.iter().enumerate() {
            let left = last[c - 1];
            let same = last[c];
            let right = last[c + 1];
            // The ancestors of j are those of the three latest neighbouring
            // entries. A same-column entry is shadowed by a later neighbour, and a
            // neighbour is shadowed by a later same-column entry.
            let mut upper = Vec::with_capacity(3);
            if let Some(s) = same {
                if left.is_none_or(|l| l < s) && right.is_none_or(|r| r < s) {
                    upper.push(s);
                }
            }
            for n in [left, right].into_iter().flatten() {
                if same.is_none_or(|s| s < n) {
                    upper.push(n);
                }
            }
            let level = upper.iter().map(|&u| levels[u] + 1).max().unwrap_or(0);
            covers.extend(upper.into_iter().map(|u| (u, j)));
            levels.push(level);
            last[c] = Some(j);
        }
        covers.sort_unstable();
        Self {
            rank,
            columns,
            covers,
            levels,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Column of each entry, in entry-id order.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    /// Lattice points `(level, column)` in lexicographic order.
    pub fn lattice_points(&self) -> Vec<(usize, usize)> {
        let mut points: Vec<_> = self
            .levels
            .iter()
            .copied()
            .zip(self.columns.iter().copied())
            .collect();
        points.sort_unstable();
        points
    }

    /// Compares heaps by their canonical lattice points.
    ///
    /// Entries in equal or adjacent columns always receive distinct canonical
    /// levels, so the lattice points recover the whole order.
    pub fn equals(&self, other: &Heap) -> Result<bool> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(self.lattice_points() == other.lattice_points())
    }

    /// Local criterion for "the underlying word is reduced and fully commutative":
    /// between any two consecutive entries of column `i` there must be entries of
    /// both columns `i - 1` and `i + 1`. Missing boundary columns never qualify.
    pub fn is_fc_reduced(&self) -> bool {
        let n = self.rank;
        let mut seen_any = vec![false; n + 2];
        let mut left_seen = vec![false; n + 2];
        let mut right_seen = vec![false; n + 2];
        for &c in &self.columns {
            if seen_any[c] && !(left_seen[c] && right_seen[c]) {
                return false;
            }
            seen_any[c] = true;
            left_seen[c] = false;
            right_seen[c] = false;
            right_seen[c - 1] = true;
            left_seen[c + 1] = true;
        }
        true
    }

    /// Reads levels top to bottom, each level left to right.
    pub fn to_word(&self) -> Word {
        let letters = self.lattice_points().into_iter().map(|(_, c)| c).collect();
        Word::new(self.rank, letters).expect("heap columns lie within rank")
    }

    /// One text row per level with blocks `[s_i]` centred on character column `2i`
    /// (scaled up when labels are wider than four characters).
    pub fn render(&self) -> String {
        if self.is_empty() {
            return String::new();
        }
        let width = |c: usize| format!("[s{c}]").len();
        let widest = self.columns.iter().map(|&c| width(c)).max().unwrap_or(4);
        let scale = widest.div_ceil(4);
        let depth = self.levels.iter().max().map_or(0, |m| m + 1);
        let mut rows = vec![Vec::<(usize, usize)>::new(); depth];
        for (level, col) in self.lattice_points() {
            rows[level].push((level, col));
        }
        let mut out = String::new();
        for row in rows {
            let mut line = String::new();
            for (_, col) in row {
                let block = format!("[s{col}]");
                let start = (2 * col * scale).saturating_sub(block.len() / 2);
                while line.len() < start {
                    line.push(' ');
                }
                line.push_str(&block);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Machine-readable dump: one `level column` line per entry, sorted.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (level, col) in self.lattice_points() {
            let _ = writeln!(out, "{level} {col}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::DEFAULT_BUDGET;

    fn heap(rank: usize, letters: &[usize]) -> Heap {
        Heap::from_word(&Word::new(rank, letters.to_vec()).unwrap())
    }

    #[test]
    fn hasse_diagram_of_first_example() {
        // s2 s1 s3 s2 s4 s5, entries 0-based.
        let h = heap(5, &[2, 1, 3, 2, 4, 5]);
        assert_eq!(
            h.covers(),
            &[(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (4, 5)]
        );
        assert_eq!(h.levels(), &[0, 1, 1, 2, 2, 3]);
    }

    #[test]
    fn empty_heap() {
        let h = heap(3, &[]);
        assert!(h.is_empty());
        assert_eq!(h.to_word(), Word::empty(3));
        assert_eq!(h.render(), "");
    }

    #[test]
    fn levels_of_factored_heap() {
        let h = heap(8, &[4, 7, 3, 5, 8, 2, 6, 1, 7]);
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|lvl| {
                h.lattice_points()
                    .into_iter()
                    .filter(|p| p.0 == lvl)
                    .map(|p| p.1)
                    .collect()
            })
            .collect();
        assert_eq!(
            rows,
            vec![vec![4, 7], vec![3, 5, 8], vec![2, 6], vec![1, 7]]
        );
    }

    #[test]
    fn equality() {
        let a = heap(4, &[2, 1, 3, 4, 2]);
        let b = heap(4, &[2, 3, 4, 1, 2]);
        assert_eq!(a.equals(&b), Ok(true));
        let c = heap(5, &[1, 2, 3, 4, 5, 2]);
        let d = heap(5, &[1, 3, 2, 3, 4, 5]);
        assert_eq!(c.equals(&d), Ok(false));
        assert_eq!(c.equals(&c), Ok(true));
        assert_eq!(a.equals(&c), Err(Error::RankMismatch { left: 4, right: 5 }));
    }

    #[test]
    fn fc_criterion() {
        assert!(heap(4, &[2, 1, 3, 4, 2]).is_fc_reduced());
        assert!(!heap(2, &[1, 2, 1]).is_fc_reduced());
        assert!(!heap(1, &[1, 1]).is_fc_reduced());
        assert!(heap(3, &[2, 1, 3, 2]).is_fc_reduced());
        // Boundary column s1 can never repeat.
        assert!(!heap(3, &[1, 2, 3, 2, 1]).is_fc_reduced());
    }

    #[test]
    fn cartier_foata_reading() {
        assert_eq!(
            heap(8, &[4, 7, 3, 5, 8, 2, 6, 1, 7]).to_word().to_string(),
            "4 7 3 5 8 2 6 1 7"
        );
        assert_eq!(
            heap(6, &[6, 2, 3, 1, 4, 2, 3, 5, 4]).to_word().to_string(),
            "2 6 1 3 2 4 3 5 4"
        );
        assert_eq!(heap(4, &[2, 3, 4, 1, 2]).to_word().to_string(), "2 1 3 2 4");
    }

    #[test]
    fn commutation_invariance() {
        let word = Word::new(4, vec![2, 1, 3, 4, 2]).unwrap();
        let h = Heap::from_word(&word);
        for other in word.commutation_class(DEFAULT_BUDGET).unwrap() {
            assert_eq!(Heap::from_word(&other).equals(&h), Ok(true));
        }
    }

    #[test]
    fn render_grid() {
        assert_eq!(heap(1, &[1]).render(), "[s1]\n");
        assert_eq!(
            heap(3, &[2, 1, 3, 2]).render(),
            "  [s2]\n[s1][s3]\n  [s2]\n"
        );
        assert_eq!(heap(3, &[2, 1, 3, 2]).dump(), "0 2\n1 1\n1 3\n2 2\n");
    }

    #[test]
    fn render_wide_labels_do_not_overlap() {
        let out = heap(12, &[10, 12]).render();
        assert_eq!(out.lines().count(), 1);
        assert!(out.contains("[s10]") && out.contains("[s12]"));
    }
}
