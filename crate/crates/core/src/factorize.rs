//! Reduced factorization of a loop-free diagram into simple diagrams.
//!
//! The box is cut into columns `C_1..C_n`, where `C_i` lies between nodes `i` and
//! `i + 1`. Chords passing through a column split it into regions numbered by
//! depth from the north face; odd depths are the 1-regions. Each 1-region of
//! `C_i` is one factor `d_i`, and the 1-regions ordered by diagonal adjacency form
//! the heap of the fully commutative element indexing the diagram.
//!
//! Everything is computed from crossing orders instead of coordinates. A chord
//! meets the vertical line between two nodes at most once, so the order in which
//! chords cross that line is the order of their endpoints along the boundary on
//! either side of it.

use std::collections::VecDeque;

use crate::diagram::{Chord, Diagram, Endpoint};
use crate::error::{Error, Result};
use crate::heaps::Heap;
use crate::words::Word;

/// Chords passing through column `C_column`, listed top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnProfile {
    pub column: usize,
    pub crossings: Vec<Chord>,
}

impl ColumnProfile {
    /// `m_i`, always even for a valid diagram.
    pub fn edge_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn region_count(&self) -> usize {
        self.crossings.len() + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegionId {
    pub column: usize,
    pub depth: usize,
}

impl RegionId {
    pub fn is_one_region(&self) -> bool {
        self.depth % 2 == 1
    }
}

/// Where the chord at a separator's top or bottom node goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    Left,
    Right,
    Vertical,
}

/// The vertical line through `N_line` and `S_line`, shared by columns `line - 1`
/// and `line`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorProfile {
    pub line: usize,
    /// Chords strictly spanning the line, top to bottom.
    pub crossings: Vec<Chord>,
    pub top: Incidence,
    pub bottom: Incidence,
}

/// Internal node ids follow [`Diagram`]: `N_p -> p - 1`, `S_p -> k + p - 1`.
struct Geometry<'a> {
    k: usize,
    partner: &'a [usize],
}

impl<'a> Geometry<'a> {
    fn new(d: &'a Diagram) -> Self {
        Self {
            k: d.k(),
            partner: d.partner_table(),
        }
    }

    fn pos(&self, x: usize) -> usize {
        if x < self.k {
            x + 1
        } else {
            x - self.k + 1
        }
    }

    fn north(&self, p: usize) -> usize {
        p - 1
    }

    fn south(&self, p: usize) -> usize {
        self.k + p - 1
    }

    fn chord(&self, x: usize) -> Chord {
        let to_ep = |y: usize| {
            if y < self.k {
                Endpoint::north(y + 1)
            } else {
                Endpoint::south(y - self.k + 1)
            }
        };
        Chord::new(to_ep(x), to_ep(self.partner[x]))
    }

    /// Canonical chord id: the smaller node id of the pair.
    fn id(&self, x: usize) -> usize {
        x.min(self.partner[x])
    }

    /// Chords with one endpoint at position `<= left_max` and the other at
    /// `>= right_min`, ordered top to bottom by their left endpoints:
    /// north `left_max, ..., 1`, then south `1, ..., left_max`.
    fn by_left_key(&self, left_max: usize, right_min: usize) -> Vec<usize> {
        let north = (1..=left_max).rev().map(|p| self.north(p));
        let south = (1..=left_max).map(|p| self.south(p));
        north
            .chain(south)
            .filter(|&x| self.pos(self.partner[x]) >= right_min)
            .map(|x| self.id(x))
            .collect()
    }

    /// Same set ordered by right endpoints: north `right_min, ..., k`, then south
    /// `k, ..., right_min`.
    fn by_right_key(&self, left_max: usize, right_min: usize) -> Vec<usize> {
        let north = (right_min..=self.k).map(|p| self.north(p));
        let south = (right_min..=self.k).rev().map(|p| self.south(p));
        north
            .chain(south)
            .filter(|&x| self.pos(self.partner[x]) <= left_max)
            .map(|x| self.id(x))
            .collect()
    }

    fn column(&self, i: usize) -> Result<Vec<usize>> {
        let left = self.by_left_key(i, i + 1);
        if left != self.by_right_key(i, i + 1) {
            return Err(Error::InconsistentCrossingOrder(format!("column {i}")));
        }
        Ok(left)
    }

    fn spanning(&self, j: usize) -> Result<Vec<usize>> {
        let left = self.by_left_key(j - 1, j + 1);
        if left != self.by_right_key(j - 1, j + 1) {
            return Err(Error::InconsistentCrossingOrder(format!("separator {j}")));
        }
        Ok(left)
    }

    fn incidence(&self, node: usize, line: usize) -> Incidence {
        let other = self.partner[node];
        let p = self.pos(other);
        if p == line {
            // The only other node at this position is the opposite face's.
            Incidence::Vertical
        } else if p < line {
            Incidence::Left
        } else {
            Incidence::Right
        }
    }
}

pub fn column_profiles(d: &Diagram) -> Result<Vec<ColumnProfile>> {
    let g = Geometry::new(d);
    (1..d.k())
        .map(|i| {
            Ok(ColumnProfile {
                column: i,
                crossings: g.column(i)?.into_iter().map(|x| g.chord(x)).collect(),
            })
        })
        .collect()
}

pub fn separator_profiles(d: &Diagram) -> Result<Vec<SeparatorProfile>> {
    let g = Geometry::new(d);
    (2..d.k())
        .map(|j| {
            Ok(SeparatorProfile {
                line: j,
                crossings: g.spanning(j)?.into_iter().map(|x| g.chord(x)).collect(),
                top: g.incidence(g.north(j), j),
                bottom: g.incidence(g.south(j), j),
            })
        })
        .collect()
}

/// Horizontally adjacent `(left depth, right depth)` pairs across every separator,
/// indexed by `line - 2`.
fn adjacency_by_separator(d: &Diagram) -> Result<Vec<Vec<(usize, usize)>>> {
    let g = Geometry::new(d);
    let k = d.k();
    let columns: Vec<Vec<usize>> = (1..k).map(|i| g.column(i)).collect::<Result<_>>()?;
    let mut spanning_index = vec![usize::MAX; 2 * k];
    let mut out = Vec::with_capacity(k.saturating_sub(2));

    for j in 2..k {
        if g.incidence(g.north(j), j) == Incidence::Vertical {
            out.push(Vec::new());
            continue;
        }
        let spanning = g.spanning(j)?;
        let c = spanning.len();
        for (t, &id) in spanning.iter().enumerate() {
            spanning_index[id] = t + 1;
        }
        let top_id = g.id(g.north(j));
        let bottom_id = g.id(g.south(j));
        // Scale: TOP = 0, spanning chords 1..=c, BOT = c + 1.
        let attach = |id: usize| {
            if id == top_id {
                0
            } else if id == bottom_id {
                c + 1
            } else {
                spanning_index[id]
            }
        };
        let region_of_gap = |crossings: &[usize]| -> Vec<usize> {
            // Region p spans attach(p)..attach(p + 1); gap t is (t, t + 1).
            let mut bounds = Vec::with_capacity(crossings.len() + 2);
            bounds.push(0);
            bounds.extend(crossings.iter().map(|&id| attach(id)));
            bounds.push(c + 1);
            let mut owner = vec![0; c + 1];
            for p in 0..bounds.len() - 1 {
                for slot in owner.iter_mut().take(bounds[p + 1]).skip(bounds[p]) {
                    *slot = p;
                }
            }
            owner
        };
        let left = region_of_gap(&columns[j - 2]);
        let right = region_of_gap(&columns[j - 1]);
        let mut pairs: Vec<(usize, usize)> = left.into_iter().zip(right).collect();
        pairs.dedup();
        out.push(pairs);
    }
    Ok(out)
}

/// All horizontally adjacent region pairs, left column first.
pub fn horizontal_adjacency(d: &Diagram) -> Result<Vec<(RegionId, RegionId)>> {
    let per_line = adjacency_by_separator(d)?;
    Ok(per_line
        .into_iter()
        .enumerate()
        .flat_map(|(idx, pairs)| {
            let j = idx + 2;
            pairs.into_iter().map(move |(l, r)| {
                (
                    RegionId {
                        column: j - 1,
                        depth: l,
                    },
                    RegionId {
                        column: j,
                        depth: r,
                    },
                )
            })
        })
        .collect())
}

/// The directed graph on 1-regions. An edge `R -> R'` means the region directly
/// below `R` is horizontally adjacent to `R'`; `R` is then above `R'` in the heap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionGraph {
    rank: usize,
    vertices: Vec<RegionId>,
    edges: Vec<(usize, usize)>,
}

impl RegionGraph {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Vertices sorted by column, then depth. The label of a vertex is `s_column`.
    pub fn vertices(&self) -> &[RegionId] {
        &self.vertices
    }

    /// Edges as indices into [`RegionGraph::vertices`], sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, r: RegionId) -> Option<usize> {
        self.vertices.binary_search(&r).ok()
    }

    pub fn has_edge(&self, from: RegionId, to: RegionId) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.edges.binary_search(&(a, b)).is_ok(),
            _ => false,
        }
    }

    /// Longest-path levels from the sources, or `None` when the graph has a cycle.
    pub fn levels(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            indegree[b] += 1;
            succ[a].push(b);
        }
        let mut level = vec![0; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = queue.pop_front() {
            done += 1;
            for &w in &succ[v] {
                level[w] = level[w].max(level[v] + 1);
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        (done == n).then_some(level)
    }

    /// Vertices with no incoming edge.
    pub fn sources(&self) -> Vec<RegionId> {
        let mut has_in = vec![false; self.vertices.len()];
        for &(_, b) in &self.edges {
            has_in[b] = true;
        }
        self.vertices
            .iter()
            .zip(has_in)
            .filter(|(_, h)| !h)
            .map(|(v, _)| *v)
            .collect()
    }

    /// Reads the labels level by level, each level in ascending column order.
    pub fn to_word(&self) -> Result<Word> {
        let levels = self.levels().ok_or(Error::CyclicRegionGraph)?;
        let mut points: Vec<(usize, usize)> = levels
            .into_iter()
            .zip(self.vertices.iter().map(|v| v.column))
            .collect();
        points.sort_unstable();
        Word::new(self.rank, points.into_iter().map(|(_, c)| c).collect())
    }

    pub fn to_heap(&self) -> Result<Heap> {
        Ok(Heap::from_word(&self.to_word()?))
    }
}

pub fn region_graph(d: &Diagram) -> Result<RegionGraph> {
    let columns = column_profiles(d)?;
    let adjacency = adjacency_by_separator(d)?;
    let n = d.rank();

    let vertices: Vec<RegionId> = columns
        .iter()
        .flat_map(|c| {
            (1..c.region_count()).step_by(2).map(move |depth| RegionId {
                column: c.column,
                depth,
            })
        })
        .collect();
    let index = |r: RegionId| vertices.binary_search(&r).ok();

    let mut edges = Vec::new();
    for (a, r) in vertices.iter().enumerate() {
        let below = r.depth + 1;
        // Separator `line` sits between columns `line - 1` and `line`.
        if r.column >= 2 {
            for &(l, rr) in &adjacency[r.column - 2] {
                if rr == below && l % 2 == 1 {
                    if let Some(b) = index(RegionId {
                        column: r.column - 1,
                        depth: l,
                    }) {
                        edges.push((a, b));
                    }
                }
            }
        }
        if r.column < n {
            for &(l, rr) in &adjacency[r.column - 1] {
                if l == below && rr % 2 == 1 {
                    if let Some(b) = index(RegionId {
                        column: r.column + 1,
                        depth: rr,
                    }) {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(RegionGraph {
        rank: n,
        vertices,
        edges,
    })
}

/// A reduced expression, in Cartier-Foata normal form, of the fully commutative
/// element indexing `d`.
pub fn factor(d: &Diagram) -> Result<Word> {
    region_graph(d)?.to_word()
}

/// Number of occurrences of each `s_i` in any reduced factorization of `d`, read
/// off as half the number of chords through each column.
pub fn factor_multiplicities(d: &Diagram) -> Result<Vec<usize>> {
    Ok(column_profiles(d)?
        .iter()
        .map(|c| c.edge_count() / 2)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Chord;

    fn n(p: usize) -> Endpoint {
        Endpoint::north(p)
    }
    fn s(p: usize) -> Endpoint {
        Endpoint::south(p)
    }
    fn ch(a: Endpoint, b: Endpoint) -> Chord {
        Chord::new(a, b)
    }
    fn r(column: usize, depth: usize) -> RegionId {
        RegionId { column, depth }
    }

    fn seven_node() -> Diagram {
        Diagram::from_chords(
            7,
            &[
                ch(s(2), s(7)),
                ch(n(1), n(4)),
                ch(n(2), n(3)),
                ch(s(3), s(6)),
                ch(s(4), s(5)),
                ch(n(5), s(1)),
                ch(n(6), n(7)),
            ],
        )
        .unwrap()
    }

    fn graph_example() -> Diagram {
        Diagram::from_chords(
            9,
            &[
                ch(n(3), n(6)),
                ch(n(4), n(5)),
                ch(n(7), n(8)),
                ch(n(1), s(3)),
                ch(n(2), s(4)),
                ch(n(9), s(5)),
                ch(s(1), s(2)),
                ch(s(6), s(9)),
                ch(s(7), s(8)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn column_counts() {
        assert!(column_profiles(&Diagram::identity(5))
            .unwrap()
            .iter()
            .all(|c| c.edge_count() == 0));
        let profiles = column_profiles(&Diagram::simple(2, 4).unwrap()).unwrap();
        let counts: Vec<usize> = profiles.iter().map(|c| c.edge_count()).collect();
        assert_eq!(counts, vec![0, 2, 0, 0]);
        assert_eq!(profiles[1].crossings, vec![ch(n(2), n(3)), ch(s(2), s(3))]);

        let counts: Vec<usize> = column_profiles(&seven_node())
            .unwrap()
            .iter()
            .map(|c| c.edge_count())
            .collect();
        assert_eq!(counts, vec![2, 4, 4, 4, 2, 2]);
    }

    #[test]
    fn separators() {
        for sep in separator_profiles(&Diagram::identity(4)).unwrap() {
            assert!(sep.crossings.is_empty());
            assert_eq!(
                (sep.top, sep.bottom),
                (Incidence::Vertical, Incidence::Vertical)
            );
        }
        let seps = separator_profiles(&Diagram::simple(1, 2).unwrap()).unwrap();
        assert_eq!(seps.len(), 1);
        assert_eq!(
            seps[0],
            SeparatorProfile {
                line: 2,
                crossings: vec![],
                top: Incidence::Left,
                bottom: Incidence::Left
            }
        );
        let seps = separator_profiles(&seven_node()).unwrap();
        assert_eq!(seps[0].line, 2);
        assert_eq!(seps[0].crossings, vec![ch(n(1), n(4)), ch(n(5), s(1))]);
        assert_eq!(
            (seps[0].top, seps[0].bottom),
            (Incidence::Right, Incidence::Right)
        );
    }

    #[test]
    fn adjacency_examples() {
        let adj = horizontal_adjacency(&graph_example()).unwrap();
        assert!(adj.contains(&(r(6, 1), r(7, 2))));
        for (a, b) in &adj {
            assert_eq!(a.depth.abs_diff(b.depth), 1, "{a:?} {b:?}");
        }

        // Identity: only the single region of each column, and vertical chords
        // block every separator.
        assert!(horizontal_adjacency(&Diagram::identity(4))
            .unwrap()
            .is_empty());

        let adj = horizontal_adjacency(&Diagram::simple(2, 3).unwrap()).unwrap();
        assert!(adj.contains(&(r(1, 0), r(2, 1))));
        assert!(adj.contains(&(r(2, 1), r(3, 0))));
        for (a, b) in &adj {
            assert_eq!(a.depth.abs_diff(b.depth), 1);
        }
    }

    #[test]
    fn graph_of_worked_example() {
        let g = region_graph(&graph_example()).unwrap();
        assert_eq!(g.vertices().len(), 9);
        let (a, b, c, dd, e, f, gg, h, i) = (
            r(4, 1),
            r(3, 1),
            r(5, 1),
            r(7, 1),
            r(2, 1),
            r(6, 1),
            r(8, 1),
            r(1, 1),
            r(7, 3),
        );
        let expected = [
            (a, b),
            (b, e),
            (e, h),
            (a, c),
            (c, f),
            (f, i),
            (dd, f),
            (dd, gg),
            (gg, i),
        ];
        for (x, y) in expected {
            assert!(g.has_edge(x, y), "missing {x:?} -> {y:?}");
        }
        assert_eq!(g.edges().len(), expected.len());
        assert_eq!(g.sources(), vec![a, dd]);
    }

    #[test]
    fn trivial_graphs() {
        let g = region_graph(&Diagram::simple(3, 5).unwrap()).unwrap();
        assert_eq!(g.vertices(), &[r(3, 1)]);
        assert!(g.edges().is_empty());
        let g = region_graph(&Diagram::identity(6)).unwrap();
        assert!(g.vertices().is_empty());
    }

    #[test]
    fn factor_worked_examples() {
        assert_eq!(
            factor(&graph_example()).unwrap().to_string(),
            "4 7 3 5 8 2 6 1 7"
        );
        assert_eq!(
            factor(&seven_node()).unwrap().to_string(),
            "2 6 1 3 2 4 3 5 4"
        );
        assert_eq!(factor(&Diagram::identity(5)).unwrap(), Word::empty(4));
        assert_eq!(factor(&Diagram::identity(1)).unwrap(), Word::empty(0));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(
            factor_multiplicities(&Diagram::identity(4)).unwrap(),
            vec![0, 0, 0]
        );
        assert_eq!(
            factor_multiplicities(&Diagram::simple(2, 3).unwrap()).unwrap(),
            vec![0, 1, 0]
        );
        assert_eq!(
            factor_multiplicities(&seven_node()).unwrap(),
            vec![1, 2, 2, 2, 1, 1]
        );
    }

    #[test]
    fn crossing_partner_table_is_detected() {
        // N1-S2, N2-S1 bypasses validation; the two crossing orders disagree.
        let d = Diagram::from_partner_unchecked(2, vec![3, 2, 1, 0]);
        assert!(matches!(
            column_profiles(&d),
            Err(Error::InconsistentCrossingOrder(_))
        ));
        assert!(factor(&d).is_err());
    }
}
