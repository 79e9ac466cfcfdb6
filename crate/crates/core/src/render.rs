//! ASCII and SVG drawings of diagrams and heaps.

use std::fmt::Write as _;

use crate::diagram::{Diagram, Endpoint, Face};
use crate::heaps::Heap;

/// Horizontal distance between neighbouring nodes in SVG output.
pub const NODE_SPACING: usize = 40;

const SVG_FACE_GAP: usize = 160;

/// Draws a diagram as text: node row, north cups, propagating chords (each bend on
/// its own row), south cups, node row.
pub fn diagram_ascii(d: &Diagram) -> String {
    let k = d.k();
    let x = |p: usize| 2 * (p - 1);
    let chords = d.chords();

    let cups = |face: Face| -> Vec<(usize, usize, usize)> {
        let mut spans: Vec<(usize, usize)> = chords
            .iter()
            .filter(|c| c.0.face == face && c.1.face == face)
            .map(|c| (c.0.position, c.1.position))
            .collect();
        // Inner cups first so each height is known before the cups around it.
        spans.sort_by_key(|&(a, b)| b - a);
        let mut placed: Vec<(usize, usize, usize)> = Vec::new();
        for (a, b) in spans {
            let h = placed
                .iter()
                .filter(|&&(c, e, _)| a < c && e < b)
                .map(|&(_, _, h)| h)
                .max()
                .unwrap_or(0)
                + 1;
            placed.push((a, b, h));
        }
        placed
    };
    let north = cups(Face::North);
    let south = cups(Face::South);
    let north_rows = north.iter().map(|c| c.2).max().unwrap_or(0);
    let south_rows = south.iter().map(|c| c.2).max().unwrap_or(0);

    let mut propagating: Vec<(usize, usize)> = chords
        .iter()
        .filter(|c| c.is_propagating())
        .map(|c| (c.0.position, c.1.position))
        .collect();
    let verticals: Vec<usize> = propagating
        .iter()
        .filter(|(a, b)| a == b)
        .map(|&(a, _)| a)
        .collect();
    propagating.retain(|(a, b)| a != b);
    // Right-moving chords rightmost first, then left-moving chords leftmost first;
    // with this order no bend crosses a line still waiting to bend.
    let mut routed: Vec<(usize, usize)> =
        propagating.iter().copied().filter(|(a, b)| a < b).collect();
    routed.sort_by_key(|p| std::cmp::Reverse(p.0));
    let mut leftward: Vec<(usize, usize)> =
        propagating.iter().copied().filter(|(a, b)| a > b).collect();
    leftward.sort();
    routed.extend(leftward);

    let middle_rows = if verticals.is_empty() {
        routed.len()
    } else {
        routed.len().max(1)
    };
    let height = 2 + north_rows + middle_rows + south_rows;
    let width = x(k) + 1;
    let mut grid = vec![vec![' '; width]; height];
    let last = height - 1;
    for p in 1..=k {
        grid[0][x(p)] = 'o';
        grid[last][x(p)] = 'o';
    }
    let hline = |grid: &mut Vec<Vec<char>>, row: usize, from: usize, to: usize| {
        let (lo, hi) = (from.min(to), from.max(to));
        for cell in &mut grid[row][lo..=hi] {
            *cell = '-';
        }
        grid[row][lo] = '+';
        grid[row][hi] = '+';
    };
    let vline = |grid: &mut Vec<Vec<char>>, col: usize, from: usize, to: usize| {
        for row in grid.iter_mut().take(to).skip(from) {
            row[col] = '|';
        }
    };

    for &(a, b, h) in &north {
        vline(&mut grid, x(a), 1, h);
        vline(&mut grid, x(b), 1, h);
        hline(&mut grid, h, x(a), x(b));
    }
    for &(a, b, h) in &south {
        let row = last - h;
        vline(&mut grid, x(a), row + 1, last);
        vline(&mut grid, x(b), row + 1, last);
        hline(&mut grid, row, x(a), x(b));
    }
    for &p in &verticals {
        vline(&mut grid, x(p), 1, last);
    }
    let first_middle = 1 + north_rows;
    for (i, &(a, b)) in routed.iter().enumerate() {
        let row = first_middle + i;
        vline(&mut grid, x(a), 1, row);
        hline(&mut grid, row, x(a), x(b));
        vline(&mut grid, x(b), row + 1, last);
    }

    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// SVG 1.1 drawing: one cubic path per chord and one circle per node.
pub fn diagram_svg(d: &Diagram) -> String {
    let k = d.k();
    let top = NODE_SPACING;
    let bottom = top + SVG_FACE_GAP;
    let width = NODE_SPACING * (k + 1);
    let height = bottom + NODE_SPACING;
    let px = |e: Endpoint| NODE_SPACING * e.position;
    let py = |e: Endpoint| match e.face {
        Face::North => top,
        Face::South => bottom,
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect x="{}" y="{top}" width="{}" height="{SVG_FACE_GAP}" fill="none" stroke="gray"/>"#,
        NODE_SPACING / 2,
        NODE_SPACING * k
    );
    for c in d.chords() {
        let (a, b) = (c.0, c.1);
        let (x1, y1, x2, y2) = (px(a), py(a), px(b), py(b));
        let (cy1, cy2) = if c.is_propagating() {
            let mid = (top + bottom) / 2;
            (mid, mid)
        } else {
            let bulge = (x1.abs_diff(x2) / 2).min(SVG_FACE_GAP / 2 - 10);
            let cy = if a.face == Face::North {
                top + bulge
            } else {
                bottom - bulge
            };
            (cy, cy)
        };
        let _ = writeln!(
            out,
            r#"<path d="M {x1} {y1} C {x1} {cy1} {x2} {cy2} {x2} {y2}" fill="none" stroke="black"/>"#
        );
    }
    for p in 1..=k {
        for e in [Endpoint::north(p), Endpoint::south(p)] {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="3" fill="black"/>"#,
                px(e),
                py(e)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// SVG blocks for a heap: one rectangle per entry, entries covering each other
/// overlap by half a block.
pub fn heap_svg(h: &Heap) -> String {
    let block_w = NODE_SPACING;
    let block_h = NODE_SPACING;
    let depth = h.levels().iter().max().map_or(0, |m| m + 1);
    let width = block_w * (h.rank() + 2);
    let height = block_h / 2 * (depth + 2);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for (level, col) in h.lattice_points() {
        let x = block_w * col;
        let y = block_h / 2 * level + block_h / 4;
        let _ = writeln!(
            out,
            r#"<rect x="{x}" y="{y}" width="{block_w}" height="{block_h}" fill="white" stroke="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">s{col}</text>"#,
            x + block_w / 2,
            y + block_h / 2 + 5
        );
    }
    out.push_str("</svg>\n");
    out
}
