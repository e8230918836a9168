use std::collections::BTreeMap;

use super::{Cell, HexSystem};

/// Number of lattice symmetries fixing a cell: 6 rotations, with and without reflection.
pub const SYMMETRIES: u8 = 12;

/// Applies symmetry `sym` (reflect when `sym >= 6`, then rotate `sym % 6`
/// times by 60 degrees) to an axial coordinate.
pub fn transform_cell(c: Cell, sym: u8) -> Cell {
    let (mut q, mut r) = c;
    if sym >= 6 {
        std::mem::swap(&mut q, &mut r);
    }
    for _ in 0..sym % 6 {
        (q, r) = (-r, q + r);
    }
    (q, r)
}

/// Translates so the minimum q and r are zero, then sorts by `(r, q)`.
pub fn normalize_cells(cells: &[Cell]) -> Vec<Cell> {
    let qmin = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let rmin = cells.iter().map(|c| c.1).min().unwrap_or(0);
    let mut out: Vec<Cell> = cells.iter().map(|&(q, r)| (q - qmin, r - rmin)).collect();
    out.sort_by_key(|&(q, r)| (r, q));
    out
}

/// Row lengths if the cells, as placed, form `H(n1, ..., nk)`: consecutive
/// rows of non-increasing length sharing the same rightmost column.
fn row_shape(cells: &[Cell]) -> Option<Vec<usize>> {
    let mut rows: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
    for &(q, r) in cells {
        rows.entry(r).or_default().push(q);
    }
    let first_r = *rows.keys().next()?;
    let mut lengths = Vec::with_capacity(rows.len());
    let mut right = None;
    for (k, (&r, qs)) in rows.iter_mut().enumerate() {
        if r != first_r + k as i32 {
            return None;
        }
        qs.sort_unstable();
        let (lo, hi) = (qs[0], *qs.last().unwrap());
        if (hi - lo + 1) as usize != qs.len() {
            return None;
        }
        if *right.get_or_insert(hi) != hi {
            return None;
        }
        if lengths.last().is_some_and(|&prev| prev < qs.len()) {
            return None;
        }
        lengths.push(qs.len());
    }
    Some(lengths)
}

/// Row parameters `(n1, ..., nk)` when `h` is a truncated parallelogram under
/// some lattice symmetry; the first matching symmetry (identity first) wins.
pub fn is_truncated_parallelogram(h: &HexSystem) -> Option<Vec<usize>> {
    (0..SYMMETRIES).find_map(|sym| {
        let t: Vec<Cell> = h.cells().iter().map(|&c| transform_cell(c, sym)).collect();
        row_shape(&t)
    })
}
