use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hexsys::{cell_neighbors, normalize_cells, Cell, HexSystem};

pub const MAX_CORPUS_CELLS: usize = 6;

/// Fixed polyhexes (translation classes of connected cell sets) with `n`
/// cells, holes included, in sorted normalized order.
pub fn enumerate_fixed_polyhexes(n: usize) -> Vec<Vec<Cell>> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<Vec<Cell>> = BTreeSet::from([vec![(0, 0)]]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for poly in &level {
            let present: BTreeSet<Cell> = poly.iter().copied().collect();
            for &c in poly {
                for d in cell_neighbors(c) {
                    if present.contains(&d) {
                        continue;
                    }
                    let mut grown = poly.clone();
                    grown.push(d);
                    next.insert(normalize_cells(&grown));
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All hole-free hexagonal systems with `n` cells, up to translation.
pub fn enumerate_hex_systems(n: usize) -> Result<Vec<HexSystem>> {
    if n > MAX_CORPUS_CELLS {
        return Err(Error::TooLarge(n));
    }
    if n == 0 {
        return Err(Error::EmptyCells);
    }
    Ok(enumerate_fixed_polyhexes(n)
        .iter()
        .filter_map(|cells| HexSystem::new(cells).ok())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_hex_systems(1).unwrap().len(), 1);
        assert_eq!(enumerate_hex_systems(2).unwrap().len(), 3);
        assert_eq!(enumerate_hex_systems(7), Err(Error::TooLarge(7)));
    }
}
