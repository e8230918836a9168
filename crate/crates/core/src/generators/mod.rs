//! Deterministic constructors for every instance family used by the checks.

mod corpus;
mod glue;

pub use corpus::{enumerate_fixed_polyhexes, enumerate_hex_systems, MAX_CORPUS_CELLS};
pub use glue::{fused_path, glue_af2, glue_presets, GlueSpec};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hexsys::{Cell, HexSystem};

/// Cells of `H(n1, ..., nk)`: row `i` sits at `r = i` and spans
/// `q ∈ [n1 - ni, n1 - 1]`, so every row ends below and right of the previous one.
pub fn truncated_parallelogram_cells(rows: &[usize]) -> Result<Vec<Cell>> {
    if rows.is_empty() || rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::BadRowSequence(rows.to_vec()));
    }
    let n1 = rows[0] as i32;
    Ok(rows
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (n1 - len as i32..n1).map(move |q| (q, i as i32)))
        .collect())
}

pub fn gen_truncated_parallelogram(rows: &[usize]) -> Result<HexSystem> {
    HexSystem::new(&truncated_parallelogram_cells(rows)?)
}

/// All non-increasing positive sequences with sum at most `max_cells`.
pub fn truncated_parallelogram_params(max_cells: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for next in 1..=cap.min(left) {
            cur.push(next);
            out.push(cur.clone());
            rec(left - next, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_cells, max_cells, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.iter().sum::<usize>(), a).cmp(&(b.iter().sum::<usize>(), b)));
    out
}

pub const TRIPHENYLENE: [Cell; 4] = [(0, 0), (1, 0), (-1, 1), (0, -1)];
pub const PERYLENE: [Cell; 5] = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Named {
    Graph(Graph),
    Hex(HexSystem),
}

impl Named {
    pub fn graph(&self) -> &Graph {
        match self {
            Named::Graph(g) => g,
            Named::Hex(h) => h.graph(),
        }
    }
}

pub const NAMES: [&str; 5] = ["triphenylene", "perylene", "dodecahedron", "c4", "c6"];

/// The dodecahedron with a fixed numbering: outer pentagon 0..5, spokes to
/// the 10-cycle 5..15 (outer `i` to `5 + 2i`), and the inner pentagon 15..20
/// with `15 + i` joined to `6 + 2i`.
pub fn dodecahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, 5 + 2 * i));
    }
    for j in 0..10 {
        edges.push((5 + j, 5 + (j + 1) % 10));
    }
    for i in 0..5 {
        edges.push((6 + 2 * i, 15 + i));
    }
    for i in 0..5 {
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    Graph::from_edges(20, &edges).expect("dodecahedron edge list is simple")
}

pub fn gen_named(name: &str) -> Result<Named> {
    match name.to_ascii_lowercase().as_str() {
        "triphenylene" => Ok(Named::Hex(HexSystem::new(&TRIPHENYLENE)?)),
        "perylene" => Ok(Named::Hex(HexSystem::new(&PERYLENE)?)),
        "dodecahedron" => Ok(Named::Graph(dodecahedron())),
        "c4" => Ok(Named::Graph(Graph::cycle(4)?)),
        "c6" => Ok(Named::Graph(Graph::cycle(6)?)),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hexsys::{is_all_kink_catahex, is_truncated_parallelogram};

    #[test]
    fn row_layout() {
        assert_eq!(truncated_parallelogram_cells(&[1]).unwrap(), vec![(0, 0)]);
        let h = gen_truncated_parallelogram(&[5, 5, 3, 2]).unwrap();
        assert_eq!(h.len(), 15);
        assert_eq!(is_truncated_parallelogram(&h), Some(vec![5, 5, 3, 2]));
        assert!(matches!(
            gen_truncated_parallelogram(&[2, 3]),
            Err(Error::BadRowSequence(_))
        ));
        assert!(gen_truncated_parallelogram(&[]).is_err());
        assert!(gen_truncated_parallelogram(&[2, 0]).is_err());
    }

    #[test]
    fn params_enumeration() {
        // Partitions of 1..=4: 1 + 2 + 3 + 5.
        assert_eq!(truncated_parallelogram_params(4).len(), 11);
    }

    #[test]
    fn named_instances() {
        let Named::Graph(d) = gen_named("dodecahedron").unwrap() else { panic!() };
        assert_eq!((d.n(), d.m()), (20, 30));
        assert!((0..20).all(|v| d.degree(v) == 3));
        assert!(!d.is_bipartite());
        let Named::Hex(t) = gen_named("Triphenylene").unwrap() else { panic!() };
        assert_eq!(t.len(), 4);
        assert!(is_all_kink_catahex(&t));
        assert_eq!(gen_named("c6").unwrap().graph().m(), 6);
        assert_eq!(gen_named("coronene"), Err(Error::UnknownName("coronene".into())));
    }
}
