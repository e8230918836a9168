use std::collections::BTreeSet;

use serde::Serialize;

use super::HexSystem;
use crate::error::{Error, Result};
use crate::exec::Config;
use crate::graph::{enumerate_perfect_matchings, EdgeId};

/// Position of `e` among the face edges of cell `c`.
fn slot(h: &HexSystem, c: usize, e: EdgeId) -> Option<usize> {
    h.face_edges(c).iter().position(|&x| x == e)
}

/// Every straight cut: starting from a boundary edge, repeatedly step to the
/// opposite edge of the current hexagon until the boundary is reached.
pub fn parallel_cuts(h: &HexSystem) -> Vec<Vec<EdgeId>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in h.boundary_edges() {
        let mut cut = vec![start];
        let mut cell = h.edge_cells(start)[0];
        let mut e = start;
        loop {
            let j = slot(h, cell, e).expect("edge lies on its cell");
            e = h.face_edges(cell)[(j + 3) % 6];
            cut.push(e);
            if h.is_boundary_edge(e) {
                break;
            }
            cell = *h.edge_cells(e).iter().find(|&&c| c != cell).unwrap();
        }
        let mut key = cut.clone();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(cut);
        }
    }
    out
}

fn validate(h: &HexSystem, cut: &[EdgeId]) -> Result<()> {
    let bad = |msg: &str| Err(Error::NotAValidCut(msg.to_string()));
    if cut.len() < 2 {
        return bad("a cut has at least two edges");
    }
    if let Some(&e) = cut.iter().find(|&&e| e >= h.graph().m()) {
        return Err(Error::EdgeOutOfRange(e));
    }
    if cut.iter().collect::<BTreeSet<_>>().len() != cut.len() {
        return bad("repeated edge");
    }
    let dir = h.edge_direction(cut[0]);
    if cut.iter().any(|&e| h.edge_direction(e) != dir) {
        return bad("edges are not parallel");
    }
    let last = cut.len() - 1;
    if !h.is_boundary_edge(cut[0]) || !h.is_boundary_edge(cut[last]) {
        return bad("end edges must be boundary edges");
    }
    if cut[1..last].iter().any(|&e| h.is_boundary_edge(e)) {
        return bad("inner edges must not be boundary edges");
    }
    for w in cut.windows(2) {
        let opposite = h.edge_cells(w[0]).iter().any(|&c| {
            match (slot(h, c, w[0]), slot(h, c, w[1])) {
                (Some(a), Some(b)) => (a + 3) % 6 == b,
                _ => false,
            }
        });
        if !opposite {
            return bad("consecutive edges are not opposite sides of a hexagon");
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutInvariance {
    /// `|E ∩ M|` is the same for every perfect matching.
    pub constant: bool,
    /// Distinct values of `|E ∩ M|`, ascending.
    pub values: Vec<usize>,
}

/// Checks that a straight cut meets every perfect matching in the same
/// number of edges.
pub fn sachs_cut_check(h: &HexSystem, cut: &[EdgeId], cfg: &Config) -> Result<CutInvariance> {
    validate(h, cut)?;
    let pms = enumerate_perfect_matchings(h.graph(), cfg)?;
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let values: BTreeSet<usize> = pms
        .iter()
        .map(|m| cut.iter().filter(|&&e| m.contains(e)).count())
        .collect();
    Ok(CutInvariance {
        constant: values.len() == 1,
        values: values.into_iter().collect(),
    })
}
