use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::truncated_parallelogram_cells;
use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::hexsys::{transform_cell, Cell, HexSystem};

/// Two truncated parallelograms; the second is moved by a lattice symmetry
/// and then translated. The fused path is whatever boundary the two pieces
/// end up sharing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueSpec {
    pub t1: Vec<usize>,
    pub t2: Vec<usize>,
    pub t2_symmetry: u8,
    pub t2_offset: Cell,
}

impl GlueSpec {
    fn pieces(&self) -> Result<(Vec<Cell>, Vec<Cell>)> {
        let a = truncated_parallelogram_cells(&self.t1)?;
        let b = truncated_parallelogram_cells(&self.t2)?
            .into_iter()
            .map(|c| {
                let (q, r) = transform_cell(c, self.t2_symmetry);
                (q + self.t2_offset.0, r + self.t2_offset.1)
            })
            .collect();
        Ok((a, b))
    }
}

/// Edges shared by a cell of the first piece and a cell of the second, in
/// path order, provided they form a single simple path.
pub fn fused_path(h: &HexSystem, first: &[Cell]) -> Result<Vec<EdgeId>> {
    let in_first: BTreeSet<Cell> = first.iter().copied().collect();
    let shared: Vec<EdgeId> = (0..h.graph().m())
        .filter(|&e| {
            let cells = h.edge_cells(e);
            cells.len() == 2
                && in_first.contains(&h.cells()[cells[0]]) != in_first.contains(&h.cells()[cells[1]])
        })
        .collect();
    if shared.is_empty() {
        return Err(Error::InvalidGlue("pieces share no edge".into()));
    }
    let mut incident: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for &e in &shared {
        let (u, v) = h.graph().edge(e);
        incident.entry(u).or_default().push(e);
        incident.entry(v).or_default().push(e);
    }
    if incident.len() != shared.len() + 1 || incident.values().any(|es| es.len() > 2) {
        return Err(Error::InvalidGlue("shared edges do not form a path".into()));
    }
    let (&start, _) = incident
        .iter()
        .find(|(_, es)| es.len() == 1)
        .expect("a path has an end");
    let mut path = Vec::with_capacity(shared.len());
    let (mut at, mut prev) = (start, usize::MAX);
    while let Some(&e) = incident[&at].iter().find(|&&e| e != prev) {
        path.push(e);
        let (u, v) = h.graph().edge(e);
        at = if u == at { v } else { u };
        prev = e;
    }
    if path.len() != shared.len() {
        return Err(Error::InvalidGlue("shared edges do not form a path".into()));
    }
    Ok(path)
}

/// Union of the two pieces, checked for overlap, holes and an odd fused path.
pub fn glue_af2(spec: &GlueSpec) -> Result<HexSystem> {
    let (a, b) = spec.pieces()?;
    let first: BTreeSet<Cell> = a.iter().copied().collect();
    if let Some(c) = b.iter().find(|c| first.contains(c)) {
        return Err(Error::InvalidGlue(format!("pieces overlap at {c:?}")));
    }
    let cells: Vec<Cell> = a.iter().chain(&b).copied().collect();
    let h = HexSystem::new(&cells).map_err(|e| match e {
        Error::HasHole => Error::InvalidGlue("gluing creates a hole".into()),
        Error::Disconnected => Error::InvalidGlue("pieces do not touch".into()),
        other => other,
    })?;
    let path = fused_path(&h, &a)?;
    if path.len() % 2 == 0 {
        return Err(Error::InvalidGlue(format!(
            "fused path has even length {}",
            path.len()
        )));
    }
    Ok(h)
}

/// Four glued systems, each with anti-forcing number 2.
pub fn glue_presets() -> Vec<GlueSpec> {
    PRESETS
        .iter()
        .map(|&(t1, t2, sym, off)| GlueSpec {
            t1: t1.to_vec(),
            t2: t2.to_vec(),
            t2_symmetry: sym,
            t2_offset: off,
        })
        .collect()
}

type Preset = (&'static [usize], &'static [usize], u8, Cell);

const PRESETS: [Preset; 4] = [
    (&[3, 2], &[3, 2], 0, (-1, -2)),
    (&[2, 2], &[2, 2, 1], 0, (1, -2)),
    (&[3, 2], &[2, 2, 1], 6, (-1, 1)),
    (&[3, 2, 1], &[3], 0, (-1, -1)),
];
