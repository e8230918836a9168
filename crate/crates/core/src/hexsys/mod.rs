//! Hexagonal systems on the integer hexagonal lattice.
//!
//! Cells use axial coordinates `(q, r)`. A cell's center has the integer key
//! `(2q + r, 3r)` and its corners sit at the center plus
//! `(1,1), (0,2), (-1,1), (-1,-1), (0,-2), (1,-1)` in that cyclic order, so
//! adjacent cells share exactly two corner keys and no floating point is
//! involved. Corner `(0,2)` is a peak; a vertex is black iff its y key is
//! `2 mod 3`, which colors every peak black.

mod cuts;
mod dual;
mod shape;

pub use cuts::{parallel_cuts, sachs_cut_check, CutInvariance};
pub use dual::{
    inner_dual, is_all_kink_catahex, tree_independent_domination, tree_matching_number,
    InnerDual,
};
pub use shape::{is_truncated_parallelogram, normalize_cells, transform_cell, SYMMETRIES};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{self, Config};
use crate::graph::{enumerate_perfect_matchings, Color, EdgeId, Graph, Matching};
use crate::setsys::SetFamily;

pub type Cell = (i32, i32);

const CORNERS: [(i32, i32); 6] = [(1, 1), (0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1)];

/// Axial offset of the cell across face edge `i` (between corners `i` and `i+1`).
pub const ACROSS: [Cell; 6] = [(0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HexSystem {
    cells: Vec<Cell>,
    graph: Graph,
    keys: Vec<(i32, i32)>,
    faces: Vec<[usize; 6]>,
    face_edges: Vec<[EdgeId; 6]>,
    edge_cells: Vec<Vec<usize>>,
}

fn center(c: Cell) -> (i32, i32) {
    (2 * c.0 + c.1, 3 * c.1)
}

pub fn cell_neighbors(c: Cell) -> impl Iterator<Item = Cell> {
    ACROSS.iter().map(move |d| (c.0 + d.0, c.1 + d.1))
}

impl HexSystem {
    /// Validates the cell set (non-empty, no duplicates, connected, hole-free)
    /// and derives the vertex/edge graph.
    pub fn new(cells: &[Cell]) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::EmptyCells);
        }
        let mut set = BTreeSet::new();
        for &c in cells {
            if !set.insert(c) {
                return Err(Error::DuplicateCell(c.0, c.1));
            }
        }
        if !cells_connected(&set) {
            return Err(Error::Disconnected);
        }
        // Cells sorted by row then column.
        let mut cells: Vec<Cell> = set.into_iter().collect();
        cells.sort_by_key(|&(q, r)| (r, q));

        let mut key_set = BTreeSet::new();
        for &c in &cells {
            let (x, y) = center(c);
            for (dx, dy) in CORNERS {
                key_set.insert((y + dy, x + dx));
            }
        }
        // Vertices ordered by (y, x).
        let keys: Vec<(i32, i32)> = key_set.into_iter().map(|(y, x)| (x, y)).collect();
        let index: HashMap<(i32, i32), usize> =
            keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let faces: Vec<[usize; 6]> = cells
            .iter()
            .map(|&c| {
                let (x, y) = center(c);
                CORNERS.map(|(dx, dy)| index[&(x + dx, y + dy)])
            })
            .collect();
        let mut edge_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ci, f) in faces.iter().enumerate() {
            for i in 0..6 {
                let (u, v) = (f[i], f[(i + 1) % 6]);
                edge_map.entry((u.min(v), u.max(v))).or_default().push(ci);
            }
        }
        let edges: Vec<(usize, usize)> = edge_map.keys().copied().collect();
        let edge_cells: Vec<Vec<usize>> = edge_map.into_values().collect();
        let edge_index: HashMap<(usize, usize), EdgeId> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let face_edges = faces
            .iter()
            .map(|f| {
                std::array::from_fn(|i| {
                    let (u, v) = (f[i], f[(i + 1) % 6]);
                    edge_index[&(u.min(v), u.max(v))]
                })
            })
            .collect();
        // Bounded faces of a connected plane graph: E - V + 1.
        if edges.len() + 1 != keys.len() + cells.len() {
            return Err(Error::HasHole);
        }
        let colors = keys
            .iter()
            .map(|&(_, y)| {
                if y.rem_euclid(3) == 2 {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect();
        let graph = Graph::new(keys.len(), edges, Some(colors))?;
        Ok(HexSystem {
            cells,
            graph,
            keys,
            faces,
            face_edges,
            edge_cells,
        })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Lattice key `(x, y)` of a vertex.
    pub fn vertex_key(&self, v: usize) -> (i32, i32) {
        self.keys[v]
    }

    pub fn cell_index(&self, c: Cell) -> Option<usize> {
        self.cells.iter().position(|&d| d == c)
    }

    /// Corner vertices of cell `i` in cyclic order.
    pub fn face_vertices(&self, i: usize) -> &[usize; 6] {
        &self.faces[i]
    }

    /// Edge `j` joins corners `j` and `j + 1`; edges `j` and `j + 3` are parallel.
    pub fn face_edges(&self, i: usize) -> &[EdgeId; 6] {
        &self.face_edges[i]
    }

    /// Cells containing edge `e` (one for boundary edges, two otherwise).
    pub fn edge_cells(&self, e: EdgeId) -> &[usize] {
        &self.edge_cells[e]
    }

    pub fn is_boundary_edge(&self, e: EdgeId) -> bool {
        self.edge_cells[e].len() == 1
    }

    pub fn boundary_edges(&self) -> Vec<EdgeId> {
        (0..self.graph.m())
            .filter(|&e| self.is_boundary_edge(e))
            .collect()
    }

    /// Direction class of an edge: 0 vertical, 1 rising, 2 falling.
    pub fn edge_direction(&self, e: EdgeId) -> u8 {
        let (u, v) = self.graph.edge(e);
        let (dx, dy) = (self.keys[v].0 - self.keys[u].0, self.keys[v].1 - self.keys[u].1);
        if dx == 0 {
            0
        } else if dx * dy > 0 {
            1
        } else {
            2
        }
    }

    /// Whether hexagon `i` is M-alternating.
    pub fn is_alternating(&self, i: usize, m: &Matching) -> bool {
        let fe = &self.face_edges[i];
        (0..2).any(|start| (0..3).all(|k| m.contains(fe[start + 2 * k])))
    }

    pub fn alternating_hexagons(&self, m: &Matching) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_alternating(i, m)).collect()
    }

    /// A maximum set of vertex-disjoint M-alternating hexagons.
    pub fn max_resonant_set(&self, m: &Matching) -> Vec<usize> {
        let alt = self.alternating_hexagons(m);
        let fam = SetFamily::new(
            self.graph.n(),
            alt.iter().map(|&i| self.faces[i].to_vec()),
        );
        fam.max_packing().into_iter().map(|k| alt[k]).collect()
    }

    /// Cells whose six edges all lie in `edges`.
    pub fn cells_covered_by(&self, edges: &[EdgeId]) -> Vec<Cell> {
        let set: BTreeSet<EdgeId> = edges.iter().copied().collect();
        (0..self.len())
            .filter(|&i| self.face_edges[i].iter().all(|e| set.contains(e)))
            .map(|i| self.cells[i])
            .collect()
    }
}

fn cells_connected(set: &BTreeSet<Cell>) -> bool {
    let Some(&first) = set.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(c) = stack.pop() {
        for d in cell_neighbors(c) {
            if set.contains(&d) && seen.insert(d) {
                stack.push(d);
            }
        }
    }
    seen.len() == set.len()
}

pub fn build_hex_system(cells: &[Cell]) -> Result<HexSystem> {
    HexSystem::new(cells)
}

/// A perfect matching with a set of its alternating hexagons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HexagonWitness {
    pub value: usize,
    /// Index of the matching in canonical enumeration order.
    pub matching_index: usize,
    pub matching: Matching,
    pub hexagons: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FriesNumbers {
    pub fries: HexagonWitness,
    pub fries_min: HexagonWitness,
}

/// Alternating and maximum-resonant hexagons for each perfect matching.
#[derive(Debug, Clone)]
pub struct HexagonScan {
    pub matchings: Vec<Matching>,
    pub alternating: Vec<Vec<usize>>,
    pub resonant: Vec<Vec<usize>>,
}

pub fn scan_hexagons(h: &HexSystem, cfg: &Config) -> Result<HexagonScan> {
    let matchings = enumerate_perfect_matchings(h.graph(), cfg)?;
    scan_with(h, matchings, cfg)
}

pub(crate) fn scan_with(h: &HexSystem, matchings: Vec<Matching>, cfg: &Config) -> Result<HexagonScan> {
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let per = exec::map_ordered(cfg.exec, &matchings, |m| {
        (h.alternating_hexagons(m), h.max_resonant_set(m))
    });
    let (alternating, resonant) = per.into_iter().unzip();
    Ok(HexagonScan {
        matchings,
        alternating,
        resonant,
    })
}

impl HexagonScan {
    fn witness(&self, h: &HexSystem, i: usize, hexes: &[usize]) -> HexagonWitness {
        HexagonWitness {
            value: hexes.len(),
            matching_index: i,
            matching: self.matchings[i].clone(),
            hexagons: hexes.iter().map(|&k| h.cells[k]).collect(),
        }
    }

    /// First matching (canonical order) attaining the extreme.
    fn pick(&self, rows: &[Vec<usize>], max: bool) -> usize {
        let mut best = 0;
        for (i, r) in rows.iter().enumerate() {
            let better = if max {
                r.len() > rows[best].len()
            } else {
                r.len() < rows[best].len()
            };
            if better {
                best = i;
            }
        }
        best
    }

    pub fn clar(&self, h: &HexSystem) -> HexagonWitness {
        let i = self.pick(&self.resonant, true);
        self.witness(h, i, &self.resonant[i])
    }

    pub fn fries(&self, h: &HexSystem) -> FriesNumbers {
        let hi = self.pick(&self.alternating, true);
        let lo = self.pick(&self.alternating, false);
        FriesNumbers {
            fries: self.witness(h, hi, &self.alternating[hi]),
            fries_min: self.witness(h, lo, &self.alternating[lo]),
        }
    }
}

/// Clar number: the largest resonant set over all perfect matchings.
pub fn clar_number(h: &HexSystem, cfg: &Config) -> Result<HexagonWitness> {
    Ok(scan_hexagons(h, cfg)?.clar(h))
}

/// Fries number (maximum alternating-hexagon count) and minimum fries number.
pub fn fries_numbers(h: &HexSystem, cfg: &Config) -> Result<FriesNumbers> {
    Ok(scan_hexagons(h, cfg)?.fries(h))
}
