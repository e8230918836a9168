use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{EdgeId, Graph, Matching};
use crate::error::{Error, Result};
use crate::exec::{self, Config};

/// An M-alternating cycle. `vertex_seq` starts at the smallest vertex and
/// continues toward its smaller cycle neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AltCycle {
    pub vertex_seq: Vec<usize>,
    /// Sorted edge ids of the cycle.
    pub edge_ids: Vec<EdgeId>,
}

impl Ord for AltCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertex_seq
            .len()
            .cmp(&other.vertex_seq.len())
            .then_with(|| self.vertex_seq.cmp(&other.vertex_seq))
    }
}

impl PartialOrd for AltCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl AltCycle {
    /// Canonicalizes a closed walk given as a vertex sequence.
    pub fn from_vertices(g: &Graph, mut seq: Vec<usize>) -> Option<AltCycle> {
        let k = seq.len();
        if k < 3 {
            return None;
        }
        let start = (0..k).min_by_key(|&i| seq[i])?;
        seq.rotate_left(start);
        if seq[k - 1] < seq[1] {
            seq[1..].reverse();
        }
        let mut edge_ids = Vec::with_capacity(k);
        for i in 0..k {
            edge_ids.push(g.edge_between(seq[i], seq[(i + 1) % k])?);
        }
        edge_ids.sort_unstable();
        Some(AltCycle {
            vertex_seq: seq,
            edge_ids,
        })
    }

    pub fn len(&self) -> usize {
        self.vertex_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_seq.is_empty()
    }

    /// Edges of the cycle that lie in `m`.
    pub fn matched_edges(&self, m: &Matching) -> Vec<EdgeId> {
        self.edge_ids
            .iter()
            .copied()
            .filter(|&e| m.contains(e))
            .collect()
    }

    pub fn unmatched_edges(&self, m: &Matching) -> Vec<EdgeId> {
        self.edge_ids
            .iter()
            .copied()
            .filter(|&e| !m.contains(e))
            .collect()
    }

    /// Checks the cycle edge by edge: simple, even, at least 4 long,
    /// alternating with respect to `m`, canonical, and `edge_ids` consistent.
    pub fn verify(&self, g: &Graph, m: &Matching) -> bool {
        let k = self.vertex_seq.len();
        if k < 4 || k % 2 == 1 {
            return false;
        }
        let mut seen = vec![false; g.n()];
        for &v in &self.vertex_seq {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let mut ids = Vec::with_capacity(k);
        for i in 0..k {
            match g.edge_between(self.vertex_seq[i], self.vertex_seq[(i + 1) % k]) {
                Some(e) => ids.push(e),
                None => return false,
            }
        }
        let alternates = (0..k).all(|i| m.contains(ids[i]) != m.contains(ids[(i + 1) % k]));
        let canonical = self.vertex_seq[1..].iter().all(|&v| v > self.vertex_seq[0])
            && self.vertex_seq[1] < self.vertex_seq[k - 1];
        ids.sort_unstable();
        alternates && canonical && ids == self.edge_ids
    }

    pub fn shares_vertex(&self, other: &AltCycle) -> bool {
        self.vertex_seq
            .iter()
            .any(|v| other.vertex_seq.contains(v))
    }
}

/// All M-alternating cycles of `g`, canonical and sorted by
/// `(length, vertex_seq)`.
pub fn enumerate_alternating_cycles(
    g: &Graph,
    m: &Matching,
    cfg: &Config,
) -> Result<Vec<AltCycle>> {
    let mate = m.mates(g)?;
    let cap = cfg.limits.max_cycles;
    let starts: Vec<usize> = (0..g.n()).filter(|&s| mate[s] > s).collect();
    let parts = exec::map_ordered(cfg.exec, &starts, |&s| {
        let mut walk = CycleWalk {
            g,
            mate: &mate,
            start: s,
            on_path: vec![false; g.n()],
            path: vec![s, mate[s]],
            out: Some(Vec::new()),
            cap,
        };
        walk.on_path[s] = true;
        walk.on_path[mate[s]] = true;
        walk.step();
        walk.out
    });
    let mut all = Vec::new();
    for part in parts {
        let Some(part) = part else {
            return Err(Error::LimitExceeded { what: "cycle", cap });
        };
        all.extend(part);
        if all.len() > cap {
            return Err(Error::LimitExceeded { what: "cycle", cap });
        }
    }
    all.sort();
    Ok(all)
}

/// Depth-first search over alternating paths that leave `start` along its
/// matching edge and only visit vertices larger than `start`, so each cycle
/// is produced exactly once.
struct CycleWalk<'a> {
    g: &'a Graph,
    mate: &'a [usize],
    start: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
    out: Option<Vec<AltCycle>>,
    cap: usize,
}

impl CycleWalk<'_> {
    fn step(&mut self) {
        let u = *self.path.last().unwrap();
        for &(w, _) in self.g.neighbors(u) {
            if w == self.mate[u] {
                continue;
            }
            if w == self.start {
                if self.path.len() >= 4 {
                    let cyc = AltCycle::from_vertices(self.g, self.path.clone())
                        .expect("walk follows graph edges");
                    let Some(out) = self.out.as_mut() else { return };
                    if out.len() == self.cap {
                        self.out = None;
                        return;
                    }
                    out.push(cyc);
                }
                continue;
            }
            let x = self.mate[w];
            if w < self.start || self.on_path[w] || self.on_path[x] || x < self.start {
                continue;
            }
            self.on_path[w] = true;
            self.on_path[x] = true;
            self.path.push(w);
            self.path.push(x);
            self.step();
            self.path.pop();
            self.path.pop();
            self.on_path[w] = false;
            self.on_path[x] = false;
            if self.out.is_none() {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyMode {
    /// Pairwise vertex-disjoint.
    Disjoint,
    /// Pairwise meeting only in matching edges.
    Compatible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFamily {
    pub cycles: Vec<AltCycle>,
    pub mode: FamilyMode,
}

impl CycleFamily {
    /// Every shared edge is in `m` and every shared vertex is an end of a
    /// shared matching edge.
    pub fn compatible(a: &AltCycle, b: &AltCycle, g: &Graph, m: &Matching) -> bool {
        let shared_edges: Vec<EdgeId> = a
            .edge_ids
            .iter()
            .copied()
            .filter(|e| b.edge_ids.binary_search(e).is_ok())
            .collect();
        if shared_edges.iter().any(|&e| !m.contains(e)) {
            return false;
        }
        a.vertex_seq
            .iter()
            .filter(|v| b.vertex_seq.contains(v))
            .all(|&v| {
                shared_edges.iter().any(|&e| {
                    let (x, y) = g.edge(e);
                    x == v || y == v
                })
            })
    }

    pub fn pair_ok(&self, a: &AltCycle, b: &AltCycle, g: &Graph, m: &Matching) -> bool {
        match self.mode {
            FamilyMode::Disjoint => !a.shares_vertex(b),
            FamilyMode::Compatible => CycleFamily::compatible(a, b, g, m),
        }
    }

    /// Every member is an M-alternating cycle and every pair satisfies the mode.
    pub fn is_valid(&self, g: &Graph, m: &Matching) -> bool {
        self.cycles.iter().all(|c| c.verify(g, m))
            && self.cycles.iter().enumerate().all(|(i, a)| {
                self.cycles[i + 1..]
                    .iter()
                    .all(|b| a != b && self.pair_ok(a, b, g, m))
            })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}
