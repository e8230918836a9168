use serde::{Deserialize, Serialize};

use super::{Color, EdgeId, Graph, Matching};
use crate::error::{Error, Result};

/// The digraph obtained by orienting matching edges white to black and the
/// remaining edges black to white, then contracting every matching edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractedDigraph {
    /// Node `i` is the `i`-th edge of the matching.
    pub node_edges: Vec<EdgeId>,
    pub arcs: Vec<(usize, usize)>,
    /// Original non-matching edge behind each arc.
    pub provenance: Vec<EdgeId>,
}

/// A directed cycle as arc indices, starting at the arc leaving its smallest node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedCycle {
    pub arcs: Vec<usize>,
}

pub fn orient_and_contract(g: &Graph, m: &Matching) -> Result<ContractedDigraph> {
    let colors = g.colors().ok_or(Error::NotBipartite)?;
    if !m.is_perfect(g) {
        return Err(Error::NotPerfect);
    }
    let mut node_of = vec![usize::MAX; g.n()];
    for (i, &e) in m.edge_ids().iter().enumerate() {
        let (u, v) = g.edge(e);
        node_of[u] = i;
        node_of[v] = i;
    }
    let mut arcs = Vec::with_capacity(g.m() - m.len());
    let mut provenance = Vec::with_capacity(g.m() - m.len());
    for e in (0..g.m()).filter(|&e| !m.contains(e)) {
        let (u, v) = g.edge(e);
        let (black, white) = if colors[u] == Color::Black { (u, v) } else { (v, u) };
        arcs.push((node_of[black], node_of[white]));
        provenance.push(e);
    }
    Ok(ContractedDigraph {
        node_edges: m.edge_ids().to_vec(),
        arcs,
        provenance,
    })
}

impl ContractedDigraph {
    pub fn node_count(&self) -> usize {
        self.node_edges.len()
    }

    /// Every directed cycle, parallel arcs giving distinct cycles.
    pub fn directed_cycles(&self, cap: usize) -> Result<Vec<DirectedCycle>> {
        let n = self.node_count();
        let mut out_arcs = vec![Vec::new(); n];
        for (a, &(x, _)) in self.arcs.iter().enumerate() {
            out_arcs[x].push(a);
        }
        let mut found = Vec::new();
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        for s in 0..n {
            on_path[s] = true;
            self.walk(s, s, &out_arcs, &mut on_path, &mut path, &mut found, cap)?;
            on_path[s] = false;
        }
        found.sort();
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        start: usize,
        at: usize,
        out_arcs: &[Vec<usize>],
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        found: &mut Vec<DirectedCycle>,
        cap: usize,
    ) -> Result<()> {
        for &a in &out_arcs[at] {
            let next = self.arcs[a].1;
            if next == start {
                if found.len() == cap {
                    return Err(Error::LimitExceeded { what: "cycle", cap });
                }
                let mut arcs = path.clone();
                arcs.push(a);
                found.push(DirectedCycle { arcs });
            } else if next > start && !on_path[next] {
                on_path[next] = true;
                path.push(a);
                self.walk(start, next, out_arcs, on_path, path, found, cap)?;
                path.pop();
                on_path[next] = false;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_contracts_to_triangle() {
        let g = Graph::cycle(6).unwrap();
        let m = Matching::new(&g, vec![0, 2, 4]).unwrap();
        let d = orient_and_contract(&g, &m).unwrap();
        assert_eq!(d.node_count(), 3);
        assert_eq!(d.arcs.len(), 3);
        assert_eq!(d.provenance, vec![1, 3, 5]);
        let cycles = d.directed_cycles(100).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].arcs.len(), 3);
    }

    #[test]
    fn square_contracts_to_digon() {
        let g = Graph::cycle(4).unwrap();
        let m = Matching::new(&g, vec![0, 2]).unwrap();
        let d = orient_and_contract(&g, &m).unwrap();
        assert_eq!(d.node_count(), 2);
        assert_eq!(d.arcs.len(), 2);
        assert_eq!(d.arcs[0].0, d.arcs[1].1);
        assert_eq!(d.directed_cycles(100).unwrap().len(), 1);
    }

    #[test]
    fn rejects_non_bipartite_and_imperfect() {
        let g = Graph::cycle(5).unwrap();
        let m = Matching::new(&g, vec![0, 2]).unwrap();
        assert_eq!(orient_and_contract(&g, &m), Err(Error::NotBipartite));
        let g = Graph::cycle(6).unwrap();
        let m = Matching::new(&g, vec![0]).unwrap();
        assert_eq!(orient_and_contract(&g, &m), Err(Error::NotPerfect));
    }
}
