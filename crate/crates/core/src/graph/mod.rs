//! Simple undirected graphs, perfect matchings and alternating cycles.

mod contract;
mod cycles;
mod matching;

pub use contract::{orient_and_contract, ContractedDigraph, DirectedCycle};
pub use cycles::{enumerate_alternating_cycles, AltCycle, CycleFamily, FamilyMode};
pub use matching::{
    edge_fixedness, enumerate_perfect_matchings, has_unique_perfect_matching, normal_components,
    pm_multiplicity, Fixedness, Matching, NormalComponent, PmMultiplicity,
};
pub(crate) use matching::{components_of_free, fixedness_from};

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Color::White => 0,
            Color::Black => 1,
        }
    }
}

/// Simple undirected graph on vertices `0..n`. Edge ids are positions in the
/// input edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    color: Option<Vec<Color>>,
    adj: Vec<Vec<(usize, EdgeId)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and improper colorings.
    /// Without an explicit coloring a 2-coloring is computed when one exists.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, color: Option<Vec<Color>>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let color = match color {
            Some(c) => {
                if c.len() != n {
                    return Err(Error::ColoringLength { got: c.len(), n });
                }
                if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| c[u] == c[v]) {
                    return Err(Error::BadColoring { u, v });
                }
                Some(c)
            }
            None => two_coloring(n, &adj),
        };
        Ok(Graph {
            n,
            edges,
            color,
            adj,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::new(n, edges.to_vec(), None)
    }

    /// Cycle on `n` vertices `0..n`.
    pub fn cycle(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), None)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge id)` pairs in edge-id order.
    pub fn neighbors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn colors(&self) -> Option<&[Color]> {
        self.color.as_deref()
    }

    pub fn is_bipartite(&self) -> bool {
        self.color.is_some()
    }

    /// The graph with the given edges deleted. Returns the new graph and, for
    /// each of its edges, the id of the original edge.
    pub fn without_edges(&self, removed: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let removed: HashSet<EdgeId> = removed.iter().copied().collect();
        let keep: Vec<EdgeId> = (0..self.m()).filter(|e| !removed.contains(e)).collect();
        let sub = self.edge_subgraph(&keep);
        (sub, keep)
    }

    /// Spanning subgraph keeping only `keep` (in that order); colors carried over.
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Graph {
        let edges: Vec<_> = keep.iter().map(|&e| self.edges[e]).collect();
        let mut adj = vec![Vec::new(); self.n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        let color = match &self.color {
            Some(c) => Some(c.clone()),
            None => two_coloring(self.n, &adj),
        };
        Graph {
            n: self.n,
            edges,
            color,
            adj,
        }
    }

    /// Relabels vertex `v` as `n - 1 - v`, keeping edge order.
    pub fn reversed_labels(&self) -> Graph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (n - 1 - u, n - 1 - v))
            .collect();
        let color = self
            .color
            .as_ref()
            .map(|c| (0..n).map(|v| c[n - 1 - v]).collect());
        Graph::new(n, edges, color).expect("relabeling preserves validity")
    }
}

/// BFS 2-coloring; each component's lowest vertex is white.
fn two_coloring(n: usize, adj: &[Vec<(usize, EdgeId)>]) -> Option<Vec<Color>> {
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(Color::White);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &(w, _) in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(cu.other());
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}
