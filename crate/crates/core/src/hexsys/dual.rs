use serde::Serialize;

use super::{Cell, HexSystem, ACROSS};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One node per cell, adjacent when the cells share an edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InnerDual {
    pub cells: Vec<Cell>,
    pub edges: Vec<(usize, usize)>,
    pub is_tree: bool,
}

impl InnerDual {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.cells.len(), &self.edges).expect("dual edges are simple")
    }
}

pub fn inner_dual(h: &HexSystem) -> InnerDual {
    let cells = h.cells().to_vec();
    let mut edges = Vec::new();
    for (i, &(q, r)) in cells.iter().enumerate() {
        for d in ACROSS {
            if let Some(j) = h.cell_index((q + d.0, r + d.1)) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    let is_tree = edges.len() + 1 == cells.len();
    InnerDual {
        cells,
        edges,
        is_tree,
    }
}

/// Catacondensed, and no hexagon is fused along two parallel edges.
pub fn is_all_kink_catahex(h: &HexSystem) -> bool {
    if !inner_dual(h).is_tree {
        return false;
    }
    h.cells().iter().all(|&(q, r)| {
        let fused: Vec<usize> = (0..6)
            .filter(|&k| h.cell_index((q + ACROSS[k].0, r + ACROSS[k].1)).is_some())
            .collect();
        fused.iter().all(|&k| !fused.contains(&((k + 3) % 6)))
    })
}

const INF: usize = usize::MAX / 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    In,
    /// Out, dominated by a child.
    Dominated,
    /// Out, left for the parent to dominate.
    Open,
}

/// Independent domination number of a tree with a minimum witness, by a
/// three-state rooted dynamic program.
pub fn tree_independent_domination(t: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = t.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    if t.m() + 1 != n {
        return Err(Error::NotATree);
    }
    // Preorder from vertex 0.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &(w, _) in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotATree);
    }
    let children: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            t.neighbors(v)
                .iter()
                .map(|&(w, _)| w)
                .filter(|&w| parent[w] == v)
                .collect()
        })
        .collect();
    let mut dp_in = vec![0usize; n];
    let mut dp_dom = vec![0usize; n];
    let mut dp_open = vec![0usize; n];
    for &v in order.iter().rev() {
        let mut sum_in = 1;
        let mut sum_dom = 0;
        let mut extra = INF;
        let mut sum_open = 0;
        let mut any = false;
        for &c in &children[v] {
            any = true;
            sum_in = (sum_in + dp_dom[c].min(dp_open[c])).min(INF);
            sum_dom = (sum_dom + dp_in[c].min(dp_dom[c])).min(INF);
            extra = extra.min(dp_in[c].saturating_sub(dp_dom[c]));
            sum_open = (sum_open + dp_dom[c]).min(INF);
        }
        dp_in[v] = sum_in.min(INF);
        dp_dom[v] = if any { (sum_dom + extra).min(INF) } else { INF };
        dp_open[v] = sum_open.min(INF);
    }
    let root_state = if dp_in[0] <= dp_dom[0] {
        State::In
    } else {
        State::Dominated
    };
    let value = dp_in[0].min(dp_dom[0]);
    let mut state = vec![State::Open; n];
    state[0] = root_state;
    let mut chosen = Vec::new();
    for &v in &order {
        let kids = &children[v];
        match state[v] {
            State::In => {
                chosen.push(v);
                for &c in kids {
                    state[c] = if dp_dom[c] <= dp_open[c] {
                        State::Dominated
                    } else {
                        State::Open
                    };
                }
            }
            State::Dominated => {
                for &c in kids {
                    state[c] = if dp_in[c] <= dp_dom[c] {
                        State::In
                    } else {
                        State::Dominated
                    };
                }
                if !kids.iter().any(|&c| state[c] == State::In) {
                    let c = *kids
                        .iter()
                        .min_by_key(|&&c| (dp_in[c] - dp_dom[c], c))
                        .expect("dominated node has a child");
                    state[c] = State::In;
                }
            }
            State::Open => {
                for &c in kids {
                    state[c] = State::Dominated;
                }
            }
        }
    }
    chosen.sort_unstable();
    debug_assert_eq!(chosen.len(), value);
    Ok((value, chosen))
}

/// Maximum matching size of a tree (leaf-greedy).
pub fn tree_matching_number(t: &Graph) -> Result<usize> {
    let n = t.n();
    if n > 0 && t.m() + 1 != n {
        return Err(Error::NotATree);
    }
    let mut matched = vec![false; n];
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut count = 0;
    while let Some(v) = leaves.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        let Some(&(p, _)) = t.neighbors(v).iter().find(|&&(p, _)| !removed[p]) else {
            continue;
        };
        if !matched[v] && !matched[p] {
            matched[v] = true;
            matched[p] = true;
            count += 1;
        }
        deg[p] -= 1;
        if deg[p] == 1 {
            leaves.push(p);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_ids(t: &Graph) -> usize {
        let n = t.n();
        (0u32..1 << n)
            .filter(|&mask| {
                let inside = |v: usize| mask >> v & 1 == 1;
                let independent = t.edges().iter().all(|&(u, v)| !(inside(u) && inside(v)));
                let dominating = (0..n)
                    .all(|v| inside(v) || t.neighbors(v).iter().any(|&(w, _)| inside(w)));
                independent && dominating
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn brute_matching(t: &Graph) -> usize {
        let m = t.m();
        (0u32..1 << m)
            .filter(|&mask| {
                let mut used = vec![false; t.n()];
                (0..m).filter(|&e| mask >> e & 1 == 1).all(|e| {
                    let (u, v) = t.edge(e);
                    !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    /// Trees from Prüfer-like parent arrays: node i > 0 hangs from parents[i-1] < i.
    fn trees_up_to(n: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        fn rec(n: usize, parents: &mut Vec<usize>, out: &mut Vec<Graph>) {
            let k = parents.len() + 1;
            if k == n {
                let edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                out.push(Graph::from_edges(n, &edges).unwrap());
                return;
            }
            for p in 0..k {
                parents.push(p);
                rec(n, parents, out);
                parents.pop();
            }
        }
        for size in 1..=n {
            rec(size, &mut Vec::new(), &mut out);
        }
        out
    }

    #[test]
    fn dp_matches_brute_force_on_small_trees() {
        for t in trees_up_to(7) {
            let (value, set) = tree_independent_domination(&t).unwrap();
            assert_eq!(value, brute_ids(&t));
            assert_eq!(set.len(), value);
            assert_eq!(tree_matching_number(&t).unwrap(), brute_matching(&t));
        }
    }

    #[test]
    fn star_and_single_node() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_independent_domination(&star).unwrap(), (1, vec![0]));
        let one = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(tree_independent_domination(&one).unwrap(), (1, vec![0]));
        let tri = Graph::cycle(3).unwrap();
        assert_eq!(tree_independent_domination(&tri), Err(Error::NotATree));
    }
}
