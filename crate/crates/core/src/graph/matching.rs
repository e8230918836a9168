use serde::{Deserialize, Serialize};

use super::{EdgeId, Graph};
use crate::error::{Error, Result};
use crate::exec::{self, Config};

/// A set of pairwise vertex-disjoint edges, stored as sorted edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edge_ids: Vec<EdgeId>,
}

impl Matching {
    pub fn new(g: &Graph, mut edge_ids: Vec<EdgeId>) -> Result<Self> {
        edge_ids.sort_unstable();
        edge_ids.dedup();
        let mut owner = vec![usize::MAX; g.n()];
        for &e in &edge_ids {
            if e >= g.m() {
                return Err(Error::EdgeOutOfRange(e));
            }
            let (u, v) = g.edge(e);
            for w in [u, v] {
                if owner[w] != usize::MAX {
                    return Err(Error::NotAMatching(owner[w], e));
                }
                owner[w] = e;
            }
        }
        Ok(Matching { edge_ids })
    }

    pub(crate) fn from_sorted_unchecked(edge_ids: Vec<EdgeId>) -> Self {
        debug_assert!(edge_ids.windows(2).all(|w| w[0] < w[1]));
        Matching { edge_ids }
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edge_ids.binary_search(&e).is_ok()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.len() == g.n()
    }

    /// For each vertex, the matching edge covering it.
    pub fn covering_edges(&self, g: &Graph) -> Vec<Option<EdgeId>> {
        let mut cover = vec![None; g.n()];
        for &e in &self.edge_ids {
            let (u, v) = g.edge(e);
            cover[u] = Some(e);
            cover[v] = Some(e);
        }
        cover
    }

    /// Mate of every vertex; fails unless the matching is perfect.
    pub fn mates(&self, g: &Graph) -> Result<Vec<usize>> {
        if !self.is_perfect(g) {
            return Err(Error::NotPerfect);
        }
        let mut mate = vec![usize::MAX; g.n()];
        for &e in &self.edge_ids {
            let (u, v) = g.edge(e);
            mate[u] = v;
            mate[v] = u;
        }
        if mate.contains(&usize::MAX) {
            return Err(Error::NotPerfect);
        }
        Ok(mate)
    }

    /// `self ⊕ other` as sorted edge ids.
    pub fn symmetric_difference(&self, other: &Matching) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .edge_ids
            .iter()
            .filter(|e| !other.contains(**e))
            .chain(other.edge_ids.iter().filter(|e| !self.contains(**e)))
            .copied()
            .collect();
        out.sort_unstable();
        out
    }
}

struct Backtrack<'a> {
    g: &'a Graph,
    covered: Vec<bool>,
    stack: Vec<EdgeId>,
    out: Vec<Vec<EdgeId>>,
    cap: usize,
    overflow: bool,
}

impl Backtrack<'_> {
    fn has_free_neighbor(&self, v: usize) -> bool {
        self.g.neighbors(v).iter().any(|&(w, _)| !self.covered[w])
    }

    fn run(&mut self, from: usize) {
        if self.overflow {
            return;
        }
        let Some(v) = (from..self.g.n()).find(|&v| !self.covered[v]) else {
            if self.out.len() == self.cap {
                self.overflow = true;
            } else {
                self.out.push(self.stack.clone());
            }
            return;
        };
        for &(w, e) in self.g.neighbors(v) {
            if self.covered[w] {
                continue;
            }
            self.take(v, w, e);
            if self.viable(v, w) {
                self.run(v + 1);
            }
            self.untake(v, w);
            if self.overflow {
                return;
            }
        }
    }

    fn take(&mut self, v: usize, w: usize, e: EdgeId) {
        self.covered[v] = true;
        self.covered[w] = true;
        self.stack.push(e);
    }

    fn untake(&mut self, v: usize, w: usize) {
        self.covered[v] = false;
        self.covered[w] = false;
        self.stack.pop();
    }

    // Uncovered neighbors of the new pair must keep some uncovered neighbor.
    fn viable(&self, v: usize, w: usize) -> bool {
        [v, w].iter().all(|&x| {
            self.g
                .neighbors(x)
                .iter()
                .all(|&(y, _)| self.covered[y] || self.has_free_neighbor(y))
        })
    }
}

/// Perfect matchings of `g` restricted to the vertices not marked in
/// `precovered`, stopping once more than `cap` are found.
fn enumerate_capped(
    g: &Graph,
    precovered: Vec<bool>,
    cap: usize,
    cfg: &Config,
) -> (Vec<Vec<EdgeId>>, bool) {
    let uncovered = precovered.iter().filter(|c| !**c).count();
    if uncovered % 2 == 1 {
        return (Vec::new(), false);
    }
    let Some(first) = (0..g.n()).find(|&v| !precovered[v]) else {
        return (vec![Vec::new()], false);
    };
    // Split on the first vertex's edges; each branch is an independent search.
    let branches: Vec<(usize, EdgeId)> = g
        .neighbors(first)
        .iter()
        .copied()
        .filter(|&(w, _)| !precovered[w])
        .collect();
    let parts = exec::map_ordered(cfg.exec, &branches, |&(w, e)| {
        let mut bt = Backtrack {
            g,
            covered: precovered.clone(),
            stack: Vec::new(),
            out: Vec::new(),
            cap,
            overflow: false,
        };
        bt.take(first, w, e);
        if bt.viable(first, w) {
            bt.run(first + 1);
        }
        (bt.out, bt.overflow)
    });
    let mut all = Vec::new();
    let mut overflow = false;
    for (found, over) in parts {
        overflow |= over;
        all.extend(found);
    }
    if all.len() > cap {
        overflow = true;
        all.truncate(cap);
    }
    (all, overflow)
}

/// All perfect matchings, each once, in lexicographic order of their sorted
/// edge-id sequences.
pub fn enumerate_perfect_matchings(g: &Graph, cfg: &Config) -> Result<Vec<Matching>> {
    let cap = cfg.limits.max_matchings;
    let (found, overflow) = enumerate_capped(g, vec![false; g.n()], cap, cfg);
    if overflow {
        return Err(Error::LimitExceeded {
            what: "perfect matching",
            cap,
        });
    }
    let mut out: Vec<Matching> = found
        .into_iter()
        .map(|mut ids| {
            ids.sort_unstable();
            Matching::from_sorted_unchecked(ids)
        })
        .collect();
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PmMultiplicity {
    Zero,
    One(Matching),
    Many,
}

/// Zero, one or several perfect matchings. Bipartite graphs go through
/// pendant-vertex elimination first; only a stalled remainder is enumerated,
/// capped at two.
pub fn pm_multiplicity(g: &Graph) -> PmMultiplicity {
    let cfg = Config::sequential();
    if !g.is_bipartite() {
        return by_enumeration(g, vec![false; g.n()], Vec::new(), &cfg);
    }
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    stack.reverse();
    let mut forced = Vec::new();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        if deg[v] == 0 {
            return PmMultiplicity::Zero;
        }
        let &(u, e) = g
            .neighbors(v)
            .iter()
            .find(|&&(u, _)| alive[u])
            .expect("degree counts alive neighbors");
        forced.push(e);
        for x in [v, u] {
            alive[x] = false;
        }
        for x in [v, u] {
            for &(w, _) in g.neighbors(x) {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] <= 1 {
                        stack.push(w);
                    }
                }
            }
        }
    }
    if alive.iter().all(|a| !a) {
        forced.sort_unstable();
        return PmMultiplicity::One(Matching::from_sorted_unchecked(forced));
    }
    // Minimum degree >= 2 on the remainder: zero or at least two matchings.
    let precovered = alive.iter().map(|a| !a).collect();
    by_enumeration(g, precovered, forced, &cfg)
}

fn by_enumeration(
    g: &Graph,
    precovered: Vec<bool>,
    forced: Vec<EdgeId>,
    cfg: &Config,
) -> PmMultiplicity {
    let (found, overflow) = enumerate_capped(g, precovered, 1, cfg);
    match (found.len(), overflow) {
        (0, _) => PmMultiplicity::Zero,
        (1, false) => {
            let mut ids = forced;
            ids.extend(&found[0]);
            ids.sort_unstable();
            PmMultiplicity::One(Matching::from_sorted_unchecked(ids))
        }
        _ => PmMultiplicity::Many,
    }
}

pub fn has_unique_perfect_matching(g: &Graph) -> (bool, Option<Matching>) {
    match pm_multiplicity(g) {
        PmMultiplicity::One(m) => (true, Some(m)),
        _ => (false, None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fixedness {
    /// In no perfect matching.
    FixedSingle,
    /// In every perfect matching.
    FixedDouble,
    Free,
}

pub fn edge_fixedness(g: &Graph, cfg: &Config) -> Result<Vec<Fixedness>> {
    let pms = enumerate_perfect_matchings(g, cfg)?;
    fixedness_from(g, &pms)
}

pub(crate) fn fixedness_from(g: &Graph, pms: &[Matching]) -> Result<Vec<Fixedness>> {
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    let mut count = vec![0usize; g.m()];
    for m in pms {
        for &e in m.edge_ids() {
            count[e] += 1;
        }
    }
    Ok(count
        .into_iter()
        .map(|c| match c {
            0 => Fixedness::FixedSingle,
            c if c == pms.len() => Fixedness::FixedDouble,
            _ => Fixedness::Free,
        })
        .collect())
}

/// A connected component of the free-edge subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalComponent {
    /// Parent vertex ids, ascending; the component graph uses their positions.
    pub vertices: Vec<usize>,
    /// Parent edge ids, ascending.
    pub edges: Vec<EdgeId>,
    pub graph: Graph,
}

pub fn normal_components(g: &Graph, cfg: &Config) -> Result<Vec<NormalComponent>> {
    let fixed = edge_fixedness(g, cfg)?;
    Ok(components_of_free(g, &fixed))
}

pub(crate) fn components_of_free(g: &Graph, fixed: &[Fixedness]) -> Vec<NormalComponent> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let has_free = |v: usize| {
            g.neighbors(v)
                .iter()
                .any(|&(_, e)| fixed[e] == Fixedness::Free)
        };
        if !has_free(s) {
            continue;
        }
        let id = out.len();
        let mut vertices = vec![s];
        comp[s] = id;
        let mut i = 0;
        while i < vertices.len() {
            let u = vertices[i];
            i += 1;
            for &(w, e) in g.neighbors(u) {
                if fixed[e] == Fixedness::Free && comp[w] == usize::MAX {
                    comp[w] = id;
                    vertices.push(w);
                }
            }
        }
        vertices.sort_unstable();
        let mut edges: Vec<EdgeId> = (0..g.m())
            .filter(|&e| fixed[e] == Fixedness::Free && comp[g.edge(e).0] == id)
            .collect();
        edges.sort_unstable();
        let local = |v: usize| vertices.binary_search(&v).unwrap();
        let local_edges = edges
            .iter()
            .map(|&e| {
                let (u, v) = g.edge(e);
                (local(u), local(v))
            })
            .collect();
        let colors = g
            .colors()
            .map(|c| vertices.iter().map(|&v| c[v]).collect());
        let graph = Graph::new(vertices.len(), local_edges, colors)
            .expect("subgraph of a valid graph is valid");
        out.push(NormalComponent {
            vertices,
            edges,
            graph,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn c6_has_two_matchings() {
        let g = Graph::cycle(6).unwrap();
        let pms = enumerate_perfect_matchings(&g, &Config::default()).unwrap();
        assert_eq!(pms.len(), 2);
        assert_eq!(pms[0].edge_ids(), &[0, 2, 4]);
        assert_eq!(pms[1].edge_ids(), &[1, 3, 5]);
    }

    #[test]
    fn odd_and_empty_graphs() {
        let g = Graph::cycle(5).unwrap();
        assert!(enumerate_perfect_matchings(&g, &Config::default())
            .unwrap()
            .is_empty());
        let e = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(
            enumerate_perfect_matchings(&e, &Config::default())
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn matching_cap_is_loud() {
        let g = Graph::cycle(6).unwrap();
        let cfg = Config::with_limits(crate::Limits {
            max_matchings: 1,
            ..Default::default()
        });
        assert!(matches!(
            enumerate_perfect_matchings(&g, &cfg),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn uniqueness() {
        let (u, m) = has_unique_perfect_matching(&k2());
        assert!(u);
        assert_eq!(m.unwrap().edge_ids(), &[0]);
        assert!(!has_unique_perfect_matching(&Graph::cycle(6).unwrap()).0);
        assert_eq!(
            pm_multiplicity(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()),
            PmMultiplicity::Zero
        );
        // Path P4 is unique; non-bipartite triangle plus pendant is unique too.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(has_unique_perfect_matching(&p4).0);
        let tri = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(!tri.is_bipartite());
        assert_eq!(
            has_unique_perfect_matching(&tri).1.unwrap().edge_ids(),
            &[0, 3]
        );
    }

    #[test]
    fn fixedness_labels() {
        assert_eq!(
            edge_fixedness(&k2(), &Config::default()).unwrap(),
            vec![Fixedness::FixedDouble]
        );
        assert!(edge_fixedness(&Graph::cycle(6).unwrap(), &Config::default())
            .unwrap()
            .iter()
            .all(|f| *f == Fixedness::Free));
        assert_eq!(
            edge_fixedness(&Graph::cycle(5).unwrap(), &Config::default()),
            Err(Error::NoPerfectMatching)
        );
        assert!(normal_components(&k2(), &Config::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn matching_validation() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(Matching::new(&g, vec![0, 1]), Err(Error::NotAMatching(0, 1)));
        assert_eq!(Matching::new(&g, vec![9]), Err(Error::EdgeOutOfRange(9)));
        let m = Matching::new(&g, vec![4, 0, 2]).unwrap();
        assert!(m.is_perfect(&g));
        assert_eq!(m.mates(&g).unwrap(), vec![1, 0, 3, 2, 5, 4]);
    }
}
