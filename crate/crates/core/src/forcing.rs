//! Forcing sets, forcing numbers and disjoint alternating-cycle packings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::{self, Config, Exec};
use crate::graph::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, pm_multiplicity, AltCycle,
    CycleFamily, EdgeId, FamilyMode, Graph, Matching, PmMultiplicity,
};
use crate::setsys::SetFamily;

/// An optimal edge set together with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub value: usize,
    pub edges: Vec<EdgeId>,
}

impl EdgeWitness {
    pub(crate) fn new(edges: Vec<EdgeId>) -> Self {
        EdgeWitness {
            value: edges.len(),
            edges,
        }
    }
}

/// Per-matching values in canonical matching order, with their extremes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub value_set: Vec<usize>,
}

impl Spectrum {
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        let min = *values.iter().min().ok_or(Error::NoPerfectMatching)?;
        let max = *values.iter().max().unwrap();
        let mut value_set = values.clone();
        value_set.sort_unstable();
        value_set.dedup();
        Ok(Spectrum {
            values,
            min,
            max,
            value_set,
        })
    }
}

pub(crate) fn inner(cfg: &Config) -> Config {
    Config {
        exec: Exec::Sequential,
        ..*cfg
    }
}

/// `S ⊆ M` forces `M` iff every M-alternating cycle contains an edge of `S`.
pub fn is_forcing_set(g: &Graph, m: &Matching, s: &[EdgeId], cfg: &Config) -> Result<bool> {
    if let Some(&e) = s.iter().find(|&&e| !m.contains(e)) {
        return Err(Error::NotSubsetOfM(e));
    }
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(cycles
        .iter()
        .all(|c| s.iter().any(|e| c.edge_ids.binary_search(e).is_ok())))
}

/// Whether `m` is the only perfect matching containing `s`, decided by
/// deleting the ends of `s` and testing the rest for a unique matching.
pub fn forces_uniquely(g: &Graph, m: &Matching, s: &[EdgeId]) -> Result<bool> {
    if let Some(&e) = s.iter().find(|&&e| !m.contains(e)) {
        return Err(Error::NotSubsetOfM(e));
    }
    let mut gone = vec![false; g.n()];
    for &e in s {
        let (u, v) = g.edge(e);
        gone[u] = true;
        gone[v] = true;
    }
    let keep: Vec<EdgeId> = (0..g.m())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            !gone[u] && !gone[v]
        })
        .collect();
    let rest: Vec<usize> = (0..g.n()).filter(|&v| !gone[v]).collect();
    let local = |v: usize| rest.binary_search(&v).unwrap();
    let colors = g.colors().map(|c| rest.iter().map(|&v| c[v]).collect());
    let edges = keep
        .iter()
        .map(|&e| {
            let (u, v) = g.edge(e);
            (local(u), local(v))
        })
        .collect();
    let h = Graph::new(rest.len(), edges, colors)?;
    Ok(matches!(pm_multiplicity(&h), PmMultiplicity::One(_)))
}

pub(crate) fn forcing_from_cycles(g: &Graph, m: &Matching, cycles: &[AltCycle]) -> EdgeWitness {
    let fam = SetFamily::new(g.m(), cycles.iter().map(|c| c.matched_edges(m)));
    EdgeWitness::new(fam.min_hitting_set().expect("alternating cycles contain matched edges"))
}

pub(crate) fn disjoint_from_cycles(m: &Matching, g: &Graph, cycles: &[AltCycle]) -> CycleFamily {
    // Vertex-disjoint iff their matched edges are disjoint: every cycle vertex
    // lies on its own matched edge.
    let fam = SetFamily::new(g.m(), cycles.iter().map(|c| c.matched_edges(m)));
    CycleFamily {
        cycles: fam
            .max_packing()
            .into_iter()
            .map(|i| cycles[i].clone())
            .collect(),
        mode: FamilyMode::Disjoint,
    }
}

/// `f(G, M)` with the lexicographically least minimum forcing set.
pub fn forcing_number(g: &Graph, m: &Matching, cfg: &Config) -> Result<EdgeWitness> {
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(forcing_from_cycles(g, m, &cycles))
}

/// `c(M)`: a maximum family of pairwise vertex-disjoint M-alternating cycles.
pub fn max_disjoint_alternating_cycles(g: &Graph, m: &Matching, cfg: &Config) -> Result<CycleFamily> {
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(disjoint_from_cycles(m, g, &cycles))
}

pub fn forcing_spectrum(g: &Graph, cfg: &Config) -> Result<Spectrum> {
    let pms = enumerate_perfect_matchings(g, cfg)?;
    forcing_spectrum_of(g, &pms, cfg)
}

pub(crate) fn forcing_spectrum_of(g: &Graph, pms: &[Matching], cfg: &Config) -> Result<Spectrum> {
    let inner = inner(cfg);
    let values = exec::try_map_ordered(cfg.exec, pms, |m| {
        forcing_number(g, m, &inner).map(|w| w.value)
    })?;
    Spectrum::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6() -> (Graph, Matching) {
        let g = Graph::cycle(6).unwrap();
        let m = Matching::new(&g, vec![0, 2, 4]).unwrap();
        (g, m)
    }

    #[test]
    fn hexagon_forcing() {
        let (g, m) = c6();
        let cfg = Config::default();
        assert!(is_forcing_set(&g, &m, &[2], &cfg).unwrap());
        assert!(!is_forcing_set(&g, &m, &[], &cfg).unwrap());
        assert_eq!(is_forcing_set(&g, &m, &[1], &cfg), Err(Error::NotSubsetOfM(1)));
        assert!(forces_uniquely(&g, &m, &[4]).unwrap());
        assert!(!forces_uniquely(&g, &m, &[]).unwrap());
        let w = forcing_number(&g, &m, &cfg).unwrap();
        assert_eq!(w, EdgeWitness { value: 1, edges: vec![0] });
        assert_eq!(max_disjoint_alternating_cycles(&g, &m, &cfg).unwrap().len(), 1);
        let spec = forcing_spectrum(&g, &cfg).unwrap();
        assert_eq!(spec.value_set, vec![1]);
    }

    #[test]
    fn spectrum_needs_a_matching() {
        let g = Graph::cycle(3).unwrap();
        assert_eq!(
            forcing_spectrum(&g, &Config::default()),
            Err(Error::NoPerfectMatching)
        );
    }
}
