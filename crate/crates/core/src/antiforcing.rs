//! Anti-forcing sets and numbers, compatible alternating sets, and the
//! feedback-set view on the contracted digraph.

use crate::error::{Error, Result};
use crate::exec::{self, Config};
use crate::forcing::{inner, EdgeWitness, Spectrum};
use crate::graph::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, has_unique_perfect_matching,
    pm_multiplicity, AltCycle, ContractedDigraph, CycleFamily, DirectedCycle, EdgeId, FamilyMode,
    Graph, Matching, PmMultiplicity,
};
use crate::setsys::SetFamily;

/// `S ∩ M = ∅` anti-forces `M` iff every M-alternating cycle contains an edge of `S`.
pub fn is_antiforcing_set(g: &Graph, m: &Matching, s: &[EdgeId], cfg: &Config) -> Result<bool> {
    if let Some(&e) = s.iter().find(|&&e| m.contains(e)) {
        return Err(Error::IntersectsM(e));
    }
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(cycles
        .iter()
        .all(|c| s.iter().any(|e| c.edge_ids.binary_search(e).is_ok())))
}

/// Whether `G - S` has `m` as its only perfect matching.
pub fn leaves_unique(g: &Graph, m: &Matching, s: &[EdgeId]) -> Result<bool> {
    if let Some(&e) = s.iter().find(|&&e| m.contains(e)) {
        return Err(Error::IntersectsM(e));
    }
    let (h, map) = g.without_edges(s);
    Ok(match has_unique_perfect_matching(&h) {
        (true, Some(unique)) => {
            let back: Vec<EdgeId> = unique.edge_ids().iter().map(|&e| map[e]).collect();
            back == m.edge_ids()
        }
        _ => false,
    })
}

pub(crate) fn antiforcing_from_cycles(g: &Graph, m: &Matching, cycles: &[AltCycle]) -> EdgeWitness {
    let fam = SetFamily::new(g.m(), cycles.iter().map(|c| c.unmatched_edges(m)));
    EdgeWitness::new(fam.min_hitting_set().expect("alternating cycles contain unmatched edges"))
}

pub(crate) fn compatible_from_cycles(g: &Graph, m: &Matching, cycles: &[AltCycle]) -> CycleFamily {
    // Two alternating cycles through a common vertex both contain its matched
    // edge, so compatibility reduces to disjoint unmatched-edge sets.
    let fam = SetFamily::new(g.m(), cycles.iter().map(|c| c.unmatched_edges(m)));
    CycleFamily {
        cycles: fam
            .max_packing()
            .into_iter()
            .map(|i| cycles[i].clone())
            .collect(),
        mode: FamilyMode::Compatible,
    }
}

/// `af(G, M)` with the lexicographically least minimum anti-forcing set.
pub fn antiforcing_number(g: &Graph, m: &Matching, cfg: &Config) -> Result<EdgeWitness> {
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(antiforcing_from_cycles(g, m, &cycles))
}

/// `c'(M)`: a maximum compatible M-alternating set.
pub fn max_compatible_alternating_set(g: &Graph, m: &Matching, cfg: &Config) -> Result<CycleFamily> {
    let cycles = enumerate_alternating_cycles(g, m, cfg)?;
    Ok(compatible_from_cycles(g, m, &cycles))
}

pub fn antiforcing_spectrum(g: &Graph, cfg: &Config) -> Result<Spectrum> {
    let pms = enumerate_perfect_matchings(g, cfg)?;
    antiforcing_spectrum_of(g, &pms, cfg)
}

pub(crate) fn antiforcing_spectrum_of(g: &Graph, pms: &[Matching], cfg: &Config) -> Result<Spectrum> {
    let inner = inner(cfg);
    let values = exec::try_map_ordered(cfg.exec, pms, |m| {
        antiforcing_number(g, m, &inner).map(|w| w.value)
    })?;
    Spectrum::from_values(values)
}

/// Edges whose removal alone leaves a unique perfect matching.
pub fn anti_forcing_edges(g: &Graph) -> Vec<EdgeId> {
    (0..g.m())
        .filter(|&e| {
            let (h, _) = g.without_edges(&[e]);
            matches!(pm_multiplicity(&h), PmMultiplicity::One(_))
        })
        .collect()
}

/// Smallest edge set of `g`, of size at most `max_k`, whose removal leaves a
/// unique perfect matching. Exhaustive over edge subsets.
pub fn min_global_antiforcing_set(g: &Graph, max_k: usize) -> Option<EdgeWitness> {
    let m = g.m();
    for k in 0..=max_k.min(m) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let (h, _) = g.without_edges(&idx);
            if matches!(pm_multiplicity(&h), PmMultiplicity::One(_)) {
                return Some(EdgeWitness::new(idx));
            }
            // next k-combination of 0..m
            let Some(i) = (0..k).rev().find(|&i| idx[i] != i + m - k) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Minimum feedback arc set of the contracted digraph, as arc indices.
pub fn min_feedback_set(d: &ContractedDigraph, cfg: &Config) -> Result<Vec<usize>> {
    let cycles = d.directed_cycles(cfg.limits.max_cycles)?;
    let fam = SetFamily::new(d.arcs.len(), cycles.iter().map(|c| c.arcs.clone()));
    Ok(fam.min_hitting_set().expect("directed cycles are non-empty"))
}

/// Maximum family of pairwise arc-disjoint directed cycles.
pub fn max_arc_disjoint_cycles(d: &ContractedDigraph, cfg: &Config) -> Result<Vec<DirectedCycle>> {
    let cycles = d.directed_cycles(cfg.limits.max_cycles)?;
    let fam = SetFamily::new(d.arcs.len(), cycles.iter().map(|c| c.arcs.clone()));
    Ok(fam
        .max_packing()
        .into_iter()
        .map(|i| cycles[i].clone())
        .collect())
}
