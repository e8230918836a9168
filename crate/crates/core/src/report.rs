//! Invariant reports: computed values with auditable witnesses.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::antiforcing::{
    anti_forcing_edges, antiforcing_number, antiforcing_spectrum_of, is_antiforcing_set,
    leaves_unique,
};
use crate::error::{Error, Result};
use crate::exec::Config;
use crate::forcing::{forces_uniquely, forcing_number, forcing_spectrum_of, is_forcing_set, Spectrum};
use crate::graph::{
    enumerate_perfect_matchings, fixedness_from, components_of_free, has_unique_perfect_matching,
    Fixedness, Graph, Matching,
};
use crate::hexsys::{
    inner_dual, is_all_kink_catahex, is_truncated_parallelogram, scan_with,
    tree_independent_domination, HexSystem,
};
use crate::io::Instance;
use crate::verify::{CorpusEntry, Status, Verifier, VerifyOptions};

pub const INVARIANTS: [&str; 17] = [
    "pm_count",
    "f",
    "F",
    "af",
    "Af",
    "f_spectrum",
    "af_spectrum",
    "anti_forcing_edges",
    "fixedness",
    "normal_components",
    "clar",
    "fries",
    "fries_min",
    "inner_dual",
    "all_kink",
    "trunc_para",
    "i_dual",
];

const HEX_ONLY: [&str; 7] = [
    "clar",
    "fries",
    "fries_min",
    "inner_dual",
    "all_kink",
    "trunc_para",
    "i_dual",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantEntry {
    pub name: String,
    pub value: Value,
    pub witness: Value,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub id: String,
    pub status: Status,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub instance: String,
    pub format: String,
    pub sha256: String,
    pub invariants: Vec<InvariantEntry>,
    pub checks: Vec<SuiteCheck>,
}

fn pms_of(g: &Graph, cfg: &Config) -> Result<Vec<Matching>> {
    let pms = enumerate_perfect_matchings(g, cfg)?;
    if pms.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    Ok(pms)
}

fn pick(s: &Spectrum, max: bool) -> usize {
    let target = if max { s.max } else { s.min };
    s.values.iter().position(|&v| v == target).unwrap()
}

fn hex<'a>(inst: &'a Instance, name: &str) -> Result<&'a HexSystem> {
    inst.hex().ok_or_else(|| Error::Inapplicable(name.to_string()))
}

/// Value and witness of one invariant.
pub fn compute_invariant(inst: &Instance, name: &str, cfg: &Config) -> Result<(Value, Value)> {
    let g = inst.graph();
    if HEX_ONLY.contains(&name) {
        hex(inst, name)?;
    }
    Ok(match name {
        "pm_count" => (json!(enumerate_perfect_matchings(g, cfg)?.len()), Value::Null),
        "f" | "F" | "af" | "Af" => {
            let pms = pms_of(g, cfg)?;
            let anti = name.eq_ignore_ascii_case("af");
            let spec = if anti {
                antiforcing_spectrum_of(g, &pms, cfg)?
            } else {
                forcing_spectrum_of(g, &pms, cfg)?
            };
            let i = pick(&spec, name.starts_with(char::is_uppercase));
            let w = if anti {
                antiforcing_number(g, &pms[i], cfg)?
            } else {
                forcing_number(g, &pms[i], cfg)?
            };
            (
                json!(w.value),
                json!({ "matching_index": i, "matching": pms[i], "edges": w.edges }),
            )
        }
        "f_spectrum" => (json!(forcing_spectrum_of(g, &pms_of(g, cfg)?, cfg)?), Value::Null),
        "af_spectrum" => (json!(antiforcing_spectrum_of(g, &pms_of(g, cfg)?, cfg)?), Value::Null),
        "anti_forcing_edges" => (json!(anti_forcing_edges(g)), Value::Null),
        "fixedness" => {
            let fixed = fixedness_from(g, &pms_of(g, cfg)?)?;
            (json!(fixed.iter().map(fixedness_name).collect::<Vec<_>>()), Value::Null)
        }
        "normal_components" => {
            let fixed = fixedness_from(g, &pms_of(g, cfg)?)?;
            let comps: Vec<Value> = components_of_free(g, &fixed)
                .into_iter()
                .map(|c| json!({ "vertices": c.vertices, "edges": c.edges }))
                .collect();
            (json!(comps), Value::Null)
        }
        "clar" | "fries" | "fries_min" => {
            let h = hex(inst, name)?;
            let scan = scan_with(h, pms_of(g, cfg)?, cfg)?;
            let w = match name {
                "clar" => scan.clar(h),
                "fries" => scan.fries(h).fries,
                _ => scan.fries(h).fries_min,
            };
            (
                json!(w.value),
                json!({ "matching_index": w.matching_index, "matching": w.matching, "hexagons": w.hexagons }),
            )
        }
        "inner_dual" => (json!(inner_dual(hex(inst, name)?)), Value::Null),
        "all_kink" => (json!(is_all_kink_catahex(hex(inst, name)?)), Value::Null),
        "trunc_para" => (json!(is_truncated_parallelogram(hex(inst, name)?)), Value::Null),
        "i_dual" => {
            let d = inner_dual(hex(inst, name)?);
            if !d.is_tree {
                return Err(Error::Inapplicable(name.to_string()));
            }
            let (value, set) = tree_independent_domination(&d.graph())?;
            let cells: Vec<_> = set.iter().map(|&k| d.cells[k]).collect();
            (json!(value), json!({ "cells": cells }))
        }
        other => return Err(Error::UnknownInvariant(other.to_string())),
    })
}

fn fixedness_name(f: &Fixedness) -> &'static str {
    match f {
        Fixedness::FixedSingle => "fixed-single",
        Fixedness::FixedDouble => "fixed-double",
        Fixedness::Free => "free",
    }
}

/// Builds a report with exactly the requested invariants, in request
/// order, plus the requested suite checks.
pub fn compute_report(
    id: &str,
    inst: &Instance,
    names: &[&str],
    checks: &[&str],
    cfg: &Config,
) -> Result<InvariantReport> {
    if let Some(bad) = names.iter().find(|n| !INVARIANTS.contains(n)) {
        return Err(Error::UnknownInvariant(bad.to_string()));
    }
    let mut invariants = Vec::with_capacity(names.len());
    for &name in names {
        let t = Instant::now();
        let (value, witness) = compute_invariant(inst, name, cfg)?;
        invariants.push(InvariantEntry {
            name: name.to_string(),
            value,
            witness,
            runtime_ms: t.elapsed().as_millis() as u64,
        });
    }
    let verifier = Verifier::new(VerifyOptions {
        config: *cfg,
        ..VerifyOptions::default()
    });
    let entry = CorpusEntry {
        id: id.to_string(),
        instance: inst.clone(),
        planar_bipartite: inst.hex().is_some(),
    };
    let checks = checks
        .iter()
        .map(|&s| {
            let (status, counterexample) = verifier.check_entry(s, &entry)?;
            Ok(SuiteCheck {
                id: s.to_string(),
                status,
                counterexample,
            })
        })
        .collect::<Result<_>>()?;
    Ok(InvariantReport {
        instance: id.to_string(),
        format: inst.format().extension().to_string(),
        sha256: inst.digest(),
        invariants,
        checks,
    })
}

impl InvariantReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    }

    /// Checks the instance hash and every witness against `inst`. Returns
    /// the names of entries that fail.
    pub fn revalidate(&self, inst: &Instance, cfg: &Config) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        if inst.digest() != self.sha256 {
            bad.push("sha256".to_string());
        }
        for e in &self.invariants {
            if !witness_ok(inst, e, cfg)? {
                bad.push(e.name.clone());
            }
        }
        Ok(bad)
    }

    /// Recomputes every invariant value and compares.
    pub fn replay(&self, inst: &Instance, cfg: &Config) -> Result<bool> {
        for e in &self.invariants {
            if compute_invariant(inst, &e.name, cfg)?.0 != e.value {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn as_usizes(v: &Value) -> Option<Vec<usize>> {
    serde_json::from_value(v.clone()).ok()
}

fn witness_matching(g: &Graph, w: &Value) -> Option<Matching> {
    let m = Matching::new(g, as_usizes(&w["matching"])?).ok()?;
    m.is_perfect(g).then_some(m)
}

fn witness_ok(inst: &Instance, e: &InvariantEntry, cfg: &Config) -> Result<bool> {
    let g = inst.graph();
    let value = e.value.as_u64().map(|v| v as usize);
    Ok(match e.name.as_str() {
        "f" | "F" | "af" | "Af" => {
            let (Some(m), Some(s), Some(v)) =
                (witness_matching(g, &e.witness), as_usizes(&e.witness["edges"]), value)
            else {
                return Ok(false);
            };
            if s.len() != v {
                return Ok(false);
            }
            if e.name.eq_ignore_ascii_case("af") {
                s.iter().all(|&x| x < g.m() && !m.contains(x))
                    && is_antiforcing_set(g, &m, &s, cfg)?
                    && leaves_unique(g, &m, &s)?
            } else {
                s.iter().all(|&x| m.contains(x))
                    && is_forcing_set(g, &m, &s, cfg)?
                    && forces_uniquely(g, &m, &s)?
            }
        }
        "clar" | "fries" | "fries_min" => {
            let Some(h) = inst.hex() else { return Ok(false) };
            let (Some(m), Some(v)) = (witness_matching(g, &e.witness), value) else {
                return Ok(false);
            };
            let Ok(cells) = serde_json::from_value::<Vec<(i32, i32)>>(e.witness["hexagons"].clone())
            else {
                return Ok(false);
            };
            let Some(idx) = cells.iter().map(|&c| h.cell_index(c)).collect::<Option<Vec<_>>>()
            else {
                return Ok(false);
            };
            if idx.len() != v || !idx.iter().all(|&k| h.is_alternating(k, &m)) {
                return Ok(false);
            }
            if e.name == "clar" {
                let mut seen = vec![false; g.n()];
                idx.iter()
                    .flat_map(|&k| h.face_vertices(k).iter())
                    .all(|&x| !std::mem::replace(&mut seen[x], true))
            } else {
                idx.len() == h.alternating_hexagons(&m).len()
            }
        }
        "anti_forcing_edges" => match as_usizes(&e.value) {
            Some(es) => es.iter().all(|&x| {
                x < g.m() && has_unique_perfect_matching(&g.without_edges(&[x]).0).0
            }),
            None => false,
        },
        "i_dual" => {
            let Some(h) = inst.hex() else { return Ok(false) };
            let d = inner_dual(h);
            let Ok(cells) = serde_json::from_value::<Vec<(i32, i32)>>(e.witness["cells"].clone())
            else {
                return Ok(false);
            };
            let Some(set) = cells
                .iter()
                .map(|c| d.cells.iter().position(|x| x == c))
                .collect::<Option<Vec<_>>>()
            else {
                return Ok(false);
            };
            let t = d.graph();
            let inside = |v: usize| set.contains(&v);
            Some(set.len()) == value
                && t.edges().iter().all(|&(u, v)| !(inside(u) && inside(v)))
                && (0..t.n()).all(|v| inside(v) || t.neighbors(v).iter().any(|&(w, _)| inside(w)))
        }
        _ => true,
    })
}
