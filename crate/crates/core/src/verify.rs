//! Property-check suites over the generated corpus.
//!
//! Each suite walks its corpus, recomputes everything from scratch and
//! reports one status per instance. Failures carry a JSON counterexample.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::antiforcing::{
    anti_forcing_edges, antiforcing_from_cycles, compatible_from_cycles, max_arc_disjoint_cycles,
    min_feedback_set,
};
use crate::error::{Error, Result};
use crate::exec::{self, Config};
use crate::forcing::{disjoint_from_cycles, forcing_from_cycles, inner};
use crate::generators::{
    dodecahedron, enumerate_hex_systems, glue_af2, glue_presets, gen_truncated_parallelogram,
    truncated_parallelogram_params, MAX_CORPUS_CELLS, PERYLENE, TRIPHENYLENE,
};
use crate::graph::{
    components_of_free, enumerate_alternating_cycles, enumerate_perfect_matchings,
    fixedness_from, orient_and_contract, Fixedness, Graph, Matching,
};
use crate::hexsys::{
    inner_dual, is_all_kink_catahex, is_truncated_parallelogram, normalize_cells, parallel_cuts,
    scan_with, tree_independent_domination, tree_matching_number, HexSystem, HexagonScan,
};
use crate::io::Instance;

pub const SUITES: [&str; 13] = [
    "thm2", "thm3", "thm5", "lem8", "thm9", "thm11", "cor12", "thm13", "thm14", "thm15", "thm16",
    "thm20", "lem19",
];

/// Largest truncated parallelograms added to the thm9 corpus.
pub const THM9_TP_CELLS: usize = 12;

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub instance: Instance,
    /// Set by the generator; planarity is never tested.
    pub planar_bipartite: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub results: Vec<InstanceResult>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Cell bound for the hexagonal part of the corpus; polyhexes stop at 6.
    pub max_cells: usize,
    pub config: Config,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_cells: MAX_CORPUS_CELLS,
            config: Config::default(),
        }
    }
}

fn hex_entry(id: String, h: HexSystem) -> CorpusEntry {
    CorpusEntry {
        id,
        instance: Instance::Hex(h),
        planar_bipartite: true,
    }
}

fn push_unique(out: &mut Vec<CorpusEntry>, seen: &mut BTreeSet<Vec<(i32, i32)>>, e: CorpusEntry) {
    if let Instance::Hex(h) = &e.instance {
        if !seen.insert(normalize_cells(h.cells())) {
            return;
        }
    }
    out.push(e);
}

/// Named hexagonal instances, truncated parallelograms and fixed polyhexes
/// with at most `max_cells` cells, then truncated parallelograms up to
/// `tp_cells` and the glue presets. Duplicates up to translation keep the
/// first id.
pub fn hex_corpus(max_cells: usize, tp_cells: usize, presets: bool) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (name, cells) in [("triphenylene", &TRIPHENYLENE[..]), ("perylene", &PERYLENE[..])] {
        if cells.len() <= max_cells {
            push_unique(&mut out, &mut seen, hex_entry(name.into(), HexSystem::new(cells)?));
        }
    }
    for rows in truncated_parallelogram_params(max_cells.max(tp_cells)) {
        let id = format!(
            "trunc-para-{}",
            rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
        );
        push_unique(&mut out, &mut seen, hex_entry(id, gen_truncated_parallelogram(&rows)?));
    }
    for n in 1..=max_cells.min(MAX_CORPUS_CELLS) {
        for (i, h) in enumerate_hex_systems(n)?.into_iter().enumerate() {
            push_unique(&mut out, &mut seen, hex_entry(format!("polyhex-{n}-{i}"), h));
        }
    }
    if presets {
        for (i, spec) in glue_presets().iter().enumerate() {
            push_unique(&mut out, &mut seen, hex_entry(format!("glue-{}", i + 1), glue_af2(spec)?));
        }
    }
    Ok(out)
}

/// The non-hexagonal named graphs.
pub fn graph_corpus() -> Vec<CorpusEntry> {
    let graph = |id: &str, g: Graph, pb: bool| CorpusEntry {
        id: id.into(),
        instance: Instance::Graph(g),
        planar_bipartite: pb,
    };
    vec![
        graph("c4", Graph::cycle(4).expect("cycle"), true),
        graph("c6", Graph::cycle(6).expect("cycle"), true),
        graph("dodecahedron", dodecahedron(), false),
    ]
}

/// Corpus of a suite under the given options.
pub fn suite_corpus(suite: &str, opts: &VerifyOptions) -> Result<Vec<CorpusEntry>> {
    let mc = opts.max_cells;
    Ok(match suite {
        "thm2" | "thm5" | "lem8" => {
            let mut c = hex_corpus(mc, mc, true)?;
            c.extend(graph_corpus());
            c
        }
        "thm9" => {
            let mut c = hex_corpus(mc, THM9_TP_CELLS, true)?;
            c.extend(graph_corpus().into_iter().filter(|e| e.planar_bipartite));
            c
        }
        "thm20" => hex_corpus(mc, mc, true)?,
        s if SUITES.contains(&s) => hex_corpus(mc, mc, false)?,
        s => return Err(Error::UnknownSuite(s.to_string())),
    })
}

#[derive(Debug, Clone, Copy)]
struct PmData {
    f: usize,
    c: usize,
    af: usize,
    cp: usize,
}

/// Everything the suites need about one instance, computed once.
#[derive(Default)]
struct Analysis {
    pms: Option<Vec<Matching>>,
    per_pm: Option<Vec<PmData>>,
    scan: Option<HexagonScan>,
}

type Cached = Arc<Mutex<Analysis>>;

pub struct Verifier {
    opts: VerifyOptions,
    cache: Mutex<HashMap<String, Cached>>,
}

enum Outcome {
    Pass,
    Skip(&'static str),
    Fail(Value),
}

fn matching_json(m: &Matching) -> Value {
    json!(m.edge_ids())
}

impl Verifier {
    pub fn new(opts: VerifyOptions) -> Self {
        Verifier {
            opts,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn slot(&self, id: &str) -> Cached {
        self.cache
            .lock()
            .unwrap()
            .entry(id.to_string())
            .or_default()
            .clone()
    }

    fn pms(&self, e: &CorpusEntry) -> Result<Vec<Matching>> {
        let slot = self.slot(&e.id);
        let mut a = slot.lock().unwrap();
        if a.pms.is_none() {
            a.pms = Some(enumerate_perfect_matchings(e.instance.graph(), &inner(&self.opts.config))?);
        }
        Ok(a.pms.clone().unwrap())
    }

    fn per_pm(&self, e: &CorpusEntry) -> Result<(Vec<Matching>, Vec<PmData>)> {
        let pms = self.pms(e)?;
        let slot = self.slot(&e.id);
        let mut a = slot.lock().unwrap();
        if a.per_pm.is_none() {
            let g = e.instance.graph();
            let cfg = inner(&self.opts.config);
            let mut data = Vec::with_capacity(pms.len());
            for m in &pms {
                let cycles = enumerate_alternating_cycles(g, m, &cfg)?;
                data.push(PmData {
                    f: forcing_from_cycles(g, m, &cycles).value,
                    c: disjoint_from_cycles(m, g, &cycles).len(),
                    af: antiforcing_from_cycles(g, m, &cycles).value,
                    cp: compatible_from_cycles(g, m, &cycles).len(),
                });
            }
            a.per_pm = Some(data);
        }
        Ok((pms, a.per_pm.clone().unwrap()))
    }

    fn scan(&self, e: &CorpusEntry, h: &HexSystem) -> Result<HexagonScan> {
        let pms = self.pms(e)?;
        let slot = self.slot(&e.id);
        let mut a = slot.lock().unwrap();
        if a.scan.is_none() {
            a.scan = Some(scan_with(h, pms, &inner(&self.opts.config))?);
        }
        Ok(a.scan.clone().unwrap())
    }

    /// Runs one suite, or every suite for `"all"`.
    pub fn run(&self, suite: &str) -> Result<Vec<SuiteReport>> {
        if suite == "all" {
            return SUITES.iter().map(|s| self.run_one(s)).collect();
        }
        Ok(vec![self.run_one(suite)?])
    }

    fn run_one(&self, suite: &str) -> Result<SuiteReport> {
        let corpus = suite_corpus(suite, &self.opts)?;
        let outcomes = exec::try_map_ordered(self.opts.config.exec, &corpus, |e| {
            self.check(suite, e)
        })?;
        let mut report = SuiteReport {
            suite: suite.to_string(),
            passed: 0,
            failed: 0,
            skipped: 0,
            results: Vec::with_capacity(corpus.len()),
        };
        for (e, o) in corpus.iter().zip(outcomes) {
            let (status, note, counterexample) = match o {
                Outcome::Pass => (Status::Pass, None, None),
                Outcome::Skip(why) => (Status::Skipped, Some(why.to_string()), None),
                Outcome::Fail(v) => (
                    Status::Fail,
                    None,
                    Some(json!({ "instance": e.instance.to_text(), "detail": v })),
                ),
            };
            match status {
                Status::Pass => report.passed += 1,
                Status::Fail => report.failed += 1,
                Status::Skipped => report.skipped += 1,
            }
            report.results.push(InstanceResult {
                instance: e.id.clone(),
                status,
                note,
                counterexample,
            });
        }
        Ok(report)
    }

    /// Check of a single instance; also used by reports.
    pub fn check_entry(&self, suite: &str, e: &CorpusEntry) -> Result<(Status, Option<Value>)> {
        if !SUITES.contains(&suite) {
            return Err(Error::UnknownSuite(suite.to_string()));
        }
        Ok(match self.check(suite, e)? {
            Outcome::Pass => (Status::Pass, None),
            Outcome::Skip(_) => (Status::Skipped, None),
            Outcome::Fail(v) => (Status::Fail, Some(v)),
        })
    }

    fn check(&self, suite: &str, e: &CorpusEntry) -> Result<Outcome> {
        if self.pms(e)?.is_empty() {
            // Only all-kink systems are claimed to have matchings.
            return Ok(match e.instance.hex() {
                Some(h) if suite == "thm13" && is_all_kink_catahex(h) => {
                    Outcome::Fail(json!({ "reason": "all-kink catahex without a perfect matching" }))
                }
                _ => Outcome::Skip("no perfect matching"),
            });
        }
        let hex = e.instance.hex();
        match suite {
            "thm2" | "thm9" if !e.planar_bipartite => Ok(Outcome::Skip("not planar bipartite")),
            "thm2" | "thm5" | "lem8" | "thm9" => self.per_pm_check(suite, e),
            _ => match hex {
                None => Ok(Outcome::Skip("not a hexagonal system")),
                Some(h) => self.hex_check(suite, e, h),
            },
        }
    }

    fn per_pm_check(&self, suite: &str, e: &CorpusEntry) -> Result<Outcome> {
        let g = e.instance.graph();
        let (pms, data) = self.per_pm(e)?;
        let delta = g.max_degree();
        for (i, (m, d)) in pms.iter().zip(&data).enumerate() {
            let bad = match suite {
                "thm2" => d.f != d.c,
                "thm5" => !(d.f <= d.af && d.af <= delta.saturating_sub(1) * d.f),
                "lem8" => d.af < d.cp,
                _ => d.af != d.cp,
            };
            if bad {
                return Ok(Outcome::Fail(json!({
                    "matching_index": i, "matching": matching_json(m),
                    "f": d.f, "c": d.c, "af": d.af, "c_prime": d.cp, "max_degree": delta,
                })));
            }
            if suite == "thm9" {
                let cfg = inner(&self.opts.config);
                let dg = orient_and_contract(g, m)?;
                let fb = min_feedback_set(&dg, &cfg)?.len();
                let pack = max_arc_disjoint_cycles(&dg, &cfg)?.len();
                if fb != d.af || pack != d.cp {
                    return Ok(Outcome::Fail(json!({
                        "matching_index": i, "matching": matching_json(m),
                        "af": d.af, "c_prime": d.cp,
                        "min_feedback_set": fb, "max_arc_disjoint_cycles": pack,
                    })));
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn hex_check(&self, suite: &str, e: &CorpusEntry, h: &HexSystem) -> Result<Outcome> {
        let n = h.len();
        let fail = |v: Value| Ok(Outcome::Fail(v));
        match suite {
            "thm3" | "thm11" | "cor12" => {
                let (_, data) = self.per_pm(e)?;
                let scan = self.scan(e, h)?;
                let big_f = data.iter().map(|d| d.f).max().unwrap();
                let big_af = data.iter().map(|d| d.af).max().unwrap();
                let cl = scan.clar(h).value;
                let fries = scan.fries(h).fries.value;
                let ok = match suite {
                    "thm3" => big_f == cl,
                    "thm11" => big_af == fries,
                    _ => cl <= fries && fries <= 2 * cl,
                };
                if ok {
                    Ok(Outcome::Pass)
                } else {
                    fail(json!({ "F": big_f, "Af": big_af, "clar": cl, "fries": fries }))
                }
            }
            "thm13" => {
                let fries = self.scan(e, h)?.fries(h).fries.value;
                let kink = is_all_kink_catahex(h);
                if (fries == n) == kink {
                    Ok(Outcome::Pass)
                } else {
                    fail(json!({ "fries": fries, "cells": n, "all_kink": kink }))
                }
            }
            "thm14" | "thm15" => {
                if !is_all_kink_catahex(h) {
                    return Ok(Outcome::Skip("not an all-kink catahex"));
                }
                let (_, data) = self.per_pm(e)?;
                let dual = inner_dual(h).graph();
                if suite == "thm14" {
                    let big_f = data.iter().map(|d| d.f).max().unwrap();
                    let big_af = data.iter().map(|d| d.af).max().unwrap();
                    let nu = tree_matching_number(&dual)?;
                    let alpha = brute_independence(&dual);
                    let dual_pm = !enumerate_perfect_matchings(&dual, &self.opts.config)?.is_empty();
                    let ok = (big_af == 2 * big_f) == dual_pm
                        && nu + alpha == n
                        && dual_pm == (2 * nu == n);
                    if ok {
                        Ok(Outcome::Pass)
                    } else {
                        fail(json!({
                            "F": big_f, "Af": big_af, "dual_has_pm": dual_pm,
                            "dual_matching_number": nu, "dual_independence_number": alpha,
                        }))
                    }
                } else {
                    let small_f = data.iter().map(|d| d.f).min().unwrap();
                    let (i_dp, _) = tree_independent_domination(&dual)?;
                    let i_bf = brute_independent_domination(&dual);
                    let fries_min = self.scan(e, h)?.fries(h).fries_min.value;
                    if small_f == i_dp && i_dp == i_bf && i_dp == fries_min {
                        Ok(Outcome::Pass)
                    } else {
                        fail(json!({
                            "f": small_f, "i_dual_dp": i_dp, "i_dual_brute": i_bf,
                            "fries_min": fries_min,
                        }))
                    }
                }
            }
            "thm16" => {
                let (_, data) = self.per_pm(e)?;
                let af = data.iter().map(|d| d.af).min().unwrap();
                let tp = is_truncated_parallelogram(h);
                let edges = anti_forcing_edges(h.graph()).len();
                if (af == 1) == tp.is_some() && (af == 1) == (edges > 0) {
                    Ok(Outcome::Pass)
                } else {
                    fail(json!({ "af": af, "trunc_para": tp, "anti_forcing_edges": edges }))
                }
            }
            "thm20" => {
                let pms = self.pms(e)?;
                let fixed = fixedness_from(h.graph(), &pms)?;
                if !fixed.contains(&Fixedness::FixedSingle) {
                    return Ok(Outcome::Skip("no fixed single edge"));
                }
                let (_, data) = self.per_pm(e)?;
                let af = data.iter().map(|d| d.af).min().unwrap();
                let comps = components_of_free(h.graph(), &fixed);
                let shapes: Vec<Option<Vec<usize>>> = comps
                    .iter()
                    .map(|c| component_shape(h, &c.vertices, &c.edges))
                    .collect();
                let two_tp = shapes.len() == 2 && shapes.iter().all(Option::is_some);
                if (af == 2) == two_tp {
                    Ok(Outcome::Pass)
                } else {
                    fail(json!({ "af": af, "components": shapes }))
                }
            }
            "lem19" => {
                let pms = self.pms(e)?;
                for cut in parallel_cuts(h) {
                    let values: BTreeSet<usize> = pms
                        .iter()
                        .map(|m| cut.iter().filter(|&&x| m.contains(x)).count())
                        .collect();
                    if values.len() != 1 {
                        return fail(json!({ "cut": cut, "values": values }));
                    }
                }
                Ok(Outcome::Pass)
            }
            _ => Err(Error::UnknownSuite(suite.to_string())),
        }
    }
}

/// Truncated-parallelogram parameters of a normal component, when it is
/// exactly the union of the cells whose six edges it contains.
fn component_shape(h: &HexSystem, vertices: &[usize], edges: &[usize]) -> Option<Vec<usize>> {
    let cells: Vec<(i32, i32)> = (0..h.len())
        .filter(|&k| h.face_edges(k).iter().all(|e| edges.binary_search(e).is_ok()))
        .map(|k| h.cells()[k])
        .collect();
    let sub = HexSystem::new(&cells).ok()?;
    if sub.graph().n() != vertices.len() || sub.graph().m() != edges.len() {
        return None;
    }
    is_truncated_parallelogram(&sub)
}

fn brute_independence(t: &Graph) -> usize {
    let n = t.n();
    (0u64..1 << n)
        .filter(|&s| t.edges().iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn brute_independent_domination(t: &Graph) -> usize {
    let n = t.n();
    (0u64..1 << n)
        .filter(|&s| {
            let inside = |v: usize| s >> v & 1 == 1;
            t.edges().iter().all(|&(u, v)| !(inside(u) && inside(v)))
                && (0..n).all(|v| inside(v) || t.neighbors(v).iter().any(|&(w, _)| inside(w)))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}
