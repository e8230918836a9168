//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use antiforcing::antiforcing::{
    anti_forcing_edges, antiforcing_number, antiforcing_spectrum, max_compatible_alternating_set,
};
use antiforcing::forcing::forcing_spectrum;
use antiforcing::generators::{
    dodecahedron, enumerate_hex_systems, gen_truncated_parallelogram, glue_af2, glue_presets,
    truncated_parallelogram_params, TRIPHENYLENE,
};
use antiforcing::graph::{
    enumerate_alternating_cycles, enumerate_perfect_matchings, has_unique_perfect_matching,
    orient_and_contract,
};
use antiforcing::hexsys::{
    clar_number, fries_numbers, is_truncated_parallelogram, parallel_cuts, sachs_cut_check,
};
use antiforcing::verify::{suite_corpus, Verifier, VerifyOptions};
use antiforcing::{Config, Error, Graph, HexSystem, Limits};

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    check(t.elapsed() < limit, || format!("took {:?}, limit {limit:?}", t.elapsed()))
}

fn err(e: Error) -> String {
    e.to_string()
}

fn suites(max_cells: usize, names: &[&str]) -> Outcome {
    let v = Verifier::new(VerifyOptions {
        max_cells,
        ..VerifyOptions::default()
    });
    let mut summary = Vec::new();
    for s in names {
        let r = v.run(s).map_err(err)?.remove(0);
        if let Some(bad) = r.results.iter().find(|x| x.counterexample.is_some()) {
            return Err(format!(
                "{s} fails on {}: {}",
                bad.instance,
                bad.counterexample.as_ref().unwrap()
            ));
        }
        check(r.passed > 0, || format!("{s} checked nothing"))?;
        summary.push(format!("{s} {}/{}", r.passed, r.passed + r.skipped));
    }
    Ok(summary.join(", "))
}

fn c1_triphenylene() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let h = HexSystem::new(&TRIPHENYLENE).map_err(err)?;
    let f = forcing_spectrum(h.graph(), &cfg).map_err(err)?;
    let af = antiforcing_spectrum(h.graph(), &cfg).map_err(err)?;
    let cl = clar_number(&h, &cfg).map_err(err)?.value;
    let fries = fries_numbers(&h, &cfg).map_err(err)?.fries.value;
    let got = (f.value_set.clone(), af.value_set.clone(), f.min, af.min, f.max, af.max, cl, fries);
    let want = (vec![1, 3], vec![2, 3, 4], 1, 2, 3, 4, 3, 4);
    check(got == want, || format!("got {got:?}"))?;
    within(t, Duration::from_secs(5))?;
    Ok(format!("Spec_f {{1,3}}, Spec_af {{2,3,4}}, cl 3, Fries 4 in {:?}", t.elapsed()))
}

fn c2_dodecahedron() -> Outcome {
    let t = Instant::now();
    let cfg = Config::default();
    let g = dodecahedron();
    let f = forcing_spectrum(&g, &cfg).map_err(err)?;
    check(f.value_set == vec![3], || format!("Spec_f = {:?}", f.value_set))?;
    let pms = enumerate_perfect_matchings(&g, &cfg).map_err(err)?;
    let mut gap = None;
    let mut seen = std::collections::BTreeSet::new();
    for (i, m) in pms.iter().enumerate() {
        let cp = max_compatible_alternating_set(&g, m, &cfg).map_err(err)?.len();
        let af = antiforcing_number(&g, m, &cfg).map_err(err)?.value;
        check(af >= cp, || format!("af < c' at matching {i}"))?;
        seen.insert((cp, af));
        if gap.is_none() && cp == 3 && af >= 4 {
            gap = Some((i, af));
        }
    }
    let (i, af) = gap.ok_or_else(|| {
        format!("no matching with c' = 3 and af >= 4; (c', af) pairs seen: {seen:?}")
    })?;
    within(t, Duration::from_secs(60))?;
    Ok(format!(
        "Spec_f {{3}} over {} matchings; matching {i} has c' 3, af {af}; {:?}",
        pms.len(),
        t.elapsed()
    ))
}

fn c3_sandwich() -> Outcome {
    suites(6, &["thm5"])
}

fn c4_minimax() -> Outcome {
    let t = Instant::now();
    let out = suites(8, &["thm9"])?;
    within(t, Duration::from_secs(600))?;
    Ok(format!("{out} in {:?}", t.elapsed()))
}

fn c5_clar_fries() -> Outcome {
    suites(6, &["thm3", "thm11", "cor12"])
}

fn c6_all_kink() -> Outcome {
    suites(6, &["thm13"])
}

fn c7_kink_duals() -> Outcome {
    suites(6, &["thm14", "thm15"])
}

fn c8_truncated() -> Outcome {
    let out = suites(6, &["thm16"])?;
    let mut tally = [0usize; 4];
    for rows in truncated_parallelogram_params(12) {
        let h = gen_truncated_parallelogram(&rows).map_err(err)?;
        let k = anti_forcing_edges(h.graph()).len();
        let chain = rows.len() == 1 || rows.iter().all(|&r| r == 1);
        let (kind, want) = if rows == [1] {
            (0, 6)
        } else if chain {
            (1, 4)
        } else if rows.iter().all(|&r| r == rows[0]) {
            (2, 2)
        } else {
            (3, 1)
        };
        check(k == want, || format!("H{rows:?} has {k} anti-forcing edges, want {want}"))?;
        tally[kind] += 1;
    }
    let h = gen_truncated_parallelogram(&[5, 5, 3, 2]).map_err(err)?;
    check(anti_forcing_edges(h.graph()).len() == 1, || "H(5,5,3,2)".into())?;
    Ok(format!(
        "{out}; edge counts ok on {} chains, {} parallelograms, {} proper shapes",
        tally[1], tally[2], tally[3]
    ))
}

fn c9_glue_and_cuts() -> Outcome {
    let cfg = Config::default();
    for (i, spec) in glue_presets().iter().enumerate() {
        let h = glue_af2(spec).map_err(err)?;
        let af = antiforcing_spectrum(h.graph(), &cfg).map_err(err)?.min;
        check(af == 2, || format!("preset {} has af {af}", i + 1))?;
        check(is_truncated_parallelogram(&h).is_none(), || format!("preset {}", i + 1))?;
        for cut in parallel_cuts(&h) {
            let inv = sachs_cut_check(&h, &cut, &cfg).map_err(err)?;
            check(inv.constant, || format!("preset {} cut {cut:?}", i + 1))?;
        }
    }
    let out = suites(6, &["lem19"])?;
    Ok(format!("4 presets with af 2; {out}"))
}

/// Polyhex graphs with `n <= 6`, then single-edge deletions of the
/// systems with `n <= 3`.
fn unique_pm_corpus() -> Result<Vec<Graph>, Error> {
    let mut graphs = Vec::new();
    let mut small = Vec::new();
    for n in 1..=6 {
        for h in enumerate_hex_systems(n)? {
            if n <= 3 {
                small.push(h.graph().clone());
            }
            graphs.push(h.graph().clone());
        }
    }
    for g in small {
        for e in 0..g.m() {
            graphs.push(g.without_edges(&[e]).0);
        }
    }
    Ok(graphs)
}

fn c10_oracles() -> Outcome {
    let capped = Config::with_limits(Limits {
        max_matchings: 2,
        ..Limits::default()
    });
    let graphs = unique_pm_corpus().map_err(err)?;
    check(graphs.len() >= 1000, || format!("only {} graphs", graphs.len()))?;
    let mut unique = 0;
    for (i, g) in graphs.iter().enumerate() {
        let (fast, m) = has_unique_perfect_matching(g);
        let slow = match enumerate_perfect_matchings(g, &capped) {
            Ok(pms) if pms.len() == 1 => Some(pms[0].clone()),
            Ok(_) | Err(Error::LimitExceeded { .. }) => None,
            Err(e) => return Err(err(e)),
        };
        check(fast == slow.is_some() && m == slow, || format!("graph {i} disagrees"))?;
        unique += usize::from(fast);
    }
    let cfg = Config::default();
    let opts = VerifyOptions::default();
    let mut instances = 0;
    let mut matchings = 0;
    for e in suite_corpus("thm9", &opts).map_err(err)? {
        let g = e.instance.graph();
        if !g.is_bipartite() {
            continue;
        }
        instances += 1;
        for m in enumerate_perfect_matchings(g, &cfg).map_err(err)? {
            let alt = enumerate_alternating_cycles(g, &m, &cfg).map_err(err)?.len();
            let d = orient_and_contract(g, &m).map_err(err)?;
            let di = d.directed_cycles(cfg.limits.max_cycles).map_err(err)?.len();
            check(alt == di, || format!("{}: {alt} cycles vs {di} dicycles", e.id))?;
            matchings += 1;
        }
    }
    Ok(format!(
        "unique-PM check agrees on {} graphs ({unique} unique); cycle counts agree on {instances} instances, {matchings} matchings",
        graphs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("triphenylene goldens", c1_triphenylene),
        ("dodecahedron spectrum and compatible-set gap", c2_dodecahedron),
        ("sandwich f <= af <= (D-1) f on the corpus", c3_sandwich),
        ("minimax af = c' up to 8 cells and truncated parallelograms up to 12", c4_minimax),
        ("F = cl, Af = Fries, cl <= Fries <= 2 cl", c5_clar_fries),
        ("Fries = n iff all-kink catahex", c6_all_kink),
        ("all-kink duals: Af = 2F iff dual PM, f = i(H*) = fries", c7_kink_duals),
        ("af = 1 iff truncated parallelogram; anti-forcing edge counts", c8_truncated),
        ("glue presets af = 2; cut invariance", c9_glue_and_cuts),
        ("unique-PM and contraction oracles", c10_oracles),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
