//! Small instances whose values follow from the definitions or from direct
//! counting.

use antiforcing::antiforcing::{
    anti_forcing_edges, antiforcing_number, antiforcing_spectrum, is_antiforcing_set,
    leaves_unique, max_compatible_alternating_set, min_global_antiforcing_set,
};
use antiforcing::forcing::{
    forces_uniquely, forcing_number, forcing_spectrum, is_forcing_set,
    max_disjoint_alternating_cycles,
};
use antiforcing::generators::{gen_named, gen_truncated_parallelogram, Named, PERYLENE, TRIPHENYLENE};
use antiforcing::graph::{
    edge_fixedness, enumerate_alternating_cycles, enumerate_perfect_matchings,
    has_unique_perfect_matching, normal_components, orient_and_contract, Fixedness,
};
use antiforcing::hexsys::{
    clar_number, fries_numbers, inner_dual, is_all_kink_catahex, is_truncated_parallelogram,
    parallel_cuts, sachs_cut_check, tree_independent_domination,
};
use antiforcing::{Config, Error, Graph, HexSystem, Matching};

fn c6() -> (Graph, Matching) {
    let g = Graph::cycle(6).unwrap();
    let m = Matching::new(&g, vec![0, 2, 4]).unwrap();
    (g, m)
}

#[test]
fn hexagon_values() {
    let (g, m) = c6();
    let cfg = Config::default();
    assert_eq!(enumerate_perfect_matchings(&g, &cfg).unwrap().len(), 2);
    assert_eq!(enumerate_alternating_cycles(&g, &m, &cfg).unwrap().len(), 1);
    assert_eq!(forcing_number(&g, &m, &cfg).unwrap().value, 1);
    assert_eq!(antiforcing_number(&g, &m, &cfg).unwrap().value, 1);
    assert_eq!(max_disjoint_alternating_cycles(&g, &m, &cfg).unwrap().len(), 1);
    assert_eq!(max_compatible_alternating_set(&g, &m, &cfg).unwrap().len(), 1);
    assert_eq!(forcing_spectrum(&g, &cfg).unwrap().value_set, vec![1]);
    assert_eq!(antiforcing_spectrum(&g, &cfg).unwrap().value_set, vec![1]);
    assert!(is_forcing_set(&g, &m, &[2], &cfg).unwrap());
    assert!(!is_forcing_set(&g, &m, &[], &cfg).unwrap());
    for e in [1, 3, 5] {
        assert!(is_antiforcing_set(&g, &m, &[e], &cfg).unwrap());
        assert!(leaves_unique(&g, &m, &[e]).unwrap());
    }
    assert_eq!(is_forcing_set(&g, &m, &[1], &cfg), Err(Error::NotSubsetOfM(1)));
    assert_eq!(anti_forcing_edges(&g).len(), 6);
    assert!(edge_fixedness(&g, &cfg).unwrap().iter().all(|f| *f == Fixedness::Free));
}

#[test]
fn single_edge() {
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let (unique, m) = has_unique_perfect_matching(&k2);
    assert!(unique);
    assert_eq!(m.unwrap().edge_ids(), &[0]);
    let cfg = Config::default();
    assert_eq!(edge_fixedness(&k2, &cfg).unwrap(), vec![Fixedness::FixedDouble]);
    assert!(normal_components(&k2, &cfg).unwrap().is_empty());
    assert!(!has_unique_perfect_matching(&c6().0).0);
}

#[test]
fn small_contractions() {
    let (g, m) = c6();
    let d = orient_and_contract(&g, &m).unwrap();
    assert_eq!((d.node_count(), d.arcs.len()), (3, 3));
    assert_eq!(d.directed_cycles(10).unwrap().len(), 1);
    let c4 = Graph::cycle(4).unwrap();
    let m4 = Matching::new(&c4, vec![0, 2]).unwrap();
    let d = orient_and_contract(&c4, &m4).unwrap();
    assert_eq!((d.node_count(), d.arcs.len()), (2, 2));
    let cycles = d.directed_cycles(10).unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].arcs.len(), 2);
}

#[test]
fn triphenylene_structure() {
    let h = HexSystem::new(&TRIPHENYLENE).unwrap();
    assert_eq!((h.graph().n(), h.graph().m()), (18, 21));
    assert!(h.graph().is_bipartite());
    let d = inner_dual(&h);
    assert!(d.is_tree);
    let mut degrees: Vec<usize> = (0..4).map(|v| d.graph().degree(v)).collect();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 1, 3]);
    assert!(is_all_kink_catahex(&h));
    assert_eq!(is_truncated_parallelogram(&h), None);
    let (i, _) = tree_independent_domination(&d.graph()).unwrap();
    assert_eq!(i, 1);
    assert!(anti_forcing_edges(h.graph()).is_empty());
    let cfg = Config::default();
    for cut in parallel_cuts(&h) {
        assert!(sachs_cut_check(&h, &cut, &cfg).unwrap().constant);
    }
    // The smallest global anti-forcing set agrees with the spectrum minimum.
    let global = min_global_antiforcing_set(h.graph(), 3).unwrap();
    assert_eq!(global.value, antiforcing_spectrum(h.graph(), &cfg).unwrap().min);
}

#[test]
fn triphenylene_witnesses() {
    let h = HexSystem::new(&TRIPHENYLENE).unwrap();
    let g = h.graph();
    let cfg = Config::default();
    for m in enumerate_perfect_matchings(g, &cfg).unwrap() {
        let f = forcing_number(g, &m, &cfg).unwrap();
        assert!(is_forcing_set(g, &m, &f.edges, &cfg).unwrap());
        assert!(forces_uniquely(g, &m, &f.edges).unwrap());
        let af = antiforcing_number(g, &m, &cfg).unwrap();
        assert!(leaves_unique(g, &m, &af.edges).unwrap());
        assert!(max_disjoint_alternating_cycles(g, &m, &cfg).unwrap().is_valid(g, &m));
        assert!(max_compatible_alternating_set(g, &m, &cfg).unwrap().is_valid(g, &m));
    }
    assert_eq!(clar_number(&h, &cfg).unwrap().value, 3);
    let fries = fries_numbers(&h, &cfg).unwrap();
    assert_eq!(fries.fries.value, 4);
}

#[test]
fn shapes_and_duals() {
    let single = HexSystem::new(&[(0, 0)]).unwrap();
    assert_eq!(is_truncated_parallelogram(&single), Some(vec![1]));
    let d = inner_dual(&single);
    assert_eq!((d.cells.len(), d.edges.len()), (1, 0));
    let chain = gen_truncated_parallelogram(&[3]).unwrap();
    assert!(!is_all_kink_catahex(&chain));
    let para = gen_truncated_parallelogram(&[2, 2]).unwrap();
    assert!(!inner_dual(&para).is_tree);
    assert!(!is_all_kink_catahex(&para));
    let cfg = Config::default();
    let cl = clar_number(&para, &cfg).unwrap().value;
    assert_eq!(cl, forcing_spectrum(para.graph(), &cfg).unwrap().max);
    for cut in parallel_cuts(&chain) {
        assert!(sachs_cut_check(&chain, &cut, &cfg).unwrap().constant);
    }
}

#[test]
fn anti_forcing_edge_counts() {
    let count = |rows: &[usize]| anti_forcing_edges(gen_truncated_parallelogram(rows).unwrap().graph()).len();
    assert_eq!(count(&[1]), 6);
    for r in 2..=5 {
        assert_eq!(count(&[r]), 4, "chain {r}");
    }
    for (r, k) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
        assert_eq!(count(&vec![r; k]), 2, "parallelogram {r}x{k}");
    }
    assert_eq!(count(&[5, 5, 3, 2]), 1);
}

#[test]
fn truncated_parallelogram_minus_its_edge() {
    let h = gen_truncated_parallelogram(&[5, 5, 3, 2]).unwrap();
    let edges = anti_forcing_edges(h.graph());
    let (rest, _) = h.graph().without_edges(&edges);
    assert!(has_unique_perfect_matching(&rest).0);
    let big = gen_truncated_parallelogram(&[5, 5, 5, 5]).unwrap();
    assert_eq!(antiforcing_spectrum(big.graph(), &Config::default()).unwrap().min, 1);
}

#[test]
fn perylene_has_two_normal_components() {
    let h = HexSystem::new(&PERYLENE).unwrap();
    let cfg = Config::default();
    let fixed = edge_fixedness(h.graph(), &cfg).unwrap();
    assert!(fixed.contains(&Fixedness::FixedSingle));
    let comps = normal_components(h.graph(), &cfg).unwrap();
    assert_eq!(comps.len(), 2);
    for c in &comps {
        // Each component is a naphthalene unit.
        assert_eq!((c.graph.n(), c.graph.m()), (10, 11));
    }
    assert_eq!(antiforcing_spectrum(h.graph(), &cfg).unwrap().min, 2);
}

#[test]
fn named_instances() {
    let Named::Graph(d) = gen_named("dodecahedron").unwrap() else { panic!() };
    assert!(d.colors().is_none());
    let Named::Hex(t) = gen_named("triphenylene").unwrap() else { panic!() };
    assert_eq!(t.len(), 4);
    assert_eq!(gen_named("c4").unwrap().graph().m(), 4);
}
