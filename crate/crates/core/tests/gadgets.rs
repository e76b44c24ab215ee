use dpo_hypergraphs::patterns::gadget_witness_ids;
use dpo_hypergraphs::{
    build_dpo, competition_hypergraph, gadget_dpo, generate_pattern, isomorphism, GadgetKind, PatternKind,
    WitnessSearch,
};

fn first_witness(kind: GadgetKind, n: usize) -> Vec<String> {
    let dpo = build_dpo(gadget_dpo(kind, n).unwrap()).unwrap();
    let h = competition_hypergraph(&dpo).hypergraph;
    let w = WitnessSearch::kinds(&[kind.pattern(n)]).run(&h).unwrap().expect("pattern present");
    let mut subset = w.subset;
    subset.sort();
    subset
}

#[test]
fn m1_and_f1_sit_on_the_staircase_and_the_two_thirds_point() {
    // the search scans every 4-subset of the 7 (resp. 8) gadget points
    assert_eq!(first_witness(GadgetKind::M, 1), ["a0", "a1", "a2", "c"]);
    assert_eq!(first_witness(GadgetKind::F, 1), ["a0", "a1", "a2", "c"]);
    assert_eq!(gadget_witness_ids(1).unwrap(), ["a0", "a1", "a2", "c"]);
}

#[test]
fn d1_competition_hyperedges() {
    let dpo = build_dpo(gadget_dpo(GadgetKind::M, 1).unwrap()).unwrap();
    let result = competition_hypergraph(&dpo);
    assert_eq!(result.hypergraph.edges(), [vec!["a0", "a1"], vec!["a1", "a2"], vec!["a1", "c"]]);
    let by = &result.witnesses[&vec!["a1".to_string(), "c".to_string()]];
    assert!(by.contains("o"));
}

#[test]
fn staircase_subset_gives_the_pattern_for_every_n() {
    for n in 1..=6 {
        for kind in [GadgetKind::M, GadgetKind::F] {
            let dpo = build_dpo(gadget_dpo(kind, n).unwrap()).unwrap();
            let h = competition_hypergraph(&dpo).hypergraph;
            let trace = h.trace(&gadget_witness_ids(n).unwrap()).unwrap();
            assert!(isomorphism(&trace, &generate_pattern(kind.pattern(n)).unwrap()).is_some(), "{kind:?} {n}");
        }
    }
}

#[test]
fn gadget_sizes() {
    for n in 1..=6 {
        let extra_c = usize::from(n == 1);
        assert_eq!(gadget_dpo(GadgetKind::M, n).unwrap().len(), 2 * n + 4 + extra_c);
        assert_eq!(gadget_dpo(GadgetKind::F, n).unwrap().len(), 2 * n + 5 + extra_c);
    }
    assert_eq!(PatternKind::f(6).vertex_count(), 9);
}
