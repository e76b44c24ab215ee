use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use dpo_hypergraphs::chordal::is_valid_cycle_witness;
use dpo_hypergraphs::isomorphism::is_isomorphism;
use dpo_hypergraphs::random::{random_dpo, random_hypergraph, random_interval_hypergraph, seeded};
use dpo_hypergraphs::{
    classify_pair, competition_graph, competition_hypergraph, down_right, in_neighborhood, is_chordal,
    is_interval, is_interval_graph, isomorphism, strictly_dominated, Graph, Hypergraph, PairClass, Point2,
    Rational,
};

fn point(id: &str, (xn, xd, yn, yd): (i64, i64, i64, i64)) -> Point2 {
    Point2::new(id, Rational::new(xn, xd).unwrap(), Rational::new(yn, yd).unwrap())
}

fn coords() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    (-6i64..6, 1i64..4, -6i64..6, 1i64..4)
}

/// Every cyclic vertex sequence of length at least four, checked directly
/// against the definition. Distinct supporting hyperedges are found by
/// trying every assignment.
fn naive_chordal(h: &Hypergraph) -> bool {
    let n = h.vertex_count();
    let edges = h.indexed_edges();
    let share = |u: usize, v: usize| edges.iter().any(|e| e.contains(&u) && e.contains(&v));

    fn assign(cycle: &[usize], i: usize, edges: &[Vec<usize>], used: &mut Vec<bool>) -> bool {
        if i == cycle.len() {
            return true;
        }
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        for (e, members) in edges.iter().enumerate() {
            if !used[e] && members.contains(&u) && members.contains(&v) {
                used[e] = true;
                if assign(cycle, i + 1, edges, used) {
                    return true;
                }
                used[e] = false;
            }
        }
        false
    }

    fn sequences(n: usize, seq: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if seq.len() >= 4 && visit(seq) {
            return true;
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                if sequences(n, seq, visit) {
                    return true;
                }
                seq.pop();
            }
        }
        false
    }

    let mut chordless_cycle = |cycle: &[usize]| {
        let k = cycle.len();
        let chord = (0..k).any(|i| {
            ((i + 2)..k).any(|j| !(i == 0 && j == k - 1) && share(cycle[i], cycle[j]))
        });
        !chord && assign(cycle, 0, &edges, &mut vec![false; edges.len()])
    };
    !sequences(n, &mut Vec::new(), &mut chordless_cycle)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// A graph is an interval graph iff some vertex order has no `u < v < w`
/// with `uw` an edge and `uv` not.
fn naive_interval_graph(g: &Graph) -> bool {
    let n = g.vertices().len();
    let adj = g.adjacency();
    let has = |u: usize, v: usize| adj[u].contains(&v);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|a| {
            ((a + 1)..n).all(|b| ((b + 1)..n).all(|c| !has(perm[a], perm[c]) || has(perm[a], perm[b])))
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn random_graph(seed: u64, max_vertices: usize) -> Graph {
    let h = random_hypergraph(&mut seeded(seed), max_vertices, 12);
    let mut pairs = Vec::new();
    for e in h.edges() {
        pairs.push((e[0].clone(), e[1].clone()));
    }
    Graph::new(h.vertices().to_vec(), pairs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trichotomy(a in coords(), b in coords()) {
        let p = point("p", a);
        let q = point("q", b);
        prop_assume!(!p.same_position(&q));
        let holds = [
            strictly_dominated(&p, &q),
            strictly_dominated(&q, &p),
            down_right(&p, &q),
            down_right(&q, &p),
        ];
        prop_assert_eq!(holds.iter().filter(|&&h| h).count(), 1);
        let expected = match holds.iter().position(|&h| h).unwrap() {
            0 => PairClass::PrecForward,
            1 => PairClass::PrecBackward,
            2 => PairClass::DownRightForward,
            _ => PairClass::DownRightBackward,
        };
        prop_assert_eq!(classify_pair(&p, &q).unwrap(), expected);
    }

    #[test]
    fn down_right_is_a_strict_order(a in coords(), b in coords(), c in coords()) {
        let (p, q, r) = (point("p", a), point("q", b), point("r", c));
        prop_assert!(!down_right(&p, &p));
        prop_assert!(!(down_right(&p, &q) && down_right(&q, &p)));
        if down_right(&p, &q) && down_right(&q, &r) {
            prop_assert!(down_right(&p, &r));
        }
    }

    #[test]
    fn rational_order_matches_cross_multiplication(
        a in -1000i64..1000, b in (1i64..500).prop_flat_map(|d| prop_oneof![Just(d), Just(-d)]),
        c in -1000i64..1000, d in (1i64..500).prop_flat_map(|d| prop_oneof![Just(d), Just(-d)]),
    ) {
        let lhs = Rational::new(a, b).unwrap();
        let rhs = Rational::new(c, d).unwrap();
        // a/b ? c/d  <=>  a·d·(b·d) ? c·b·(b·d), the last factor fixing the sign
        let bd = BigInt::from(b) * BigInt::from(d);
        let left = BigInt::from(a) * BigInt::from(d) * &bd;
        let right = BigInt::from(c) * BigInt::from(b) * &bd;
        prop_assert_eq!(lhs.cmp(&rhs), left.cmp(&right));
        prop_assert_eq!(lhs.to_string().parse::<Rational>().unwrap(), lhs);
    }

    #[test]
    fn trace_identity_and_composition(seed in any::<u64>(), keep_a in any::<u16>(), keep_b in any::<u16>()) {
        let h = random_hypergraph(&mut seeded(seed), 8, 8);
        prop_assert_eq!(&h.trace(h.vertices()).unwrap(), &h);
        let a: Vec<String> = h.vertices().iter().enumerate()
            .filter(|(i, _)| keep_a & (1 << i) != 0).map(|(_, v)| v.clone()).collect();
        let b: Vec<String> = a.iter().enumerate()
            .filter(|(i, _)| keep_b & (1 << i) != 0).map(|(_, v)| v.clone()).collect();
        let via_a = h.trace(&a).unwrap().trace(&b).unwrap();
        prop_assert_eq!(via_a, h.trace(&b).unwrap());
    }

    #[test]
    fn isomorphism_is_symmetric(seed in any::<u64>(), shift in 0usize..8) {
        let h = random_hypergraph(&mut seeded(seed), 8, 7);
        prop_assert!(isomorphism(&h, &h).is_some());
        let n = h.vertex_count();
        let relabel: BTreeMap<String, String> = h.vertices().iter().enumerate()
            .map(|(i, v)| (v.clone(), format!("y{}", (i + shift) % n)))
            .collect();
        let image = Hypergraph::new(
            h.vertices().iter().rev().map(|v| relabel[v].clone()),
            h.edges().iter().map(|e| e.iter().map(|v| relabel[v].clone()).collect::<Vec<_>>()),
        ).unwrap();
        let f = isomorphism(&h, &image).expect("relabelled copy");
        prop_assert!(is_isomorphism(&h, &image, &f));
        let inverse: BTreeMap<String, String> = f.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        prop_assert!(is_isomorphism(&image, &h, &inverse));
    }

    #[test]
    fn two_section_of_a_graph_is_itself(seed in any::<u64>()) {
        let g = random_graph(seed, 8);
        let h = g.to_hypergraph();
        prop_assert!(h.is_uniform(2));
        prop_assert_eq!(h.two_section(), g);
    }

    #[test]
    fn chordality_matches_cycle_enumeration(seed in any::<u64>()) {
        let h = random_hypergraph(&mut seeded(seed), 7, 6);
        let report = is_chordal(&h).unwrap();
        prop_assert_eq!(report.chordal, naive_chordal(&h));
        if let Some(w) = &report.witness {
            prop_assert!(is_valid_cycle_witness(&h, w));
        }
    }

    #[test]
    fn interval_graph_matches_vertex_orders(seed in any::<u64>()) {
        let g = random_graph(seed, 7);
        prop_assert_eq!(is_interval_graph(&g).unwrap(), naive_interval_graph(&g));
    }

    #[test]
    fn interval_is_hereditary(seed in any::<u64>()) {
        let h = random_interval_hypergraph(&mut seeded(seed), 8, 7);
        prop_assert!(is_interval(&h).interval);
        for v in h.vertices() {
            let rest: Vec<&String> = h.vertices().iter().filter(|&u| u != v).collect();
            prop_assert!(is_interval(&h.trace(&rest).unwrap()).interval);
        }
    }

    #[test]
    fn competition_invariants(seed in any::<u64>()) {
        let dpo = random_dpo(&mut seeded(seed), 10);
        let result = competition_hypergraph(&dpo);
        for (edge, by) in &result.witnesses {
            for w in by {
                let wp = dpo.point(w).unwrap();
                prop_assert_eq!(&in_neighborhood(&dpo, w).unwrap().into_iter().collect::<Vec<_>>(), edge);
                for m in edge {
                    prop_assert!(strictly_dominated(wp, dpo.point(m).unwrap()));
                }
            }
        }
        for x in dpo.points() {
            for y in dpo.points() {
                if strictly_dominated(x, y) {
                    for e in result.hypergraph.edges() {
                        prop_assert!(!e.contains(&x.id) || e.contains(&y.id));
                    }
                }
            }
        }
        let g = competition_graph(&dpo);
        let ids = dpo.ids();
        for (i, u) in ids.iter().enumerate() {
            for v in &ids[i + 1..] {
                let together = ids.iter().any(|w| {
                    let n = in_neighborhood(&dpo, w).unwrap();
                    n.contains(u) && n.contains(v)
                });
                prop_assert_eq!(g.has_edge(u, v), together);
            }
        }
    }
}

#[test]
fn equal_points_are_rejected() {
    let p = Point2::int("p", 1, 1);
    assert!(classify_pair(&p, &Point2::int("q", 1, 1)).is_err());
    assert_eq!(Rational::new(2, 6).unwrap().cmp(&Rational::new(1, 3).unwrap()), Ordering::Equal);
}
