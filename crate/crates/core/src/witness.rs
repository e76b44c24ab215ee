//! Exhaustive search for forbidden patterns inside a hypergraph.
//!
//! Vertex subsets are visited by increasing size and, within a size, in
//! lexicographic order of vertex positions, so the first witness reported is
//! deterministic. For each subset the trace is compared against every
//! requested pattern with that many vertices, first by edge-size signature and
//! then by isomorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::isomorphism::{edge_embedding_indexed, is_isomorphism, isomorphism_indexed};
use crate::patterns::{generate_pattern, PatternFamily, PatternKind};

pub const DEFAULT_WITNESS_LIMIT: usize = 20;

/// How a pattern has to sit inside the trace on a subset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Containment {
    /// The trace must be isomorphic to the pattern.
    #[default]
    Trace,
    /// The pattern only needs to map onto some of the trace's hyperedges.
    Partial,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: PatternKind,
    /// Host vertices, in host order.
    pub subset: Vec<String>,
    /// Pattern vertex to host vertex.
    pub map: BTreeMap<String, String>,
}

/// Which patterns to look for.
#[derive(Clone, Debug)]
enum Targets {
    Families(Vec<PatternFamily>),
    Kinds(Vec<PatternKind>),
}

#[derive(Clone, Debug)]
pub struct WitnessSearch {
    targets: Targets,
    max_subset: Option<usize>,
    vertex_limit: usize,
    containment: Containment,
}

struct Prepared {
    kind: PatternKind,
    pattern: Hypergraph,
    edges: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

impl WitnessSearch {
    /// Looks for every member of the given families.
    pub fn families(families: &[PatternFamily]) -> Self {
        let mut families = families.to_vec();
        families.sort();
        families.dedup();
        WitnessSearch {
            targets: Targets::Families(families),
            max_subset: None,
            vertex_limit: DEFAULT_WITNESS_LIMIT,
            containment: Containment::Trace,
        }
    }

    /// Looks only for the listed patterns.
    pub fn kinds(kinds: &[PatternKind]) -> Self {
        WitnessSearch {
            targets: Targets::Kinds(kinds.to_vec()),
            ..WitnessSearch::families(&[])
        }
    }

    pub fn max_subset(mut self, max_subset: usize) -> Self {
        self.max_subset = Some(max_subset);
        self
    }

    pub fn vertex_limit(mut self, limit: usize) -> Self {
        self.vertex_limit = limit;
        self
    }

    pub fn containment(mut self, containment: Containment) -> Self {
        self.containment = containment;
        self
    }

    fn patterns_with(&self, vertices: usize) -> Vec<PatternKind> {
        match &self.targets {
            Targets::Families(fams) => fams
                .iter()
                .filter_map(|f| f.member_with_vertices(vertices))
                .collect(),
            Targets::Kinds(kinds) => kinds
                .iter()
                .copied()
                .filter(|k| k.vertex_count() == vertices)
                .collect(),
        }
    }

    pub fn run(&self, h: &Hypergraph) -> Result<Option<PatternWitness>> {
        let n = h.vertex_count();
        if n > self.vertex_limit || n > 64 {
            return Err(Error::TooLarge {
                what: "witness search",
                size: n,
                limit: self.vertex_limit.min(64),
            });
        }
        if let Targets::Kinds(kinds) = &self.targets {
            for k in kinds {
                k.validate()?;
            }
        }
        let masks: Vec<u64> = h
            .indexed_edges()
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let top = self.max_subset.unwrap_or(n).min(n);
        let mut found = None;
        for size in 3..=top {
            let prepared: Vec<Prepared> = self
                .patterns_with(size)
                .into_iter()
                .map(|kind| {
                    let pattern = generate_pattern(kind)?;
                    let edges = pattern.indexed_edges();
                    let mut sizes: Vec<usize> = edges.iter().map(Vec::len).collect();
                    sizes.sort_unstable();
                    Ok(Prepared {
                        kind,
                        pattern,
                        edges,
                        sizes,
                    })
                })
                .collect::<Result<_>>()?;
            if prepared.is_empty() {
                continue;
            }
            combinations(n, size, |subset| {
                found = self.match_subset(h, &masks, subset, &prepared);
                found.is_some()
            });
            if found.is_some() {
                break;
            }
        }
        Ok(found)
    }

    fn match_subset(
        &self,
        h: &Hypergraph,
        masks: &[u64],
        subset: &[usize],
        prepared: &[Prepared],
    ) -> Option<PatternWitness> {
        let chosen = subset.iter().fold(0u64, |m, &v| m | (1 << v));
        let mut cut: Vec<u64> = masks
            .iter()
            .map(|&e| e & chosen)
            .filter(|c| c.count_ones() >= 2)
            .collect();
        cut.sort_unstable();
        cut.dedup();
        let local: Vec<Vec<usize>> = cut
            .iter()
            .map(|&c| {
                subset
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| c & (1 << v) != 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut sizes: Vec<usize> = local.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        for p in prepared {
            let map = match self.containment {
                Containment::Trace => {
                    if p.sizes != sizes {
                        continue;
                    }
                    isomorphism_indexed(subset.len(), &p.edges, subset.len(), &local)
                }
                Containment::Partial => {
                    if p.edges.len() > local.len() {
                        continue;
                    }
                    edge_embedding_indexed(subset.len(), &p.edges, subset.len(), &local)
                }
            };
            if let Some(map) = map {
                let label = |i: usize| h.vertices()[subset[i]].clone();
                return Some(PatternWitness {
                    pattern: p.kind,
                    subset: subset.iter().map(|&v| h.vertices()[v].clone()).collect(),
                    map: map
                        .iter()
                        .enumerate()
                        .map(|(pv, &hv)| (p.pattern.vertices()[pv].clone(), label(hv)))
                        .collect(),
                });
            }
        }
        None
    }
}

/// Exhaustive trace search for members of `families` on subsets of at most
/// `max_subset` vertices.
pub fn find_forbidden_witness(
    h: &Hypergraph,
    families: &[PatternFamily],
    max_subset: usize,
) -> Result<Option<PatternWitness>> {
    WitnessSearch::families(families).max_subset(max_subset).run(h)
}

/// Checks a witness: the trace on its subset must be the pattern, carried by
/// its map (or, for partial containment, contain the pattern's image).
pub fn is_valid_witness(h: &Hypergraph, witness: &PatternWitness, containment: Containment) -> bool {
    let Ok(pattern) = generate_pattern(witness.pattern) else {
        return false;
    };
    let Ok(trace) = h.trace(&witness.subset) else {
        return false;
    };
    match containment {
        Containment::Trace => is_isomorphism(&pattern, &trace, &witness.map),
        Containment::Partial => {
            let mut images: Vec<&String> = witness.map.values().collect();
            images.sort();
            images.dedup();
            images.len() == trace.vertex_count()
                && witness.map.len() == pattern.vertex_count()
                && pattern.edges().iter().all(|e| {
                    let image: Vec<&String> = e.iter().filter_map(|v| witness.map.get(v)).collect();
                    image.len() == e.len() && trace.has_edge(&image)
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::{build_dpo, competition_hypergraph};
    use crate::patterns::{gadget_dpo, GadgetKind};

    #[test]
    fn m2_inside_gadget() {
        let d = build_dpo(gadget_dpo(GadgetKind::M, 2).unwrap()).unwrap();
        let ch = competition_hypergraph(&d).hypergraph;
        let w = find_forbidden_witness(&ch, &[PatternFamily::M], ch.vertex_count())
            .unwrap()
            .expect("M_2 witness");
        assert_eq!(w.pattern, PatternKind::m(2));
        assert!(is_valid_witness(&ch, &w, Containment::Trace));
        let mut subset = w.subset.clone();
        subset.sort();
        assert_eq!(subset, ["a0", "a1", "a2", "a3", "b1"]);
    }

    #[test]
    fn path_has_no_witness() {
        let p4 = Hypergraph::new(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]]).unwrap();
        let w = find_forbidden_witness(&p4, &PatternFamily::ALL, 4).unwrap();
        assert!(w.is_none());
    }

    #[test]
    fn c3_is_its_own_witness() {
        let c3 = generate_pattern(PatternKind::c(3)).unwrap();
        let w = find_forbidden_witness(&c3, &[PatternFamily::C], 3).unwrap().unwrap();
        assert_eq!(w.subset, ["v1", "v2", "v3"]);
        assert_eq!(w.pattern, PatternKind::c(3));
    }

    #[test]
    fn max_subset_caps_search() {
        let c5 = generate_pattern(PatternKind::c(5)).unwrap();
        assert!(find_forbidden_witness(&c5, &[PatternFamily::C], 4).unwrap().is_none());
        assert!(find_forbidden_witness(&c5, &[PatternFamily::C], 5).unwrap().is_some());
    }

    #[test]
    fn limit_enforced() {
        let big = Hypergraph::edgeless((0..21).map(|i| format!("v{i}"))).unwrap();
        let err = find_forbidden_witness(&big, &PatternFamily::ALL, 3);
        assert!(matches!(err, Err(Error::TooLarge { .. })));
    }

    #[test]
    fn partial_containment_sees_through_extra_edges() {
        // a star with an extra hyperedge covering three of its vertices
        let h = Hypergraph::new(
            ["a", "b", "c", "d"],
            [vec!["a", "b"], vec!["b", "c"], vec!["b", "d"], vec!["a", "b", "c"]],
        )
        .unwrap();
        assert!(WitnessSearch::families(&PatternFamily::ALL).run(&h).unwrap().is_none());
        let w = WitnessSearch::families(&PatternFamily::ALL)
            .containment(Containment::Partial)
            .run(&h)
            .unwrap()
            .expect("star is present after dropping an edge");
        assert!(is_valid_witness(&h, &w, Containment::Partial));
    }
}
