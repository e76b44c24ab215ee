//! Point sets built from interval hypergraphs, and realization checks.
//!
//! Given an interval ordering `v1 … vn`, vertex `vi` becomes `ai = (i, n+1−i)`
//! and each hyperedge `e` becomes `be = (min(e) − 1, n − max(e))`, where
//! `min`/`max` are positions in the ordering. The point `be` is dominated by
//! exactly the `ai` with `min(e) ≤ i ≤ max(e)`, so the trace of the
//! competition hypergraph on the `a` points is the input hypergraph. That is
//! containment only: the `b` points can join hyperedges too.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::competition::{build_dpo, competition_hypergraph, DoublyPartialOrder};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::hypergraph::Hypergraph;
use crate::isomorphism::isomorphism_indexed;

/// Builds the staircase embedding of `h` for the given interval ordering.
///
/// The `a` point of a vertex carries the vertex label; the `b` point of a
/// hyperedge is labelled `b{u,v,…}` (prefixed with `_` until it clashes with
/// no vertex label).
pub fn embed_interval_hypergraph<S: AsRef<str>>(h: &Hypergraph, ordering: &[S]) -> Result<Vec<Point2>> {
    let index = h.vertex_index();
    let n = h.vertex_count();
    let mut position = vec![usize::MAX; n];
    if ordering.len() != n {
        return Err(Error::BadOrdering(format!(
            "expected {n} vertices, got {}",
            ordering.len()
        )));
    }
    for (pos, label) in ordering.iter().enumerate() {
        let label = label.as_ref();
        match index.get(label) {
            Some(&v) if position[v] == usize::MAX => position[v] = pos + 1,
            Some(_) => return Err(Error::BadOrdering(format!("{label:?} repeated"))),
            None => return Err(Error::UnknownVertex(label.to_string())),
        }
    }
    let labels: HashSet<&str> = h.vertices().iter().map(String::as_str).collect();
    let size = n as i64;
    let mut points: Vec<Point2> = ordering
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let i = i as i64 + 1;
            Point2::int(label.as_ref(), i, size + 1 - i)
        })
        .collect();
    for (edge, members) in h.indexed_edges().iter().zip(h.edges()) {
        let lo = edge.iter().map(|&v| position[v]).min().expect("edges have members");
        let hi = edge.iter().map(|&v| position[v]).max().expect("edges have members");
        if hi + 1 - lo != edge.len() {
            return Err(Error::NotContiguous(members.clone()));
        }
        let mut id = format!("b{{{}}}", members.join(","));
        while labels.contains(id.as_str()) {
            id.insert(0, '_');
        }
        points.push(Point2::int(id, lo as i64 - 1, size - hi as i64));
    }
    Ok(points)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RealizationReport {
    pub realized: bool,
    pub points: Option<Vec<Point2>>,
    /// Hypergraph vertex to point id.
    pub embedding: Option<BTreeMap<String, String>>,
    /// Points outside the image of the embedding.
    pub isolated: Option<BTreeSet<String>>,
}

impl RealizationReport {
    fn refused() -> Self {
        RealizationReport {
            realized: false,
            points: None,
            embedding: None,
            isolated: None,
        }
    }
}

/// Decides whether the competition hypergraph of `dpo` is `h` plus isolated
/// points: some injection of `V(h)` into the points must carry `E(h)` exactly
/// onto the competition hyperedges, with every other point isolated.
pub fn check_realization(dpo: &DoublyPartialOrder, h: &Hypergraph) -> RealizationReport {
    if h.vertex_count() > dpo.len() {
        return RealizationReport::refused();
    }
    let ch = competition_hypergraph(dpo).hypergraph;
    if ch.edge_count() != h.edge_count() {
        return RealizationReport::refused();
    }
    let h_isolated = h.isolated_vertices();
    let ch_isolated = ch.isolated_vertices();
    let h_core: Vec<&String> = h.vertices().iter().filter(|v| !h_isolated.contains(*v)).collect();
    let ch_core: Vec<&String> = ch.vertices().iter().filter(|v| !ch_isolated.contains(*v)).collect();
    if h_core.len() != ch_core.len() {
        return RealizationReport::refused();
    }
    let h_trace = h.trace(&h_core).expect("core vertices belong to h");
    let ch_trace = ch.trace(&ch_core).expect("core vertices belong to ch");
    let Some(map) = isomorphism_indexed(
        h_trace.vertex_count(),
        &h_trace.indexed_edges(),
        ch_trace.vertex_count(),
        &ch_trace.indexed_edges(),
    ) else {
        return RealizationReport::refused();
    };
    let mut embedding: BTreeMap<String, String> = map
        .iter()
        .enumerate()
        .map(|(i, &j)| (h_trace.vertices()[i].clone(), ch_trace.vertices()[j].clone()))
        .collect();
    let mut spare = ch.vertices().iter().filter(|v| ch_isolated.contains(*v));
    for v in h.vertices().iter().filter(|v| h_isolated.contains(*v)) {
        let target = spare.next().expect("enough points remain for isolated vertices");
        embedding.insert(v.clone(), target.clone());
    }
    let used: BTreeSet<&String> = embedding.values().collect();
    let isolated = ch
        .vertices()
        .iter()
        .filter(|v| !used.contains(v))
        .cloned()
        .collect();
    RealizationReport {
        realized: true,
        points: Some(dpo.points().to_vec()),
        embedding: Some(embedding),
        isolated: Some(isolated),
    }
}

/// Parameters of a randomized realization search.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RealizationSearch {
    /// Coordinates range over `0 ..= grid`.
    pub grid: u32,
    /// Points beyond `|V(h)|`.
    pub extra: usize,
    /// Number of random placements tried.
    pub budget: u64,
    pub seed: u64,
    /// Worker threads; the result does not depend on it.
    pub threads: usize,
}

impl RealizationSearch {
    pub fn new(grid: u32, extra: usize, budget: u64, seed: u64) -> Self {
        RealizationSearch {
            grid,
            extra,
            budget,
            seed,
            threads: 1,
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// Integer placement drawn for trial `trial`; independent of every other
/// trial so trials can run in any order.
fn placement(params: &RealizationSearch, count: usize, trial: u64) -> Vec<(i64, i64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    rng.set_stream(trial);
    let side = params.grid as usize + 1;
    sample(&mut rng, side * side, count)
        .into_iter()
        .map(|cell| ((cell % side) as i64, (cell / side) as i64))
        .collect()
}

/// Sorted sizes of the competition hyperedges of an integer placement.
fn edge_sizes(cells: &[(i64, i64)]) -> Vec<usize> {
    let mut edges: Vec<u64> = cells
        .iter()
        .map(|&(x, y)| {
            cells
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| x < u && y < v)
                .fold(0u64, |m, (i, _)| m | (1 << i))
        })
        .filter(|m| m.count_ones() >= 2)
        .collect();
    edges.sort_unstable();
    edges.dedup();
    let mut sizes: Vec<usize> = edges.iter().map(|m| m.count_ones() as usize).collect();
    sizes.sort_unstable();
    sizes
}

fn try_trial(params: &RealizationSearch, h: &Hypergraph, sizes: &[usize], trial: u64) -> Option<RealizationReport> {
    let count = h.vertex_count() + params.extra;
    let cells = placement(params, count, trial);
    if count <= 64 && edge_sizes(&cells) != sizes {
        return None;
    }
    let points = cells
        .iter()
        .enumerate()
        .map(|(i, &(x, y))| Point2::int(format!("p{i}"), x, y))
        .collect();
    let dpo = build_dpo(points).expect("sampled cells are distinct");
    let report = check_realization(&dpo, h);
    report.realized.then_some(report)
}

/// Samples random integer placements of `|V(h)| + extra` points and returns
/// the first (by trial index) whose competition hypergraph is `h` plus
/// isolated points.
pub fn search_realization(h: &Hypergraph, params: RealizationSearch) -> Result<RealizationReport> {
    if params.grid == 0 {
        return Err(Error::BadParameter("grid must be at least 1".into()));
    }
    let count = h.vertex_count() + params.extra;
    let side = params.grid as usize + 1;
    if count > side * side {
        return Err(Error::BadParameter(format!(
            "{count} points do not fit on a {side}x{side} grid"
        )));
    }
    let mut sizes: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    sizes.sort_unstable();

    if params.threads <= 1 {
        for trial in 0..params.budget {
            if let Some(report) = try_trial(&params, h, &sizes, trial) {
                return Ok(report);
            }
        }
        return Ok(RealizationReport::refused());
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.threads)
        .build()
        .map_err(|e| Error::BadParameter(e.to_string()))?;
    const CHUNK: u64 = 4096;
    let found = pool.install(|| {
        let mut start = 0;
        while start < params.budget {
            let end = (start + CHUNK).min(params.budget);
            let hit = (start..end)
                .into_par_iter()
                .find_map_first(|trial| try_trial(&params, h, &sizes, trial));
            if hit.is_some() {
                return hit;
            }
            start = end;
        }
        None
    });
    Ok(found.unwrap_or_else(RealizationReport::refused))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::competition_hypergraph;
    use crate::isomorphism::isomorphism;
    use crate::patterns::counterexample_hypergraph;

    fn path3() -> Hypergraph {
        Hypergraph::new(["v1", "v2", "v3"], [["v1", "v2"], ["v2", "v3"]]).unwrap()
    }

    fn coords(points: &[Point2]) -> Vec<String> {
        points.iter().map(|p| format!("({},{})", p.x, p.y)).collect()
    }

    #[test]
    fn path_embedding_coordinates() {
        let pts = embed_interval_hypergraph(&path3(), &["v1", "v2", "v3"]).unwrap();
        assert_eq!(coords(&pts), ["(1,3)", "(2,2)", "(3,1)", "(0,1)", "(1,0)"]);
        assert_eq!(pts[3].id, "b{v1,v2}");
    }

    #[test]
    fn counterexample_big_edge_point() {
        let h = counterexample_hypergraph();
        let order = ["v1", "v2", "v3", "v4", "v5", "v6"];
        let pts = embed_interval_hypergraph(&h, &order).unwrap();
        let big = pts.iter().find(|p| p.id == "b{v2,v3,v4,v5}").unwrap();
        assert_eq!(coords(std::slice::from_ref(big)), ["(1,1)"]);
    }

    #[test]
    fn split_edge_rejected() {
        let err = embed_interval_hypergraph(&path3(), &["v2", "v1", "v3"]);
        assert_eq!(err, Err(Error::NotContiguous(vec!["v2".into(), "v3".into()])));
        assert!(matches!(
            embed_interval_hypergraph(&path3(), &["v1", "v2"]),
            Err(Error::BadOrdering(_))
        ));
    }

    #[test]
    fn embedding_contains_input() {
        let h = counterexample_hypergraph();
        let order: Vec<String> = h.vertices().to_vec();
        let dpo = build_dpo(embed_interval_hypergraph(&h, &order).unwrap()).unwrap();
        let ch = competition_hypergraph(&dpo).hypergraph;
        let trace = ch.trace(&order).unwrap();
        assert_eq!(trace, h);
        assert!(isomorphism(&trace, &h).is_some());
    }

    #[test]
    fn realization_checks() {
        let dpo = build_dpo(embed_interval_hypergraph(&path3(), &["v1", "v2", "v3"]).unwrap()).unwrap();
        let report = check_realization(&dpo, &path3());
        assert!(report.realized);
        let isolated: Vec<&str> = report.isolated.as_ref().unwrap().iter().map(String::as_str).collect();
        assert_eq!(isolated, ["b{v1,v2}", "b{v2,v3}"]);

        let h = counterexample_hypergraph();
        let order: Vec<String> = h.vertices().to_vec();
        let dpo = build_dpo(embed_interval_hypergraph(&h, &order).unwrap()).unwrap();
        let ch = competition_hypergraph(&dpo);
        let (edge, _) = ch
            .witnesses
            .iter()
            .find(|(_, w)| w.contains("b{v2,v3,v4,v5}"))
            .unwrap();
        assert!(edge.contains(&"b{v3,v4}".to_string()));
        assert!(!check_realization(&dpo, &h).realized);

        let single = build_dpo(vec![Point2::int("p", 0, 0)]).unwrap();
        let lone = Hypergraph::edgeless(["v"]).unwrap();
        assert!(check_realization(&single, &lone).realized);
    }

    #[test]
    fn search_finds_path() {
        let report = search_realization(&path3(), RealizationSearch::new(4, 2, 100_000, 1)).unwrap();
        assert!(report.realized);
        let dpo = build_dpo(report.points.clone().unwrap()).unwrap();
        assert!(check_realization(&dpo, &path3()).realized);
    }

    #[test]
    fn search_is_thread_independent() {
        let one = search_realization(&path3(), RealizationSearch::new(4, 2, 10_000, 7)).unwrap();
        let four = search_realization(&path3(), RealizationSearch::new(4, 2, 10_000, 7).threads(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn trivial_search() {
        let lone = Hypergraph::edgeless(["v"]).unwrap();
        let report = search_realization(&lone, RealizationSearch::new(1, 0, 1, 0)).unwrap();
        assert!(report.realized);
        assert!(search_realization(&lone, RealizationSearch::new(0, 0, 1, 0)).is_err());
        assert!(search_realization(&lone, RealizationSearch::new(1, 4, 1, 0)).is_err());
    }
}
