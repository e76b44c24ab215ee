//! Hypergraph isomorphism by backtracking.
//!
//! Candidates for each vertex are restricted to vertices with the same size
//! profile (sorted sizes of incident hyperedges); partial maps are checked
//! against pairwise co-occurrence counts, and every hyperedge is checked as
//! soon as all of its members are mapped.

use std::collections::{BTreeMap, HashSet};

use crate::hypergraph::Hypergraph;

type PairCounts = Vec<Vec<u32>>;

/// Index-level instance shared by the isomorphism and containment searches.
struct Search<'a> {
    order: Vec<usize>,
    /// Edges of the source, grouped by the step in `order` that completes them.
    completes_at: Vec<Vec<&'a [usize]>>,
    target_edges: HashSet<&'a [usize]>,
    candidates: Vec<Vec<usize>>,
    /// Co-occurrence counts, only consulted for exact isomorphism.
    pair_counts: Option<(PairCounts, PairCounts)>,
}

fn pair_counts(n: usize, edges: &[Vec<usize>]) -> PairCounts {
    let mut counts = vec![vec![0u32; n]; n];
    for e in edges {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                counts[u][v] += 1;
                counts[v][u] += 1;
            }
        }
    }
    counts
}

fn search_order(n: usize, edges: &[Vec<usize>]) -> Vec<usize> {
    // Highest degree first, then grow along shared edges so that edges
    // complete early.
    let mut degree = vec![0usize; n];
    for e in edges {
        for &v in e {
            degree[v] += 1;
        }
    }
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], degree[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for e in edges.iter().filter(|e| e.contains(&next)) {
            for &v in e {
                weight[v] += 1;
            }
        }
    }
    order
}

impl<'a> Search<'a> {
    fn new(
        n: usize,
        source: &'a [Vec<usize>],
        target: &'a [Vec<usize>],
        candidates: Vec<Vec<usize>>,
        exact: bool,
    ) -> Self {
        let order = search_order(n, source);
        let mut step_of = vec![0; n];
        for (step, &v) in order.iter().enumerate() {
            step_of[v] = step;
        }
        let mut completes_at = vec![Vec::new(); n];
        for e in source {
            let last = e.iter().map(|&v| step_of[v]).max().expect("edges are non-empty");
            completes_at[last].push(e.as_slice());
        }
        Search {
            order,
            completes_at,
            target_edges: target.iter().map(Vec::as_slice).collect(),
            candidates,
            pair_counts: exact.then(|| (pair_counts(n, source), pair_counts(n, target))),
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let n = self.order.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &mut map, &mut used).then_some(map)
    }

    fn extend(&self, step: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if step == self.order.len() {
            return true;
        }
        let u = self.order[step];
        let mut image = Vec::new();
        for &w in &self.candidates[u] {
            if used[w] {
                continue;
            }
            if let Some((src, dst)) = &self.pair_counts {
                let consistent = self.order[..step]
                    .iter()
                    .all(|&p| src[u][p] == dst[w][map[p]]);
                if !consistent {
                    continue;
                }
            }
            map[u] = w;
            let edges_ok = self.completes_at[step].iter().all(|e| {
                image.clear();
                image.extend(e.iter().map(|&v| map[v]));
                image.sort_unstable();
                self.target_edges.contains(image.as_slice())
            });
            if edges_ok {
                used[w] = true;
                if self.extend(step + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
            map[u] = usize::MAX;
        }
        false
    }
}

fn sorted_sizes(edges: &[Vec<usize>]) -> Vec<usize> {
    let mut sizes: Vec<usize> = edges.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

/// Isomorphism over vertex positions: `map[i]` is the image of source vertex
/// `i`. Both edge lists must hold sorted, distinct edges.
pub(crate) fn isomorphism_indexed(
    n: usize,
    source: &[Vec<usize>],
    target_n: usize,
    target: &[Vec<usize>],
) -> Option<Vec<usize>> {
    if n != target_n || source.len() != target.len() {
        return None;
    }
    if sorted_sizes(source) != sorted_sizes(target) {
        return None;
    }
    let src_profiles = Hypergraph::size_profiles(n, source);
    let dst_profiles = Hypergraph::size_profiles(n, target);
    let mut a = src_profiles.clone();
    let mut b = dst_profiles.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    let candidates = (0..n)
        .map(|u| (0..n).filter(|&w| src_profiles[u] == dst_profiles[w]).collect())
        .collect();
    Search::new(n, source, target, candidates, true).run()
}

/// Bijection of vertex positions carrying every source edge onto some target
/// edge; the target may have further edges.
pub(crate) fn edge_embedding_indexed(
    n: usize,
    source: &[Vec<usize>],
    target_n: usize,
    target: &[Vec<usize>],
) -> Option<Vec<usize>> {
    if n != target_n || source.len() > target.len() {
        return None;
    }
    let src_deg: Vec<usize> = (0..n).map(|v| source.iter().filter(|e| e.contains(&v)).count()).collect();
    let dst_deg: Vec<usize> = (0..n).map(|v| target.iter().filter(|e| e.contains(&v)).count()).collect();
    let candidates = (0..n)
        .map(|u| (0..n).filter(|&w| dst_deg[w] >= src_deg[u]).collect())
        .collect();
    Search::new(n, source, target, candidates, false).run()
}

/// Finds a vertex bijection carrying the hyperedges of `h1` exactly onto
/// those of `h2`, as a map from `h1` labels to `h2` labels.
pub fn isomorphism(h1: &Hypergraph, h2: &Hypergraph) -> Option<BTreeMap<String, String>> {
    let map = isomorphism_indexed(
        h1.vertex_count(),
        &h1.indexed_edges(),
        h2.vertex_count(),
        &h2.indexed_edges(),
    )?;
    Some(
        map.iter()
            .enumerate()
            .map(|(i, &j)| (h1.vertices()[i].clone(), h2.vertices()[j].clone()))
            .collect(),
    )
}

/// Checks that `map` is a bijection from `V(h1)` onto `V(h2)` carrying
/// `E(h1)` exactly onto `E(h2)`.
pub fn is_isomorphism(h1: &Hypergraph, h2: &Hypergraph, map: &BTreeMap<String, String>) -> bool {
    if h1.vertex_count() != h2.vertex_count() || map.len() != h1.vertex_count() {
        return false;
    }
    if !h1.vertices().iter().all(|v| map.contains_key(v)) {
        return false;
    }
    let images: HashSet<&String> = map.values().collect();
    if images.len() != map.len() || !images.iter().all(|v| h2.contains_vertex(v)) {
        return false;
    }
    h1.edge_count() == h2.edge_count()
        && h1.edges().iter().all(|e| {
            let image: Vec<&String> = e.iter().map(|v| &map[v]).collect();
            h2.has_edge(&image)
        })
}
