//! Chordality of hypergraphs.
//!
//! A cycle is a sequence `v0 … vk` of distinct vertices together with `k+1`
//! distinct hyperedges, the `i`-th containing `{v(i-1), vi}` and the last
//! containing `{vk, v0}`. A hypergraph is chordal when every cycle with at
//! least four vertices has two nonconsecutive vertices that share a
//! hyperedge. Cycles without such a pair are exactly chordless cycles of the
//! 2-section that admit a system of distinct supporting hyperedges, which is
//! decided by bipartite matching.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_CHORDAL_LIMIT: usize = 16;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycleWitness {
    /// `v0 … vk`, at least four vertices.
    pub cycle: Vec<String>,
    /// `edges[i]` supports the pair `(cycle[i], cycle[i+1])`, the last one
    /// supports `(cycle[k], cycle[0])`.
    pub edges: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ChordalityReport {
    pub chordal: bool,
    pub witness: Option<CycleWitness>,
}

/// Kuhn's augmenting-path matching. `options[i]` lists the right-hand
/// vertices acceptable for left vertex `i`; returns the chosen right vertex
/// for every left vertex when a perfect matching exists.
pub(crate) fn distinct_representatives(options: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(
        left: usize,
        options: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &options[left] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|other| augment(other, options, seen, owner)) {
                owner[r] = Some(left);
                return true;
            }
        }
        false
    }

    let mut owner: Vec<Option<usize>> = vec![None; right];
    for left in 0..options.len() {
        let mut seen = vec![false; right];
        if !augment(left, options, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut choice = vec![usize::MAX; options.len()];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = o {
            choice[*l] = r;
        }
    }
    Some(choice)
}

struct CycleSearch<'a> {
    adj: Vec<Vec<bool>>,
    edges: &'a [Vec<usize>],
}

impl CycleSearch<'_> {
    fn supporting(&self, cycle: &[usize]) -> Option<Vec<usize>> {
        let k = cycle.len();
        let options: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                let (u, v) = (cycle[i], cycle[(i + 1) % k]);
                (0..self.edges.len())
                    .filter(|&e| self.edges[e].contains(&u) && self.edges[e].contains(&v))
                    .collect()
            })
            .collect();
        distinct_representatives(&options, self.edges.len())
    }

    /// Extends the induced path `path` (all vertices greater than `path[0]`
    /// except the start itself) looking for a chordless cycle with a
    /// supporting system.
    fn grow(&self, path: &mut Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.adj.len();
        let start = path[0];
        let last = *path.last().expect("path starts non-empty");
        for w in (start + 1)..n {
            if !self.adj[last][w] || path.contains(&w) {
                continue;
            }
            let interior = path.len().saturating_sub(2);
            if path.iter().skip(1).take(interior).any(|&p| self.adj[p][w]) {
                continue;
            }
            let closes = path.len() >= 2 && self.adj[start][w];
            if closes {
                // Only cycles of at least four vertices, each found once.
                if path.len() >= 3 && path[1] < w {
                    path.push(w);
                    if let Some(support) = self.supporting(path) {
                        return Some((path.clone(), support));
                    }
                    path.pop();
                }
                continue;
            }
            path.push(w);
            if let Some(found) = self.grow(path) {
                return Some(found);
            }
            path.pop();
        }
        None
    }
}

/// Decides chordality with the default vertex limit.
pub fn is_chordal(h: &Hypergraph) -> Result<ChordalityReport> {
    is_chordal_with_limit(h, DEFAULT_CHORDAL_LIMIT)
}

pub fn is_chordal_with_limit(h: &Hypergraph, limit: usize) -> Result<ChordalityReport> {
    let n = h.vertex_count();
    if n > limit {
        return Err(Error::TooLarge {
            what: "chordality search",
            size: n,
            limit,
        });
    }
    let edges = h.indexed_edges();
    let mut adj = vec![vec![false; n]; n];
    for e in &edges {
        for &u in e {
            for &v in e {
                if u != v {
                    adj[u][v] = true;
                }
            }
        }
    }
    let search = CycleSearch { adj, edges: &edges };
    for start in 0..n {
        let mut path = vec![start];
        if let Some((cycle, support)) = search.grow(&mut path) {
            let label = |v: usize| h.vertices()[v].clone();
            return Ok(ChordalityReport {
                chordal: false,
                witness: Some(CycleWitness {
                    cycle: cycle.into_iter().map(label).collect(),
                    edges: support.into_iter().map(|e| h.edges()[e].clone()).collect(),
                }),
            });
        }
    }
    Ok(ChordalityReport {
        chordal: true,
        witness: None,
    })
}

/// Checks a reported witness against the definition.
pub fn is_valid_cycle_witness(h: &Hypergraph, witness: &CycleWitness) -> bool {
    let k = witness.cycle.len();
    if k < 4 || witness.edges.len() != k {
        return false;
    }
    let mut distinct_vertices = witness.cycle.clone();
    distinct_vertices.sort();
    distinct_vertices.dedup();
    let mut distinct_edges = witness.edges.clone();
    distinct_edges.sort();
    distinct_edges.dedup();
    if distinct_vertices.len() != k || distinct_edges.len() != k {
        return false;
    }
    let adjacent = |u: &String, v: &String| h.edges().iter().any(|e| e.contains(u) && e.contains(v));
    for i in 0..k {
        let (u, v) = (&witness.cycle[i], &witness.cycle[(i + 1) % k]);
        let e = &witness.edges[i];
        if !h.has_edge(e) || !e.contains(u) || !e.contains(v) {
            return false;
        }
        for j in (i + 2)..k {
            if i == 0 && j == k - 1 {
                continue;
            }
            if adjacent(&witness.cycle[i], &witness.cycle[j]) {
                return false;
            }
        }
    }
    true
}
