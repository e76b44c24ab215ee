//! Interval hypergraphs (consecutive-ones orderings) and interval graphs.
//!
//! The solver works on overlap components: two hyperedges overlap when they
//! intersect and neither contains the other. Inside an overlap component the
//! order of its membership classes is forced up to reversal, and is built by
//! inserting the component's hyperedges one at a time, each overlapping an
//! already inserted one. Hyperedges outside a component either contain its
//! whole union or fit inside one of its classes, so the remaining constraints
//! are solved recursively inside the classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};

pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 10;
pub const DEFAULT_INTERVAL_GRAPH_LIMIT: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IntervalCertificate {
    pub interval: bool,
    /// A permutation of all vertices in which every hyperedge is contiguous.
    pub ordering: Option<Vec<String>>,
}

impl IntervalCertificate {
    fn refused() -> Self {
        IntervalCertificate {
            interval: false,
            ordering: None,
        }
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    // both sorted
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

fn overlaps(a: &[usize], b: &[usize]) -> bool {
    intersects(a, b) && !is_subset(a, b) && !is_subset(b, a)
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Ordered partition of the union of an overlap component.
struct BlockChain {
    blocks: Vec<Vec<usize>>,
}

enum Cover {
    Empty,
    Partial,
    Full,
}

impl BlockChain {
    fn new(first: &[usize]) -> Self {
        BlockChain {
            blocks: vec![first.to_vec()],
        }
    }

    /// Split `blocks[i]` into the part outside `mark` and the part inside,
    /// with the inside part placed towards `inside_right`.
    fn split(&mut self, i: usize, mark: &[bool], inside_right: bool) {
        let (inside, outside): (Vec<usize>, Vec<usize>) =
            self.blocks[i].iter().partition(|&&v| mark[v]);
        let pair = if inside_right {
            [outside, inside]
        } else {
            [inside, outside]
        };
        self.blocks.splice(i..=i, pair);
    }

    /// Inserts a hyperedge overlapping some earlier one. Returns false when no
    /// consecutive arrangement survives.
    fn insert(&mut self, edge: &[usize], mark: &mut [bool]) -> bool {
        for &v in edge {
            mark[v] = true;
        }
        let ok = self.insert_marked(edge, mark);
        for &v in edge {
            mark[v] = false;
        }
        ok
    }

    fn insert_marked(&mut self, edge: &[usize], mark: &[bool]) -> bool {
        let covers: Vec<Cover> = self
            .blocks
            .iter()
            .map(|b| {
                let inside = b.iter().filter(|&&v| mark[v]).count();
                match inside {
                    0 => Cover::Empty,
                    k if k == b.len() => Cover::Full,
                    _ => Cover::Partial,
                }
            })
            .collect();
        let touched: Vec<usize> = covers
            .iter()
            .enumerate()
            .filter(|(_, c)| !matches!(c, Cover::Empty))
            .map(|(i, _)| i)
            .collect();
        let (Some(&l), Some(&r)) = (touched.first(), touched.last()) else {
            return false;
        };
        if r > l + 1 && !covers[l + 1..r].iter().all(|c| matches!(c, Cover::Full)) {
            return false;
        }
        let covered: usize = touched
            .iter()
            .map(|&i| self.blocks[i].iter().filter(|&&v| mark[v]).count())
            .sum();
        let fresh: Vec<usize> = if covered == edge.len() {
            Vec::new()
        } else {
            let mut in_chain = vec![false; mark.len()];
            for b in &self.blocks {
                for &v in b {
                    in_chain[v] = true;
                }
            }
            edge.iter().copied().filter(|&v| !in_chain[v]).collect()
        };
        let last = self.blocks.len() - 1;
        if fresh.is_empty() {
            if l == r {
                return false;
            }
            if matches!(covers[r], Cover::Partial) {
                self.split(r, mark, false);
            }
            if matches!(covers[l], Cover::Partial) {
                self.split(l, mark, true);
            }
            return true;
        }
        let extends_right = r == last && (l == r || matches!(covers[r], Cover::Full));
        let extends_left = l == 0 && (l == r || matches!(covers[l], Cover::Full));
        if extends_right {
            if matches!(covers[l], Cover::Partial) {
                self.split(l, mark, true);
            }
            self.blocks.push(fresh);
            true
        } else if extends_left {
            if matches!(covers[r], Cover::Partial) {
                self.split(r, mark, false);
            }
            self.blocks.insert(0, fresh);
            true
        } else {
            false
        }
    }
}

struct Solver {
    n: usize,
}

impl Solver {
    /// Orders `scope` so that every edge (each a sorted subset of `scope`) is
    /// contiguous.
    fn solve(&self, scope: Vec<usize>, edges: Vec<Vec<usize>>) -> Option<Vec<usize>> {
        let mut edges: Vec<Vec<usize>> = edges
            .into_iter()
            .filter(|e| e.len() >= 2 && e.len() < scope.len())
            .collect();
        edges.sort();
        edges.dedup();
        if edges.is_empty() {
            return Some(scope);
        }

        let m = edges.len();
        let mut parent: Vec<usize> = (0..m).collect();
        for i in 0..m {
            for j in (i + 1)..m {
                if overlaps(&edges[i], &edges[j]) {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut group_of = vec![usize::MAX; m];
        for i in 0..m {
            let root = find(&mut parent, i);
            if group_of[root] == usize::MAX {
                group_of[root] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of[root]].push(i);
        }
        let unions: Vec<Vec<usize>> = groups
            .iter()
            .map(|g| {
                let mut u: Vec<usize> = g.iter().flat_map(|&e| edges[e].iter().copied()).collect();
                u.sort_unstable();
                u.dedup();
                u
            })
            .collect();

        // Unions of overlap components are laminar; the outermost ones are
        // disjoint. On equal unions prefer the genuine component over a lone
        // hyperedge equal to it.
        let mut by_size: Vec<usize> = (0..groups.len()).collect();
        by_size.sort_by_key(|&g| {
            (
                std::cmp::Reverse(unions[g].len()),
                groups[g].len() == 1,
                unions[g][0],
            )
        });
        let mut claimed = vec![false; self.n];
        let mut tops = Vec::new();
        for g in by_size {
            if claimed[unions[g][0]] {
                continue;
            }
            for &v in &unions[g] {
                claimed[v] = true;
            }
            tops.push(g);
        }
        tops.sort_by_key(|&g| unions[g][0]);

        let mut order = Vec::with_capacity(scope.len());
        for g in tops {
            let union = &unions[g];
            let nested: Vec<Vec<usize>> = edges
                .iter()
                .enumerate()
                .filter(|(i, e)| {
                    !groups[g].contains(i) && e.len() < union.len() && is_subset(e, union)
                })
                .map(|(_, e)| e.clone())
                .collect();
            if groups[g].len() == 1 {
                order.extend(self.solve(union.clone(), nested)?);
                continue;
            }
            let chain = self.chain_for(&groups[g], &edges)?;
            let mut in_block = vec![usize::MAX; self.n];
            for (b, block) in chain.blocks.iter().enumerate() {
                for &v in block {
                    in_block[v] = b;
                }
            }
            let mut per_block: Vec<Vec<Vec<usize>>> = vec![Vec::new(); chain.blocks.len()];
            for e in nested {
                let b = in_block[e[0]];
                debug_assert!(e.iter().all(|&v| in_block[v] == b), "nested edge spans classes");
                per_block[b].push(e);
            }
            for (mut block, inner) in chain.blocks.into_iter().zip(per_block) {
                block.sort_unstable();
                order.extend(self.solve(block, inner)?);
            }
        }
        order.extend(scope.iter().copied().filter(|&v| !claimed[v]));
        Some(order)
    }

    fn chain_for(&self, group: &[usize], edges: &[Vec<usize>]) -> Option<BlockChain> {
        // Insert along a breadth-first traversal of the overlap graph so each
        // new edge overlaps one already placed.
        let mut placed = vec![false; group.len()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        placed[0] = true;
        let mut chain = BlockChain::new(&edges[group[0]]);
        let mut mark = vec![false; self.n];
        let mut first = true;
        while let Some(i) = queue.pop_front() {
            if !first && !chain.insert(&edges[group[i]], &mut mark) {
                return None;
            }
            first = false;
            for j in 0..group.len() {
                if !placed[j] && overlaps(&edges[group[i]], &edges[group[j]]) {
                    placed[j] = true;
                    queue.push_back(j);
                }
            }
        }
        Some(chain)
    }
}

/// Consecutive-ones ordering of `0..n` for the given sets, if one exists.
pub(crate) fn consecutive_ordering(n: usize, sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    let edges = sets
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let order = Solver { n }.solve((0..n).collect(), edges)?;
    debug_assert_eq!(order.len(), n);
    Some(order)
}

fn contiguous_in(position: &[usize], edges: &[Vec<usize>]) -> bool {
    edges.iter().all(|e| {
        let lo = e.iter().map(|&v| position[v]).min().unwrap_or(0);
        let hi = e.iter().map(|&v| position[v]).max().unwrap_or(0);
        hi + 1 - lo == e.len()
    })
}

/// Whether `ordering` lists every vertex exactly once with every hyperedge
/// occupying a contiguous block.
pub fn is_valid_ordering<S: AsRef<str>>(h: &Hypergraph, ordering: &[S]) -> bool {
    if ordering.len() != h.vertex_count() {
        return false;
    }
    let index = h.vertex_index();
    let mut position = vec![usize::MAX; h.vertex_count()];
    for (pos, label) in ordering.iter().enumerate() {
        match index.get(label.as_ref()) {
            Some(&v) if position[v] == usize::MAX => position[v] = pos,
            _ => return false,
        }
    }
    contiguous_in(&position, &h.indexed_edges())
}

/// Decides whether `h` is an interval hypergraph, returning a checked ordering
/// when it is.
pub fn is_interval(h: &Hypergraph) -> IntervalCertificate {
    match consecutive_ordering(h.vertex_count(), &h.indexed_edges()) {
        Some(order) => {
            let ordering: Vec<String> = order.iter().map(|&v| h.vertices()[v].clone()).collect();
            assert!(
                is_valid_ordering(h, &ordering),
                "consecutive-ones solver produced an invalid ordering"
            );
            IntervalCertificate {
                interval: true,
                ordering: Some(ordering),
            }
        }
        None => IntervalCertificate::refused(),
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).expect("successor exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Tries every vertex permutation in lexicographic order of vertex
/// positions; the first valid one is returned.
pub fn is_interval_bruteforce(h: &Hypergraph) -> Result<IntervalCertificate> {
    is_interval_bruteforce_with_limit(h, DEFAULT_BRUTEFORCE_LIMIT)
}

pub fn is_interval_bruteforce_with_limit(h: &Hypergraph, limit: usize) -> Result<IntervalCertificate> {
    let n = h.vertex_count();
    if n > limit {
        return Err(Error::TooLarge {
            what: "permutation search",
            size: n,
            limit,
        });
    }
    let edges = h.indexed_edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut position = vec![0; n];
    loop {
        for (pos, &v) in perm.iter().enumerate() {
            position[v] = pos;
        }
        if contiguous_in(&position, &edges) {
            return Ok(IntervalCertificate {
                interval: true,
                ordering: Some(perm.iter().map(|&v| h.vertices()[v].clone()).collect()),
            });
        }
        if !next_permutation(&mut perm) {
            return Ok(IntervalCertificate::refused());
        }
    }
}

/// Maximal cliques by Bron–Kerbosch with pivoting, as sorted vertex
/// positions.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        adj: &[Vec<bool>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
            .expect("p is non-empty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            expand(r, np, nx, adj, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    let n = g.vertices().len();
    let mut adj = vec![vec![false; n]; n];
    for (u, list) in g.adjacency().iter().enumerate() {
        for &v in list {
            adj[u][v] = true;
        }
    }
    let mut out = Vec::new();
    expand(&mut Vec::new(), (0..n).collect(), Vec::new(), &adj, &mut out);
    out.sort();
    out
}

/// Decides whether `g` is an interval graph: its maximal cliques must admit
/// an order in which the cliques through each vertex are consecutive.
pub fn is_interval_graph(g: &Graph) -> Result<bool> {
    is_interval_graph_with_limit(g, DEFAULT_INTERVAL_GRAPH_LIMIT)
}

pub fn is_interval_graph_with_limit(g: &Graph, limit: usize) -> Result<bool> {
    let n = g.vertices().len();
    if n > limit {
        return Err(Error::TooLarge {
            what: "interval graph test",
            size: n,
            limit,
        });
    }
    let cliques = maximal_cliques(g);
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, clique) in cliques.iter().enumerate() {
        for &v in clique {
            through[v].push(c);
        }
    }
    Ok(consecutive_ordering(cliques.len(), &through).is_some())
}
