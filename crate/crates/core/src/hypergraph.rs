//! Finite hypergraphs without loops or repeated hyperedges, and simple graphs.
//!
//! Storage is canonical: each hyperedge is a lexicographically sorted list of
//! labels and the edge list itself is sorted, so two hypergraphs with the same
//! vertex order and the same edge sets compare equal. Vertex order is kept as
//! given since it is meaningful to callers (orderings, point ids).

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "HypergraphDoc", into = "HypergraphDoc")]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: Vec<Vec<String>>,
}

/// Wire form shared by hypergraph and graph files.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<Vec<String>>,
}

impl TryFrom<HypergraphDoc> for Hypergraph {
    type Error = Error;
    fn try_from(doc: HypergraphDoc) -> Result<Self> {
        Hypergraph::new(doc.vertices, doc.edges)
    }
}

impl From<Hypergraph> for HypergraphDoc {
    fn from(h: Hypergraph) -> Self {
        HypergraphDoc {
            vertices: h.vertices,
            edges: h.edges,
        }
    }
}

fn check_distinct(vertices: &[String]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for v in vertices {
        if !seen.insert(v.as_str()) {
            return Err(Error::DuplicateVertex(v.clone()));
        }
    }
    Ok(())
}

impl Hypergraph {
    /// Validates and canonicalizes. Repeated hyperedges collapse to one.
    pub fn new<V, E, L>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = L>,
        L: IntoIterator,
        L::Item: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        check_distinct(&vertices)?;
        let known: BTreeSet<&str> = vertices.iter().map(String::as_str).collect();
        let mut canonical = BTreeSet::new();
        for edge in edges {
            let members: BTreeSet<String> = edge.into_iter().map(Into::into).collect();
            if let Some(unknown) = members.iter().find(|m| !known.contains(m.as_str())) {
                return Err(Error::UnknownVertex(unknown.clone()));
            }
            if members.len() < 2 {
                return Err(Error::SingletonEdge(members.into_iter().collect()));
            }
            canonical.insert(members.into_iter().collect::<Vec<_>>());
        }
        Ok(Hypergraph {
            vertices,
            edges: canonical.into_iter().collect(),
        })
    }

    /// The hypergraph with the given vertices and no hyperedges.
    pub fn edgeless<V>(vertices: V) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        Hypergraph::new(vertices, Vec::<Vec<String>>::new())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Vec<String>] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, label: &str) -> bool {
        self.vertices.iter().any(|v| v == label)
    }

    pub fn has_edge<S: AsRef<str>>(&self, members: &[S]) -> bool {
        let mut key: Vec<String> = members.iter().map(|m| m.as_ref().to_string()).collect();
        key.sort();
        key.dedup();
        self.edges.binary_search(&key).is_ok()
    }

    /// Label to position in [`Hypergraph::vertices`].
    pub fn vertex_index(&self) -> HashMap<&str, usize> {
        self.vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect()
    }

    /// Hyperedges as sorted lists of vertex positions.
    pub fn indexed_edges(&self) -> Vec<Vec<usize>> {
        let index = self.vertex_index();
        self.edges
            .iter()
            .map(|e| {
                let mut ids: Vec<usize> = e.iter().map(|m| index[m.as_str()]).collect();
                ids.sort_unstable();
                ids
            })
            .collect()
    }

    /// Trace on `subset`: every hyperedge is intersected with the subset and
    /// kept when at least two members survive. The result lists the subset's
    /// vertices in this hypergraph's order.
    pub fn trace<S: AsRef<str>>(&self, subset: &[S]) -> Result<Hypergraph> {
        let mut keep = BTreeSet::new();
        for s in subset {
            let s = s.as_ref();
            if !self.contains_vertex(s) {
                return Err(Error::UnknownVertex(s.to_string()));
            }
            keep.insert(s);
        }
        let vertices: Vec<String> = self
            .vertices
            .iter()
            .filter(|v| keep.contains(v.as_str()))
            .cloned()
            .collect();
        let edges = self.edges.iter().filter_map(|e| {
            let cut: Vec<String> = e
                .iter()
                .filter(|m| keep.contains(m.as_str()))
                .cloned()
                .collect();
            (cut.len() >= 2).then_some(cut)
        });
        Hypergraph::new(vertices, edges)
    }

    pub fn isolated_vertices(&self) -> BTreeSet<String> {
        let covered: BTreeSet<&str> = self.edges.iter().flatten().map(String::as_str).collect();
        self.vertices
            .iter()
            .filter(|v| !covered.contains(v.as_str()))
            .cloned()
            .collect()
    }

    /// Graph joining every two vertices that share a hyperedge.
    pub fn two_section(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            for (i, u) in e.iter().enumerate() {
                for v in &e[i + 1..] {
                    pairs.insert((u.clone(), v.clone()));
                }
            }
        }
        Graph {
            vertices: self.vertices.clone(),
            edges: pairs.into_iter().collect(),
        }
    }

    pub fn is_uniform(&self, size: usize) -> bool {
        self.edges.iter().all(|e| e.len() == size)
    }

    /// Same hypergraph with vertices listed in `order`, which must be a
    /// permutation of the vertex set.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Hypergraph> {
        let order: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        let given: BTreeSet<&str> = order.iter().map(String::as_str).collect();
        let own: BTreeSet<&str> = self.vertices.iter().map(String::as_str).collect();
        if given != own || order.len() != self.vertices.len() {
            return Err(Error::BadOrdering(format!("{order:?}")));
        }
        Ok(Hypergraph {
            vertices: order,
            edges: self.edges.clone(),
        })
    }

    /// Degree signature of each vertex: the sorted sizes of its hyperedges.
    pub(crate) fn size_profiles(n: usize, edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut profiles = vec![Vec::new(); n];
        for e in edges {
            for &v in e {
                profiles[v].push(e.len());
            }
        }
        for p in &mut profiles {
            p.sort_unstable();
        }
        profiles
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "HypergraphDoc", into = "HypergraphDoc")]
pub struct Graph {
    vertices: Vec<String>,
    /// Canonical pairs `(u, v)` with `u < v`, sorted.
    edges: Vec<(String, String)>,
}

impl TryFrom<HypergraphDoc> for Graph {
    type Error = Error;
    fn try_from(doc: HypergraphDoc) -> Result<Self> {
        let mut pairs = Vec::with_capacity(doc.edges.len());
        for e in doc.edges {
            match <[String; 2]>::try_from(e) {
                Ok([u, v]) => pairs.push((u, v)),
                Err(e) => return Err(Error::NotAGraphEdge(e)),
            }
        }
        Graph::new(doc.vertices, pairs)
    }
}

impl From<Graph> for HypergraphDoc {
    fn from(g: Graph) -> Self {
        HypergraphDoc {
            vertices: g.vertices,
            edges: g.edges.into_iter().map(|(u, v)| vec![u, v]).collect(),
        }
    }
}

impl Graph {
    pub fn new<V, S, T>(vertices: V, edges: impl IntoIterator<Item = (S, T)>) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        S: Into<String>,
        T: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        check_distinct(&vertices)?;
        let known: BTreeSet<&str> = vertices.iter().map(String::as_str).collect();
        let mut pairs = BTreeSet::new();
        for (u, v) in edges {
            let (u, v) = (u.into(), v.into());
            for end in [&u, &v] {
                if !known.contains(end.as_str()) {
                    return Err(Error::UnknownVertex(end.clone()));
                }
            }
            if u == v {
                return Err(Error::SingletonEdge(vec![u]));
            }
            pairs.insert(if u < v { (u, v) } else { (v, u) });
        }
        Ok(Graph {
            vertices,
            edges: pairs.into_iter().collect(),
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(String, String)] {
        &self.edges
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|(a, b)| (a.as_str(), b.as_str()).cmp(&key))
            .is_ok()
    }

    /// Adjacency lists over vertex positions.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (u, v) in &self.edges {
            let (a, b) = (index[u.as_str()], index[v.as_str()]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// The graph read as a 2-uniform hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|(u, v)| vec![u.clone(), v.clone()]).collect(),
        }
    }

    /// Reads a 2-uniform hypergraph as a graph.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Graph> {
        Graph::try_from(HypergraphDoc::from(h.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{generate_pattern, PatternKind};

    fn h(vertices: &[&str], edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::new(vertices.iter().copied(), edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = h(&["a", "b", "c"], &[&["a", "b"], &["c", "b"], &["b", "a"]]);
        assert_eq!(g.edges(), &[vec!["a", "b"], vec!["b", "c"]]);
    }

    #[test]
    fn construction_errors() {
        let single = Hypergraph::new(["a", "b"], [["a"]]);
        assert!(matches!(single, Err(Error::SingletonEdge(_))));
        let loop_edge = Hypergraph::new(["a", "b"], [["a", "a"]]);
        assert!(matches!(loop_edge, Err(Error::SingletonEdge(_))));
        let unknown = Hypergraph::new(["a", "b"], [["a", "z"]]);
        assert_eq!(unknown, Err(Error::UnknownVertex("z".into())));
        let dup = Hypergraph::new(["a", "b", "a"], Vec::<Vec<&str>>::new());
        assert_eq!(dup, Err(Error::DuplicateVertex("a".into())));
        let whole = h(&["a", "b", "c", "d"], &[&["a", "b", "c", "d"]]);
        assert_eq!(whole.edge_count(), 1);
    }

    #[test]
    fn trace_examples() {
        let m1 = generate_pattern(PatternKind::m(1)).unwrap();
        assert_eq!(m1.trace(m1.vertices()).unwrap(), m1);

        let o2 = generate_pattern(PatternKind::o2()).unwrap();
        let t = o2.trace(&["y", "z", "v"]).unwrap();
        assert_eq!(t.edges(), &[vec!["v", "y", "z"], vec!["y", "z"]]);

        let g = h(&["a", "b", "c", "d"], &[&["a", "b", "c"], &["a", "b", "d"]]);
        let t = g.trace(&["a", "b"]).unwrap();
        assert_eq!(t.edges(), &[vec!["a", "b"]]);

        assert_eq!(g.trace(&["a", "q"]), Err(Error::UnknownVertex("q".into())));
    }

    #[test]
    fn isolated_examples() {
        let g = h(&["a", "b", "c"], &[&["a", "b"]]);
        assert_eq!(g.isolated_vertices(), BTreeSet::from(["c".to_string()]));
        let e = Hypergraph::edgeless(["a", "b"]).unwrap();
        assert_eq!(e.isolated_vertices().len(), 2);
        let m1 = generate_pattern(PatternKind::m(1)).unwrap();
        assert!(m1.isolated_vertices().is_empty());
    }

    #[test]
    fn two_section_examples() {
        let o1 = generate_pattern(PatternKind::o1()).unwrap();
        let g = o1.two_section();
        let expected = Graph::new(
            o1.vertices().iter().cloned(),
            [("x", "x'"), ("y", "y'"), ("z", "z'"), ("x", "y"), ("x", "z"), ("y", "z")],
        )
        .unwrap();
        assert_eq!(g, expected);

        let c4 = generate_pattern(PatternKind::c(4)).unwrap();
        assert_eq!(c4.two_section().to_hypergraph(), c4);

        let tri = h(&["a", "b", "c"], &[&["a", "b", "c"]]).two_section();
        assert_eq!(tri.edges().len(), 3);
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let doc = r#"{"vertices":["c","a","b"],"edges":[["b","a"],["c","b","a"],["a","b"]]}"#;
        let g: Hypergraph = serde_json::from_str(doc).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"vertices":["c","a","b"],"edges":[["a","b"],["a","b","c"]]}"#
        );
        let bad = r#"{"vertices":["a"],"edges":[["a"]]}"#;
        assert!(serde_json::from_str::<Hypergraph>(bad).is_err());
    }

    #[test]
    fn graph_files_need_pairs() {
        let ok: Graph = serde_json::from_str(r#"{"vertices":["a","b"],"edges":[["b","a"]]}"#).unwrap();
        assert!(ok.has_edge("a", "b"));
        let bad = serde_json::from_str::<Graph>(r#"{"vertices":["a","b","c"],"edges":[["a","b","c"]]}"#);
        assert!(bad.is_err());
    }
}
