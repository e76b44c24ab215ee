//! Doubly partial orders and their competition structures.
//!
//! The digraph on a point set has an arc `u → v` exactly when `v ≺ u`. The
//! in-neighborhood of `v` is therefore the set of points strictly dominating
//! it, and the competition hypergraph collects every in-neighborhood with at
//! least two members.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{down_right, strictly_dominated, Point2};
use crate::hypergraph::{Graph, Hypergraph};

/// A labelled point set; arcs are derived from coordinates on demand.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "PointSetDoc", into = "PointSetDoc")]
pub struct DoublyPartialOrder {
    points: Vec<Point2>,
}

/// Wire form of a point-set file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointSetDoc {
    pub points: Vec<Point2>,
}

impl TryFrom<PointSetDoc> for DoublyPartialOrder {
    type Error = Error;
    fn try_from(doc: PointSetDoc) -> Result<Self> {
        build_dpo(doc.points)
    }
}

impl From<DoublyPartialOrder> for PointSetDoc {
    fn from(d: DoublyPartialOrder) -> Self {
        PointSetDoc { points: d.points }
    }
}

/// Validates that ids and positions are pairwise distinct.
pub fn build_dpo(points: Vec<Point2>) -> Result<DoublyPartialOrder> {
    let mut ids = BTreeSet::new();
    for p in &points {
        if !ids.insert(p.id.as_str()) {
            return Err(Error::DuplicateId(p.id.clone()));
        }
    }
    let mut positions: HashMap<(&_, &_), &str> = HashMap::new();
    for p in &points {
        if let Some(first) = positions.insert((&p.x, &p.y), p.id.as_str()) {
            return Err(Error::DuplicatePoint {
                first: first.to_string(),
                second: p.id.clone(),
            });
        }
    }
    Ok(DoublyPartialOrder { points })
}

/// `dominators[v]` lists the positions of points strictly dominating `v`.
fn dominators(points: &[Point2]) -> Vec<Vec<usize>> {
    (0..points.len())
        .map(|v| {
            (0..points.len())
                .filter(|&u| strictly_dominated(&points[v], &points[u]))
                .collect()
        })
        .collect()
}

impl DoublyPartialOrder {
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ids(&self) -> Vec<String> {
        self.points.iter().map(|p| p.id.clone()).collect()
    }

    pub fn point(&self, id: &str) -> Option<&Point2> {
        self.points.iter().find(|p| p.id == id)
    }

    /// Whether `(from, to)` is an arc, i.e. `to ≺ from`.
    pub fn has_arc(&self, from: &str, to: &str) -> Result<bool> {
        let f = self.point(from).ok_or_else(|| Error::UnknownVertex(from.into()))?;
        let t = self.point(to).ok_or_else(|| Error::UnknownVertex(to.into()))?;
        Ok(strictly_dominated(t, f))
    }

    /// All arcs `(from, to)` in point order.
    pub fn arcs(&self) -> Vec<(String, String)> {
        let mut arcs = Vec::new();
        for u in &self.points {
            for v in &self.points {
                if strictly_dominated(v, u) {
                    arcs.push((u.id.clone(), v.id.clone()));
                }
            }
        }
        arcs
    }
}

pub fn in_neighborhood(dpo: &DoublyPartialOrder, v: &str) -> Result<BTreeSet<String>> {
    let target = dpo.point(v).ok_or_else(|| Error::UnknownVertex(v.into()))?;
    Ok(dpo
        .points
        .iter()
        .filter(|u| strictly_dominated(target, u))
        .map(|u| u.id.clone())
        .collect())
}

/// Competition hypergraph together with, for each hyperedge, the points
/// whose in-neighborhood it is.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompetitionResult {
    pub hypergraph: Hypergraph,
    /// Keyed by the canonical (sorted) hyperedge.
    pub witnesses: BTreeMap<Vec<String>, BTreeSet<String>>,
}

pub fn competition_hypergraph(dpo: &DoublyPartialOrder) -> CompetitionResult {
    let dom = dominators(&dpo.points);
    let mut witnesses: BTreeMap<Vec<String>, BTreeSet<String>> = BTreeMap::new();
    for (v, above) in dom.iter().enumerate() {
        if above.len() < 2 {
            continue;
        }
        let mut edge: Vec<String> = above.iter().map(|&u| dpo.points[u].id.clone()).collect();
        edge.sort();
        witnesses
            .entry(edge)
            .or_default()
            .insert(dpo.points[v].id.clone());
    }
    let hypergraph = Hypergraph::new(dpo.ids(), witnesses.keys().cloned())
        .expect("in-neighborhoods are valid hyperedges");
    CompetitionResult {
        hypergraph,
        witnesses,
    }
}

/// Two points are adjacent when some point is strictly dominated by both.
pub fn competition_graph(dpo: &DoublyPartialOrder) -> Graph {
    let dom = dominators(&dpo.points);
    let mut pairs = BTreeSet::new();
    for above in &dom {
        for (i, &u) in above.iter().enumerate() {
            for &w in &above[i + 1..] {
                pairs.insert((dpo.points[u].id.clone(), dpo.points[w].id.clone()));
            }
        }
    }
    Graph::new(dpo.ids(), pairs).expect("pairs of distinct points")
}

/// The four facts about `↘` every competition hypergraph of a point set
/// satisfies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum StructureLemma {
    /// Hyperedges separating `x` from `y` in both directions force
    /// `x ↘ y` or `y ↘ x`.
    SeparatedPair,
    /// `x ↘ y ↘ z`: every hyperedge holding `x` and `z` holds `y` and all of
    /// `y`'s in-neighbors.
    BetweenContained,
    /// `x ↘ y`, `z ≺ x`, `z ⊀ y` imply `z ↘ y`.
    BelowLeft,
    /// `x ↘ y`, `z ≺ y`, `z ⊀ x` imply `x ↘ z`.
    BelowRight,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub lemma: StructureLemma,
    /// `[x, y]` or `[x, y, z]`; for `BetweenContained` a fourth entry names
    /// the hyperedge's witness.
    pub vertices: Vec<String>,
}

/// Exhaustively checks the four structural facts over all vertex tuples and
/// hyperedges. Returns every violation found (expected: none).
pub fn verify_structure_lemmas(dpo: &DoublyPartialOrder) -> Vec<LemmaViolation> {
    let pts = &dpo.points;
    let n = pts.len();
    let dom = dominators(pts);
    let id = |i: usize| pts[i].id.clone();
    // hyperedges as membership vectors, with one witness each
    let mut edges: Vec<(Vec<bool>, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (v, above) in dom.iter().enumerate() {
        if above.len() >= 2 && seen.insert(above.clone()) {
            let mut member = vec![false; n];
            for &u in above {
                member[u] = true;
            }
            edges.push((member, v));
        }
    }
    let prec = |a: usize, b: usize| strictly_dominated(&pts[a], &pts[b]);
    let dr = |a: usize, b: usize| down_right(&pts[a], &pts[b]);
    let mut violations = Vec::new();

    for x in 0..n {
        for y in (x + 1)..n {
            let sep_xy = edges.iter().any(|(m, _)| m[x] && !m[y]);
            let sep_yx = edges.iter().any(|(m, _)| m[y] && !m[x]);
            if sep_xy && sep_yx && !dr(x, y) && !dr(y, x) {
                violations.push(LemmaViolation {
                    lemma: StructureLemma::SeparatedPair,
                    vertices: vec![id(x), id(y)],
                });
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            if !dr(x, y) {
                continue;
            }
            for z in 0..n {
                if z == x || z == y {
                    continue;
                }
                if dr(y, z) {
                    for (member, witness) in &edges {
                        if member[x] && member[z] {
                            let holds = member[y] && dom[y].iter().all(|&u| member[u]);
                            if !holds {
                                violations.push(LemmaViolation {
                                    lemma: StructureLemma::BetweenContained,
                                    vertices: vec![id(x), id(y), id(z), id(*witness)],
                                });
                            }
                        }
                    }
                }
                if prec(z, x) && !prec(z, y) && !dr(z, y) {
                    violations.push(LemmaViolation {
                        lemma: StructureLemma::BelowLeft,
                        vertices: vec![id(x), id(y), id(z)],
                    });
                }
                if prec(z, y) && !prec(z, x) && !dr(x, z) {
                    violations.push(LemmaViolation {
                        lemma: StructureLemma::BelowRight,
                        vertices: vec![id(x), id(y), id(z)],
                    });
                }
            }
        }
    }
    violations
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Rational;
    use crate::patterns::{gadget_dpo, generate_staircase, GadgetKind};

    fn staircase_dpo(n: usize) -> DoublyPartialOrder {
        let (a, b) = generate_staircase(n).unwrap();
        build_dpo(a.into_iter().chain(b).collect()).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn build_examples() {
        let d = build_dpo(vec![Point2::int("p", 0, 0), Point2::int("q", 1, 1)]).unwrap();
        assert_eq!(d.arcs(), vec![("q".to_string(), "p".to_string())]);
        let d = build_dpo(vec![Point2::int("p", 0, 2), Point2::int("q", 2, 0)]).unwrap();
        assert!(d.arcs().is_empty());
        let dup = build_dpo(vec![Point2::int("p", 0, 0), Point2::int("q", 0, 0)]);
        assert!(matches!(dup, Err(Error::DuplicatePoint { .. })));
        let dup_id = build_dpo(vec![Point2::int("p", 0, 0), Point2::int("p", 1, 0)]);
        assert_eq!(dup_id, Err(Error::DuplicateId("p".into())));
    }

    #[test]
    fn in_neighborhood_examples() {
        let d = staircase_dpo(1);
        // b0 = (-1/3, 2/3) is dominated by (0,2) and (1,1)
        assert_eq!(in_neighborhood(&d, "b0").unwrap(), set(&["a0", "a1"]));
        assert!(in_neighborhood(&d, "a1").unwrap().is_empty());
        assert!(in_neighborhood(&d, "zz").is_err());

        let d3 = build_dpo(gadget_dpo(GadgetKind::M, 3).unwrap()).unwrap();
        let expected = set(&["a1", "a2", "a3", "b1", "b2"]);
        assert_eq!(in_neighborhood(&d3, "o").unwrap(), expected);
        // the two excluded points of each staircase are the extreme ones
        assert_eq!(d3.point("a0").unwrap().y, Rational::from(4));
        assert_eq!(d3.point("b3").unwrap().x, Rational::new(8, 3).unwrap());
    }

    #[test]
    fn staircase_hypergraph_is_path() {
        let result = competition_hypergraph(&staircase_dpo(1));
        assert_eq!(result.hypergraph.edges(), &[vec!["a0", "a1"], vec!["a1", "a2"]]);
        assert_eq!(result.hypergraph.isolated_vertices(), set(&["b0", "b1"]));
        assert_eq!(result.witnesses[&vec!["a0".to_string(), "a1".to_string()]], set(&["b0"]));
    }

    #[test]
    fn single_point_hypergraph() {
        let d = build_dpo(vec![Point2::int("p", 3, 3)]).unwrap();
        let r = competition_hypergraph(&d);
        assert_eq!(r.hypergraph.vertex_count(), 1);
        assert_eq!(r.hypergraph.edge_count(), 0);
    }

    #[test]
    fn d1_hypergraph() {
        let d = build_dpo(gadget_dpo(GadgetKind::M, 1).unwrap()).unwrap();
        let r = competition_hypergraph(&d);
        assert_eq!(
            r.hypergraph.edges(),
            &[vec!["a0", "a1"], vec!["a1", "a2"], vec!["a1", "c"]]
        );
        assert_eq!(r.witnesses[&vec!["a1".to_string(), "c".to_string()]], set(&["o"]));
    }

    #[test]
    fn competition_graph_examples() {
        let g = competition_graph(&staircase_dpo(1));
        assert_eq!(
            g.edges(),
            &[("a0".to_string(), "a1".to_string()), ("a1".to_string(), "a2".to_string())]
        );
        let lonely = build_dpo(vec![Point2::int("p", 0, 2), Point2::int("q", 2, 0)]).unwrap();
        assert!(competition_graph(&lonely).edges().is_empty());
        let g2 = competition_graph(&staircase_dpo(2));
        let pairs: Vec<(&str, &str)> = g2.edges().iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
        assert_eq!(pairs, [("a0", "a1"), ("a1", "a2"), ("a2", "a3")]);
    }

    #[test]
    fn lemmas_hold_on_gadgets() {
        assert!(verify_structure_lemmas(&staircase_dpo(1)).is_empty());
        let single = build_dpo(vec![Point2::int("p", 0, 0)]).unwrap();
        assert!(verify_structure_lemmas(&single).is_empty());
        let f3 = build_dpo(gadget_dpo(GadgetKind::F, 3).unwrap()).unwrap();
        assert_eq!(f3.len(), 11);
        assert!(verify_structure_lemmas(&f3).is_empty());
    }

    #[test]
    fn json_points_file() {
        let doc = r#"{"points":[{"id":"a0","x":"0","y":"2"},{"id":"b0","x":"-1/3","y":"2/3"}]}"#;
        let d: DoublyPartialOrder = serde_json::from_str(doc).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(serde_json::to_string(&d).unwrap(), doc);
        let dup = r#"{"points":[{"id":"a","x":"0","y":"2"},{"id":"b","x":"0","y":"4/2"}]}"#;
        assert!(serde_json::from_str::<DoublyPartialOrder>(dup).is_err());
    }
}
