//! Seeded generators for point sets and hypergraphs.

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::competition::{build_dpo, DoublyPartialOrder};
use crate::geometry::Point2;
use crate::hypergraph::Hypergraph;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct points with integer coordinates in `0 .. 4·count`,
/// labelled `p0, p1, …`. Integer grids of that side realize every order
/// type of `count` points.
pub fn random_points<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<Point2> {
    let side = 4 * count.max(1);
    sample(rng, side * side, count)
        .into_iter()
        .enumerate()
        .map(|(i, cell)| Point2::int(format!("p{i}"), (cell % side) as i64, (cell / side) as i64))
        .collect()
}

/// A point set with between 1 and `max_points` points.
pub fn random_dpo<R: Rng + ?Sized>(rng: &mut R, max_points: usize) -> DoublyPartialOrder {
    let count = rng.random_range(1..=max_points.max(1));
    build_dpo(random_points(rng, count)).expect("sampled cells are distinct")
}

/// Arbitrary hypergraph on 1 to `max_vertices` vertices `x0, x1, …` with up
/// to `max_edges` random hyperedges.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..rng.random_range(0..=max_edges) {
            let size = rng.random_range(2..=n);
            let members: Vec<String> = sample(rng, n, size).into_iter().map(|v| labels[v].clone()).collect();
            edges.push(members);
        }
    }
    Hypergraph::new(labels, edges).expect("generated edges are valid")
}

/// Interval hypergraph on 1 to `max_vertices` vertices: hyperedges are runs
/// of a hidden ordering, and the vertex list is shuffled so the ordering is
/// not given away.
pub fn random_interval_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> Hypergraph {
    let n = rng.random_range(1..=max_vertices.max(1));
    let mut hidden: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    hidden.shuffle(rng);
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..rng.random_range(0..=max_edges) {
            let start = rng.random_range(0..n - 1);
            let end = rng.random_range(start + 1..n);
            edges.push(hidden[start..=end].to_vec());
        }
    }
    let mut listed = hidden.clone();
    listed.shuffle(rng);
    Hypergraph::new(listed, edges).expect("runs are valid hyperedges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::is_interval;

    #[test]
    fn reproducible() {
        let a = random_dpo(&mut seeded(5), 9);
        let b = random_dpo(&mut seeded(5), 9);
        assert_eq!(a, b);
    }

    #[test]
    fn points_stay_on_grid() {
        let mut rng = seeded(1);
        for _ in 0..50 {
            let d = random_dpo(&mut rng, 9);
            let side = 4 * d.len() as i64;
            assert!((1..=9).contains(&d.len()));
            for p in d.points() {
                assert!(p.x.is_integer() && p.y.is_integer());
                assert!(p.x >= 0.into() && p.x < side.into());
            }
        }
    }

    #[test]
    fn interval_generator_is_interval() {
        let mut rng = seeded(2);
        for _ in 0..100 {
            assert!(is_interval(&random_interval_hypergraph(&mut rng, 8, 6)).interval);
        }
    }
}
