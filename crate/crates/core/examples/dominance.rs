//! Classify pairs of points by dominance and the down-right relation.

use dpo_hypergraphs::{classify_pair, Point2, Rational};

fn main() -> dpo_hypergraphs::Result<()> {
    let third = |n: i64| Rational::new(n, 3);
    let points = [
        Point2::int("p", 0, 0),
        Point2::int("q", 1, 1),
        Point2::int("r", 0, 2),
        Point2::new("s", third(-1)?, third(2)?),
    ];
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            println!("{} ({}, {}) vs {} ({}, {}): {:?}", p.id, p.x, p.y, q.id, q.x, q.y, classify_pair(p, q)?);
        }
    }
    Ok(())
}
