//! Random search for point sets realizing a hypergraph exactly, up to
//! isolated points.
//!
//!     cargo run --release --example realization

use dpo_hypergraphs::{counterexample_hypergraph, search_realization, Hypergraph, RealizationSearch};

fn main() -> dpo_hypergraphs::Result<()> {
    let path = Hypergraph::new(["u", "v", "w"], [["u", "v"], ["v", "w"]])?;
    let found = search_realization(&path, RealizationSearch::new(4, 2, 100_000, 1))?;
    println!("path: realized {}", found.realized);
    if let (Some(points), Some(embedding)) = (&found.points, &found.embedding) {
        for p in points {
            println!("  {} ({}, {})", p.id, p.x, p.y);
        }
        println!("  embedding {embedding:?}");
    }

    let h = counterexample_hypergraph();
    for extra in 0..=2 {
        let params = RealizationSearch::new(8, extra, 20_000, 1).threads(4);
        println!("counterexample, {extra} extra points: realized {}", search_realization(&h, params)?.realized);
    }
    Ok(())
}
