//! Point sets whose competition hypergraph contains a given interval
//! hypergraph.

use dpo_hypergraphs::{
    build_dpo, check_realization, competition_hypergraph, counterexample_hypergraph,
    embed_interval_hypergraph, is_interval, isomorphism,
};

fn main() -> dpo_hypergraphs::Result<()> {
    let h = counterexample_hypergraph();
    let ordering = is_interval(&h).ordering.expect("interval");
    let points = embed_interval_hypergraph(&h, &ordering)?;
    for p in &points {
        println!("{:>16}  ({}, {})", p.id, p.x, p.y);
    }
    let dpo = build_dpo(points)?;
    let ch = competition_hypergraph(&dpo).hypergraph;
    let trace = ch.trace(h.vertices())?;
    println!("trace on the vertices is the input: {}", isomorphism(&trace, &h).is_some());
    println!("competition hypergraph has {} hyperedges against {}", ch.edge_count(), h.edge_count());
    println!("realizes the input up to isolated points: {}", check_realization(&dpo, &h).realized);
    Ok(())
}
