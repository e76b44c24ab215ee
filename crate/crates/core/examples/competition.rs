//! Competition hypergraph and competition graph of a point set read from a
//! JSON file, or of the M_3 gadget when no file is given.
//!
//!     cargo run --example competition -- points.json

use dpo_hypergraphs::patterns::{gadget_dpo, GadgetKind};
use dpo_hypergraphs::{build_dpo, competition_graph, competition_hypergraph, DoublyPartialOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dpo: DoublyPartialOrder = match std::env::args().nth(1) {
        Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        None => build_dpo(gadget_dpo(GadgetKind::M, 3)?)?,
    };
    let result = competition_hypergraph(&dpo);
    println!("{} points, {} hyperedges", dpo.len(), result.hypergraph.edge_count());
    for (edge, by) in &result.witnesses {
        let by: Vec<_> = by.iter().map(String::as_str).collect();
        println!("  {{{}}}  in-neighborhood of {}", edge.join(", "), by.join(", "));
    }
    let g = competition_graph(&dpo);
    println!("competition graph: {} edges", g.edges().len());
    Ok(())
}
