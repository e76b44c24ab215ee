//! Forbidden-pattern search under both containment modes.

use dpo_hypergraphs::{Containment, Hypergraph, PatternFamily, WitnessSearch};

fn main() -> dpo_hypergraphs::Result<()> {
    // A claw centred at p4, with p1 and p2 also sharing a larger hyperedge.
    let h = Hypergraph::new(
        ["p1", "p2", "p3", "p4", "p8"],
        [vec!["p1", "p2", "p4", "p8"], vec!["p1", "p4"], vec!["p2", "p4"], vec!["p3", "p4"]],
    )?;
    for containment in [Containment::Trace, Containment::Partial] {
        let found = WitnessSearch::families(&PatternFamily::ALL)
            .containment(containment)
            .run(&h)?;
        match found {
            Some(w) => println!("{containment:?}: {} on {:?}, map {:?}", w.pattern, w.subset, w.map),
            None => println!("{containment:?}: no forbidden pattern"),
        }
    }
    Ok(())
}
