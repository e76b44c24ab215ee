//! Hypergraph chordality: chordless cycles need one distinct hyperedge per
//! consecutive pair.

use dpo_hypergraphs::{is_chordal, Hypergraph};

fn main() -> dpo_hypergraphs::Result<()> {
    let square = Hypergraph::new(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"], ["a", "d"]])?;
    // one hyperedge covers all four vertices, so the cycle has a chord
    let covered = Hypergraph::new(
        ["a", "b", "c", "d"],
        [vec!["a", "b"], vec!["b", "c"], vec!["c", "d"], vec!["a", "d"], vec!["a", "b", "c", "d"]],
    )?;
    for (name, h) in [("square", &square), ("covered square", &covered)] {
        let report = is_chordal(h)?;
        match report.witness {
            Some(w) => println!("{name}: not chordal, cycle {:?} on edges {:?}", w.cycle, w.edges),
            None => println!("{name}: chordal"),
        }
    }
    Ok(())
}
