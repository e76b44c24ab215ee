//! Interval recognition for hypergraphs and graphs.

use dpo_hypergraphs::interval::is_valid_ordering;
use dpo_hypergraphs::{
    counterexample_hypergraph, generate_pattern, is_interval, is_interval_bruteforce, is_interval_graph,
    Graph, PatternKind,
};

fn main() -> dpo_hypergraphs::Result<()> {
    let h = counterexample_hypergraph();
    let cert = is_interval(&h);
    let ordering = cert.ordering.expect("interval");
    println!("counterexample: ordering {ordering:?}, valid = {}", is_valid_ordering(&h, &ordering));

    for kind in [PatternKind::c(4), PatternKind::m(2), PatternKind::f(1), PatternKind::o1()] {
        let p = generate_pattern(kind)?;
        println!(
            "{kind}: solver {}, brute force {}",
            is_interval(&p).interval,
            is_interval_bruteforce(&p)?.interval
        );
    }

    let claw = Graph::new(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")])?;
    let c4 = Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])?;
    println!("claw is an interval graph: {}", is_interval_graph(&claw)?);
    println!("4-cycle is an interval graph: {}", is_interval_graph(&c4)?);
    Ok(())
}
