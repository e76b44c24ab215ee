//! The M_n and F_n gadgets and the forbidden patterns found inside them.
//!
//!     cargo run --release --example gadgets -- 4

use dpo_hypergraphs::patterns::gadget_witness_ids;
use dpo_hypergraphs::{
    build_dpo, competition_hypergraph, gadget_dpo, generate_pattern, is_interval, isomorphism,
    GadgetKind, PatternFamily, WitnessSearch,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let top: usize = std::env::args().nth(1).map_or(Ok(4), |s| s.parse())?;
    for n in 1..=top {
        for kind in [GadgetKind::M, GadgetKind::F] {
            let dpo = build_dpo(gadget_dpo(kind, n)?)?;
            let ch = competition_hypergraph(&dpo).hypergraph;
            let family = match kind {
                GadgetKind::M => PatternFamily::M,
                GadgetKind::F => PatternFamily::F,
            };
            let witness = WitnessSearch::families(&[family]).run(&ch)?;
            let trace = ch.trace(&gadget_witness_ids(n)?)?;
            let expected = generate_pattern(kind.pattern(n))?;
            println!(
                "{:?} n={n}: {} points, interval {}, first witness {:?}, staircase trace is {}: {}",
                kind,
                dpo.len(),
                is_interval(&ch).interval,
                witness.map(|w| (w.pattern.to_string(), w.subset)),
                kind.pattern(n),
                isomorphism(&trace, &expected).is_some(),
            );
        }
    }
    Ok(())
}
