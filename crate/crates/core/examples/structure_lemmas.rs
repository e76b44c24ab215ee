//! Checks the structural facts about competition hyperedges on random point
//! sets.

use dpo_hypergraphs::random::{random_dpo, seeded};
use dpo_hypergraphs::verify_structure_lemmas;

fn main() {
    let mut rng = seeded(7);
    let mut violations = 0;
    for _ in 0..1000 {
        let dpo = random_dpo(&mut rng, 10);
        violations += verify_structure_lemmas(&dpo).len();
    }
    println!("1000 random point sets, {violations} violations");
}
