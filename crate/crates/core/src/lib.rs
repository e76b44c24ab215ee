//! Competition hypergraphs of doubly partial orders.
//!
//! A finite set of labelled points in the plane defines a digraph with an arc
//! `u → v` whenever `v` is strictly below and strictly left of `u`. This crate
//! builds the competition hypergraph and competition graph of such point
//! sets, decides whether hypergraphs are interval or chordal, searches for the
//! forbidden patterns `C_n`, `M_n`, `F_n`, `O_1`, `O_2`, and constructs point
//! sets realizing interval hypergraphs and the `M_n` / `F_n` gadgets.
//!
//! All coordinates are exact rationals.
//!
//! ```
//! use dpo_hypergraphs::{build_dpo, competition_hypergraph, is_interval};
//! use dpo_hypergraphs::patterns::{gadget_dpo, GadgetKind};
//!
//! let dpo = build_dpo(gadget_dpo(GadgetKind::M, 2).unwrap()).unwrap();
//! let ch = competition_hypergraph(&dpo).hypergraph;
//! assert!(!is_interval(&ch).interval);
//! ```

pub mod chordal;
pub mod cli;
pub mod competition;
pub mod error;
pub mod geometry;
pub mod hypergraph;
pub mod interval;
pub mod isomorphism;
pub mod patterns;
pub mod random;
pub mod synthesis;
pub mod witness;

pub use chordal::{is_chordal, ChordalityReport, CycleWitness};
pub use competition::{
    build_dpo, competition_graph, competition_hypergraph, in_neighborhood, verify_structure_lemmas,
    CompetitionResult, DoublyPartialOrder, LemmaViolation, StructureLemma,
};
pub use error::{Error, Result};
pub use geometry::{classify_pair, down_right, strictly_dominated, PairClass, Point2, Rational};
pub use hypergraph::{Graph, Hypergraph};
pub use interval::{is_interval, is_interval_bruteforce, is_interval_graph, IntervalCertificate};
pub use isomorphism::isomorphism;
pub use patterns::{
    counterexample_hypergraph, gadget_dpo, generate_pattern, generate_staircase, GadgetKind,
    PatternFamily, PatternKind,
};
pub use synthesis::{
    check_realization, embed_interval_hypergraph, search_realization, RealizationReport,
    RealizationSearch,
};
pub use witness::{find_forbidden_witness, Containment, PatternWitness, WitnessSearch};
