//! Arrow-simplicity of tournaments.
//!
//! A *module* of a tournament is a vertex set `C` such that every vertex
//! outside `C` either dominates all of `C` or is dominated by all of it. A
//! tournament is *simple* when its only modules are the empty set, the
//! singletons and the whole vertex set. The arrow-simplicity `s(T)` is the
//! fewest arcs whose reversal makes `T` non-simple (so `s(T) = 0` when `T`
//! already has a nontrivial module).
//!
//! The crate computes `s(T)` exactly with a certificate, builds the
//! extremal tournaments (Paley, vertex-deleted Paley, the one-vertex
//! extension, the skew-Hadamard bridge) and checks the known identities and
//! bounds on them.
//!
//! ```
//! use arrowsimp::{arrow_simplicity, paley_tournament};
//!
//! let t = paley_tournament(7)?;
//! let report = arrow_simplicity(&t)?;
//! assert_eq!(report.s, 3);
//! # Ok::<(), arrowsimp::Error>(())
//! ```

pub mod constructions;
mod error;
pub mod format;
pub mod modsimp;
pub mod tournament;
pub mod verify;

pub use constructions::{
    check_c1_c2, dr_pair_profile_check, dr_to_skew_hadamard, is_doubly_regular, lakhlifi_extend,
    lemma_lakhlifi_cases, near_regular_partition, paley_tournament, random_tournament,
    skew_hadamard_to_dr, NearRegularPartition, SkewHadamard,
};
pub use error::{Error, Result};
pub use format::{parse_matrix_text, parse_trn, to_matrix_text, to_trn, ParseError};
pub use modsimp::{
    arrow_simplicity, arrow_simplicity_with, cheap_witnesses, direct_oracle, is_module,
    is_simple, minimal_module_closure, module_cost, nontrivial_module, sc_lower_bound,
    theorem_bound, CheapWitnesses, DecomposabilityGraph, SearchOptions, SimplicityReport,
};
pub use tournament::{
    ArcSet, DegreeProfile, PairStats, Regularity, Tournament, VertexSet, MAX_VERTICES,
};
pub use verify::SuiteReport;
