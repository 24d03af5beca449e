//! Exact arithmetic for braid monodromy factorizations.
//!
//! The crate provides, in layers:
//!
//! - words in the Artin braid group `B_d` with Garside left-greedy normal
//!   forms as the equality oracle ([`braid`], [`garside`]);
//! - the Artin action on a free group, symmetric-group valued monodromy
//!   morphisms, and the liftable braid subgroup test ([`free_group`],
//!   [`monodromy`]);
//! - factorizations of `Delta^{2n}` into powers of half twists with the
//!   Hurwitz-move calculus and orbit/equivalence search ([`factorization`],
//!   [`search`]);
//! - the dictionary from branch-curve data `(d, nu, kappa, N)` to the
//!   Chern invariants of the associated branched cover ([`invariants`]);
//! - plain-text formats for braid words, monodromy morphisms and
//!   factorization files ([`text`]).
//!
//! All values are immutable and all operations are pure; everything can be
//! shared across threads. With the default `parallel` feature the orbit
//! search expands breadth-first frontiers on a rayon pool; results are
//! identical to the sequential fallback state-for-state.

pub mod braid;
pub mod error;
pub mod factorization;
pub mod free_group;
pub mod garside;
pub mod invariants;
pub mod monodromy;
pub mod perm;
pub mod search;
pub mod text;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use factorization::{Factor, FactorKind, Factorization, Profile};
pub use free_group::FreeGroupWord;
pub use garside::{normal_form, words_equal, CanonicalForm};
pub use invariants::{BranchCurveData, ChernSet, GeographyReport};
pub use monodromy::{artin_action, MonodromyMorphism, MonodromyReport};
pub use perm::Permutation;
pub use search::{
    hurwitz_equivalent, hurwitz_orbit, Direction, EquivOptions, Equivalence, Move, OrbitReport,
    SearchLimits, Witness,
};
