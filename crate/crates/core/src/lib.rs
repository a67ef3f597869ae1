//! Structural invariants of finite semigroups, a three-valued predicate
//! engine for symbolically described commutative semigroups, and a
//! classifier placing commutative semigroups into the hierarchy of
//! (ideally, projectively, absolutely) closed semigroups.
//!
//! The crate is organised bottom-up:
//!
//! - [`kernel`]: Cayley tables, subsets, congruences, quotients, extensions.
//! - [`invariants`]: idempotents, maximal subgroups, centers, viable
//!   idempotents, the semilattice reflection, root sets and exponents.
//! - [`polynomials`]: semigroup polynomials, polybounded covers and
//!   polyfinite witnesses.
//! - [`symbolic`]: a small DSL for possibly infinite semigroups and the rule
//!   engine answering predicates about them.
//! - [`classifier`]: closedness verdicts with the conditions they rest on.
//! - [`oracle`]: exhaustive enumeration of small semigroups and the
//!   law-checking suite run over them.

pub mod classifier;
pub mod invariants;
pub mod kernel;
pub mod oracle;
pub mod polynomials;
pub mod symbolic;

pub use kernel::{ElementSet, FiniteSemigroup, KernelError, SemigroupMap};
pub use symbolic::{Predicate, SymbolicSemigroup, Truth, Verdict};
