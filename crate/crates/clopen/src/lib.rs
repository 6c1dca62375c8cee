//! Finite rough-set theory with machine-checked structure.
//!
//! This crate implements Pawlak approximation spaces over finite universes and
//! the layers of structure that grow out of them: upper and lower
//! approximations as closure and interior operators, the clopen Alexandroff
//! topologies they induce, rough closure/interior operators in the abstract
//! (arbitrary set operators classified against the Kuratowski axioms plus the
//! rough condition), relation-preserving and continuous maps, information
//! systems with indiscernibility and reducts, and the back-and-forth
//! constructions connecting all of these (AprS ⇄ RCls ⇄ RInt, NeIS ⇄ AprS).
//!
//! Everything is verifiable at small scale: every predicate returns a verdict
//! with a concrete witness on failure, every classification reports whether it
//! swept exhaustively or sampled with a recorded seed, and the functor layer
//! ships law-checking harnesses that replay identity, composition, and
//! round-trip laws over enumerated corpora.
//!
//! ```
//! use clopen::{ApproximationSpace, Partition, Subset, Universe};
//!
//! # fn main() -> clopen::Result<()> {
//! let u = Universe::new(["a", "b", "c", "d"])?;
//! let space = ApproximationSpace::new(Partition::from_blocks(&u, [
//!     vec!["a", "b"],
//!     vec!["c", "d"],
//! ])?);
//!
//! let x = Subset::from_names(&u, ["a", "c"])?;
//! assert_eq!(space.upper(&x)?, Subset::full(&u));
//! assert_eq!(space.lower(&x)?, Subset::empty(&u));
//! # Ok(())
//! # }
//! ```
//!
//! The `clopen` binary exposes the same functionality as subcommands
//! (`approximate`, `topology`, `classify-operator`, `check-map`, `check-iso`,
//! `functor`, `census`, `infosys`, `check-oad`, `counterexample`); see
//! [`cli`]. The crate's `examples/` directory walks through each capability.

pub mod approximation;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod functors;
pub mod infosys;
pub mod morphisms;
pub mod operators;
pub mod sets;
pub mod verify;

pub use approximation::{ApproximationSpace, Partition};
pub use error::{Error, Result};
pub use infosys::{InfoSystem, OadHom};
pub use operators::{AxiomReport, FiniteTopology, SetOperator, TopologyReport};
pub use sets::{Subset, TotalMap, Universe};
pub use verify::{Verdict, VerifyConfig, VerifyMode};
