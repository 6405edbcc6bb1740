//! Entropy accounting for computation.
//!
//! A computational step is a total map between discrete microstate spaces;
//! its logical irreversibility is the entropy it destroys, measured in bits
//! (one bit = k·ln 2 of natural-unit entropy, worth k_B·T·ln 2 joules at
//! temperature T). On top of that accounting this crate provides:
//!
//! - [`entropy`] — exact Shannon entropy over discrete distributions and
//!   bit↔joule conversion;
//! - [`gate`] — truth maps for logic operations and their entropy reduction
//!   under a uniform input distribution, including reversible hosts with
//!   ancilla embeddings;
//! - [`bounds`] — closed-form entropy lower bounds for max-finding, sorting,
//!   ordered search, comparison, addition, multiplication and matrix
//!   multiplication, with exact comparison-model bounds as cross-checks;
//! - [`ledger`] — instrumented reference algorithms charged per event
//!   (comparisons cost one bit, assignments are free, bucket writes cost
//!   their width) and a seeded profiler;
//! - [`demon`] — Monte Carlo separation experiments that estimate the same
//!   entropies empirically, plus the rank-preserving map from uniform values
//!   to Maxwell–Boltzmann speeds.
//!
//! Everything is a pure function over immutable values and safe to call from
//! any number of threads.

pub mod bounds;
pub mod demon;
pub mod entropy;
pub mod gate;
pub mod ledger;

pub use bounds::{BoundReport, ProblemSpec};
pub use entropy::{bits_to_joules, Distribution, EntropyBits, Temperature};
pub use gate::{GateReport, TruthMap};
pub use ledger::{EnergyLedger, ProfileReport};
