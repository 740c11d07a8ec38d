//! Minimum connected set cover.
//!
//! Given a universe, a family of subsets and a connected auxiliary graph on
//! the subsets, find a smallest subfamily that covers the universe and
//! induces a connected subgraph. This crate provides:
//!
//! * the greedy that grows the selection along shortest paths of minimum
//!   weight ratio ([`greedy::modified_greedy`]), the cover-adjacent-only
//!   variant that can deadlock, and plain greedy set cover;
//! * brute-force oracles for set cover, connected set cover and connected
//!   dominating set ([`exact`]);
//! * the connected dominating set reduction ([`cds`]);
//! * exact-rational approximation bounds and a charge audit of greedy
//!   traces ([`analysis`]);
//! * text formats, seeded generators and fixtures ([`io`]).

pub mod analysis;
pub mod cds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod instance;
pub mod io;

pub use error::{Error, Result};
pub use instance::{check_solution, coverage_union, validate_instance, ElementId, Instance, Solution, SubsetId, ValidationReport};
