//! Exact tools for `k`-cacti: connected graphs in which every edge lies on at
//! most `k` cycles.
//!
//! The crate pairs a slow definitional oracle ([`cycles`]) with a structural
//! recogniser ([`classify`]), closed-form edge bounds and extremal
//! constructions ([`construct`]), and an exhaustive small-order harness
//! ([`verify`]) that checks each against the other.

pub mod classify;
pub mod construct;
pub mod cycles;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{parse_graph6, write_graph6, Edge, Graph};
