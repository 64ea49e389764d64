//! Construction, transformation and verification of strict
//! function-correcting codes with data protection over finite fields.
//!
//! The crate provides:
//! - exact arithmetic in GF(p) and GF(p^m) ([`field`]);
//! - block codes with weight distributions, low-weight codeword search and
//!   coset partitions ([`codes`]);
//! - distance graphs of codes and their connected components, including the
//!   Cayley-graph fast path for linear codes ([`distgraph`]);
//! - open and closed chain-code generators ([`chain`]);
//! - the one- and two-position insertion transforms that trade independent
//!   minimum-weight codewords for function-correcting capability
//!   ([`simonis`]);
//! - narrow-sense BCH codes with designed distance three and their
//!   low-weight subcode structure ([`bch`]);
//! - feasibility checks, encoding construction, verification, decoding and
//!   channel simulation for function-correcting codes with data protection
//!   ([`fcc`]).

pub mod bch;
pub mod chain;
pub mod codes;
pub mod distgraph;
mod error;
pub mod fcc;
pub mod field;
pub mod io;
pub mod linalg;
pub mod repro;
pub mod simonis;

pub use error::{Error, Result};

/// Enumeration and search budgets threaded through the heavier operations.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Max number of codewords materialized by a full enumeration.
    pub enumeration: u64,
    /// Max number of (support, coefficient) combinations in a low-weight
    /// support search.
    pub search: u64,
    /// Max number of codeword pairs examined by explicit component search.
    pub pairs: u64,
    /// Max nodes expanded by the component-grouping search.
    pub grouping_nodes: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration: 1 << 22,
            search: 1 << 26,
            pairs: 1 << 26,
            grouping_nodes: 1_000_000,
        }
    }
}
