//! Combinatorics of character degrees prime to `p`.
//!
//! Partitions, hook lengths and p-cores for `S_n` and `A_n`; product-form
//! degree formulas for groups of Lie type; degree-table ingestion; and the
//! `ppcd` command-line frontend.

pub mod arith;
pub mod cli;
pub mod ctbl;
pub mod degrees;
pub mod error;
pub mod hooks;
pub mod lie;
pub mod oracle;
pub mod partition;

pub use error::{Error, Result};
pub use partition::Partition;
