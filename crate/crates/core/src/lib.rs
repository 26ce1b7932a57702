//! Exact q-Stirling, q-Lah and generalized Stirling numbers, the
//! structures they count, and a registry of identities checked against
//! brute-force enumeration.

pub mod error;
mod memo;
pub mod polyring;
pub mod statistics;
pub mod structures;

pub use error::{Error, Result};
pub mod numbers;
pub mod identities;
pub mod cli;
