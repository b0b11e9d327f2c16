//! Pattern-avoiding subgraphs of hypercubes: which binary patterns keep
//! their avoidance graphs isometric, and from which dimension they fail.

pub mod cli;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod periodicity;
pub mod structural;
pub mod word;

pub use error::{Error, Result};
