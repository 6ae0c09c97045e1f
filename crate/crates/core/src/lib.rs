pub mod altitude;
pub mod certificate;
pub mod circular_colouring;
pub mod cli;
pub mod error;
pub mod graph_core;
pub mod mycielski;
pub mod named;
pub mod orderings;
pub mod powerful;
pub mod search;
pub mod theorems;

pub use error::{Error, Result};
pub use graph_core::Graph;
