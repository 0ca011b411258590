//! Exact graph bandwidth and bandwidth reduction on grids and small graphs.
//!
//! The crate is organised in layers:
//!
//! * [`graph`], [`families`], [`numbering`]: graphs, generators and the
//!   quantities a numbering induces (edge lengths, bandwidth, boundary sizes).
//! * [`constructions`]: explicit grid numberings with few long edges.
//! * [`solve`]: exact searches for bandwidth, k-th bandwidth reduction numbers and
//!   vertex-isoperimetric numbers, plus cheap lower bounds.
//! * [`suite`]: a catalogue of checkable claims about all of the above.

pub mod board;
pub mod constructions;
pub mod edgelist;
pub mod error;
pub mod families;
pub mod graph;
pub mod numbering;
pub mod solve;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use numbering::Numbering;
