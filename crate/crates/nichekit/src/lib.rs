//! Niche graphs of multipartite tournaments.
//!
//! The niche graph of a digraph `D` joins two vertices whenever they have
//! a common out-neighbor or a common in-neighbor in `D`. This crate
//! computes niche graphs, decides niche-realizability of a graph through
//! a k-partite tournament for k >= 3 (producing explicit witness
//! tournaments), and re-verifies the underlying characterization results
//! exhaustively at small scale.

pub mod enumerate;
pub mod graph;
pub mod io;
pub mod niche;
pub mod props;
pub mod realize;
pub mod verify;

pub use graph::{Digraph, Graph, MultipartiteTournament, Partition};
pub use niche::niche_graph;
pub use realize::{decide, Answer, Verdict};
