//! Counting list homomorphisms to small target graphs: classification of the
//! target, exact counting oracles, path gadgets and the reductions built on
//! them.

pub mod catalog;
pub mod gadgets;
pub mod graph;
pub mod named;
pub mod oracles;
pub mod recognizer;
pub mod reductions;
