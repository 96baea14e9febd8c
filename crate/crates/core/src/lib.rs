//! Robust chromatic number of planar graphs.
//!
//! A 1-selection assigns each vertex at most one incident edge; deleting the
//! selected edges gives a 1-removed subgraph, and the robust chromatic number
//! `chi_1(G)` is the least chromatic number over all 1-removed subgraphs.
//!
//! The crate is organised bottom up:
//!
//! - [`graph`]: simple graphs, exact colouring, bipartiteness, degeneracy, graph6;
//! - [`planar`]: rotation systems, faces, duals and the embedding text format;
//! - [`selection`]: recognising, realising, minimalising and enumerating selection sets;
//! - [`solver`]: exact `chi_1` for small graphs and the `chi_1 <= 2` searches;
//! - [`factors`]: perfect matchings, 2-factors and the matching certificate for `chi_1 = 2`;
//! - [`gadgets`]: the Tutte fragment and the planar graphs with `chi_1 = 3`;
//! - [`corpus`]: small-graph enumeration and the invariant sweep behind `corpus-verify`.

pub mod budget;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod factors;
pub mod gadgets;
pub mod graph;
pub mod planar;
pub mod selection;
pub mod solver;

pub use budget::{Budget, Verdict};
pub use error::{Error, Result};
pub use graph::{Coloring, EdgeId, Graph, VertexId};
pub use planar::{DualMap, Embedding};
