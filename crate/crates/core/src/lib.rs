//! Exact framing triangulations of integer flow polytopes of DAGs.
//!
//! A [`graph::Dag`] with an integer [`graph::Netflow`] is augmented into
//! conservationist form ([`augmentation`]), framed ([`framing`]), and reduced
//! to its flow-supporting core. On the core, flows decompose uniquely into
//! route-cliques and into layering-simplices ([`decomposition`]), and the
//! maximal layering-simplices form a unimodular triangulation
//! ([`triangulation`]). [`oracle`] holds brute-force cross-checks.
//!
//! All arithmetic is exact.

pub mod augmentation;
pub mod cliques;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod framing;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod matching;
pub mod maxflow;
pub mod oracle;
pub mod rational;
pub mod triangulation;

pub use augmentation::{build_augmentation, conservationist_core, Augmentation, Core, FramedAugmentation, OutflowPolicy};
pub use decomposition::{FramedNetwork, Layering, LayeringSimplexCombination, RouteCliqueCombination, RouteId};
pub use error::{Error, Result};
pub use framing::Framing;
pub use graph::{Dag, Flow, Netflow, Route};
pub use rational::Rational;
pub use triangulation::{maximal_simplices, Triangulation};
