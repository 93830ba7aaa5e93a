//! Covering graphs of finite simple graphs, built from edge signings and
//! permutation voltage assignments, together with the chromatic theory
//! that connects them: the relative chromatic number of a spanning
//! subgraph, Seidel switching equivalence, and a family of exact bounds
//! verified on small instances.

pub mod bounds;
pub mod chromatic;
pub mod covering;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod switching;
pub mod verify;

pub use chromatic::{chi_rel_direct, chi_rel_via_cover, chromatic_number, Coloring};
pub use covering::{derive_double_cover, derive_nfold_cover, PermutationVoltage, Signing};
pub use graph::{Graph, Partition, SpanningSubgraph};
