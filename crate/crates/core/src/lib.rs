//! Eccentricity matrices of graphs: exact characteristic polynomials and
//! inertia, equitable quotients, mixed extensions of stars, small-graph
//! enumeration, and exhaustive checks of which graphs have exactly one
//! positive eccentricity eigenvalue.

pub mod classify;
pub mod ecc;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod exec;
pub mod families;
pub mod graph;
pub mod numeric;
pub mod partition;
pub mod verify;

pub use ecc::{eccentricity_matrix, EccMatrix};
pub use enumeration::{parse_graph6, to_graph6};
pub use error::{Error, Result};
pub use exact::Inertia;
pub use exec::Exec;
pub use graph::{DistanceMatrix, EccentricityProfile, Graph};
