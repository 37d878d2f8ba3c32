//! Local and edge local complementation on small graphs, orbits up to
//! isomorphism, graph constructions, and the bipartite graph to binary
//! linear code correspondence.

pub mod bitmatrix;
pub mod bits;
pub mod canon;
pub mod codes;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod expr;
pub mod graph;
pub mod graph6;
pub mod orbit;

pub use bitmatrix::BitMatrix;
pub use canon::{
    are_isomorphic, bipartite_canonical_form, canonical_form, canonical_key, BipartiteCanonicalForm, CanonKey,
    CanonicalForm,
};
pub use codes::{CodeParams, CodeReport, LinearCode};
pub use enumeration::{Census, GraphClass, OrbitCensus};
pub use error::{Error, Result};
pub use expr::ConstructionSpec;
pub use graph::{Bipartition, Graph, Side, MAX_ORDER};
pub use orbit::{elc_orbit, lc_orbit, Orbit, OrbitKind};
