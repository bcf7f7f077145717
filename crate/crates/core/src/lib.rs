//! Exact-arithmetic toolkit for studying face counts of convex polytopes
//! with few vertices.
//!
//! The crate is organized in five layers:
//!
//! - [`incidence`] / [`lattice`]: face-lattice enumeration, f-vectors,
//!   duality and vertex profiles over pure vertex-facet incidence data;
//! - [`formulas`]: closed-form face-count formulas and lower-bound
//!   calculators over arbitrary-precision integers;
//! - [`constructors`]: combinatorial builders (simplices, pyramids,
//!   products, prisms, bipyramids, free joins, triplexes, pentasms, capped
//!   prisms, cyclic polytopes) with frozen vertex labelings;
//! - [`geometry`]: an exact-rational oracle (convex hulls, polar duals,
//!   slicing, beneath/beyond) that independently validates the
//!   combinatorial layer;
//! - [`gale`]: two-dimensional Gale diagrams of `d`-polytopes with `d + 3`
//!   vertices, with validity, coface and missing-edge machinery.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be used concurrently without restriction.

pub mod constructors;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod formulas;
pub mod fvector;
pub mod gale;
mod gale_variants;
pub mod geometry;
pub mod incidence;
pub mod lattice;
pub mod vertex_set;

pub use error::{Error, ParseError, Result};
pub use fvector::FVector;
pub use incidence::IncidencePolytope;
pub use lattice::{enumerate_faces, vertex_profile, FaceLattice, VertexProfile};
pub use vertex_set::VertexSet;
