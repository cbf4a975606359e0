//! Permutation covers of multigraphs and their transversal polynomials.
//!
//! An r-fold cover of a multigraph is built by blowing each vertex up into a
//! fibre of r vertices and lifting every edge to a perfect matching prescribed
//! by a permutation. The transversal polynomial counts, for each k, the
//! transversals of the fibre system that induce exactly k edges. This crate
//! computes that polynomial two independent ways (exhaustive enumeration and a
//! contraction-deletion recursion), together with the structural operations,
//! congruence checks and instance generators around it.

pub mod analysis;
pub mod cover;
pub mod engine;
pub mod multigraph;
pub mod perm;
pub mod poly;
pub mod rng;

pub use cover::{CoverInstance, ExplicitCover};
pub use engine::{xi_brute, xi_dc, zeta_brute, XiResult};
pub use multigraph::{EdgeId, EdgeRecord, Multigraph, VertexId};
pub use perm::Perm;
pub use poly::{BiPolynomial, IntPolynomial};
