//! Triangulated closed surfaces as abstract simplicial complexes.
//!
//! The crate models a closed surface purely combinatorially: a complex is a
//! finite set of vertex triples (the triangles), and all geometry is recovered
//! from incidence. On top of that foundation it provides
//!
//! - manifold and orientability checks, Euler characteristic, genus, and
//!   degree-regularity ([`complex`], [`orientation`]),
//! - label-free graph invariants built from common-neighbor counts of the
//!   edge graph ([`graph`]),
//! - exact isomorphism testing, canonical forms, and automorphism groups
//!   ([`iso`]),
//! - polyhedral maps with faces of arbitrary size, duality, and equivelar
//!   typing ([`maps`]),
//! - isomorph-free exhaustive enumeration of degree-regular triangulations
//!   with a fixed vertex count and degree ([`enumerate`]),
//! - a pinned catalog of the six orientable degree-regular triangulations
//!   with 12 vertices and vertex degree 7 — the Euler characteristic −2
//!   case — together with identification by invariant keys ([`catalog`]).
//!
//! Vertices are dense indices `0..n`. Text formats for complexes and maps
//! live in [`io`]; small reference complexes (simplex boundary, octahedron,
//! icosahedron, a 7-vertex torus, a 6-vertex projective plane) in
//! [`samples`].

pub mod catalog;
pub mod complex;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod maps;
pub mod orientation;
pub mod params;
pub mod perm;
pub mod samples;

pub use complex::{ComplexError, FVector, LinkCycle, Triangle, TriangulationComplex, VertexId};
pub use orientation::{Orientability, OrientationAssignment};
pub use perm::Permutation;
