//! Distance magic and p-distance magic graph labelings.
//!
//! A labeling `f` of a graph on `n` vertices is *distance magic* when it is a
//! bijection onto `{1, ..., n}` and every vertex has the same neighbourhood
//! sum `w(v) = Σ_{u ∈ N(v)} f(u)`. The modular variant relaxes the codomain
//! to the multiset `{1, ..., n}_p` of residues and only asks the weights to
//! agree modulo `p`.
//!
//! The crate is `no_std` (it needs `alloc`) and covers:
//!
//! * [`graph`], [`graph6`] and [`construct`]: dense simple graphs, the graph6
//!   interchange format and the named families used throughout.
//! * [`labeling`]: labelings, weights, verification, modular reduction and
//!   shifting.
//! * [`search`] and [`crt`]: backtracking enumeration, CRT composition of
//!   modular labelings and the small-order census.
//! * [`spectral`]: exact characteristic polynomials, Jacobi eigensolver, main
//!   angles, Moore-Penrose filter and the matrix characterisations.
//! * [`structural`]: cheap necessary conditions and the 2-distance magic
//!   structure checks.
//! * [`automorphism`]: automorphism groups, canonical forms and the action of
//!   `Aut(G)` on labelings.
//!
//! Vertices are numbered `1..=n` wherever a vertex is named in the public API.
//! Per-vertex sequences (labelings, weights) are plain slices where position
//! `i` belongs to vertex `i + 1`.
//!
//! ```
//! use magicdist_core::{construct, labeling::{Labeling, verify_distance_magic}};
//!
//! let c4 = construct::cycle(4).unwrap();
//! let f = Labeling::new(vec![1, 2, 4, 3]).unwrap();
//! let cert = verify_distance_magic(&c4, &f).unwrap();
//! assert_eq!(cert.constant, 5);
//! ```

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;
#[cfg(any(feature = "std", test))]
extern crate std;

pub mod automorphism;
pub mod census;
pub mod construct;
pub mod crt;
pub mod graph;
pub mod graph6;
pub mod labeling;
pub mod search;
pub mod spectral;
pub mod structural;

pub use graph::{Graph, GraphError};
pub use labeling::{Labeling, MagicCertificate, ModularLabeling};
