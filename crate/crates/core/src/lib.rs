//! Exact Lin–Lu–Yau curvature, normalized Laplacian spectra, and regularity
//! structure of finite simple graphs.
//!
//! The crate is organized around a small immutable [`Graph`] type and pure
//! functions over it:
//!
//! * [`graph`] — construction, BFS metric, line graphs, Cartesian products,
//!   local subgraphs and neighborhood splits;
//! * [`graph6`] — the graph6 interchange format;
//! * [`families`] — deterministic generators for the named graph families
//!   (Hamming, Johnson, demi-cubes, Petersen, Hoffman–Singleton, Gosset, …)
//!   plus Seidel switching;
//! * [`regularity`] — amply regular parameters, intersection arrays,
//!   Terwilliger checks and the closed-neighborhood quotient;
//! * [`transport`] — exact optimal transport over rational measures,
//!   p-Ollivier curvature and the Lin–Lu–Yau limit with two-point
//!   collinearity certificates;
//! * [`spectra`] — a dense symmetric eigensolver, strongly-regular and
//!   distance-regular closed forms, line-graph spectrum transfer and exact
//!   rational eigenvalue certificates;
//! * [`verify`] — the Lichnerowicz sharpness decision, curvature/eigenvalue
//!   bound checks, the positive-curvature Terwilliger classification and the
//!   reference table reproduction harness.
//!
//! All curvature and transport quantities are arbitrary-precision rationals;
//! floating point appears only in the eigensolver and in explicitly numeric
//! report fields. The crate is `no_std` (with `alloc`), so everything here is
//! usable from embedded or wasm hosts; file formats, parallel drivers and the
//! command-line front end live in the companion `lly-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod families;
mod fmath;
#[doc(hidden)]
pub mod iso;
pub mod graph;
pub mod graph6;
pub mod rat;
pub mod regularity;
pub mod spectra;
pub mod transport;

pub use graph::{DistanceRow, Graph, GraphError, NeighborhoodSplit};
pub use rat::Rational;
