//! Combinatorics of smooth components of two column Springer fibers.
//!
//! A standard Young tableau with two columns determines a noncrossing
//! matching (with rays, when the shape is not a rectangle) and, in the
//! rectangular case, a degree two `sl_k` hourglass web. This crate builds
//! those objects, decides smoothness of the associated component in three
//! independent ways, reads off the iterated fiber bundle base of smooth
//! components, and computes their Poincaré polynomials.
//!
//! The [`verify`] module re-checks all of these relationships by exhaustive
//! enumeration over small shapes.

pub mod classify;
pub mod diagrams;
mod error;
pub mod geometry;
pub mod qseries;
pub mod render;
pub mod tableaux;
pub mod verify;
pub mod webs;

pub use classify::{Clause, SmoothnessVerdict, Witness};
pub use diagrams::{MatchingRayDiagram, NoncrossingMatching, Pseudoclaw};
pub use error::{Error, Result};
pub use geometry::{BundleBase, BundleFactor, FmsoTriple};
pub use qseries::QPolynomial;
pub use tableaux::{TwoColumnShape, TwoColumnTableau};
pub use webs::{Claw, HourglassWeb, OrbitInfo, WebEdge, WeightedPolygon};
