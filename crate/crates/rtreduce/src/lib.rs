//! Exact path algebra on the closed unit disk.
//!
//! The crate represents paths `[0,1] -> D^2` symbolically as finite lists of
//! atoms (a geometric carrier composed with a monotone time warp), keeps all
//! parameter-line arithmetic in arbitrary-precision rationals, and keeps the
//! 2-D geometry in `f64` with explicit tolerances. On top of the algebra it
//! implements:
//!
//! * staggering of Cantor-style paths by small piecewise-linear
//!   reparameterizations, with machine-checkable covering certificates,
//! * the interlocked inverse-pair insertion step that contracts the
//!   sup-distance of a staggered pair by 3/4 per round,
//! * the iterated reduction producing a common-path approximant with a
//!   certified tail bound, and
//! * finite dendrite factorizations witnessing that every stage is an R-tree
//!   reduction of the approximant.
//!
//! File formats and rendering used by the `rtreduce` CLI live in [`docs`] and
//! [`render`].

pub mod rat;
pub mod interval;
pub mod tau;
pub mod pl;
pub mod geom;
pub mod warp;
pub mod path;
pub mod metric;
pub mod lc;
pub mod collapse;
pub mod window;
pub mod stagger;
pub mod frame;
pub mod insert;
pub mod reduce;
pub mod dendrite;
pub mod tower;
pub mod witness;
pub mod docs;
pub mod render;

pub use interval::Interval;
pub use path::{Carrier, PathAtom, SymbolicPath};
pub use pl::PlMap;
pub use rat::Rat;

/// Geometric tolerance for assertions on evaluated points.
pub const GEOM_TOL: f64 = 1e-9;
/// Tolerance for continuity stitching at atom junctions.
pub const JUNCTION_TOL: f64 = 1e-12;
/// Slack allowed past the closed unit disk for stored coordinates.
pub const DISK_SLACK: f64 = 1e-12;

/// Default starting generation for locally-constant component enumeration.
pub const DEFAULT_DEPTH: u32 = 6;

/// Hard cap on enumeration depth; overridable via `RTREDUCE_DEPTH_CAP`.
pub fn depth_cap() -> u32 {
    std::env::var("RTREDUCE_DEPTH_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(30)
}
