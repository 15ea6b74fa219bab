//! Stay points with bounded gaps.
//!
//! A stay point of a moving entity is an axis-aligned square of side `s`
//! that the entity never leaves continuously for more than time `g`; the
//! stay map collects the lower-left corners of all stay points. This crate
//! computes the exact stay map of one-dimensional trajectories
//! (an event-point sweep plus binary search), a `(1+eps)`-approximate stay
//! map of two-dimensional trajectories (snapshot intersection), and an
//! exact brute-force oracle used to validate both.

pub mod generators;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod scalar;
pub mod staymap1d;
pub mod staymap2d;
pub mod svg;
pub mod trajectory;

pub mod cli;

pub use scalar::{Rat, Scalar};
pub use trajectory::{StayParams, Trajectory, Trajectory1, Trajectory2, TrajectoryVertex};
