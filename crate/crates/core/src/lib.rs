//! Exact-arithmetic kernel for constructive Euclidean plane geometry.
//!
//! Points live in the plane of regular-sequence reals; strict comparison is
//! witnessed by an approximant index, and every relation check returns a
//! three-valued [`Verdict`]. Rational inputs, and ruler-and-compass
//! constructions on them, stay exact as finite sums of square roots so that
//! relations are decided rather than semi-decided.

pub mod construct;
pub mod exact;
pub mod kernel;
pub mod script;
pub mod verdict;
pub mod verify;

pub use exact::{ArithError, Fuel, Rational, Real, Surd, WitnessIndex};
pub use kernel::{AngleTriple, KernelError, Point, RelationKind, Scalar, Segment};
pub use verdict::{Verdict, Witness};
