//! Points, segments, angles and the relations between them.

mod angle;
mod collinear;
pub(crate) mod point;
mod relation;

use thiserror::Error;

use crate::exact::ArithError;

pub use angle::{angle_cong, angle_lt, angle_sum_check};
pub use collinear::{collinear_case, CollinearCase};
pub use point::{AngleTriple, Point, Scalar, Segment};
pub(crate) use relation::{orientation, sq_dist};
pub use relation::{
    apart, between, col, cong, equiv, ge, gt, left, left_of, len_apart, out, parallel, relation,
    seg_apart, seg_gt, strict_between, RelationKind,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("{relation} takes {expected} points, got {got}")]
    ArityMismatch { relation: String, expected: usize, got: usize },
    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
    #[error("angle arms are not apart from the vertex")]
    DegenerateAngle,
    #[error("the two summands exceed a straight angle")]
    SumExceedsStraight,
    #[error("points are not collinear")]
    NotCollinear,
    #[error("case analysis needs exact coordinates")]
    IrrationalInput,
    #[error(transparent)]
    Arith(#[from] ArithError),
}
