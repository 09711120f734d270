//! Finite generalized topological spaces.

pub mod census;
pub mod io;
mod pointset;
mod separation;
mod space;

pub use census::{census, census_sequential, enumerate_strong_gts, random_strong_gt, Census};
pub use io::SpaceFile;
pub use pointset::{PointSet, MAX_POINTS};
pub use separation::SeparationProfile;
pub use space::{
    product_point, product_rectangle_union, projections, rectangle, validate_gt, FiniteGT, GTReport,
    Violation,
};
