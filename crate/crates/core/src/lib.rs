//! Exact decision procedures and witness constructions for Urysohn-type
//! separation statements on generalized topological (GT) spaces.
//!
//! A GT on a set `X` is a family of subsets closed under arbitrary unions;
//! unlike a topology it need not be closed under finite intersections. The
//! crate has three layers:
//!
//! * [`gt`]: finite GT spaces over bitmask point sets: axioms, closure,
//!   subspaces, products, the generated topology, separation axioms and an
//!   exhaustive census of strong GTs.
//! * [`urysohn`]: decision procedures for UL / GUL / TET / GTET on finite
//!   spaces, ladders and pair-ladders, U-normality and effective normality
//!   witnesses.
//! * [`realline`]: exact symbolic versions of the real-line GTs `gτ_n` and
//!   `gτ_s` with piecewise-affine maps, continuity checks and the explicit
//!   separating, extension and witness constructions.
//!
//! All arithmetic is exact ([`Rational`] is an arbitrary-precision fraction).

pub mod error;
pub mod gt;
pub mod par;
pub mod rational;
pub mod realline;
pub mod urysohn;

pub use error::{Error, Result};
pub use gt::{FiniteGT, GTReport, PointSet, SeparationProfile};
pub use rational::Rational;

/// Target GT on ℝ for continuity questions: the natural topology `τ_n` or
/// the generalized topology `gτ_n` of rays and ray pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Taun,
    Gtaun,
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Target::Taun => f.write_str("taun"),
            Target::Gtaun => f.write_str("gtaun"),
        }
    }
}

impl std::str::FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "taun" => Ok(Target::Taun),
            "gtaun" => Ok(Target::Gtaun),
            other => Err(Error::input(format!("unknown target `{other}` (expected taun|gtaun)"))),
        }
    }
}
