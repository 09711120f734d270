//! The real line with the generalized topologies `gτ_n` and `gτ_s`:
//! symbolic sets, piecewise-affine maps, explicit witnesses and the rational
//! enumeration used for effective choices.

pub mod construct;
pub mod enumerate;
pub mod map;
pub mod parse;
pub mod set;
pub mod space;

pub use construct::{
    check_ladder_sym, disjoint_open_triple, effective_f, gul_witness, ladder_from_f, product_gul_witness,
    tietze_extend, EffectiveRule, OpenTriple, ProductWitness, SymbolicLadder, SymbolicWitness,
};
pub use enumerate::{
    calkin_wilf, calkin_wilf_index, least_psi_in, psi, psi_index, scan_least_psi, EnumerationVariant,
    RationalEnumeration,
};
pub use map::{
    check_continuity_on, check_continuity_sym, continuity_violation, image_and_connectedness, Affine, PiecewiseMap,
};
pub use parse::{parse_affine, parse_interval, parse_map, parse_set};
pub use set::{Cut, Interval, SymbolicSet};
pub use space::{classify, closure_sym, Classification, LineSpace};
