//! Finite-model laboratory for the point-set side of CSHP: brute-force
//! τ-discreteness, the `<τ` refinement topology, colimit-topology comparison
//! with gap certificates, and the cofinal-thinning construction on enumerated
//! posets.
//!
//! Everything here is deliberately small and exhaustive: spaces have at most
//! [`MAX_POINTS`] points, subsets are bitmasks, and every claim is decided by
//! enumeration. τ is a finite natural standing in for the cardinal of the
//! same role at infinite scale; the definitions specialise verbatim.

mod io;
mod poset;
mod space;

pub use io::{parse_poset, parse_space};
pub use poset::{cofinal_thin, EnumeratedPoset, ThinResult};
pub use space::{
    all_topologies, check_prop21, check_prop22, colimit_topology, is_tau_discrete,
    notcolim_witness, subtau_topology, ColimitCertificate, FiniteSpace,
};

use thiserror::Error;

/// Hard cap on space/poset size so subset masks fit in `u32` comfortably and
/// exhaustive scans stay tractable.
pub const MAX_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteTopError {
    #[error("a space may have at most {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },
    #[error("the open family must contain the empty set and the full point set")]
    MissingEmptyOrFull,
    #[error("opens {a:#b} and {b:#b} have no union in the family")]
    NotClosedUnderUnion { a: u32, b: u32 },
    #[error("opens {a:#b} and {b:#b} have no intersection in the family")]
    NotClosedUnderIntersection { a: u32, b: u32 },
    #[error("subset mask {mask:#b} mentions points outside the space")]
    SetOutOfRange { mask: u32 },
    #[error("point {point} is outside the space")]
    PointOutOfRange { point: usize },
    #[error("τ must be at least 1")]
    TauZero,
    #[error("cover pieces {a:#b} and {b:#b} have no common upper bound in the cover")]
    CoverNotDirected { a: u32, b: u32 },
    #[error("the cover misses points (union {union:#b})")]
    CoverDoesNotCover { union: u32 },
    #[error("map is not continuous: preimage {preimage:#b} of open {open:#b} is not open")]
    MapNotContinuous { open: u32, preimage: u32 },
    #[error("map identifies points {x} and {y} of the inspected subset")]
    MapNotInjectiveOnSubset { x: usize, y: usize },
    #[error("map value {value} at point {point} is outside the codomain")]
    MapValueOutOfRange { point: usize, value: usize },
    #[error("order is not antisymmetric: {a} ≤ {b} and {b} ≤ {a} for distinct elements")]
    OrderNotAntisymmetric { a: usize, b: usize },
    #[error("enumeration repeats element {element}")]
    EnumerationNotInjective { element: usize },
    #[error("enumerated set is not cofinal: no member dominates element {element}")]
    EnumerationNotCofinal { element: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
