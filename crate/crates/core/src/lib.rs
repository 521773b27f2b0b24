//! Exact ordinal arithmetic in Cantor normal form, together with decision
//! procedures for the compactly supported homeomorphism property (CSHP) of
//! ordinal spaces and their products and coproducts, explicit families of
//! compactly supported homeomorphisms, and a small finite-topology laboratory
//! for the colimit questions that motivate them.
//!
//! The term language covers sums, products, and powers built from naturals,
//! ω, and a fixed stock of uncountable regular cardinals `Ω_1 < Ω_2 < …`
//! treated as ε-number fixed points (`ω^{Ω_k} = Ω_k`). Everything is exact:
//! coefficients are arbitrary-precision naturals and no operation rounds or
//! approximates.

pub mod arith;
pub mod cshp;
pub mod finitetop;
pub mod homeo;
pub mod parse;
pub mod term;

pub use arith::{
    add, canonical_cofinal, cofinality, decompose_base, from_summands, is_regular_uncountable,
    left_subtract, mul, pow, pred, successor, ArithmeticError, BaseDecomposition, CnfSummand,
    CnfView,
};
pub use parse::{parse, parse_with, ParseDiagnostic, ParseOptions, DEFAULT_MAX_DEPTH};
pub use term::{compare, OrdinalClass, OrdinalTerm, MAX_ATOM_INDEX};
