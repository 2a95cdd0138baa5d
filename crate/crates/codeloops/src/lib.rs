//! Code loops over GF(2).
//!
//! A code loop is a finite Moufang loop with a unique nontrivial square,
//! which is necessarily central and is written `-1`.  Such a loop of rank
//! `n` is a central extension `F2 x F2^n` determined by a characteristic
//! vector: one bit per basis square, per basis commutator and per basis
//! associator.  This crate
//!
//! * builds the loop from its characteristic vector and validates the
//!   construction exhaustively ([`loopcore`]),
//! * evaluates the squaring, commutator and associator forms Q, C, A
//!   directly on subsets of the basis ([`forms`]),
//! * computes the group of half-automorphisms fixing a basis by solving a
//!   linear system over GF(2), enumerates automorphisms, and factors any
//!   half-automorphism as automorphism times basis-fixing part
//!   ([`morphisms`]),
//! * censuses elementary mappings and their subloop generalization
//!   ([`elementary`]),
//! * ships the catalog of the 5 rank-3 and 16 rank-4 nonassociative code
//!   loops with their verified invariant counts ([`registry`]).

pub mod elementary;
pub mod f2;
pub mod forms;
pub mod loopcore;
pub mod morphisms;
pub mod registry;

pub use forms::{CharVec, Mask};
pub use loopcore::{CodeLoop, Element, FactorSet, Subloop, ValidationReport};
pub use morphisms::{BasisTuple, Classification, Mapping, PsiVector, RbSpace};

/// Errors surfaced by the public API.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank mismatch: operation at rank {expected} got a mask outside rank {expected} (bits {got:#x})")]
    RankMismatch { expected: u32, got: u32 },
    #[error("invalid characteristic vector: {0}")]
    BadCharVec(String),
    #[error("validation failed: {check}: {detail}")]
    ValidationFailure { check: &'static str, detail: String },
    #[error("unknown loop name: {0}")]
    UnknownName(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mask {0:#x} has fewer than 2 elements")]
    MaskTooSmall(u32),
    #[error("vector violates a basis-fixing constraint: {0}")]
    ConstraintViolation(String),
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("mapping is not a half-automorphism")]
    NotHalf,
    #[error("element set is not closed under products and inverses")]
    NotClosed,
    #[error("masks are linearly dependent over GF(2)")]
    DependentBasis,
    #[error("operation requires a nonassociative code loop")]
    AssociativeLoop,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
