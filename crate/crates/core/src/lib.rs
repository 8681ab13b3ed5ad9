//! Bent-function concatenation toolkit.
//!
//! Truth tables, Walsh and Möbius transforms, derivative calculus, exhaustive
//! M-subspace search, and the concatenation constructions `f1||f2` and
//! `f1||f2||f3||f4` together with the structural conditions deciding whether
//! a bent concatenation belongs to the completed Maiorana-McFarland class M#.

pub mod anf;
pub mod boolean;
pub mod cli;
pub mod concat;
pub mod construct;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod sample;
pub mod search;
pub mod subspace;
pub mod text;
pub mod verify;
pub mod walsh;

pub use anf::{anf, degree, from_anf, AnfPolynomial};
pub use boolean::BooleanFunction;
pub use concat::{
    bent4_dual_sum, concat2, concat4, corollary1_outside_mm, corollary2_outside_mm, disjoint_spectra,
    restrictions, second_derivative_concat2, second_derivative_concat4, theorem1_verdict,
    theorem3_enumerate_forms, ConcatVerdict, VerdictOptions,
};
pub use construct::{
    extend_outside, find_invertible_pair, find_unique_msubspace_bent, ghgh, ghgh_class, korsakova_pair,
    mm_function, rind_construction, theorem2_halfconcat, theorem_rind_bound_check, twist_pair,
    IntersectionMode, PermutationSpec,
};
pub use error::{Error, Result};
pub use matrix::{apply_ea, compose_linear, AffineTransform, BinaryMatrix};
pub use search::{
    common_m_subspaces, enumerate_m_subspaces, is_in_completed_mm, max_m_dimension, Certificate,
    ClassVerdict, FindOutcome, MSearch, PairRelation, SearchOutcome, DEFAULT_BUDGET,
};
pub use subspace::{canonicalize, is_m_subspace, Subspace};
pub use walsh::{classify_spectrum, dual, is_bent, walsh_transform, SpectrumClass, SpectrumTag, WalshSpectrum};
