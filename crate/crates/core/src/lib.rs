//! Exact intersection-theoretic counts for sums of two powers of binary forms.
//!
//! The crate is split into four layers:
//!
//! * [`chow_ring`]: integer polynomials in `ζ1, …, ζk` modulo `ζi^(ci+1)`, the
//!   Chow ring of a product of projective spaces.
//! * [`binary_forms`]: binary forms over the rationals and the first
//!   transvectant `{f, g} = f_x g_y - f_y g_x`.
//! * [`cycle_classes`]: closed-form cycle classes (blow-up classes, the
//!   pushforward of the variety of first transvectants, the `α` and `γ`
//!   classes) as ring elements.
//! * [`counting`]: problem validation, the degree of the locus of forms
//!   `f^a + g^b`, Chern-polynomial integrals and torus fixed-point weights.
//!
//! Everything is `no_std` (with `alloc`); IO and the command line live in the
//! `tvcount` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod binary_forms;
pub mod chow_ring;
pub mod counting;
pub mod cycle_classes;
mod error;

pub use binary_forms::{transvectant, transvectant_support, BinaryForm, SymbolicTransvectant};
pub use chow_ring::{RingSpec, TruncatedPolynomial};
pub use counting::{
    degree_of_power_sum_locus, fixed_point_weights, integrate_chern_polynomial, validate,
    validate_from_degree, ChernTerm, WeightPair,
};
pub use cycle_classes::{alpha_classes, beta_pushforward, gamma_class, PowerSumProblem};
pub use error::Error;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
