//! Span semantics, canonical forms and rewrite-rule verification for the
//! phase-free fragments of the ZX-calculus built from copy/add spiders,
//! affine points and Boolean polynomial boxes.
//!
//! Layers, bottom up:
//!
//! * [`f2`] and [`nat`]: matrices over GF(2) and over the naturals.
//! * [`boolpoly`]: Boolean polynomials in algebraic normal form.
//! * [`diagram`]: term trees, the text DSL, macros and fragments.
//! * [`spancat`]: linear and affine spans up to apex isomorphism.
//! * [`semantics`]: functors from diagrams into each model.
//! * [`rules`]: the equation catalog, rewriting and the conjecture probe.
//!
//! Bit convention used everywhere: coordinate 1 is wire 1, and when a vector
//! of wires indexes one of `2^n` basis states, wire 1 is the most
//! significant bit.

pub mod boolpoly;
pub mod diagram;
pub mod error;
pub mod f2;
pub mod nat;
pub mod rules;
pub mod scalar;
pub mod semantics;
pub mod spancat;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use scalar::Natural;

/// Natural-number matrix with checked `u64` entries.
pub type NatMatrix64 = nat::NatMatrix<u64>;
/// Natural-number matrix with arbitrary-precision entries.
pub type BigNatMatrix = nat::NatMatrix<num_bigint::BigUint>;
