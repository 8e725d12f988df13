//! Exact analysis of linear constant-coefficient PDE systems `A v = 0`
//! presented as polynomial matrices.
//!
//! The crate computes syzygy matrices with a module Gröbner basis engine,
//! splits an operator into controllable and uncontrollable parts, decides
//! complex ellipticity and complex constant rank via Fitting ideals and
//! radical membership, semi-decides the real conditions by sampling, and
//! checks pointwise exactness `ker A(ξ) = im S(ξ)` at exact points of `Q(i)^n`.

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod decompose;
pub mod document;
pub mod error;
pub mod gb;
pub mod module_ops;
pub mod poly;
pub mod rank;

pub use error::{Error, Result};
pub use gb::{syzygy_matrix, ModuleElement, PolyMatrix, Submodule};
pub use poly::{parse_poly, GaussianRational, Monomial, MonomialOrder, Polynomial, Rational, Ring};
