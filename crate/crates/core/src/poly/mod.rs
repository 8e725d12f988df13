//! Exact multivariate polynomials over the rationals.
//!
//! Every [`Polynomial`] is bound to a shared [`Ring`] which fixes the variable
//! names and the monomial order used for the canonical term list. Evaluation
//! happens over the Gaussian rationals so that complex frequencies such as
//! `(1, i)` can be inspected exactly.

mod monomial;
mod number;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{monomial_compare, BaseOrder, Monomial, MonomialOrder};
pub use number::{format_rational, GaussianRational, Rational};
pub use parse::parse_poly;
pub use polynomial::Polynomial;
pub(crate) use ring::same_ring;
pub use ring::Ring;
