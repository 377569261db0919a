//! Sparse multivariate polynomials, term orders and the tag-ring grading.

mod grading;
mod monomial;
mod order;
mod polynomial;

pub use grading::{
    representation_height, tag_monomial_degree, tx_degree, tx_homogeneous_components,
};
pub use monomial::Monomial;
pub use order::{OrderBlock, OrderKind, TermOrder};
pub use polynomial::{LeadingData, Polynomial, Ring, Term};
