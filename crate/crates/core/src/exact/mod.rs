//! Exact arithmetic: rationals, monomials, sparse polynomials with the
//! contraction action, and dense rational linear algebra.

pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod rational;

pub use matrix::{kernel_basis, rank, EchelonBasis, Matrix};
pub use monomial::{monomial_basis, monomials_up_to, Monomial};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use polynomial::{contract, Polynomial};
pub use rational::{binomial, Rational};
