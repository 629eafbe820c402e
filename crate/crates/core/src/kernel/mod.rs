//! Exact arithmetic: rationals, polynomials, linear forms in the ansatz
//! unknowns, and homogeneous nullspaces.

mod linear;
mod matrix;
mod poly;
mod rational;

pub use linear::{LinearForm, UnknownId};
pub use matrix::RatMatrix;
pub use poly::{Polynomial, Var};
pub(crate) use rational::{primitive_integers, rising};
pub use rational::{falling_weight, format_rational, int, parse_rational, rat_arith, ratio, ArithOp, Rational};
