//! Exact guessing of quadratic differential equations from sequence prefixes.
//!
//! Given `a_0, ..., a_N`, [`guess`] looks for polynomials `P_k(z)` such that
//! `sum_k P_k(z) * M_{k+2}(f) = 0` for `f = sum a_n z^n`, where `M_K` runs
//! through the quadratic monomials `f, f^2, f', f'f, (f')^2, f'', ...`.
//! Every such equation is equivalent to a recurrence with convolution sums,
//! which [`extend`] uses to compute further terms.

pub mod cli;
pub mod delta2;
pub mod equation;
pub mod error;
pub mod guess;
pub mod kernel;
pub mod oracle;
pub mod prefix;
pub mod render;
pub mod sequence;

pub use delta2::{compile_term, index_of_pair, monomial_of_index, nu, QuadMonomial, RowGenerator};
pub use equation::{EqTerm, QuadEquation};
pub use error::{Error, Result};
pub use guess::{assemble_system, guess, normalize, GuessConfig, GuessResult, GuessStatus, RowCounts};
pub use kernel::{Polynomial, RatMatrix, Rational};
pub use oracle::{oracle_sequence, OracleName};
pub use prefix::SequencePrefix;
pub use render::{render, Expr, RenderMode};
pub use sequence::{check, extend, CheckReport, ExtensionState};
