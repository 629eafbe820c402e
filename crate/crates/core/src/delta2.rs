//! Enumeration of quadratic differential monomials and their compilation
//! into recurrence rows.
//!
//! Monomials `f^(p) * f^(q)` with `p >= q >= -1` are numbered by a single
//! index `K >= 1` through the triangular pairing [`nu`]; order `-1` stands
//! for the constant factor 1, so `K = 2, 3, 4, ...` runs through
//! `f, f^2, f', f'f, (f')^2, f'', f''f, ...`.
//!
//! A term `z^s * f^(p) * f^(q)` contributes to the `z^n` coefficient of a
//! differential polynomial through the Cauchy product. [`RowGenerator`]
//! evaluates that contribution on a finite prefix, with `a_t = 0` for `t < 0`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{rising, Rational};

/// Triangular pairing: `K -> (i, j)` with `i >= j >= 1`.
pub fn nu(k: u64) -> Result<(u64, u64)> {
    if k < 1 {
        return Err(Error::InvalidIndex(format!("nu needs K >= 1, got {k}")));
    }
    // largest l with l(l+1)/2 <= k, i.e. floor(sqrt(2k + 1/4) - 1/2)
    let mut l = ((2.0 * k as f64).sqrt()) as u64;
    while l * (l + 1) / 2 > k {
        l -= 1;
    }
    while (l + 1) * (l + 2) / 2 <= k {
        l += 1;
    }
    let tri = l * (l + 1) / 2;
    Ok(if tri == k { (l, l) } else { (l + 1, k - tri) })
}

/// Inverse of [`nu`].
pub fn index_of_pair(i: u64, j: u64) -> Result<u64> {
    if j < 1 || i < j {
        return Err(Error::InvalidIndex(format!(
            "pair ({i}, {j}) must satisfy i >= j >= 1"
        )));
    }
    Ok(i * (i - 1) / 2 + j)
}

/// `f^(p) * f^(q)` with `p >= q >= -1`; order `-1` is the constant 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadMonomial {
    index: u64,
    p: i64,
    q: i64,
}

impl QuadMonomial {
    /// Orders may be given in either order; the pure constant `(-1, -1)` is rejected.
    pub fn from_orders(p: i64, q: i64) -> Result<Self> {
        let (p, q) = if p >= q { (p, q) } else { (q, p) };
        if q < -1 {
            return Err(Error::InvalidIndex(format!(
                "derivative orders must be >= -1, got ({p}, {q})"
            )));
        }
        if p == -1 {
            return Err(Error::InvalidIndex("the constant monomial is not allowed".into()));
        }
        let index = index_of_pair((p + 2) as u64, (q + 2) as u64)?;
        Ok(QuadMonomial { index, p, q })
    }

    /// Index `K`.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// Order of the first (higher) factor.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Order of the second factor; `-1` when the monomial is linear.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_linear(&self) -> bool {
        self.q == -1
    }

    /// Highest derivative order present (0 for `f` and `f^2`).
    pub fn order(&self) -> i64 {
        self.p.max(0)
    }
}

impl fmt::Display for QuadMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn factor(o: i64) -> String {
            match o {
                0 => "f".into(),
                1 => "f'".into(),
                2 => "f''".into(),
                o => format!("f^({o})"),
            }
        }
        if self.is_linear() {
            write!(f, "{}", factor(self.p))
        } else if self.p == self.q {
            write!(f, "({})^2", factor(self.p))
        } else {
            write!(f, "{}*{}", factor(self.p), factor(self.q))
        }
    }
}

pub fn monomial_of_index(k: u64) -> Result<QuadMonomial> {
    if k < 2 {
        return Err(Error::InvalidIndex(format!(
            "monomial index must be >= 2, got {k}"
        )));
    }
    let (i, j) = nu(k)?;
    QuadMonomial::from_orders(i as i64 - 2, j as i64 - 2)
}

/// Evaluates the `z^n` coefficient of `z^s * f^(p) * f^(q)` on a prefix.
///
/// The factor orders are kept as given (not reordered), so `(p, q)` and
/// `(q, p)` can be compared directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowGenerator {
    s: usize,
    p: i64,
    q: i64,
}

pub fn compile_term(s: usize, mono: &QuadMonomial) -> RowGenerator {
    RowGenerator::new(s, mono.p, mono.q)
}

impl RowGenerator {
    /// Orders must be `>= -1`.
    pub fn new(s: usize, p: i64, q: i64) -> Self {
        assert!(p >= -1 && q >= -1, "derivative orders must be >= -1");
        RowGenerator { s, p, q }
    }

    /// Largest prefix index read by row `n`.
    pub fn max_index(&self, n: usize) -> i64 {
        n as i64 - self.s as i64 + self.p.max(self.q).max(0)
    }

    /// True if row `n` can be evaluated from `len` known terms.
    pub fn fits(&self, n: usize, len: usize) -> bool {
        n < self.s || self.max_index(n) < len as i64
    }

    /// Row value at `n`, or `None` if the prefix is too short.
    pub fn value(&self, n: usize, prefix: &[Rational]) -> Option<Rational> {
        if n < self.s {
            return Some(Rational::zero());
        }
        if !self.fits(n, prefix.len()) {
            return None;
        }
        let j = (n - self.s) as i64;
        let weighted = |t: i64, order: i64| -> Rational {
            let v = &prefix[(t + order) as usize];
            if v.is_zero() {
                return Rational::zero();
            }
            v * Rational::from_integer(rising(t, order))
        };
        Some(match (self.p, self.q) {
            (-1, -1) => {
                if j == 0 {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }
            (o, -1) | (-1, o) => weighted(j, o),
            (p, q) => {
                let mut acc = Rational::zero();
                for t in 0..=j {
                    let left = weighted(t, p);
                    if left.is_zero() {
                        continue;
                    }
                    acc += left * weighted(j - t, q);
                }
                acc
            }
        })
    }
}
