use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::rational::Rational;

/// Ansatz unknown `c_{k,i}`: the coefficient of `z^i` in the polynomial
/// multiplying the `k`-th quadratic monomial. Ordering is k-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnknownId {
    pub k: usize,
    pub i: usize,
}

impl UnknownId {
    pub fn new(k: usize, i: usize) -> Self {
        UnknownId { k, i }
    }

    /// Column of this unknown when unknowns are laid out k-major with
    /// `m + 1` powers per slot.
    pub fn column(self, m: usize) -> usize {
        self.k * (m + 1) + self.i
    }

    pub fn from_column(col: usize, m: usize) -> Self {
        UnknownId {
            k: col / (m + 1),
            i: col % (m + 1),
        }
    }
}

impl fmt::Display for UnknownId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c[{},{}]", self.k, self.i)
    }
}

/// Sparse linear combination of ansatz unknowns. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForm {
    terms: BTreeMap<UnknownId, Rational>,
}

impl LinearForm {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, id: UnknownId, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(id).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&id);
        }
    }

    pub fn coeff(&self, id: UnknownId) -> Rational {
        self.terms.get(&id).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&UnknownId, &Rational)> {
        self.terms.iter()
    }

    /// Value of the form at a dense assignment indexed by column.
    pub fn eval(&self, values: &[Rational], m: usize) -> Rational {
        self.terms
            .iter()
            .map(|(id, c)| c * &values[id.column(m)])
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Dense row over `width` columns laid out for degree bound `m`.
    pub fn to_dense(&self, width: usize, m: usize) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); width];
        for (id, c) in &self.terms {
            row[id.column(m)] = c.clone();
        }
        row
    }
}
