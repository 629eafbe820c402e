//! Concrete quadratic differential equations `sum c * z^s * f^(p) * f^(q) = 0`.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::delta2::{compile_term, QuadMonomial, RowGenerator};
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, primitive_integers, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EqTerm {
    pub s: usize,
    pub mono: QuadMonomial,
    pub coeff: Rational,
}

impl EqTerm {
    pub fn new(s: usize, mono: QuadMonomial, coeff: Rational) -> Self {
        EqTerm { s, mono, coeff }
    }

    pub fn generator(&self) -> RowGenerator {
        compile_term(self.s, &self.mono)
    }

    /// How far past the row index this term reads: `order - s`.
    pub fn shift(&self) -> i64 {
        self.mono.order() - self.s as i64
    }
}

/// Nonempty, with like terms merged, zero coefficients dropped, and terms
/// sorted by `(K, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadEquation {
    terms: Vec<EqTerm>,
}

impl QuadEquation {
    pub fn new(terms: impl IntoIterator<Item = EqTerm>) -> Result<Self> {
        let mut merged: BTreeMap<(u64, usize), (QuadMonomial, Rational)> = BTreeMap::new();
        for t in terms {
            let e = merged
                .entry((t.mono.index(), t.s))
                .or_insert_with(|| (t.mono, Rational::zero()));
            e.1 += t.coeff;
        }
        let terms: Vec<EqTerm> = merged
            .into_iter()
            .filter(|(_, (_, c))| !c.is_zero())
            .map(|((_, s), (mono, coeff))| EqTerm { s, mono, coeff })
            .collect();
        if terms.is_empty() {
            return Err(Error::InvalidEquation("equation has no nonzero terms".into()));
        }
        Ok(QuadEquation { terms })
    }

    /// Shorthand for tests and examples: `(s, p, q, coeff)`.
    pub fn from_tuples(terms: &[(usize, i64, i64, Rational)]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for (s, p, q, c) in terms {
            out.push(EqTerm::new(*s, QuadMonomial::from_orders(*p, *q)?, c.clone()));
        }
        QuadEquation::new(out)
    }

    pub fn terms(&self) -> &[EqTerm] {
        &self.terms
    }

    /// Largest ansatz slot used (`K - 2`).
    pub fn d(&self) -> usize {
        self.terms.iter().map(|t| t.mono.index() as usize - 2).max().unwrap()
    }

    /// Largest power of `z`.
    pub fn m(&self) -> usize {
        self.terms.iter().map(|t| t.s).max().unwrap()
    }

    /// Row `n` reads indices up to `n + max_shift()`.
    pub fn max_shift(&self) -> i64 {
        self.terms.iter().map(EqTerm::shift).max().unwrap()
    }

    pub fn is_linear(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_linear())
    }

    /// True if row `n` can be evaluated from `len` known terms.
    pub fn fits(&self, n: usize, len: usize) -> bool {
        self.terms.iter().all(|t| t.generator().fits(n, len))
    }

    /// Residual of row `n`, or `None` if the prefix is too short.
    pub fn row_value(&self, n: usize, prefix: &[Rational]) -> Option<Rational> {
        let mut acc = Rational::zero();
        for t in &self.terms {
            let v = t.generator().value(n, prefix)?;
            if !v.is_zero() {
                acc += &t.coeff * v;
            }
        }
        Some(acc)
    }

    /// Integer coefficients with unit content; the coefficient of the last
    /// term (highest `K`, then highest `s`) is positive.
    pub fn normalized(&self) -> QuadEquation {
        let coeffs: Vec<Rational> = self.terms.iter().map(|t| t.coeff.clone()).collect();
        let mut ints = primitive_integers(&coeffs);
        if ints.last().unwrap().is_negative() {
            ints.iter_mut().for_each(|x| *x = -x.clone());
        }
        QuadEquation {
            terms: self
                .terms
                .iter()
                .zip(ints)
                .map(|(t, c)| EqTerm::new(t.s, t.mono, Rational::from_integer(c)))
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Result<QuadEquation> {
        QuadEquation::new(
            self.terms
                .iter()
                .map(|t| EqTerm::new(t.s, t.mono, &t.coeff * c)),
        )
    }

    /// The equation satisfied by `b_n = a_n / lambda^n` whenever this one is
    /// satisfied by `a_n`. Each term picks up `lambda^(p + q - s)`, with
    /// order `-1` counting as 0.
    pub fn for_rescaled(&self, lambda: &Rational) -> Result<QuadEquation> {
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        QuadEquation::new(self.terms.iter().map(|t| {
            let e = t.mono.p().max(0) + t.mono.q().max(0) - t.s as i64;
            EqTerm::new(t.s, t.mono, &t.coeff * pow(lambda, e))
        }))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("equation serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input {
            line: Some(e.line()),
            message: e.to_string(),
        })
    }
}

pub(crate) fn pow(x: &Rational, e: i64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireTerm {
    s: usize,
    p: i64,
    q: i64,
    c: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireEquation {
    terms: Vec<WireTerm>,
}

impl Serialize for QuadEquation {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        WireEquation {
            terms: self
                .terms
                .iter()
                .map(|t| WireTerm {
                    s: t.s,
                    p: t.mono.p(),
                    q: t.mono.q(),
                    c: format_rational(&t.coeff),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QuadEquation {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = WireEquation::deserialize(de)?;
        let mut terms = Vec::with_capacity(wire.terms.len());
        for t in wire.terms {
            if t.p < t.q {
                return Err(D::Error::custom(format!("term needs p >= q, got ({}, {})", t.p, t.q)));
            }
            let mono = QuadMonomial::from_orders(t.p, t.q).map_err(D::Error::custom)?;
            let c = parse_rational(&t.c).map_err(D::Error::custom)?;
            terms.push(EqTerm::new(t.s, mono, c));
        }
        QuadEquation::new(terms).map_err(D::Error::custom)
    }
}
