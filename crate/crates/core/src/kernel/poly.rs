//! Dense univariate polynomials over the rationals.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{primitive_integers, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    N,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::N => "n",
        }
    }
}

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Polynomial { var, coeffs: vec![] }
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Polynomial::new(var, vec![c])
    }

    /// `a*x + b`
    pub fn linear(var: Var, a: Rational, b: Rational) -> Self {
        Polynomial::new(var, vec![b, a])
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Polynomial::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by `x - root`, assuming `root` is a root. Returns the quotient.
    fn deflate(&self, root: &Rational) -> Self {
        let d = self.coeffs.len();
        let mut q = vec![Rational::zero(); d.saturating_sub(1)];
        let mut carry = Rational::zero();
        for i in (1..d).rev() {
            carry = &self.coeffs[i] + carry * root;
            q[i - 1] = carry.clone();
        }
        Polynomial::new(self.var, q)
    }

    /// Splits off rational linear factors.
    ///
    /// Returns `(content, factors, rest)` with `self = content * prod(a*x+b) * rest`.
    /// Each factor `(a, b)` is a primitive integer pair with `a > 0`; `rest` is
    /// primitive with positive leading coefficient and has no rational roots
    /// within the search bound. Factors are ordered by descending `a`, then
    /// ascending `b`. Polynomials whose extreme coefficients are too large to
    /// enumerate divisors of are returned unfactored.
    pub fn factor_linear(&self) -> (Rational, Vec<(BigInt, BigInt)>, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), vec![], Polynomial::constant(self.var, Rational::one()));
        }
        let mut rest = self.renormalized();
        let mut factors = Vec::new();
        'outer: while rest.degree().unwrap_or(0) > 0 {
            if rest.coeffs[0].is_zero() {
                factors.push((BigInt::one(), BigInt::zero()));
                rest = rest.deflate(&Rational::zero());
                continue;
            }
            let c0 = rest.coeffs[0].to_integer().abs().to_u64();
            let cd = rest.leading().unwrap().to_integer().abs().to_u64();
            let (Some(c0), Some(cd)) = (c0, cd) else {
                break;
            };
            if c0 > DIVISOR_LIMIT || cd > DIVISOR_LIMIT {
                break;
            }
            for v in divisors(cd) {
                for u in divisors(c0) {
                    for sign in [-1i64, 1] {
                        let root = Rational::new(BigInt::from(u) * sign, BigInt::from(v));
                        if rest.eval(&root).is_zero() {
                            // x - u/v is proportional to v*x - u
                            factors.push((root.denom().clone(), -root.numer().clone()));
                            rest = rest.deflate(&root).renormalized();
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        factors.sort_by(|(a1, b1), (a2, b2)| a2.cmp(a1).then(b1.cmp(b2)));
        let mut lead = rest.leading().unwrap().clone();
        for (a, _) in &factors {
            lead *= Rational::from_integer(a.clone());
        }
        let content = self.leading().unwrap() / lead;
        (content, factors, rest)
    }

    /// Primitive integer version with positive leading coefficient.
    fn renormalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let ints = primitive_integers(&self.coeffs);
        let p = Polynomial::new(
            self.var,
            ints.into_iter().map(Rational::from_integer).collect(),
        );
        if p.leading().unwrap().is_negative() {
            p.scale(&-Rational::one())
        } else {
            p
        }
    }
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.var, rhs.var);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        Polynomial::new(self.var, coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.var, rhs.var);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(self.var, coeffs)
    }
}
