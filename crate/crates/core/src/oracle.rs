//! Reference sequences computed from classical integer recurrences and
//! triangles, with no dependence on differential equations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::Rational;
use crate::prefix::SequencePrefix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleName {
    /// `B_n / n!`
    BernoulliEgf,
    /// `E_n / n!` (secant numbers with signs, odd terms zero)
    EulerEgf,
    /// `Bell_n / n!`
    BellEgf,
    /// up/down numbers `A000111(n) / n!`
    ZigzagEgf,
    /// `zeta(2n+2) / pi^(2n+2)`
    ZetaRescaled,
    /// Taylor coefficients of Lambert W
    LambertW,
    /// `1 / n!`
    Exp,
}

impl OracleName {
    pub const ALL: [OracleName; 7] = [
        OracleName::BernoulliEgf,
        OracleName::EulerEgf,
        OracleName::BellEgf,
        OracleName::ZigzagEgf,
        OracleName::ZetaRescaled,
        OracleName::LambertW,
        OracleName::Exp,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OracleName::BernoulliEgf => "bernoulli-egf",
            OracleName::EulerEgf => "euler-egf",
            OracleName::BellEgf => "bell-egf",
            OracleName::ZigzagEgf => "zigzag-egf",
            OracleName::ZetaRescaled => "zeta-rescaled",
            OracleName::LambertW => "lambertw",
            OracleName::Exp => "exp",
        }
    }
}

impl fmt::Display for OracleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OracleName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OracleName::ALL
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| Error::Input {
                line: None,
                message: format!("unknown oracle {s:?}"),
            })
    }
}

pub fn oracle_sequence(name: OracleName, count: usize) -> Result<SequencePrefix> {
    if count == 0 {
        return Err(Error::Input {
            line: None,
            message: "oracle count must be at least 1".into(),
        });
    }
    let values = match name {
        OracleName::BernoulliEgf => over_factorial(bernoulli(count)),
        OracleName::EulerEgf => {
            let zz = zigzag(count);
            over_factorial(
                zz.into_iter()
                    .enumerate()
                    .map(|(n, v)| match n % 4 {
                        0 => Rational::from_integer(v),
                        2 => -Rational::from_integer(v),
                        _ => Rational::zero(),
                    })
                    .collect(),
            )
        }
        OracleName::BellEgf => over_factorial(bell(count).into_iter().map(Rational::from_integer).collect()),
        OracleName::ZigzagEgf => over_factorial(zigzag(count).into_iter().map(Rational::from_integer).collect()),
        OracleName::ZetaRescaled => {
            let b = bernoulli(2 * count + 1);
            let fact = factorials(2 * count + 1);
            (0..count)
                .map(|n| {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    let pow2 = BigInt::one() << (2 * n + 1);
                    &b[2 * n + 2] * Rational::from_integer(pow2 * sign)
                        / Rational::from_integer(fact[2 * n + 2].clone())
                })
                .collect()
        }
        OracleName::LambertW => {
            let fact = factorials(count);
            (0..count)
                .map(|n| {
                    if n == 0 {
                        return Rational::zero();
                    }
                    let base = -BigInt::from(n);
                    let num = num_traits::pow(base, n - 1);
                    Rational::new(num, fact[n].clone())
                })
                .collect()
        }
        OracleName::Exp => over_factorial(vec![Rational::one(); count]),
    };
    SequencePrefix::new(values)
}

fn factorials(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut acc = BigInt::one();
    for n in 0..count {
        if n > 0 {
            acc *= n;
        }
        out.push(acc.clone());
    }
    out
}

fn over_factorial(values: Vec<Rational>) -> Vec<Rational> {
    let fact = factorials(values.len());
    values
        .into_iter()
        .zip(fact)
        .map(|(v, f)| v / Rational::from_integer(f))
        .collect()
}

/// `B_0 .. B_{count-1}` from `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
fn bernoulli(count: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(count);
    // binomial row C(n+1, .) maintained incrementally
    let mut row = vec![BigInt::one(), BigInt::one()];
    for n in 0..count {
        if n == 0 {
            b.push(Rational::one());
            continue;
        }
        let mut next = vec![BigInt::one(); row.len() + 1];
        for k in 1..row.len() {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(row[k].clone()) * bk;
        }
        b.push(-acc / Rational::from_integer(row[n].clone()));
    }
    b
}

/// Up/down numbers via the Seidel-Entringer boustrophedon triangle:
/// `E(n, 0) = 0` for `n > 0`, `E(n, k) = E(n, k-1) + E(n-1, n-k)`.
fn zigzag(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    out.push(BigInt::one());
    for n in 1..count {
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            row[k] = &row[k - 1] + &prev[n - k];
        }
        out.push(row[n].clone());
        prev = row;
    }
    out.truncate(count);
    out
}

/// Bell numbers via the Bell triangle.
fn bell(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut row = vec![BigInt::one()];
    for _ in 0..count {
        out.push(row[0].clone());
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for v in &row {
            let t = next.last().unwrap() + v;
            next.push(t);
        }
        row = next;
    }
    out
}
