#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use quadguess::{QuadEquation, RatMatrix, Rational};

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn over_factorial(v: impl IntoIterator<Item = Rational>) -> Vec<Rational> {
    v.into_iter()
        .enumerate()
        .map(|(n, x)| x / Rational::from_integer(factorial(n)))
        .collect()
}

/// `B_n` (with `B_1 = -1/2`) via the Akiyama-Tanigawa table.
pub fn bernoulli(n: usize) -> Rational {
    let mut a: Vec<Rational> = (0..=n).map(|m| q(1, m as i64 + 1)).collect();
    for m in (1..=n).rev() {
        for j in 0..m {
            a[j] = r(j as i64 + 1) * (&a[j] - &a[j + 1]);
        }
    }
    if n == 1 {
        -a[0].clone()
    } else {
        a[0].clone()
    }
}

/// Values at 0 of the n-th derivatives of tan and sec, from the derivative
/// polynomials `tan^(n) = P_n(tan)` and `sec^(n) = sec * Q_n(tan)`.
pub fn tan_sec_derivatives(count: usize) -> Vec<(BigInt, BigInt)> {
    fn deriv(p: &[BigInt]) -> Vec<BigInt> {
        p.iter().enumerate().skip(1).map(|(i, c)| c * i).collect()
    }
    fn one_plus_x2_times(p: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); p.len() + 2];
        for (i, c) in p.iter().enumerate() {
            out[i] += c;
            out[i + 2] += c;
        }
        out
    }
    let mut p = vec![BigInt::zero(), BigInt::one()];
    let mut qq = vec![BigInt::one()];
    let mut out = Vec::new();
    for _ in 0..count {
        out.push((p[0].clone(), qq[0].clone()));
        p = one_plus_x2_times(&deriv(&p));
        let mut next = one_plus_x2_times(&deriv(&qq));
        if next.len() < qq.len() + 1 {
            next.resize(qq.len() + 1, BigInt::zero());
        }
        for (i, c) in qq.iter().enumerate() {
            next[i + 1] += c;
        }
        qq = next;
    }
    out
}

pub fn bernoulli_egf(count: usize) -> Vec<Rational> {
    over_factorial((0..count).map(bernoulli))
}

/// Taylor coefficients of `tan(z/2 + pi/4) = sec z + tan z`.
pub fn zigzag_egf(count: usize) -> Vec<Rational> {
    over_factorial(
        tan_sec_derivatives(count)
            .into_iter()
            .map(|(t, s)| Rational::from_integer(t + s)),
    )
}

/// Taylor coefficients of `sech z`.
pub fn euler_egf(count: usize) -> Vec<Rational> {
    over_factorial(
        tan_sec_derivatives(count)
            .into_iter()
            .enumerate()
            .map(|(n, (_, s))| {
                let v = Rational::from_integer(s);
                if n % 4 == 2 {
                    -v
                } else {
                    v
                }
            }),
    )
}

/// Bell numbers as row sums of Stirling numbers of the second kind.
pub fn bell_egf(count: usize) -> Vec<Rational> {
    let mut row = vec![BigInt::one()];
    let mut bells = Vec::new();
    for n in 0..count {
        bells.push(Rational::from_integer(row.iter().sum()));
        let mut next = vec![BigInt::zero(); n + 2];
        for (k, s) in row.iter().enumerate() {
            next[k] += s * k;
            next[k + 1] += s;
        }
        row = next;
    }
    over_factorial(bells)
}

/// `zeta(2n+2) / pi^(2n+2)`.
pub fn zeta_rescaled(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|n| {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let pow2 = Rational::from_integer(BigInt::from(sign) << (2 * n + 1));
            pow2 * bernoulli(2 * n + 2) / Rational::from_integer(factorial(2 * n + 2))
        })
        .collect()
}

pub fn lambertw(count: usize) -> Vec<Rational> {
    (0..count)
        .map(|n| {
            if n == 0 {
                return Rational::zero();
            }
            let num = num_traits::pow(BigInt::from(-(n as i64)), n - 1);
            Rational::new(num, factorial(n))
        })
        .collect()
}

pub fn exp_series(count: usize) -> Vec<Rational> {
    over_factorial(vec![Rational::one(); count])
}

/// `n^n / n!`.
pub fn self_powers(count: usize) -> Vec<Rational> {
    over_factorial((0..count).map(|n| Rational::from_integer(num_traits::pow(BigInt::from(n), n))))
}

/// Equation from `(s, p, q, c)` tuples, normalized.
pub fn equation(terms: &[(usize, i64, i64, i64)]) -> QuadEquation {
    let t: Vec<_> = terms.iter().map(|&(s, p, q, c)| (s, p, q, r(c))).collect();
    QuadEquation::from_tuples(&t).unwrap().normalized()
}

fn coefficient_map(eq: &QuadEquation) -> BTreeMap<(u64, usize), Rational> {
    eq.terms()
        .iter()
        .map(|t| ((t.mono.index(), t.s), t.coeff.clone()))
        .collect()
}

/// True if `target` is a linear combination of `basis`.
pub fn in_span(basis: &[QuadEquation], target: &QuadEquation) -> bool {
    let maps: Vec<_> = basis.iter().map(coefficient_map).collect();
    let tmap = coefficient_map(target);
    let mut keys: Vec<_> = maps.iter().flat_map(|m| m.keys().copied()).collect();
    keys.extend(tmap.keys().copied());
    keys.sort();
    keys.dedup();
    let row = |m: &BTreeMap<(u64, usize), Rational>| -> Vec<Rational> {
        keys.iter()
            .map(|k| m.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect()
    };
    let rows: Vec<_> = maps.iter().map(row).collect();
    let base_rank = if rows.is_empty() {
        0
    } else {
        RatMatrix::from_rows(rows.clone()).rank()
    };
    let mut with_target = rows;
    with_target.push(row(&tmap));
    RatMatrix::from_rows(with_target).rank() == base_rank
}

/// Ansatz vector of an equation for slots `0..=d` and degree bound `m`.
pub fn ansatz_vector(eq: &QuadEquation, d: usize, m: usize) -> Option<Vec<Rational>> {
    let mut v = vec![Rational::zero(); (d + 1) * (m + 1)];
    for t in eq.terms() {
        let k = t.mono.index() as usize - 2;
        if k > d || t.s > m {
            return None;
        }
        v[k * (m + 1) + t.s] = t.coeff.clone();
    }
    Some(v)
}
