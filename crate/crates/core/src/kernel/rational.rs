//! Exact rational scalars.
//!
//! `Rational` is [`num_rational::BigRational`], which keeps every value
//! reduced with a positive denominator. The textual form is `p/q`, or just
//! `p` for integers, and is shared by every file format in the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic with an explicit division-by-zero error.
pub fn rat_arith(a: &Rational, b: &Rational, op: ArithOp) -> Result<Rational> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "ratio with zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or `p` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `(j+p)!/j!`, the factor picked up by the `z^j` coefficient of the
/// `p`-th derivative of a power series.
pub fn falling_weight(j: i64, p: i64) -> Result<Rational> {
    if j < 0 {
        return Err(Error::NegativeArgument { name: "j", value: j });
    }
    if p < 0 {
        return Err(Error::NegativeArgument { name: "p", value: p });
    }
    Ok(Rational::from_integer(rising(j, p)))
}

/// `(j+1)(j+2)...(j+p)` for any integer `j`; `p <= 0` yields 1.
pub(crate) fn rising(j: i64, p: i64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 1..=p {
        acc *= j + t;
    }
    acc
}

/// Least common multiple of the denominators of `values`.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector to coprime integers. The sign is left alone.
pub(crate) fn primitive_integers(values: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = denominator_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arith_examples() {
        let sixth = ratio(1, 6);
        assert_eq!(rat_arith(&sixth, &sixth, ArithOp::Mul).unwrap(), ratio(1, 36));
        assert_eq!(
            rat_arith(&int(5), &ratio(1, 90), ArithOp::Mul).unwrap(),
            ratio(1, 18)
        );
        assert_eq!(
            rat_arith(&ratio(1, 2), &int(0), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(rat_arith(&int(1), &int(3), ArithOp::Sub).unwrap(), int(-2));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational(" 2/4 ").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert_eq!(format_rational(&ratio(-3, 9)), "-1/3");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(format_rational(&int(12)), "12");
    }

    #[test]
    fn falling_weight_examples() {
        for k in 0..10 {
            assert_eq!(falling_weight(k, 1).unwrap(), int(k + 1));
            assert_eq!(falling_weight(k, 2).unwrap(), int((k + 1) * (k + 2)));
        }
        assert_eq!(falling_weight(5, 0).unwrap(), int(1));
        assert!(falling_weight(-1, 2).is_err());
        assert!(falling_weight(1, -2).is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = [ratio(1, 2), ratio(-3, 4), int(0)];
        let p = primitive_integers(&v);
        assert_eq!(p, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_rat() -> impl Strategy<Value = Rational> {
            (-50i64..50, 1i64..30).prop_map(|(n, d)| ratio(n, d))
        }

        proptest! {
            #[test]
            fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
                let add = |x: &Rational, y: &Rational| rat_arith(x, y, ArithOp::Add).unwrap();
                let mul = |x: &Rational, y: &Rational| rat_arith(x, y, ArithOp::Mul).unwrap();
                prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
                prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
                prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
                if !b.is_zero() {
                    let q = rat_arith(&a, &b, ArithOp::Div).unwrap();
                    prop_assert_eq!(mul(&q, &b), a.clone());
                }
                // round trip through the wire format
                prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
            }
        }
    }
}
