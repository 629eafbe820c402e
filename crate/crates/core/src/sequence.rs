//! Checking equations against prefixes and extending prefixes from equations.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::equation::QuadEquation;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, Rational};
use crate::prefix::SequencePrefix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub rows_checked: usize,
    /// First row with a nonzero residual.
    pub first_failure: Option<(usize, Rational)>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire {
            passed: bool,
            rows_checked: usize,
            first_failure: Option<Failure>,
        }
        #[derive(Serialize)]
        struct Failure {
            n: usize,
            residual: String,
        }
        serde_json::to_string(&Wire {
            passed: self.passed,
            rows_checked: self.rows_checked,
            first_failure: self.first_failure.as_ref().map(|(n, r)| Failure {
                n: *n,
                residual: format_rational(r),
            }),
        })
        .expect("report serializes")
    }
}

/// Evaluates rows `n = 0 ..= N - max_shift` and stops at the first nonzero one.
pub fn check(eq: &QuadEquation, prefix: &[Rational]) -> CheckReport {
    let last = prefix.len() as i64 - 1;
    let end = last - eq.max_shift();
    let mut rows_checked = 0;
    for n in 0..=end.max(-1) {
        let n = n as usize;
        let v = eq.row_value(n, prefix).expect("row fits the prefix");
        rows_checked += 1;
        if !v.is_zero() {
            return CheckReport {
                passed: false,
                rows_checked,
                first_failure: Some((n, v)),
            };
        }
    }
    CheckReport {
        passed: true,
        rows_checked,
        first_failure: None,
    }
}

/// Incremental solver for `a_{n + shift} = Phi(n, a_0, ..., a_{n + shift - 1})`.
///
/// Rows whose highest index is already known are warm-up rows and must
/// vanish on the initial terms. Each later row introduces exactly one new
/// term, which it determines linearly.
#[derive(Debug, Clone)]
pub struct ExtensionState {
    equation: QuadEquation,
    known: Vec<Rational>,
    max_shift: i64,
}

impl ExtensionState {
    pub fn new(equation: QuadEquation, initial: &[Rational]) -> Result<Self> {
        let max_shift = equation.max_shift();
        let len = initial.len() as i64;
        let needed = max_shift.max(1);
        if len < needed {
            return Err(Error::InsufficientInitialTerms {
                needed: needed as usize,
                got: initial.len(),
            });
        }
        for n in 0..(len - max_shift).max(0) {
            let n = n as usize;
            let v = equation.row_value(n, initial).expect("warm-up row fits");
            if !v.is_zero() {
                return Err(Error::InconsistentInitialTerms { n, residual: v });
            }
        }
        Ok(ExtensionState {
            equation,
            known: initial.to_vec(),
            max_shift,
        })
    }

    pub fn known(&self) -> &[Rational] {
        &self.known
    }

    pub fn max_shift(&self) -> i64 {
        self.max_shift
    }

    /// Row index that determines the next term.
    pub fn next_row(&self) -> usize {
        (self.known.len() as i64 - self.max_shift) as usize
    }

    /// Solves the next row for the next term and appends it.
    pub fn step(&mut self) -> Result<Rational> {
        let n = self.next_row();
        // the row is at most quadratic in the new term x: c0 + c1 x + c2 x^2
        let mut eval_at = |x: Rational| {
            self.known.push(x);
            let v = self.equation.row_value(n, &self.known).expect("row fits");
            self.known.pop();
            v
        };
        let r0 = eval_at(Rational::zero());
        let rp = eval_at(Rational::one());
        let rm = eval_at(-Rational::one());
        let two = Rational::from_integer(2.into());
        let c2 = (&rp + &rm) / &two - &r0;
        let c1 = (&rp - &rm) / &two;
        if !c2.is_zero() {
            return Err(Error::NonlinearStep { n });
        }
        if c1.is_zero() {
            return Err(Error::LeadingCoefficientZero { n });
        }
        let next = -r0 / c1;
        self.known.push(next.clone());
        Ok(next)
    }

    pub fn into_prefix(self) -> SequencePrefix {
        SequencePrefix::new(self.known).expect("nonempty")
    }
}

/// Appends `count` terms to `initial`; the result includes the initial terms.
pub fn extend(eq: &QuadEquation, initial: &[Rational], count: usize) -> Result<SequencePrefix> {
    let mut state = ExtensionState::new(eq.clone(), initial)?;
    for _ in 0..count {
        state.step()?;
    }
    Ok(state.into_prefix())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};

    fn zigzag_eq() -> QuadEquation {
        QuadEquation::from_tuples(&[(0, 2, -1, int(1)), (0, 1, 0, int(-1))]).unwrap()
    }

    fn zeta_eq() -> QuadEquation {
        QuadEquation::from_tuples(&[
            (1, 2, -1, int(2)),
            (0, 1, -1, int(5)),
            (1, 1, 0, int(-4)),
            (0, 0, 0, int(-2)),
        ])
        .unwrap()
    }

    fn bernoulli_eq() -> QuadEquation {
        QuadEquation::from_tuples(&[
            (1, 1, -1, int(1)),
            (1, 0, -1, int(1)),
            (0, 0, 0, int(1)),
            (0, 0, -1, int(-1)),
        ])
        .unwrap()
    }

    #[test]
    fn check_examples() {
        let zeta = [ratio(1, 6), ratio(1, 90), ratio(1, 945), ratio(1, 9450), ratio(1, 93555)];
        let r = check(&zeta_eq(), &zeta);
        assert!(r.passed);
        assert_eq!(r.rows_checked, 4);

        let zz = [int(1), int(1), ratio(1, 2), ratio(1, 3), ratio(5, 24)];
        assert!(check(&zigzag_eq(), &zz).passed);

        let y = QuadEquation::from_tuples(&[(0, 0, -1, int(1))]).unwrap();
        let r = check(&y, &[int(0), int(0), int(3), int(1)]);
        assert!(!r.passed);
        assert_eq!(r.first_failure, Some((2, int(3))));
    }

    #[test]
    fn extend_examples() {
        let out = extend(&zigzag_eq(), &[int(1), int(1)], 3).unwrap();
        assert_eq!(&out[2..], &[ratio(1, 2), ratio(1, 3), ratio(5, 24)]);

        let out = extend(&zeta_eq(), &[ratio(1, 6)], 1).unwrap();
        assert_eq!(out[1], ratio(1, 90));

        let out = extend(&bernoulli_eq(), &[int(1), ratio(-1, 2)], 1).unwrap();
        assert_eq!(out[2], ratio(1, 12));
    }

    #[test]
    fn extension_errors() {
        // z y' + z y y' - y: the row introducing a_1 has coefficient 0 when a_0 = 0
        let lambert = QuadEquation::from_tuples(&[
            (1, 1, -1, int(1)),
            (1, 1, 0, int(1)),
            (0, 0, -1, int(-1)),
        ])
        .unwrap();
        assert_eq!(
            extend(&lambert, &[int(0)], 2),
            Err(Error::LeadingCoefficientZero { n: 1 })
        );
        assert!(extend(&lambert, &[int(0), int(1)], 3).is_ok());

        assert!(matches!(
            extend(&lambert, &[int(1), int(1)], 1),
            Err(Error::InconsistentInitialTerms { n: 0, .. })
        ));
        assert_eq!(
            extend(&zigzag_eq(), &[int(1)], 1),
            Err(Error::InsufficientInitialTerms { needed: 2, got: 1 })
        );
        // f^2 - f at row 0 is quadratic in a_0
        let sq = QuadEquation::from_tuples(&[(0, 0, 0, int(1)), (0, 0, -1, int(-1))]).unwrap();
        assert_eq!(extend(&sq, &[int(0)], 0).unwrap().len(), 1);
    }

    #[test]
    fn nonlinear_step_is_reported() {
        // (f')^2 - f: row 0 reads a_1 twice
        let eq = QuadEquation::from_tuples(&[(0, 1, 1, int(1)), (0, 0, -1, int(-1))]).unwrap();
        assert_eq!(extend(&eq, &[int(1)], 1), Err(Error::NonlinearStep { n: 0 }));
    }

    #[test]
    fn check_json() {
        let y = QuadEquation::from_tuples(&[(0, 0, -1, int(1))]).unwrap();
        assert_eq!(
            check(&y, &[int(0), ratio(1, 2)]).to_json(),
            r#"{"passed":false,"rows_checked":2,"first_failure":{"n":1,"residual":"1/2"}}"#
        );
    }
}
