//! Finite sequence prefixes and their file formats.
//!
//! Two formats are accepted: plain text with one rational per line (blank
//! lines and `#` comments ignored), or a JSON array whose entries are
//! `"p/q"` strings or integers.

use std::ops::Deref;

use num_traits::Zero;
use serde_json::Value;

use crate::equation::pow;
use crate::error::{Error, Result};
use crate::kernel::{format_rational, parse_rational, Rational};

/// `a_0, ..., a_N` with `N >= 0`. Terms with negative index are implicitly 0
/// and never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequencePrefix(Vec<Rational>);

impl SequencePrefix {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Input {
                line: None,
                message: "sequence prefix is empty".into(),
            });
        }
        Ok(SequencePrefix(values))
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }

    /// Index of the last known term.
    pub fn last_index(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `a_n -> a_n / lambda^n`.
    pub fn rescaled(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(SequencePrefix(
            self.0
                .iter()
                .enumerate()
                .map(|(n, a)| a * pow(lambda, -(n as i64)))
                .collect(),
        ))
    }

    /// Multiplies each term by `1/n!` (for exponential generating functions).
    pub fn egf_to_ogf(&self) -> Self {
        let mut fact = Rational::from_integer(1.into());
        SequencePrefix(
            self.0
                .iter()
                .enumerate()
                .map(|(n, a)| {
                    if n > 0 {
                        fact *= Rational::from_integer(n.into());
                    }
                    a / &fact
                })
                .collect(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('[') {
            Self::parse_json(text)
        } else {
            Self::parse_lines(text)
        }
    }

    fn parse_lines(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap().trim();
            if body.is_empty() {
                continue;
            }
            let v = parse_rational(body).map_err(|_| Error::Input {
                line: Some(i + 1),
                message: format!("malformed rational {body:?}"),
            })?;
            values.push(v);
        }
        Self::new(values)
    }

    fn parse_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Input {
            line: Some(e.line()),
            message: e.to_string(),
        })?;
        let Value::Array(items) = value else {
            return Err(Error::Input {
                line: None,
                message: "expected a JSON array".into(),
            });
        };
        let mut values = Vec::with_capacity(items.len());
        for (i, item) in items.iter().enumerate() {
            let parsed = match item {
                Value::String(s) => parse_rational(s).ok(),
                Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()).ok(),
                _ => None,
            };
            values.push(parsed.ok_or_else(|| Error::Input {
                line: None,
                message: format!("entry {i}: malformed rational {item}"),
            })?);
        }
        Self::new(values)
    }

    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for v in &self.0 {
            out.push_str(&format_rational(v));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.0.iter().map(format_rational).collect();
        serde_json::to_string(&strings).expect("strings serialize")
    }
}

impl Deref for SequencePrefix {
    type Target = [Rational];
    fn deref(&self) -> &[Rational] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};

    #[test]
    fn parses_both_formats() {
        let a = SequencePrefix::parse("1/6\n\n# comment\n 1/90 \n3\n").unwrap();
        assert_eq!(a.values(), &[ratio(1, 6), ratio(1, 90), int(3)]);
        let b = SequencePrefix::parse(r#"["1/6", "1/90", 3]"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(SequencePrefix::parse(&a.to_json()).unwrap(), a);
        assert_eq!(SequencePrefix::parse(&a.to_lines()).unwrap(), a);
    }

    #[test]
    fn reports_line_numbers() {
        let err = SequencePrefix::parse("1\n2\nx/3\n").unwrap_err();
        assert_eq!(err.to_string(), "line 3: malformed rational \"x/3\"");
        assert!(SequencePrefix::parse("").is_err());
        assert!(SequencePrefix::parse("[1.5]").is_err());
        assert!(SequencePrefix::parse("{}").is_err());
    }

    #[test]
    fn rescale_and_egf() {
        let a = SequencePrefix::new(vec![int(1), int(2), int(4)]).unwrap();
        assert_eq!(a.rescaled(&int(2)).unwrap().values(), &[int(1), int(1), int(1)]);
        assert!(a.rescaled(&int(0)).is_err());
        let e = SequencePrefix::new(vec![int(1), int(1), int(2), int(6)]).unwrap();
        assert!(e.egf_to_ogf().iter().all(|v| *v == int(1)));
    }
}
