//! Fitting a quadratic differential equation to a sequence prefix.
//!
//! For growing ansatz sizes `d`, every unknown polynomial coefficient
//! `c_{k,i}` of `sum_k (c_{k,0} + ... + c_{k,m} z^m) * M_{k+2}(f)` becomes a
//! column, and every coefficient row `n` that the prefix fully determines
//! becomes a matrix row. The first `(m+1)(d+1)` rows are the construction
//! rows; the remaining ones verify. The nullspace of the whole stack is the
//! solution space.

use serde::{Deserialize, Serialize};

use crate::delta2::{compile_term, monomial_of_index};
use crate::equation::{EqTerm, QuadEquation};
use crate::error::{Error, Result};
use crate::kernel::{LinearForm, RatMatrix, Rational, UnknownId};
use crate::prefix::SequencePrefix;
use crate::sequence::check;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessConfig {
    /// Degree bound for the polynomial coefficients.
    pub m: usize,
    pub d_start: usize,
    /// `None` means `ceil((N+1)/(m+1))`.
    pub d_max: Option<usize>,
    pub min_verify_rows: usize,
}

impl Default for GuessConfig {
    fn default() -> Self {
        GuessConfig {
            m: 2,
            d_start: 3,
            d_max: None,
            min_verify_rows: 2,
        }
    }
}

impl GuessConfig {
    pub fn validate(&self) -> Result<()> {
        if self.d_start < 1 {
            return Err(Error::Input {
                line: None,
                message: "d_start must be at least 1".into(),
            });
        }
        Ok(())
    }

    pub fn d_max_for(&self, last_index: usize) -> usize {
        self.d_max
            .unwrap_or_else(|| (last_index + 1).div_ceil(self.m + 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GuessStatus {
    Success,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RowCounts {
    pub construction: usize,
    pub verification: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GuessResult {
    pub status: GuessStatus,
    /// Accepted ansatz size; `None` on failure.
    pub d: Option<usize>,
    pub m: usize,
    pub basis: Vec<QuadEquation>,
    pub rows: RowCounts,
}

impl GuessResult {
    pub fn is_success(&self) -> bool {
        self.status == GuessStatus::Success
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input {
            line: Some(e.line()),
            message: e.to_string(),
        })
    }
}

/// Number of ansatz unknowns.
pub fn unknown_count(d: usize, m: usize) -> usize {
    (m + 1) * (d + 1)
}

/// Highest derivative order among the monomials of slots `0..=d`.
pub fn reach(d: usize) -> usize {
    (2..=d as u64 + 2)
        .map(|k| monomial_of_index(k).expect("K >= 2").order() as usize)
        .max()
        .unwrap_or(0)
}

/// Builds the full system for slots `0..=d` and degree bound `m`.
///
/// Columns are unknowns `(k, i)` in k-major order. Row `n` is emitted for
/// every `n` with `n + reach(d) <= N`; the second value is that row count.
pub fn assemble_system(prefix: &SequencePrefix, d: usize, m: usize) -> (RatMatrix, usize) {
    let width = unknown_count(d, m);
    let r = reach(d);
    let usable = prefix.len().saturating_sub(r);
    let generators: Vec<(UnknownId, _)> = (0..width)
        .map(|c| {
            let id = UnknownId::from_column(c, m);
            let mono = monomial_of_index(id.k as u64 + 2).expect("K >= 2");
            (id, compile_term(id.i, &mono))
        })
        .collect();
    let mut mat = RatMatrix::new(width);
    for n in 0..usable {
        let mut row = LinearForm::new();
        for (id, g) in &generators {
            let v = g.value(n, prefix).expect("row fits the prefix");
            row.add_term(*id, &v);
        }
        mat.push_row(row.to_dense(width, m));
    }
    (mat, usable)
}

/// Turns a nullspace vector into an equation with coprime integer
/// coefficients whose highest `(K, s)` term is positive.
pub fn normalize(v: &[Rational], d: usize, m: usize) -> Result<QuadEquation> {
    if v.len() != unknown_count(d, m) {
        return Err(Error::InvalidEquation(format!(
            "vector has {} entries, expected {}",
            v.len(),
            unknown_count(d, m)
        )));
    }
    let mut terms = Vec::new();
    for (c, x) in v.iter().enumerate() {
        if num_traits::Zero::is_zero(x) {
            continue;
        }
        let id = UnknownId::from_column(c, m);
        let mono = monomial_of_index(id.k as u64 + 2)?;
        terms.push(EqTerm::new(id.i, mono, x.clone()));
    }
    if terms.is_empty() {
        return Err(Error::ZeroVector);
    }
    Ok(QuadEquation::new(terms)?.normalized())
}

/// Searches `d = d_start, d_start + 1, ...` and returns the first nontrivial
/// solution space.
///
/// The loop stops at the automatic or configured `d_max`, or as soon as the
/// prefix cannot supply all construction rows plus `min_verify_rows`
/// verification rows. Basis equations that fail [`check`] on the rows their
/// own support can reach are discarded.
pub fn guess(prefix: &SequencePrefix, cfg: &GuessConfig) -> Result<GuessResult> {
    cfg.validate()?;
    if prefix.is_all_zero() {
        return Err(Error::DegenerateInput);
    }
    let d_max = cfg.d_max_for(prefix.last_index());
    let m = cfg.m;
    let mut attempted = false;
    let mut rows = RowCounts::default();

    for d in cfg.d_start..=d_max {
        let construction = unknown_count(d, m);
        let needed = construction + cfg.min_verify_rows;
        let available = prefix.len().saturating_sub(reach(d));
        if available < needed {
            if !attempted {
                return Err(Error::InsufficientTerms { d, needed, available });
            }
            break;
        }
        attempted = true;
        let (mat, usable) = assemble_system(prefix, d, m);
        rows = RowCounts {
            construction,
            verification: usable - construction,
        };
        let mut basis = Vec::new();
        for v in mat.nullspace() {
            let eq = normalize(&v, d, m)?;
            if check(&eq, prefix).passed {
                basis.push(eq);
            }
        }
        if !basis.is_empty() {
            return Ok(GuessResult {
                status: GuessStatus::Success,
                d: Some(d),
                m,
                basis,
                rows,
            });
        }
    }
    if !attempted {
        let d = cfg.d_start;
        return Err(Error::InsufficientTerms {
            d,
            needed: unknown_count(d, m) + cfg.min_verify_rows,
            available: prefix.len().saturating_sub(reach(d)),
        });
    }
    Ok(GuessResult {
        status: GuessStatus::Fail,
        d: None,
        m,
        basis: vec![],
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, ratio};

    fn exp_prefix(n: usize) -> SequencePrefix {
        SequencePrefix::new(vec![int(1); n]).unwrap().egf_to_ogf()
    }

    #[test]
    fn reach_values() {
        assert_eq!(reach(1), 0);
        assert_eq!(reach(2), 1);
        assert_eq!(reach(4), 1);
        assert_eq!(reach(5), 2);
        assert_eq!(reach(9), 3);
    }

    #[test]
    fn system_shape() {
        let p = exp_prefix(10);
        let (mat, usable) = assemble_system(&p, 5, 2);
        assert_eq!(mat.width(), 18);
        assert_eq!(usable, 8);
        assert_eq!(mat.height(), 8);
        // column (k=5, i=0) is f'' with row entries (n+1)(n+2) a_{n+2}
        let col = UnknownId::new(5, 0).column(2);
        for n in 0..usable {
            let expected = int(((n + 1) * (n + 2)) as i64) * &p[n + 2];
            assert_eq!(mat.rows()[n][col], expected);
        }
    }

    #[test]
    fn finds_exponential() {
        let res = guess(&exp_prefix(24), &GuessConfig::default()).unwrap();
        assert!(res.is_success());
        let target = QuadEquation::from_tuples(&[(0, 1, -1, int(1)), (0, 0, -1, int(-1))]).unwrap();
        assert!(res.basis.contains(&target));
    }

    #[test]
    fn all_zero_is_degenerate() {
        let p = SequencePrefix::new(vec![int(0); 20]).unwrap();
        assert_eq!(guess(&p, &GuessConfig::default()), Err(Error::DegenerateInput));
    }

    #[test]
    fn short_prefix_is_insufficient() {
        let p = exp_prefix(8);
        assert!(matches!(
            guess(&p, &GuessConfig::default()),
            Err(Error::InsufficientTerms { d: 3, .. })
        ));
        let cfg = GuessConfig {
            d_start: 9,
            d_max: Some(4),
            ..GuessConfig::default()
        };
        assert!(matches!(guess(&exp_prefix(30), &cfg), Err(Error::InsufficientTerms { .. })));
    }

    #[test]
    fn normalize_examples() {
        // single entry 3/7 at (k=0, i=0)
        let mut v = vec![int(0); 12];
        v[0] = ratio(3, 7);
        let eq = normalize(&v, 3, 2).unwrap();
        assert_eq!(eq, QuadEquation::from_tuples(&[(0, 0, -1, int(1))]).unwrap());

        // (1, -1) on f and z*f
        let mut v = vec![int(0); 12];
        v[0] = int(1);
        v[1] = int(-1);
        let eq = normalize(&v, 3, 2).unwrap();
        assert_eq!(
            eq,
            QuadEquation::from_tuples(&[(0, 0, -1, int(-1)), (1, 0, -1, int(1))]).unwrap()
        );

        assert_eq!(normalize(&vec![int(0); 12], 3, 2), Err(Error::ZeroVector));
        assert!(normalize(&vec![int(1); 5], 3, 2).is_err());
    }

    #[test]
    fn result_json_round_trip() {
        let res = guess(&exp_prefix(24), &GuessConfig::default()).unwrap();
        let json = res.to_json();
        assert!(json.starts_with(r#"{"status":"success","d":3,"m":2,"basis":[{"terms""#));
        assert_eq!(GuessResult::from_json(&json).unwrap(), res);
    }
}
