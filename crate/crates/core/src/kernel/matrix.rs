use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::{primitive_integers, Rational};

/// Dense rectangular matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: Vec<Vec<Rational>>,
    width: usize,
}

/// Row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn new(width: usize) -> Self {
        RatMatrix { rows: vec![], width }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == width), "ragged matrix");
        RatMatrix { rows, width }
    }

    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.width, "row width mismatch");
        self.rows.push(row);
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.width);
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right nullspace `{v : M v = 0}`.
    ///
    /// One vector per non-pivot column, in column order; each has coprime
    /// integer entries and a positive first nonzero entry. The pivot rule is
    /// the leftmost column with a nonzero entry at or below the current row,
    /// taking the first such row.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.width];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.width).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.width];
            v[free] = Rational::from_integer(1.into());
            for (r, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[r];
                let mut acc = Rational::zero();
                for j in pc + 1..self.width {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(row[j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            basis.push(normalize_sign(&v));
        }
        basis
    }

    /// Bareiss elimination on the denominator-cleared rows. Every division
    /// is exact; intermediate entries are minors of the input.
    fn echelon(&self) -> Echelon {
        let mut a: Vec<Vec<BigInt>> = self.rows.iter().map(|r| primitive_integers(r)).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::from(1);
        let mut r = 0;
        for col in 0..self.width {
            if r == a.len() {
                break;
            }
            let Some(found) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, found);
            let (top, below) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pivot = pivot_row[col].clone();
            for row in below.iter_mut() {
                if row[col].is_zero() {
                    // the update degenerates to pivot/prev scaling
                    for j in col + 1..self.width {
                        if !row[j].is_zero() {
                            row[j] = exact_div(&pivot * &row[j], &prev);
                        }
                    }
                    continue;
                }
                let lead = row[col].clone();
                for j in col + 1..self.width {
                    let t = &pivot * &row[j] - &lead * &pivot_row[j];
                    row[j] = exact_div(t, &prev);
                }
                row[col] = BigInt::zero();
            }
            prev = pivot;
            pivots.push(col);
            r += 1;
        }
        a.truncate(r);
        Echelon { rows: a, pivots }
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, rem) = num.div_rem(den);
    debug_assert!(rem.is_zero(), "inexact Bareiss division");
    q
}

/// Coprime integers with a positive first nonzero entry.
fn normalize_sign(v: &[Rational]) -> Vec<Rational> {
    let mut ints = primitive_integers(v);
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in &mut ints {
            *x = -x.clone();
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}
