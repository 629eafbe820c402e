//! Structured renderings of a [`QuadEquation`].
//!
//! [`render`] builds an [`Expr`] tree, either the differential equation in
//! `y(z)` or the coefficient recurrence in `a(n)` with explicit convolution
//! sums. Text and LaTeX are views of the tree; the tree itself serializes to
//! JSON.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::equation::{EqTerm, QuadEquation};
use crate::kernel::{format_rational, Polynomial, Rational, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Ode,
    Recurrence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Expr {
    /// Non-negative rational literal in `p/q` form.
    Num { value: String },
    Sym { name: String },
    /// `y^(order)(z)`
    Deriv { order: u32 },
    /// `a(index)`
    Seq { index: Box<Expr> },
    Add { terms: Vec<Expr> },
    Mul { factors: Vec<Expr> },
    Neg { arg: Box<Expr> },
    Pow { base: Box<Expr>, exp: u32 },
    Sum {
        var: String,
        lower: Box<Expr>,
        upper: Box<Expr>,
        body: Box<Expr>,
    },
    Equation { lhs: Box<Expr>, rhs: Box<Expr> },
}

pub fn render(eq: &QuadEquation, mode: RenderMode) -> Expr {
    let lhs = match mode {
        RenderMode::Ode => ode_lhs(eq),
        RenderMode::Recurrence => recurrence_lhs(eq),
    };
    Expr::Equation {
        lhs: Box::new(lhs),
        rhs: Box::new(num_i(0)),
    }
}

fn num(r: &Rational) -> Expr {
    Expr::Num {
        value: format_rational(r),
    }
}

fn num_i(v: i64) -> Expr {
    Expr::Num {
        value: v.to_string(),
    }
}

fn sym(name: &str) -> Expr {
    Expr::Sym { name: name.into() }
}

fn mul(mut factors: Vec<Expr>) -> Expr {
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        Expr::Mul { factors }
    }
}

fn add(mut terms: Vec<Expr>) -> Expr {
    match terms.len() {
        0 => num_i(0),
        1 => terms.pop().unwrap(),
        _ => Expr::Add { terms },
    }
}

fn neg(e: Expr) -> Expr {
    Expr::Neg { arg: Box::new(e) }
}

fn power(base: Expr, exp: u32) -> Expr {
    if exp == 1 {
        base
    } else {
        Expr::Pow {
            base: Box::new(base),
            exp,
        }
    }
}

/// `|c| * rest`, negated when `c < 0`; a unit coefficient is omitted.
fn signed_product(c: &Rational, mut rest: Vec<Expr>) -> Expr {
    let mag = c.abs();
    if !mag.is_one() || rest.is_empty() {
        rest.insert(0, num(&mag));
    }
    let e = mul(rest);
    if c.is_negative() {
        neg(e)
    } else {
        e
    }
}

/// `var + offset - k` style index in the order used by the printed recurrences.
fn index_expr(with_n: bool, offset: i64, minus_k: bool, plus_k: bool) -> Expr {
    let mut terms = Vec::new();
    if with_n {
        terms.push(sym("n"));
    }
    if plus_k {
        terms.push(sym("k"));
    }
    match offset.signum() {
        1 => terms.push(num_i(offset)),
        -1 => terms.push(neg(num_i(-offset))),
        _ => {}
    }
    if minus_k {
        terms.push(neg(sym("k")));
    }
    if terms.is_empty() {
        num_i(0)
    } else {
        add(terms)
    }
}

fn descending(eq: &QuadEquation) -> Vec<&EqTerm> {
    let mut ts: Vec<&EqTerm> = eq.terms().iter().collect();
    ts.reverse();
    ts
}

fn ode_lhs(eq: &QuadEquation) -> Expr {
    let terms = descending(eq)
        .into_iter()
        .map(|t| {
            let mut factors = Vec::new();
            if t.s > 0 {
                factors.push(power(sym("z"), t.s as u32));
            }
            let (p, q) = (t.mono.p(), t.mono.q());
            if t.mono.is_linear() {
                factors.push(Expr::Deriv { order: p as u32 });
            } else if p == q {
                factors.push(power(Expr::Deriv { order: p as u32 }, 2));
            } else {
                factors.push(Expr::Deriv { order: q as u32 });
                factors.push(Expr::Deriv { order: p as u32 });
            }
            signed_product(&t.coeff, factors)
        })
        .collect();
    add(terms)
}

fn recurrence_lhs(eq: &QuadEquation) -> Expr {
    // linear terms collapse into one polynomial per shift of a(n + shift)
    let mut groups: BTreeMap<i64, Polynomial> = BTreeMap::new();
    for t in eq.terms().iter().filter(|t| t.mono.is_linear()) {
        let p = t.mono.p();
        let mut weight = Polynomial::constant(Var::N, t.coeff.clone());
        for j in 1..=p {
            let factor = Polynomial::linear(
                Var::N,
                Rational::one(),
                Rational::from_integer(BigInt::from(j - t.s as i64)),
            );
            weight = &weight * &factor;
        }
        let g = groups
            .entry(p - t.s as i64)
            .or_insert_with(|| Polynomial::zero(Var::N));
        *g = &*g + &weight;
    }

    let mut terms = Vec::new();
    for (shift, poly) in groups.into_iter().rev() {
        if poly.is_zero() {
            continue;
        }
        let (content, factors, rest) = poly.factor_linear();
        let mut parts: Vec<Expr> = factors
            .iter()
            .map(|(a, b)| linear_factor_expr(a, b))
            .collect();
        if rest.degree().unwrap_or(0) > 0 {
            parts.push(poly_expr(&rest));
        }
        parts.push(Expr::Seq {
            index: Box::new(index_expr(true, shift, false, false)),
        });
        terms.push(signed_product(&content, parts));
    }

    for t in descending(eq).into_iter().filter(|t| !t.mono.is_linear()) {
        let s = t.s as i64;
        let (p, q) = (t.mono.p(), t.mono.q());
        let mut body = Vec::new();
        for j in 1..=p {
            body.push(index_expr(false, j, false, true));
        }
        body.push(Expr::Seq {
            index: Box::new(index_expr(false, p, false, true)),
        });
        for j in 1..=q {
            body.push(index_expr(true, j - s, true, false));
        }
        body.push(Expr::Seq {
            index: Box::new(index_expr(true, q - s, true, false)),
        });
        let sum = Expr::Sum {
            var: "k".into(),
            lower: Box::new(num_i(0)),
            upper: Box::new(index_expr(true, -s, false, false)),
            body: Box::new(mul(body)),
        };
        terms.push(signed_product(&t.coeff, vec![sum]));
    }
    add(terms)
}

fn linear_factor_expr(a: &BigInt, b: &BigInt) -> Expr {
    let n_part = if a.is_one() {
        sym("n")
    } else {
        mul(vec![num(&Rational::from_integer(a.clone())), sym("n")])
    };
    if b.is_zero() {
        return n_part;
    }
    let c = num(&Rational::from_integer(b.abs()));
    add(vec![n_part, if b.is_negative() { neg(c) } else { c }])
}

/// Expanded form, highest degree first.
fn poly_expr(p: &Polynomial) -> Expr {
    let mut terms = Vec::new();
    for (deg, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mut f = Vec::new();
        if deg > 0 {
            f.push(power(sym(p.var().name()), deg as u32));
        }
        terms.push(signed_product(c, f));
    }
    add(terms)
}

#[derive(Clone, Copy, PartialEq)]
enum Style {
    Text,
    Latex,
}

impl Expr {
    pub fn to_text(&self) -> String {
        self.fmt(Style::Text, true)
    }

    pub fn to_latex(&self) -> String {
        self.fmt(Style::Latex, true)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("expression serializes")
    }

    fn is_additive(&self) -> bool {
        matches!(self, Expr::Add { .. } | Expr::Neg { .. })
    }

    /// Symbol or derivative factor (possibly raised to a power).
    fn is_atomic_var(&self) -> bool {
        match self {
            Expr::Sym { .. } | Expr::Deriv { .. } => true,
            Expr::Pow { base, .. } => base.is_atomic_var(),
            _ => false,
        }
    }

    fn fmt(&self, style: Style, top: bool) -> String {
        let minus = if style == Style::Text { "−" } else { "-" };
        match self {
            Expr::Num { value } => match (style, value.split_once('/')) {
                (Style::Latex, Some((p, q))) => format!("\\frac{{{p}}}{{{q}}}"),
                _ => value.clone(),
            },
            Expr::Sym { name } => name.clone(),
            Expr::Deriv { order } => match (style, order) {
                (_, 0) => "y".into(),
                (Style::Text, 1) => "y′".into(),
                (Style::Text, 2) => "y″".into(),
                (Style::Text, 3) => "y‴".into(),
                (Style::Text, o) => format!("y⁽{}⁾", superscript(*o)),
                (Style::Latex, o) if *o <= 3 => format!("y{}", "'".repeat(*o as usize)),
                (Style::Latex, o) => format!("y^{{({o})}}"),
            },
            Expr::Seq { index } => format!("a({})", index.fmt(style, false)),
            Expr::Add { terms } => {
                let mut out = String::new();
                for (i, t) in terms.iter().enumerate() {
                    let (op, body) = match t {
                        Expr::Neg { arg } => (minus, arg.as_ref()),
                        other => ("+", other),
                    };
                    if i == 0 {
                        if op != "+" {
                            out.push_str(op);
                        }
                    } else if top {
                        out.push_str(&format!(" {op} "));
                    } else {
                        out.push_str(op);
                    }
                    out.push_str(&body.fmt_factor(style));
                }
                out
            }
            Expr::Neg { arg } => format!("{minus}{}", arg.fmt_factor(style)),
            Expr::Mul { factors } => {
                let dot = if style == Style::Text { "·" } else { " \\cdot " };
                let mut out = String::new();
                for (i, f) in factors.iter().enumerate() {
                    if i > 0 {
                        let prev = &factors[i - 1];
                        let needs_dot = (prev.is_atomic_var()
                            && (f.is_atomic_var() || matches!(f, Expr::Seq { .. })))
                            || (matches!(prev, Expr::Seq { .. }) && f.is_additive());
                        if needs_dot {
                            out.push_str(dot);
                        }
                    }
                    out.push_str(&f.fmt_factor(style));
                }
                out
            }
            Expr::Pow { base, exp } => {
                let b = match base.as_ref() {
                    Expr::Deriv { order } if *order > 0 => format!("({})", base.fmt(style, false)),
                    other => other.fmt_factor(style),
                };
                match style {
                    Style::Text => format!("{b}{}", superscript(*exp)),
                    Style::Latex => format!("{b}^{{{exp}}}"),
                }
            }
            Expr::Sum {
                var,
                lower,
                upper,
                body,
            } => {
                let up = upper.fmt(style, false);
                match style {
                    Style::Text => {
                        let up = if up.chars().count() == 1 { up } else { format!("{{{up}}}") };
                        format!(
                            "Σ_{{{var}={}}}^{up} {}",
                            lower.fmt(style, false),
                            body.fmt(style, false)
                        )
                    }
                    Style::Latex => format!(
                        "\\sum_{{{var}={}}}^{{{up}}} {}",
                        lower.fmt(style, false),
                        body.fmt(style, false)
                    ),
                }
            }
            Expr::Equation { lhs, rhs } => {
                format!("{} = {}", lhs.fmt(style, true), rhs.fmt(style, true))
            }
        }
    }

    /// Parenthesizes sums and negations appearing as factors.
    fn fmt_factor(&self, style: Style) -> String {
        if self.is_additive() {
            format!("({})", self.fmt(style, false))
        } else {
            self.fmt(style, false)
        }
    }
}

fn superscript(v: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    v.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::int;

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

    #[test]
    fn zigzag_views() {
        let eq = zigzag_eq();
        assert_eq!(render(&eq, RenderMode::Ode).to_text(), "y″ − y·y′ = 0");
        assert_eq!(
            render(&eq, RenderMode::Recurrence).to_text(),
            "(n+1)(n+2)a(n+2) − Σ_{k=0}^n (k+1)a(k+1)a(n−k) = 0"
        );
    }

    #[test]
    fn zeta_views() {
        let eq = zeta_eq();
        assert_eq!(
            render(&eq, RenderMode::Ode).to_text(),
            "2z·y″ − 4z·y·y′ + 5y′ − 2y² = 0"
        );
        assert_eq!(
            render(&eq, RenderMode::Recurrence).to_text(),
            "(2n+5)(n+1)a(n+1) − 4Σ_{k=0}^{n−1} (k+1)a(k+1)a(n−1−k) − 2Σ_{k=0}^n a(k)a(n−k) = 0"
        );
    }

    #[test]
    fn trivial_equation() {
        let eq = QuadEquation::from_tuples(&[(0, 0, -1, int(1))]).unwrap();
        assert_eq!(render(&eq, RenderMode::Ode).to_text(), "y = 0");
        assert_eq!(render(&eq, RenderMode::Recurrence).to_text(), "a(n) = 0");
    }

    #[test]
    fn higher_orders_and_squares() {
        let eq = QuadEquation::from_tuples(&[
            (2, 3, -1, int(1)),
            (0, 1, 1, int(-3)),
            (1, 0, -1, int(7)),
        ])
        .unwrap();
        assert_eq!(
            render(&eq, RenderMode::Ode).to_text(),
            "z²·y‴ − 3(y′)² + 7z·y = 0"
        );
        assert_eq!(
            render(&eq, RenderMode::Recurrence).to_text(),
            "(n−1)n(n+1)a(n+1) + 7a(n−1) − 3Σ_{k=0}^n (k+1)a(k+1)·(n+1−k)a(n+1−k) = 0"
        );
        assert_eq!(
            render(&eq, RenderMode::Ode).to_latex(),
            "z^{2} \\cdot y''' - 3(y')^{2} + 7z \\cdot y = 0"
        );
    }

    #[test]
    fn json_round_trip() {
        for mode in [RenderMode::Ode, RenderMode::Recurrence] {
            let e = render(&zeta_eq(), mode);
            let back: Expr = serde_json::from_str(&e.to_json()).unwrap();
            assert_eq!(back, e);
        }
    }
}
