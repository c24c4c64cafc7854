//! Canonical text rendering.
//!
//! Polynomials in `q` are written in ascending powers with no spaces
//! (`1+q+2*q^2`). An [`XsPoly`] lists its terms by descending `x`, then `s`,
//! then `r` degree, each as `coeff*monomial` with the coefficient in
//! parentheses when it has several terms: `(1+q)*x^2 + q*s`. A coefficient
//! with a denominator is written `num*monomial/den`.

use std::fmt::{self, Display, Formatter, Write};

use num_traits::{One, Signed};

use super::{Mono, QPoly, QRational, Rational, XsPoly, ZSeries};

fn write_q_power(out: &mut String, k: u32) {
    match k {
        0 => {}
        1 => out.push('q'),
        _ => {
            let _ = write!(out, "q^{k}");
        }
    }
}

/// Renders `|c| * q^k` without a sign.
fn write_q_term(out: &mut String, c: &Rational, k: u32) {
    let c = c.abs();
    if k == 0 {
        let _ = write!(out, "{c}");
    } else {
        if !c.is_one() {
            let _ = write!(out, "{c}*");
        }
        write_q_power(out, k);
    }
}

fn render_qpoly(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in p.terms().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        write_q_term(&mut out, c, k);
    }
    out
}

fn all_negative(p: &QPoly) -> bool {
    !p.is_zero() && p.terms().all(|(_, c)| c.is_negative())
}

/// A numerator or denominator factor inside a product: wrapped in
/// parentheses when it has more than one term.
fn factor(p: &QPoly) -> String {
    if p.len() > 1 {
        format!("({})", render_qpoly(p))
    } else {
        render_qpoly(p)
    }
}

fn render_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("r", m.r), ("s", m.s), ("x", m.x)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// Renders one term of an [`XsPoly`]; returns the sign separately.
fn render_term(m: &Mono, c: &QRational) -> (bool, String) {
    let negative = all_negative(c.num());
    let num = if negative { -c.num() } else { c.num().clone() };
    let mono = render_mono(m);
    let mut body = if num.is_one() && !mono.is_empty() {
        String::new()
    } else {
        factor(&num)
    };
    if !mono.is_empty() {
        if !body.is_empty() {
            body.push('*');
        }
        body.push_str(&mono);
    }
    if !c.is_poly() {
        body.push('/');
        body.push_str(&factor(c.den()));
    }
    (negative, body)
}

impl Display for QPoly {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&render_qpoly(self))
    }
}

impl Display for Mono {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let m = render_mono(self);
        f.write_str(if m.is_empty() { "1" } else { &m })
    }
}

/// Standalone rendering: a power of `q` dividing a multi-term numerator is
/// pulled out front, as in `q^2*(1+q)/(1+q^4)`.
impl Display for QRational {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let negative = all_negative(self.num());
        let num = if negative { -self.num() } else { self.num().clone() };
        let v = num.valuation().unwrap_or(0);
        let rest = num.unshift(v);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if self.is_poly() {
            out.push_str(&render_qpoly(&num));
            return f.write_str(&out);
        }
        if v > 0 && rest.len() > 1 {
            write_q_power(&mut out, v);
            out.push('*');
            out.push_str(&factor(&rest));
        } else {
            out.push_str(&factor(&num));
        }
        out.push('/');
        out.push_str(&factor(self.den()));
        f.write_str(&out)
    }
}

impl QRational {
    /// Renders the value as a fraction over `den`, which must be a multiple of
    /// the reduced denominator. Returns `None` otherwise.
    ///
    /// Useful where a product denominator such as `(1+q^3)` reads better than
    /// its reduced factor `(1-q+q^2)`.
    pub fn render_over(&self, den: &QPoly) -> Option<String> {
        let k = den.exact_div(self.den())?;
        let num = self.num() * &k;
        let shown = QRational::new(num.clone(), den.clone()).ok()?;
        if den.is_one() {
            return Some(shown.to_string());
        }
        let negative = all_negative(&num);
        let num = if negative { -&num } else { num };
        let v = num.valuation().unwrap_or(0);
        let rest = num.unshift(v);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if v > 0 && rest.len() > 1 {
            write_q_power(&mut out, v);
            out.push('*');
            out.push_str(&factor(&rest));
        } else {
            out.push_str(&factor(&num));
        }
        out.push('/');
        out.push_str(&factor(den));
        Some(out)
    }
}

impl Display for XsPoly {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let (negative, body) = render_term(m, c);
            match (i, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl Display for ZSeries {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    fn r(num: &[i64], den: &[i64]) -> QRational {
        QRational::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn qpoly_forms() {
        assert_eq!(p(&[1, 1, 2]).to_string(), "1+q+2*q^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q+3*q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        let half = QPoly::monomial(Rational::new(1.into(), 2.into()), 1);
        assert_eq!(half.to_string(), "1/2*q");
    }

    #[test]
    fn xspoly_terms() {
        let t2 = XsPoly::term(p(&[1, 1]).into(), Mono::xs(2, 0))
            + XsPoly::term(p(&[0, 1]).into(), Mono::xs(0, 1));
        assert_eq!(t2.to_string(), "(1+q)*x^2 + q*s");
        let t3 = XsPoly::term(p(&[0, 1, 1, 1]).into(), Mono::xs(1, 1));
        assert_eq!(t3.to_string(), "(q+q^2+q^3)*s*x");
        let l2 = XsPoly::term(-r(&[0, 1], &[1, 1]), Mono::xs(0, 1));
        assert_eq!(l2.to_string(), "-q*s/(1+q)");
        let mixed = XsPoly::x() - XsPoly::s() + XsPoly::from_int(2);
        assert_eq!(mixed.to_string(), "x - s + 2");
        let neg = -XsPoly::term(p(&[1, 1]).into(), Mono::new(1, 1, 1));
        assert_eq!(neg.to_string(), "-(1+q)*r*s*x");
    }

    #[test]
    fn standalone_rationals() {
        let g4 = r(&[0, 1, 1], &[1, 0, 0, 1]);
        assert_eq!(g4.to_string(), "q/(1-q+q^2)");
        assert_eq!(g4.render_over(&p(&[1, 0, 0, 1])).unwrap(), "q*(1+q)/(1+q^3)");
        assert_eq!(g4.render_over(&p(&[1, 1])), None);
        assert_eq!(r(&[1], &[1, 1]).to_string(), "1/(1+q)");
        assert_eq!(r(&[0, -1], &[1, 1]).to_string(), "-q/(1+q)");
        assert_eq!(QRational::from_int(16).to_string(), "16");
        assert_eq!(QRational::from_poly(p(&[1, 1])).to_string(), "1+q");
    }
}
