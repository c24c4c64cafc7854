//! q-tangent and q-Genocchi numbers.
//!
//! Everything here lives at `x = 1`: the generating functions are built from
//! `T_n(1, s)` and `U_n(1, s)`, and the functionals `mu` and `lambda` act on
//! polynomials in `s`.

use std::fmt;

use crate::algebra::{Mono, QPoly, QRational, QValue, Rational, Var, XsPoly, ZSeries};
use crate::chebyshev::{at_q1, at_x1, ChebTables};
use crate::error::{expect_eq, Error, Result};
use crate::qcomb::{binom2, one_plus_q_prod, q_exp, q_exp_inv_neg, q_factorial, q_int, QBinomialTable};

fn qr(p: QPoly) -> QRational {
    QRational::from_poly(p)
}

fn konst(c: &QRational) -> XsPoly {
    XsPoly::constant(c.clone())
}

fn sign(k: i64) -> QRational {
    QRational::from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn inv_fact(n: usize) -> QRational {
    qr(q_factorial(n as u32)).recip().expect("[n]! is nonzero")
}

/// `(-q; q)_n = (1+q)(1+q^2)...(1+q^n)`.
pub fn neg_q_poch(n: u32) -> QRational {
    qr(one_plus_q_prod(1, n))
}

/// `(-q^a; q)_m = (1+q^a)...(1+q^(a+m-1))`.
fn neg_poch_from(a: u32, m: u32) -> QRational {
    if m == 0 {
        return QRational::one();
    }
    qr(one_plus_q_prod(a, a + m - 1))
}

/// `(1+qs)(1+q^3 s)...(1+q^(2n-1) s)`.
pub fn odd_s_product(n: usize) -> XsPoly {
    (0..n as i64).fold(XsPoly::one(), |acc, j| {
        acc * (XsPoly::one() + XsPoly::s().scale(&QRational::q_pow(2 * j + 1)))
    })
}

fn eq_q(what: impl Into<String>, lhs: &QRational, rhs: &QRational) -> Result<()> {
    expect_eq(what, &konst(lhs), &konst(rhs))
}

/// Coefficientwise comparison up to the smaller order.
pub fn series_eq(what: &str, a: &ZSeries, b: &ZSeries) -> Result<()> {
    for k in 0..=a.order().min(b.order()) {
        expect_eq(format!("{what}, z^{k}"), a.coeff(k), b.coeff(k))?;
    }
    Ok(())
}

/// `T_n(1, s)` and `U_n(1, s)`.
#[derive(Clone, Debug)]
pub struct XOne {
    t: Vec<XsPoly>,
    u: Vec<XsPoly>,
    zero: XsPoly,
}

impl XOne {
    pub fn new(tables: &ChebTables) -> Self {
        let n = tables.n_max() as i64;
        Self {
            t: (0..=n).map(|k| at_x1(tables.t.get(k))).collect(),
            u: (0..=n).map(|k| at_x1(tables.u.get(k))).collect(),
            zero: XsPoly::zero(),
        }
    }

    pub fn with_len(n_max: usize) -> Self {
        Self::new(&ChebTables::new(n_max))
    }

    pub fn n_max(&self) -> usize {
        self.t.len() - 1
    }

    pub fn t(&self, n: i64) -> &XsPoly {
        &self.t[n as usize]
    }

    /// `U_n(1, s)`, with `U_{-1} = 0`.
    pub fn u(&self, n: i64) -> &XsPoly {
        if n == -1 {
            return &self.zero;
        }
        &self.u[n as usize]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `T(z) = sum T_n(1,s) z^n / [n]!`
    TGen,
    /// `U(z) = sum_{n>=1} U_{n-1}(1,s) z^n / [n]!`
    UGen,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeriesKind::TGen => "T",
            SeriesKind::UGen => "U",
        })
    }
}

/// `T(z)` or `U(z)` straight from the `x = 1` tables.
pub fn raw_series(kind: SeriesKind, one: &XOne, order: usize) -> ZSeries {
    ZSeries::from_fn(order, |n| match kind {
        SeriesKind::TGen => one.t(n as i64).scale(&inv_fact(n)),
        SeriesKind::UGen if n == 0 => XsPoly::zero(),
        SeriesKind::UGen => one.u(n as i64 - 1).scale(&inv_fact(n)),
    })
}

/// `1/e(-z) sum prod_{j<n} (1+q^(2j+1) s) z^m / [m]!` over even `m = 2n`
/// (for `T`) or odd `m = 2n+1` (for `U`).
pub fn product_form(kind: SeriesKind, order: usize) -> Result<ZSeries> {
    let odd = kind == SeriesKind::UGen;
    let sum = ZSeries::from_fn(order, |m| {
        if (m % 2 == 1) == odd {
            odd_s_product(m / 2).scale(&inv_fact(m))
        } else {
            XsPoly::zero()
        }
    });
    Ok(&q_exp_inv_neg(order)? * &sum)
}

/// `e(-z) T(z) = e(z) T(-z)` or `e(-z) U(z) = -e(z) U(-z)`.
pub fn check_reflection(kind: SeriesKind, series: &ZSeries) -> Result<()> {
    let e = q_exp(series.order());
    let lhs = &e.reflect() * series;
    let rhs = &e * &series.reflect();
    match kind {
        SeriesKind::TGen => series_eq("e(-z)T(z) = e(z)T(-z)", &lhs, &rhs),
        SeriesKind::UGen => series_eq("e(-z)U(z) = -e(z)U(-z)", &lhs, &(-&rhs)),
    }
}

/// The generating function to the given order, checked against its product
/// form and its reflection law.
pub fn build_series(kind: SeriesKind, order: usize) -> Result<ZSeries> {
    let series = raw_series(kind, &XOne::with_len(order), order);
    series_eq(&format!("{kind}(z) product form"), &series, &product_form(kind, order)?)?;
    check_reflection(kind, &series)?;
    Ok(series)
}

/// `(e(z) - e(-z)) / (e(z) + e(-z))`.
pub fn tanh_q(order: usize) -> Result<ZSeries> {
    let e = q_exp(order);
    (&e - &e.reflect()).div(&(&e + &e.reflect()))
}

/// Odd over even part of `T(z)`, or even over odd part of `U(z)`. The
/// `U` quotient loses one order to the common factor `z`.
pub fn parity_quotient(kind: SeriesKind, series: &ZSeries) -> Result<ZSeries> {
    let (odd, even) = (series.parity_part(true), series.parity_part(false));
    match kind {
        SeriesKind::TGen => odd.div(&even),
        SeriesKind::UGen => even.div_with_valuation(&odd, 1),
    }
}

/// The `s = 0` quotients: `T_n(1,0) = (-q;q)_{n-1}` and `U_n(1,0) = (-q;q)_n`.
pub fn parity_quotient_s0(kind: SeriesKind, order: usize) -> Result<ZSeries> {
    let series = ZSeries::from_fn(order, |n| {
        let c = match kind {
            SeriesKind::TGen if n == 0 => QRational::one(),
            SeriesKind::TGen => neg_q_poch(n as u32 - 1),
            SeriesKind::UGen if n == 0 => QRational::zero(),
            SeriesKind::UGen => neg_q_poch(n as u32 - 1),
        };
        konst(&(c * inv_fact(n)))
    });
    parity_quotient(kind, &series)
}

/// Every coefficient is free of `s`.
pub fn check_s_free(what: &str, series: &ZSeries) -> Result<()> {
    for (k, c) in series.coeffs().iter().enumerate() {
        if c.as_constant().is_none() {
            let residual = c - &konst(&c.constant_term());
            return Err(Error::mismatch(format!("{what}: s-dependent coefficient of z^{k}"), residual));
        }
    }
    Ok(())
}

/// The quotient of parity parts, computed with symbolic `s`, is free of `s`
/// and equals the tanh-like quotient; so does its `s = 0` closed form.
pub fn check_quotient(kind: SeriesKind, order: usize) -> Result<()> {
    let q = parity_quotient(kind, &build_series(kind, order)?)?;
    check_s_free(&format!("{kind} parity quotient"), &q)?;
    let tanh = tanh_q(order)?;
    series_eq(&format!("{kind} parity quotient"), &q, &tanh)?;
    series_eq(&format!("{kind} parity quotient at s = 0"), &parity_quotient_s0(kind, order)?, &tanh)
}

/// `t_{2n+1}(q)` for `n = 0 ..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTangentSeq {
    pub values: Vec<QRational>,
}

impl QTangentSeq {
    /// `t_{2n+1}`.
    pub fn get(&self, n: usize) -> &QRational {
        &self.values[n]
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

fn constant_coeff(series: &ZSeries, k: usize) -> Result<QRational> {
    let c = series.coeff(k);
    c.as_constant()
        .ok_or_else(|| Error::mismatch(format!("s-dependent coefficient of z^{k}"), c.clone()))
}

/// `t_1 .. t_{2N+1}` read off the `s = 0` quotient. The quotient is
/// computed two orders beyond what is needed, and compared with the
/// symbolic-`s` quotient and with the exponential quotient on every
/// coefficient, including the vanishing even ones.
pub fn q_tangent(n_max: usize) -> Result<QTangentSeq> {
    let order = 2 * n_max + 3;
    let s0 = parity_quotient_s0(SeriesKind::TGen, order)?;
    let symbolic = parity_quotient(SeriesKind::TGen, &raw_series(SeriesKind::TGen, &XOne::with_len(order), order))?;
    check_s_free("odd/even quotient of T(z)", &symbolic)?;
    series_eq("odd/even quotient, symbolic s against s = 0", &symbolic, &s0)?;
    series_eq("odd/even quotient against the exponential quotient", &s0, &tanh_q(order)?)?;
    for k in (0..=order).step_by(2) {
        expect_eq(format!("even coefficient z^{k} of the quotient"), s0.coeff(k), &XsPoly::zero())?;
    }
    let values = (0..=n_max)
        .map(|n| {
            let c = constant_coeff(&s0, 2 * n + 1)?;
            Ok(sign(n as i64) * qr(q_factorial(2 * n as u32 + 1)) * c)
        })
        .collect::<Result<_>>()?;
    Ok(QTangentSeq { values })
}

/// `G_2, G_4, ..`; `G_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGenocchiSeq {
    pub values: Vec<QRational>,
}

impl QGenocchiSeq {
    /// `G_{2n}`.
    pub fn get(&self, n: usize) -> QRational {
        if n == 0 {
            QRational::zero()
        } else {
            self.values[n - 1].clone()
        }
    }

    /// Largest `n` with `G_{2n}` stored.
    pub fn n_max(&self) -> usize {
        self.values.len()
    }

    /// `(-q;q)_{2n-1}`, the denominator of the generating function, which
    /// is also the natural denominator to print `G_{2n}` over.
    pub fn display_den(n: usize) -> QPoly {
        one_plus_q_prod(n as u32 + 1, 2 * n as u32 - 1)
    }

    /// `G_{2n}` over `(1+q^(n+1))...(1+q^(2n-1))`, with the numerator split
    /// into a power of `q`, factors `1+q^k`, and what is left.
    pub fn render(&self, n: usize) -> String {
        let den_factors: Vec<u32> = (n as u32 + 1..2 * n as u32).collect();
        let num = match (self.get(n) * qr(Self::display_den(n))).as_poly() {
            Some(p) => p.clone(),
            None => return self.get(n).to_string(),
        };
        render_factored(&num, &den_factors)
    }
}

fn one_plus(k: u32) -> QPoly {
    &QPoly::one() + &QPoly::q_pow(k)
}

/// `num / prod (1+q^k)` with `num` written as `q^v (1+q^k)^e ... rest`.
pub fn render_factored(num: &QPoly, den_factors: &[u32]) -> String {
    if num.is_zero() {
        return "0".into();
    }
    let v = num.valuation().unwrap_or(0);
    let mut rest = num.unshift(v);
    let mut parts: Vec<String> = Vec::new();
    if v == 1 {
        parts.push("q".into());
    } else if v > 1 {
        parts.push(format!("q^{v}"));
    }
    for k in 1..=rest.degree().unwrap_or(0) {
        let mut e = 0;
        while let Some(r) = rest.exact_div(&one_plus(k)) {
            rest = r;
            e += 1;
        }
        match e {
            0 => {}
            1 => parts.push(format!("({})", one_plus(k))),
            _ => parts.push(format!("({})^{e}", one_plus(k))),
        }
    }
    if rest.is_constant() {
        let c = rest.constant_term();
        if parts.is_empty() || c != Rational::from_integer(1.into()) {
            parts.insert(0, c.to_string());
        }
    } else if rest.len() > 1 {
        parts.push(format!("({rest})"));
    } else {
        parts.insert(0, rest.to_string());
    }
    let mut out = parts.join("*");
    match den_factors {
        [] => {}
        [k] => out.push_str(&format!("/({})", one_plus(*k))),
        ks => {
            let d: Vec<String> = ks.iter().map(|&k| format!("({})", one_plus(k))).collect();
            out.push_str(&format!("/({})", d.join("*")));
        }
    }
    out
}

/// `G_{2n+2} = [2n+2] t_{2n+1} / (-q;q)_{2n+1}`.
pub fn genocchi_from_tangent(t: &QTangentSeq) -> QGenocchiSeq {
    let values = (0..=t.n_max())
        .map(|n| {
            let m = 2 * n as u32 + 1;
            &(qr(q_int(m + 1)) * t.get(n)) / &neg_q_poch(m)
        })
        .collect();
    QGenocchiSeq { values }
}

/// `G_2 .. G_{2N}` by the tangent route, cross-checked against the last
/// entries of the odd triangle rows.
pub fn q_genocchi(n_max: usize) -> Result<QGenocchiSeq> {
    if n_max == 0 {
        return Err(Error::Config("the Genocchi sequence starts at G_2".into()));
    }
    let g = genocchi_from_tangent(&q_tangent(n_max - 1)?);
    let tri = SeidelTriangle::build(2 * n_max - 1);
    for n in 1..=n_max {
        eq_q(
            format!("b({}, {n}) against (-q;q)_{} G_{}", 2 * n - 1, 2 * n - 1, 2 * n),
            &tri.get(2 * n - 1, n),
            &(neg_q_poch(2 * n as u32 - 1) * g.get(n)),
        )?;
    }
    Ok(g)
}

/// `z (e(z) - e(-z)) / (e(z) + e(-z)) = sum (-1)^(n-1) G_{2n} (-q;q)_{2n-1} z^(2n) / [2n]!`.
pub fn check_genocchi_series(g: &QGenocchiSeq) -> Result<()> {
    let order = 2 * g.n_max();
    let lhs = tanh_q(order)?.shift_up(1);
    let rhs = ZSeries::from_fn(order, |m| {
        if m % 2 == 1 || m == 0 {
            return XsPoly::zero();
        }
        let n = m / 2;
        konst(&(sign(n as i64 - 1) * g.get(n) * neg_q_poch(m as u32 - 1) * inv_fact(m)))
    });
    series_eq("z times the exponential quotient", &lhs, &rhs)
}

/// `[2n+1, 2k] (-1)^(n-k) t_{2n-2k+1}`.
pub fn t_odd_coeff(b: &QBinomialTable, t: &QTangentSeq, n: usize, k: usize) -> QRational {
    qr(b.get(2 * n as i64 + 1, 2 * k as i64)) * sign((n - k) as i64) * t.get(n - k)
}

/// `[2n+2, 2k] / [2k+1] (-q;q)_{2n-2k+1} (-1)^(n-k) G_{2n-2k+2}`.
pub fn u_odd_coeff(b: &QBinomialTable, g: &QGenocchiSeq, n: usize, k: usize) -> QRational {
    let c = qr(b.get(2 * n as i64 + 2, 2 * k as i64)) / qr(q_int(2 * k as u32 + 1));
    c * neg_q_poch(2 * (n - k) as u32 + 1) * sign((n - k) as i64) * g.get(n - k + 1)
}

/// `T_{2n+1}(x,s) = sum_k [2n+1,2k] (-1)^(n-k) t_{2n-2k+1} x^(2n+1-2k) T_{2k}(x,s)`,
/// checked in full and at `x = 1`.
pub fn expand_t_odd(tables: &ChebTables, t: &QTangentSeq, n: usize) -> Result<()> {
    let rhs = (0..=n).fold(XsPoly::zero(), |acc, k| {
        let c = t_odd_coeff(&tables.binom, t, n, k);
        acc + tables.t.get(2 * k as i64).mul_mono(Mono::xs((2 * (n - k) + 1) as u32, 0)).scale(&c)
    });
    let lhs = tables.t.get(2 * n as i64 + 1);
    expect_eq(format!("T_{} expansion", 2 * n + 1), lhs, &rhs)?;
    expect_eq(format!("T_{}(1,s) expansion", 2 * n + 1), &at_x1(lhs), &at_x1(&rhs))
}

/// The `U` analogue with the Genocchi coefficients.
pub fn expand_u_odd(tables: &ChebTables, g: &QGenocchiSeq, n: usize) -> Result<()> {
    let rhs = (0..=n).fold(XsPoly::zero(), |acc, k| {
        let c = u_odd_coeff(&tables.binom, g, n, k);
        acc + tables.u.get(2 * k as i64).mul_mono(Mono::xs((2 * (n - k) + 1) as u32, 0)).scale(&c)
    });
    let lhs = tables.u.get(2 * n as i64 + 1);
    expect_eq(format!("U_{} expansion", 2 * n + 1), lhs, &rhs)?;
    expect_eq(format!("U_{}(1,s) expansion", 2 * n + 1), &at_x1(lhs), &at_x1(&rhs))
}

/// `U_{2n-1}(1,s) = sum_{k<n} [2n,2k]/[2k+1] (-q;q)_{2n-2k-1} (-1)^(n-k-1) G_{2n-2k} U_{2k}(1,s)`.
/// With `doubled` the factor `1/[2k+1]` is applied twice.
pub fn u_odd_display(one: &XOne, b: &QBinomialTable, g: &QGenocchiSeq, n: usize, doubled: bool) -> Result<()> {
    let rhs = (0..n).fold(XsPoly::zero(), |acc, k| {
        let mut c = qr(b.get(2 * n as i64, 2 * k as i64)) / qr(q_int(2 * k as u32 + 1));
        if doubled {
            c = c / qr(q_int(2 * k as u32 + 1));
        }
        let c = c * neg_q_poch(2 * (n - k) as u32 - 1) * sign((n - k - 1) as i64) * g.get(n - k);
        acc + one.u(2 * k as i64).scale(&c)
    });
    expect_eq(format!("U_{}(1,s) from the even U", 2 * n - 1), one.u(2 * n as i64 - 1), &rhs)
}

fn shift_term(b: &QBinomialTable, n: usize, m: usize, j: usize) -> QRational {
    let (n_, j_) = (n as i64, j as i64);
    let prod = one_plus_q_prod((n + m + 1 - j) as u32, (n + m) as u32);
    sign(j_) * QRational::q_pow(binom2(j_)) * qr(b.get(n_, j_)) * qr(prod)
}

fn s_mono(c: QRational, k: usize) -> XsPoly {
    XsPoly::term(c, Mono::xs(0, k as u32))
}

/// Left and right side of the shift identity:
/// `sum_j (-1)^j q^C(j,2) [n,j] prod_{i=n+m+1-j}^{n+m} (1+q^i) P_{2n+m-j}`
/// against `q^(n^2+mn) s^n T_m` (for `T`), and with every index lowered by
/// one and `q^(n^2-n+mn)` for `U`.
pub fn shift_sides(kind: SeriesKind, one: &XOne, b: &QBinomialTable, n: usize, m: usize) -> (XsPoly, XsPoly) {
    let lhs = (0..=n).fold(XsPoly::zero(), |acc, j| {
        let c = shift_term(b, n, m, j);
        let idx = (2 * n + m - j) as i64;
        let p = match kind {
            SeriesKind::TGen => one.t(idx),
            SeriesKind::UGen => one.u(idx - 1),
        };
        acc + p.scale(&c)
    });
    let (n_, m_) = (n as i64, m as i64);
    let rhs = match kind {
        SeriesKind::TGen => s_mono(QRational::q_pow(n_ * n_ + m_ * n_), n) * one.t(m_),
        SeriesKind::UGen => s_mono(QRational::q_pow(n_ * n_ - n_ + m_ * n_), n) * one.u(m_ - 1),
    };
    (lhs, rhs)
}

pub fn shift_identity(kind: SeriesKind, one: &XOne, b: &QBinomialTable, n: usize, m: usize) -> Result<()> {
    let (lhs, rhs) = shift_sides(kind, one, b, n, m);
    expect_eq(format!("{kind} shift identity, (n, m) = ({n}, {m})"), &lhs, &rhs)
}

/// The `T` corollaries at `m = 0` and `m = 1`, whose right sides are the
/// bare monomials `q^(n^2) s^n` and `q^(n^2+n) s^n`.
pub fn t_shift_corollary(one: &XOne, b: &QBinomialTable, n: usize, m: usize) -> Result<()> {
    let (lhs, _) = shift_sides(SeriesKind::TGen, one, b, n, m);
    let rhs = s_mono(QRational::q_pow((n * n + m * n) as i64), n);
    expect_eq(format!("T shift corollary, (n, m) = ({n}, {m})"), &lhs, &rhs)
}

/// `W(n,m) = W(n-1,m+2) - q^(n-1) (1+q^(m+1)) W(n-1,m+1)` for the `U` sum,
/// and the bracket identity behind it.
pub fn check_w_recursion(one: &XOne, b: &QBinomialTable, n: usize, m: usize) -> Result<()> {
    let w = |n, m| shift_sides(SeriesKind::UGen, one, b, n, m).0;
    let factor = XsPoly::q_pow(n as i64 - 1) * (XsPoly::one() + XsPoly::q_pow(m as i64 + 1));
    expect_eq(format!("W({n}, {m}) recursion"), &w(n, m), &(w(n - 1, m + 2) - factor * w(n - 1, m + 1)))?;
    for k in 0..=n as i64 {
        let (n_, m_) = (n as i64, m as i64);
        let lhs = QRational::from_poly(b.get(n_ - 1, k)) * (QRational::one() + QRational::q_pow(n_ + m_ + 1))
            + QRational::q_pow(n_ - k) * (QRational::one() + QRational::q_pow(m_ + 1)) * qr(b.get(n_ - 1, k - 1));
        let rhs = (QRational::one() + QRational::q_pow(m_ + n_ + 1 - k)) * qr(b.get(n_, k));
        eq_q(format!("bracket identity, (n, m, k) = ({n}, {m}, {k})"), &lhs, &rhs)?;
    }
    Ok(())
}

/// `[n+1,j] + q^(n+1) [n,j]`, and the replacement `[n+1,j] [2n+2-j] / [n+1]`;
/// with `printed` the replacement uses `2j` in place of `j`.
pub fn bracket_replacement(b: &QBinomialTable, n: usize, j: usize, printed: bool) -> Result<()> {
    let (n_, j_) = (n as i64, j as i64);
    let lhs = qr(&b.get(n_ + 1, j_) + &b.get(n_, j_).shift(n as u32 + 1));
    let jj = if printed { 2 * j_ } else { j_ };
    let top = qr(b.get(n_ + 1, jj)) * QRational::from(q_int_i(2 * n_ + 2 - jj));
    let rhs = &top / &qr(q_int(n as u32 + 1));
    eq_q(format!("bracket replacement, (n, j) = ({n}, {j})"), &lhs, &rhs)
}

fn q_int_i(n: i64) -> QPoly {
    crate::qcomb::q_int_signed(n).as_poly().cloned().unwrap_or_else(QPoly::zero)
}

/// `sum_{j=1}^{n+1} (-1)^(j-1) q^C(j,2) prod_{i=n+2-j}^n (1+q^i) c_j T_{2n+1-j}(1,s) = T_{2n+1}(1,s)`
/// with `c_j = [n+1,j] + q^(n+1) [n,j]`, and again with `c_j` replaced by
/// `[n+1,j] [2n+2-j] / [n+1]`.
pub fn check_t_odd_shift(one: &XOne, b: &QBinomialTable, n: usize) -> Result<()> {
    let (mut a, mut r) = (XsPoly::zero(), XsPoly::zero());
    for j in 1..=n + 1 {
        let (n_, j_) = (n as i64, j as i64);
        let base = sign(j_ - 1) * QRational::q_pow(binom2(j_)) * qr(one_plus_q_prod((n + 2 - j) as u32, n as u32));
        let c1 = qr(&b.get(n_ + 1, j_) + &b.get(n_, j_).shift(n as u32 + 1));
        let c2 = &(qr(b.get(n_ + 1, j_)) * qr(q_int((2 * n + 2 - j) as u32))) / &qr(q_int(n as u32 + 1));
        let p = one.t((2 * n + 1 - j) as i64);
        a = a + p.scale(&(&base * &c1));
        r = r + p.scale(&(base * c2));
    }
    let target = one.t(2 * n as i64 + 1);
    expect_eq(format!("T_{}(1,s) from lower T", 2 * n + 1), &a, target)?;
    expect_eq(format!("T_{}(1,s) with the replaced bracket", 2 * n + 1), &r, target)
}

/// A linear functional on polynomials in `s`, given by its values on a
/// basis whose `k`-th element has degree exactly `k`.
#[derive(Clone, Debug)]
pub struct BasisFunctional {
    basis: Vec<XsPoly>,
    leads: Vec<QRational>,
    values: Vec<QRational>,
}

impl BasisFunctional {
    fn from_basis(basis: Vec<XsPoly>, values: Vec<QRational>) -> Result<Self> {
        let leads = basis
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let c = p.coeff(Mono::xs(0, k as u32));
                if c.is_zero() || p.degree(Var::S).unwrap_or(0) as usize != k {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(c)
                }
            })
            .collect::<Result<_>>()?;
        Ok(Self { basis, leads, values })
    }

    /// `mu(T_{2k}(1,s)) = [k = 0]`. With `printed` the values are `[k+1]`
    /// instead, the q-integer rather than the indicator.
    pub fn mu(one: &XOne, degree: usize, printed: bool) -> Result<Self> {
        let basis = (0..=degree).map(|k| one.t(2 * k as i64).clone()).collect();
        let values = (0..=degree)
            .map(|k| match (printed, k) {
                (true, _) => qr(q_int(k as u32 + 1)),
                (false, 0) => QRational::one(),
                (false, _) => QRational::zero(),
            })
            .collect();
        Self::from_basis(basis, values)
    }

    /// `lambda(U_{2k}(1,s)) = [k = 0]`.
    pub fn lambda(one: &XOne, degree: usize) -> Result<Self> {
        let basis = (0..=degree).map(|k| one.u(2 * k as i64).clone()).collect();
        let values = (0..=degree)
            .map(|k| if k == 0 { QRational::one() } else { QRational::zero() })
            .collect();
        Self::from_basis(basis, values)
    }

    pub fn degree(&self) -> usize {
        self.basis.len() - 1
    }

    /// Coordinates of `p` in the basis, by back-substitution from the top
    /// degree down.
    pub fn expand(&self, p: &XsPoly) -> Result<Vec<QRational>> {
        let d = p.degree(Var::S).unwrap_or(0) as usize;
        if d > self.degree() {
            return Err(Error::Config(format!("degree {d} exceeds the basis degree {}", self.degree())));
        }
        let mut rem = p.clone();
        let mut coords = vec![QRational::zero(); d + 1];
        for k in (0..=d).rev() {
            let c = rem.coeff(Mono::xs(0, k as u32)).checked_div(&self.leads[k])?;
            rem = rem - self.basis[k].scale(&c);
            coords[k] = c;
        }
        if !rem.is_zero() {
            return Err(Error::mismatch("basis expansion remainder", rem));
        }
        Ok(coords)
    }

    pub fn apply(&self, p: &XsPoly) -> Result<QRational> {
        Ok(self
            .expand(p)?
            .iter()
            .zip(&self.values)
            .fold(QRational::zero(), |acc, (c, v)| acc + c * v))
    }
}

/// `mu(T_{2n+1}(1,s)) = (-1)^n t_{2n+1}`, with the coordinates of
/// `T_{2n+1}(1,s)` in the even basis matching the expansion coefficients.
pub fn check_mu(one: &XOne, b: &QBinomialTable, t: &QTangentSeq, n: usize, printed: bool) -> Result<()> {
    let mu = BasisFunctional::mu(one, n, printed)?;
    let p = one.t(2 * n as i64 + 1);
    for (k, c) in mu.expand(p)?.iter().enumerate() {
        eq_q(format!("a({n}, {k})"), c, &t_odd_coeff(b, t, n, k))?;
    }
    eq_q(format!("mu(T_{}(1,s))", 2 * n + 1), &mu.apply(p)?, &(sign(n as i64) * t.get(n)))
}

/// `lambda(U_{2n-1}(1,s)) = (-1)^(n-1) (-q;q)_{2n-1} G_{2n}` for `n >= 1`,
/// with the coordinates of `U_{2n+1}(1,s)` matching the expansion
/// coefficients.
pub fn check_lambda(one: &XOne, b: &QBinomialTable, g: &QGenocchiSeq, n: usize) -> Result<()> {
    let lambda = BasisFunctional::lambda(one, n)?;
    let p = one.u(2 * n as i64 + 1);
    for (k, c) in lambda.expand(p)?.iter().enumerate() {
        eq_q(format!("b({n}, {k})"), c, &u_odd_coeff(b, g, n, k))?;
    }
    let want = sign(n as i64 - 1) * neg_q_poch(2 * n as u32 - 1) * g.get(n);
    eq_q(format!("lambda(U_{}(1,s))", 2 * n - 1), &lambda.apply(one.u(2 * n as i64 - 1))?, &want)
}

/// `mu` and `lambda` for all `n <= N`.
pub fn functional_mu_lambda(n_max: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::Config("functional checks start at n = 1".into()));
    }
    let tables = ChebTables::new(2 * n_max + 1);
    let one = XOne::new(&tables);
    let t = q_tangent(n_max)?;
    let g = q_genocchi(n_max + 1)?;
    for n in 0..=n_max {
        check_mu(&one, &tables.binom, &t, n, false)?;
        if n >= 1 {
            check_lambda(&one, &tables.binom, &g, n)?;
        }
    }
    Ok(())
}

/// `t_{2n+1} = sum_{j=1}^{(n+1)/2} (-1)^(j-1) q^C(2j,2) prod_{i=n+2-2j}^n (1+q^i)
/// [n+1,2j] [2n+2-2j]/[n+1] t_{2n+1-2j}`.
pub fn tangent_recurrence(b: &QBinomialTable, t: &QTangentSeq, n: usize) -> Result<()> {
    let rhs = (1..=n.div_ceil(2)).fold(QRational::zero(), |acc, j| {
        let (n_, j_) = (n as i64, j as i64);
        let c = sign(j_ - 1)
            * QRational::q_pow(binom2(2 * j_))
            * qr(one_plus_q_prod((n + 2 - 2 * j) as u32, n as u32))
            * qr(b.get(n_ + 1, 2 * j_))
            * qr(q_int((2 * n + 2 - 2 * j) as u32));
        acc + &c / &qr(q_int(n as u32 + 1)) * t.get(n - j)
    });
    eq_q(format!("t_{} recurrence", 2 * n + 1), t.get(n), &rhs)
}

/// `sum_k q^C(2k,2) [n,2k] (-1)^k (-q^(n-2k+1);q)_{2k} / (-q^(2n-2k);q)_{2k} G_{2n-2k} = [n = 1]`.
pub fn q_seidel(b: &QBinomialTable, g: &QGenocchiSeq, n: usize) -> Result<()> {
    let lhs = (0..=n / 2).fold(QRational::zero(), |acc, k| {
        let (n_, k_) = (n as i64, k as i64);
        let ratio = &neg_poch_from((n - 2 * k + 1) as u32, 2 * k as u32) / &neg_poch_from((2 * n - 2 * k) as u32, 2 * k as u32);
        acc + QRational::q_pow(binom2(2 * k_)) * qr(b.get(n_, 2 * k_)) * sign(k_) * ratio * g.get(n - k)
    });
    let rhs = if n == 1 { QRational::one() } else { QRational::zero() };
    eq_q(format!("q-Seidel sum, n = {n}"), &lhs, &rhs)
}

/// `G_{2n}(1/q) = G_{2n}(q)`.
pub fn check_palindrome(g: &QGenocchiSeq, n: usize) -> Result<()> {
    let v = g.get(n);
    eq_q(format!("G_{}(1/q)", 2 * n), &v.subst_q(&QValue::Inverse)?, &v)
}

/// `(-q^(n+1);q)_{n-1} G_{2n}` as a polynomial with integer coefficients.
pub fn integral_genocchi(g: &QGenocchiSeq, n: usize) -> Result<QPoly> {
    let v = qr(one_plus_q_prod(n as u32 + 1, 2 * n as u32 - 1)) * g.get(n);
    match v.as_poly() {
        Some(p) if p.is_integral() => Ok(p.clone()),
        _ => Err(Error::mismatch(
            format!("(-q^{};q)_{} G_{} is not an integer polynomial", n + 1, n - 1, 2 * n),
            konst(&v),
        )),
    }
}

pub fn palindrome_and_integrality(g: &QGenocchiSeq) -> Result<()> {
    for n in 1..=g.n_max() {
        check_palindrome(g, n)?;
        integral_genocchi(g, n)?;
    }
    Ok(())
}

/// The Seidel-type triangle `b(n, k)`, `0 <= k <= 1 + n/2`, with `b(n, 0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelTriangle {
    rows: Vec<Vec<QRational>>,
}

impl SeidelTriangle {
    /// Rows `0 ..= n_max` from `b(0,1) = 1`: odd rows left to right,
    /// even rows right to left starting from the vanishing entry beyond
    /// the row.
    pub fn build(n_max: usize) -> Self {
        let mut rows: Vec<Vec<QRational>> = vec![vec![QRational::zero(), QRational::one()]];
        for m in 1..=n_max {
            let len = 2 + m / 2;
            let mut row = vec![QRational::zero(); len];
            let prev = |k: usize| rows[m - 1].get(k).cloned().unwrap_or_else(QRational::zero);
            if m % 2 == 1 {
                for k in 1..len {
                    let k_ = k as i64;
                    row[k] = QRational::q_pow(2 * k_ - 2) * &row[k - 1]
                        + (QRational::one() + QRational::q_pow(2 * k_ - 1)) * prev(k);
                }
            } else {
                for k in (1..len).rev() {
                    let k_ = k as i64;
                    let next = row.get(k + 1).cloned().unwrap_or_else(QRational::zero);
                    row[k] = QRational::q_pow(1 - 2 * k_) * (next + (QRational::one() + QRational::q_pow(2 * k_)) * prev(k));
                }
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `b(n, k)`, zero outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> QRational {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(QRational::zero)
    }

    pub fn rows(&self) -> &[Vec<QRational>] {
        &self.rows
    }

    /// Rows as a JSON array of arrays of canonical strings.
    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        serde_json::to_string(&rows).expect("strings serialise")
    }
}

/// `a(2n,k) = (-1)^n s^(n+1-k) U_{2k-2}(1,s)` and
/// `a(2n+1,k) = (-1)^n s^(n+1-k) U_{2k-1}(1,s)` for `k >= 1`; `a(n,0) = 0`.
pub fn a_entry(one: &XOne, m: usize, k: usize) -> XsPoly {
    if k == 0 || k > 1 + m / 2 {
        return XsPoly::zero();
    }
    let n = m / 2;
    let idx = if m.is_multiple_of(2) { 2 * k as i64 - 2 } else { 2 * k as i64 - 1 };
    s_mono(sign(n as i64), n + 1 - k) * one.u(idx)
}

/// Which part of the triangle [`check_triangle_part`] looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrianglePart {
    /// Odd rows: `b = lambda(a)` and the odd-row recurrence of `a`.
    OddRows,
    /// Even rows: `b = lambda(a)` and the even-row recurrence of `a`.
    EvenRows,
    /// `b(2n-1, n) = (-q;q)_{2n-1} G_{2n}`.
    Edge,
}

/// One part of the triangle against `lambda` of the polynomial triangle,
/// the polynomial recurrences, or the Genocchi numbers.
pub fn check_triangle_part(tri: &SeidelTriangle, g: &QGenocchiSeq, part: TrianglePart) -> Result<()> {
    let n_max = tri.n_max();
    if part == TrianglePart::Edge {
        for n in 1..=n_max.div_ceil(2) {
            eq_q(
                format!("b({}, {n})", 2 * n - 1),
                &tri.get(2 * n - 1, n),
                &(neg_q_poch(2 * n as u32 - 1) * g.get(n)),
            )?;
        }
        return Ok(());
    }
    let odd = part == TrianglePart::OddRows;
    let one = XOne::with_len(n_max + 2);
    let lambda = BasisFunctional::lambda(&one, n_max / 2 + 1)?;
    for m in (0..=n_max).filter(|m| (m % 2 == 1) == odd) {
        for k in 0..=1 + m / 2 {
            let a = a_entry(&one, m, k);
            eq_q(format!("b({m}, {k}) = lambda(a({m}, {k}))"), &tri.get(m, k), &lambda.apply(&a)?)?;
            if m == 0 || k == 0 {
                continue;
            }
            let k_ = k as i64;
            if odd {
                let rhs = a_entry(&one, m, k - 1) * XsPoly::q_pow(2 * k_ - 2)
                    + a_entry(&one, m - 1, k) * (XsPoly::one() + XsPoly::q_pow(2 * k_ - 1));
                expect_eq(format!("a({m}, {k}) odd-row recurrence"), &a, &rhs)?;
            } else if k <= m / 2 {
                let rhs = (a_entry(&one, m, k + 1) + a_entry(&one, m - 1, k) * (XsPoly::one() + XsPoly::q_pow(2 * k_)))
                    * XsPoly::q_pow(1 - 2 * k_);
                expect_eq(format!("a({m}, {k}) even-row recurrence"), &a, &rhs)?;
            }
        }
    }
    Ok(())
}

/// All three parts of [`check_triangle_part`].
pub fn check_triangle(tri: &SeidelTriangle, g: &QGenocchiSeq) -> Result<()> {
    for part in [TrianglePart::OddRows, TrianglePart::EvenRows, TrianglePart::Edge] {
        check_triangle_part(tri, g, part)?;
    }
    Ok(())
}

/// Rows `0 ..= N`, checked against `lambda` and the series Genocchi numbers.
pub fn seidel_triangle(n_max: usize) -> Result<SeidelTriangle> {
    if n_max == 0 {
        return Err(Error::Config("the triangle needs at least two rows".into()));
    }
    let tri = SeidelTriangle::build(n_max);
    let g = genocchi_from_tangent(&q_tangent(n_max.div_ceil(2))?);
    check_triangle(&tri, &g)?;
    Ok(tri)
}

fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn binom(n: usize, k: usize) -> Rational {
    if k > n {
        return rat(0);
    }
    (0..k).fold(rat(1), |acc, i| acc * rat((n - i) as i64) / rat(i as i64 + 1))
}

fn eval1(v: &QRational) -> Rational {
    v.eval(&rat(1)).expect("q = 1 is not a pole of these values")
}

/// `(t_1, t_3, ..)` at `q = 1`.
pub fn classical_tangents(t: &QTangentSeq) -> Vec<Rational> {
    t.values.iter().map(eval1).collect()
}

/// `(G_2, G_4, ..)` at `q = 1`.
pub fn classical_genocchi(g: &QGenocchiSeq) -> Vec<Rational> {
    g.values.iter().map(eval1).collect()
}

/// Coefficients `c_j` of `t_{2n+1} = sum_j c_j t_{2n+1-2j}` at `q = 1`:
/// `(-1)^(j-1) 2^(2j) C(n+1,2j) (n+1-j)/(n+1)`.
pub fn classical_recurrence_coeffs(n: usize) -> Vec<Rational> {
    (1..=n.div_ceil(2))
        .map(|j| {
            let s = if j % 2 == 1 { 1 } else { -1 };
            rat(s * (1 << (2 * j))) * binom(n + 1, 2 * j) * rat((n + 1 - j) as i64) / rat(n as i64 + 1)
        })
        .collect()
}

/// The recurrence at `q = 1`. With `printed` the factor `t_{2n+1-2j}` is
/// left out.
pub fn classical_tangent_recurrence(t: &[Rational], n: usize, printed: bool) -> Result<()> {
    let rhs = classical_recurrence_coeffs(n)
        .iter()
        .enumerate()
        .fold(rat(0), |acc, (i, c)| acc + if printed { c.clone() } else { c * &t[n - i - 1] });
    eq_rat(format!("classical t_{}", 2 * n + 1), &t[n], &rhs)
}

fn eq_rat(what: String, a: &Rational, b: &Rational) -> Result<()> {
    eq_q(what, &QRational::from_rational(a.clone()), &QRational::from_rational(b.clone()))
}

/// `sum_j (-1)^j C(n,2j) G_{2n-2j} = 0` at `q = 1` for `n >= 2`, with
/// `G_0 = 0`; `g[i]` is `G_{2i+2}`.
pub fn classical_seidel(g: &[Rational], n: usize) -> Result<()> {
    let sum = (0..=n / 2).fold(rat(0), |acc, j| {
        let gi = if n - j == 0 { rat(0) } else { g[n - j - 1].clone() };
        let term = binom(n, 2 * j) * gi;
        if j % 2 == 0 { acc + term } else { acc - term }
    });
    eq_rat(format!("Seidel sum, n = {n}"), &sum, &rat(0))
}

/// `t_{2n+1} = 2^(2n) G_{2n+2} / (n+1)` at `q = 1`.
pub fn classical_tangent_genocchi(t: &[Rational], g: &[Rational], n: usize) -> Result<()> {
    eq_rat(
        format!("classical t_{} against G_{}", 2 * n + 1, 2 * n + 2),
        &t[n],
        &(rat(1 << (2 * n)) * &g[n] / rat(n as i64 + 1)),
    )
}

/// `p` at `q = 1, s = -1`: the classical Chebyshev polynomials.
pub fn classical(p: &XsPoly) -> XsPoly {
    at_q1(p).subst_const(Var::S, &QRational::from_int(-1))
}

/// `T_{2n+1}(x) = sum C(2n+1,2k) (-1)^(n-k) t_{2n-2k+1} x^(2n+1-2k) T_{2k}(x)`.
pub fn classical_t_odd(tables: &ChebTables, t: &[Rational], n: usize) -> Result<()> {
    let rhs = (0..=n).fold(XsPoly::zero(), |acc, k| {
        let s = if (n - k).is_multiple_of(2) { rat(1) } else { rat(-1) };
        let c = QRational::from_rational(binom(2 * n + 1, 2 * k) * s * &t[n - k]);
        acc + classical(tables.t.get(2 * k as i64)).mul_mono(Mono::xs((2 * (n - k) + 1) as u32, 0)).scale(&c)
    });
    expect_eq(format!("classical T_{}", 2 * n + 1), &classical(tables.t.get(2 * n as i64 + 1)), &rhs)
}

/// `U_{2n+1}(x) = sum C(2n+2,2k)/(2k+1) (-1)^(n-k) G_{2n-2k+2} (2x)^e U_{2k}(x)`
/// with `e = 2n-2k+1`, or the exponent `2n-2k` when `printed`.
pub fn classical_u_odd(tables: &ChebTables, g: &[Rational], n: usize, printed: bool) -> Result<()> {
    let rhs = (0..=n).fold(XsPoly::zero(), |acc, k| {
        let e = 2 * (n - k) + usize::from(!printed);
        let s = if (n - k).is_multiple_of(2) { rat(1) } else { rat(-1) };
        let c = binom(2 * n + 2, 2 * k) / rat(2 * k as i64 + 1) * s * &g[n - k] * rat(1 << e);
        acc + classical(tables.u.get(2 * k as i64))
            .mul_mono(Mono::xs(e as u32, 0))
            .scale(&QRational::from_rational(c))
    });
    expect_eq(format!("classical U_{}", 2 * n + 1), &classical(tables.u.get(2 * n as i64 + 1)), &rhs)
}

/// `sum_j C(n,j) (-2x)^j P_{2n+m-j}(x,s) = s^n P_m(x,s)` at `q = 1`, with
/// every `U` index lowered by one. With `printed` the `U` right side keeps
/// `U_m`.
pub fn classical_shift(tables: &ChebTables, kind: SeriesKind, n: usize, m: usize, printed: bool) -> Result<()> {
    let p = |i: i64| match kind {
        SeriesKind::TGen => at_q1(tables.t.get(i)),
        SeriesKind::UGen => at_q1(tables.u.get(i - 1)),
    };
    let lhs = (0..=n).fold(XsPoly::zero(), |acc, j| {
        let s = if j % 2 == 0 { 1 } else { -1 };
        let c = QRational::from_rational(binom(n, j) * rat(s * (1 << j)));
        acc + p((2 * n + m - j) as i64).mul_mono(Mono::xs(j as u32, 0)).scale(&c)
    });
    let rhs_index = if printed && kind == SeriesKind::UGen { m as i64 + 1 } else { m as i64 };
    let rhs = s_mono(QRational::one(), n) * p(rhs_index);
    expect_eq(format!("classical {kind} shift, (n, m) = ({n}, {m})"), &lhs, &rhs)
}

/// The `q = 1` generating functions: `tanh z = sum (-1)^n t_{2n+1} z^(2n+1)/(2n+1)!`
/// and `z tanh z = sum (-1)^(n-1) 2^(2n-1) G_{2n} z^(2n)/(2n)!`.
pub fn classical_series(t: &[Rational], g: &[Rational]) -> Result<()> {
    let order = (2 * t.len()).min(2 * g.len());
    let tanh = tanh_q(order)?;
    let mut fact = rat(1);
    for m in 0..=order {
        if m > 0 {
            fact *= rat(m as i64);
        }
        let c = eval1(&constant_coeff(&tanh, m)?);
        let want = if m % 2 == 1 {
            let n = m / 2;
            let s = if n % 2 == 0 { rat(1) } else { rat(-1) };
            s * &t[n] / &fact
        } else {
            rat(0)
        };
        eq_rat(format!("tanh z, z^{m}"), &c, &want)?;
        if m >= 1 && m % 2 == 1 && m < order {
            let n = m.div_ceil(2);
            let s = if n % 2 == 1 { rat(1) } else { rat(-1) };
            let want = s * rat(1 << (2 * n - 1)) * &g[n - 1] / (&fact * rat(m as i64 + 1));
            eq_rat(format!("z tanh z, z^{}", m + 1), &c, &want)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn series_and_quotients() {
        let t = build_series(SeriesKind::TGen, 10).unwrap();
        assert!(t.coeff(0).is_one());
        build_series(SeriesKind::UGen, 10).unwrap();
        check_quotient(SeriesKind::TGen, 10).unwrap();
        check_quotient(SeriesKind::UGen, 10).unwrap();
    }

    #[test]
    fn tangent_and_genocchi_values() {
        let t = q_tangent(5).unwrap();
        assert!(t.get(0).is_one());
        assert_eq!(classical_tangents(&t)[..5], ints(&[1, 2, 16, 272, 7936])[..]);
        let g = q_genocchi(6).unwrap();
        assert_eq!(classical_genocchi(&g), ints(&[1, 1, 3, 17, 155, 2073]));
        assert!(g.get(1).is_one());
        assert_eq!(g.render(2), "q*(1+q)/(1+q^3)");
        assert_eq!(g.render(3), "q^2*(1+q)*(1+q^2)*(1+q+q^2)/((1+q^4)*(1+q^5))");
        let g8 = QRational::new(
            QPoly::from_coeffs(&[1, 1, 3, 2, 3, 2, 3, 1, 1])
                * QPoly::from_coeffs(&[1, 1]).pow(2)
                * QPoly::from_coeffs(&[1, 0, 1])
                * QPoly::q_pow(3),
            one_plus_q_prod(5, 7),
        )
        .unwrap();
        assert_eq!(g.get(4), g8);
        assert_eq!(g.render(1), "1");
        assert_eq!(
            g.render(4),
            "q^3*(1+q)^2*(1+q^2)*(1+q+3*q^2+2*q^3+3*q^4+2*q^5+3*q^6+q^7+q^8)/((1+q^5)*(1+q^6)*(1+q^7))"
        );
        check_genocchi_series(&g).unwrap();
        palindrome_and_integrality(&g).unwrap();
        assert_eq!(integral_genocchi(&g, 1).unwrap(), QPoly::one());
    }

    #[test]
    fn expansions_and_functionals() {
        let tables = ChebTables::new(13);
        let one = XOne::new(&tables);
        let t = q_tangent(6).unwrap();
        let g = q_genocchi(7).unwrap();
        assert_eq!(at_x1(tables.u.get(1)).to_string(), "(1+q)");
        for n in 0..=5 {
            expand_t_odd(&tables, &t, n).unwrap();
            expand_u_odd(&tables, &g, n).unwrap();
        }
        for n in 1..=6 {
            u_odd_display(&one, &tables.binom, &g, n, false).unwrap();
        }
        assert!(u_odd_display(&one, &tables.binom, &g, 2, true).is_err());
        functional_mu_lambda(4).unwrap();
        check_mu(&one, &tables.binom, &t, 0, true).unwrap();
        assert!(check_mu(&one, &tables.binom, &t, 1, true).is_err());
    }

    #[test]
    fn shift_identities() {
        let tables = ChebTables::new(24);
        let one = XOne::new(&tables);
        let b = &tables.binom;
        for n in 0..=10 {
            for m in 0..=10 - n {
                shift_identity(SeriesKind::TGen, &one, b, n, m).unwrap();
                shift_identity(SeriesKind::UGen, &one, b, n, m).unwrap();
                if n >= 1 {
                    check_w_recursion(&one, b, n, m).unwrap();
                }
            }
            t_shift_corollary(&one, b, n, 0).unwrap();
            t_shift_corollary(&one, b, n, 1).unwrap();
            check_t_odd_shift(&one, b, n).unwrap();
            for j in 1..=n + 1 {
                bracket_replacement(b, n, j, false).unwrap();
            }
        }
        assert!(bracket_replacement(b, 1, 1, true).is_err());
    }

    #[test]
    fn recurrences_and_seidel() {
        let b = QBinomialTable::new(16);
        let t = q_tangent(5).unwrap();
        let g = q_genocchi(6).unwrap();
        for n in 1..=5 {
            tangent_recurrence(&b, &t, n).unwrap();
        }
        for n in 1..=6 {
            q_seidel(&b, &g, n).unwrap();
        }
        let tc = classical_tangents(&t);
        let gc = classical_genocchi(&g);
        assert_eq!(classical_recurrence_coeffs(4), ints(&[32, -48]));
        assert_eq!(classical_recurrence_coeffs(5), ints(&[50, -160, 32]));
        for n in 1..=5 {
            classical_tangent_recurrence(&tc, n, false).unwrap();
            classical_tangent_genocchi(&tc, &gc, n).unwrap();
        }
        assert!(classical_tangent_recurrence(&tc, 2, true).is_err());
        for n in 2..=6 {
            classical_seidel(&gc, n).unwrap();
        }
        classical_series(&tc, &gc).unwrap();
    }

    #[test]
    fn classical_expansions() {
        let tables = ChebTables::new(14);
        let t = classical_tangents(&q_tangent(5).unwrap());
        let g = classical_genocchi(&q_genocchi(6).unwrap());
        for n in 0..=5 {
            classical_t_odd(&tables, &t, n).unwrap();
            classical_u_odd(&tables, &g, n, false).unwrap();
        }
        assert!(classical_u_odd(&tables, &g, 0, true).is_err());
        for n in 0..=4 {
            for m in 0..=4 {
                classical_shift(&tables, SeriesKind::TGen, n, m, false).unwrap();
                classical_shift(&tables, SeriesKind::UGen, n, m, false).unwrap();
            }
        }
        assert!(classical_shift(&tables, SeriesKind::UGen, 1, 1, true).is_err());
    }

    #[test]
    fn triangle() {
        let tri = seidel_triangle(12).unwrap();
        assert!(tri.get(0, 1).is_one());
        assert_eq!(tri.get(1, 1).to_string(), "1+q");
        let b21 = QRational::new(QPoly::from_coeffs(&[1, 1, 1, 1]), QPoly::q_pow(1)).unwrap();
        assert_eq!(tri.get(2, 1), b21);
        let b32 = QPoly::from_coeffs(&[1, 1]).pow(2) * QPoly::from_coeffs(&[1, 0, 1]) * QPoly::q_pow(1);
        assert_eq!(tri.get(3, 2), QRational::from_poly(b32));
        assert!(tri.get(4, 3).is_zero());
        let json = tri.to_json();
        assert!(json.starts_with("[[\"0\",\"1\"],[\"0\",\"1+q\"]"), "{json}");
    }
}
