//! The classical (`q = 1`) Chebyshev, Fibonacci and Lucas identities, read
//! off the q-tables.
//!
//! `T_n(x)` and `U_n(x)` are the tables at `q = 1, s = -1`; the bivariate
//! `T_n(x, s)`, `U_n(x, s)`, `F_n(x, s)` and `L_n(x, s)` keep `s` free.

use num_integer::binomial;

use crate::algebra::{Mono, QRational, Rational, Var, XsPoly};
use crate::chebyshev::{at_q1, ChebTables, Kind};
use crate::error::{expect_eq, Result};
use crate::qcomb::{fib_luc, FibLucKind, QBinomialTable};
use crate::tangent::classical;

fn choose(n: i64, k: i64) -> QRational {
    if n < 0 || k < 0 || k > n {
        QRational::zero()
    } else {
        QRational::from_int(binomial(n, k))
    }
}

fn xs(c: QRational, x: u32, s: u32) -> XsPoly {
    XsPoly::term(c, Mono::xs(x, s))
}

fn neg_s_pow(k: u32) -> XsPoly {
    xs(QRational::from_int(if k.is_multiple_of(2) { 1 } else { -1 }), 0, k)
}

fn ratio(a: i64, b: i64) -> QRational {
    QRational::from_rational(Rational::new(a.into(), b.into()))
}

/// `p(2x, s) / 2^n`.
fn double_x(p: &XsPoly, n: u32) -> XsPoly {
    p.scale_var(Var::X, &QRational::from_int(2)).scale(&ratio(1, 1 << n))
}

/// `p(x, s/4)`.
fn quarter_s(p: &XsPoly) -> XsPoly {
    p.scale_var(Var::S, &ratio(1, 4))
}

/// `F_n(x, s)`.
pub fn fibonacci(b: &QBinomialTable, n: u32) -> XsPoly {
    at_q1(&fib_luc(b, FibLucKind::Fib, n))
}

/// `L_n(x, s)`, or `L*_n` with `L*_0 = 1`.
pub fn lucas(b: &QBinomialTable, n: u32, star: bool) -> XsPoly {
    at_q1(&fib_luc(b, if star { FibLucKind::LucStar } else { FibLucKind::Luc }, n))
}

/// `P_n(x) = 2x P_{n-1}(x) - P_{n-2}(x)` for `n >= 2`.
pub fn chebyshev_recurrence(tables: &ChebTables, kind: Kind, n: i64) -> Result<()> {
    let f = tables.family(kind);
    let two_x = XsPoly::from_int(2) * XsPoly::x();
    let rhs = two_x * classical(f.get(n - 1)) - classical(f.get(n - 2));
    expect_eq(format!("{kind}_{n}(x)"), &classical(f.get(n)), &rhs)
}

/// `T_n(1) = 1` and `U_n(1) = n + 1`.
pub fn value_at_one(tables: &ChebTables, kind: Kind, n: i64) -> Result<()> {
    let v = classical(tables.family(kind).get(n)).subst_const(Var::X, &QRational::one());
    let want = match kind {
        Kind::T => XsPoly::one(),
        Kind::U => XsPoly::from_int(n + 1),
    };
    expect_eq(format!("{kind}_{n}(1)"), &v, &want)
}

/// `F_{n+1}(x, s) = sum_k C(n-k, k) s^k x^(n-2k)`.
pub fn fibonacci_sum(b: &QBinomialTable, n: u32) -> Result<()> {
    let sum: XsPoly = (0..=n / 2)
        .map(|k| xs(choose((n - k) as i64, k as i64), n - 2 * k, k))
        .sum();
    expect_eq(format!("F_{}", n + 1), &fibonacci(b, n + 1), &sum)
}

/// `L_n = F_{n+1} + s F_{n-1} = sum_k n/(n-k) C(n-k, k) s^k x^(n-2k)` for `n >= 1`.
pub fn lucas_sum(b: &QBinomialTable, n: u32) -> Result<()> {
    let l = lucas(b, n, false);
    let from_f = fibonacci(b, n + 1) + XsPoly::s() * fibonacci(b, n - 1);
    expect_eq(format!("L_{n} from F"), &l, &from_f)?;
    let sum: XsPoly = (0..=n / 2)
        .map(|k| {
            let (n, k) = (n as i64, k as i64);
            xs(ratio(n, n - k) * choose(n - k, k), (n - 2 * k) as u32, k as u32)
        })
        .sum();
    expect_eq(format!("L_{n} sum"), &l, &sum)
}

/// `T_0 = L*_0` and `T_n / 2^(n-1) = L*_n(2x, s) / 2^n = L*_n(x, s/4)` for `n >= 1`.
pub fn monic_t_lucas(tables: &ChebTables, n: u32) -> Result<()> {
    let l = lucas(&tables.binom, n, true);
    let t = at_q1(tables.t.get(n as i64));
    if n == 0 {
        return expect_eq("T_0 = L*_0", &t, &l);
    }
    let monic = t.scale(&ratio(1, 1 << (n - 1)));
    expect_eq(format!("T_{n} / 2^{}", n - 1), &monic, &double_x(&l, n))?;
    expect_eq(format!("L*_{n}(x, s/4)"), &double_x(&l, n), &quarter_s(&l))
}

/// `sum_k C(n, k) (-s)^k L*_{n-2k}(x, s) = x^n`.
pub fn lucas_inversion(b: &QBinomialTable, n: u32) -> Result<()> {
    let lhs: XsPoly = (0..=n / 2)
        .map(|k| (neg_s_pow(k) * lucas(b, n - 2 * k, true)).scale(&choose(n as i64, k as i64)))
        .sum();
    expect_eq(format!("L* inversion, n = {n}"), &lhs, &xs(QRational::one(), n, 0))
}

/// `U_n / 2^n = F_{n+1}(2x, s) / 2^n = F_{n+1}(x, s/4)`.
pub fn monic_u_fibonacci(tables: &ChebTables, n: u32) -> Result<()> {
    let f = fibonacci(&tables.binom, n + 1);
    let monic = at_q1(tables.u.get(n as i64)).scale(&ratio(1, 1 << n));
    expect_eq(format!("U_{n} / 2^{n}"), &monic, &double_x(&f, n))?;
    expect_eq(format!("F_{}(x, s/4)", n + 1), &double_x(&f, n), &quarter_s(&f))
}

/// `sum_k (C(n, k) - C(n, k-1)) (-s)^k F_{n+1-2k}(x, s) = x^n`.
pub fn fibonacci_inversion(b: &QBinomialTable, n: u32) -> Result<()> {
    let lhs: XsPoly = (0..=n.div_ceil(2))
        .map(|k| {
            let (n_, k_) = (n as i64, k as i64);
            let c = choose(n_, k_) - choose(n_, k_ - 1);
            (neg_s_pow(k) * fibonacci(b, n + 1 - 2 * k)).scale(&c)
        })
        .sum();
    expect_eq(format!("F inversion, n = {n}"), &lhs, &xs(QRational::one(), n, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_one_identities() {
        let tables = ChebTables::new(14);
        let b = &tables.binom;
        for n in 0..=12u32 {
            let ni = n as i64;
            for kind in [Kind::T, Kind::U] {
                value_at_one(&tables, kind, ni).unwrap();
                if n >= 2 {
                    chebyshev_recurrence(&tables, kind, ni).unwrap();
                }
            }
            fibonacci_sum(b, n).unwrap();
            if n >= 1 {
                lucas_sum(b, n).unwrap();
            }
            monic_t_lucas(&tables, n).unwrap();
            lucas_inversion(b, n).unwrap();
            monic_u_fibonacci(&tables, n).unwrap();
            fibonacci_inversion(b, n).unwrap();
        }
        assert_eq!(fibonacci(b, 3).to_string(), "x^2 + s");
        assert_eq!(lucas(b, 2, false).to_string(), "x^2 + 2*s");
    }
}
