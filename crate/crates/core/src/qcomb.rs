//! q-integers, q-binomials, q-Pochhammer symbols, the q-exponential series
//! and the q-Fibonacci/Lucas families.

use std::fmt;

use crate::algebra::{Mono, QPoly, QRational, Var, XsPoly, ZSeries};
use crate::error::{expect_eq, Error, Result};

/// `n choose 2`, the exponent that keeps showing up in front of q-binomials.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `[n] = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: u32) -> QPoly {
    QPoly::from_coeffs(&vec![1; n as usize])
}

/// `[n]` extended to negative `n` by `[-m] = -q^(-m) [m]`, which keeps
/// `[n] = (1 - q^n)/(1 - q)` valid.
pub fn q_int_signed(n: i64) -> QRational {
    if n >= 0 {
        q_int(n as u32).into()
    } else {
        -(QRational::q_pow(n) * QRational::from_poly(q_int((-n) as u32)))
    }
}

pub fn q_factorial(n: u32) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, k| &acc * &q_int(k))
}

/// `(1 + q^lo)(1 + q^(lo+1)) ... (1 + q^hi)`; empty (= 1) when `hi < lo`.
pub fn one_plus_q_prod(lo: u32, hi: u32) -> QPoly {
    (lo..=hi).fold(QPoly::one(), |acc, i| &acc * &(&QPoly::one() + &QPoly::q_pow(i)))
}

/// Same product with signed bounds; the factor at a negative index is
/// `1 + q^(-i)`, so the result may be a proper fraction.
pub fn one_plus_q_prod_signed(lo: i64, hi: i64) -> QRational {
    (lo..=hi).fold(QRational::one(), |acc, i| {
        acc * (QRational::one() + QRational::q_pow(i))
    })
}

/// Pascal-style triangle of Gaussian binomials, built with the first
/// recurrence of the pair
/// `[n,k] = q^k [n-1,k] + [n-1,k-1] = [n-1,k] + q^(n-k) [n-1,k-1]`.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    rows: Vec<Vec<QPoly>>,
}

impl QBinomialTable {
    pub fn new(n_max: u32) -> Self {
        let mut rows: Vec<Vec<QPoly>> = vec![vec![QPoly::one()]];
        for n in 1..=n_max as usize {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(QPoly::one());
            for k in 1..n {
                row.push(&prev[k].shift(k as u32) + &prev[k - 1]);
            }
            row.push(QPoly::one());
            rows.push(row);
        }
        Self { rows }
    }

    pub fn n_max(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    /// `[n choose k]`; zero outside `0 <= k <= n`. Panics if `n` exceeds the
    /// table.
    pub fn get(&self, n: i64, k: i64) -> QPoly {
        if n < 0 || k < 0 || k > n {
            return QPoly::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }

    /// Borrowing access for in-range indices.
    pub fn entry(&self, n: usize, k: usize) -> &QPoly {
        &self.rows[n][k]
    }

    /// Checks both recurrences, and symmetry, on every interior entry.
    pub fn check_recurrences(&self) -> Result<()> {
        for n in 1..self.rows.len() {
            for k in 0..=n {
                let (n_, k_) = (n as i64, k as i64);
                let here = self.get(n_, k_);
                let first = &self.get(n_ - 1, k_).shift(k as u32) + &self.get(n_ - 1, k_ - 1);
                let second = &self.get(n_ - 1, k_) + &self.get(n_ - 1, k_ - 1).shift((n - k) as u32);
                let what = format!("q-binomial recurrence at ({n},{k})");
                expect_eq(&what, &poly(&here), &poly(&first))?;
                expect_eq(&what, &poly(&here), &poly(&second))?;
                expect_eq(
                    format!("q-binomial symmetry at ({n},{k})"),
                    &poly(&here),
                    &poly(&self.get(n_, n_ - k_)),
                )?;
            }
        }
        Ok(())
    }
}

fn poly(p: &QPoly) -> XsPoly {
    XsPoly::constant(p.clone().into())
}

/// Single Gaussian binomial; builds the rows up to `n`.
pub fn q_binomial(n: u32, k: u32) -> QPoly {
    if k > n {
        return QPoly::zero();
    }
    QBinomialTable::new(n).get(n as i64, k as i64)
}

/// `(a; q^step)_n = (1 - a)(1 - a q^step) ... (1 - a q^(step (n-1)))`.
///
/// The single entry point for every Pochhammer symbol in the crate, e.g.
/// `(-q; q)_n`, `(q; q^2)_n` or `(-q^m; q)_n`.
pub fn q_pochhammer(a: &QRational, step: u32, n: u32) -> QRational {
    let mut acc = QRational::one();
    let mut factor = a.clone();
    let ratio = QRational::q_pow(step as i64);
    for _ in 0..n {
        acc = acc * (QRational::one() - &factor);
        factor = factor * &ratio;
    }
    acc
}

/// `(c q^e; q^step)_n` for an integer `c` and exponent `e`.
pub fn q_pochhammer_at(c: i64, e: i64, step: u32, n: u32) -> QRational {
    q_pochhammer(&(QRational::from_int(c) * QRational::q_pow(e)), step, n)
}

/// `(v; q)_n` as a polynomial in the formal variable `v`.
pub fn q_pochhammer_poly(v: Var, n: u32) -> XsPoly {
    let mut acc = XsPoly::one();
    for i in 0..n {
        let factor = XsPoly::one() - XsPoly::var(v).scale(&QRational::q_pow(i as i64));
        acc = &acc * &factor;
    }
    acc
}

/// Right-hand side of the q-binomial theorem for `(v; q)_n`.
pub fn q_binomial_theorem_sum(table: &QBinomialTable, v: Var, n: u32) -> XsPoly {
    let mut out = XsPoly::zero();
    for k in 0..=n {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = QRational::from_int(sign)
            * QRational::q_pow(binom2(k as i64))
            * QRational::from_poly(table.get(n as i64, k as i64));
        out = out + XsPoly::term(c, Mono::ONE).mul_term(&QRational::one(), v, k);
    }
    out
}

/// Rogers' product `(x + y)(qx + y) ... (q^(n-1) x + y)`, with `y` carried by
/// the variable `s`.
///
/// Both the product and the sum `sum_k q^C(k,2) [n,k] x^k y^(n-k)` are
/// expanded; a disagreement means the arithmetic is broken and is returned
/// as an error.
pub fn rogers_product(n: u32) -> Result<XsPoly> {
    let y = XsPoly::s();
    let mut product = XsPoly::one();
    for i in 0..n {
        product = &product * &(&XsPoly::x().scale(&QRational::q_pow(i as i64)) + &y);
    }
    let table = QBinomialTable::new(n);
    let sum: XsPoly = (0..=n)
        .map(|k| {
            let c = QRational::q_pow(binom2(k as i64)) * QRational::from_poly(table.get(n as i64, k as i64));
            XsPoly::term(c, Mono::xs(k, n - k))
        })
        .sum();
    expect_eq(format!("Rogers product sum form, n = {n}"), &product, &sum)?;
    Ok(product)
}

/// `e(z) = sum z^n / [n]!` to the given order.
pub fn q_exp(order: usize) -> ZSeries {
    ZSeries::from_fn(order, |n| {
        XsPoly::constant(QRational::from_poly(q_factorial(n as u32)).recip().expect("[n]! is nonzero"))
    })
}

/// `1/e(-z) = sum q^C(n,2) z^n / [n]!`, checked against `e(-z)` before it is
/// returned.
pub fn q_exp_inv_neg(order: usize) -> Result<ZSeries> {
    let series = ZSeries::from_fn(order, |n| {
        let c = QRational::q_pow(binom2(n as i64))
            .checked_div(&QRational::from_poly(q_factorial(n as u32)))
            .expect("[n]! is nonzero");
        XsPoly::constant(c)
    });
    let product = &q_exp(order).reflect() * &series;
    if product != ZSeries::one(order) {
        let k = (0..=order)
            .find(|&k| product.coeff(k) != ZSeries::one(order).coeff(k))
            .unwrap();
        let target = if k == 0 { XsPoly::one() } else { XsPoly::zero() };
        return Err(Error::mismatch(
            format!("e(-z) * 1/e(-z) at z^{k}"),
            product.coeff(k) - &target,
        ));
    }
    Ok(series)
}

/// The q-Fibonacci and q-Lucas families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibLucKind {
    /// `F_n`, with `F_{n+1} = sum q^(k^2) [n-k,k] s^k x^(n-2k)`.
    F,
    /// `L_n = F_{n+1} + s F_{n-1}(x, qs)`.
    L,
    /// `Fib_n`, with `Fib_{n+1} = sum q^C(k+1,2) [n-k,k] s^k x^(n-2k)`.
    Fib,
    /// `Luc_n = Fib_{n+1} + s Fib_{n-1}`, with `Luc_0 = 2`.
    Luc,
    /// `Luc_n` except `Luc*_0 = 1`.
    LucStar,
}

impl fmt::Display for FibLucKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FibLucKind::F => "F",
            FibLucKind::L => "L",
            FibLucKind::Fib => "Fib",
            FibLucKind::Luc => "Luc",
            FibLucKind::LucStar => "Luc*",
        })
    }
}

/// Explicit-sum value of one of the families. `F_0 = Fib_0 = 0` and
/// `L_0 = Luc_0 = 2`.
pub fn fib_luc(table: &QBinomialTable, kind: FibLucKind, n: u32) -> XsPoly {
    use FibLucKind::*;
    match kind {
        F | Fib => {
            if n == 0 {
                return XsPoly::zero();
            }
            let m = n - 1;
            (0..=m / 2)
                .map(|k| {
                    let e = if kind == F { (k * k) as i64 } else { binom2(k as i64 + 1) };
                    let c = QRational::q_pow(e) * QRational::from_poly(table.get((m - k) as i64, k as i64));
                    XsPoly::term(c, Mono::xs(m - 2 * k, k))
                })
                .sum()
        }
        L | Luc | LucStar => {
            if n == 0 {
                return XsPoly::from_int(if kind == LucStar { 1 } else { 2 });
            }
            (0..=n / 2)
                .map(|k| {
                    let e = if kind == L { (k * k) as i64 - k as i64 } else { binom2(k as i64) };
                    let ratio = QRational::new(q_int(n), q_int(n - k)).expect("[n-k] is nonzero");
                    let c = QRational::q_pow(e)
                        * ratio
                        * QRational::from_poly(table.get((n - k) as i64, k as i64));
                    XsPoly::term(c, Mono::xs(n - 2 * k, k))
                })
                .sum()
        }
    }
}

/// Memoised values `0..=n_max` of one family.
#[derive(Clone, Debug)]
pub struct QFibLucFamily {
    pub kind: FibLucKind,
    pub values: Vec<XsPoly>,
}

impl QFibLucFamily {
    pub fn new(table: &QBinomialTable, kind: FibLucKind, n_max: u32) -> Self {
        Self {
            kind,
            values: (0..=n_max).map(|n| fib_luc(table, kind, n)).collect(),
        }
    }
}

/// Checks `L_n = F_{n+1} + s F_{n-1}(x, qs)` and
/// `Luc_n = Fib_{n+1} + s Fib_{n-1}` for `1 <= n <= n_max`.
pub fn check_lucas_definitions(table: &QBinomialTable, n_max: u32) -> Result<()> {
    use FibLucKind::*;
    for n in 1..=n_max {
        let f_next = fib_luc(table, F, n + 1);
        let f_prev = fib_luc(table, F, n - 1).eta(1);
        let rhs = &f_next + &(&XsPoly::s() * &f_prev);
        expect_eq(format!("L_{n} definition"), &fib_luc(table, L, n), &rhs)?;
        let rhs = &fib_luc(table, Fib, n + 1) + &(&XsPoly::s() * &fib_luc(table, Fib, n - 1));
        expect_eq(format!("Luc_{n} definition"), &fib_luc(table, Luc, n), &rhs)?;
        expect_eq(format!("Luc*_{n} = Luc_{n}"), &fib_luc(table, LucStar, n), &fib_luc(table, Luc, n))?;
    }
    Ok(())
}

fn neg_s_pow(k: u32) -> XsPoly {
    XsPoly::term(QRational::from_int(if k.is_multiple_of(2) { 1 } else { -1 }), Mono::xs(0, k))
}

/// `sum_k [n,k] (-s)^k Luc*_{n-2k} = x^n`; returns the residual on failure.
pub fn verify_luc_inversion(table: &QBinomialTable, n: u32) -> Result<()> {
    let lhs: XsPoly = (0..=n / 2)
        .map(|k| {
            let c = QRational::from_poly(table.get(n as i64, k as i64));
            (&neg_s_pow(k) * &fib_luc(table, FibLucKind::LucStar, n - 2 * k)).scale(&c)
        })
        .sum();
    expect_eq(format!("Luc* inversion, n = {n}"), &lhs, &XsPoly::term(QRational::one(), Mono::xs(n, 0)))
}

/// `sum_k ([n,k] - [n,k-1]) (-s)^k Fib_{n+1-2k} = x^n`.
pub fn verify_fib_inversion(table: &QBinomialTable, n: u32) -> Result<()> {
    let lhs: XsPoly = (0..=n.div_ceil(2))
        .map(|k| {
            let (n_, k_) = (n as i64, k as i64);
            let c = QRational::from_poly(&table.get(n_, k_) - &table.get(n_, k_ - 1));
            (&neg_s_pow(k) * &fib_luc(table, FibLucKind::Fib, n + 1 - 2 * k)).scale(&c)
        })
        .sum();
    expect_eq(format!("Fib inversion, n = {n}"), &lhs, &XsPoly::term(QRational::one(), Mono::xs(n, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(1), QPoly::one());
        assert_eq!(q_int(3), p(&[1, 1, 1]));
        // [-1] = -1/q
        assert_eq!(q_int_signed(-1), -QRational::q_pow(-1));
        assert_eq!(q_factorial(3), p(&[1, 2, 2, 1]));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(q_binomial(5, 0), QPoly::one());
        assert_eq!(q_binomial(2, 1), p(&[1, 1]));
        assert_eq!(q_binomial(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(q_binomial(3, 4).is_zero());
        let t = QBinomialTable::new(20);
        t.check_recurrences().unwrap();
        // factorial quotient as an independent route
        let via_factorials = QRational::new(q_factorial(7), &q_factorial(3) * &q_factorial(4)).unwrap();
        assert_eq!(QRational::from_poly(t.get(7, 3)), via_factorials);
        let at_one = t.get(10, 4).eval(&Rational::from_integer(1.into()));
        assert_eq!(at_one, Rational::from_integer(210.into()));
    }

    #[test]
    fn pochhammer_symbols() {
        assert_eq!(q_pochhammer_poly(Var::X, 0), XsPoly::one());
        let two = q_pochhammer_poly(Var::X, 2);
        assert_eq!(two.to_string(), "q*x^2 - (1+q)*x + 1");
        let minus_q = q_pochhammer_at(-1, 1, 1, 3);
        assert_eq!(minus_q, one_plus_q_prod(1, 3).into());
        let t = QBinomialTable::new(12);
        for n in 0..=12 {
            assert_eq!(q_pochhammer_poly(Var::X, n), q_binomial_theorem_sum(&t, Var::X, n));
        }
    }

    #[test]
    fn rogers() {
        assert_eq!(rogers_product(1).unwrap(), XsPoly::x() + XsPoly::s());
        assert_eq!(rogers_product(2).unwrap().to_string(), "q*x^2 + (1+q)*s*x + s^2");
        rogers_product(6).unwrap();
    }

    #[test]
    fn exponential_series() {
        let e = q_exp(4);
        assert_eq!(e.coeff(2), &XsPoly::constant(QRational::new(QPoly::one(), p(&[1, 1])).unwrap()));
        q_exp_inv_neg(10).unwrap();
        let one = Rational::from_integer(1.into());
        let at_one = e.map_coeffs(|c| c.at_q(&one)).unwrap();
        let six = QRational::from_rational(Rational::new(1.into(), 6.into()));
        assert_eq!(at_one.coeff(3), &XsPoly::constant(six));
    }

    #[test]
    fn fibonacci_lucas() {
        let t = QBinomialTable::new(30);
        assert_eq!(fib_luc(&t, FibLucKind::F, 3).to_string(), "x^2 + q*s");
        assert_eq!(fib_luc(&t, FibLucKind::Luc, 0), XsPoly::from_int(2));
        assert_eq!(fib_luc(&t, FibLucKind::LucStar, 0), XsPoly::one());
        check_lucas_definitions(&t, 12).unwrap();
        for n in 0..=12 {
            verify_luc_inversion(&t, n).unwrap();
            verify_fib_inversion(&t, n).unwrap();
        }
    }
}
