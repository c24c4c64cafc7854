//! The formal square root `A` with `A^2 = (x^2 + qs) eta^2`, and the
//! transfer matrices `A_n`.
//!
//! `A` does not commute with polynomials in `s`, so it is never
//! materialised: an element `E + A O` is stored as the pair `(E, O)`.

use super::closed::a_square_product;
use super::{at_q1, neg_s_pow, qk, x2_plus, ChebTables};
use crate::algebra::{QRational, XsPoly};
use crate::error::{expect_eq, Result};
use crate::qcomb::{binom2, QBinomialTable};

/// `even + A odd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APair {
    pub even: XsPoly,
    pub odd: XsPoly,
}

impl APair {
    pub fn new(even: XsPoly, odd: XsPoly) -> Self {
        Self { even, odd }
    }

    pub fn one() -> Self {
        Self::new(XsPoly::one(), XsPoly::zero())
    }

    /// `A (E + A O) = (x^2 + qs) eta^2 O + A E`.
    pub fn times_a(&self) -> Self {
        Self::new(x2_plus(QRational::q_pow(1)) * self.odd.eta(2), self.even.clone())
    }

    /// Left multiplication by the scalar `c` (free of `s`, or at least
    /// standing to the left of `A`).
    pub fn scale(&self, c: &XsPoly) -> Self {
        Self::new(c * &self.even, c * &self.odd)
    }

    /// Left multiplication by `q^k x + A`.
    pub fn step(&self, k: i64) -> Self {
        let qx = qk(k) * XsPoly::x();
        let a = self.times_a();
        Self::new(&qx * &self.even + a.even, &qx * &self.odd + a.odd)
    }
}

impl std::ops::Add for APair {
    type Output = APair;
    fn add(self, rhs: APair) -> APair {
        APair::new(self.even + rhs.even, self.odd + rhs.odd)
    }
}

/// `(q^(n-1) x + A) ... (qx + A)(x + A) 1`.
pub fn operator_product(n: usize) -> APair {
    (0..n as i64).fold(APair::one(), |p, k| p.step(k))
}

/// The factors applied in the opposite order give the same element.
pub fn check_commuting_factors(tables: &ChebTables, n: usize) -> Result<()> {
    let forward = operator_product(n);
    let backward = (0..n as i64).rev().fold(APair::one(), |p, k| p.step(k));
    let t = tables.t.get(n as i64);
    let u = tables.u.get(n as i64 - 1);
    expect_eq(format!("T_{n} as even part"), &forward.even, t)?;
    expect_eq(format!("U_{} as odd part", n as i64 - 1), &forward.odd, u)?;
    expect_eq("reversed factor order, even part", &backward.even, t)?;
    expect_eq("reversed factor order, odd part", &backward.odd, u)
}

/// `A^k` applied to `p`.
pub fn a_power_action(k: usize, p: &XsPoly) -> APair {
    (0..k).fold(APair::new(p.clone(), XsPoly::zero()), |acc, _| acc.times_a())
}

/// `A^(2k) p = prod_{j<k} (x^2 + q^(2j+1) s) eta^(2k) p`.
pub fn check_a_squared_product(k: usize, p: &XsPoly) -> Result<()> {
    let got = a_power_action(2 * k, p);
    let want = a_square_product(k as u32) * p.eta(2 * k as i64);
    expect_eq(format!("A^{} applied", 2 * k), &got.even, &want)?;
    expect_eq(format!("A^{} odd part", 2 * k), &got.odd, &XsPoly::zero())
}

/// `prod_{j<k} (x^2 + q^(2j+1) s) = sum_j q^(j^2) [k, j]_{q^2} s^j x^(2k-2j)`.
pub fn q_binomial_x2_expansion(b: &QBinomialTable, k: u32) -> Result<()> {
    let sum = (0..=k).fold(XsPoly::zero(), |acc, j| {
        let c = QRational::from_poly(b.get(k as i64, j as i64).dilate(2).shift(j * j));
        acc + XsPoly::term(c, crate::algebra::Mono::xs(2 * k - 2 * j, j))
    });
    expect_eq(format!("k = {k}"), &a_square_product(k), &sum)
}

/// `p_n(x, A) = sum_k q^C(k,2) [n, k] x^k A^(n-k)`, applied to 1.
pub fn p_n_binomial(b: &QBinomialTable, n: u32) -> APair {
    (0..=n).fold(APair::new(XsPoly::zero(), XsPoly::zero()), |acc, k| {
        let c = QRational::from_poly(b.get(n as i64, k as i64)) * QRational::q_pow(binom2(k as i64));
        let xk = XsPoly::term(c, crate::algebra::Mono::xs(k, 0));
        acc + a_power_action((n - k) as usize, &XsPoly::one()).scale(&xk)
    })
}

/// The classical pair `(x + sqrt(x^2 + s))^n = T_n + U_{n-1} sqrt(x^2 + s)`
/// at `q = 1`.
pub fn sqrt_pair_classical(tables: &ChebTables, n: usize) -> Result<()> {
    let x = XsPoly::x();
    let d = x2_plus(QRational::one());
    let (mut e, mut o) = (XsPoly::one(), XsPoly::zero());
    for _ in 0..n {
        let e2 = &x * &e + &d * &o;
        o = e + &x * &o;
        e = e2;
    }
    expect_eq("rational part", &e, &at_q1(tables.t.get(n as i64)))?;
    expect_eq("irrational part", &o, &at_q1(tables.u.get(n as i64 - 1)))
}

/// `2 x 2` matrix over [`XsPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2(pub [[XsPoly; 2]; 2]);

impl Matrix2 {
    pub fn identity() -> Self {
        Matrix2([[XsPoly::one(), XsPoly::zero()], [XsPoly::zero(), XsPoly::one()]])
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let (a, b) = (&self.0, &rhs.0);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Matrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> XsPoly {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }
}

/// `A_n = [[x, q^n (x^2 + s)], [1, q^n x]]`.
pub struct TransferMatrix;

impl TransferMatrix {
    pub fn at(n: i64) -> Matrix2 {
        let x = XsPoly::x();
        Matrix2([
            [x.clone(), qk(n) * x2_plus(QRational::one())],
            [XsPoly::one(), qk(n) * x],
        ])
    }
}

/// `A_{n-1} ... A_0`.
pub fn transfer_matrix_product(n: usize) -> Matrix2 {
    (0..n as i64).fold(Matrix2::identity(), |acc, k| TransferMatrix::at(k).mul(&acc))
}

/// The product against `[[T_n, (x^2+s) U_{n-1}(qs)], [U_{n-1}, T_n(s/q)]]`.
pub fn check_transfer_product(tables: &ChebTables, n: usize) -> Result<()> {
    let m = transfer_matrix_product(n);
    let t = tables.t.get(n as i64);
    let u = tables.u.get(n as i64 - 1);
    let want = [
        [t.clone(), x2_plus(QRational::one()) * u.eta(1)],
        [u.clone(), t.eta(-1)],
    ];
    for (i, row) in want.iter().enumerate() {
        for (j, w) in row.iter().enumerate() {
            expect_eq(format!("entry ({i},{j})"), &m.0[i][j], w)?;
        }
    }
    Ok(())
}

/// `T_n(x,s) T_n(x,qs) - (x^2+qs) U_{n-1}(x,qs) U_{n-1}(x,q^2 s) = q^C(n+1,2) (-s)^n`,
/// and the left side is `eta` applied to the determinant of the transfer product.
pub fn pell_identity(tables: &ChebTables, n: usize) -> Result<()> {
    let t = tables.t.get(n as i64);
    let u = tables.u.get(n as i64 - 1);
    let lhs = t * &t.eta(1) - x2_plus(QRational::q_pow(1)) * u.eta(1) * u.eta(2);
    let rhs = neg_s_pow(n as u32) * qk(binom2(n as i64 + 1));
    expect_eq(format!("n = {n}"), &lhs, &rhs)?;
    let det = transfer_matrix_product(n).det();
    expect_eq(
        "product of determinants",
        &det,
        &(neg_s_pow(n as u32) * qk(binom2(n as i64))),
    )?;
    expect_eq("eta of the determinant", &det.eta(1), &rhs)
}

/// `T_n^2 - (x^2 + s) U_{n-1}^2 = (-s)^n` at `q = 1`.
pub fn pell_classical(tables: &ChebTables, n: usize) -> Result<()> {
    let t = at_q1(tables.t.get(n as i64));
    let u = at_q1(tables.u.get(n as i64 - 1));
    let lhs = &t * &t - x2_plus(QRational::one()) * &u * &u;
    expect_eq(format!("n = {n}"), &lhs, &neg_s_pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_pair_builds_families() {
        let tables = ChebTables::new(10);
        assert_eq!(operator_product(0), APair::one());
        assert_eq!(operator_product(1), APair::new(XsPoly::x(), XsPoly::one()));
        for n in 0..=10 {
            check_commuting_factors(&tables, n).unwrap();
            let p = p_n_binomial(&tables.binom, n as u32);
            assert_eq!(&p.even, tables.t.get(n as i64));
            assert_eq!(&p.odd, tables.u.get(n as i64 - 1));
            sqrt_pair_classical(&tables, n).unwrap();
        }
        for k in 0..=4 {
            check_a_squared_product(k, &(XsPoly::s() + XsPoly::x())).unwrap();
            q_binomial_x2_expansion(&tables.binom, k as u32).unwrap();
        }
    }

    #[test]
    fn transfer_and_pell() {
        let tables = ChebTables::new(10);
        for n in 1..=10 {
            check_transfer_product(&tables, n).unwrap();
            pell_identity(&tables, n).unwrap();
            pell_classical(&tables, n).unwrap();
        }
    }
}
