//! `U_n^(r)(x, s, q)`: black squares at position `i` carry `q^i r x`.

use super::qk;
use crate::algebra::{Mono, QRational, Var, XsPoly};
use crate::error::{expect_eq, Result};
use crate::qcomb::{binom2, QBinomialTable};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenUFamily {
    values: Vec<XsPoly>,
    zero: XsPoly,
}

fn r_factor(i: i64) -> XsPoly {
    XsPoly::one() + XsPoly::r() * qk(i)
}

impl GenUFamily {
    /// `U_n^(r) = (1 + q^n r) x U_{n-1}^(r) + q^(n-1) s U_{n-2}^(r)`.
    pub fn new(n_max: usize) -> Self {
        let mut values: Vec<XsPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let v = match n {
                0 => XsPoly::one(),
                1 => r_factor(1) * XsPoly::x(),
                _ => {
                    let n = n as i64;
                    r_factor(n) * XsPoly::x() * &values[n as usize - 1]
                        + (qk(n - 1) * XsPoly::s()) * &values[n as usize - 2]
                }
            };
            values.push(v);
        }
        Self {
            values,
            zero: XsPoly::zero(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `U_n^(r)`, with `U_{-1}^(r) = 0`.
    pub fn get(&self, n: i64) -> &XsPoly {
        if n == -1 {
            return &self.zero;
        }
        &self.values[n as usize]
    }
}

pub fn gen_u_family(n_max: usize) -> GenUFamily {
    GenUFamily::new(n_max)
}

/// `u(n, k, s, r) = q^(k^2) [n-k, k] (1+q^(k+1) r)...(1+q^(n-k) r) s^k x^(n-2k)`,
/// zero for `k > n/2` or negative indices.
pub fn u_coeff(b: &QBinomialTable, n: i64, k: i64) -> XsPoly {
    if n < 0 || k < 0 || 2 * k > n {
        return XsPoly::zero();
    }
    let prod = (k + 1..=n - k).fold(XsPoly::one(), |acc, i| acc * r_factor(i));
    let c = QRational::from_poly(b.get(n - k, k)) * QRational::q_pow(k * k);
    prod.mul_mono(Mono::xs((n - 2 * k) as u32, k as u32)).scale(&c)
}

/// `u(n,k) = u(n-1,k) (1 + q^n r) x + u(n-2,k-1) q^(n-1) s` together with
/// `sum_k u(n,k) = U_n^(r)`.
pub fn u_coeff_recurrence(b: &QBinomialTable, fam: &GenUFamily, n: i64) -> Result<()> {
    let mut total = XsPoly::zero();
    for k in 0..=n / 2 {
        let u = u_coeff(b, n, k);
        if n >= 1 {
            let rhs = u_coeff(b, n - 1, k) * r_factor(n) * XsPoly::x()
                + u_coeff(b, n - 2, k - 1) * (qk(n - 1) * XsPoly::s());
            expect_eq(format!("u({n},{k})"), &u, &rhs)?;
        }
        total = total + u;
    }
    expect_eq(format!("sum of u({n},k)"), &total, fam.get(n))
}

/// `(1+q^(k+1) r)...(1+q^(n-k) r) = sum_l [n-2k, l] (q^(k+1) r)^l q^C(l,2)`.
pub fn r_product_expansion(b: &QBinomialTable, n: i64, k: i64) -> Result<()> {
    let prod = (k + 1..=n - k).fold(XsPoly::one(), |acc, i| acc * r_factor(i));
    let m = n - 2 * k;
    let sum = (0..=m).fold(XsPoly::zero(), |acc, l| {
        let c = QRational::from_poly(b.get(m, l)) * QRational::q_pow((k + 1) * l + binom2(l));
        acc + XsPoly::term(c, Mono::new(0, 0, l as u32))
    });
    expect_eq(format!("n = {n}, k = {k}"), &prod, &sum)
}

/// `U^(r)_{m+n} = U^(r)_m U^(q^m r)_n(x, q^m s)
///   + q^m s U^(r)_{m-1} U^(q^(m+1) r)_{n-1}(x, q^(m+1) s)`.
pub fn addition_formula(fam: &GenUFamily, m: i64, n: i64) -> Result<()> {
    let shifted = |p: &XsPoly, k: i64| p.scale_var(Var::R, &QRational::q_pow(k)).eta(k);
    let lhs = fam.get(m + n).clone();
    let rhs = fam.get(m) * &shifted(fam.get(n), m)
        + (qk(m) * XsPoly::s()) * fam.get(m - 1) * shifted(fam.get(n - 1), m + 1);
    expect_eq(format!("(m, n) = ({m}, {n})"), &lhs, &rhs)
}

/// `U^(1)_n = U_n`.
pub fn gen_u_at_r1(fam: &GenUFamily, n: i64) -> XsPoly {
    fam.get(n).subst_const(Var::R, &QRational::one())
}

#[cfg(test)]
mod tests {
    use super::super::{ChebFamily, Kind};
    use super::*;

    #[test]
    fn small_values() {
        let fam = GenUFamily::new(10);
        let b = QBinomialTable::new(12);
        assert_eq!(fam.get(1).to_string(), "q*r*x + x");
        assert_eq!(u_coeff(&b, 2, 1).to_string(), "q*s");
        let u = ChebFamily::new(Kind::U, 10);
        assert_eq!(&gen_u_at_r1(&fam, 8), u.get(8));
        for n in 0..=10 {
            u_coeff_recurrence(&b, &fam, n).unwrap();
            for k in 0..=n / 2 {
                r_product_expansion(&b, n, k).unwrap();
            }
        }
        for m in 0..=10 {
            for n in 0..=10 - m {
                addition_formula(&fam, m, n).unwrap();
            }
        }
    }
}
