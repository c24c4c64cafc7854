//! Explicit sums for `T_n` and `U_n`.

use super::{x2_plus, xpow, Kind};
use crate::algebra::{Mono, QPoly, QRational, XsPoly};
use crate::error::{expect_eq, Result};
use crate::qcomb::{binom2, one_plus_q_prod, one_plus_q_prod_signed, q_int, QBinomialTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// `U_n = sum q^(k^2) [n-k, k] (1+q^(k+1))...(1+q^(n-k)) s^k x^(n-2k)`
    UProduct,
    /// `T_n` as the quotient `(1+q)...(1+q^(n-1)) / ((1+q)...(1+q^k)(1+q^(n-k))...(1+q^(n-1)))
    /// [n]/[n-k] [n-k, k]` times `q^(k^2) s^k x^(n-2k)`.
    TQuotient,
    /// `T_n` as the sum over `k <= (n-1)/2` with an even-`n` tail `q^(n^2) s^n`.
    TTailPrinted,
    /// The same sum with the tail `q^((n/2)^2) s^(n/2)`.
    TTail,
    /// `T_n = sum q^C(n-2k,2) [n, 2k] x^(n-2k) prod_{j<k} (x^2 + q^(2j+1) s)`
    TBinomialProduct,
    /// `U_n = sum q^C(n-2k,2) [n+1, 2k+1] x^(n-2k) prod_{j<k} (x^2 + q^(2j+1) s)`
    UBinomialProduct,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::UProduct,
        ClosedForm::TQuotient,
        ClosedForm::TTailPrinted,
        ClosedForm::TTail,
        ClosedForm::TBinomialProduct,
        ClosedForm::UBinomialProduct,
    ];

    pub fn kind(self) -> Kind {
        match self {
            ClosedForm::UProduct | ClosedForm::UBinomialProduct => Kind::U,
            _ => Kind::T,
        }
    }
}

fn xs(c: QRational, x: u32, s: u32) -> XsPoly {
    XsPoly::term(c, Mono::xs(x, s))
}

fn qpow(k: i64) -> QRational {
    QRational::q_pow(k)
}

/// `[n]/[n-k]`, read as 1 when `n = k = 0`.
fn int_ratio(n: u32, k: u32) -> QRational {
    if n == 0 {
        return QRational::one();
    }
    QRational::new(q_int(n), q_int(n - k)).expect("[n-k] is nonzero for k < n")
}

/// `(1+q^lo)...(1+q^hi)` with the empty product for `hi < lo`.
fn opq(lo: i64, hi: i64) -> QRational {
    one_plus_q_prod_signed(lo, hi)
}

/// Coefficient of `s^k x^(n-2k)` in `T_n` by the quotient form.
pub fn t_quotient_coeff(b: &QBinomialTable, n: u32, k: u32) -> QRational {
    let (n, k) = (n as i64, k as i64);
    let top = opq(1, n - 1);
    let bottom = opq(1, k) * opq(n - k, n - 1);
    let frac = top.checked_div(&bottom).expect("nonzero product");
    qpow(k * k) * frac * int_ratio(n as u32, k as u32) * QRational::from_poly(b.get(n - k, k))
}

/// `prod_{j<k} (x^2 + q^(2j+1) s)`.
pub fn a_square_product(k: u32) -> XsPoly {
    (0..k).fold(XsPoly::one(), |acc, j| acc * x2_plus(qpow(2 * j as i64 + 1)))
}

pub fn cheb_closed(form: ClosedForm, b: &QBinomialTable, n: u32) -> XsPoly {
    let mut out = XsPoly::zero();
    match form {
        ClosedForm::UProduct => {
            for k in 0..=n / 2 {
                let c = qpow((k * k) as i64)
                    * QRational::from_poly(b.get((n - k) as i64, k as i64))
                    * opq(k as i64 + 1, (n - k) as i64);
                out = out + xs(c, n - 2 * k, k);
            }
        }
        ClosedForm::TQuotient => {
            for k in 0..=n / 2 {
                out = out + xs(t_quotient_coeff(b, n, k), n - 2 * k, k);
            }
        }
        ClosedForm::TTailPrinted | ClosedForm::TTail => {
            if n >= 1 {
                for k in 0..=(n - 1) / 2 {
                    let c = qpow((k * k) as i64)
                        * opq(k as i64 + 1, (n - k) as i64 - 1)
                        * int_ratio(n, k)
                        * QRational::from_poly(b.get((n - k) as i64, k as i64));
                    out = out + xs(c, n - 2 * k, k);
                }
            }
            if n.is_multiple_of(2) {
                let e = if form == ClosedForm::TTail { n / 2 } else { n };
                out = out + xs(qpow((e * e) as i64), 0, e);
            }
        }
        ClosedForm::TBinomialProduct | ClosedForm::UBinomialProduct => {
            for k in 0..=n / 2 {
                let binom = if form == ClosedForm::TBinomialProduct {
                    b.get(n as i64, 2 * k as i64)
                } else {
                    b.get(n as i64 + 1, 2 * k as i64 + 1)
                };
                let c = qpow(binom2((n - 2 * k) as i64)) * QRational::from_poly(binom);
                out = out + (xpow(n - 2 * k) * a_square_product(k)).scale(&c);
            }
        }
    }
    out
}

/// `[k, j]` in base `q^2`.
fn binom_q2(b: &QBinomialTable, k: u32, j: u32) -> QPoly {
    b.get(k as i64, j as i64).dilate(2)
}

/// Admissible `j` for the two q-binomial sums at a given `n`:
/// the quotient form needs `n >= 1` and `j < n`; the product form takes
/// every `j <= n`.
pub fn binomial_sum_j_range(n: u32, quotient: bool) -> std::ops::Range<u32> {
    if quotient {
        0..n
    } else {
        0..n + 1
    }
}

/// `sum_k q^C(n-2k,2) [n, 2k] [k, j]_{q^2}` against the quotient form.
/// For `j > n/2` both sides are zero.
pub fn binomial_sum_quotient(b: &QBinomialTable, n: u32, j: u32) -> Result<()> {
    let lhs: QPoly = (0..=n / 2).fold(QPoly::zero(), |acc, k| {
        acc + (&b.get(n as i64, 2 * k as i64) * &binom_q2(b, k, j)).shift(binom2((n - 2 * k) as i64) as u32)
    });
    let rhs = if 2 * j > n {
        QRational::zero()
    } else {
        let (n, j) = (n as i64, j as i64);
        let top = opq(1, n - 1);
        let bottom = opq(1, j) * opq(n - j, n - 1);
        top.checked_div(&bottom)? * int_ratio(n as u32, j as u32) * QRational::from_poly(b.get(n - j, j))
    };
    expect_eq(
        format!("n = {n}, j = {j}"),
        &XsPoly::constant(lhs.into()),
        &XsPoly::constant(rhs),
    )
}

/// `sum_k q^C(n-2k,2) [n+1, 2k+1] [k, j]_{q^2} = (1+q^(j+1))...(1+q^(n-j)) [n-j, j]`.
pub fn binomial_sum_product(b: &QBinomialTable, n: u32, j: u32) -> Result<()> {
    let lhs: QPoly = (0..=n / 2).fold(QPoly::zero(), |acc, k| {
        acc + (&b.get(n as i64 + 1, 2 * k as i64 + 1) * &binom_q2(b, k, j)).shift(binom2((n - 2 * k) as i64) as u32)
    });
    let rhs = if 2 * j > n {
        QPoly::zero()
    } else {
        &one_plus_q_prod(j + 1, n - j) * &b.get((n - j) as i64, j as i64)
    };
    expect_eq(
        format!("n = {n}, j = {j}"),
        &XsPoly::constant(lhs.into()),
        &XsPoly::constant(rhs.into()),
    )
}

#[cfg(test)]
mod tests {
    use super::super::{ChebTables, Kind};
    use super::*;

    #[test]
    fn forms_against_recurrence() {
        let tables = ChebTables::new(16);
        for form in ClosedForm::ALL {
            if form == ClosedForm::TTailPrinted {
                continue;
            }
            for n in 0..=16u32 {
                let expected = tables.family(form.kind()).get(n as i64);
                assert_eq!(&cheb_closed(form, &tables.binom, n), expected, "{form:?} at {n}");
            }
        }
    }

    #[test]
    fn printed_tail_fails_first_at_two() {
        let tables = ChebTables::new(4);
        let f = ClosedForm::TTailPrinted;
        assert_eq!(&cheb_closed(f, &tables.binom, 0), tables.t.get(0));
        assert_eq!(&cheb_closed(f, &tables.binom, 1), tables.t.get(1));
        assert_ne!(&cheb_closed(f, &tables.binom, 2), tables.t.get(2));
        assert_eq!(&cheb_closed(f, &tables.binom, 3), tables.t.get(3));
        assert_eq!(f.kind(), Kind::T);
    }

    #[test]
    fn binomial_sums_small() {
        let b = QBinomialTable::new(20);
        for n in 0..=14 {
            for j in binomial_sum_j_range(n, true) {
                binomial_sum_quotient(&b, n, j).unwrap();
            }
            for j in binomial_sum_j_range(n, false) {
                binomial_sum_product(&b, n, j).unwrap();
            }
        }
        // (n, j) = (2, 0): (1+q)(1+q^2)
        let lhs = (0..=1u32).fold(QPoly::zero(), |acc, k| {
            acc + (&b.get(3, 2 * k as i64 + 1) * &binom_q2(&b, k, 0)).shift(binom2(2 - 2 * k as i64) as u32)
        });
        assert_eq!(lhs, QPoly::from_coeffs(&[1, 1, 1, 1]));
    }
}
