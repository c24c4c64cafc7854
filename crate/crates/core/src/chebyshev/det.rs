//! Tridiagonal determinants.

use super::{one_plus_qk, qk, Kind};
use crate::algebra::XsPoly;

/// The three diagonals of an `n x n` tridiagonal matrix: `diag` has `n`
/// entries, `sup` and `sub` have `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tridiagonal {
    pub diag: Vec<XsPoly>,
    pub sup: Vec<XsPoly>,
    pub sub: Vec<XsPoly>,
}

/// The matrix whose determinant is `T_n` or `U_n`: superdiagonal
/// `qs, q^2 s, ...`, subdiagonal `-1`, diagonal `x, (1+q)x, (1+q^2)x, ...`
/// for `T` and `(1+q)x, (1+q^2)x, ...` for `U`.
pub fn tridiagonal(kind: Kind, n: usize) -> Tridiagonal {
    let diag = (1..=n as i64)
        .map(|i| match (kind, i) {
            (Kind::T, 1) => XsPoly::x(),
            (Kind::T, _) => one_plus_qk(i - 1) * XsPoly::x(),
            (Kind::U, _) => one_plus_qk(i) * XsPoly::x(),
        })
        .collect();
    let sup = (1..n as i64).map(|i| qk(i) * XsPoly::s()).collect();
    let sub = vec![XsPoly::from_int(-1); n.saturating_sub(1)];
    Tridiagonal { diag, sup, sub }
}

/// Determinant by expansion along the last column:
/// `D_k = d_k D_{k-1} - sup_{k-1} sub_{k-1} D_{k-2}`.
pub fn continuant(m: &Tridiagonal) -> XsPoly {
    let mut prev = XsPoly::one();
    let mut cur = XsPoly::one();
    for (k, d) in m.diag.iter().enumerate() {
        let next = if k == 0 {
            d.clone()
        } else {
            d * &cur - &(&m.sup[k - 1] * &m.sub[k - 1]) * &prev
        };
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn cheb_det(kind: Kind, n: usize) -> XsPoly {
    continuant(&tridiagonal(kind, n))
}

/// The `q = 1` matrices: diagonal `2x` (first entry `x` for `T`),
/// superdiagonal `s`, subdiagonal `-1`.
pub fn classical_det(kind: Kind, n: usize) -> XsPoly {
    let two_x = XsPoly::from_int(2) * XsPoly::x();
    let diag = (0..n)
        .map(|i| if i == 0 && kind == Kind::T { XsPoly::x() } else { two_x.clone() })
        .collect();
    let m = Tridiagonal {
        diag,
        sup: vec![XsPoly::s(); n.saturating_sub(1)],
        sub: vec![XsPoly::from_int(-1); n.saturating_sub(1)],
    };
    continuant(&m)
}

#[cfg(test)]
mod tests {
    use super::super::{at_q1, ChebTables};
    use super::*;

    #[test]
    fn determinants_match_recurrence() {
        let tables = ChebTables::new(12);
        assert!(cheb_det(Kind::T, 0).is_one());
        assert_eq!(cheb_det(Kind::T, 2).to_string(), "(1+q)*x^2 + q*s");
        for n in 0..=12 {
            for kind in [Kind::T, Kind::U] {
                assert_eq!(&cheb_det(kind, n), tables.family(kind).get(n as i64));
                assert_eq!(classical_det(kind, n), at_q1(tables.family(kind).get(n as i64)));
            }
        }
    }
}
