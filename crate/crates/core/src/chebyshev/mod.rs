//! The q-Chebyshev polynomials `T_n(x, s, q)` and `U_n(x, s, q)`.
//!
//! The three-term recurrences
//!
//! ```text
//! T_n = (1 + q^(n-1)) x T_{n-1} + q^(n-1) s T_{n-2},   T_0 = 1, T_1 = x
//! U_n = (1 + q^n) x U_{n-1} + q^(n-1) s U_{n-2},       U_0 = 1, U_{-1} = 0
//! ```
//!
//! are the reference definition. Closed forms, determinants and the tiling
//! model are all checked against the tables built here.

mod closed;
mod det;
mod genu;
mod operator;

pub use closed::{a_square_product, cheb_closed, t_quotient_coeff, binomial_sum_j_range, binomial_sum_quotient, binomial_sum_product, ClosedForm};
pub use det::{cheb_det, classical_det, continuant, tridiagonal, Tridiagonal};
pub use genu::{addition_formula, gen_u_at_r1, gen_u_family, r_product_expansion, u_coeff, u_coeff_recurrence, GenUFamily};
pub use operator::{
    a_power_action, check_a_squared_product, check_commuting_factors, check_transfer_product, operator_product,
    p_n_binomial, pell_classical, pell_identity, q_binomial_x2_expansion, sqrt_pair_classical,
    transfer_matrix_product, APair, Matrix2, TransferMatrix,
};

use std::fmt;

use crate::algebra::{Mono, QRational, Rational, Var, XsPoly};
use crate::error::{expect_eq, Error, Result};
use crate::qcomb::{binom2, q_int, q_int_signed, QBinomialTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    T,
    U,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::T => "T",
            Kind::U => "U",
        })
    }
}

/// Memoised values `P_0 ..= P_{n_max}` of one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebFamily {
    kind: Kind,
    values: Vec<XsPoly>,
    zero: XsPoly,
}

/// `q^k` as an [`XsPoly`] constant.
pub(crate) fn qk(k: i64) -> XsPoly {
    XsPoly::q_pow(k)
}

/// `1 + q^k`.
pub(crate) fn one_plus_qk(k: i64) -> XsPoly {
    XsPoly::one() + qk(k)
}

pub(crate) fn xpow(k: u32) -> XsPoly {
    XsPoly::term(QRational::one(), Mono::xs(k, 0))
}

/// `(-s)^k`.
pub(crate) fn neg_s_pow(k: u32) -> XsPoly {
    XsPoly::term(QRational::from_int(if k.is_multiple_of(2) { 1 } else { -1 }), Mono::xs(0, k))
}


/// `x^2 + c s` for a constant `c`.
pub(crate) fn x2_plus(c: QRational) -> XsPoly {
    xpow(2) + XsPoly::s().scale(&c)
}

/// `p(1, s)`.
pub fn at_x1(p: &XsPoly) -> XsPoly {
    p.subst_const(Var::X, &QRational::one())
}

/// `p` with `x` and `s` exchanged.
pub fn swap_xs(p: &XsPoly) -> XsPoly {
    XsPoly::from_terms(p.terms().map(|(m, c)| (Mono::new(m.s, m.x, m.r), c.clone())))
}

impl ChebFamily {
    /// Builds the table by the recurrence.
    pub fn new(kind: Kind, n_max: usize) -> Self {
        let mut values: Vec<XsPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let v = match (kind, n) {
                (_, 0) => XsPoly::one(),
                (Kind::T, 1) => XsPoly::x(),
                (Kind::U, 1) => XsPoly::x() * one_plus_qk(1),
                _ => recurrence_step(kind, n as i64, &values[n - 1], &values[n - 2]),
            };
            values.push(v);
        }
        Self {
            kind,
            values,
            zero: XsPoly::zero(),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[XsPoly] {
        &self.values
    }

    /// `P_n`; for `U` the index `-1` gives 0. Panics outside the table or
    /// for `T_n` with `n < 0`.
    pub fn get(&self, n: i64) -> &XsPoly {
        if n == -1 && self.kind == Kind::U {
            return &self.zero;
        }
        assert!(n >= 0, "{}_{n} is not defined", self.kind);
        &self.values[n as usize]
    }

    /// Overwrites one entry. Only the verifier's fault injection uses this.
    pub fn replace(&mut self, n: usize, value: XsPoly) {
        self.values[n] = value;
    }

    /// Checks every stored value against the recurrence applied to the two
    /// stored predecessors.
    pub fn check_recurrence(&self, n: usize) -> Result<()> {
        let expected = match (self.kind, n) {
            (_, 0) => XsPoly::one(),
            (Kind::T, 1) => XsPoly::x(),
            (Kind::U, 1) => XsPoly::x() * one_plus_qk(1),
            _ => recurrence_step(self.kind, n as i64, &self.values[n - 1], &self.values[n - 2]),
        };
        expect_eq(format!("{}_{n} recurrence", self.kind), &self.values[n], &expected)
    }

    /// Every monomial of `P_n` is `x^(n-2k) s^k`, and the `x`-degree is `n`.
    pub fn check_shape(&self, n: usize) -> Result<()> {
        let p = &self.values[n];
        let n32 = n as u32;
        if p.degree(Var::X) != Some(n32) {
            return Err(Error::mismatch(format!("{}_{n} has x-degree {:?}", self.kind, p.degree(Var::X)), p.clone()));
        }
        for (m, _) in p.terms() {
            if m.r != 0 || m.x + 2 * m.s != n32 {
                return Err(Error::mismatch(format!("{}_{n} has stray monomial {m}", self.kind), p.clone()));
            }
        }
        Ok(())
    }
}

fn recurrence_step(kind: Kind, n: i64, p1: &XsPoly, p2: &XsPoly) -> XsPoly {
    let lead = match kind {
        Kind::T => one_plus_qk(n - 1),
        Kind::U => one_plus_qk(n),
    };
    &(&lead * &XsPoly::x()) * p1 + (XsPoly::s() * qk(n - 1)) * p2
}

/// `T` and `U` tables plus the Gaussian binomials needed alongside them.
#[derive(Clone, Debug)]
pub struct ChebTables {
    pub t: ChebFamily,
    pub u: ChebFamily,
    pub binom: QBinomialTable,
}

impl ChebTables {
    pub fn new(n_max: usize) -> Self {
        Self {
            t: ChebFamily::new(Kind::T, n_max),
            u: ChebFamily::new(Kind::U, n_max),
            binom: QBinomialTable::new(2 * n_max as u32 + 4),
        }
    }

    pub fn family(&self, kind: Kind) -> &ChebFamily {
        match kind {
            Kind::T => &self.t,
            Kind::U => &self.u,
        }
    }

    pub fn n_max(&self) -> usize {
        self.t.n_max().min(self.u.n_max())
    }
}

/// One-off value of the recurrence.
pub fn cheb_rec(kind: Kind, n: usize) -> XsPoly {
    ChebFamily::new(kind, n).get(n as i64).clone()
}

/// The special-value identities at `x = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialValue {
    /// `T_n(1, -1, q) = 1`
    TAtMinusOne,
    /// `T_n(1, -1/q, q) = q^C(n,2)`
    TAtMinusInvQ,
    /// `T_n(1, -q, q) = q^C(n,2) + (1 - q^n) sum_{k=0}^{n-2} q^C(k+1,2)`
    TAtMinusQ,
    /// `T_n(1, -q^2, q) = [n] - q^(n+1) [n-1]`
    TAtMinusQ2,
    /// `U_n(1, -1/q, q) = q^C(n,2) [n+1]`
    UAtMinusInvQ,
    /// `U_n(1, -1, q) = q^C(n+1,2) sum_{k=0}^n q^-C(k+1,2)`
    UAtMinusOne,
    /// `U_n(1, -q, q) = sum_{k=0}^n q^C(k+1,2)`
    UAtMinusQ,
    /// `U_n(1, -q^2, q) = [n+1]`
    UAtMinusQ2,
    /// `T_n(1, -q, q) - (1 - q^n) sum_{k=1}^n q^C(k,2) = q^C(n+1,2)`
    TAtMinusQShifted,
}

impl SpecialValue {
    pub const ALL: [SpecialValue; 9] = [
        SpecialValue::TAtMinusOne,
        SpecialValue::TAtMinusInvQ,
        SpecialValue::TAtMinusQ,
        SpecialValue::TAtMinusQ2,
        SpecialValue::UAtMinusInvQ,
        SpecialValue::UAtMinusOne,
        SpecialValue::UAtMinusQ,
        SpecialValue::UAtMinusQ2,
        SpecialValue::TAtMinusQShifted,
    ];

    pub fn kind(self) -> Kind {
        use SpecialValue::*;
        match self {
            TAtMinusOne | TAtMinusInvQ | TAtMinusQ | TAtMinusQ2 | TAtMinusQShifted => Kind::T,
            _ => Kind::U,
        }
    }

    /// The substituted value of `s` (with `x = 1`).
    pub fn s_value(self) -> QRational {
        use SpecialValue::*;
        let minus = |k: i64| -QRational::q_pow(k);
        match self {
            TAtMinusOne | UAtMinusOne => minus(0),
            TAtMinusInvQ | UAtMinusInvQ => minus(-1),
            TAtMinusQ | UAtMinusQ | TAtMinusQShifted => minus(1),
            TAtMinusQ2 | UAtMinusQ2 => minus(2),
        }
    }

    /// The stated right-hand side at index `n`.
    pub fn rhs(self, n: i64) -> QRational {
        use SpecialValue::*;
        let qp = QRational::q_pow;
        let sum_q = |range: std::ops::RangeInclusive<i64>, f: &dyn Fn(i64) -> i64| {
            range.fold(QRational::zero(), |acc, k| acc + qp(f(k)))
        };
        match self {
            TAtMinusOne => QRational::one(),
            TAtMinusInvQ => qp(binom2(n)),
            TAtMinusQ => qp(binom2(n)) + (QRational::one() - qp(n)) * sum_q(0..=n - 2, &|k| binom2(k + 1)),
            TAtMinusQ2 => q_int_signed(n) - qp(n + 1) * q_int_signed(n - 1),
            UAtMinusInvQ => qp(binom2(n)) * QRational::from_poly(q_int(n as u32 + 1)),
            UAtMinusOne => qp(binom2(n + 1)) * sum_q(0..=n, &|k| -binom2(k + 1)),
            UAtMinusQ => sum_q(0..=n, &|k| binom2(k + 1)),
            UAtMinusQ2 => q_int(n as u32 + 1).into(),
            TAtMinusQShifted => qp(binom2(n + 1)),
        }
    }

    /// Left-hand side computed from the table, minus any terms the identity
    /// moves there.
    pub fn lhs(self, tables: &ChebTables, n: i64) -> QRational {
        let p = tables.family(self.kind()).get(n);
        let v = at_x1(p).subst_const(Var::S, &self.s_value()).constant_term();
        if self == SpecialValue::TAtMinusQShifted {
            let sum = (1..=n).fold(QRational::zero(), |acc, k| acc + QRational::q_pow(binom2(k)));
            return v - (QRational::one() - QRational::q_pow(n)) * sum;
        }
        v
    }

    pub fn check(self, tables: &ChebTables, n: i64) -> Result<()> {
        let lhs = XsPoly::constant(self.lhs(tables, n));
        let rhs = XsPoly::constant(self.rhs(n));
        expect_eq(format!("special value at n = {n}"), &lhs, &rhs)
    }
}

/// Argument order in the `q -> 1/q` identity for `U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InverseOrder {
    /// `U_n(x, s, 1/q) = U_n(x, qs, q) / q^C(n+1,2)`
    Natural,
    /// The swapped reading `U_n(s, x, 1/q)` on the left.
    Swapped,
}

/// `T_n(x, s, 1/q) = T_n(x, s/q, q) / q^C(n,2)`, or the `U` analogue
/// `U_n(x, s, 1/q) = U_n(x, qs, q) / q^C(n+1,2)` in the chosen argument order.
pub fn inverse_q_check(tables: &ChebTables, kind: Kind, n: i64, order: InverseOrder) -> Result<()> {
    let p = tables.family(kind).get(n);
    let inv = p.subst_q(&crate::algebra::QValue::Inverse)?;
    let lhs = match order {
        InverseOrder::Natural => inv,
        InverseOrder::Swapped => swap_xs(&inv),
    };
    let rhs = match kind {
        Kind::T => p.eta(-1).scale(&QRational::q_pow(-binom2(n))),
        Kind::U => p.eta(1).scale(&QRational::q_pow(-binom2(n + 1))),
    };
    expect_eq(format!("{kind}_{n} at 1/q"), &lhs, &rhs)
}

/// The relations tying `T` and `U` together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mixed {
    /// `T_n = x U_{n-1} + q^(n-1) s U_{n-2}`, `n >= 1`
    TFromU,
    /// `T_n = x U_{n-1}(x, q^2 s) + q s U_{n-2}(x, q^2 s)`, `n >= 1`
    TFromUEta2,
    /// `T_{n+1} = x T_n + q^n (x^2 + s) U_{n-1}`
    TStepFromU,
    /// `U_n = T_n + q^n x U_{n-1}`
    UFromT,
    /// `T_{n+1} = q^n x T_n + (x^2 + qs) U_{n-1}(x, q^2 s)`
    TStepEta2,
    /// `U_n(x, q^2 s) = q^n T_n + x U_{n-1}(x, q^2 s)`
    UEta2FromT,
    /// `T_{n+1} + s T_{n-1} = (1 + q^n)(x^2 + s) U_{n-1}`, `n >= 1`
    TSumFromU,
}

impl Mixed {
    pub const ALL: [Mixed; 7] = [
        Mixed::TFromU,
        Mixed::TFromUEta2,
        Mixed::TStepFromU,
        Mixed::UFromT,
        Mixed::TStepEta2,
        Mixed::UEta2FromT,
        Mixed::TSumFromU,
    ];

    /// Smallest admissible `n`.
    pub fn n_min(self) -> i64 {
        match self {
            Mixed::TFromU | Mixed::TFromUEta2 | Mixed::TSumFromU => 1,
            _ => 0,
        }
    }

    /// Largest table index the relation touches at `n`.
    pub fn reach(self, n: i64) -> i64 {
        match self {
            Mixed::TStepFromU | Mixed::TStepEta2 | Mixed::TSumFromU => n + 1,
            _ => n,
        }
    }

    pub fn sides(self, tables: &ChebTables, n: i64) -> (XsPoly, XsPoly) {
        let (t, u) = (&tables.t, &tables.u);
        let x = XsPoly::x();
        let s = XsPoly::s();
        match self {
            Mixed::TFromU => (
                t.get(n).clone(),
                &x * u.get(n - 1) + (&s * &qk(n - 1)) * u.get(n - 2),
            ),
            Mixed::TFromUEta2 => (
                t.get(n).clone(),
                &x * &u.get(n - 1).eta(2) + (&s * &qk(1)) * u.get(n - 2).eta(2),
            ),
            Mixed::TStepFromU => (
                t.get(n + 1).clone(),
                &x * t.get(n) + (x2_plus(QRational::one()) * qk(n)) * u.get(n - 1),
            ),
            Mixed::UFromT => (t.get(n) + &(&x * &qk(n)) * u.get(n - 1), u.get(n).clone()),
            Mixed::TStepEta2 => (
                t.get(n + 1).clone(),
                (&x * &qk(n)) * t.get(n) + x2_plus(QRational::q_pow(1)) * u.get(n - 1).eta(2),
            ),
            Mixed::UEta2FromT => (
                u.get(n).eta(2),
                qk(n) * t.get(n) + &x * &u.get(n - 1).eta(2),
            ),
            Mixed::TSumFromU => (
                t.get(n + 1) + &(&s * t.get(n - 1)),
                (one_plus_qk(n) * x2_plus(QRational::one())) * u.get(n - 1),
            ),
        }
    }

    pub fn check(self, tables: &ChebTables, n: i64) -> Result<()> {
        let (lhs, rhs) = self.sides(tables, n);
        expect_eq(format!("n = {n}"), &lhs, &rhs)
    }
}

/// The eta pair: `T_{n+1} = q^n x T_n + (x^2 + qs) eta^2 U_{n-1}` and
/// `U_n = T_n + q^n x U_{n-1}`.
pub fn check_eta_pair(tables: &ChebTables, n: i64) -> Result<()> {
    Mixed::TStepEta2.check(tables, n)?;
    Mixed::UFromT.check(tables, n)
}

/// At `q = -1` the recurrences degenerate: `T` runs through
/// `1, x, -s, -xs, s^2, s^2 x, ...` and `U_{2n} = (-s)^n`, `U_{2n+1} = 0`.
///
/// The coefficients of `T_n` and `U_n` are polynomials in `q`, so they are
/// evaluated directly here; the numeric layer refuses `q = -1`.
pub fn q_minus_one_degeneration(tables: &ChebTables, n: usize) -> Result<()> {
    let minus_one = -Rational::from_integer(1.into());
    let eval = |p: &XsPoly| -> XsPoly {
        XsPoly::from_terms(p.terms().map(|(m, c)| {
            let v = c.as_poly().expect("Chebyshev coefficients are polynomials").eval(&minus_one);
            (*m, QRational::from_rational(v))
        }))
    };
    let k = (n / 2) as u32;
    let t_expected = if n.is_multiple_of(2) {
        neg_s_pow(k)
    } else {
        neg_s_pow(k) * XsPoly::x()
    };
    expect_eq(format!("T_{n} at q = -1"), &eval(tables.t.get(n as i64)), &t_expected)?;
    let u_expected = if n.is_multiple_of(2) { neg_s_pow(k) } else { XsPoly::zero() };
    expect_eq(format!("U_{n} at q = -1"), &eval(tables.u.get(n as i64)), &u_expected)
}

/// Rejects the excluded parameter value `q = -1`.
pub fn check_q_value(q: &Rational) -> Result<()> {
    if *q == -Rational::from_integer(1.into()) {
        Err(Error::ExcludedQ)
    } else {
        Ok(())
    }
}

/// The table evaluated at `q = 1`.
pub fn at_q1(p: &XsPoly) -> XsPoly {
    p.at_q(&Rational::from_integer(1.into())).expect("q = 1 is not a pole of a polynomial")
}

/// The classical bivariate recurrences `P_n = 2x P_{n-1} + s P_{n-2}` at `q = 1`.
pub fn check_classical_recurrence(tables: &ChebTables, kind: Kind, n: i64) -> Result<()> {
    let f = tables.family(kind);
    let lhs = at_q1(f.get(n));
    let rhs = match (kind, n) {
        (_, 0) => XsPoly::one(),
        (Kind::T, 1) => XsPoly::x(),
        _ => XsPoly::x() * XsPoly::from_int(2) * at_q1(f.get(n - 1)) + XsPoly::s() * at_q1(f.get(n - 2)),
    };
    expect_eq(format!("classical {kind}_{n}"), &lhs, &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QPoly;

    #[test]
    fn first_terms_render() {
        let t = ChebFamily::new(Kind::T, 3);
        let shown: Vec<String> = t.values().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            shown,
            ["1", "x", "(1+q)*x^2 + q*s", "(1+q+q^2+q^3)*x^3 + (q+q^2+q^3)*s*x"]
        );
        let u = ChebFamily::new(Kind::U, 3);
        assert_eq!(u.get(1).to_string(), "(1+q)*x");
        assert_eq!(u.get(2).to_string(), "(1+q+q^2+q^3)*x^2 + q*s");
        // [4](1+q^3) x^3 + q[4] s x
        let expected = XsPoly::term(
            QRational::from_poly(&q_int(4) * &QPoly::from_coeffs(&[1, 0, 0, 1])),
            Mono::xs(3, 0),
        ) + XsPoly::term(QRational::from_poly(q_int(4).shift(1)), Mono::xs(1, 1));
        assert_eq!(u.get(3), &expected);
    }

    #[test]
    fn special_values_small() {
        let tables = ChebTables::new(20);
        for sv in SpecialValue::ALL {
            for n in 0..=20 {
                sv.check(&tables, n).unwrap_or_else(|e| panic!("{sv:?} at {n}: {e}"));
            }
        }
    }

    #[test]
    fn inverse_q() {
        let tables = ChebTables::new(8);
        for n in 0..=8 {
            inverse_q_check(&tables, Kind::T, n, InverseOrder::Natural).unwrap();
            inverse_q_check(&tables, Kind::U, n, InverseOrder::Natural).unwrap();
        }
        assert!(inverse_q_check(&tables, Kind::U, 1, InverseOrder::Swapped).is_err());
    }

    #[test]
    fn mixed_relations_hold() {
        let tables = ChebTables::new(12);
        for rel in Mixed::ALL {
            for n in rel.n_min()..=10 {
                rel.check(&tables, n).unwrap_or_else(|e| panic!("{rel:?} at {n}: {e}"));
            }
        }
    }

    #[test]
    fn degenerate_at_minus_one() {
        let tables = ChebTables::new(10);
        for n in 0..=10 {
            q_minus_one_degeneration(&tables, n).unwrap();
        }
        assert_eq!(check_q_value(&-Rational::from_integer(1.into())), Err(Error::ExcludedQ));
    }
}
