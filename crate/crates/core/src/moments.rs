//! The functionals `L` and `M` with `L(T_n) = [n = 0]` and `M(U_n) = [n = 0]`.
//!
//! Everything stays polynomial in `s`: a functional maps `x^m` to its moment
//! and leaves `s` (and `r`) alone.

use std::collections::BTreeMap;

use crate::algebra::{Mono, QPoly, QRational, Rational, Var, XsPoly};
use crate::chebyshev::{ChebTables, Kind};
use crate::error::{expect_eq, Error, Result};
use crate::qcomb::{binom2, one_plus_q_prod, q_int, q_pochhammer_at};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functional {
    L,
    M,
}

impl Functional {
    /// The family orthogonal for this functional.
    pub fn family(self) -> Kind {
        match self {
            Functional::L => Kind::T,
            Functional::M => Kind::U,
        }
    }
}

impl std::fmt::Display for Functional {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Functional::L => "L",
            Functional::M => "M",
        })
    }
}

fn opq(k: u32) -> QRational {
    one_plus_q_prod(1, k).into()
}

/// `(-qs)^k`.
fn neg_qs_pow(k: u32) -> XsPoly {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    XsPoly::term(QRational::from_int(sign) * QRational::q_pow(k as i64), Mono::xs(0, k))
}

/// `(-s)^k`.
fn neg_s_pow(k: u32) -> XsPoly {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    XsPoly::term(QRational::from_int(sign), Mono::xs(0, k))
}

/// `L(x^2n) = [2n, n] (-qs)^n / prod (1+q^j)^2` and
/// `M(x^2n) = [2n, n] / [n+1] (1+q)/(1+q^(n+1)) (-qs)^n / prod (1+q^j)^2`;
/// odd moments vanish.
pub fn moment(f: Functional, n: usize) -> XsPoly {
    if n % 2 == 1 {
        return XsPoly::zero();
    }
    let h = (n / 2) as u32;
    let b = crate::qcomb::q_binomial(2 * h, h);
    let p = opq(h);
    let mut c = QRational::from_poly(b).checked_div(&(&p * &p)).expect("nonzero");
    if f == Functional::M {
        let extra = QRational::new(QPoly::from_coeffs(&[1, 1]), &q_int(h + 1) * &(QPoly::one() + QPoly::q_pow(h + 1)))
            .expect("nonzero");
        c = c * extra;
    }
    neg_qs_pow(h).scale(&c)
}

/// The same moments through the Pochhammer forms
/// `L(x^2n) = (q;q^2)_n/(q^2;q^2)_n (-qs)^n` and
/// `M(x^2n) = (q;q^2)_n/(q^4;q^2)_n (-qs)^n`.
pub fn moment_pochhammer(f: Functional, n: usize) -> XsPoly {
    moment_pochhammer_with(f, n, 1)
}

/// The `M` form as printed, with `(q^2;q^2)_n` in the numerator.
pub fn moment_m_printed(n: usize) -> XsPoly {
    moment_pochhammer_with(Functional::M, n, 2)
}

fn moment_pochhammer_with(f: Functional, n: usize, num_base: i64) -> XsPoly {
    if n % 2 == 1 {
        return XsPoly::zero();
    }
    let h = (n / 2) as u32;
    let num = q_pochhammer_at(1, num_base, 2, h);
    let den = q_pochhammer_at(1, if f == Functional::L { 2 } else { 4 }, 2, h);
    neg_qs_pow(h).scale(&num.checked_div(&den).expect("nonzero"))
}

/// Moments as canonical strings, as a JSON array.
pub fn moments_json(f: Functional, n_max: usize) -> String {
    let v: Vec<String> = (0..=n_max).map(|n| moment(f, n).to_string()).collect();
    serde_json::to_string(&v).expect("strings serialise")
}

/// Replaces each `x^m` by the `m`-th moment.
pub fn apply_functional(f: Functional, p: &XsPoly) -> XsPoly {
    let mut cache: BTreeMap<u32, XsPoly> = BTreeMap::new();
    let mut out = XsPoly::zero();
    for (m, c) in p.terms() {
        let mom = cache.entry(m.x).or_insert_with(|| moment(f, m.x as usize));
        if mom.is_zero() {
            continue;
        }
        out = out + mom.mul_mono(Mono::new(0, m.s, m.r)).scale(c);
    }
    out
}

/// Coefficients `c_k` with `x^n = sum_k c_k P_{n-2k}`, from the explicit
/// inversion formulas; the reconstruction is checked before returning.
pub fn expand_monomial(tables: &ChebTables, kind: Kind, n: usize) -> Result<Vec<(usize, XsPoly)>> {
    let b = &tables.binom;
    let n32 = n as u32;
    let mut out = Vec::new();
    for k in 0..=n32 / 2 {
        let (ni, ki) = (n as i64, k as i64);
        let c = match kind {
            Kind::T => {
                let lead = if 2 * k != n32 {
                    QRational::one() + QRational::q_pow(ni - 2 * ki)
                } else {
                    QRational::one()
                };
                let den = opq(k) * opq(n32 - k);
                neg_qs_pow(k).scale(&(QRational::from_poly(b.get(ni, ki)) * lead).checked_div(&den)?)
            }
            Kind::U => {
                let diff = b.get(ni, ki) - b.get(ni, ki - 1);
                let lead = QRational::one() + QRational::q_pow(ni - 2 * ki + 1);
                let den = opq(k) * opq(n32 - k + 1);
                neg_s_pow(k).scale(&(QRational::from_poly(diff) * lead).checked_div(&den)?)
            }
        };
        out.push((n - 2 * k as usize, c));
    }
    let sum = out
        .iter()
        .fold(XsPoly::zero(), |acc, (i, c)| acc + c * tables.family(kind).get(*i as i64));
    expect_eq(format!("x^{n} in the {kind} basis"), &sum, &XsPoly::term(QRational::one(), Mono::xs(n32, 0)))?;
    Ok(out)
}

/// `L(T_n^2)` or `M(U_n^2)` as stated.
pub fn norm(f: Functional, n: usize) -> XsPoly {
    let base = neg_s_pow(n as u32).scale(&QRational::q_pow(binom2(n as i64 + 1)));
    match f {
        Functional::L if n == 0 => XsPoly::one(),
        Functional::L => base.scale(&(QRational::one() + QRational::q_pow(n as i64)).recip().expect("nonzero")),
        Functional::M => base.scale(
            &QRational::new(QPoly::from_coeffs(&[1, 1]), QPoly::one() + QPoly::q_pow(n as u32 + 1)).expect("nonzero"),
        ),
    }
}

/// `f(P_m P_n) = [m = n] norm(n)`.
pub fn check_orthogonality(tables: &ChebTables, f: Functional, m: usize, n: usize) -> Result<()> {
    let fam = tables.family(f.family());
    let v = apply_functional(f, &(fam.get(m as i64) * fam.get(n as i64)));
    let want = if m == n { norm(f, n) } else { XsPoly::zero() };
    expect_eq(format!("{f}({}_{m} {}_{n})", f.family(), f.family()), &v, &want)
}

/// `L(P_n) = [n = 0]` for the family of the functional.
pub fn check_defining(tables: &ChebTables, f: Functional, n: usize) -> Result<()> {
    let v = apply_functional(f, tables.family(f.family()).get(n as i64));
    let want = if n == 0 { XsPoly::one() } else { XsPoly::zero() };
    expect_eq(format!("{f}({}_{n})", f.family()), &v, &want)
}

/// `L(x^n T_n) = (-s)^n q^C(n+1,2) / prod_{j<=n} (1+q^j)` and its one-step
/// form `L(x^n T_n) = -q^n s/(1+q^n) L(x^(n-1) T_{n-1})`.
pub fn check_xn_tn(tables: &ChebTables, n: usize) -> Result<()> {
    let val = |k: usize| apply_functional(Functional::L, &(tables.t.get(k as i64).mul_mono(Mono::xs(k as u32, 0))));
    let v = val(n);
    let closed = neg_s_pow(n as u32).scale(&(QRational::q_pow(binom2(n as i64 + 1)).checked_div(&opq(n as u32))?));
    expect_eq(format!("L(x^{n} T_{n})"), &v, &closed)?;
    if n >= 1 {
        let c = QRational::q_pow(n as i64)
            .checked_div(&(QRational::one() + QRational::q_pow(n as i64)))?;
        let step = -(val(n - 1) * XsPoly::s()).scale(&c);
        expect_eq(format!("L(x^{n} T_{n}) step"), &v, &step)?;
    }
    Ok(())
}

/// `(1+q) L((s + x^2) p) = s M(p)`, the bridge with `s` cleared.
pub fn l_m_bridge(p: &XsPoly) -> Result<()> {
    let lhs = apply_functional(Functional::L, &((XsPoly::s() + XsPoly::term(QRational::one(), Mono::xs(2, 0))) * p))
        .scale(&QRational::from_poly(QPoly::from_coeffs(&[1, 1])));
    let rhs = apply_functional(Functional::M, p) * XsPoly::s();
    expect_eq("L-M bridge", &lhs, &rhs)
}

/// `(1+q) L((s + x^2) U_n) = s [n = 0]`.
pub fn check_bridge_on_u(tables: &ChebTables, n: usize) -> Result<()> {
    let u = tables.u.get(n as i64);
    l_m_bridge(u)?;
    let lhs = apply_functional(Functional::L, &((XsPoly::s() + XsPoly::term(QRational::one(), Mono::xs(2, 0))) * u))
        .scale(&QRational::from_poly(QPoly::from_coeffs(&[1, 1])));
    let want = if n == 0 { XsPoly::s() } else { XsPoly::zero() };
    expect_eq(format!("(1+q) L((s+x^2) U_{n})"), &lhs, &want)
}

/// Monic recurrence data `P_n = (x - s(n-1)) P_{n-1} + t(n-2) P_{n-2}`,
/// with the sign of `t` as in the `q`-recurrences (plus).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceParams {
    pub sn: Vec<QRational>,
    pub tn: Vec<XsPoly>,
}

/// The stated values: `t(0) = qs/(1+q)`, `t(n) = q^(n+1) s/((1+q^n)(1+q^(n+1)))`
/// for monic `T`, and `t(n) = q^(n+1) s/((1+q^(n+1))(1+q^(n+2)))` for monic `U`.
pub fn stated_t(kind: Kind, n: usize) -> XsPoly {
    let ni = n as i64;
    let opk = |k: i64| QRational::one() + QRational::q_pow(k);
    let den = match (kind, n) {
        (Kind::T, 0) => opk(1),
        (Kind::T, _) => opk(ni) * opk(ni + 1),
        (Kind::U, _) => opk(ni + 1) * opk(ni + 2),
    };
    XsPoly::s().scale(&QRational::q_pow(ni + 1).checked_div(&den).expect("nonzero"))
}

pub fn monic(tables: &ChebTables, kind: Kind, n: usize) -> XsPoly {
    let p = tables.family(kind).get(n as i64);
    let (_, lc) = p.leading_term().expect("nonzero");
    p.scale(&lc.recip().expect("nonzero"))
}

/// Fits `s(n)` and `t(n)` from consecutive monic polynomials and compares
/// with [`stated_t`] and `s(n) = 0`.
pub fn monic_params(tables: &ChebTables, kind: Kind, n_max: usize) -> Result<RecurrenceParams> {
    let mut params = RecurrenceParams { sn: Vec::new(), tn: Vec::new() };
    for n in 1..=n_max {
        let p = monic(tables, kind, n);
        let p1 = monic(tables, kind, n - 1);
        let mut rest = &p - &p1.mul_mono(Mono::xs(1, 0));
        let s_fit = -rest.coeff(Mono::xs(n as u32 - 1, 0));
        rest = rest + p1.scale(&s_fit);
        if !s_fit.is_zero() {
            return Err(Error::mismatch(format!("s({}) of monic {kind}", n - 1), XsPoly::constant(s_fit)));
        }
        params.sn.push(s_fit);
        if n >= 2 {
            let p2 = monic(tables, kind, n - 2);
            let t = rest.coeff_of(Var::X, n as u32 - 2);
            expect_eq(format!("monic {kind}_{n} residual"), &rest, &(&t * &p2))?;
            expect_eq(format!("t({}) of monic {kind}", n - 2), &t, &stated_t(kind, n - 2))?;
            params.tn.push(t);
        } else if !rest.is_zero() {
            return Err(Error::mismatch(format!("monic {kind}_1 residual"), rest));
        }
    }
    Ok(params)
}

/// The moment triangle `a(n, j) = a(n-1, j-1) + s(j) a(n-1, j) + t'(j) a(n-1, j+1)`
/// with `s(j) = 0`. With `bridge` the classical-convention `t'(j) = -t(j)` is
/// used; without it the stated `t(j)` is plugged in as is.
#[derive(Clone, Debug)]
pub struct MomentTriangle {
    pub a: Vec<Vec<XsPoly>>,
}

pub fn favard_triangle(kind: Kind, n_max: usize, bridge: bool) -> MomentTriangle {
    let t: Vec<XsPoly> = (0..=n_max)
        .map(|j| if bridge { -stated_t(kind, j) } else { stated_t(kind, j) })
        .collect();
    let mut a: Vec<Vec<XsPoly>> = vec![vec![XsPoly::one()]];
    for n in 1..=n_max {
        let prev = &a[n - 1];
        let get = |j: usize| prev.get(j).cloned().unwrap_or_else(XsPoly::zero);
        let row = (0..=n)
            .map(|j| {
                let mut v = get(j + 1) * &t[j];
                if j >= 1 {
                    v = v + get(j - 1);
                }
                v
            })
            .collect();
        a.push(row);
    }
    MomentTriangle { a }
}

/// `a(n, 0)` against the closed-form moment and the `P_0` coefficient of
/// the expansion of `x^n`; also `sum_k a(n,k) P_k = x^n` for the monic
/// family.
pub fn check_favard(tables: &ChebTables, tri: &MomentTriangle, kind: Kind, n: usize) -> Result<()> {
    let f = if kind == Kind::T { Functional::L } else { Functional::M };
    let a0 = &tri.a[n][0];
    expect_eq(format!("a({n},0) against {f}(x^{n})"), a0, &moment(f, n))?;
    let expansion = expand_monomial(tables, kind, n)?;
    let p0 = expansion
        .iter()
        .find(|(i, _)| *i == 0)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(XsPoly::zero);
    expect_eq(format!("P_0 coefficient of x^{n}"), a0, &p0)?;
    let sum = (0..=n).fold(XsPoly::zero(), |acc, k| acc + &tri.a[n][k] * &monic(tables, kind, k));
    expect_eq(format!("sum_k a({n},k) P_k"), &sum, &XsPoly::term(QRational::one(), Mono::xs(n as u32, 0)))
}

/// Bareiss elimination without pivoting; returns the reduced matrix, whose
/// diagonal holds the leading principal minors. Errors on a zero pivot
/// among the first `pivots` columns.
fn bareiss(mut m: Vec<Vec<XsPoly>>, pivots: usize) -> Result<Vec<Vec<XsPoly>>> {
    let size = m.len();
    let mut prev = XsPoly::one();
    for k in 0..pivots.min(size - 1) {
        if m[k][k].is_zero() {
            return Err(Error::SingularHankel(k + 1));
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::mismatch("inexact Bareiss division", XsPoly::zero()))?;
            }
            m[i][k] = XsPoly::zero();
        }
        prev = m[k][k].clone();
    }
    Ok(m)
}

/// Monic `P_n` from the bordered Hankel determinant of the moments.
pub fn hankel_reconstruct(f: Functional, n: usize) -> Result<XsPoly> {
    let moms: Vec<XsPoly> = (0..2 * n).map(|k| moment(f, k)).collect();
    let mut m = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row: Vec<XsPoly> = (0..n).map(|j| moms[i + j].clone()).collect();
        row.push(XsPoly::term(QRational::one(), Mono::xs(i as u32, 0)));
        m.push(row);
    }
    let reduced = bareiss(m, n)?;
    if n == 0 {
        return Ok(XsPoly::one());
    }
    let hankel = &reduced[n - 1][n - 1];
    if hankel.is_zero() {
        return Err(Error::SingularHankel(n));
    }
    reduced[n][n]
        .exact_div(hankel)
        .ok_or_else(|| Error::mismatch("bordered determinant not divisible by the Hankel minor", reduced[n][n].clone()))
}

pub fn check_hankel(tables: &ChebTables, f: Functional, n: usize) -> Result<()> {
    let p = hankel_reconstruct(f, n)?;
    expect_eq(format!("Hankel {}_{n}", f.family()), &p, &monic(tables, f.family(), n))
}

/// At `q = 1`, `s = -1`: `L(x^2n) = C(2n,n)/4^n` and `M(x^2n) = Catalan_n/4^n`.
pub fn classical_moment(f: Functional, n: usize) -> Result<Rational> {
    let one = Rational::from_integer(1.into());
    let v = moment(f, n).at_q(&one)?.subst_const(Var::S, &QRational::from_int(-1));
    Ok(v.constant_term().as_constant().expect("numeric"))
}

pub fn expected_classical_moment(f: Functional, n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::from_integer(0.into());
    }
    let h = n / 2;
    let mut c = num_bigint::BigInt::from(1);
    for i in 0..h {
        c = c * (2 * h - i) / (i + 1);
    }
    let mut r = Rational::new(c, num_bigint::BigInt::from(4).pow(h as u32));
    if f == Functional::M {
        r /= Rational::from_integer((h as i64 + 1).into());
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moments_small() {
        assert!(moment(Functional::L, 0).is_one());
        assert_eq!(moment(Functional::L, 2).to_string(), "-q*s/(1+q)");
        assert!(moment(Functional::M, 3).is_zero());
        for n in 0..=16 {
            assert_eq!(moment(Functional::L, n), moment_pochhammer(Functional::L, n));
            assert_eq!(moment(Functional::M, n), moment_pochhammer(Functional::M, n));
            for f in [Functional::L, Functional::M] {
                assert_eq!(classical_moment(f, n).unwrap(), expected_classical_moment(f, n));
            }
        }
        assert_ne!(moment(Functional::M, 2), moment_m_printed(2));
        assert_eq!(moments_json(Functional::L, 2), r#"["1","0","-q*s/(1+q)"]"#);
    }

    #[test]
    fn expansions_and_orthogonality() {
        let tables = ChebTables::new(12);
        assert_eq!(expand_monomial(&tables, Kind::T, 0).unwrap(), vec![(0, XsPoly::one())]);
        for n in 0..=12 {
            expand_monomial(&tables, Kind::T, n).unwrap();
            expand_monomial(&tables, Kind::U, n).unwrap();
        }
        for f in [Functional::L, Functional::M] {
            for m in 0..=8 {
                check_defining(&tables, f, m).unwrap();
                for n in m..=8 {
                    check_orthogonality(&tables, f, m, n).unwrap();
                }
            }
        }
        assert_eq!(norm(Functional::L, 1).to_string(), "-q*s/(1+q)");
        for n in 0..=8 {
            check_xn_tn(&tables, n).unwrap();
            check_bridge_on_u(&tables, n).unwrap();
        }
        l_m_bridge(&XsPoly::x()).unwrap();
    }

    #[test]
    fn monic_data_and_triangle() {
        let tables = ChebTables::new(14);
        let pt = monic_params(&tables, Kind::T, 12).unwrap();
        assert_eq!(pt.tn[0].to_string(), "q*s/(1+q)");
        let pu = monic_params(&tables, Kind::U, 12).unwrap();
        assert_eq!(pu.tn[1], stated_t(Kind::U, 1));
        for kind in [Kind::T, Kind::U] {
            let tri = favard_triangle(kind, 14, true);
            for n in 0..=14 {
                check_favard(&tables, &tri, kind, n).unwrap();
            }
            let raw = favard_triangle(kind, 2, false);
            assert!(check_favard(&tables, &raw, kind, 2).is_err());
        }
    }

    #[test]
    fn hankel() {
        let tables = ChebTables::new(8);
        assert_eq!(hankel_reconstruct(Functional::L, 1).unwrap(), XsPoly::x());
        for n in 1..=8 {
            check_hankel(&tables, Functional::L, n).unwrap();
            check_hankel(&tables, Functional::M, n).unwrap();
        }
    }
}
