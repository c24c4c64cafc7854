//! Sparse polynomials in the commuting variables `x`, `s` and `r` with
//! coefficients in the rational functions of `q`.
//!
//! `r` only appears in the generalised second-kind family and its tiling
//! weights; everything else lives in `x` and `s`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{QRational, QValue, Rational};
use crate::error::Result;

/// Formal variables of [`XsPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    S,
    R,
}

/// Exponent vector. The derived order compares the `x`-degree first, then
/// `s`, then `r`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub x: u32,
    pub s: u32,
    pub r: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { x: 0, s: 0, r: 0 };

    pub fn new(x: u32, s: u32, r: u32) -> Self {
        Self { x, s, r }
    }

    pub fn xs(x: u32, s: u32) -> Self {
        Self { x, s, r: 0 }
    }

    pub fn get(&self, v: Var) -> u32 {
        match v {
            Var::X => self.x,
            Var::S => self.s,
            Var::R => self.r,
        }
    }

    fn with(mut self, v: Var, e: u32) -> Self {
        match v {
            Var::X => self.x = e,
            Var::S => self.s = e,
            Var::R => self.r = e,
        }
        self
    }

    fn mul(self, o: Mono) -> Mono {
        Mono::new(self.x + o.x, self.s + o.s, self.r + o.r)
    }

    fn divides(self, o: Mono) -> bool {
        self.x <= o.x && self.s <= o.s && self.r <= o.r
    }

    fn div(self, o: Mono) -> Mono {
        Mono::new(self.x - o.x, self.s - o.s, self.r - o.r)
    }
}

/// A polynomial in `x`, `s`, `r` over `Q(q)`, stored sparsely with no zero
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XsPoly {
    terms: BTreeMap<Mono, QRational>,
}

impl XsPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(QRational::one())
    }

    pub fn constant(c: QRational) -> Self {
        Self::term(c, Mono::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(QRational::from_int(c))
    }

    pub fn term(c: QRational, m: Mono) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(QRational::one(), Mono::ONE.with(v, 1))
    }

    pub fn x() -> Self {
        Self::var(Var::X)
    }

    pub fn s() -> Self {
        Self::var(Var::S)
    }

    pub fn r() -> Self {
        Self::var(Var::R)
    }

    /// `q^k` as a constant polynomial; `k` may be negative.
    pub fn q_pow(k: i64) -> Self {
        Self::constant(QRational::q_pow(k))
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, QRational)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in it {
            out.add_term(m, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &QRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Mono) -> QRational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> QRational {
        self.coeff(Mono::ONE)
    }

    /// The value when the polynomial has no `x`, `s` or `r`.
    pub fn as_constant(&self) -> Option<QRational> {
        match self.terms.len() {
            0 => Some(QRational::zero()),
            1 => self.terms.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.get(v)).max()
    }

    /// Highest term in the monomial order, if any.
    pub fn leading_term(&self) -> Option<(&Mono, &QRational)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> XsPoly {
        XsPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.get(v) == k)
                .map(|(m, c)| (m.with(v, 0), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Mono, c: &QRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &QRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Multiplies by `c * v^e`.
    pub fn mul_term(&self, c: &QRational, v: Var, e: u32) -> Self {
        self.scale(c).mul_mono(Mono::ONE.with(v, e))
    }

    /// Substitutes `v -> c * v`; with `c = q` on `s` this is the operator `eta`.
    pub fn scale_var(&self, v: Var, c: &QRational) -> Self {
        let mut powers: Vec<QRational> = vec![QRational::one()];
        let mut out = BTreeMap::new();
        for (m, coeff) in self.terms.iter() {
            let e = m.get(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * c;
                powers.push(next);
            }
            let val = coeff * &powers[e];
            if !val.is_zero() {
                out.insert(*m, val);
            }
        }
        Self { terms: out }
    }

    /// `eta^k`: the substitution `s -> q^k s`.
    pub fn eta(&self, k: i64) -> Self {
        self.scale_var(Var::S, &QRational::q_pow(k))
    }

    /// Formal substitution of a polynomial for one variable.
    pub fn subst(&self, v: Var, value: &XsPoly) -> Self {
        let mut powers: Vec<XsPoly> = vec![XsPoly::one()];
        let mut out = XsPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.get(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let rest = m.with(v, 0);
            let piece = powers[e].scale(c).mul_mono(rest);
            out = &out + &piece;
        }
        out
    }

    /// Substitutes a constant for one variable.
    pub fn subst_const(&self, v: Var, value: &QRational) -> Self {
        let mut powers: Vec<QRational> = vec![QRational::one()];
        let mut out = XsPoly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.get(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out.add_term(m.with(v, 0), &(c * &powers[e]));
        }
        out
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&QRational) -> Result<QRational>,
    {
        let mut out = XsPoly::zero();
        for (m, c) in self.terms.iter() {
            out.add_term(*m, &f(c)?);
        }
        Ok(out)
    }

    /// Substitutes a value for `q` in every coefficient.
    pub fn subst_q(&self, value: &QValue) -> Result<Self> {
        self.map_coeffs(|c| c.subst_q(value))
    }

    /// Evaluates the coefficients at a rational `q`.
    pub fn at_q(&self, q: &Rational) -> Result<Self> {
        self.subst_q(&QValue::Number(q.clone()))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = XsPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &XsPoly) -> Option<XsPoly> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        let mut rem = self.clone();
        let mut quot = XsPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(*m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = c / &lc;
            rem = &rem - &d.scale(&qc).mul_mono(qm);
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }
}

impl Add for &XsPoly {
    type Output = XsPoly;
    fn add(self, rhs: &XsPoly) -> XsPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in small.terms.iter() {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &XsPoly {
    type Output = XsPoly;
    fn sub(self, rhs: &XsPoly) -> XsPoly {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.add_term(*m, &(-c));
        }
        out
    }
}

impl Neg for &XsPoly {
    type Output = XsPoly;
    fn neg(self) -> XsPoly {
        XsPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &XsPoly {
    type Output = XsPoly;
    fn mul(self, rhs: &XsPoly) -> XsPoly {
        let mut out = XsPoly::zero();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.add_term(ma.mul(*mb), &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for XsPoly {
            type Output = XsPoly;
            fn $m(self, rhs: XsPoly) -> XsPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&XsPoly> for XsPoly {
            type Output = XsPoly;
            fn $m(self, rhs: &XsPoly) -> XsPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<XsPoly> for &XsPoly {
            type Output = XsPoly;
            fn $m(self, rhs: XsPoly) -> XsPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for XsPoly {
    type Output = XsPoly;
    fn neg(self) -> XsPoly {
        -&self
    }
}

impl From<QRational> for XsPoly {
    fn from(c: QRational) -> Self {
        XsPoly::constant(c)
    }
}

impl From<i64> for XsPoly {
    fn from(c: i64) -> Self {
        XsPoly::from_int(c)
    }
}

impl std::iter::Sum for XsPoly {
    fn sum<I: Iterator<Item = XsPoly>>(iter: I) -> Self {
        iter.fold(XsPoly::zero(), |a, b| a + b)
    }
}
