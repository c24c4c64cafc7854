//! Univariate polynomials in `q` with exact rational coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A polynomial in `q` stored as a sparse map from exponent to coefficient.
///
/// No stored coefficient is zero, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<u32, Rational>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c * q^k`.
    pub fn monomial(c: Rational, k: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: u32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// Builds a polynomial from integer coefficients in ascending powers of `q`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| (k as u32, Rational::from_integer((*c).into())))
            .collect();
        Self { terms }
    }

    pub(crate) fn from_map(mut terms: BTreeMap<u32, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&k| k == 0)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Terms in ascending order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Divides by `q^k`; every exponent must be at least `k`.
    pub fn unshift(&self, k: u32) -> Self {
        debug_assert!(self.valuation().is_none_or(|v| v >= k));
        Self {
            terms: self.terms.iter().map(|(e, v)| (e - k, v.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^m`.
    pub fn dilate(&self, m: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, v)| (e * m, v.clone())).collect(),
        }
    }

    /// `q^d * p(1/q)` where `d` is the degree; the zero polynomial maps to itself.
    pub fn reversed(&self, d: u32) -> Self {
        debug_assert!(self.degree().is_none_or(|deg| deg <= d));
        Self {
            terms: self.terms.iter().map(|(e, v)| (d - e, v.clone())).collect(),
        }
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut last = self.degree().unwrap_or(0);
        for (e, c) in self.terms.iter().rev() {
            acc *= pow_rat(q, last - e);
            acc += c;
            last = *e;
        }
        acc * pow_rat(q, last)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over the rationals.
    ///
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading_coeff().unwrap().clone();
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            if e < dd {
                break;
            }
            let factor = c / &lc;
            let shift = e - dd;
            for (de, dc) in d.terms.iter() {
                let entry = rem.entry(de + shift).or_insert_with(Rational::zero);
                *entry -= &factor * dc;
                if entry.is_zero() {
                    rem.remove(&(de + shift));
                }
            }
            // the leading term cancels exactly
            rem.remove(&e);
            quot.insert(shift, factor);
        }
        (QPoly::from_map(quot), QPoly::from_map(rem))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &QPoly) -> Option<QPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        if self.degree() < d.degree() || self.valuation() < d.valuation() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Rational content: the positive rational `c` with `self / c` a primitive
    /// integer polynomial, signed so that the primitive part has positive
    /// leading coefficient.
    pub fn content(&self) -> Rational {
        let Some(lc) = self.leading_coeff() else {
            return Rational::one();
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let c = Rational::new(num_gcd, den_lcm);
        if lc.is_negative() {
            -c
        } else {
            c
        }
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn primitive_part(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let c = self.content();
        self.scale(&c.recip())
    }

    /// Greatest common divisor, normalised to a primitive integer polynomial
    /// with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => return QPoly::zero(),
            (true, false) => return b.primitive_part(),
            (false, true) => return a.primitive_part(),
            _ => {}
        }
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        let common = va.min(vb);
        let a = a.unshift(va);
        let b = b.unshift(vb);
        if a.is_constant() || b.is_constant() {
            return QPoly::q_pow(common);
        }
        let g = int_gcd(&to_dense_primitive(&a), &to_dense_primitive(&b));
        from_dense(&g).shift(common)
    }
}

fn pow_rat(q: &Rational, n: u32) -> Rational {
    num_traits::pow(q.clone(), n as usize)
}

/// Dense primitive integer coefficients in ascending order.
fn to_dense_primitive(p: &QPoly) -> Vec<BigInt> {
    let pp = p.primitive_part();
    let d = pp.degree().unwrap() as usize;
    let mut out = vec![BigInt::zero(); d + 1];
    for (e, c) in pp.terms.iter() {
        out[*e as usize] = c.numer().clone();
    }
    out
}

fn from_dense(v: &[BigInt]) -> QPoly {
    let terms = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as u32, Rational::from_integer(c.clone())))
        .collect();
    QPoly { terms }
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn make_primitive(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in v.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Primitive polynomial remainder sequence over the integers.
fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let lb = b.last().unwrap().clone();
        let db = b.len() - 1;
        let mut r = a;
        trim(&mut r);
        while r.len() > db {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - db;
            for c in r.iter_mut() {
                *c *= &lb;
            }
            for (i, bc) in b.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            trim(&mut r);
            make_primitive(&mut r);
        }
        make_primitive(&mut r);
        a = b;
        b = r;
    }
    make_primitive(&mut a);
    a
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (e, c) in small.terms.iter() {
            let entry = terms.entry(*e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        QPoly { terms }
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms.iter() {
            let entry = terms.entry(*e).or_insert_with(Rational::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        QPoly { terms }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if self.terms.len() == 1 || rhs.terms.len() == 1 {
            let (single, other) = if self.terms.len() == 1 {
                (self, rhs)
            } else {
                (rhs, self)
            };
            let (e, c) = single.terms.iter().next().unwrap();
            return QPoly {
                terms: other
                    .terms
                    .iter()
                    .map(|(oe, oc)| (oe + e, oc * c))
                    .collect(),
            };
        }
        let lo = self.valuation().unwrap() + rhs.valuation().unwrap();
        let hi = self.degree().unwrap() + rhs.degree().unwrap();
        let width = (hi - lo + 1) as usize;
        if self.is_integral() && rhs.is_integral() {
            let mut acc = vec![BigInt::zero(); width];
            for (ea, ca) in self.terms.iter() {
                for (eb, cb) in rhs.terms.iter() {
                    acc[(ea + eb - lo) as usize] += ca.numer() * cb.numer();
                }
            }
            let terms = acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u32 + lo, Rational::from_integer(c)))
                .collect();
            return QPoly { terms };
        }
        let mut acc = vec![Rational::zero(); width];
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                acc[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        let terms = acc
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32 + lo, c))
            .collect();
        QPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::from_int(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    #[test]
    fn ring_basics() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, QPoly::zero());
        assert!(QPoly::one().is_one());
    }

    #[test]
    fn division_with_remainder() {
        let a = p(&[1, 0, 0, 1]);
        let (q, r) = a.div_rem(&p(&[1, 1]));
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_zero());
        let (_, r) = p(&[2, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(r, p(&[3]));
        assert_eq!(p(&[2, 0, 1]).exact_div(&p(&[1, 1])), None);
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1+q)(1+q^3) and (1+q)^2 (1-q)
        let a = &p(&[1, 1]) * &p(&[1, 0, 0, 1]);
        let b = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, -1]);
        // 1+q^3 = (1+q)(1-q+q^2), so the gcd is (1+q)^2
        assert_eq!(QPoly::gcd(&a, &b), p(&[1, 2, 1]));
        assert_eq!(QPoly::gcd(&p(&[0, 0, 2]), &p(&[0, 3, 3])), p(&[0, 1]));
        assert_eq!(QPoly::gcd(&p(&[1, 1]), &p(&[1, -1])), QPoly::one());
    }

    #[test]
    fn gcd_normalises_rational_scaling() {
        let a = p(&[2, 4]).scale(&Rational::new(1.into(), 3.into()));
        assert_eq!(QPoly::gcd(&a, &p(&[0, 0])), p(&[1, 2]));
        assert_eq!(a.primitive_part(), p(&[1, 2]));
    }

    #[test]
    fn evaluation_and_reversal() {
        let a = p(&[1, 2, 0, 3]);
        assert_eq!(a.eval(&Rational::from_integer(2.into())), Rational::from_integer(29.into()));
        assert_eq!(a.reversed(3), p(&[3, 0, 2, 1]));
        assert_eq!(p(&[0, 1]).dilate(3), QPoly::q_pow(3));
    }
}
