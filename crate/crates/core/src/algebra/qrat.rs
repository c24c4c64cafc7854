//! Reduced rational functions in `q`.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{QPoly, Rational};
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials in `q`, kept in canonical form:
/// the two parts are coprime and `den` is a primitive integer polynomial with
/// positive leading coefficient. Equality of values is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QPoly,
    den: QPoly,
}

/// The value substituted for `q` in [`QRational::subst_q`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QValue {
    Number(Rational),
    /// `q -> 1/q`
    Inverse,
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QRational {
    /// Builds the canonical representative of `num / den`.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.constant_term();
            return Self::from_poly(num.scale(&c.recip()));
        }
        let (num, den) = if let Some(quot) = num.exact_div(&den) {
            (quot, QPoly::one())
        } else {
            let g = QPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides numerator"),
                    den.exact_div(&g).expect("gcd divides denominator"),
                )
            }
        };
        let c = den.content();
        Self {
            num: num.scale(&c.recip()),
            den: den.scale(&c.recip()),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(p: QPoly) -> Self {
        Self {
            num: p,
            den: QPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::from_int(c))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(QPoly::q_pow(k as u32))
        } else {
            Self {
                num: QPoly::one(),
                den: QPoly::q_pow((-k) as u32),
            }
        }
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QPoly> {
        self.is_poly().then_some(&self.num)
    }

    /// True for a constant (q-free) value.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        Self {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    /// Substitutes a value for `q`.
    ///
    /// A number evaluates exactly; `1/q` is cleared of negative powers and
    /// returned in canonical form.
    pub fn subst_q(&self, value: &QValue) -> Result<Self> {
        match value {
            QValue::Number(v) => self.eval(v).map(Self::from_rational),
            QValue::Inverse => {
                let dn = self.num.degree().unwrap_or(0);
                let dd = self.den.degree().unwrap_or(0);
                let num = self.num.reversed(dn);
                let den = self.den.reversed(dd);
                // p(1/q) = rev(p) / q^deg(p)
                let (num, den) = if dn >= dd {
                    (num, den.shift(dn - dd))
                } else {
                    (num.shift(dd - dn), den)
                };
                Self::new(num, den)
            }
        }
    }

    /// Exact evaluation at a rational `q`.
    pub fn eval(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(Error::Pole(q.to_string()));
        }
        Ok(self.num.eval(q) / d)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return QRational::from_poly(&self.num + &rhs.num);
            }
            return QRational::normalize(&self.num + &rhs.num, self.den.clone());
        }
        // (a/b + c/d) over the lcm of b and d
        let g = QPoly::gcd(&self.den, &rhs.den);
        let b_red = self.den.exact_div(&g).unwrap();
        let d_red = rhs.den.exact_div(&g).unwrap();
        let num = &(&self.num * &d_red) + &(&rhs.num * &b_red);
        let den = &self.den * &d_red;
        QRational::normalize(num, den)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying so the product is already reduced
        // up to constants
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        let num = &a * &c;
        let den = &b * &d;
        let k = den.content();
        QRational {
            num: num.scale(&k.recip()),
            den: den.scale(&k.recip()),
        }
    }
}

fn cancel(num: &QPoly, den: &QPoly) -> (QPoly, QPoly) {
    if den.is_one() {
        return (num.clone(), den.clone());
    }
    if let Some(q) = num.exact_div(den) {
        return (q, QPoly::one());
    }
    let g = QPoly::gcd(num, den);
    if g.is_one() {
        (num.clone(), den.clone())
    } else {
        (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
    }
}

impl Div for &QRational {
    type Output = QRational;
    /// Panics on division by zero; use [`QRational::checked_div`] to handle it.
    fn div(self, rhs: &QRational) -> QRational {
        self.checked_div(rhs).expect("division by zero polynomial")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: &QRational) -> QRational {
                (&self).$m(rhs)
            }
        }
        impl $tr<QRational> for &QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

impl From<QPoly> for QRational {
    fn from(p: QPoly) -> Self {
        QRational::from_poly(p)
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        QRational::from_int(c)
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        QRational::is_zero(self)
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c)
    }

    fn r(num: &[i64], den: &[i64]) -> QRational {
        QRational::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn normalize_examples() {
        // (q^2 - 1) / (q - 1) = q + 1
        assert_eq!(r(&[-1, 0, 1], &[-1, 1]), QRational::from_poly(p(&[1, 1])));
        assert!(r(&[], &[1, 1]).is_zero());
        // q(1+q)(1+q^3) / (1+q^3)^2 = q(1+q)/(1+q^3), whose reduced form is
        // q/(1-q+q^2) since 1+q^3 = (1+q)(1-q+q^2)
        let num = &(&p(&[0, 1]) * &p(&[1, 1])) * &p(&[1, 0, 0, 1]);
        let den = &p(&[1, 0, 0, 1]) * &p(&[1, 0, 0, 1]);
        let g4 = QRational::new(num, den).unwrap();
        assert_eq!(g4, r(&[0, 1, 1], &[1, 0, 0, 1]));
        assert_eq!(g4.num(), &p(&[0, 1]));
        assert_eq!(g4.den(), &p(&[1, -1, 1]));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(QRational::new(p(&[1]), QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn sign_and_scale_normalisation() {
        let a = r(&[1], &[-2, -2]);
        assert_eq!(a.den(), &p(&[1, 1]));
        assert_eq!(a.num().coeff(0), Rational::new((-1).into(), 2.into()));
        assert_eq!(a, r(&[-3], &[6, 6]));
    }

    #[test]
    fn substitutions() {
        let one = QValue::Number(Rational::one());
        assert_eq!(QRational::from_poly(p(&[1, 1])).subst_q(&one).unwrap(), QRational::from_int(2));
        // q/(1+q) at 1/q is 1/(1+q)
        assert_eq!(r(&[0, 1], &[1, 1]).subst_q(&QValue::Inverse).unwrap(), r(&[1], &[1, 1]));
        let g4 = r(&[0, 1, 1], &[1, 0, 0, 1]);
        assert_eq!(g4.subst_q(&QValue::Inverse).unwrap(), g4);
        let pole = r(&[1], &[1, 1]).subst_q(&QValue::Number(-Rational::one()));
        assert!(matches!(pole, Err(Error::Pole(_))));
    }

    #[test]
    fn field_operations() {
        let a = r(&[1], &[1, 1]);
        let b = r(&[0, 1], &[1, 1]);
        assert_eq!(&a + &b, QRational::one());
        assert_eq!(&a * &r(&[1, 1], &[1]), QRational::one());
        assert_eq!(&a / &a, QRational::one());
        assert_eq!(QRational::q_pow(-2) * QRational::q_pow(3), QRational::q_pow(1));
    }
}
