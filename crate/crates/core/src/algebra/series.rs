//! Truncated power series in `z` with [`XsPoly`] coefficients.
//!
//! A series of order `n` knows its coefficients of `z^0 ..= z^n` and nothing
//! beyond. Binary operations return the smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use super::{QRational, XsPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<XsPoly>,
}

impl ZSeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// surplus ones are dropped.
    pub fn new(mut coeffs: Vec<XsPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, XsPoly::zero());
        Self { coeffs }
    }

    pub fn from_fn<F: FnMut(usize) -> XsPoly>(order: usize, f: F) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![XsPoly::one()], order)
    }

    /// Highest valid power of `z` (inclusive).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &XsPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[XsPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(XsPoly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `z -> c z`.
    pub fn scale_z(&self, c: &QRational) -> Self {
        let mut pow = QRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&pow));
            pow = &pow * c;
        }
        Self { coeffs }
    }

    /// `f(-z)`.
    pub fn reflect(&self) -> Self {
        self.scale_z(&QRational::from_int(-1))
    }

    pub fn scale(&self, c: &XsPoly) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn map_coeffs<F: FnMut(&XsPoly) -> Result<XsPoly>>(&self, f: F) -> Result<Self> {
        Ok(Self {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    /// Keeps the coefficients whose index has the given parity.
    pub fn parity_part(&self, odd: bool) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if (k % 2 == 1) == odd { a.clone() } else { XsPoly::zero() })
                .collect(),
        }
    }

    /// Lowest power of `z` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|a| !a.is_zero())
    }

    /// `self / z^v`; the first `v` coefficients must vanish. The order drops by `v`.
    pub fn shift_down(&self, v: usize) -> Result<Self> {
        if v > self.order() || self.coeffs[..v].iter().any(|a| !a.is_zero()) {
            return Err(Error::SeriesNotInvertible);
        }
        Ok(Self {
            coeffs: self.coeffs[v..].to_vec(),
        })
    }

    /// `self * z^v`, keeping the order.
    pub fn shift_up(&self, v: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![XsPoly::zero(); v.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take(order + 1 - coeffs.len()).cloned());
        Self { coeffs }
    }

    /// Quotient by a series whose constant term is a nonzero constant.
    pub fn div(&self, rhs: &ZSeries) -> Result<Self> {
        let order = self.order().min(rhs.order());
        let b0 = rhs.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::SeriesNotInvertible)?;
        let inv = b0.recip()?;
        let mut out: Vec<XsPoly> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if rhs.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc = &acc - &(&rhs.coeffs[j] * &out[k - j]);
            }
            out.push(acc.scale(&inv));
        }
        Ok(Self { coeffs: out })
    }

    /// Quotient when both operands carry the factor `z^v`: the factor is
    /// removed from each before dividing, so the result has order
    /// `min(orders) - v`.
    pub fn div_with_valuation(&self, rhs: &ZSeries, v: usize) -> Result<Self> {
        self.shift_down(v)?.div(&rhs.shift_down(v)?)
    }
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        ZSeries::from_fn(order, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        ZSeries::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &ZSeries {
    type Output = ZSeries;
    fn neg(self) -> ZSeries {
        ZSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        let order = self.order().min(rhs.order());
        ZSeries::from_fn(order, |k| {
            let mut acc = XsPoly::zero();
            for j in 0..=k {
                let (a, b) = (&self.coeffs[j], &rhs.coeffs[k - j]);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ZSeries {
            type Output = ZSeries;
            fn $m(self, rhs: ZSeries) -> ZSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&ZSeries> for ZSeries {
            type Output = ZSeries;
            fn $m(self, rhs: &ZSeries) -> ZSeries {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64], order: usize) -> ZSeries {
        ZSeries::new(c.iter().map(|&v| XsPoly::from_int(v)).collect(), order)
    }

    #[test]
    fn product_and_quotient() {
        let a = ints(&[1, 1], 2);
        let b = ints(&[1, -1], 2);
        assert_eq!(&a * &b, ints(&[1, 0, -1], 2));
        let inv = ZSeries::one(3).div(&ints(&[1, -1], 3)).unwrap();
        assert_eq!(inv, ints(&[1, 1, 1, 1], 3));
    }

    #[test]
    fn order_follows_min_rule() {
        let a = ints(&[1, 2, 3, 4, 5], 4);
        let b = ints(&[1, 1], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
        assert_eq!(a.div(&b).unwrap().order(), 2);
    }

    #[test]
    fn division_needs_invertible_constant() {
        let a = ints(&[0, 1, 0, 1], 3);
        let b = ints(&[0, 2, 0, 3], 3);
        assert_eq!(a.div(&b), Err(Error::SeriesNotInvertible));
        let q = a.div_with_valuation(&b, 1).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(&q * &b.shift_down(1).unwrap(), a.shift_down(1).unwrap());
        let symbolic = ZSeries::new(vec![XsPoly::s()], 2);
        assert_eq!(a.div(&symbolic), Err(Error::SeriesNotInvertible));
    }
}
