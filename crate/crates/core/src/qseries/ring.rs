use std::fmt::Debug;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use num_complex::Complex64;

pub type Rational = BigRational;

/// Commutative ring containing the rationals.
///
/// Method names avoid `add`/`mul` so that `std::ops` impls on the
/// underlying numeric types never shadow them.
pub trait Ring: Clone + Debug + PartialEq {
    /// Exact rings are compared by equality, inexact ones by tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Size used for deviation reports: `|x|` for numbers, max coefficient
    /// magnitude for polynomials and series.
    fn magnitude(&self) -> f64;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn scaled(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

/// A ring where some elements can be inverted.
pub trait Field: Ring {
    fn try_inverse(&self) -> Option<Self>;
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
    let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
    if n.is_finite() && d.is_finite() {
        n / d
    } else {
        f64::INFINITY
    }
}

impl Ring for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }
}

impl Field for Rational {
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Ring for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Field for Complex64 {
    fn try_inverse(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| self.inv())
    }
}

/// Formats a complex number as `a+bi`, the form the reports use.
pub fn format_complex(z: &Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_ring_basics() {
        let a = rational(1, 2);
        let b = rational(1, 3);
        assert_eq!(a.plus(&b), rational(5, 6));
        assert_eq!(a.times(&b), rational(1, 6));
        assert_eq!(a.pow(3), rational(1, 8));
        assert_eq!(b.try_inverse(), Some(rational(3, 1)));
        assert_eq!(<Rational as Ring>::zero().try_inverse(), None);
    }

    #[test]
    fn complex_ring_basics() {
        let i = Complex64::new(0.0, 1.0);
        assert_eq!(i.times(&i), Complex64::new(-1.0, 0.0));
        assert!((Ring::pow(&i, 4).minus(&<Complex64 as Ring>::one())).magnitude() < 1e-15);
        assert_eq!(format_complex(&Complex64::new(0.37, -0.11)), "0.37-0.11i");
    }
}
