//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Every algorithm in the crate is generic over [`Scalar`] or works over [`Q`]
//! directly. There is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number.
pub type Q = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `num/den`; panics on a zero denominator.
pub fn qf(num: i64, den: i64) -> Q {
    assert!(den != 0, "zero denominator");
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Exact field element used by matrices, tensors and cochains.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_q(x: &Q) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Complex conjugate (identity on rationals).
    fn conj(&self) -> Self;
    /// The value as a rational, if it has no imaginary part.
    fn to_q(&self) -> Option<Q>;

    fn from_i64(n: i64) -> Self {
        Self::from_q(&q(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self = Scalar::add(self, o);
    }
    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self = Scalar::add(self, &Scalar::mul(a, b));
    }
    fn scale_i64(&self, n: i64) -> Self {
        Scalar::mul(self, &Self::from_i64(n))
    }
    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| Scalar::mul(self, &i))
    }
}

impl Scalar for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_q(x: &Q) -> Self {
        x.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn to_q(&self) -> Option<Q> {
        Some(self.clone())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Gauss {
    pub re: Q,
    pub im: Q,
}

impl Gauss {
    pub fn new(re: Q, im: Q) -> Self {
        Gauss { re, im }
    }
    pub fn real(re: Q) -> Self {
        Gauss { re, im: Zero::zero() }
    }
    /// The imaginary unit.
    pub fn i() -> Self {
        Gauss { re: Zero::zero(), im: One::one() }
    }
    pub fn from_ints(re: i64, im: i64) -> Self {
        Gauss { re: q(re), im: q(im) }
    }
}

impl Scalar for Gauss {
    fn zero() -> Self {
        Gauss::real(Zero::zero())
    }
    fn one() -> Self {
        Gauss::real(One::one())
    }
    fn from_q(x: &Q) -> Self {
        Gauss::real(x.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, o: &Self) -> Self {
        Gauss { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Self) -> Self {
        Gauss { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Self) -> Self {
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
    fn neg(&self) -> Self {
        Gauss { re: -&self.re, im: -&self.im }
    }
    fn inv(&self) -> Option<Self> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&n) {
            return None;
        }
        Some(Gauss { re: &self.re / &n, im: -&self.im / &n })
    }
    fn conj(&self) -> Self {
        Gauss { re: self.re.clone(), im: -&self.im }
    }
    fn to_q(&self) -> Option<Q> {
        if Zero::is_zero(&self.im) {
            Some(self.re.clone())
        } else {
            None
        }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        Scalar::add(&self, &o)
    }
}
impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        Scalar::sub(&self, &o)
    }
}
impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        Scalar::mul(&self, &o)
    }
}
impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Scalar::neg(&self)
    }
}

/// Writes a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Gauss {
    /// `a+b i` with each part written as `p` or `p/q`; pure reals omit the imaginary part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            return write!(f, "{}", fmt_q(&self.re));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{} i", fmt_q(&self.re), sign, fmt_q(&self.im.abs()))
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Q::from_integer(acc)
}

/// `±1` as a scalar.
pub fn sign_scalar<S: Scalar>(sign: i32) -> S {
    match sign {
        1 => S::one(),
        -1 => S::one().neg(),
        0 => S::zero(),
        _ => S::from_i64(sign as i64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_closure() {
        let a = qf(3, 4);
        let b = qf(-5, 6);
        assert_eq!(Scalar::mul(&a, &b), qf(-15, 24));
        assert_eq!(Scalar::div(&a, &b).unwrap(), qf(-9, 10));
        assert!(Scalar::inv(&q(0)).is_none());
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = Gauss::i();
        assert_eq!(Scalar::mul(&i, &i), Gauss::from_ints(-1, 0));
        let z = Gauss::new(qf(1, 2), qf(-3, 2));
        let w = Scalar::inv(&z).unwrap();
        assert_eq!(Scalar::mul(&z, &w), Gauss::one());
        assert_eq!(z.to_string(), "1/2-3/2 i");
        assert_eq!(Gauss::from_ints(2, 0).to_string(), "2");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), q(1));
        assert_eq!(factorial(5), q(120));
    }
}
