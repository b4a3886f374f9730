//! Exact Gaussian rationals `a + b·i` with `a, b ∈ ℚ`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An element of ℚ(i). Both parts are kept in lowest terms with positive
/// denominators (guaranteed by `BigRational`), so `==` is exact equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Self::from_integers(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denominator_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    /// Scale by an integer and return the Gaussian integer parts, assuming
    /// `scale` clears both denominators.
    pub(crate) fn to_gaussian_integer(&self, scale: &BigInt) -> (BigInt, BigInt) {
        let re = &self.re * BigRational::from_integer(scale.clone());
        let im = &self.im * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        (re.to_integer(), im.to_integer())
    }

    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails when both parts overflow; fall back to
        // a scaled division.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_integers(1, 0)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        Self::from_integers(v, 0)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(v: BigRational) -> Self {
        Self::real(v)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    /// Panics on division by zero, like the integer types.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        &self / &rhs
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in the coefficient grammar: `3/2`, `-i`, `2/3i`, `(1/2 - 1i)`.
/// A leading minus is only ever emitted outside the parentheses.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_negative() {
                f.write_str("-")?;
            }
            let mag = self.im.abs();
            return if mag.is_one() {
                f.write_str("i")
            } else {
                write!(f, "{mag}i")
            };
        }
        if self.re.is_negative() {
            return write!(f, "-{}", -self);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({} {sign} {}i)", self.re, self.im.abs())
    }
}

/// Gaussian-integer gcd by the Euclidean algorithm with nearest rounding.
/// The result is determined up to a unit.
pub(crate) fn gaussian_int_gcd(a: (BigInt, BigInt), b: (BigInt, BigInt)) -> (BigInt, BigInt) {
    let mut a = a;
    let mut b = b;
    while !(b.0.is_zero() && b.1.is_zero()) {
        let r = gaussian_int_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn gaussian_int_rem(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> (BigInt, BigInt) {
    // a / b = a·conj(b) / |b|²
    let n = &b.0 * &b.0 + &b.1 * &b.1;
    let num_re = &a.0 * &b.0 + &a.1 * &b.1;
    let num_im = &a.1 * &b.0 - &a.0 * &b.1;
    let q_re = round_div(&num_re, &n);
    let q_im = round_div(&num_im, &n);
    let prod_re = &q_re * &b.0 - &q_im * &b.1;
    let prod_im = &q_re * &b.1 + &q_im * &b.0;
    (&a.0 - prod_re, &a.1 - prod_im)
}

fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    // floor((2·num + den) / (2·den)) for den > 0
    let two = BigInt::from(2);
    (num * &two + den).div_floor(&(den * &two))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_integers(re, im)
    }

    #[test]
    fn field_arithmetic() {
        let a = gr(1, 2);
        let b = gr(3, -1);
        assert_eq!(&a * &b, gr(5, 5));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(GaussianRational::i().pow(2), gr(-1, 0));
        assert_eq!(gr(0, 0).inv(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(gr(3, 0).to_string(), "3");
        assert_eq!(gr(0, 1).to_string(), "i");
        assert_eq!(gr(0, -2).to_string(), "-2i");
        assert_eq!(gr(1, -1).to_string(), "(1 - 1i)");
        assert_eq!(gr(-1, 2).to_string(), "-(1 - 2i)");
        assert_eq!(GaussianRational::ratio(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn gaussian_gcd_matches_integer_gcd_on_integers() {
        let g = gaussian_int_gcd((12.into(), 0.into()), (18.into(), 0.into()));
        let n = &g.0 * &g.0 + &g.1 * &g.1;
        assert_eq!(n, BigInt::from(36));
        let g = gaussian_int_gcd((2.into(), 0.into()), (1.into(), 1.into()));
        let n = &g.0 * &g.0 + &g.1 * &g.1;
        assert_eq!(n, BigInt::from(2));
    }
}
