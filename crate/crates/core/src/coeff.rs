//! Exact Gaussian rationals, the scalar field of every computation in this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// Element of Q(i): `re + im * i` with both parts reduced big rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Coeff {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coeff {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Coeff { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Coeff { re, im: BigRational::zero() }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Coeff::real(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio<T: Into<BigInt>>(num: T, den: T) -> Self {
        Coeff::real(BigRational::new(num.into(), den.into()))
    }

    pub fn i() -> Self {
        Coeff { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coeff { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// `max(|re|, |im|)`, the size used by coefficient profiles.
    pub fn magnitude(&self) -> BigRational {
        let r = self.re.abs();
        let i = self.im.abs();
        if r >= i {
            r
        } else {
            i
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Coeff { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coeff::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when the value is a real rational strictly below zero.
    pub fn is_negative_real(&self) -> bool {
        self.im.is_zero() && self.re.is_negative()
    }
}

impl Zero for Coeff {
    fn zero() -> Self {
        Coeff { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Coeff {
    fn one() -> Self {
        Coeff::real(BigRational::one())
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

impl From<BigInt> for Coeff {
    fn from(n: BigInt) -> Self {
        Coeff::from_int(n)
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::real(r)
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.im.is_zero() && o.im.is_zero() {
            return Coeff::real(&self.re * &o.re);
        }
        Coeff {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a Coeff> for &'a Coeff {
    type Output = Coeff;
    /// Panics on a zero divisor; use [`Coeff::inv`] for a checked variant.
    fn div(self, o: &Coeff) -> Coeff {
        self * &o.inv().expect("division by zero coefficient")
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(self, o: Coeff) -> Coeff {
        &self + &o
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(self, o: Coeff) -> Coeff {
        &self - &o
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, o: Coeff) -> Coeff {
        &self * &o
    }
}

impl Div for Coeff {
    type Output = Coeff;
    fn div(self, o: Coeff) -> Coeff {
        &self / &o
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re, im: -self.im }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        Coeff { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, o: &Coeff) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

/// Serializes a rational as `"num/den"` (denominator always written).
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"num/den"` or a bare integer `"num"`, optional leading minus.
pub fn parse_rational(s: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::BadRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let digits_ok = |t: &str, signed: bool| {
        let t = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit())
    };
    if !digits_ok(num, true) || !digits_ok(den, false) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable form; re-parses under the CLI expression grammar.
impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else {
                    write!(f, "{}*i", fmt_rat(&self.im))
                }
            }
            (false, false) => {
                let im_abs = self.im.abs();
                let sign = if self.im.is_negative() { "-" } else { "+" };
                if im_abs.is_one() {
                    write!(f, "({} {} i)", fmt_rat(&self.re), sign)
                } else {
                    write!(f, "({} {} {}*i)", fmt_rat(&self.re), sign, fmt_rat(&im_abs))
                }
            }
        }
    }
}
