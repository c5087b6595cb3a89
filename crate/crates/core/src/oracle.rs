//! The faithful representation on truncated power series in `z`:
//! `a` multiplies by `z`, `b` takes the primitive vanishing at 0.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Ordering};
use crate::error::{AlgebraError, Result};

/// `Σ_{m ≤ degree} t_m z^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    degree: u32,
    terms: BTreeMap<u32, Coeff>,
}

impl PolySeries {
    pub fn zero(degree: u32) -> Self {
        PolySeries { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(m: u32, c: Coeff, degree: u32) -> Self {
        Self::from_terms(degree, [(m, c)])
    }

    /// Sums duplicates; drops zeros and exponents past `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (u32, Coeff)>) -> Self {
        let mut out = Self::zero(degree);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, m: u32, c: Coeff) {
        if m > self.degree || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Coeff::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Coeff)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, m: u32) -> Coeff {
        self.terms.get(&m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, degree: u32) -> Self {
        Self::from_terms(degree.min(self.degree), self.terms().map(|(m, c)| (m, c.clone())))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::from_terms(self.degree.min(other.degree), self.terms().map(|(m, c)| (m, c.clone())));
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(self.degree, self.terms().map(|(m, t)| (m, t * c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coeff::one()))
    }
}

/// Multiplication by `z`.
pub fn act_a(f: &PolySeries) -> PolySeries {
    PolySeries::from_terms(f.degree, f.terms().map(|(m, c)| (m + 1, c.clone())))
}

/// `z^m ↦ z^{m+1}/(m+1)`.
pub fn act_b(f: &PolySeries) -> PolySeries {
    PolySeries::from_terms(
        f.degree,
        f.terms().map(|(m, c)| (m + 1, c * &Coeff::from_ratio(1, m as i64 + 1))),
    )
}

/// `r!/(q+r)!` as a rational.
fn kernel(q: u32, r: u32) -> BigRational {
    let den = (r + 1..=r + q).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    BigRational::new(BigInt::one(), den)
}

/// Action through the closed kernel: the coefficient of `z^m` in `X f` is
/// `Σ_{p+q+r=m} r!/(q+r)! x_{p,q} t_r`.
pub fn act(x: &AlgebraElement, f: &PolySeries) -> PolySeries {
    let x = x.to_left();
    let mut out = PolySeries::zero(f.degree);
    for (mono, xc) in x.terms() {
        for (r, t) in f.terms() {
            let m = mono.p + mono.q + r;
            if m > f.degree {
                break;
            }
            out.add_term(m, &(xc * t) * &Coeff::real(kernel(mono.q, r)));
        }
    }
    out
}

/// Action through repeated elementary actions, in either ordering.
pub fn act_composed(x: &AlgebraElement, f: &PolySeries) -> PolySeries {
    let mut out = PolySeries::zero(f.degree);
    for (mono, c) in x.terms() {
        let mut g = f.clone();
        let (first, first_n, second, second_n): (fn(&PolySeries) -> PolySeries, u32, fn(&PolySeries) -> PolySeries, u32) =
            match x.ordering() {
                Ordering::Left => (act_b, mono.q, act_a, mono.p),
                Ordering::Right => (act_a, mono.p, act_b, mono.q),
            };
        for _ in 0..first_n {
            g = first(&g);
        }
        for _ in 0..second_n {
            g = second(&g);
        }
        out = out.add(&g.scale(c));
    }
    out
}

/// Checks `(XY) z^r = X(Y z^r)` for every `r` with `r + 2N ≤ D`, comparing the
/// coefficients of `z^k` for `k ≤ r + N` (higher ones are affected by truncation).
pub fn oracle_check_mul(x: &AlgebraElement, y: &AlgebraElement, d: u32) -> bool {
    let Ok(xy) = x.try_mul(y) else {
        return false;
    };
    check_product(&xy, x, y, d)
}

/// As [`oracle_check_mul`] with a caller-supplied product.
pub fn check_product(xy: &AlgebraElement, x: &AlgebraElement, y: &AlgebraElement, d: u32) -> bool {
    let n = xy.order();
    let mut r = 0;
    while r + 2 * n <= d {
        let z = PolySeries::monomial(r, Coeff::one(), d);
        let lhs = act(xy, &z).truncate(r + n);
        let rhs = act(x, &act(y, &z)).truncate(r + n);
        if lhs != rhs {
            return false;
        }
        r += 1;
    }
    true
}

/// Smallest `r ≤ r_max` with `P z^r ≠ 0`.
pub fn injectivity_witness(p: &AlgebraElement, r_max: u32) -> Result<u32> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    let m = p.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
    (0..=r_max)
        .find(|&r| !act(p, &PolySeries::monomial(r, Coeff::one(), r + m)).is_zero())
        .ok_or(AlgebraError::NotFound(r_max))
}
