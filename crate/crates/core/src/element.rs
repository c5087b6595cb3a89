//! Truncated elements of the algebra generated by `a`, `b` with `ab - ba = b^2`.
//!
//! The relation is homogeneous of degree 2, so the ideal of total degree `> N`
//! is two-sided and every operation here is exact in the quotient.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use crate::gamma::{binomial, factorial, gamma};

/// Which way monomials are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering {
    /// `a^p b^q`
    Left,
    /// `b^q a^p`
    Right,
}

impl Ordering {
    pub fn flip(self) -> Self {
        match self {
            Ordering::Left => Ordering::Right,
            Ordering::Right => Ordering::Left,
        }
    }
}

/// Exponent pair. Sorted by ascending total degree, then descending `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub p: u32,
    pub q: u32,
}

impl Monomial {
    pub fn new(p: u32, q: u32) -> Self {
        Monomial { p, q }
    }

    pub fn degree(self) -> u32 {
        self.p + self.q
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), other.p).cmp(&(other.degree(), self.p))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    order: u32,
    ordering: Ordering,
    terms: BTreeMap<Monomial, Coeff>,
}

impl AlgebraElement {
    pub fn zero(order: u32) -> Self {
        Self::zero_in(order, Ordering::Left)
    }

    pub fn zero_in(order: u32, ordering: Ordering) -> Self {
        AlgebraElement { order, ordering, terms: BTreeMap::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::scalar(Coeff::one(), order)
    }

    pub fn scalar(c: Coeff, order: u32) -> Self {
        Self::monomial(0, 0, c, order, Ordering::Left)
    }

    pub fn a(order: u32) -> Self {
        Self::monomial(1, 0, Coeff::one(), order, Ordering::Left)
    }

    pub fn b(order: u32) -> Self {
        Self::monomial(0, 1, Coeff::one(), order, Ordering::Left)
    }

    /// `c · a^p b^q` (Left) or `c · b^q a^p` (Right); zero if `p + q > order`.
    pub fn monomial(p: u32, q: u32, c: Coeff, order: u32, ordering: Ordering) -> Self {
        Self::from_terms(order, ordering, [(p, q, c)])
    }

    /// Sums duplicate keys, drops zeros and terms above the truncation order.
    pub fn from_terms<I>(order: u32, ordering: Ordering, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, Coeff)>,
    {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (p, q, c) in terms {
            if p + q > order || c.is_zero() {
                continue;
            }
            *acc.entry(Monomial::new(p, q)).or_default() += &c;
        }
        Self::from_map(order, ordering, acc)
    }

    fn from_map(order: u32, ordering: Ordering, acc: HashMap<Monomial, Coeff>) -> Self {
        let terms = acc.into_iter().filter(|(m, c)| m.degree() <= order && !c.is_zero()).collect();
        AlgebraElement { order, ordering, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn ordering(&self) -> Ordering {
        self.ordering
    }

    /// Stored terms in print order (ascending total degree, then descending `p`).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Coeff)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> Coeff {
        self.terms.get(&Monomial::new(p, q)).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(0, 0)
    }

    /// Lowest total degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Highest power of `a`; independent of the ordering.
    pub fn a_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.p).max()
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let v = self.valuation()?;
        (self.max_degree() == Some(v)).then_some(v)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        AlgebraElement {
            order: self.order,
            ordering: self.ordering,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Keeps degrees `≤ order`. Raising the order treats the missing degrees as zero,
    /// which is a choice of representative, not a computation.
    pub fn with_order(&self, order: u32) -> Self {
        AlgebraElement {
            order,
            ordering: self.ordering,
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= order).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn to_ordering(&self, target: Ordering) -> Self {
        match (self.ordering, target) {
            (Ordering::Left, Ordering::Right) => self.to_right(),
            (Ordering::Right, Ordering::Left) => self.to_left(),
            _ => self.clone(),
        }
    }

    /// `a^p b^q = Σ_j Γ_{p,q}^j b^{q+j} a^{p-j}`.
    pub fn to_right(&self) -> Self {
        if self.ordering == Ordering::Right {
            return self.clone();
        }
        self.convert(Ordering::Right, false)
    }

    /// `b^q a^p = Σ_j (-1)^j Γ_{p,q}^j a^{p-j} b^{q+j}`.
    pub fn to_left(&self) -> Self {
        if self.ordering == Ordering::Left {
            return self.clone();
        }
        self.convert(Ordering::Left, true)
    }

    fn convert(&self, target: Ordering, alternate: bool) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            for j in 0..=m.p {
                let mut g = Coeff::from(gamma(m.p, m.q, j as i64));
                if alternate && j % 2 == 1 {
                    g = -g;
                }
                let t = &g * c;
                *acc.entry(Monomial::new(m.p - j, m.q + j)).or_default() += &t;
            }
        }
        Self::from_map(self.order, target, acc)
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.ordering != other.ordering {
            return Err(AlgebraError::OrderingMismatch);
        }
        Ok(())
    }

    /// Coefficientwise sum; the result has the smaller of the two orders.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let order = self.order.min(other.order);
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            *acc.entry(*m).or_default() += c;
        }
        Ok(Self::from_map(order, self.ordering, acc))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero_in(self.order, self.ordering);
        }
        AlgebraElement {
            order: self.order,
            ordering: self.ordering,
            terms: self.terms.iter().map(|(m, x)| (*m, c * x)).collect(),
        }
    }

    /// Product in the truncated algebra. Operands in either ordering are accepted;
    /// the result is in `Left` ordering.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch(self.order, other.order));
        }
        Ok(mul_truncated(&self.to_left(), &other.to_left(), self.order))
    }

    /// Value comparison across orderings. Different truncation orders are an error.
    pub fn same_value(&self, other: &Self) -> Result<bool> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch(self.order, other.order));
        }
        Ok(self.to_left().terms == other.to_left().terms)
    }

    /// The anti-automorphism with `a ↦ a`, `b ↦ -b`:
    /// `a^p b^q ↦ (-1)^q b^q a^p` and `b^q a^p ↦ (-1)^q a^p b^q`.
    pub fn anti_f(&self, target: Ordering) -> Self {
        let swapped = AlgebraElement {
            order: self.order,
            ordering: self.ordering.flip(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.q % 2 == 1 { -c } else { c.clone() }))
                .collect(),
        };
        swapped.to_ordering(target)
    }

    /// The automorphism `a ↦ a + x b`, `b ↦ b`, applied to the right normal form.
    /// The result keeps the input's ordering.
    pub fn tau(&self, x: &Coeff) -> Self {
        let right = self.to_right();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        let mut cache: HashMap<u32, Vec<Coeff>> = HashMap::new();
        for (m, c) in &right.terms {
            let row = cache.entry(m.p).or_insert_with(|| binomial_row(x, m.p));
            for (j, w) in row.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let j = j as u32;
                let t = w * c;
                *acc.entry(Monomial::new(m.p - j, m.q + j)).or_default() += &t;
            }
        }
        Self::from_map(self.order, Ordering::Right, acc).to_ordering(self.ordering)
    }

    /// Per total degree `n`, the largest `magnitude(x_{p,q}) / q!` over `p + q = n`.
    pub fn coefficient_profile(&self) -> Vec<(u32, BigRational)> {
        let mut out: Vec<(u32, BigRational)> = (0..=self.order).map(|n| (n, BigRational::zero())).collect();
        for (m, c) in &self.terms {
            let v = c.magnitude() / BigRational::from_integer(factorial(m.q));
            let slot = &mut out[m.degree() as usize].1;
            if v > *slot {
                *slot = v;
            }
        }
        out
    }
}

/// `γ_j(x) C(p, j)` for `j = 0..=p`, with `γ_j(x) = x (x+1) ⋯ (x+j-1)`.
fn binomial_row(x: &Coeff, p: u32) -> Vec<Coeff> {
    let mut rising = Coeff::one();
    let mut row = Vec::with_capacity(p as usize + 1);
    for j in 0..=p {
        row.push(&rising * &Coeff::from(binomial(p, j)));
        rising = &rising * &(x + &Coeff::from(j as i64));
    }
    row
}

/// `(a + x b)^p = Σ_j γ_j(x) C(p, j) b^j a^{p-j}`, returned in `Right` ordering.
/// Zero when `p` exceeds the order.
pub fn binomial_pow(x: &Coeff, p: u32, order: u32) -> AlgebraElement {
    let row = binomial_row(x, p);
    AlgebraElement::from_terms(
        order,
        Ordering::Right,
        row.into_iter().enumerate().map(|(j, c)| (p - j as u32, j as u32, c)),
    )
}

/// Product of two `Left`-ordered polynomials, keeping total degree `≤ order`:
/// `a^p b^q · a^{p'} b^{q'} = Σ_j (-1)^j Γ_{p',q}^j a^{p+p'-j} b^{q+q'+j}`.
pub(crate) fn mul_truncated(x: &AlgebraElement, y: &AlgebraElement, order: u32) -> AlgebraElement {
    debug_assert!(x.ordering == Ordering::Left && y.ordering == Ordering::Left);
    let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
    let mut cache: HashMap<(u32, u32), Vec<Coeff>> = HashMap::new();
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            if m1.degree() + m2.degree() > order {
                // terms are sorted by degree
                break;
            }
            let prod = c1 * c2;
            if m1.q == 0 {
                *acc.entry(Monomial::new(m1.p + m2.p, m2.q)).or_default() += &prod;
                continue;
            }
            let row = cache.entry((m2.p, m1.q)).or_insert_with(|| {
                (0..=m2.p)
                    .map(|j| {
                        let g = Coeff::from(gamma(m2.p, m1.q, j as i64));
                        if j % 2 == 1 {
                            -g
                        } else {
                            g
                        }
                    })
                    .collect()
            });
            for (j, g) in row.iter().enumerate() {
                let j = j as u32;
                let t = g * &prod;
                *acc.entry(Monomial::new(m1.p + m2.p - j, m1.q + m2.q + j)).or_default() += &t;
            }
        }
    }
    AlgebraElement::from_map(order, Ordering::Left, acc)
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            order: self.order,
            ordering: self.ordering,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        -&self
    }
}

/// Panics on ordering mismatch; see [`AlgebraElement::try_add`].
impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_add(o).expect("ordering mismatch in +")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_sub(o).expect("ordering mismatch in -")
    }
}

/// Panics on order mismatch; see [`AlgebraElement::try_mul`].
impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: &AlgebraElement) -> AlgebraElement {
        self.try_mul(o).expect("truncation order mismatch in *")
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: AlgebraElement) -> AlgebraElement {
        &self + &o
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: AlgebraElement) -> AlgebraElement {
        &self - &o
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, o: AlgebraElement) -> AlgebraElement {
        &self * &o
    }
}

/// Splits off a leading sign so that terms print as `x - 2*b` rather than `x + -2*b`.
pub(crate) fn signed_abs(c: &Coeff) -> (bool, Coeff) {
    let negative = (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative());
    if negative {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn power(base: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{e}")),
    }
}

/// Human-readable sum, ascending total degree then descending `p`; re-parses
/// under the CLI grammar.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (negative, abs) = signed_abs(c);
            let factors: Vec<String> = match self.ordering {
                Ordering::Left => [power("a", m.p), power("b", m.q)],
                Ordering::Right => [power("b", m.q), power("a", m.p)],
            }
            .into_iter()
            .flatten()
            .collect();
            let mono = factors.join("*");
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (idx, negative) {
                (0, false) => write!(f, "{body}")?,
                // the grammar has no unary minus, only signed integer literals
                (0, true) if body.starts_with(|ch: char| ch.is_ascii_digit()) => write!(f, "-{body}")?,
                (0, true) => write!(f, "-1*{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

/// `C(n, k)` as a coefficient; handy in identities.
pub fn binom_coeff(n: u32, k: u32) -> Coeff {
    Coeff::from(binomial(n, k))
}

/// `n!` as a coefficient.
pub fn factorial_coeff(n: u32) -> Coeff {
    Coeff::from(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coeff {
        Coeff::from(n)
    }

    fn left(order: u32, t: &[(u32, u32, i64)]) -> AlgebraElement {
        AlgebraElement::from_terms(order, Ordering::Left, t.iter().map(|&(p, q, v)| (p, q, c(v))))
    }

    fn right(order: u32, t: &[(u32, u32, i64)]) -> AlgebraElement {
        AlgebraElement::from_terms(order, Ordering::Right, t.iter().map(|&(p, q, v)| (p, q, c(v))))
    }

    #[test]
    fn to_right_examples() {
        assert_eq!(left(4, &[(1, 1, 1)]).to_right(), right(4, &[(1, 1, 1), (0, 2, 1)]));
        assert_eq!(left(4, &[(2, 0, 1)]).to_right(), right(4, &[(2, 0, 1)]));
        assert_eq!(left(4, &[(2, 1, 1)]).to_right(), right(4, &[(2, 1, 1), (1, 2, 2), (0, 3, 2)]));
    }

    #[test]
    fn to_left_examples() {
        assert_eq!(right(4, &[(1, 1, 1)]).to_left(), left(4, &[(1, 1, 1), (0, 2, -1)]));
        assert_eq!(right(4, &[(0, 2, 1)]).to_left(), left(4, &[(0, 2, 1)]));
        assert_eq!(right(4, &[(2, 2, 1)]).to_left(), left(4, &[(2, 2, 1), (1, 3, -4), (0, 4, 6)]));
    }

    #[test]
    fn add_and_scale() {
        let a = AlgebraElement::a(3);
        assert_eq!(&a + &AlgebraElement::zero(3), a);
        assert!((&a + &a.scale(&c(-1))).is_zero());
        let x = left(3, &[(0, 1, 1), (1, 1, 1)]).scale(&c(2));
        assert_eq!(x, left(3, &[(0, 1, 2), (1, 1, 2)]));
        assert_eq!(a.to_right().try_add(&a), Err(AlgebraError::OrderingMismatch));
        assert_eq!((&AlgebraElement::a(5) + &AlgebraElement::b(3)).order(), 3);
    }

    #[test]
    fn mul_examples() {
        let n = 6;
        let (a, b) = (AlgebraElement::a(n), AlgebraElement::b(n));
        assert_eq!(&a * &b, left(n, &[(1, 1, 1)]));
        assert_eq!(&b * &a, left(n, &[(1, 1, 1), (0, 2, -1)]));
        let x = &a - &b;
        let y = &a - &b.scale(&c(2));
        assert_eq!(&x * &y, left(n, &[(2, 0, 1), (1, 1, -3), (0, 2, 3)]));
        assert_eq!(a.try_mul(&AlgebraElement::b(5)), Err(AlgebraError::OrderMismatch(6, 5)));
        // degree above the order vanishes
        let a3 = AlgebraElement::a(3);
        assert!((&(&a3 * &a3) * &(&a3 * &a3)).is_zero());
    }

    #[test]
    fn anti_f_examples() {
        let n = 4;
        assert_eq!(AlgebraElement::a(n).anti_f(Ordering::Left), AlgebraElement::a(n));
        assert_eq!(AlgebraElement::b(n).anti_f(Ordering::Left), -AlgebraElement::b(n));
        assert_eq!(left(n, &[(1, 1, 1)]).anti_f(Ordering::Left), left(n, &[(1, 1, -1), (0, 2, 1)]));
    }

    #[test]
    fn binomial_pow_examples() {
        let bp = binomial_pow(&c(-1), 3, 5);
        assert_eq!(bp, right(5, &[(3, 0, 1), (2, 1, -3)]));
        assert_eq!(binomial_pow(&c(0), 4, 5), right(5, &[(4, 0, 1)]));
        assert_eq!(binomial_pow(&c(1), 2, 5), right(5, &[(2, 0, 1), (1, 1, 2), (0, 2, 2)]));
        assert!(binomial_pow(&c(1), 6, 5).is_zero());
    }

    #[test]
    fn tau_examples() {
        let n = 5;
        let x = Coeff::from_ratio(2, 3);
        assert!(AlgebraElement::a(n).tau(&x).same_value(&(&AlgebraElement::a(n) + &AlgebraElement::b(n).scale(&x))).unwrap());
        let b3 = left(n, &[(0, 3, 1)]);
        assert_eq!(b3.tau(&x), b3);
        let a2 = left(n, &[(2, 0, 1)]);
        assert!(a2.tau(&c(1)).same_value(&right(n, &[(2, 0, 1), (1, 1, 2), (0, 2, 2)])).unwrap());
        assert_eq!(a2.tau(&c(1)).ordering(), Ordering::Left);
    }

    #[test]
    fn profile_examples() {
        assert!(AlgebraElement::zero(3).coefficient_profile().iter().all(|(_, v)| v.is_zero()));
        let x = AlgebraElement::from_terms(
            4,
            Ordering::Left,
            (0..=4).map(|q| (0, q, Coeff::from(factorial(q)))),
        );
        assert!(x.coefficient_profile().iter().all(|(_, v)| v.is_one()));
        let y = left(3, &[(1, 0, 1), (0, 1, 2)]);
        assert_eq!(y.coefficient_profile()[1].1, BigRational::from_integer(2.into()));
    }

    #[test]
    fn equality_needs_same_order() {
        assert!(AlgebraElement::a(3).same_value(&AlgebraElement::a(4)).is_err());
        assert!(left(4, &[(1, 1, 1)]).same_value(&right(4, &[(1, 1, 1), (0, 2, 1)])).unwrap());
    }

    #[test]
    fn pretty_forms() {
        assert_eq!(right(4, &[(2, 1, 1), (1, 2, 2), (0, 3, 2)]).to_string(), "b*a^2 + 2*b^2*a + 2*b^3");
        assert_eq!(left(4, &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (1, 3, -1)]).to_string(), "1 + a*b + a^2*b^2 - a*b^3");
        assert_eq!(left(4, &[(1, 0, -1)]).to_string(), "-1*a");
        assert_eq!(left(4, &[(0, 0, -3), (1, 0, -1)]).to_string(), "-3 - a");
        assert_eq!(AlgebraElement::zero(2).to_string(), "0");
    }
}
