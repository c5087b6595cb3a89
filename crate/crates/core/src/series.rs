//! Series in `b` alone (the commutative subalgebra `B`) and polynomials in `a`
//! with coefficients in `B` written on the left.

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Ordering};
use crate::error::{AlgebraError, Result};

/// `Σ_q c_q b^q` truncated at `q ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BSeries(AlgebraElement);

impl BSeries {
    pub fn zero(order: u32) -> Self {
        BSeries(AlgebraElement::zero(order))
    }

    pub fn one(order: u32) -> Self {
        BSeries(AlgebraElement::one(order))
    }

    /// `coeffs[q]` is the coefficient of `b^q`; entries past `order` are dropped.
    pub fn from_coeffs(order: u32, coeffs: impl IntoIterator<Item = Coeff>) -> Self {
        BSeries(AlgebraElement::from_terms(
            order,
            Ordering::Left,
            coeffs.into_iter().enumerate().map(|(q, c)| (0, q as u32, c)),
        ))
    }

    pub fn monomial(q: u32, c: Coeff, order: u32) -> Self {
        BSeries(AlgebraElement::monomial(0, q, c, order, Ordering::Left))
    }

    /// Fails unless every term is free of `a`.
    pub fn from_element(x: &AlgebraElement) -> Result<Self> {
        if x.terms().any(|(m, _)| m.p != 0) {
            return Err(AlgebraError::InvalidInput("series in b must not contain a".into()));
        }
        Ok(BSeries(x.to_left()))
    }

    pub fn order(&self) -> u32 {
        self.0.order()
    }

    pub fn coeff(&self, q: u32) -> Coeff {
        self.0.coeff(0, q)
    }

    pub fn constant_term(&self) -> Coeff {
        self.0.constant_term()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn as_element(&self) -> &AlgebraElement {
        &self.0
    }

    pub fn into_element(self) -> AlgebraElement {
        self.0
    }

    pub fn with_order(&self, order: u32) -> Self {
        BSeries(self.0.with_order(order))
    }

    /// Dense coefficient list `c_0 ..= c_order`.
    pub fn dense(&self) -> Vec<Coeff> {
        (0..=self.order()).map(|q| self.coeff(q)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        BSeries(&self.0 + &other.0)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        BSeries(self.0.scale(c))
    }

    /// Cauchy product; `B` is commutative. Result order is the smaller one.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let x = self.dense();
        let y = other.dense();
        let mut out = vec![Coeff::zero(); order as usize + 1];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate() {
                if i + j > order as usize {
                    break;
                }
                if !yj.is_zero() {
                    out[i + j] += &(xi * yj);
                }
            }
        }
        BSeries::from_coeffs(order, out)
    }

    /// Inverse of a unit by the usual power series recursion.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.constant_term();
        let inv0 = c0.inv().map_err(|_| AlgebraError::ZeroConstantTerm)?;
        let n = self.order() as usize;
        let x = self.dense();
        let mut y: Vec<Coeff> = vec![Coeff::zero(); n + 1];
        y[0] = inv0.clone();
        for k in 1..=n {
            let mut s = Coeff::zero();
            for i in 1..=k {
                if !x[i].is_zero() {
                    s += &(&x[i] * &y[k - i]);
                }
            }
            y[k] = -(&s * &inv0);
        }
        Ok(BSeries::from_coeffs(self.order(), y))
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.constant_term().is_one()
    }
}

/// `Σ_j S_j(b) a^j`, coefficients on the left (the `Right` normal form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APolynomial {
    order: u32,
    coeffs: Vec<BSeries>,
}

impl APolynomial {
    /// Trailing zero coefficients are trimmed; the zero polynomial has none.
    pub fn new(order: u32, coeffs: Vec<BSeries>) -> Self {
        let mut coeffs: Vec<BSeries> = coeffs.into_iter().map(|s| s.with_order(order)).collect();
        while coeffs.last().is_some_and(|s| s.is_zero()) {
            coeffs.pop();
        }
        APolynomial { order, coeffs }
    }

    pub fn from_element(x: &AlgebraElement) -> Self {
        let r = x.to_right();
        let k = r.a_degree().map_or(0, |d| d as usize + 1);
        let mut cols: Vec<Vec<(u32, u32, Coeff)>> = vec![Vec::new(); k];
        for (m, c) in r.terms() {
            cols[m.p as usize].push((0, m.q, c.clone()));
        }
        let coeffs = cols
            .into_iter()
            .map(|t| BSeries(AlgebraElement::from_terms(x.order(), Ordering::Left, t)))
            .collect();
        APolynomial::new(x.order(), coeffs)
    }

    /// Fails when the `a`-degree exceeds `max_degree`.
    pub fn from_element_bounded(x: &AlgebraElement, max_degree: u32) -> Result<Self> {
        let r = Self::from_element(x);
        match r.a_degree() {
            Some(d) if d > max_degree => Err(AlgebraError::DegreeTooHigh { got: d, max: max_degree }),
            _ => Ok(r),
        }
    }

    /// As an algebra element in `Right` ordering.
    pub fn to_element(&self) -> AlgebraElement {
        AlgebraElement::from_terms(
            self.order,
            Ordering::Right,
            self.coeffs
                .iter()
                .enumerate()
                .flat_map(|(p, s)| s.0.terms().map(move |(m, c)| (p as u32, m.q, c.clone())).collect::<Vec<_>>()),
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BSeries] {
        &self.coeffs
    }

    pub fn a_degree(&self) -> Option<u32> {
        self.coeffs.len().checked_sub(1).map(|d| d as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}
