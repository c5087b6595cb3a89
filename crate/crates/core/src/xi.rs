//! Multivalued expansions `Σ s^{α+m} (log s)^j ⊗ c_{α,m,j}` with `a = ×s` and
//! `b` the primitive without constant term.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};

/// Basis symbol `s^{α+m} (log s)^j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XiKey {
    pub alpha: BigRational,
    pub m: u32,
    pub j: u32,
}

impl XiKey {
    pub fn exponent(&self) -> BigRational {
        &self.alpha + BigRational::from_integer(BigInt::from(self.m))
    }
}

/// Coefficient vectors lie in a space of dimension `dim`; `j ≤ log_depth`,
/// `m ≤ max_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiElement {
    dim: usize,
    log_depth: u32,
    max_m: u32,
    terms: BTreeMap<XiKey, Vec<Coeff>>,
}

fn check_alpha(alpha: &BigRational) -> Result<()> {
    if !alpha.is_positive() || alpha > &BigRational::one() {
        return Err(AlgebraError::InvalidInput(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

impl XiElement {
    pub fn zero(dim: usize, log_depth: u32, max_m: u32) -> Self {
        XiElement { dim, log_depth, max_m, terms: BTreeMap::new() }
    }

    pub fn from_terms(
        dim: usize,
        log_depth: u32,
        max_m: u32,
        terms: impl IntoIterator<Item = (XiKey, Vec<Coeff>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(dim, log_depth, max_m);
        for (key, c) in terms {
            check_alpha(&key.alpha)?;
            if key.j > log_depth {
                return Err(AlgebraError::DegreeTooHigh { got: key.j, max: log_depth });
            }
            if c.len() != dim {
                return Err(AlgebraError::SizeMismatch { expected: dim, got: c.len() });
            }
            out.add_term(key, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, key: XiKey, c: &[Coeff]) {
        if key.m > self.max_m || c.iter().all(Zero::is_zero) {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(|| vec![Coeff::zero(); c.len()]);
        for (s, x) in slot.iter_mut().zip(c) {
            *s += x;
        }
        if slot.iter().all(Zero::is_zero) {
            self.terms.remove(&key);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn log_depth(&self) -> u32 {
        self.log_depth
    }

    pub fn max_m(&self) -> u32 {
        self.max_m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&XiKey, &Vec<Coeff>)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(AlgebraError::SizeMismatch { expected: self.dim, got: other.dim });
        }
        let mut out = self.clone();
        out.max_m = self.max_m.min(other.max_m);
        out.log_depth = self.log_depth.max(other.log_depth);
        out.terms.retain(|k, _| k.m <= out.max_m);
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.dim, self.log_depth, self.max_m);
        for (k, v) in self.terms() {
            out.add_term(k.clone(), &v.iter().map(|x| x * c).collect::<Vec<_>>());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }
}

/// Multiplication by `s`.
pub fn xi_act_a(xi: &XiElement) -> XiElement {
    let mut out = XiElement::zero(xi.dim, xi.log_depth, xi.max_m);
    for (k, c) in xi.terms() {
        out.add_term(XiKey { alpha: k.alpha.clone(), m: k.m + 1, j: k.j }, c);
    }
    out
}

/// Termwise primitive:
/// `b[s^β L^j] = Σ_{i ≤ j} (-1)^i j!/(j-i)! / (β+1)^{i+1} · s^{β+1} L^{j-i}`.
pub fn xi_act_b(xi: &XiElement) -> XiElement {
    let mut out = XiElement::zero(xi.dim, xi.log_depth, xi.max_m);
    for (k, c) in xi.terms() {
        let beta1 = k.exponent() + BigRational::one();
        let inv = beta1.recip();
        let mut factor = inv.clone();
        for i in 0..=k.j {
            let w = Coeff::real(factor.clone());
            out.add_term(XiKey { alpha: k.alpha.clone(), m: k.m + 1, j: k.j - i }, &c.iter().map(|x| x * &w).collect::<Vec<_>>());
            // next: multiply by -(j - i)/(β+1)
            factor = -(factor * BigRational::from_integer(BigInt::from(k.j - i)) * &inv);
        }
    }
    out
}

/// `(ab - ba - b^2) ξ`.
pub fn xi_relation_residual(xi: &XiElement) -> XiElement {
    let ab = xi_act_a(&xi_act_b(xi));
    let ba = xi_act_b(&xi_act_a(xi));
    let bb = xi_act_b(&xi_act_b(xi));
    ab.sub(&ba).and_then(|d| d.sub(&bb)).expect("same dimension")
}

/// Checks `a[s^{α+m}] = (α+m+1) b[s^{α+m}]` and returns `θ = α+m+1`.
pub fn xi_check_simple_pole(alpha: &BigRational, m: u32) -> Result<(BigRational, bool)> {
    check_alpha(alpha)?;
    let key = XiKey { alpha: alpha.clone(), m, j: 0 };
    let theta = key.exponent() + BigRational::one();
    let xi = XiElement::from_terms(1, 0, m + 1, [(key, vec![Coeff::one()])])?;
    let lhs = xi_act_a(&xi);
    let rhs = xi_act_b(&xi).scale(&Coeff::real(theta.clone()));
    Ok((theta, lhs == rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mono(alpha: BigRational, m: u32, j: u32, max_m: u32) -> XiElement {
        XiElement::from_terms(1, 3, max_m, [(XiKey { alpha, m, j }, vec![Coeff::one()])]).unwrap()
    }

    #[test]
    fn primitive_examples() {
        // s^{1/2}: b gives s^{3/2} / (3/2)
        let got = xi_act_b(&mono(q(1, 2), 0, 0, 4));
        let expect = XiElement::from_terms(1, 3, 4, [(XiKey { alpha: q(1, 2), m: 1, j: 0 }, vec![Coeff::from_ratio(2, 3)])]).unwrap();
        assert_eq!(got, expect);
        // s^{1/3} log s → s^{4/3}/(4/3) log s - s^{4/3}/(4/3)^2
        let got = xi_act_b(&mono(q(1, 3), 0, 1, 4));
        let expect = XiElement::from_terms(
            1,
            3,
            4,
            [
                (XiKey { alpha: q(1, 3), m: 1, j: 1 }, vec![Coeff::from_ratio(3, 4)]),
                (XiKey { alpha: q(1, 3), m: 1, j: 0 }, vec![Coeff::from_ratio(-9, 16)]),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
        assert_eq!(xi_act_a(&mono(q(1, 1), 2, 2, 4)), mono(q(1, 1), 3, 2, 4));
        assert!(xi_act_a(&mono(q(1, 1), 4, 0, 4)).is_zero());
    }

    #[test]
    fn relation_on_symbols() {
        for j in 0..=3 {
            for m in 0..3 {
                assert!(xi_relation_residual(&mono(q(2, 5), m, j, 6)).is_zero());
            }
        }
    }

    #[test]
    fn simple_pole_examples() {
        assert_eq!(xi_check_simple_pole(&q(1, 1), 0).unwrap(), (q(2, 1), true));
        assert_eq!(xi_check_simple_pole(&q(1, 2), 0).unwrap(), (q(3, 2), true));
        assert!(xi_check_simple_pole(&q(3, 2), 0).is_err());
        assert!(xi_check_simple_pole(&q(0, 1), 0).is_err());
    }
}
