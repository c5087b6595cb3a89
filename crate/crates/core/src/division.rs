//! Inversion of units and division with remainder by products
//! `P = (a - λ_1 b) S_1 (a - λ_2 b) S_2 ⋯ (a - λ_k b) S_k`.

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Monomial, Ordering};
use crate::error::{AlgebraError, Result};
use crate::gamma::gamma;
use crate::poly::{gaussian_rational_roots, real_rational_roots, UniPoly};
use crate::series::{APolynomial, BSeries};

/// Two-sided inverse of a unit in the truncated algebra.
///
/// Coefficients of `Y` with `X Y = 1` are solved degree by degree from the
/// product formula; every contribution to `y_{m,n}` other than `x_{0,0} y_{m,n}`
/// comes from a `y` of strictly lower total degree.
pub fn invert(x: &AlgebraElement) -> Result<AlgebraElement> {
    let c0 = x.constant_term();
    if c0.is_zero() {
        return Err(AlgebraError::ZeroConstantTerm);
    }
    let c0_inv = c0.inv()?;
    let x = x.to_left().scale(&c0_inv);
    let order = x.order();
    let xs: Vec<(Monomial, Coeff)> = x.terms().filter(|(m, _)| m.degree() > 0).map(|(m, c)| (m, c.clone())).collect();

    // y[(m, n)] dense by (total degree, m)
    let idx = |m: u32, n: u32| -> usize {
        let d = (m + n) as usize;
        d * (d + 1) / 2 + m as usize
    };
    let size = idx(0, order + 1);
    let mut y: Vec<Coeff> = vec![Coeff::zero(); size];
    y[0] = Coeff::one();
    for d in 1..=order {
        for m in 0..=d {
            let n = d - m;
            let mut s = Coeff::zero();
            for (mono, xc) in &xs {
                let (p, q) = (mono.p, mono.q);
                if p > m || q > n || p + q > d {
                    continue;
                }
                for j in 0..=(n - q) {
                    let p2 = m - p + j;
                    let q2 = n - q - j;
                    let yv = &y[idx(p2, q2)];
                    if yv.is_zero() {
                        continue;
                    }
                    let g = gamma(p2, q, j as i64);
                    if g.is_zero() {
                        continue;
                    }
                    let mut t = &(xc * yv) * &Coeff::from(g);
                    if j % 2 == 1 {
                        t = -t;
                    }
                    s += &t;
                }
            }
            y[idx(m, n)] = -s;
        }
    }
    let mut terms = Vec::new();
    for d in 0..=order {
        for m in 0..=d {
            terms.push((m, d - m, &y[idx(m, d - m)] * &c0_inv));
        }
    }
    Ok(AlgebraElement::from_terms(order, Ordering::Left, terms))
}

/// `X = Q (a - λ b) + R` with `R` in `B`.
///
/// `Q` has order `N - 1`; `R` has order `N`. Computed by applying `τ_λ`, splitting
/// off the `a`-free part of the right normal form, and applying `τ_{-λ}` to the
/// quotient.
pub fn divide_linear(x: &AlgebraElement, lambda: &Coeff) -> (AlgebraElement, BSeries) {
    let order = x.order();
    let shifted = x.tau(lambda).to_right();
    let mut quot = Vec::new();
    let mut rem = Vec::new();
    for (m, c) in shifted.terms() {
        if m.p == 0 {
            rem.push((0, m.q, c.clone()));
        } else {
            quot.push((m.p - 1, m.q, c.clone()));
        }
    }
    let q = AlgebraElement::from_terms(order.saturating_sub(1), Ordering::Right, quot)
        .tau(&-lambda)
        .to_left();
    let r = BSeries::from_element(&AlgebraElement::from_terms(order, Ordering::Left, rem))
        .expect("a-free by construction");
    (q, r)
}

/// Closed-form quotient and remainder of `a^m ÷ (a - λ b)`:
/// `Q = Σ_{i<m} γ_i(λ) a^{m-1-i} b^i`, `R = γ_m(λ) b^m` with
/// `γ_i(λ) = λ (λ+1) ⋯ (λ+i-1)`.
pub fn power_division_closed_form(m: u32, lambda: &Coeff, order: u32) -> Result<(AlgebraElement, BSeries)> {
    if m == 0 {
        return Err(AlgebraError::InvalidInput("power must be at least 1".into()));
    }
    let mut rising = Coeff::one();
    let mut q_terms = Vec::with_capacity(m as usize);
    for i in 0..m {
        q_terms.push((m - 1 - i, i, rising.clone()));
        rising = &rising * &(lambda + &Coeff::from(i as i64));
    }
    let q = AlgebraElement::from_terms(order.saturating_sub(1), Ordering::Left, q_terms);
    let r = BSeries::monomial(m, rising, order);
    Ok((q, r))
}

/// `(a - λ_1 b) S_1 ⋯ (a - λ_k b) S_k` with every `S_i` a unit of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredProduct {
    order: u32,
    factors: Vec<(Coeff, BSeries)>,
}

impl FactoredProduct {
    pub fn new(order: u32, factors: Vec<(Coeff, BSeries)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(AlgebraError::InvalidInput("a product needs at least one factor".into()));
        }
        for (_, s) in &factors {
            if s.order() < order {
                return Err(AlgebraError::OrderMismatch(order, s.order()));
            }
            if !s.is_unit() {
                return Err(AlgebraError::ZeroConstantTerm);
            }
        }
        let factors = factors.into_iter().map(|(l, s)| (l, s.with_order(order))).collect();
        Ok(FactoredProduct { order, factors })
    }

    /// All `S_i = 1`.
    pub fn linear(order: u32, lambdas: &[Coeff]) -> Result<Self> {
        Self::new(order, lambdas.iter().map(|l| (l.clone(), BSeries::one(order))).collect())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rank(&self) -> u32 {
        self.factors.len() as u32
    }

    pub fn factors(&self) -> &[(Coeff, BSeries)] {
        &self.factors
    }

    pub fn expand(&self) -> AlgebraElement {
        expand_factors(&self.factors, self.order)
    }
}

fn linear_factor(lambda: &Coeff, order: u32) -> AlgebraElement {
    &AlgebraElement::a(order) - &AlgebraElement::b(order).scale(lambda)
}

fn expand_factors(factors: &[(Coeff, BSeries)], order: u32) -> AlgebraElement {
    factors.iter().fold(AlgebraElement::one(order), |acc, (l, s)| {
        &(&acc * &linear_factor(l, order)) * s.as_element()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    /// Order `N - k`.
    pub quotient: AlgebraElement,
    /// `a`-degree at most `k - 1`, order `N`.
    pub remainder: APolynomial,
}

/// `X = Q P + R` with `deg_a R ≤ k - 1`, by peeling factors from the right.
pub fn divide(x: &AlgebraElement, p: &FactoredProduct) -> Result<DivisionResult> {
    let order = p.order();
    if x.order() != order {
        return Err(AlgebraError::OrderMismatch(x.order(), order));
    }
    let k = p.rank();
    let (q, r) = divide_rec(&x.to_left(), p.factors(), order)?;
    let remainder = APolynomial::from_element_bounded(&r, k - 1)?;
    Ok(DivisionResult { quotient: q.with_order(order.saturating_sub(k)), remainder })
}

fn divide_rec(x: &AlgebraElement, factors: &[(Coeff, BSeries)], order: u32) -> Result<(AlgebraElement, AlgebraElement)> {
    let (lambda, s) = &factors[0];
    let s_inv = s.inverse()?;
    if factors.len() == 1 {
        let (q, r) = divide_linear(&(x * s_inv.as_element()), lambda);
        return Ok((q.with_order(order), r.mul(s).into_element()));
    }
    let tail = &factors[1..];
    let (q0, r0) = divide_rec(x, tail, order)?;
    let (q1, r1) = divide_linear(&(&q0 * s_inv.as_element()), lambda);
    let tail_product = expand_factors(tail, order);
    let r = &r0 + &(r1.mul(s).as_element() * &tail_product);
    Ok((q1.with_order(order), r))
}

/// For `P` homogeneous of degree `m` with `a^m` coefficient 1, the polynomial
/// `ρ_P` such that the remainder of `P ÷ (a - λ b)` is `ρ_P(λ) b^m`.
/// Obtained by interpolation at `λ = 0, 1, …, m`.
pub fn remainder_polynomial(p: &AlgebraElement) -> Result<UniPoly> {
    let m = p.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
    if !p.to_left().coeff(m, 0).is_one() {
        return Err(AlgebraError::NotMonic);
    }
    let points: Vec<Coeff> = (0..=m as i64).map(Coeff::from).collect();
    let values: Vec<Coeff> = points.iter().map(|l| divide_linear(p, l).1.coeff(m)).collect();
    UniPoly::interpolate(&points, &values)
}

/// `P = unit · b^j · core · (a - λ_1 b) ⋯ (a - λ_r b)`; `core` is `None` when the
/// factorization is complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub b_power: u32,
    pub unit: Coeff,
    pub lambdas: Vec<Coeff>,
    /// Monic homogeneous part whose remainder polynomial has no Gaussian rational root.
    pub core: Option<AlgebraElement>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.core.is_none()
    }

    pub fn expand(&self, order: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::monomial(0, self.b_power, self.unit.clone(), order, Ordering::Left);
        if let Some(core) = &self.core {
            acc = &acc * &core.with_order(order);
        }
        for l in &self.lambdas {
            acc = &acc * &linear_factor(l, order);
        }
        acc
    }
}

/// Best-effort factorization of a homogeneous element into linear factors,
/// peeling right factors `(a - λ b)` at exact roots of the remainder polynomial.
pub fn factor_homogeneous(p: &AlgebraElement) -> Result<Factorization> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroElement);
    }
    let m = p.homogeneous_degree().ok_or(AlgebraError::NotHomogeneous)?;
    let order = p.order();
    let right = p.to_right();
    // right form Σ c_i b^i a^{m-i}
    let j = (0..=m).find(|&i| !right.coeff(m - i, i).is_zero()).expect("nonzero element");
    let unit = right.coeff(m - j, j);
    let unit_inv = unit.inv()?;
    let stripped = AlgebraElement::from_terms(
        order,
        Ordering::Right,
        right.terms().map(|(mo, c)| (mo.p, mo.q - j, c * &unit_inv)),
    );
    let mut current = stripped.to_left();
    let mut peeled: Vec<Coeff> = Vec::new();
    let mut core = None;
    for _ in 0..(m - j) {
        let rho = remainder_polynomial(&current)?;
        let root = real_rational_roots(&rho)
            .roots
            .first()
            .map(|r| r.0.clone())
            .or_else(|| gaussian_rational_roots(&rho).roots.first().map(|r| r.0.clone()));
        let Some(lambda) = root else {
            core = Some(current.clone());
            break;
        };
        let (q, r) = divide_linear(&current, &lambda);
        debug_assert!(r.is_zero());
        current = q.with_order(order);
        peeled.push(lambda);
    }
    peeled.reverse();
    Ok(Factorization { b_power: j, unit, lambdas: peeled, core })
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

    #[test]
    fn invert_examples() {
        let n = 6;
        let geo_b = invert(&left(n, &[(0, 0, 1), (0, 1, -1)])).unwrap();
        assert_eq!(geo_b, AlgebraElement::from_terms(n, Ordering::Left, (0..=n).map(|q| (0, q, c(1)))));
        let geo_a = invert(&left(n, &[(0, 0, 1), (1, 0, -1)])).unwrap();
        assert_eq!(geo_a, AlgebraElement::from_terms(n, Ordering::Left, (0..=n).map(|p| (p, 0, c(1)))));
        let y = invert(&left(4, &[(0, 0, 1), (1, 1, -1)])).unwrap();
        assert_eq!(y, left(4, &[(0, 0, 1), (1, 1, 1), (2, 2, 1), (1, 3, -1)]));
        assert_eq!(invert(&AlgebraElement::a(3)), Err(AlgebraError::ZeroConstantTerm));
        let u = left(5, &[(0, 0, 3), (1, 2, 2), (0, 1, -1)]);
        let ui = invert(&u).unwrap();
        assert_eq!(&u * &ui, AlgebraElement::one(5));
        assert_eq!(&ui * &u, AlgebraElement::one(5));
    }

    #[test]
    fn divide_linear_examples() {
        let n = 6;
        let l = Coeff::from_ratio(3, 7);
        let (q, r) = divide_linear(&AlgebraElement::a(n), &l);
        assert_eq!(q, AlgebraElement::one(n - 1));
        assert_eq!(r, BSeries::monomial(1, l.clone(), n));
        let (q, r) = divide_linear(&left(n, &[(0, 3, 1)]), &l);
        assert!(q.is_zero());
        assert_eq!(r, BSeries::monomial(3, c(1), n));
        let (q, r) = divide_linear(&left(n, &[(2, 0, 1)]), &c(1));
        assert_eq!(q, left(n - 1, &[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(r, BSeries::monomial(2, c(2), n));
    }

    #[test]
    fn closed_form_examples() {
        let l = Coeff::from_ratio(-5, 2);
        let (q, r) = power_division_closed_form(1, &l, 4).unwrap();
        assert_eq!(q, AlgebraElement::one(3));
        assert_eq!(r, BSeries::monomial(1, l, 4));
        let (q, r) = power_division_closed_form(2, &c(1), 4).unwrap();
        assert_eq!(q, left(3, &[(1, 0, 1), (0, 1, 1)]));
        assert_eq!(r, BSeries::monomial(2, c(2), 4));
        let (q, r) = power_division_closed_form(4, &c(0), 6).unwrap();
        assert_eq!(q, left(5, &[(3, 0, 1)]));
        assert!(r.is_zero());
        assert!(power_division_closed_form(0, &c(0), 4).is_err());
    }

    #[test]
    fn divide_examples() {
        let n = 6;
        let p = FactoredProduct::linear(n, &[c(1), c(2)]).unwrap();
        let d = divide(&p.expand(), &p).unwrap();
        assert_eq!(d.quotient, AlgebraElement::one(n - 2));
        assert!(d.remainder.is_zero());
        let d = divide(&AlgebraElement::b(n), &p).unwrap();
        assert!(d.quotient.is_zero());
        assert!(d.remainder.to_element().same_value(&AlgebraElement::b(n)).unwrap());
        let d = divide(&left(n, &[(2, 0, 1)]), &p).unwrap();
        assert_eq!(d.quotient, AlgebraElement::one(n - 2));
        assert!(d.remainder.to_element().same_value(&left(n, &[(1, 1, 3), (0, 2, -3)])).unwrap());
    }

    #[test]
    fn divide_rejects_non_units() {
        let s = BSeries::monomial(1, c(1), 4);
        assert_eq!(FactoredProduct::new(4, vec![(c(1), s)]), Err(AlgebraError::ZeroConstantTerm));
    }

    #[test]
    fn remainder_polynomial_examples() {
        let n = 6;
        let rho = remainder_polynomial(&left(n, &[(3, 0, 1)])).unwrap();
        assert_eq!(rho, UniPoly::from_roots(&[c(0), c(-1), c(-2)]));
        let l0 = Coeff::from_ratio(5, 3);
        let lin = &AlgebraElement::a(n) - &AlgebraElement::b(n).scale(&l0);
        assert_eq!(remainder_polynomial(&lin).unwrap(), UniPoly::linear(&l0));
        let p = left(n, &[(2, 0, 1), (1, 1, -3), (0, 2, 3)]);
        let rho = remainder_polynomial(&p).unwrap();
        for root in [c(0), c(2)] {
            assert!(rho.eval(&root).is_zero());
            assert!(divide_linear(&p, &root).1.is_zero());
        }
        assert_eq!(remainder_polynomial(&left(n, &[(2, 0, 1), (1, 0, 1)])), Err(AlgebraError::NotHomogeneous));
        assert_eq!(remainder_polynomial(&left(n, &[(2, 0, 2)])), Err(AlgebraError::NotMonic));
    }

    #[test]
    fn factor_examples() {
        let n = 6;
        let f = factor_homogeneous(&left(n, &[(4, 0, 1)])).unwrap();
        assert_eq!((f.b_power, f.lambdas.clone()), (0, vec![c(0); 4]));
        let p = left(n, &[(2, 0, 1), (1, 1, -3), (0, 2, 3)]);
        let f = factor_homogeneous(&p).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.lambdas, vec![c(1), c(2)]);
        assert_eq!(f.expand(n), p);
        // (a - b)^3 = a^3 - 3 b a^2
        let cube = AlgebraElement::from_terms(n, Ordering::Right, [(3, 0, c(1)), (2, 1, c(-3))]);
        let f = factor_homogeneous(&cube).unwrap();
        assert!(f.is_complete());
        assert!(f.expand(n).same_value(&cube).unwrap());
        // b^2 (a - 3b) scaled
        let p = &left(n, &[(0, 2, 5)]) * &linear_factor(&c(3), n);
        let f = factor_homogeneous(&p).unwrap();
        assert_eq!(f.b_power, 2);
        assert_eq!(f.unit, c(5));
        assert_eq!(f.expand(n), p);
        assert_eq!(factor_homogeneous(&AlgebraElement::zero(n)), Err(AlgebraError::ZeroElement));
    }
}
