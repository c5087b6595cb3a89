//! Seeded generators of sparse random inputs for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Ordering};
use crate::matrix::Matrix;
use crate::module::{DifferentialSystem, ModuleElement};
use crate::series::BSeries;
use crate::xi::{XiElement, XiKey};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut TestRng, num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-num..=num)), BigInt::from(rng.gen_range(1..=den)))
}

/// Small Gaussian rational; the imaginary part is nonzero about a quarter of the time.
pub fn coeff(rng: &mut TestRng) -> Coeff {
    let re = rational(rng, 5, 3);
    let im = if rng.gen_bool(0.25) { rational(rng, 3, 2) } else { BigRational::zero() };
    Coeff::new(re, im)
}

pub fn nonzero_coeff(rng: &mut TestRng) -> Coeff {
    loop {
        let c = coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn real_coeff(rng: &mut TestRng) -> Coeff {
    Coeff::real(rational(rng, 6, 4))
}

/// Up to `max_terms` monomials of total degree `≤ order`.
pub fn element(rng: &mut TestRng, order: u32, max_terms: usize) -> AlgebraElement {
    let n = rng.gen_range(1..=max_terms.max(1));
    let ordering = if rng.gen_bool(0.5) { Ordering::Left } else { Ordering::Right };
    let terms: Vec<(u32, u32, Coeff)> = (0..n)
        .map(|_| {
            let d = rng.gen_range(0..=order);
            let p = rng.gen_range(0..=d);
            (p, d - p, coeff(rng))
        })
        .collect();
    AlgebraElement::from_terms(order, ordering, terms)
}

/// An element with nonzero constant term.
pub fn unit(rng: &mut TestRng, order: u32, max_terms: usize) -> AlgebraElement {
    let x = element(rng, order, max_terms).to_left();
    let c0 = x.constant_term();
    let target = nonzero_coeff(rng);
    &x + &AlgebraElement::scalar(&target - &c0, order)
}

pub fn homogeneous(rng: &mut TestRng, degree: u32, order: u32, real: bool) -> AlgebraElement {
    let mut terms = Vec::new();
    for p in 0..=degree {
        if rng.gen_bool(0.6) {
            terms.push((p, degree - p, if real { real_coeff(rng) } else { coeff(rng) }));
        }
    }
    let x = AlgebraElement::from_terms(order, Ordering::Left, terms);
    if x.is_zero() {
        AlgebraElement::monomial(degree, 0, Coeff::from(1), order, Ordering::Left)
    } else {
        x
    }
}

pub fn bseries(rng: &mut TestRng, order: u32, max_terms: usize) -> BSeries {
    let mut coeffs = vec![Coeff::zero(); order as usize + 1];
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let q = rng.gen_range(0..=order as usize);
        coeffs[q] = coeff(rng);
    }
    BSeries::from_coeffs(order, coeffs)
}

pub fn bseries_unit(rng: &mut TestRng, order: u32, max_terms: usize) -> BSeries {
    let s = bseries(rng, order, max_terms);
    let c0 = s.constant_term();
    s.add(&BSeries::from_coeffs(order, [&nonzero_coeff(rng) - &c0]))
}

/// Small rational entries, about 30% of them zero.
pub fn matrix(rng: &mut TestRng, k: usize) -> Matrix {
    Matrix::new(
        (0..k)
            .map(|_| (0..k).map(|_| if rng.gen_bool(0.7) { Coeff::real(rational(rng, 3, 2)) } else { Coeff::zero() }).collect())
            .collect(),
    )
    .expect("square")
}

pub fn module_element(rng: &mut TestRng, k: usize, order: u32) -> ModuleElement {
    ModuleElement::from_dense(
        order,
        (0..k)
            .map(|_| (0..=order).map(|_| if rng.gen_bool(0.4) { coeff(rng) } else { Coeff::zero() }).collect())
            .collect(),
    )
}

pub fn system(rng: &mut TestRng, k: usize, degree: usize) -> DifferentialSystem {
    DifferentialSystem::new(k, (0..=degree).map(|_| matrix(rng, k)).collect()).expect("consistent sizes")
}

/// `α` in `(0, 1]` with denominator at most 6.
pub fn alpha(rng: &mut TestRng) -> BigRational {
    let den = rng.gen_range(1..=6i64);
    let num = rng.gen_range(1..=den);
    BigRational::new(num.into(), den.into())
}

pub fn xi_element(rng: &mut TestRng, dim: usize, log_depth: u32, max_m: u32, max_terms: usize) -> XiElement {
    let alphas: Vec<BigRational> = (0..2).map(|_| alpha(rng)).collect();
    let terms: Vec<(XiKey, Vec<Coeff>)> = (0..rng.gen_range(1..=max_terms.max(1)))
        .map(|_| {
            let key = XiKey {
                alpha: alphas.choose(rng).expect("nonempty").clone(),
                m: rng.gen_range(0..=max_m),
                j: rng.gen_range(0..=log_depth),
            };
            (key, (0..dim).map(|_| coeff(rng)).collect())
        })
        .collect();
    XiElement::from_terms(dim, log_depth, max_m, terms).expect("valid symbols")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let x = element(&mut rng(7), 8, 10);
        let y = element(&mut rng(7), 8, 10);
        assert_eq!(x, y);
        let u = unit(&mut rng(3), 6, 8);
        assert!(!u.constant_term().is_zero());
        assert!(bseries_unit(&mut rng(4), 6, 5).is_unit());
        assert!(homogeneous(&mut rng(5), 4, 6, true).homogeneous_degree() == Some(4));
    }
}
