//! Cyclic modules `B[a]/B[a]P` for a factored `P` of rank `k`, free over `B`
//! with basis `1, a, …, a^{k-1}`.

use crate::division::{divide, FactoredProduct};
use crate::element::AlgebraElement;
use crate::error::{AlgebraError, Result};
use crate::series::APolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fresco {
    p: FactoredProduct,
}

impl Fresco {
    pub fn new(p: FactoredProduct) -> Self {
        Fresco { p }
    }

    pub fn product(&self) -> &FactoredProduct {
        &self.p
    }

    pub fn rank(&self) -> u32 {
        self.p.rank()
    }

    pub fn order(&self) -> u32 {
        self.p.order()
    }

    /// Canonical representative of the class of `x`.
    pub fn reduce(&self, x: &AlgebraElement) -> Result<APolynomial> {
        Ok(divide(&x.with_order(self.order()), &self.p)?.remainder)
    }

    /// The class of `1`.
    pub fn generator(&self) -> APolynomial {
        APolynomial::from_element(&AlgebraElement::one(self.order()))
    }

    /// Canonical representative of `X · r`.
    pub fn act(&self, x: &AlgebraElement, r: &APolynomial) -> Result<APolynomial> {
        if let Some(d) = r.a_degree() {
            if d >= self.rank() {
                return Err(AlgebraError::DegreeTooHigh { got: d, max: self.rank() - 1 });
            }
        }
        let order = self.order();
        if x.order() < order {
            return Err(AlgebraError::OrderMismatch(x.order(), order));
        }
        let y = &x.with_order(order) * &r.to_element().with_order(order);
        self.reduce(&y)
    }
}

/// `fresco_act(X, r, F)`.
pub fn fresco_act(x: &AlgebraElement, r: &APolynomial, f: &Fresco) -> Result<APolynomial> {
    f.act(x, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coeff;
    use crate::element::Ordering;

    fn c(n: i64) -> Coeff {
        Coeff::from(n)
    }

    #[test]
    fn e1_law() {
        let n = 6;
        let f = Fresco::new(FactoredProduct::linear(n, &[c(1)]).unwrap());
        let got = f.act(&AlgebraElement::a(n), &f.generator()).unwrap();
        assert_eq!(got, APolynomial::from_element(&AlgebraElement::b(n)));
        let r = APolynomial::from_element(&AlgebraElement::from_terms(n, Ordering::Left, [(0, 2, c(3)), (0, 0, c(1))]));
        assert_eq!(f.act(&AlgebraElement::one(n), &r).unwrap(), r);
    }

    #[test]
    fn rank_two_example() {
        let n = 6;
        let f = Fresco::new(FactoredProduct::linear(n, &[c(1), c(2)]).unwrap());
        let a = APolynomial::from_element(&AlgebraElement::a(n));
        let got = f.act(&AlgebraElement::a(n), &a).unwrap();
        let expect = AlgebraElement::from_terms(n, Ordering::Left, [(1, 1, c(3)), (0, 2, c(-3))]);
        assert_eq!(got, APolynomial::from_element(&expect));
        let too_big = APolynomial::from_element(&AlgebraElement::monomial(2, 0, c(1), n, Ordering::Left));
        assert!(f.act(&AlgebraElement::one(n), &too_big).is_err());
    }
}
