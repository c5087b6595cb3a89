//! JSON documents for elements, products, series, matrices, systems and
//! multivalued expansions. Rationals are written `"num/den"`; plain integers
//! and `"num"` strings are accepted on input.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::coeff::{format_rational, parse_rational, Coeff};
use crate::division::{DivisionResult, FactoredProduct, Factorization};
use crate::element::{AlgebraElement, Ordering};
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::module::{DifferentialSystem, SeriesMatrix, SpectrumReport};
use crate::oracle::PolySeries;
use crate::poly::UniPoly;
use crate::series::{APolynomial, BSeries};
use crate::xi::{XiElement, XiKey};

/// A rational field: `"n/d"`, `"n"`, or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rat {
    Text(String),
    Int(i64),
}

impl Rat {
    pub fn parse(&self) -> Result<BigRational> {
        match self {
            Rat::Text(s) => parse_rational(s),
            Rat::Int(n) => Ok(BigRational::from_integer(BigInt::from(*n))),
        }
    }
}

impl From<&BigRational> for Rat {
    fn from(r: &BigRational) -> Self {
        Rat::Text(format_rational(r))
    }
}

fn zero_rat() -> Rat {
    Rat::Int(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub re: Rat,
    #[serde(default = "zero_rat")]
    pub im: Rat,
}

impl CoeffJson {
    pub fn from_coeff(c: &Coeff) -> Self {
        CoeffJson { re: (&c.re).into(), im: (&c.im).into() }
    }

    pub fn to_coeff(&self) -> Result<Coeff> {
        Ok(Coeff::new(self.re.parse()?, self.im.parse()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub p: u32,
    pub q: u32,
    pub re: Rat,
    #[serde(default = "zero_rat")]
    pub im: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub order: u32,
    pub ordering: Ordering,
    pub terms: Vec<TermJson>,
}

impl ElementJson {
    pub fn from_element(x: &AlgebraElement) -> Self {
        ElementJson {
            order: x.order(),
            ordering: x.ordering(),
            terms: x
                .terms()
                .map(|(m, c)| TermJson { p: m.p, q: m.q, re: (&c.re).into(), im: (&c.im).into() })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<AlgebraElement> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.p, t.q, Coeff::new(t.re.parse()?, t.im.parse()?))))
            .collect::<Result<Vec<_>>>()?;
        for (p, q, _) in &terms {
            if p + q > self.order {
                return Err(AlgebraError::DegreeTooHigh { got: p + q, max: self.order });
            }
        }
        Ok(AlgebraElement::from_terms(self.order, self.ordering, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub lambda: CoeffJson,
    #[serde(rename = "S")]
    pub s: ElementJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredProductJson {
    pub factors: Vec<FactorJson>,
}

impl FactoredProductJson {
    pub fn from_product(p: &FactoredProduct) -> Self {
        FactoredProductJson {
            factors: p
                .factors()
                .iter()
                .map(|(l, s)| FactorJson { lambda: CoeffJson::from_coeff(l), s: ElementJson::from_element(s.as_element()) })
                .collect(),
        }
    }

    /// Each `S` must carry order at least `order`.
    pub fn to_product(&self, order: u32) -> Result<FactoredProduct> {
        let factors = self
            .factors
            .iter()
            .map(|f| Ok((f.lambda.to_coeff()?, BSeries::from_element(&f.s.to_element()?)?)))
            .collect::<Result<Vec<_>>>()?;
        FactoredProduct::new(order, factors)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    pub m: u32,
    pub re: Rat,
    #[serde(default = "zero_rat")]
    pub im: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolySeriesJson {
    pub degree: u32,
    pub terms: Vec<SeriesTermJson>,
}

impl PolySeriesJson {
    pub fn from_series(f: &PolySeries) -> Self {
        PolySeriesJson {
            degree: f.degree(),
            terms: f.terms().map(|(m, c)| SeriesTermJson { m, re: (&c.re).into(), im: (&c.im).into() }).collect(),
        }
    }

    pub fn to_series(&self) -> Result<PolySeries> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.m > self.degree {
                    return Err(AlgebraError::DegreeTooHigh { got: t.m, max: self.degree });
                }
                Ok((t.m, Coeff::new(t.re.parse()?, t.im.parse()?)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PolySeries::from_terms(self.degree, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub k: usize,
    pub entries: Vec<Vec<CoeffJson>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixJson {
            k: m.k(),
            entries: m.rows().iter().map(|r| r.iter().map(CoeffJson::from_coeff).collect()).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.entries.len() != self.k {
            return Err(AlgebraError::SizeMismatch { expected: self.k, got: self.entries.len() });
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(CoeffJson::to_coeff).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::new(rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemJson {
    pub k: usize,
    pub coeffs: Vec<MatrixJson>,
}

impl SystemJson {
    pub fn to_system(&self) -> Result<DifferentialSystem> {
        DifferentialSystem::new(self.k, self.coeffs.iter().map(MatrixJson::to_matrix).collect::<Result<Vec<_>>>()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiTermJson {
    pub alpha: Rat,
    pub m: u32,
    pub j: u32,
    pub c: Vec<CoeffJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiJson {
    pub dim: usize,
    pub log_depth: u32,
    /// Truncation bound on `m`; defaults to one more than the largest `m` present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_m: Option<u32>,
    pub terms: Vec<XiTermJson>,
}

impl XiJson {
    pub fn from_xi(xi: &XiElement) -> Self {
        XiJson {
            dim: xi.dim(),
            log_depth: xi.log_depth(),
            max_m: Some(xi.max_m()),
            terms: xi
                .terms()
                .map(|(k, c)| XiTermJson {
                    alpha: (&k.alpha).into(),
                    m: k.m,
                    j: k.j,
                    c: c.iter().map(CoeffJson::from_coeff).collect(),
                })
                .collect(),
        }
    }

    pub fn to_xi(&self) -> Result<XiElement> {
        let max_m = self.max_m.unwrap_or_else(|| self.terms.iter().map(|t| t.m).max().unwrap_or(0) + 1);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let key = XiKey { alpha: t.alpha.parse()?, m: t.m, j: t.j };
                Ok((key, t.c.iter().map(CoeffJson::to_coeff).collect::<Result<Vec<_>>>()?))
            })
            .collect::<Result<Vec<_>>>()?;
        XiElement::from_terms(self.dim, self.log_depth, max_m, terms)
    }
}

/// Coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: Option<usize>,
    pub coeffs: Vec<CoeffJson>,
}

impl PolyJson {
    pub fn from_poly(p: &UniPoly) -> Self {
        PolyJson { degree: p.degree(), coeffs: p.coeffs().iter().map(CoeffJson::from_coeff).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisionJson {
    pub quotient: ElementJson,
    pub remainder: ElementJson,
}

impl DivisionJson {
    pub fn new(q: &AlgebraElement, r: &AlgebraElement) -> Self {
        DivisionJson { quotient: ElementJson::from_element(q), remainder: ElementJson::from_element(r) }
    }

    pub fn from_result(d: &DivisionResult) -> Self {
        Self::new(&d.quotient, &d.remainder.to_element())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub b_power: u32,
    pub unit: CoeffJson,
    pub lambdas: Vec<CoeffJson>,
    pub complete: bool,
    pub core: Option<ElementJson>,
}

impl FactorizationJson {
    pub fn from_factorization(f: &Factorization) -> Self {
        FactorizationJson {
            b_power: f.b_power,
            unit: CoeffJson::from_coeff(&f.unit),
            lambdas: f.lambdas.iter().map(CoeffJson::from_coeff).collect(),
            complete: f.is_complete(),
            core: f.core.as_ref().map(ElementJson::from_element),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueJson {
    pub value: CoeffJson,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub geometric: bool,
    pub eigenvalues: Vec<EigenvalueJson>,
    pub diagnostic: Option<String>,
}

impl SpectrumJson {
    pub fn from_report(r: &SpectrumReport) -> Self {
        SpectrumJson {
            geometric: r.geometric,
            eigenvalues: r
                .eigenvalues
                .iter()
                .map(|(v, m)| EigenvalueJson { value: CoeffJson::from_coeff(v), multiplicity: *m })
                .collect(),
            diagnostic: r.diagnostic.clone(),
        }
    }
}

/// `X(b) = Σ_j x_j b^j`, one matrix per power of `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesMatrixJson {
    pub k: usize,
    pub order: u32,
    pub coeffs: Vec<MatrixJson>,
}

impl SeriesMatrixJson {
    pub fn from_series_matrix(x: &SeriesMatrix) -> Self {
        SeriesMatrixJson { k: x.k(), order: x.order(), coeffs: x.coeffs().iter().map(MatrixJson::from_matrix).collect() }
    }
}

pub fn apoly_to_json(r: &APolynomial) -> ElementJson {
    ElementJson::from_element(&r.to_element())
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_round_trip() {
        let x = AlgebraElement::from_terms(4, Ordering::Right, [(1, 2, Coeff::from_ratio(-1, 2)), (0, 0, Coeff::i())]);
        let text = to_json(&ElementJson::from_element(&x));
        assert!(text.contains("\"-1/2\""));
        let back: ElementJson = from_json(&text).unwrap();
        assert_eq!(back.to_element().unwrap(), x);
    }

    #[test]
    fn accepts_plain_integers() {
        let doc = r#"{"order": 3, "ordering": "left", "terms": [{"p": 1, "q": 1, "re": 2}, {"p": 0, "q": 0, "re": "1", "im": "3/4"}]}"#;
        let x = from_json::<ElementJson>(doc).unwrap().to_element().unwrap();
        assert_eq!(x.coeff(1, 1), Coeff::from(2));
        assert_eq!(x.constant_term(), Coeff::new(BigRational::from_integer(1.into()), BigRational::new(3.into(), 4.into())));
        let bad = r#"{"order": 1, "ordering": "left", "terms": [{"p": 1, "q": 1, "re": 2}]}"#;
        assert!(from_json::<ElementJson>(bad).unwrap().to_element().is_err());
        assert!(from_json::<ElementJson>("{").is_err());
    }

    #[test]
    fn product_and_matrix() {
        let doc = r#"{"factors": [{"lambda": {"re": "1"}, "S": {"order": 6, "ordering": "left", "terms": [{"p": 0, "q": 0, "re": "1"}]}},
                                  {"lambda": {"re": "2", "im": "0"}, "S": {"order": 6, "ordering": "left", "terms": [{"p": 0, "q": 0, "re": "1"}]}}]}"#;
        let p = from_json::<FactoredProductJson>(doc).unwrap().to_product(6).unwrap();
        assert_eq!(p, FactoredProduct::linear(6, &[Coeff::from(1), Coeff::from(2)]).unwrap());
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]).unwrap();
        let back = from_json::<MatrixJson>(&to_json(&MatrixJson::from_matrix(&m))).unwrap().to_matrix().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn xi_round_trip() {
        let doc = r#"{"dim": 1, "log_depth": 1, "terms": [{"alpha": "1/2", "m": 2, "j": 1, "c": [{"re": "3"}]}]}"#;
        let xi = from_json::<XiJson>(doc).unwrap().to_xi().unwrap();
        assert_eq!(xi.max_m(), 3);
        let back = from_json::<XiJson>(&to_json(&XiJson::from_xi(&xi))).unwrap().to_xi().unwrap();
        assert_eq!(back, xi);
    }
}
