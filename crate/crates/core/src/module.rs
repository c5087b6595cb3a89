//! Modules that are free of finite rank over `B`, written in a basis
//! `e = (e_1, …, e_k)`.
//!
//! Coordinates are columns: `v = Σ_i Z_i(b) e_i`. A module law
//! `a e_i = Σ_l X(b)_{li} b e_l` is written `ae = X(b)be`.

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::element::{AlgebraElement, Ordering};
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::poly::{real_rational_roots, UniPoly};
use crate::series::BSeries;

/// `Σ_i Z_i(b) e_i` with every `Z_i` known modulo `b^{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    order: u32,
    /// `coords[i][j]` is the coefficient of `b^j e_i`.
    coords: Vec<Vec<Coeff>>,
}

impl ModuleElement {
    pub fn zero(k: usize, order: u32) -> Self {
        ModuleElement { order, coords: vec![vec![Coeff::zero(); order as usize + 1]; k] }
    }

    /// `e_i`.
    pub fn basis(i: usize, k: usize, order: u32) -> Self {
        let mut v = Self::zero(k, order);
        v.coords[i][0] = Coeff::one();
        v
    }

    pub fn from_series(order: u32, coords: &[BSeries]) -> Self {
        let mut v = Self::zero(coords.len(), order);
        for (i, s) in coords.iter().enumerate() {
            for j in 0..=order.min(s.order()) {
                v.coords[i][j as usize] = s.coeff(j);
            }
        }
        v
    }

    /// `coords[i]` lists the coefficients of `b^0, b^1, …` in coordinate `i`.
    pub fn from_dense(order: u32, coords: Vec<Vec<Coeff>>) -> Self {
        let mut v = Self::zero(coords.len(), order);
        for (i, col) in coords.into_iter().enumerate() {
            for (j, c) in col.into_iter().enumerate().take(order as usize + 1) {
                v.coords[i][j] = c;
            }
        }
        v
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: usize, j: u32) -> &Coeff {
        &self.coords[i][j as usize]
    }

    pub fn series(&self) -> Vec<BSeries> {
        self.coords.iter().map(|c| BSeries::from_coeffs(self.order, c.iter().cloned())).collect()
    }

    pub fn with_order(&self, order: u32) -> Self {
        Self::from_dense(order, self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().flatten().all(Zero::is_zero)
    }

    /// Least `j` with a nonzero `b^j` coefficient.
    pub fn valuation(&self) -> Option<u32> {
        (0..=self.order).find(|&j| self.coords.iter().any(|c| !c[j as usize].is_zero()))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(AlgebraError::SizeMismatch { expected: self.rank(), got: other.rank() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let mut out = self.with_order(order);
        for (i, col) in other.coords.iter().enumerate() {
            for j in 0..=order as usize {
                out.coords[i][j] += &col[j];
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        ModuleElement { order: self.order, coords: self.coords.iter().map(|col| col.iter().map(|x| x * c).collect()).collect() }
    }

    /// Multiplication by `b^s`.
    pub fn shift(&self, s: u32) -> Self {
        let mut out = Self::zero(self.rank(), self.order);
        for (i, col) in self.coords.iter().enumerate() {
            for j in 0..=self.order.saturating_sub(s) as usize {
                out.coords[i][j + s as usize] = col[j].clone();
            }
        }
        out
    }

    /// `b^2 dZ/db`, i.e. the commutator `[a, Z(b)]` applied coordinatewise.
    fn b2_derivative(&self) -> Self {
        let mut out = Self::zero(self.rank(), self.order);
        for (i, col) in self.coords.iter().enumerate() {
            for j in 1..self.order as usize {
                out.coords[i][j + 1] = &col[j] * &Coeff::from(j as i64);
            }
        }
        out
    }
}

/// `Z(b) = Σ_j z_j b^j` with `k × k` matrices `z_j`, `j ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMatrix {
    k: usize,
    coeffs: Vec<Matrix>,
}

impl SeriesMatrix {
    /// Pads with zero matrices up to `order`; drops terms past it.
    pub fn new(k: usize, order: u32, coeffs: Vec<Matrix>) -> Result<Self> {
        let mut coeffs = coeffs;
        for m in &coeffs {
            if m.k() != k {
                return Err(AlgebraError::SizeMismatch { expected: k, got: m.k() });
            }
        }
        coeffs.resize(order as usize + 1, Matrix::zero(k));
        Ok(SeriesMatrix { k, coeffs })
    }

    pub fn constant(m: Matrix, order: u32) -> Self {
        let k = m.k();
        Self::new(k, order, vec![m]).expect("sizes agree")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coeff(&self, j: u32) -> &Matrix {
        &self.coeffs[j as usize]
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    /// Coordinates of `Z(b) e_i`.
    pub fn column(&self, i: usize) -> ModuleElement {
        ModuleElement::from_dense(
            self.order(),
            (0..self.k).map(|l| self.coeffs.iter().map(|m| m.get(l, i).clone()).collect()).collect(),
        )
    }

    /// `Z(b) v` coordinatewise (Cauchy product).
    pub fn apply(&self, v: &ModuleElement) -> Result<ModuleElement> {
        if v.rank() != self.k {
            return Err(AlgebraError::SizeMismatch { expected: self.k, got: v.rank() });
        }
        let order = v.order().min(self.order());
        let mut out = ModuleElement::zero(self.k, order);
        for (d, m) in self.coeffs.iter().enumerate().take(order as usize + 1) {
            if m.is_zero() {
                continue;
            }
            for j in 0..=(order as usize - d) {
                let col: Vec<Coeff> = (0..self.k).map(|i| v.coords[i][j].clone()).collect();
                if col.iter().all(Zero::is_zero) {
                    continue;
                }
                for (l, x) in m.mul_vec(&col)?.into_iter().enumerate() {
                    out.coords[l][j + d] += &x;
                }
            }
        }
        Ok(out)
    }
}

/// `E(Θ)`: rank `k`, `ae = Θbe`, truncated at `b`-order `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplePoleModule {
    theta: Matrix,
    order: u32,
}

/// Outcome of the positivity test on the spectrum of `Θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub geometric: bool,
    /// Rational eigenvalues with multiplicities.
    pub eigenvalues: Vec<(Coeff, usize)>,
    pub diagnostic: Option<String>,
}

impl SimplePoleModule {
    pub fn new(theta: Matrix, order: u32) -> Self {
        SimplePoleModule { theta, order }
    }

    pub fn rank(&self) -> usize {
        self.theta.k()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    /// `Π_p = (Θ + (p-1)Id) ∘ ⋯ ∘ Θ` for `p ≤ max`, so that `a^p e = Π_p b^p e`.
    fn a_powers(&self, max: u32) -> Vec<Matrix> {
        let id = Matrix::identity(self.rank());
        let mut out = vec![id.clone()];
        for p in 1..=max {
            let shifted = self.theta.add(&id.scale(&Coeff::from(p as i64 - 1))).expect("same size");
            let next = shifted.mul(out.last().expect("nonempty")).expect("same size");
            out.push(next);
        }
        out
    }

    /// `Xe = Z(b)e` with `z_j = Σ_{p+q=j} x_{p,q} Π_p`, `X` read in right normal form.
    pub fn act_on_basis(&self, x: &AlgebraElement) -> SeriesMatrix {
        let order = self.order.min(x.order());
        let x = x.to_right();
        let pis = self.a_powers(x.a_degree().unwrap_or(0).min(order));
        let k = self.rank();
        let mut z = vec![Matrix::zero(k); order as usize + 1];
        for (m, c) in x.terms() {
            let j = m.p + m.q;
            if j > order {
                continue;
            }
            z[j as usize] = z[j as usize].add(&pis[m.p as usize].scale(c)).expect("same size");
        }
        SeriesMatrix::new(k, order, z).expect("same size")
    }

    /// `X · (Σ_i Z_i(b) e_i) = Σ_i (X Z_i(b)) e_i`.
    pub fn act(&self, x: &AlgebraElement, v: &ModuleElement) -> Result<ModuleElement> {
        if v.rank() != self.rank() {
            return Err(AlgebraError::SizeMismatch { expected: self.rank(), got: v.rank() });
        }
        let order = self.order.min(x.order()).min(v.order());
        let x = x.with_order(order);
        let k = self.rank();
        let mut out = ModuleElement::zero(k, order);
        for j in 0..=order {
            if (0..k).all(|i| v.coeff(i, j).is_zero()) {
                continue;
            }
            let xbj = &x * &AlgebraElement::monomial(0, j, Coeff::one(), order, Ordering::Left);
            let z = self.act_on_basis(&xbj);
            for i in 0..k {
                let c = v.coeff(i, j);
                if !c.is_zero() {
                    out = out.add(&z.column(i).scale(c))?;
                }
            }
        }
        Ok(out)
    }

    /// Minimal polynomial of `-Θ`.
    pub fn bernstein(&self) -> UniPoly {
        self.theta.scale(&-Coeff::one()).minimal_polynomial()
    }

    /// Whether every eigenvalue of `Θ` is a positive rational.
    pub fn is_geometric_spectrum(&self) -> SpectrumReport {
        let chi = self.theta.characteristic_polynomial();
        let search = real_rational_roots(&chi);
        let eigenvalues = search.roots.clone();
        let found: usize = eigenvalues.iter().map(|(_, m)| m).sum();
        let diagnostic = if found < self.rank() {
            Some(format!(
                "characteristic polynomial {chi} does not split over the rationals ({found} of {} roots found)",
                self.rank()
            ))
        } else {
            eigenvalues
                .iter()
                .find(|(r, _)| r.re <= num_rational::BigRational::zero())
                .map(|(r, _)| format!("eigenvalue {r} is not positive"))
        };
        SpectrumReport { geometric: diagnostic.is_none(), eigenvalues, diagnostic }
    }

    pub fn to_series_module(&self) -> SeriesPoleModule {
        SeriesPoleModule::new(SeriesMatrix::constant(self.theta.clone(), self.order))
    }
}

/// `ae = X(b)be` with a series matrix `X(b)`; truncated at the order of `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPoleModule {
    x: SeriesMatrix,
}

impl SeriesPoleModule {
    pub fn new(x: SeriesMatrix) -> Self {
        SeriesPoleModule { x }
    }

    pub fn rank(&self) -> usize {
        self.x.k()
    }

    pub fn order(&self) -> u32 {
        self.x.order()
    }

    pub fn matrix(&self) -> &SeriesMatrix {
        &self.x
    }

    /// `a (Z e) = X(b) b Z + b^2 Z'` in coordinates.
    pub fn act_a(&self, v: &ModuleElement) -> Result<ModuleElement> {
        self.x.apply(&v.shift(1))?.add(&v.b2_derivative())
    }

    pub fn act(&self, x: &AlgebraElement, v: &ModuleElement) -> Result<ModuleElement> {
        if v.rank() != self.rank() {
            return Err(AlgebraError::SizeMismatch { expected: self.rank(), got: v.rank() });
        }
        let order = self.order().min(v.order());
        let x = x.to_right();
        let v = v.with_order(order);
        let mut powers = vec![v.clone()];
        for _ in 0..x.a_degree().unwrap_or(0).min(order) {
            let next = self.act_a(powers.last().expect("nonempty"))?;
            powers.push(next);
        }
        let mut out = ModuleElement::zero(self.rank(), order);
        for (m, c) in x.terms() {
            if m.p + m.q > order {
                continue;
            }
            out = out.add(&powers[m.p as usize].shift(m.q).scale(c))?;
        }
        Ok(out)
    }
}

/// `s dF/ds = M(s) F` with `M(s) = Σ_d M_d s^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialSystem {
    k: usize,
    coeffs: Vec<Matrix>,
}

impl DifferentialSystem {
    pub fn new(k: usize, coeffs: Vec<Matrix>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(AlgebraError::InvalidInput("a system needs at least M(0)".into()));
        }
        for m in &coeffs {
            if m.k() != k {
                return Err(AlgebraError::SizeMismatch { expected: k, got: m.k() });
            }
        }
        Ok(DifferentialSystem { k, coeffs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[Matrix] {
        &self.coeffs
    }

    /// Coordinates of `M(a) b e_i = Σ_l Σ_d (M_d)_{li} a^d (b e_l)` in `module`.
    pub fn rhs_column(&self, module: &SeriesPoleModule, i: usize) -> Result<ModuleElement> {
        let order = module.order();
        let mut out = ModuleElement::zero(self.k, order);
        for l in 0..self.k {
            let mut w = ModuleElement::basis(l, self.k, order).shift(1);
            for (d, m) in self.coeffs.iter().enumerate() {
                if d > 0 {
                    w = module.act_a(&w)?;
                }
                let c = m.get(l, i);
                if !c.is_zero() {
                    out = out.add(&w.scale(c))?;
                }
            }
        }
        Ok(out)
    }

    /// Whether `ae = M(a)be` holds in `module` through `b^{order}`.
    pub fn check(&self, module: &SeriesPoleModule) -> Result<bool> {
        for i in 0..self.k {
            let lhs = module.act_a(&ModuleElement::basis(i, self.k, module.order()))?;
            if lhs != self.rhs_column(module, i)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The structure `ae = X(b)be` with `ae = M(a)be`, found by fixed-point
/// iteration from `X = M(0)`; each pass fixes one more coefficient of `X`.
/// The returned module is truncated at `b`-order `order`.
pub fn from_differential_system(sys: &DifferentialSystem, order: u32) -> Result<SeriesPoleModule> {
    let k = sys.k();
    let mut module = SeriesPoleModule::new(SeriesMatrix::constant(sys.coeffs()[0].clone(), order));
    for _ in 0..order {
        let mut next = vec![Matrix::zero(k); order as usize + 1];
        for i in 0..k {
            let rhs = sys.rhs_column(&module, i)?;
            for l in 0..k {
                for j in 1..=order {
                    next[j as usize - 1].set(l, i, rhs.coeff(l, j).clone());
                }
            }
        }
        let updated = SeriesPoleModule::new(SeriesMatrix::new(k, order, next)?);
        if updated == module {
            break;
        }
        module = updated;
    }
    Ok(module)
}
