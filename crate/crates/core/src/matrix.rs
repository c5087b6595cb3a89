//! Square matrices over `ℚ(i)`.

use std::fmt;

use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{AlgebraError, Result};
use crate::poly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    k: usize,
    /// Row-major.
    entries: Vec<Coeff>,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Coeff>>) -> Result<Self> {
        let k = rows.len();
        let mut entries = Vec::with_capacity(k * k);
        for row in rows {
            if row.len() != k {
                return Err(AlgebraError::SizeMismatch { expected: k, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(Matrix { k, entries })
    }

    pub fn zero(k: usize) -> Self {
        Matrix { k, entries: vec![Coeff::zero(); k * k] }
    }

    pub fn identity(k: usize) -> Self {
        Self::diagonal((0..k).map(|_| Coeff::one()).collect())
    }

    pub fn diagonal(d: Vec<Coeff>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, c) in d.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| Coeff::from(v)).collect()).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.entries[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coeff) {
        self.entries[i * self.k + j] = c;
    }

    pub fn rows(&self) -> Vec<Vec<Coeff>> {
        self.entries.chunks(self.k.max(1)).take(self.k).map(|r| r.to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Coeff> {
        (0..self.k).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(AlgebraError::SizeMismatch { expected: self.k, got: other.k });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| x + y).collect();
        Ok(Matrix { k: self.k, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Matrix { k: self.k, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let k = self.k;
        let mut out = Self::zero(k);
        for i in 0..k {
            for l in 0..k {
                let x = self.get(i, l);
                if x.is_zero() {
                    continue;
                }
                for j in 0..k {
                    let y = other.get(l, j);
                    if !y.is_zero() {
                        out.entries[i * k + j] += &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Result<Vec<Coeff>> {
        if v.len() != self.k {
            return Err(AlgebraError::SizeMismatch { expected: self.k, got: v.len() });
        }
        Ok((0..self.k)
            .map(|i| v.iter().enumerate().fold(Coeff::zero(), |acc, (j, x)| &acc + &(self.get(i, j) * x)))
            .collect())
    }

    pub fn trace(&self) -> Coeff {
        (0..self.k).fold(Coeff::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// `poly(self)` by Horner's rule.
    pub fn eval_poly(&self, poly: &UniPoly) -> Self {
        let id = Self::identity(self.k);
        poly.coeffs().iter().rev().fold(Self::zero(self.k), |acc, c| {
            acc.mul(self).expect("same size").add(&id.scale(c)).expect("same size")
        })
    }

    /// `det(x·Id - self)` by the Faddeev–LeVerrier recursion.
    pub fn characteristic_polynomial(&self) -> UniPoly {
        let k = self.k;
        let mut coeffs = vec![Coeff::zero(); k + 1];
        coeffs[k] = Coeff::one();
        let mut m = Self::zero(k);
        let id = Self::identity(k);
        for step in 1..=k {
            m = self.mul(&m).expect("same size").add(&id.scale(&coeffs[k + 1 - step])).expect("same size");
            let am = self.mul(&m).expect("same size");
            coeffs[k - step] = -(&am.trace() * &Coeff::from_ratio(1, step as i64));
        }
        UniPoly::new(coeffs)
    }

    /// Monic minimal polynomial: least common multiple of the minimal
    /// polynomials of the standard basis vectors (Krylov sequences).
    pub fn minimal_polynomial(&self) -> UniPoly {
        (0..self.k).fold(UniPoly::one(), |acc, i| {
            let mut e = vec![Coeff::zero(); self.k];
            e[i] = Coeff::one();
            acc.lcm(&self.vector_minimal_polynomial(&e))
        })
    }

    /// Monic polynomial `μ` of least degree with `μ(self) v = 0`.
    pub fn vector_minimal_polynomial(&self, v: &[Coeff]) -> UniPoly {
        let mut krylov: Vec<Vec<Coeff>> = vec![v.to_vec()];
        loop {
            let next = self.mul_vec(krylov.last().expect("nonempty")).expect("same size");
            if let Some(sol) = solve_in_span(&krylov, &next) {
                // next = Σ sol_i M^i v, so μ(x) = x^d - Σ sol_i x^i
                let mut coeffs: Vec<Coeff> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Coeff::one());
                return UniPoly::new(coeffs);
            }
            krylov.push(next);
        }
    }
}

/// Coefficients `c` with `Σ c_i vectors[i] = target`, if `target` lies in the
/// span. Vectors are assumed linearly independent.
pub fn solve_in_span(vectors: &[Vec<Coeff>], target: &[Coeff]) -> Option<Vec<Coeff>> {
    let n = vectors.len();
    let rows = target.len();
    // augmented rows × (n + 1)
    let mut a: Vec<Vec<Coeff>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Coeff> = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = a[r][col].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in col..=n {
                    let t = &a[r][j] * &f;
                    a[i][j] -= &t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![Coeff::zero(); n];
    for (i, &col) in pivots.iter().enumerate() {
        sol[col] = a[i][n].clone();
    }
    Some(sol)
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coeff {
        Coeff::from(n)
    }

    #[test]
    fn char_poly() {
        let m = Matrix::from_ints(&[&[0, 2], &[1, 0]]).unwrap();
        assert_eq!(m.characteristic_polynomial(), UniPoly::new(vec![c(-2), c(0), c(1)]));
        let m = Matrix::from_ints(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(m.characteristic_polynomial(), UniPoly::from_roots(&[c(2), c(2), c(5)]));
        assert!(m.eval_poly(&m.characteristic_polynomial()).is_zero());
    }

    #[test]
    fn min_poly() {
        let id = Matrix::identity(3);
        assert_eq!(id.minimal_polynomial(), UniPoly::linear(&c(1)));
        let j = Matrix::from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        assert_eq!(j.minimal_polynomial(), UniPoly::from_roots(&[c(1), c(1)]));
        let d = Matrix::diagonal(vec![Coeff::from_ratio(1, 2), c(3), c(3)]);
        assert_eq!(d.minimal_polynomial(), UniPoly::from_roots(&[Coeff::from_ratio(1, 2), c(3)]));
        let rot = Matrix::from_ints(&[&[0, -1], &[1, 0]]).unwrap();
        assert!(rot.eval_poly(&rot.minimal_polynomial()).is_zero());
        assert_eq!(rot.minimal_polynomial().degree(), Some(2));
    }

    #[test]
    fn arithmetic() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]).unwrap();
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), Matrix::from_ints(&[&[2, 1], &[4, 3]]).unwrap());
        assert_eq!(a.mul_vec(&[c(1), c(1)]).unwrap(), vec![c(3), c(7)]);
        assert!(a.mul(&Matrix::identity(3)).is_err());
        assert!(Matrix::new(vec![vec![c(1)], vec![c(1)]]).is_err());
    }
}
