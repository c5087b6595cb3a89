//! Dense univariate polynomials over Q(i), with exact interpolation and
//! rational root search.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coeff::Coeff;
use crate::element::signed_abs;
use crate::error::{AlgebraError, Result};

/// `coeffs[i]` multiplies `x^i`. No trailing zeros; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Coeff>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - r`
    pub fn linear(r: &Coeff) -> Self {
        UniPoly::new(vec![-r, Coeff::one()])
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Coeff>) -> Self {
        roots.into_iter().fold(UniPoly::one(), |acc, r| acc.mul(&UniPoly::linear(r)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Coeff {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_real)
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        self.coeffs.iter().rev().fold(Coeff::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let z = Coeff::zero();
                    self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z)
                })
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Coeff::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                out[i + j] += &(x * y);
            }
        }
        UniPoly::new(out)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        self.scale(&self.leading().inv().expect("nonzero leading coefficient"))
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let dn = d.coeffs.len() - 1;
        let lead_inv = d.leading().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dn {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut quot = vec![Coeff::zero(); rem.len() - dn];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dn] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &(&c * di);
            }
            quot[k] = c;
        }
        rem.truncate(dn);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut x, mut y) = (self.clone(), o.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let g = self.gcd(o);
        let (q, _) = self.mul(o).div_rem(&g).expect("gcd is nonzero");
        q.monic()
    }

    /// Real and imaginary coefficient parts.
    pub fn split_real_imag(&self) -> (UniPoly, UniPoly) {
        let re = UniPoly::new(self.coeffs.iter().map(|c| Coeff::real(c.re.clone())).collect());
        let im = UniPoly::new(self.coeffs.iter().map(|c| Coeff::real(c.im.clone())).collect());
        (re, im)
    }

    /// Unique polynomial of degree `< points.len()` through the given values
    /// (Newton divided differences).
    pub fn interpolate(points: &[Coeff], values: &[Coeff]) -> Result<Self> {
        if points.len() != values.len() {
            return Err(AlgebraError::SizeMismatch { expected: points.len(), got: values.len() });
        }
        let n = points.len();
        let mut dd: Vec<Coeff> = values.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let denom = &points[i] - &points[i - level];
                let num = &dd[i] - &dd[i - 1];
                dd[i] = &num * &denom.inv()?;
            }
        }
        let mut acc = UniPoly::zero();
        for i in (0..n).rev() {
            acc = acc.mul(&UniPoly::linear(&points[i])).add(&UniPoly::constant(dd[i].clone()));
        }
        Ok(acc)
    }

    /// Removes one factor `(x - r)`; `r` must be a root.
    pub fn deflate(&self, r: &Coeff) -> Self {
        let (q, rem) = self.div_rem(&UniPoly::linear(r)).expect("nonzero divisor");
        debug_assert!(rem.is_zero());
        q
    }

    pub fn multiplicity(&self, r: &Coeff) -> usize {
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.deflate(r);
            m += 1;
        }
        m
    }
}

/// Outcome of a root search that stops at a size limit rather than guessing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSearch {
    /// Distinct roots found, with multiplicities.
    pub roots: Vec<(Coeff, usize)>,
    /// Set when some candidate set was too large to enumerate.
    pub truncated: bool,
}

// Integers beyond this size are not factored by trial division.
const TRIAL_LIMIT: u128 = 1_000_000_000_000;
// Gaussian integers with larger norm are not enumerated.
const GAUSS_NORM_LIMIT: u128 = 100_000_000;

fn divisors(n: u128) -> Option<Vec<u128>> {
    if n == 0 || n > TRIAL_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

fn lcm_of_denominators<'a>(rs: impl Iterator<Item = &'a BigRational>) -> BigInt {
    rs.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Real rational roots of `p` (coefficients in Q(i)), with multiplicities,
/// sorted descending.
pub fn real_rational_roots(p: &UniPoly) -> RootSearch {
    let mut out = RootSearch { roots: Vec::new(), truncated: false };
    if p.is_zero() {
        return out;
    }
    let (re, im) = p.split_real_imag();
    let g = re.gcd(&im);
    let Some(deg) = g.degree() else { return out };
    if deg == 0 {
        return out;
    }
    let mut work = g.clone();
    let zero = Coeff::zero();
    if work.eval(&zero).is_zero() {
        let m = work.multiplicity(&zero);
        for _ in 0..m {
            work = work.deflate(&zero);
        }
        out.roots.push((zero, m));
    }
    if work.degree().unwrap_or(0) > 0 {
        let den = lcm_of_denominators(work.coeffs.iter().map(|c| &c.re));
        let ints: Vec<BigInt> = work
            .coeffs
            .iter()
            .map(|c| (&c.re * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs().to_u128();
        let an = ints.last().unwrap().abs().to_u128();
        match (a0.and_then(divisors), an.and_then(divisors)) {
            (Some(num_divs), Some(den_divs)) => {
                let mut seen: Vec<BigRational> = Vec::new();
                for &n in &num_divs {
                    for &d in &den_divs {
                        for sign in [1i64, -1] {
                            let r = BigRational::new(BigInt::from(n) * sign, BigInt::from(d));
                            if seen.contains(&r) {
                                continue;
                            }
                            seen.push(r.clone());
                            let c = Coeff::real(r);
                            if work.eval(&c).is_zero() {
                                let m = work.multiplicity(&c);
                                out.roots.push((c, m));
                            }
                        }
                    }
                }
            }
            _ => out.truncated = true,
        }
    }
    out.roots.sort_by(|x, y| y.0.re.cmp(&x.0.re));
    out
}

type GInt = (i128, i128);

fn gauss_divisors(z: GInt) -> Option<Vec<GInt>> {
    let norm = (z.0 * z.0 + z.1 * z.1) as u128;
    if norm == 0 || norm > GAUSS_NORM_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    for d in divisors(norm)? {
        let mut x: i128 = 0;
        while (x * x) as u128 <= d {
            let rest = d - (x * x) as u128;
            let y = (rest as f64).sqrt().round() as i128;
            for yy in [y - 1, y, y + 1] {
                if yy >= 0 && (yy * yy) as u128 == rest {
                    for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let g = (sx * x, sy * yy);
                        // z / g in Z[i] iff z * conj(g) is divisible by N(g)
                        let n = g.0 * g.0 + g.1 * g.1;
                        let re = z.0 * g.0 + z.1 * g.1;
                        let im = z.1 * g.0 - z.0 * g.1;
                        if re % n == 0 && im % n == 0 && !out.contains(&g) {
                            out.push(g);
                        }
                    }
                }
            }
            x += 1;
        }
    }
    Some(out)
}

/// Gaussian rational roots via the rational root theorem in Z[i]. Only real-part /
/// imaginary-part sizes within a fixed bound are searched.
pub fn gaussian_rational_roots(p: &UniPoly) -> RootSearch {
    let mut out = RootSearch { roots: Vec::new(), truncated: false };
    let Some(deg) = p.degree() else { return out };
    if deg == 0 {
        return out;
    }
    let mut work = p.clone();
    let zero = Coeff::zero();
    if work.eval(&zero).is_zero() {
        let m = work.multiplicity(&zero);
        for _ in 0..m {
            work = work.deflate(&zero);
        }
        out.roots.push((zero, m));
    }
    if work.degree().unwrap_or(0) == 0 {
        return out;
    }
    let den = lcm_of_denominators(work.coeffs.iter().flat_map(|c| [&c.re, &c.im]));
    let to_gint = |c: &Coeff| -> Option<GInt> {
        let scale = BigRational::from_integer(den.clone());
        let re = (&c.re * &scale).to_integer().to_i128()?;
        let im = (&c.im * &scale).to_integer().to_i128()?;
        Some((re, im))
    };
    let c0 = to_gint(&work.coeffs[0]);
    let cn = to_gint(&work.leading());
    let (Some(nd), Some(dd)) = (c0.and_then(gauss_divisors), cn.and_then(gauss_divisors)) else {
        out.truncated = true;
        return out;
    };
    let mut seen: Vec<Coeff> = Vec::new();
    for g in &nd {
        for h in &dd {
            let num = Coeff::new(BigRational::from_integer(g.0.into()), BigRational::from_integer(g.1.into()));
            let hd = Coeff::new(BigRational::from_integer(h.0.into()), BigRational::from_integer(h.1.into()));
            let c = &num / &hd;
            if seen.contains(&c) {
                continue;
            }
            seen.push(c.clone());
            if work.eval(&c).is_zero() {
                let m = work.multiplicity(&c);
                out.roots.push((c, m));
            }
        }
    }
    out.roots.sort_by(|x, y| (&y.0.re, &y.0.im).cmp(&(&x.0.re, &x.0.im)));
    out
}

/// Renders with variable `x`, highest power first.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = signed_abs(c);
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Coeff {
        Coeff::from(n)
    }

    fn poly(v: &[i64]) -> UniPoly {
        UniPoly::new(v.iter().map(|&x| c(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let p = UniPoly::from_roots(&[c(1), c(2), c(3)]);
        let q = UniPoly::from_roots(&[c(2), c(5)]);
        assert_eq!(p.gcd(&q), UniPoly::linear(&c(2)));
        assert_eq!(p.lcm(&q), UniPoly::from_roots(&[c(1), c(2), c(3), c(5)]));
        let (qq, r) = p.div_rem(&q).unwrap();
        assert_eq!(qq.mul(&q).add(&r), p);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = poly(&[3, 0, -2, 1]);
        let pts: Vec<Coeff> = (0..4).map(c).collect();
        let vals: Vec<Coeff> = pts.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&pts, &vals).unwrap(), p);
    }

    #[test]
    fn rational_roots_found() {
        let half = Coeff::from_ratio(1, 2);
        let p = UniPoly::from_roots(&[c(3), half.clone(), half.clone(), c(0), c(-4)]).scale(&c(6));
        let rs = real_rational_roots(&p);
        assert!(!rs.truncated);
        assert_eq!(rs.roots, vec![(c(3), 1), (half, 2), (c(0), 1), (c(-4), 1)]);
        assert!(real_rational_roots(&poly(&[-2, 0, 1])).roots.is_empty());
    }

    #[test]
    fn gaussian_roots_found() {
        let z = Coeff::new(BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into()));
        let p = UniPoly::from_roots(&[z.clone(), Coeff::i()]);
        let rs = gaussian_rational_roots(&p);
        assert!(rs.roots.contains(&(z, 1)));
        assert!(rs.roots.contains(&(Coeff::i(), 1)));
        assert!(real_rational_roots(&p).roots.is_empty());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&[1, 2, 1]).to_string(), "x^2 + 2*x + 1");
        assert_eq!(poly(&[-3, 0, -1]).to_string(), "-x^2 - 3");
    }
}
