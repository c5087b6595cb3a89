//! The integers `Γ_{p,q}^j` governing the change between the two normal orderings:
//!
//! ```text
//! a^p b^q = Σ_{j=0}^{p} Γ_{p,q}^j b^{q+j} a^{p-j}
//! ```
//!
//! Closed form: `Γ_{p,q}^j = C(q+j-1, j) · p!/(p-j)!` for `q ≥ 1`, and
//! `Γ_{p,0}^j = [j = 0]`.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use parking_lot::RwLock;

/// Memoized `Γ` values. Readers share a lock; concurrent misses may compute the
/// same entry twice, but every writer stores the same value.
#[derive(Default)]
pub struct GammaTable {
    memo: RwLock<HashMap<(u32, u32, u32), BigInt>>,
}

impl GammaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table.
    pub fn global() -> &'static GammaTable {
        static TABLE: OnceLock<GammaTable> = OnceLock::new();
        TABLE.get_or_init(GammaTable::new)
    }

    pub fn get(&self, p: u32, q: u32, j: i64) -> BigInt {
        if j < 0 || j > p as i64 {
            return BigInt::zero();
        }
        let j = j as u32;
        if let Some(v) = self.memo.read().get(&(p, q, j)) {
            return v.clone();
        }
        let v = closed_form(p, q, j);
        self.memo.write().insert((p, q, j), v.clone());
        v
    }

    pub fn len(&self) -> usize {
        self.memo.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `Γ_{p,q}^j`, zero for `j` outside `[0, p]`.
pub fn gamma(p: u32, q: u32, j: i64) -> BigInt {
    GammaTable::global().get(p, q, j)
}

fn closed_form(p: u32, q: u32, j: u32) -> BigInt {
    if q == 0 {
        return if j == 0 { BigInt::one() } else { BigInt::zero() };
    }
    // (q+j-1)!/(j!(q-1)!) * p!/(p-j)!
    binomial(q + j - 1, j) * falling(p, j)
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `n (n-1) ⋯ (n-k+1)`.
pub fn falling(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

pub fn factorial(n: u32) -> BigInt {
    falling(n, n)
}

/// Builds `Γ_{p,q}^j` for `p ≤ max_p`, `q ≤ max_q` purely from the left
/// multiplication recursion `Γ_{p+1,q}^j = Γ_{p,q}^j + (q+j-1) Γ_{p,q}^{j-1}`
/// starting at `Γ_{0,q}^0 = 1`. Indexed `[p][q][j]`.
pub fn table_by_left_recursion(max_p: u32, max_q: u32) -> Vec<Vec<Vec<BigInt>>> {
    let mut t: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(max_p as usize + 1);
    t.push((0..=max_q).map(|_| vec![BigInt::one()]).collect());
    for p in 0..max_p {
        let row: Vec<Vec<BigInt>> = (0..=max_q)
            .map(|q| {
                let prev = &t[p as usize][q as usize];
                (0..=p + 1)
                    .map(|j| {
                        let same = prev.get(j as usize).cloned().unwrap_or_default();
                        if j == 0 {
                            return same;
                        }
                        let lower = &prev[j as usize - 1];
                        // (q + j - 1) may be negative only when q = 0 and j = 0, excluded above.
                        same + BigInt::from(q + j - 1) * lower
                    })
                    .collect()
            })
            .collect();
        t.push(row);
    }
    t
}

/// Builds `Γ_{p,q}^j` for `p ≤ max_p`, `q ≤ max_q` from the right
/// multiplication recursion `Γ_{p+1,q}^j = Γ_{p,q}^j + q Γ_{p,q+1}^{j-1}`
/// starting at `Γ_{0,q}^0 = 1`. Indexed `[p][q][j]`.
pub fn table_by_right_recursion(max_p: u32, max_q: u32) -> Vec<Vec<Vec<BigInt>>> {
    // row p needs q up to max_q + (max_p - p)
    let width = |p: u32| (max_q + max_p - p) as usize + 1;
    let mut t: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(max_p as usize + 1);
    t.push((0..width(0)).map(|_| vec![BigInt::one()]).collect());
    for p in 0..max_p {
        let prev = &t[p as usize];
        let row: Vec<Vec<BigInt>> = (0..width(p + 1))
            .map(|q| {
                (0..=p + 1)
                    .map(|j| {
                        let same = prev[q].get(j as usize).cloned().unwrap_or_default();
                        if j == 0 {
                            return same;
                        }
                        same + BigInt::from(q) * &prev[q + 1][j as usize - 1]
                    })
                    .collect()
            })
            .collect();
        t.push(row);
    }
    for row in t.iter_mut() {
        row.truncate(max_q as usize + 1);
    }
    t
}
