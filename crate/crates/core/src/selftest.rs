//! Named invariant suites over seeded random inputs, run by `abalg selftest`.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::coeff::Coeff;
use crate::division::{divide, divide_linear, factor_homogeneous, invert, power_division_closed_form, FactoredProduct};
use crate::element::{binom_coeff, binomial_pow, factorial_coeff, AlgebraElement, Ordering};
use crate::fresco::Fresco;
use crate::gamma::{binomial, gamma, table_by_left_recursion, table_by_right_recursion};
use crate::matrix::{solve_in_span, Matrix};
use crate::module::{from_differential_system, DifferentialSystem, SimplePoleModule};
use crate::oracle::{act, act_composed, injectivity_witness, oracle_check_mul, PolySeries};
use crate::parser::parse_element;
use crate::random as rnd;
use crate::series::APolynomial;
use crate::xi::{xi_check_simple_pole, xi_relation_residual};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Number of cases examined, or the failure message.
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} {:<4} {}", self.name, if self.passed { "PASS" } else { "FAIL" }, self.detail)
    }
}

type Outcome = Result<usize, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn eq(x: &AlgebraElement, y: &AlgebraElement) -> bool {
    x.same_value(y).unwrap_or(false)
}

fn lin(lambda: &Coeff, order: u32) -> AlgebraElement {
    &AlgebraElement::a(order) - &AlgebraElement::b(order).scale(lambda)
}

fn mono(p: u32, q: u32, c: Coeff, order: u32) -> AlgebraElement {
    AlgebraElement::monomial(p, q, c, order, Ordering::Left)
}

pub fn ring_axioms() -> Outcome {
    let n = 12;
    let (a, b) = (AlgebraElement::a(n), AlgebraElement::b(n));
    ensure!(eq(&(&(&a * &b) - &(&b * &a)), &(&b * &b)), "ab - ba != b^2");
    let mut rng = rnd::rng(1);
    for i in 0..200 {
        let x = rnd::element(&mut rng, n, 10).to_left();
        let y = rnd::element(&mut rng, n, 10).to_left();
        let z = rnd::element(&mut rng, n, 10).to_left();
        ensure!(eq(&(&(&x * &y) * &z), &(&x * &(&y * &z))), "associativity fails at case {i}");
        ensure!(eq(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z))), "left distributivity fails at case {i}");
        ensure!(eq(&(&(&x + &y) * &z), &(&(&x * &z) + &(&y * &z))), "right distributivity fails at case {i}");
    }
    Ok(200)
}

pub fn gamma_tables() -> Outcome {
    let left = table_by_left_recursion(30, 30);
    let right = table_by_right_recursion(30, 30);
    let mut cases = 0;
    for p in 0..=30u32 {
        for q in 0..=30u32 {
            for j in 0..=p {
                let g = gamma(p, q, j as i64);
                ensure!(left[p as usize][q as usize][j as usize] == g, "left recursion differs at ({p},{q},{j})");
                ensure!(right[p as usize][q as usize][j as usize] == g, "right recursion differs at ({p},{q},{j})");
                cases += 1;
            }
        }
    }
    // a^p b^q = Σ_j Γ b^{q+j} a^{p-j}, both sides acting on z^r
    for p in 0..=6u32 {
        for q in 0..=6u32 {
            let order = p + q;
            let lhs = mono(p, q, Coeff::one(), order);
            let rhs = AlgebraElement::from_terms(
                order,
                Ordering::Right,
                (0..=p).map(|j| (p - j, q + j, Coeff::from(gamma(p, q, j as i64)))),
            );
            for r in 0..=4 {
                let f = PolySeries::monomial(r, Coeff::one(), order + r);
                ensure!(act_composed(&lhs, &f) == act_composed(&rhs, &f), "expansion of a^{p} b^{q} fails on z^{r}");
                cases += 1;
            }
        }
    }
    Ok(cases)
}

pub fn ordering_round_trip() -> Outcome {
    let mut rng = rnd::rng(2);
    for i in 0..500 {
        let x = rnd::element(&mut rng, 10, 12);
        ensure!(x.to_left().to_right() == x.to_right(), "left->right mismatch at case {i}");
        ensure!(x.to_right().to_left() == x.to_left(), "right->left mismatch at case {i}");
    }
    Ok(500)
}

pub fn oracle_representation() -> Outcome {
    let (n, d) = (8, 24);
    let mut rng = rnd::rng(3);
    for i in 0..200 {
        let x = rnd::element(&mut rng, n, 8);
        let y = rnd::element(&mut rng, n, 8);
        let c = rnd::coeff(&mut rng);
        ensure!(oracle_check_mul(&x, &y, d), "multiplication not represented at case {i}");
        for r in 0..=8 {
            let f = PolySeries::monomial(r, Coeff::one(), d);
            ensure!(act(&x, &f) == act_composed(&x, &f), "kernel and composition differ at case {i}");
            let sum = &x.to_left() + &y.to_left();
            ensure!(act(&sum, &f) == act(&x, &f).add(&act(&y, &f)), "additivity fails at case {i}");
            ensure!(act(&x.scale(&c), &f) == act(&x, &f).scale(&c), "homogeneity fails at case {i}");
        }
    }
    Ok(200)
}

pub fn closed_identities() -> Outcome {
    let mut cases = 0;
    for p in 1..=10u32 {
        let n = p;
        let lhs = binomial_pow(&-Coeff::one(), p, n);
        let direct = (0..p).fold(AlgebraElement::one(n), |acc, _| &acc * &lin(&Coeff::one(), n));
        let rhs = AlgebraElement::from_terms(n, Ordering::Right, [(p, 0, Coeff::one()), (p - 1, 1, -Coeff::from(p as i64))]);
        ensure!(eq(&lhs, &rhs) && eq(&direct, &rhs), "(a-b)^{p} identity fails");
        cases += 1;
    }
    let mut rng = rnd::rng(4);
    let xs: Vec<Coeff> = (0..20).map(|_| rnd::real_coeff(&mut rng)).collect();
    for p in 0..=6u32 {
        for q in 0..=6u32 {
            let n = p + q;
            let bq = mono(0, q, Coeff::one(), n);
            for x in &xs {
                let shifted = x + &Coeff::from(q as i64);
                let lhs = &binomial_pow(x, p, n) * &bq;
                let rhs = &bq * &binomial_pow(&shifted, p, n);
                ensure!(eq(&lhs, &rhs), "(a+xb)^p b^q identity fails at p={p} q={q} x={x}");
                cases += 1;
            }
            let lhs = &bq * &binomial_pow(&Coeff::from(q as i64), p, n);
            ensure!(eq(&lhs, &mono(p, q, Coeff::one(), n)), "b^q (a+qb)^p != a^p b^q at p={p} q={q}");
        }
    }
    for big_n in 0..=6u32 {
        let order = 2 * big_n;
        let lhs = mono(0, 2 * big_n, factorial_coeff(big_n), order);
        let mut rhs = AlgebraElement::zero(order);
        for j in 0..=big_n {
            let mut c = binom_coeff(big_n, j);
            if j % 2 == 1 {
                c = -c;
            }
            let term = &(&mono(0, j, c, order) * &mono(big_n, 0, Coeff::one(), order)) * &mono(0, big_n - j, Coeff::one(), order);
            rhs = &rhs + &term;
        }
        ensure!(eq(&lhs, &rhs), "N! b^(2N) identity fails at N={big_n}");
        cases += 1;
    }
    for x in 0..=20u32 {
        for y in 0..=20u32 {
            let sum = (0..=y).fold(num_bigint::BigInt::zero(), |acc, j| acc + binomial(x + j, j));
            ensure!(sum == binomial(x + y + 1, x + 1), "binomial sum fails at x={x} y={y}");
            cases += 1;
        }
    }
    Ok(cases)
}

pub fn inversion() -> Outcome {
    let n = 10;
    let geo = invert(&(&AlgebraElement::one(n) - &AlgebraElement::b(n))).map_err(|e| e.to_string())?;
    let expect = AlgebraElement::from_terms(n, Ordering::Left, (0..=n).map(|q| (0, q, Coeff::one())));
    ensure!(geo == expect, "inverse of 1 - b is not the geometric series");
    let mut rng = rnd::rng(5);
    let one = AlgebraElement::one(n);
    for i in 0..200 {
        let x = rnd::unit(&mut rng, n, 8);
        let y = invert(&x).map_err(|e| e.to_string())?;
        ensure!(eq(&(&x * &y), &one) && eq(&(&y * &x), &one), "not a two-sided inverse at case {i}");
    }
    Ok(200)
}

fn random_product(rng: &mut rnd::TestRng, order: u32, k: usize) -> FactoredProduct {
    let factors = (0..k).map(|_| (rnd::real_coeff(rng), rnd::bseries_unit(rng, order, 4))).collect();
    FactoredProduct::new(order, factors).expect("units")
}

pub fn division() -> Outcome {
    let n = 10;
    let mut rng = rnd::rng(6);
    let mut cases = 0;
    for _ in 0..20 {
        let lambda = rnd::coeff(&mut rng);
        for m in 1..=10u32 {
            let (q, r) = divide_linear(&mono(m, 0, Coeff::one(), n), &lambda);
            let (q2, r2) = power_division_closed_form(m, &lambda, n).map_err(|e| e.to_string())?;
            ensure!(eq(&q, &q2) && r == r2, "closed form differs for m={m} lambda={lambda}");
            cases += 1;
        }
    }
    for i in 0..100 {
        let x = rnd::element(&mut rng, n, 10);
        let lambda = rnd::coeff(&mut rng);
        let (q, r) = divide_linear(&x, &lambda);
        let back = &(&q.with_order(n) * &lin(&lambda, n)) + r.as_element();
        ensure!(eq(&back, &x), "linear division identity fails at case {i}");
        cases += 1;
    }
    for i in 0..100 {
        let k = rng.gen_range(1..=4usize);
        let p = random_product(&mut rng, n, k);
        let pe = p.expand();
        let x = rnd::element(&mut rng, n, 10);
        let d = divide(&x, &p).map_err(|e| e.to_string())?;
        let back = &(&d.quotient.with_order(n) * &pe) + &d.remainder.to_element().to_left();
        ensure!(eq(&back, &x), "X = QP + R fails at case {i}");
        ensure!(d.remainder.a_degree().is_none_or(|deg| deg < k as u32), "remainder degree too high at case {i}");
        let z = rnd::element(&mut rng, n, 6);
        let moved = &x.to_left() + &(&z * &pe);
        ensure!(divide(&moved, &p).map_err(|e| e.to_string())?.remainder == d.remainder, "remainder not invariant at case {i}");
        // uniqueness: dividing Q'P + R' returns exactly (Q', R')
        let q0 = rnd::element(&mut rng, n - k as u32, 6);
        let r0 = APolynomial::from_element(&AlgebraElement::from_terms(
            n,
            Ordering::Right,
            rnd::element(&mut rng, n, 6).to_right().terms().filter(|(m, _)| m.p < k as u32).map(|(m, c)| (m.p, m.q, c.clone())),
        ));
        let built = &(&q0.with_order(n) * &pe) + &r0.to_element().to_left();
        let d0 = divide(&built, &p).map_err(|e| e.to_string())?;
        ensure!(eq(&d0.quotient, &q0) && d0.remainder == r0, "division not unique at case {i}");
        // truncation stability
        let big = n + 2;
        let pb = FactoredProduct::new(big, p.factors().iter().map(|(l, s)| (l.clone(), s.with_order(big))).collect())
            .map_err(|e| e.to_string())?;
        let w = AlgebraElement::from_terms(big, Ordering::Left, [(3, n - 2, rnd::coeff(&mut rng)), (n + 2, 0, rnd::coeff(&mut rng))]);
        let xb = &x.to_left().with_order(big) + &w;
        let db = divide(&xb, &pb).map_err(|e| e.to_string())?;
        ensure!(eq(&db.quotient.with_order(n - k as u32), &d.quotient), "quotient unstable under truncation at case {i}");
        ensure!(
            eq(&db.remainder.to_element().with_order(n), &d.remainder.to_element()),
            "remainder unstable under truncation at case {i}"
        );
        cases += 1;
    }
    Ok(cases)
}

pub fn automorphisms() -> Outcome {
    let n = 8;
    let mut rng = rnd::rng(7);
    let xs: Vec<Coeff> = (0..10).map(|_| rnd::coeff(&mut rng)).collect();
    for i in 0..100 {
        let x = rnd::element(&mut rng, n, 8);
        let y = rnd::element(&mut rng, n, 8);
        for t in &xs {
            ensure!(eq(&(&x * &y).tau(t), &(&x.tau(t) * &y.tau(t))), "tau not multiplicative at case {i}");
            ensure!(eq(&x.tau(t).tau(&-t), &x), "tau_x tau_-x != id at case {i}");
            ensure!(eq(&x.tau(t).tau(&xs[0]), &x.tau(&(t + &xs[0]))), "tau group law fails at case {i}");
        }
        ensure!(AlgebraElement::one(n).tau(&xs[1]) == AlgebraElement::one(n), "tau moves 1");
        let fxy = (&x * &y).anti_f(Ordering::Left);
        let fyfx = &y.anti_f(Ordering::Left) * &x.anti_f(Ordering::Left);
        ensure!(eq(&fxy, &fyfx), "F does not reverse products at case {i}");
        ensure!(eq(&x.anti_f(Ordering::Left).anti_f(Ordering::Right), &x), "F not involutive at case {i}");
    }
    Ok(100)
}

/// Whether a monic polynomial of degree `d` could annihilate `m`, i.e. whether
/// `m^d` lies in the span of `Id, m, …, m^{d-1}`.
pub fn annihilated_in_degree(m: &Matrix, d: usize) -> bool {
    let mut powers = vec![Matrix::identity(m.k())];
    for _ in 0..d {
        let next = powers.last().expect("nonempty").mul(m).expect("same size");
        powers.push(next);
    }
    let flat = |x: &Matrix| x.rows().into_iter().flatten().collect::<Vec<_>>();
    let target = flat(&powers[d]);
    let basis: Vec<Vec<Coeff>> = powers[..d].iter().map(flat).collect();
    solve_in_span(&basis, &target).is_some()
}

pub fn modules() -> Outcome {
    let n = 8;
    let mut rng = rnd::rng(8);
    let mut cases = 0;
    for i in 0..30 {
        let k = rng.gen_range(1..=3usize);
        let e = SimplePoleModule::new(rnd::matrix(&mut rng, k), n);
        let x = rnd::element(&mut rng, n, 6);
        let y = rnd::element(&mut rng, n, 6);
        let v = rnd::module_element(&mut rng, k, n);
        let lhs = e.act(&(&x * &y), &v).map_err(|e| e.to_string())?;
        let rhs = e.act(&x, &e.act(&y, &v).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(lhs == rhs, "module law fails at case {i}");
        let s = e.to_series_module();
        ensure!(e.act(&x, &v).ok() == s.act(&x, &v).ok(), "series-matrix action differs at case {i}");
        let av = e.act(&AlgebraElement::a(n), &v).map_err(|e| e.to_string())?;
        ensure!(av.valuation().is_none_or(|j| j >= 1), "a.v not in bE at case {i}");
        let beta = e.bernstein();
        let minus = e.theta().scale(&-Coeff::one());
        ensure!(beta.is_monic() && beta.degree().unwrap_or(0) <= k, "bernstein shape wrong at case {i}");
        ensure!(minus.eval_poly(&beta).is_zero(), "bernstein does not annihilate -theta at case {i}");
        for d in 0..beta.degree().unwrap_or(0) {
            ensure!(!annihilated_in_degree(&minus, d), "a lower-degree polynomial annihilates at case {i}");
        }
        cases += 1;
    }
    let f = Fresco::new(FactoredProduct::linear(n, &[Coeff::one()]).map_err(|e| e.to_string())?);
    let ae = f.act(&AlgebraElement::a(n), &f.generator()).map_err(|e| e.to_string())?;
    ensure!(ae == APolynomial::from_element(&AlgebraElement::b(n)), "a.e != b.e in E_1");
    for i in 0..20 {
        let x = rnd::element(&mut rng, n, 6);
        let r = APolynomial::from_element(rnd::bseries(&mut rng, n, 4).as_element());
        let killed = f.act(&(&x * &lin(&Coeff::one(), n)), &f.generator()).map_err(|e| e.to_string())?;
        ensure!(killed.is_zero(), "left ideal not annihilating at case {i}");
        let y = rnd::element(&mut rng, n, 6);
        let lhs = f.act(&(&x * &y), &r).map_err(|e| e.to_string())?;
        let rhs = f.act(&x, &f.act(&y, &r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(lhs == rhs, "fresco action not associative at case {i}");
        let f2 = Fresco::new(random_product(&mut rng, n, 2));
        let r2 = f2.reduce(&rnd::element(&mut rng, n, 6)).map_err(|e| e.to_string())?;
        let rel = &(&AlgebraElement::a(n) * &AlgebraElement::b(n)) - &(&(&AlgebraElement::b(n) * &AlgebraElement::a(n)) + &mono(0, 2, Coeff::one(), n));
        ensure!(f2.act(&rel, &r2).map_err(|e| e.to_string())?.is_zero(), "fresco relation fails at case {i}");
        cases += 1;
    }
    Ok(cases)
}

pub fn differential_systems() -> Outcome {
    let n = 6;
    let mut rng = rnd::rng(9);
    for i in 0..50 {
        let k = rng.gen_range(1..=2usize);
        let deg = rng.gen_range(0..=2usize);
        let sys = rnd::system(&mut rng, k, deg);
        let m = from_differential_system(&sys, n).map_err(|e| e.to_string())?;
        ensure!(m.matrix().coeff(0) == &sys.coeffs()[0], "X(0) != M(0) at case {i}");
        ensure!(sys.check(&m).map_err(|e| e.to_string())?, "ae = M(a)be fails at case {i}");
        let theta = rnd::matrix(&mut rng, k);
        let constant = DifferentialSystem::new(k, vec![theta.clone()]).map_err(|e| e.to_string())?;
        let mc = from_differential_system(&constant, n).map_err(|e| e.to_string())?;
        ensure!(mc == SimplePoleModule::new(theta, n).to_series_module(), "constant system not reproduced at case {i}");
    }
    Ok(50)
}

pub fn xi_representation() -> Outcome {
    let mut rng = rnd::rng(10);
    for i in 0..200 {
        let dim = rng.gen_range(1..=2usize);
        let xi = rnd::xi_element(&mut rng, dim, 3, 6, 6);
        ensure!(xi_relation_residual(&xi).is_zero(), "ab - ba != b^2 on case {i}");
    }
    for i in 0..50 {
        let alpha = rnd::alpha(&mut rng);
        let m = rng.gen_range(0..=8u32);
        let (theta, ok) = xi_check_simple_pole(&alpha, m).map_err(|e| e.to_string())?;
        ensure!(ok, "simple pole relation fails at case {i} (theta = {theta})");
    }
    Ok(250)
}

pub fn factoring() -> Outcome {
    let n = 8;
    let mut rng = rnd::rng(11);
    for i in 0..40 {
        let deg = rng.gen_range(1..=4u32);
        let j = rng.gen_range(0..=2u32);
        let lambdas: Vec<Coeff> = (0..deg).map(|_| Coeff::from(rng.gen_range(-3..=3i64))).collect();
        let unit = rnd::nonzero_coeff(&mut rng);
        let p = lambdas.iter().fold(mono(0, j, unit, n), |acc, l| &acc * &lin(l, n));
        let f = factor_homogeneous(&p).map_err(|e| e.to_string())?;
        ensure!(f.is_complete(), "factorization of a split product incomplete at case {i}");
        ensure!(eq(&f.expand(n), &p), "factorization does not re-expand at case {i}");
        let hdeg = rng.gen_range(1..=8u32);
        let h = rnd::homogeneous(&mut rng, hdeg, n, true);
        let f = factor_homogeneous(&h).map_err(|e| e.to_string())?;
        ensure!(eq(&f.expand(n), &h), "partial factorization does not re-expand at case {i}");
        ensure!(injectivity_witness(&h, 64).is_ok(), "no witness for a nonzero homogeneous element at case {i}");
    }
    Ok(40)
}

pub fn parser_round_trip() -> Outcome {
    let n = 6;
    let mut rng = rnd::rng(12);
    for i in 0..500 {
        let x = rnd::element(&mut rng, n, 8);
        let text = x.to_string();
        let back = parse_element(&text, n).map_err(|e| format!("case {i}: {e} in {text:?}"))?;
        ensure!(eq(&back, &x), "round trip changed the element at case {i}: {text}");
    }
    Ok(500)
}

pub const SUITES: &[(&str, fn() -> Outcome)] = &[
    ("ring-axioms", ring_axioms),
    ("gamma-tables", gamma_tables),
    ("ordering-round-trip", ordering_round_trip),
    ("oracle-representation", oracle_representation),
    ("closed-identities", closed_identities),
    ("inversion", inversion),
    ("division", division),
    ("automorphisms", automorphisms),
    ("modules", modules),
    ("differential-systems", differential_systems),
    ("xi-representation", xi_representation),
    ("factoring", factoring),
    ("parser-round-trip", parser_round_trip),
];

/// Runs every suite on its own thread; results keep the order of [`SUITES`].
pub fn run_all() -> Vec<CheckResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|(name, f)| {
                s.spawn(move || {
                    let start = std::time::Instant::now();
                    let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".to_string()));
                    match outcome {
                        Ok(cases) => CheckResult { name, passed: true, detail: format!("{cases} cases, {:.1?}", start.elapsed()) },
                        Err(msg) => CheckResult { name, passed: false, detail: msg },
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
    })
}
