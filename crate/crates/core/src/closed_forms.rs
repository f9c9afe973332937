//! Closed-form Coxeter polynomials of the rectangle, its one-branch
//! extensions and the Nakayama family, plus the one-point extension
//! recursions.
//!
//! Rational expressions are evaluated as numerator and denominator and then
//! divided exactly; a remainder is reported as an error.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coxeter::{DimVector, EulerData};
use crate::error::{Error, Result};
use crate::exact::{poly_exact_div, IntMatrix, PolyZ};

/// A closed-form evaluation together with the fraction it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub params: Vec<(&'static str, usize)>,
    pub case: &'static str,
    pub numerator: PolyZ,
    pub denominator: PolyZ,
    pub result: PolyZ,
}

/// (−1)^k
fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn lam(k: usize) -> PolyZ {
    PolyZ::x_pow(k)
}

/// λ^k − c
fn lam_minus(k: usize, c: BigInt) -> PolyZ {
    &lam(k) - &PolyZ::constant(c)
}

fn lam_plus_one() -> PolyZ {
    PolyZ::from_i64s(&[1, 1])
}

fn cube_plus_one() -> PolyZ {
    PolyZ::from_i64s(&[1, 0, 0, 1])
}

/// Σ_{j=lo}^{hi} λ^{offset+j}; empty when hi < lo.
fn lam_range(offset: usize, lo: usize, hi: usize) -> PolyZ {
    (lo..=hi).fold(PolyZ::zero(), |acc, j| &acc + &lam(offset + j))
}

/// (−λ)^k
fn neg_lam(k: usize) -> PolyZ {
    PolyZ::monomial(sign(k), k)
}

fn finish(
    params: Vec<(&'static str, usize)>,
    case: &'static str,
    numerator: PolyZ,
    denominator: PolyZ,
) -> Result<FormulaReport> {
    let result = poly_exact_div(&numerator, &denominator)?;
    Ok(FormulaReport { params, case, numerator, denominator, result })
}

fn need_positive(name: &str, x: usize) -> Result<()> {
    if x < 1 {
        return Err(Error::InvalidParameter(format!("{name} must be >= 1")));
    }
    Ok(())
}

pub fn chi_rectangle_report(u: usize) -> Result<FormulaReport> {
    need_positive("u", u)?;
    let s = sign(u + 1);
    let params = vec![("u", u)];
    if u % 3 == 2 {
        let f = lam_minus(u + 1, s);
        finish(params, "u = 2 mod 3", &lam_plus_one() * &(&f * &f), cube_plus_one())
    } else {
        let num = &lam_plus_one() * &lam_minus(3 * u + 3, s.clone());
        let den = &cube_plus_one() * &lam_minus(u + 1, s);
        finish(params, "u = 0, 1 mod 3", num, den)
    }
}

/// Coxeter polynomial of the 2×u rectangle from its closed form.
pub fn chi_rectangle_formula(u: usize) -> Result<PolyZ> {
    Ok(chi_rectangle_report(u)?.result)
}

/// The same polynomial assembled from finite sums, without division.
pub fn chi_rectangle_expansion(u: usize) -> Result<PolyZ> {
    need_positive("u", u)?;
    let i = u / 3;
    let l1 = lam_plus_one();
    let sum = |from: usize, count: usize| -> PolyZ {
        (0..count).fold(PolyZ::zero(), |acc, j| &acc + &neg_lam(from + 3 * j))
    };
    Ok(match u % 3 {
        0 => &(&neg_lam(3 * i) - &(&l1 * &sum(3 * i + 2, i))) + &(&l1 * &sum(0, i)),
        1 => {
            let mid = &neg_lam(3 * i) * &PolyZ::from_i64s(&[1, 1, 1]);
            &(&mid - &(&l1 * &sum(3 * i + 4, i))) + &(&l1 * &sum(0, i))
        }
        _ => &(&l1 * &sum(0, i + 1)) - &(&l1 * &sum(3 * i + 3, i + 1)),
    })
}

pub fn chi_ext1_report(u: usize) -> Result<FormulaReport> {
    need_positive("u", u)?;
    let s = sign(u + 1);
    let params = vec![("u", u)];
    let l1 = lam_plus_one();
    match u % 3 {
        0 => finish(params, "u = 0 mod 3", &l1 * &(&lam(2 * u + 3) + &PolyZ::one()), cube_plus_one()),
        1 => {
            let num = &(&l1 * &lam_minus(u + 1, -&s)) * &lam_minus(u + 2, -&s);
            finish(params, "u = 1 mod 3", num, cube_plus_one())
        }
        _ => {
            let num = &(&l1 * &lam_minus(u + 1, s.clone())) * &lam_minus(u + 2, s);
            finish(params, "u = 2 mod 3", num, cube_plus_one())
        }
    }
}

/// Coxeter polynomial of the rectangle with one extra vertex.
pub fn chi_ext1_formula(u: usize) -> Result<PolyZ> {
    Ok(chi_ext1_report(u)?.result)
}

pub fn chi_ext_report(u: usize, v: usize) -> Result<FormulaReport> {
    need_positive("u", u)?;
    if v == 0 {
        let mut r = chi_rectangle_report(u)?;
        r.params.push(("v", 0));
        r.case = "v = 0 (rectangle)";
        return Ok(r);
    }
    let params = vec![("u", u), ("v", v)];
    let l1 = lam_plus_one();
    let ends = &lam(2 * u + v + 2) + &PolyZ::one();
    match u % 3 {
        0 => {
            let inner = &ends + &lam_range(u, 2, v).scale(&sign(u));
            finish(params, "u = 0 mod 3", &l1 * &inner, cube_plus_one())
        }
        1 => {
            let inner = &ends + &lam_range(u + 1, 0, v).scale(&sign(u + 1));
            finish(params, "u = 1 mod 3", &l1 * &inner, cube_plus_one())
        }
        _ => {
            let s = sign(u + 1);
            let num = &(&l1 * &lam_minus(u + 1, s.clone())) * &lam_minus(u + v + 1, s);
            finish(params, "u = 2 mod 3", num, cube_plus_one())
        }
    }
}

/// Coxeter polynomial of the rectangle with a branch of length v; v = 0
/// gives the rectangle itself.
pub fn chi_ext_formula(u: usize, v: usize) -> Result<PolyZ> {
    Ok(chi_ext_report(u, v)?.result)
}

pub fn chi_nakayama_report(n: usize, r: usize) -> Result<FormulaReport> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter(format!("need 2 <= r <= n, got n={n}, r={r}")));
    }
    if 2 * r < n + 2 {
        return Err(Error::PreconditionViolated(format!("need 2r >= n+2, got n={n}, r={r}")));
    }
    let k = n - r;
    let s = sign(k);
    let params = vec![("n", n), ("r", r)];
    let l1 = lam_plus_one();
    if 2 * r == n + 2 {
        if k % 3 == 1 {
            let f = lam_minus(k + 2, s);
            return finish(params, "2r = n+2, n-r = 1 mod 3", &l1 * &(&f * &f), cube_plus_one());
        }
        let num = &l1 * &lam_minus(3 * k + 6, s.clone());
        let den = &cube_plus_one() * &lam_minus(k + 2, s);
        return finish(params, "2r = n+2, n-r = 0, 2 mod 3", num, den);
    }
    let top = 2 * r - n - 2;
    let ends = &lam(n + 2) + &PolyZ::one();
    match k % 3 {
        0 => {
            let inner = &ends + &lam_range(k + 2, 0, top).scale(&s);
            finish(params, "2r >= n+3, n-r = 0 mod 3", &l1 * &inner, cube_plus_one())
        }
        1 => {
            let num = &(&l1 * &lam_minus(k + 2, s.clone())) * &lam_minus(r, s);
            finish(params, "2r >= n+3, n-r = 1 mod 3", num, cube_plus_one())
        }
        _ => {
            let inner = &ends + &lam_range(k + 1, 2, top).scale(&sign(k + 1));
            finish(params, "2r >= n+3, n-r = 2 mod 3", &l1 * &inner, cube_plus_one())
        }
    }
}

/// Coxeter polynomial of N(n,r) for 2r ≥ n+2.
pub fn chi_nakayama_formula(n: usize, r: usize) -> Result<PolyZ> {
    Ok(chi_nakayama_report(n, r)?.result)
}

/// Coxeter polynomial of the one-point extension A[M] from χ_A and the
/// twisted Euler forms ⟨τ^j M, M⟩.
///
/// With χ_A = Σ a_i λ^{n−i}, the result is Σ b_i λ^{n+1−i} where
/// b_i = a_i − a_{i−1}(⟨M,M⟩−1) − Σ_{j=2}^{i} a_{i−j}⟨τ^{j−1}M,M⟩.
pub fn happel_extension_poly(chi_a: &PolyZ, c: &IntMatrix, m: &DimVector) -> Result<PolyZ> {
    let n = c.n();
    if chi_a.degree() != Some(n) {
        return Err(Error::DimensionMismatch { expected: n, actual: chi_a.degree().unwrap_or(0) });
    }
    if m.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: m.len() });
    }
    if !chi_a.is_monic() {
        return Err(Error::InvalidParameter("characteristic polynomial must be monic".into()));
    }
    let twisted = EulerData::new(c)?.twisted_range(m, n)?;
    Ok(happel_from_forms(chi_a, &twisted))
}

/// The recursion itself, given `twisted[j] = ⟨τ^j M, M⟩` for j = 0..=n.
pub fn happel_from_forms(chi_a: &PolyZ, twisted: &[BigInt]) -> PolyZ {
    let n = chi_a.degree().unwrap_or(0);
    assert!(twisted.len() > n, "need twisted forms for j = 0..={n}");
    let a = |i: isize| -> BigInt {
        if i < 0 || i > n as isize {
            BigInt::zero()
        } else {
            chi_a.coeff(n - i as usize)
        }
    };
    let mut b = Vec::with_capacity(n + 2);
    for i in 0..=(n as isize + 1) {
        let mut bi = a(i) - a(i - 1) * (&twisted[0] - BigInt::one());
        for j in 2..=i {
            bi -= a(i - j) * &twisted[(j - 1) as usize];
        }
        b.push(bi);
    }
    PolyZ::from_descending(b)
}

/// (1+λ)·χ_A − λ·χ_perp
pub fn one_point_step(chi_a: &PolyZ, chi_perp: &PolyZ) -> PolyZ {
    &(&lam_plus_one() * chi_a) - &chi_perp.shift(1)
}
