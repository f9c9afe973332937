use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LadderComplex;
use crate::error::{Error, Result};
use crate::exact::{rat_solve_dim, RatMatrix};

type Basis = Vec<(i64, usize, usize)>;

/// Basis of the degree-k Hom complex: triples (d, t, s) with a nonzero
/// ξ from summand t of X^d to summand s of Y^{d+k}.
fn basis(x: &LadderComplex, y: &LadderComplex, k: i64) -> Basis {
    let spec = x.spec();
    let mut out = Vec::new();
    for (&d, xs) in x.terms() {
        let ys = y.term(d + k);
        for (t, &a) in xs.iter().enumerate() {
            for (s, &b) in ys.iter().enumerate() {
                if spec.hom(a, b) {
                    out.push((d, t, s));
                }
            }
        }
    }
    out
}

/// ∂h = d_Y h − (−1)^k h d_X, from Hom^k to Hom^{k+1}.
fn boundary(x: &LadderComplex, y: &LadderComplex, k: i64) -> RatMatrix {
    let src = basis(x, y, k);
    let tgt = basis(x, y, k + 1);
    let index: HashMap<(i64, usize, usize), usize> = tgt.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut m = RatMatrix::zeros(tgt.len(), src.len());
    let sign = if k.rem_euclid(2) == 0 { -BigRational::one() } else { BigRational::one() };
    for (c, &(d, t, s)) in src.iter().enumerate() {
        if let Some(dy) = y.diff(d + k) {
            for s2 in 0..dy.rows() {
                let e = dy.get(s2, s);
                if let (false, Some(&row)) = (e.is_zero(), index.get(&(d, t, s2))) {
                    m.add_to(row, c, e);
                }
            }
        }
        if let Some(dx) = x.diff(d - 1) {
            for t2 in 0..dx.cols() {
                let e = dx.get(t, t2);
                if let (false, Some(&row)) = (e.is_zero(), index.get(&(d - 1, t2, s))) {
                    m.add_to(row, c, &(e * &sign));
                }
            }
        }
    }
    m
}

/// dim Hom_K(X, Y[k]) in the homotopy category.
pub fn complex_hom_k_dim(x: &LadderComplex, y: &LadderComplex, k: i64) -> Result<usize> {
    if x.spec() != y.spec() {
        return Err(Error::SpecMismatch);
    }
    let cycles = basis(x, y, k).len() - rat_solve_dim(&boundary(x, y, k)).0;
    let boundaries = rat_solve_dim(&boundary(x, y, k - 1)).0;
    Ok(cycles - boundaries)
}
