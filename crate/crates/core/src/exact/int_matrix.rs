use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyZ;
use crate::error::{Error, Result};

/// Dense square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { rows: n, bad_row: i, cols: row.len() });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds an n×n matrix from an entry function on 0-based indices.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| BigInt::from((i == j) as i64))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i).clone()).unwrap()
    }

    pub fn neg(&self) -> Self {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn try_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: rhs.n });
        }
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        entries[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(IntMatrix { n, entries })
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: x.len() });
        }
        Ok((0..self.n)
            .map(|j| x.iter().enumerate().map(|(i, xi)| xi * self.get(i, j)).sum())
            .collect())
    }

    pub fn pow(&self, e: u32) -> IntMatrix {
        let mut acc = IntMatrix::identity(self.n).unwrap();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Reorders rows and columns together: entry (i,j) of the result is
    /// entry (perm[i], perm[j]) of `self`.
    pub fn permute(&self, perm: &[usize]) -> Result<IntMatrix> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: perm.len() });
        }
        IntMatrix::from_fn(self.n, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut a = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    pub fn char_poly(&self) -> PolyZ {
        char_poly_int(self)
    }

    pub fn unimodular_inverse(&self) -> Result<IntMatrix> {
        unimodular_inverse(self)
    }
}

/// det(λI − M) by Berkowitz's division-free algorithm.
pub fn char_poly_int(m: &IntMatrix) -> PolyZ {
    let n = m.n;
    // Descending coefficients of the char poly of the trailing block M[k.., k..].
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for k in (0..n).rev() {
        let s = n - 1 - k;
        let mut toeplitz = Vec::with_capacity(s + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-m.get(k, k));
        // w runs through A1^i·C for i = 0..s-1.
        let mut w: Vec<BigInt> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for step in 0..s {
            let rc: BigInt = (0..s).map(|t| m.get(k, k + 1 + t) * &w[t]).sum();
            toeplitz.push(-rc);
            if step + 1 < s {
                w = (0..s)
                    .map(|i| (0..s).map(|t| m.get(k + 1 + i, k + 1 + t) * &w[t]).sum())
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); s + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in poly.iter().enumerate().take(i + 1) {
                *slot += &toeplitz[i - j] * pj;
            }
        }
        poly = next;
    }
    PolyZ::from_descending(poly)
}

/// Exact integer inverse of a matrix with determinant ±1.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let det = m.det();
    if det.abs() != BigInt::one() {
        return Err(Error::NotUnimodular { det });
    }
    let n = m.n;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect();
            row.extend((0..n).map(|j| BigRational::from_integer(BigInt::from((i == j) as i64))));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero()).expect("nonsingular");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..2 * n {
                let d = &f * &a[c][j];
                a[i][j] -= d;
            }
        }
    }
    IntMatrix::from_fn(n, |i, j| {
        let x = &a[i][n + j];
        debug_assert!(x.is_integer());
        x.to_integer()
    })
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
