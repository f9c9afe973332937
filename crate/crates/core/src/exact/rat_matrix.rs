use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense rectangular matrix over ℚ. `BigRational` keeps every entry reduced
/// with a positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, actual: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { rows: r, cols: c, entries })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &BigRational) {
        self.entries[i * self.cols + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn try_mul(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, actual: rhs.rows });
        }
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rat_solve_dim(self).0
    }
}

/// Rank and nullity (rank + nullity = number of columns).
///
/// Rows are scaled to primitive integer vectors, then eliminated without
/// fractions; each updated row is divided by its content to keep entries small.
pub fn rat_solve_dim(a: &RatMatrix) -> (usize, usize) {
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows).filter_map(|i| primitive_row(a.row(i))).collect();
    let mut rank = 0;
    for c in 0..a.cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (pivot_row, rest) = rows.split_at_mut(rank + 1);
        let pivot = &pivot_row[rank];
        for row in rest.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            let g = pivot[c].clone();
            for j in c..a.cols {
                row[j] = &row[j] * &g - &f * &pivot[j];
            }
            reduce_content(row);
        }
        rank += 1;
    }
    (rank, a.cols - rank)
}

fn primitive_row(row: &[BigRational]) -> Option<Vec<BigInt>> {
    if row.iter().all(Zero::is_zero) {
        return None;
    }
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    reduce_content(&mut out);
    Some(out)
}

fn reduce_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix{self}")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                if x.is_integer() {
                    write!(f, "{}", x.numer())?;
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())?;
                }
            }
        }
        write!(f, "]")
    }
}
