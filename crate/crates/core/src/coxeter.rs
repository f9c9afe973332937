//! Coxeter matrix and polynomial, Euler form, and the τ-action on K₀.
//!
//! Dimension vectors are row vectors; τ acts on the right by Φ.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{unimodular_inverse, IntMatrix, PolyZ};

/// A class in K₀ written in the basis of simples, one coordinate per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DimVector(pub Vec<BigInt>);

impl DimVector {
    pub fn from_i64s(xs: &[i64]) -> Self {
        DimVector(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        DimVector(vec![BigInt::from(0); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn add_scaled(&mut self, other: &DimVector, c: i64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * c;
        }
    }

    pub fn neg(&self) -> Self {
        DimVector(self.0.iter().map(|x| -x).collect())
    }
}

impl Deref for DimVector {
    type Target = [BigInt];
    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Φ = −C⁻ᵗC.
pub fn coxeter_matrix(c: &IntMatrix) -> Result<IntMatrix> {
    let inv_t = unimodular_inverse(c)?.transpose();
    Ok((&inv_t * c).neg())
}

/// Characteristic polynomial of the Coxeter matrix.
pub fn coxeter_polynomial(c: &IntMatrix) -> Result<PolyZ> {
    Ok(coxeter_matrix(c)?.char_poly())
}

/// Precomputed C⁻ᵗ, Φ and Φ⁻¹ for repeated form evaluations.
#[derive(Clone, Debug)]
pub struct EulerData {
    inv_t: IntMatrix,
    phi: IntMatrix,
    phi_inv: IntMatrix,
}

impl EulerData {
    pub fn new(c: &IntMatrix) -> Result<Self> {
        let inv = unimodular_inverse(c)?;
        let inv_t = inv.transpose();
        let phi = (&inv_t * c).neg();
        let phi_inv = (&inv * &c.transpose()).neg();
        Ok(EulerData { inv_t, phi, phi_inv })
    }

    pub fn n(&self) -> usize {
        self.phi.n()
    }

    pub fn phi(&self) -> &IntMatrix {
        &self.phi
    }

    pub fn phi_inv(&self) -> &IntMatrix {
        &self.phi_inv
    }

    fn check(&self, x: &[BigInt]) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), actual: x.len() });
        }
        Ok(())
    }

    /// ⟨x,y⟩ = x·C⁻ᵗ·yᵗ
    pub fn form(&self, x: &[BigInt], y: &[BigInt]) -> Result<BigInt> {
        self.check(x)?;
        self.check(y)?;
        let xc = self.inv_t.left_mul_vec(x)?;
        Ok(xc.iter().zip(y).map(|(a, b)| a * b).sum())
    }

    /// x·Φ^j, with negative j through Φ⁻¹.
    pub fn tau(&self, x: &[BigInt], j: i64) -> Result<DimVector> {
        self.check(x)?;
        let m = if j >= 0 { &self.phi } else { &self.phi_inv };
        let mut v = x.to_vec();
        for _ in 0..j.unsigned_abs() {
            v = m.left_mul_vec(&v)?;
        }
        Ok(DimVector(v))
    }

    /// ⟨τ^j m, m⟩
    pub fn twisted(&self, m: &[BigInt], j: i64) -> Result<BigInt> {
        self.form(&self.tau(m, j)?, m)
    }

    /// ⟨τ^j m, m⟩ for j = 0..=jmax.
    pub fn twisted_range(&self, m: &[BigInt], jmax: usize) -> Result<Vec<BigInt>> {
        self.check(m)?;
        let mut out = Vec::with_capacity(jmax + 1);
        let mut v = m.to_vec();
        for j in 0..=jmax {
            if j > 0 {
                v = self.phi.left_mul_vec(&v)?;
            }
            out.push(self.form(&v, m)?);
        }
        Ok(out)
    }
}

pub fn euler_form(c: &IntMatrix, x: &DimVector, y: &DimVector) -> Result<BigInt> {
    EulerData::new(c)?.form(x, y)
}

pub fn tau_twisted_euler(c: &IntMatrix, m: &DimVector, j: i64) -> Result<BigInt> {
    EulerData::new(c)?.twisted(m, j)
}

/// [I_j] = row j of C (1-based).
pub fn injective_class(c: &IntMatrix, j: usize) -> Result<DimVector> {
    if j < 1 || j > c.n() {
        return Err(Error::IndexOutOfRange { index: j, max: c.n() });
    }
    Ok(DimVector(c.row(j - 1).to_vec()))
}

/// [P_j] = column j of C (1-based).
pub fn projective_class(c: &IntMatrix, j: usize) -> Result<DimVector> {
    if j < 1 || j > c.n() {
        return Err(Error::IndexOutOfRange { index: j, max: c.n() });
    }
    Ok(DimVector(c.col(j - 1)))
}
