use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in λ, coefficients stored lowest degree first.
///
/// Trailing zeros are always stripped, so the zero polynomial is the empty
/// list and derived equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyZ { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from coefficients listed highest degree first.
    pub fn from_descending(coeffs: Vec<BigInt>) -> Self {
        let mut c = coeffs;
        c.reverse();
        Self::new(c)
    }

    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// c·λ^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// λ^k
    pub fn x_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of λ^i, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by λ^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyZ { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Long division over ℤ. Every quotient coefficient must be an integer,
    /// which is automatic when the divisor is monic.
    pub fn div_rem(&self, den: &PolyZ) -> Result<(PolyZ, PolyZ)> {
        let Some(dd) = den.degree() else {
            return Err(Error::InvalidParameter("division by the zero polynomial".into()));
        };
        let lead = den.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                // Not divisible over ℤ: what is left is the obstruction.
                return Ok((PolyZ::new(quot), PolyZ::new(rem)));
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        Ok((PolyZ::new(quot), PolyZ::new(rem)))
    }

    pub fn exact_div(&self, den: &PolyZ) -> Result<PolyZ> {
        poly_exact_div(self, den)
    }
}

/// Returns q with `num = q·den`, or the nonzero remainder as an error.
pub fn poly_exact_div(num: &PolyZ, den: &PolyZ) -> Result<PolyZ> {
    let (q, r) = num.div_rem(den)?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonExactDivision { remainder: r })
    }
}

impl PolyZ {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Debug for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyZ({self})")
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::new(out)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyZ {
            type Output = PolyZ;
            fn $m(self, rhs: PolyZ) -> PolyZ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        -&self
    }
}
