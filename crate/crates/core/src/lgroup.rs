//! The rank-one group L(p1,p2,p3) on x1, x2, x3 with p1·x1 = p2·x2 = p3·x3 = c,
//! the shift equation a·x1 − b·ω = t in L(2,3,u+1), and the Euler form
//! between an Auslander bundle and its Serre twists.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightTriple {
    p: [i64; 3],
}

impl WeightTriple {
    pub fn new(p1: i64, p2: i64, p3: i64) -> Result<Self> {
        if p1 < 2 || p2 < 2 || p3 < 2 {
            return Err(Error::InvalidParameter(format!("weights must be >= 2, got ({p1},{p2},{p3})")));
        }
        Ok(WeightTriple { p: [p1, p2, p3] })
    }

    /// (2, 3, u+1)
    pub fn for_rectangle(u: usize) -> Result<Self> {
        if u < 1 {
            return Err(Error::InvalidParameter("u must be >= 1".into()));
        }
        Self::new(2, 3, u as i64 + 1)
    }

    pub fn weights(&self) -> [i64; 3] {
        self.p
    }
}

/// n1·x1 + n2·x2 + n3·x3 + m·c with 0 ≤ n_i < p_i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LElement {
    pub n1: i64,
    pub n2: i64,
    pub n3: i64,
    pub m: i64,
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n1, self.n2, self.n3, self.m)
    }
}

impl LElement {
    pub const ZERO: LElement = LElement { n1: 0, n2: 0, n3: 0, m: 0 };

    pub fn raw(&self) -> [i64; 4] {
        [self.n1, self.n2, self.n3, self.m]
    }
}

pub fn normalize(p: WeightTriple, raw: [i64; 4]) -> LElement {
    let mut m = raw[3];
    let mut n = [0; 3];
    for i in 0..3 {
        m += raw[i].div_euclid(p.p[i]);
        n[i] = raw[i].rem_euclid(p.p[i]);
    }
    LElement { n1: n[0], n2: n[1], n3: n[2], m }
}

pub fn add(p: WeightTriple, a: LElement, b: LElement) -> LElement {
    let (x, y) = (a.raw(), b.raw());
    normalize(p, [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]])
}

pub fn neg(p: WeightTriple, a: LElement) -> LElement {
    let x = a.raw();
    normalize(p, [-x[0], -x[1], -x[2], -x[3]])
}

pub fn scale(p: WeightTriple, k: i64, a: LElement) -> LElement {
    let x = a.raw();
    normalize(p, [k * x[0], k * x[1], k * x[2], k * x[3]])
}

pub fn generator(p: WeightTriple, i: usize) -> LElement {
    let mut raw = [0; 4];
    raw[i - 1] = 1;
    normalize(p, raw)
}

pub fn canonical_element(p: WeightTriple) -> LElement {
    normalize(p, [0, 0, 0, 1])
}

/// ω = c − x1 − x2 − x3
pub fn canonical_omega(p: WeightTriple) -> LElement {
    normalize(p, [-1, -1, -1, 1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Zero,
    X1,
    X2,
    X3,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Zero, Target::X1, Target::X2, Target::X3];

    pub fn element(self, p: WeightTriple) -> LElement {
        match self {
            Target::Zero => LElement::ZERO,
            Target::X1 => generator(p, 1),
            Target::X2 => generator(p, 2),
            Target::X3 => generator(p, 3),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Target::Zero => "zero",
            Target::X1 => "x1",
            Target::X2 => "x2",
            Target::X3 => "x3",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown target `{s}` (zero, x1, x2, x3)")))
    }
}

/// All (a, b) with 1 ≤ b ≤ 2u+1 and a·x1 − b·ω = target in L(2,3,u+1).
///
/// a·x1 has normal form (a mod 2, 0, 0, ⌊a/2⌋), so for each b the equation
/// is solvable iff b·ω + target has vanishing x2 and x3 parts, and then
/// a = n1 + 2m.
pub fn solve_shift_equation(u: usize, target: Target) -> Result<Vec<(i64, i64)>> {
    let p = WeightTriple::for_rectangle(u)?;
    let omega = canonical_omega(p);
    let t = target.element(p);
    let mut out = Vec::new();
    for b in 1..=(2 * u as i64 + 1) {
        let e = add(p, scale(p, b, omega), t);
        if e.n2 == 0 && e.n3 == 0 {
            out.push((e.n1 + 2 * e.m, b));
        }
    }
    Ok(out)
}

/// ⟨S^j E, E⟩ for an Auslander bundle E over weight type (2,3,u+1).
///
/// Sums (−1)^l over the l with l·x1 − j·ω in {0, x1+ω, x2+ω, x3+ω}.
pub fn auslander_euler(u: usize, j: i64) -> Result<i64> {
    if u < 1 {
        return Err(Error::InvalidParameter("u must be >= 1".into()));
    }
    if j < 1 || j > 2 * u as i64 + 1 {
        return Err(Error::Range(format!("j = {j} (allowed 1..={})", 2 * u + 1)));
    }
    let p = WeightTriple::for_rectangle(u)?;
    let omega = canonical_omega(p);
    let shifted = scale(p, j, omega);
    let hom_support = [
        LElement::ZERO,
        add(p, generator(p, 1), omega),
        add(p, generator(p, 2), omega),
        add(p, generator(p, 3), omega),
    ];
    Ok(hom_support
        .iter()
        .map(|&t| add(p, shifted, t))
        .filter(|e| e.n2 == 0 && e.n3 == 0)
        .map(|e| if e.n1 % 2 == 0 { 1 } else { -1 })
        .sum())
}
