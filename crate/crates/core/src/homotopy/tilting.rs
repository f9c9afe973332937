use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use super::{complex_hom_k_dim, LadderComplex, LadderSpec};
use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::poset::ExtensionVariant;

/// Minimal projective resolution of S_a^{(j)}, the module of length j with
/// top S_a, as a word ending in degree 0.
pub fn projective_resolution(spec: LadderSpec, a: usize, j: usize) -> Result<LadderComplex> {
    if spec.flavor != super::Flavor::Projective {
        return Err(Error::InvalidParameter("projective resolutions need the projective flavor".into()));
    }
    spec.check_index(a)?;
    let top_len = a.min(spec.r);
    if j < 1 || j > top_len {
        return Err(Error::InvalidParameter(format!("S_{a}^({j}) needs 1 <= j <= {top_len}")));
    }
    let (mut top, mut len) = (a, j);
    let mut word = vec![top];
    let mut seen = HashSet::from([(top, len)]);
    while len < top.min(spec.r) {
        let next_len = top.min(spec.r) - len;
        top -= len;
        len = next_len;
        if !seen.insert((top, len)) {
            return Err(Error::NonTerminating { top, length: len });
        }
        word.push(top);
    }
    word.reverse();
    let start = 1 - word.len() as i64;
    LadderComplex::word(spec, &word, start, format!("S_{a}^({j})"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TiltingFamily {
    Upper,
    Lower,
    Post,
    Pre,
}

impl TiltingFamily {
    pub const ALL: [TiltingFamily; 4] =
        [TiltingFamily::Upper, TiltingFamily::Lower, TiltingFamily::Post, TiltingFamily::Pre];

    pub fn as_str(self) -> &'static str {
        match self {
            TiltingFamily::Upper => "upper",
            TiltingFamily::Lower => "lower",
            TiltingFamily::Post => "post",
            TiltingFamily::Pre => "pre",
        }
    }

    /// The extension poset whose incidence algebra the endomorphism ring realizes.
    pub fn shape(self) -> ExtensionVariant {
        match self {
            TiltingFamily::Upper => ExtensionVariant::UpperOut,
            TiltingFamily::Lower => ExtensionVariant::LowerIn,
            TiltingFamily::Post => ExtensionVariant::LowerOut,
            TiltingFamily::Pre => ExtensionVariant::UpperIn,
        }
    }
}

impl fmt::Display for TiltingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TiltingFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}` (upper, lower, post, pre)")))
    }
}

/// The 2u+v summands of the tilting family over N(2u+v, u+v+1).
pub fn tilting_family(u: usize, v: usize, which: TiltingFamily) -> Result<Vec<LadderComplex>> {
    if u < 1 || v < 1 {
        return Err(Error::InvalidParameter(format!("need u, v >= 1, got u={u}, v={v}")));
    }
    let n = 2 * u + v;
    let r = u + v + 1;
    let proj = LadderSpec::projective(n, r)?;
    let word = |spec, w: &[usize], start, label: String| LadderComplex::word(spec, w, start, label);
    let mut out = Vec::with_capacity(n);
    match which {
        TiltingFamily::Upper => {
            for i in u + v..=n {
                out.push(word(proj, &[i], 0, format!("P_{i}"))?);
            }
            for j in 1..u + v {
                out.push(projective_resolution(proj, u + v, j)?);
            }
        }
        TiltingFamily::Lower => {
            for i in 1..=u + 1 {
                let top = (i + r - 1).min(n);
                out.push(projective_resolution(proj, top, top - i + 1)?.with_label(format!("I_{i}")));
            }
            for j in 1..u + v {
                out.push(projective_resolution(proj, u + j, j)?);
            }
        }
        TiltingFamily::Post => {
            let m = u + v + 1;
            out.push(word(proj, &[m], 0, format!("P_{m}"))?);
            for i in 1..u {
                out.push(word(proj, &[m, m + i], 0, format!("E_{i}"))?);
            }
            for j in u..=u + v {
                out.push(word(proj, &[j, m], -1, format!("F_{j}"))?);
            }
            for l in 1..u {
                out.push(word(proj, &[l, m, m + l], -1, format!("G_{l}"))?);
            }
        }
        TiltingFamily::Pre => {
            let inj = LadderSpec::injective(n, r)?;
            out.push(word(inj, &[u], 0, format!("I_{u}"))?);
            for i in 1..u {
                out.push(word(inj, &[i, u], -1, format!("E'_{i}"))?);
            }
            for j in u + 1..=u + v + 1 {
                out.push(word(inj, &[u, j], 0, format!("F'_{j}"))?);
            }
            for l in 1..u {
                out.push(word(inj, &[l, u, u + v + 1 + l], -1, format!("G'_{l}"))?);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingReport {
    pub rigid: bool,
    /// (s, t, k) with Hom_K(T_s, T_t[k]) ≠ 0 and k ≠ 0.
    pub violations: Vec<(usize, usize, i64)>,
    /// Largest |k| checked.
    pub shift_bound: i64,
    /// Rows are K₀ classes; `None` unless there are exactly n summands.
    pub k0_matrix: Option<IntMatrix>,
    pub k0_unimodular: bool,
    /// g_st = dim Hom_K(T_s, T_t).
    pub end_cartan: IntMatrix,
}

pub fn verify_tilting(family: &[LadderComplex]) -> Result<TiltingReport> {
    let first = family.first().ok_or_else(|| Error::InvalidParameter("empty family".into()))?;
    let spec = *first.spec();
    if family.iter().any(|t| *t.spec() != spec) {
        return Err(Error::SpecMismatch);
    }
    let lo = family.iter().filter_map(LadderComplex::min_degree).min().unwrap_or(0);
    let hi = family.iter().filter_map(LadderComplex::max_degree).max().unwrap_or(0);
    let shift_bound = hi - lo + 1;
    let m = family.len();

    let triples: Vec<(usize, usize, i64)> = (0..m)
        .flat_map(|s| (0..m).flat_map(move |t| (-shift_bound..=shift_bound).map(move |k| (s, t, k))))
        .collect();
    let dims = triples
        .par_iter()
        .map(|&(s, t, k)| complex_hom_k_dim(&family[s], &family[t], k))
        .collect::<Result<Vec<usize>>>()?;

    let mut end = vec![vec![BigInt::from(0); m]; m];
    let mut violations = Vec::new();
    for (&(s, t, k), &d) in triples.iter().zip(&dims) {
        if k == 0 {
            end[s][t] = BigInt::from(d);
        } else if d != 0 {
            violations.push((s, t, k));
        }
    }
    let k0_matrix = if m == spec.n {
        Some(IntMatrix::from_rows(family.iter().map(|t| t.k0_class().0).collect())?)
    } else {
        None
    };
    let k0_unimodular = k0_matrix.as_ref().is_some_and(|k| k.det().abs().is_one());
    Ok(TiltingReport {
        rigid: violations.is_empty(),
        violations,
        shift_bound,
        k0_matrix,
        k0_unimodular,
        end_cartan: IntMatrix::from_rows(end)?,
    })
}
