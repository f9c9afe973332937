use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{validate_word, LadderSpec};
use crate::coxeter::DimVector;
use crate::error::{Error, Result};
use crate::exact::RatMatrix;

/// A bounded complex of ladder objects.
///
/// `terms[d]` lists the summand indices in degree d. `diffs[d]` is the
/// differential from degree d to d+1: entry (s,t) is the coefficient of
/// ξ from summand t of degree d to summand s of degree d+1. Missing
/// differentials are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct LadderComplex {
    spec: LadderSpec,
    terms: BTreeMap<i64, Vec<usize>>,
    diffs: BTreeMap<i64, RatMatrix>,
    label: String,
}

impl LadderComplex {
    pub fn new(
        spec: LadderSpec,
        terms: BTreeMap<i64, Vec<usize>>,
        diffs: BTreeMap<i64, RatMatrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let terms: BTreeMap<i64, Vec<usize>> = terms.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        for &a in terms.values().flatten() {
            spec.check_index(a)?;
        }
        let empty = Vec::new();
        let mut kept = BTreeMap::new();
        for (d, m) in diffs {
            let src = terms.get(&d).unwrap_or(&empty);
            let tgt = terms.get(&(d + 1)).unwrap_or(&empty);
            if m.rows() != tgt.len() || m.cols() != src.len() {
                return Err(Error::InvalidComplex(format!(
                    "d[{d}] is {}x{}, degrees {d} and {} have {} and {} summands",
                    m.rows(),
                    m.cols(),
                    d + 1,
                    src.len(),
                    tgt.len()
                )));
            }
            for (s, &b) in tgt.iter().enumerate() {
                for (t, &a) in src.iter().enumerate() {
                    if !m.get(s, t).is_zero() && !spec.hom(a, b) {
                        return Err(Error::InvalidComplex(format!(
                            "d[{d}] has a nonzero entry from {a} to {b}, where Hom vanishes"
                        )));
                    }
                }
            }
            if !m.is_zero() {
                kept.insert(d, m);
            }
        }
        let x = LadderComplex { spec, terms, diffs: kept, label: label.into() };
        x.check_square_zero()?;
        Ok(x)
    }

    /// The word a_0 → a_1 → … placed in degrees start, start+1, … with every
    /// differential the canonical ξ.
    pub fn word(spec: LadderSpec, word: &[usize], start: i64, label: impl Into<String>) -> Result<Self> {
        let check = validate_word(&spec, word);
        if !check.valid {
            return Err(Error::InvalidComplex(check.reason.unwrap_or_default()));
        }
        let terms = word.iter().enumerate().map(|(i, &a)| (start + i as i64, vec![a])).collect();
        let diffs = (0..word.len().saturating_sub(1))
            .map(|i| (start + i as i64, RatMatrix::identity(1)))
            .collect();
        Self::new(spec, terms, diffs, label)
    }

    /// A single object in degree d.
    pub fn stalk(spec: LadderSpec, a: usize, d: i64, label: impl Into<String>) -> Result<Self> {
        Self::word(spec, &[a], d, label)
    }

    pub fn spec(&self) -> &LadderSpec {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.terms
    }

    pub fn term(&self, d: i64) -> &[usize] {
        self.terms.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn diff(&self, d: i64) -> Option<&RatMatrix> {
        self.diffs.get(&d)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The single summand index in degree d, if there is exactly one.
    pub fn single(&self, d: i64) -> Option<usize> {
        match self.term(d) {
            [a] => Some(*a),
            _ => None,
        }
    }

    /// X[k]: degree d holds X^{d+k}, differentials scaled by (−1)^k.
    pub fn shift(&self, k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { BigRational::one() } else { -BigRational::one() };
        let terms = self.terms.iter().map(|(&d, v)| (d - k, v.clone())).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&d, m)| {
                let mut m = m.clone();
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        let x = m.get(i, j) * &sign;
                        m.set(i, j, x);
                    }
                }
                (d - k, m)
            })
            .collect();
        LadderComplex { spec: self.spec, terms, diffs, label: format!("{}[{k}]", self.label) }
    }

    /// Alternating sum Σ (−1)^d [X^d] in the basis of simples.
    pub fn k0_class(&self) -> DimVector {
        let n = self.spec.n;
        let mut v = DimVector::zeros(n);
        for (&d, objs) in &self.terms {
            let sign = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            for &a in objs {
                v.add_scaled(&object_class(&self.spec, a), sign);
            }
        }
        v
    }

    fn check_square_zero(&self) -> Result<()> {
        for (&d, first) in &self.diffs {
            let Some(second) = self.diffs.get(&(d + 1)) else { continue };
            let src = self.term(d);
            let tgt = self.term(d + 2);
            for (s, &c) in tgt.iter().enumerate() {
                for (t, &a) in src.iter().enumerate() {
                    if !self.spec.hom(a, c) {
                        continue;
                    }
                    let sum: BigRational = (0..first.rows()).map(|m| second.get(s, m) * first.get(m, t)).sum();
                    if !sum.is_zero() {
                        return Err(Error::InvalidComplex(format!(
                            "d[{}]·d[{d}] is nonzero from {a} to {c}",
                            d + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Text form accepted by [`parse_complexes`].
    pub fn to_literal(&self) -> String {
        let mut out = String::new();
        if !self.label.is_empty() {
            out.push_str(&format!("label {}\n", self.label));
        }
        for (d, objs) in &self.terms {
            let list: Vec<String> = objs.iter().map(usize::to_string).collect();
            out.push_str(&format!("@{d}: {}\n", list.join(",")));
        }
        for (d, m) in &self.diffs {
            let body = m.to_string();
            out.push_str(&format!("d[{d}]: {}\n", &body[1..body.len() - 1]));
        }
        out
    }
}

/// [P_a] is column a of the Nakayama Cartan matrix, [I_a] is row a.
pub(crate) fn object_class(spec: &LadderSpec, a: usize) -> DimVector {
    let n = spec.n;
    let mut v = DimVector::zeros(n);
    for b in 1..=n {
        let hit = match spec.flavor {
            super::Flavor::Projective => spec.hom(b, a),
            super::Flavor::Injective => spec.hom(a, b),
        };
        if hit {
            v.0[b - 1] = BigInt::one();
        }
    }
    v
}

impl fmt::Debug for LadderComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LadderComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.label.is_empty() {
            write!(f, "{} = ", self.label)?;
        }
        let letter = self.spec.flavor.letter();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(d, objs)| {
                let objs: Vec<String> = objs.iter().map(|a| format!("{letter}{a}")).collect();
                format!("{}@{d}", objs.join("+"))
            })
            .collect();
        write!(f, "({})", parts.join(" -> "))
    }
}

fn parse_rational(tok: &str) -> Option<BigRational> {
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (tok.trim().parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Parses complexes in the literal format.
///
/// ```text
/// label F1          # optional
/// @-1: 1
/// @0: 3
/// d[-1]: 1          # rows separated by ';', entries may be fractions
/// ---               # starts the next complex
/// ```
///
/// A missing differential between two single-summand degrees defaults to ξ
/// with coefficient 1 when that Hom is nonzero, and to zero otherwise.
pub fn parse_complexes(text: &str, spec: LadderSpec) -> Result<Vec<LadderComplex>> {
    struct Pending {
        label: String,
        terms: BTreeMap<i64, Vec<usize>>,
        diffs: BTreeMap<i64, (usize, Vec<Vec<BigRational>>)>,
        first_line: usize,
    }
    let mut out = Vec::new();
    let mut cur: Option<Pending> = None;

    let finish = |p: Pending, out: &mut Vec<LadderComplex>| -> Result<()> {
        let mut diffs = BTreeMap::new();
        for (d, (line, rows)) in p.diffs {
            let m = RatMatrix::from_rows(rows).map_err(|e| Error::Parse { line, message: e.to_string() })?;
            let m = if m.rows() == 0 { RatMatrix::zeros(0, p.terms.get(&d).map_or(0, Vec::len)) } else { m };
            diffs.insert(d, m);
        }
        let degrees: Vec<i64> = p.terms.keys().copied().collect();
        for &d in &degrees {
            if diffs.contains_key(&d) || !p.terms.contains_key(&(d + 1)) {
                continue;
            }
            let (src, tgt) = (&p.terms[&d], &p.terms[&(d + 1)]);
            let any_hom = src.iter().any(|&a| tgt.iter().any(|&b| spec.hom(a, b)));
            if !any_hom {
                continue;
            }
            match (src.as_slice(), tgt.as_slice()) {
                ([_], [_]) => {
                    diffs.insert(d, RatMatrix::identity(1));
                }
                _ => {
                    return Err(Error::Parse {
                        line: p.first_line,
                        message: format!("differential d[{d}] is ambiguous; give it explicitly"),
                    })
                }
            }
        }
        out.push(LadderComplex::new(spec, p.terms, diffs, p.label)?);
        Ok(())
    };

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if line == "---" {
            if let Some(p) = cur.take() {
                finish(p, &mut out)?;
            }
            continue;
        }
        let p = cur.get_or_insert_with(|| Pending {
            label: String::new(),
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
            first_line: line_no,
        });
        if let Some(rest) = line.strip_prefix("label") {
            p.label = rest.trim().to_owned();
        } else if let Some(rest) = line.strip_prefix('@') {
            let (d, list) = rest.split_once(':').ok_or_else(|| err("expected `@d: a,b,...`".into()))?;
            let d: i64 = d.trim().parse().map_err(|_| err(format!("bad degree `{}`", d.trim())))?;
            let objs = list
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err(format!("bad index `{s}`"))))
                .collect::<Result<Vec<_>>>()?;
            if p.terms.insert(d, objs).is_some() {
                return Err(err(format!("degree {d} given twice")));
            }
        } else if let Some(rest) = line.strip_prefix("d[") {
            let (d, body) = rest.split_once("]:").ok_or_else(|| err("expected `d[d]: rows`".into()))?;
            let d: i64 = d.trim().parse().map_err(|_| err(format!("bad degree `{}`", d.trim())))?;
            let rows = body
                .split(';')
                .map(str::trim)
                .filter(|r| !r.is_empty())
                .map(|r| {
                    r.split_whitespace()
                        .map(|t| parse_rational(t).ok_or_else(|| err(format!("bad rational `{t}`"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if p.diffs.insert(d, (line_no, rows)).is_some() {
                return Err(err(format!("d[{d}] given twice")));
            }
        } else {
            return Err(err(format!("unrecognized line `{line}`")));
        }
    }
    if let Some(p) = cur.take() {
        finish(p, &mut out)?;
    }
    Ok(out)
}
