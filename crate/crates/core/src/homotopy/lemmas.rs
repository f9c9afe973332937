//! Predicted Hom_K dimensions for pairs of words, and enumerators of the
//! word pairs each prediction covers.
//!
//! A predicate returns `Some(dim)` when its hypotheses hold and `None`
//! otherwise. Absent terms have zero Hom to and from everything.

use std::fmt;
use std::str::FromStr;

use super::{enumerate_words, LadderComplex, LadderSpec};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomLemma {
    /// X^{≥0}, Y^{≤0}; vanishing when Hom(X0,Y−1) or Hom(X1,Y0) is nonzero.
    TruncatedPair,
    /// X^{≥−1}, Y^{≤0} with Hom(X0,Y−1) ≠ 0.
    ShiftedPair,
    /// Words in degrees −1..1 sharing the middle term.
    SharedMiddle,
}

impl HomLemma {
    pub const ALL: [HomLemma; 3] = [HomLemma::TruncatedPair, HomLemma::ShiftedPair, HomLemma::SharedMiddle];

    pub fn as_str(self) -> &'static str {
        match self {
            HomLemma::TruncatedPair => "truncated-pair",
            HomLemma::ShiftedPair => "shifted-pair",
            HomLemma::SharedMiddle => "shared-middle",
        }
    }

    pub fn predict(self, x: &LadderComplex, y: &LadderComplex) -> Option<usize> {
        match self {
            HomLemma::TruncatedPair => truncated_pair(x, y),
            HomLemma::ShiftedPair => shifted_pair(x, y),
            HomLemma::SharedMiddle => shared_middle(x, y),
        }
    }
}

impl fmt::Display for HomLemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HomLemma {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown lemma `{s}` (truncated-pair, shifted-pair, shared-middle)")))
    }
}

fn hom(x: &LadderComplex, dx: i64, y: &LadderComplex, dy: i64) -> bool {
    match (x.single(dx), y.single(dy)) {
        (Some(a), Some(b)) => x.spec().hom(a, b),
        _ => false,
    }
}

fn is_word_from(x: &LadderComplex, lo: i64) -> bool {
    x.min_degree() == Some(lo) && x.terms().values().all(|v| v.len() == 1)
}

fn is_word_to(y: &LadderComplex, hi: i64) -> bool {
    y.max_degree() == Some(hi) && y.terms().values().all(|v| v.len() == 1)
}

pub fn truncated_pair(x: &LadderComplex, y: &LadderComplex) -> Option<usize> {
    if !is_word_from(x, 0) || !is_word_to(y, 0) {
        return None;
    }
    (hom(x, 0, y, -1) || hom(x, 1, y, 0)).then_some(0)
}

pub fn shifted_pair(x: &LadderComplex, y: &LadderComplex) -> Option<usize> {
    if !is_word_from(x, -1) || !is_word_to(y, 0) || !hom(x, 0, y, -1) {
        return None;
    }
    (hom(x, -1, y, 0) || hom(x, -1, y, -2) || hom(x, 1, y, 0)).then_some(0)
}

pub fn shared_middle(x: &LadderComplex, y: &LadderComplex) -> Option<usize> {
    let within = |c: &LadderComplex| {
        c.min_degree().is_some_and(|d| d >= -1) && c.max_degree().is_some_and(|d| d <= 1)
    };
    if !within(x) || !within(y) || x.single(0).is_none() || x.single(0) != y.single(0) {
        return None;
    }
    let first = x.term(-1).is_empty() || hom(x, -1, y, -1);
    let second = y.term(1).is_empty() || hom(x, 1, y, 1);
    Some((first && second) as usize)
}

/// Every word pair of length at most `max_len` over `spec` that satisfies
/// the hypotheses of `lemma`, in a fixed order.
pub fn lemma_instances(spec: LadderSpec, lemma: HomLemma, max_len: usize) -> Vec<(LadderComplex, LadderComplex)> {
    let words = enumerate_words(&spec, max_len);
    let place = |w: &[usize], start: i64| LadderComplex::word(spec, w, start, "").expect("enumerated words are valid");
    let (xs, ys): (Vec<LadderComplex>, Vec<LadderComplex>) = match lemma {
        HomLemma::TruncatedPair => (
            words.iter().map(|w| place(w, 0)).collect(),
            words.iter().map(|w| place(w, 1 - w.len() as i64)).collect(),
        ),
        HomLemma::ShiftedPair => (
            words.iter().filter(|w| w.len() >= 2).map(|w| place(w, -1)).collect(),
            words.iter().map(|w| place(w, 1 - w.len() as i64)).collect(),
        ),
        HomLemma::SharedMiddle => {
            let mut placed = Vec::new();
            for w in words.iter().filter(|w| w.len() <= 3) {
                for start in (1 - w.len() as i64)..=0 {
                    if start >= -1 && start + w.len() as i64 - 1 <= 1 {
                        placed.push(place(w, start));
                    }
                }
            }
            (placed.clone(), placed)
        }
    };
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            if lemma.predict(x, y).is_some() {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}
