//! Bounded complexes over the ladder category of indecomposable projective
//! (or injective) N(n,r)-modules, their Hom spaces in the homotopy category,
//! and the tilting families of the one-branch extensions.
//!
//! In the ladder category Hom(a,b) is one-dimensional, spanned by ξ_{a,b},
//! exactly when a ≤ b < a+r, and ξ_{b,c}·ξ_{a,b} = ξ_{a,c}.

mod complex;
mod hom;
pub mod lemmas;
mod tilting;

use std::fmt;
use std::str::FromStr;

pub use complex::{parse_complexes, LadderComplex};
pub use hom::complex_hom_k_dim;
pub use tilting::{projective_resolution, tilting_family, verify_tilting, TiltingFamily, TiltingReport};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Projective,
    Injective,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Projective => "projective",
            Flavor::Injective => "injective",
        }
    }

    /// Object name prefix, P or I.
    pub fn letter(self) -> char {
        match self {
            Flavor::Projective => 'P',
            Flavor::Injective => 'I',
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projective" | "P" | "p" => Ok(Flavor::Projective),
            "injective" | "I" | "i" => Ok(Flavor::Injective),
            _ => Err(Error::InvalidParameter(format!("unknown flavor `{s}`"))),
        }
    }
}

/// Which ladder category a complex lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderSpec {
    pub n: usize,
    pub r: usize,
    pub flavor: Flavor,
}

impl LadderSpec {
    pub fn new(n: usize, r: usize, flavor: Flavor) -> Result<Self> {
        if r < 2 || r > n {
            return Err(Error::InvalidParameter(format!("ladder needs 2 <= r <= n, got n={n}, r={r}")));
        }
        Ok(LadderSpec { n, r, flavor })
    }

    pub fn projective(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Flavor::Projective)
    }

    pub fn injective(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Flavor::Injective)
    }

    /// Hom(a,b) ≠ 0, for indices already known to be in range.
    pub fn hom(&self, a: usize, b: usize) -> bool {
        a <= b && b < a + self.r
    }

    pub fn check_index(&self, a: usize) -> Result<()> {
        if a < 1 || a > self.n {
            return Err(Error::IndexOutOfRange { index: a, max: self.n });
        }
        Ok(())
    }
}

/// dim Hom(a,b) in the ladder category: 1 iff a ≤ b < a+r, for P_a or I_a alike.
pub fn ladder_hom_dim(spec: &LadderSpec, a: usize, b: usize) -> Result<u8> {
    spec.check_index(a)?;
    spec.check_index(b)?;
    Ok(spec.hom(a, b) as u8)
}

/// Outcome of [`validate_word`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordCheck {
    pub valid: bool,
    pub reason: Option<String>,
}

impl WordCheck {
    fn ok() -> Self {
        WordCheck { valid: true, reason: None }
    }

    fn bad(reason: String) -> Self {
        WordCheck { valid: false, reason: Some(reason) }
    }
}

/// Whether `word` (indices in consecutive degrees) is an indecomposable
/// complex a_{i−1} → a_i → a_{i+1} with a_{i−1} < a_i < a_{i−1}+r ≤ a_{i+1}.
pub fn validate_word(spec: &LadderSpec, word: &[usize]) -> WordCheck {
    if word.is_empty() {
        return WordCheck::bad("empty word".into());
    }
    if let Some(&a) = word.iter().find(|&&a| a < 1 || a > spec.n) {
        return WordCheck::bad(format!("index {a} outside 1..={}", spec.n));
    }
    for (i, w) in word.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        if a >= b {
            return WordCheck::bad(format!("step {i}: need {a} < {b}"));
        }
        if !spec.hom(a, b) {
            return WordCheck::bad(format!("step {i}: differential xi_({a},{b}) vanishes"));
        }
    }
    for (i, w) in word.windows(3).enumerate() {
        if spec.hom(w[0], w[2]) {
            return WordCheck::bad(format!(
                "steps {i},{}: composite xi_({},{}) is nonzero",
                i + 1,
                w[0],
                w[2]
            ));
        }
    }
    WordCheck::ok()
}

/// Every valid word of length at most `max_len`, in lexicographic order.
pub fn enumerate_words(spec: &LadderSpec, max_len: usize) -> Vec<Vec<usize>> {
    fn grow(spec: &LadderSpec, word: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
        out.push(word.clone());
        if word.len() == max_len {
            return;
        }
        let last = *word.last().unwrap();
        let lo = match word.len() {
            1 => last + 1,
            k => (last + 1).max(word[k - 2] + spec.r),
        };
        for b in lo..(last + spec.r).min(spec.n + 1) {
            word.push(b);
            grow(spec, word, max_len, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    for a in 1..=spec.n {
        grow(spec, &mut vec![a], max_len, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hom_dims() {
        let s32 = LadderSpec::projective(3, 2).unwrap();
        assert_eq!(ladder_hom_dim(&s32, 1, 2).unwrap(), 1);
        assert_eq!(ladder_hom_dim(&s32, 1, 3).unwrap(), 0);
        assert_eq!(ladder_hom_dim(&s32, 2, 1).unwrap(), 0);
        let s33 = LadderSpec::projective(3, 3).unwrap();
        assert_eq!(ladder_hom_dim(&s33, 1, 3).unwrap(), 1);
        assert!(matches!(ladder_hom_dim(&s33, 0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(ladder_hom_dim(&s33, 1, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(LadderSpec::projective(3, 1).is_err());
        assert!(LadderSpec::projective(3, 4).is_err());
    }

    #[test]
    fn word_checks() {
        let s33 = LadderSpec::projective(3, 3).unwrap();
        assert!(validate_word(&s33, &[1, 3]).valid);
        let bad = validate_word(&s33, &[1, 2, 3]);
        assert!(!bad.valid);
        assert!(bad.reason.unwrap().contains("composite"));
        let s32 = LadderSpec::projective(3, 2).unwrap();
        let bad = validate_word(&s32, &[1, 3]);
        assert!(bad.reason.unwrap().contains("vanishes"));
        assert!(!validate_word(&s33, &[2, 2]).valid);
        assert!(!validate_word(&s33, &[]).valid);
        assert!(!validate_word(&s33, &[4]).valid);
    }

    #[test]
    fn enumeration_matches_filter() {
        for n in 2..=7 {
            for r in 2..=n {
                let spec = LadderSpec::projective(n, r).unwrap();
                let words = enumerate_words(&spec, 4);
                assert!(words.iter().all(|w| validate_word(&spec, w).valid));
                // Brute force over all strictly increasing sequences.
                let mut brute = 0;
                for mask in 1u32..(1 << n) {
                    let w: Vec<usize> = (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect();
                    if w.len() <= 4 && validate_word(&spec, &w).valid {
                        brute += 1;
                    }
                }
                assert_eq!(words.len(), brute, "n={n} r={r}");
            }
        }
    }
}
