//! Finite posets, the rectangle family and its one-branch extensions, and
//! their Cartan matrices.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

/// A finite poset on named elements. The order is stored as its full
/// reflexive-transitive closure.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds a poset from element names and generating relations `a < b`
    /// given as index pairs.
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in relations {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b) + 1, max: n });
            }
            if a == b {
                return Err(Error::Cycle(names[a].clone()));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if !leq[i][k] {
                    continue;
                }
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(Error::Cycle(names[i].clone()));
                }
            }
        }
        Ok(Poset { names, index, leq })
    }

    /// Same as [`Poset::new`] with relations given by element name.
    pub fn from_named(names: Vec<String>, relations: &[(String, String)]) -> Result<Self> {
        let lookup: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let find = |s: &str| lookup.get(s).copied().ok_or_else(|| Error::UnknownElement(s.to_owned()));
        let rel = relations
            .iter()
            .map(|(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, &rel)
    }

    /// Parses the text format: `elem NAME` declarations, `A < B` relations,
    /// `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut seen = HashSet::new();
        let mut relations: Vec<(usize, String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno + 1, message };
            let mut tokens = line.split_whitespace();
            if tokens.next() == Some("elem") {
                let (Some(name), None) = (tokens.next(), tokens.next()) else {
                    return Err(err(format!("malformed declaration `{line}`")));
                };
                if name.contains('<') {
                    return Err(err(format!("element names may not contain `<`: `{name}`")));
                }
                if !seen.insert(name.to_owned()) {
                    return Err(Error::DuplicateElement(name.to_owned()));
                }
                names.push(name.to_owned());
            } else if let Some((a, b)) = line.split_once('<') {
                let (a, b) = (a.trim(), b.trim());
                if a.is_empty() || b.is_empty() || b.contains('<') {
                    return Err(err(format!("malformed relation `{line}`")));
                }
                relations.push((lineno + 1, a.to_owned(), b.to_owned()));
            } else {
                return Err(err(format!("expected `elem NAME` or `A < B`, found `{line}`")));
            }
        }
        for (_, a, b) in &relations {
            for x in [a, b] {
                if !seen.contains(x) {
                    return Err(Error::UnknownElement(x.clone()));
                }
            }
        }
        let named: Vec<(String, String)> = relations.into_iter().map(|(_, a, b)| (a, b)).collect();
        Self::from_named(names, &named)
    }

    /// Text form accepted by [`Poset::parse`], listing cover relations only.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str(&format!("elem {name}\n"));
        }
        for (a, b) in self.covers() {
            out.push_str(&format!("{} < {}\n", self.names[a], self.names[b]));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn leq_named(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.leq(self.index_of(a)?, self.index_of(b)?))
    }

    /// Number of pairs (a,b) with a ≤ b, reflexive pairs included.
    pub fn comparable_pairs(&self) -> usize {
        self.leq.iter().flatten().filter(|&&x| x).count()
    }

    /// Pairs (a,b) with b covering a.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&b| !(0..self.len()).any(|a| self.lt(a, b))).collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| !(0..self.len()).any(|b| self.lt(a, b))).collect()
    }

    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let leq = (0..n).map(|i| (0..n).map(|j| self.leq[j][i]).collect()).collect();
        Poset { names: self.names.clone(), index: self.index.clone(), leq }
    }

    /// Default linear extension: repeatedly take the lexicographically
    /// smallest name among the remaining minimal elements.
    pub fn linear_extension(&self) -> Vec<String> {
        let n = self.len();
        let mut indeg: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| self.lt(a, b)).count()).collect();
        let mut ready: BTreeSet<(&str, usize)> =
            (0..n).filter(|&i| indeg[i] == 0).map(|i| (self.names[i].as_str(), i)).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(first) = ready.pop_first() {
            let a = first.1;
            out.push(self.names[a].clone());
            for b in 0..n {
                if self.lt(a, b) {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert((self.names[b].as_str(), b));
                    }
                }
            }
        }
        out
    }

    /// Resolves an order given by names into indices, checking that it lists
    /// every element exactly once and respects the order relation.
    pub fn order_indices<S: AsRef<str>>(&self, order: &[S]) -> Result<Vec<usize>> {
        let idx = self.permutation_indices(order)?;
        let mut pos = vec![0; self.len()];
        for (p, &i) in idx.iter().enumerate() {
            pos[i] = p;
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.lt(a, b) && pos[a] > pos[b] {
                    return Err(Error::NotLinearExtension(format!(
                        "{} < {} but {} is listed first",
                        self.names[a], self.names[b], self.names[b]
                    )));
                }
            }
        }
        Ok(idx)
    }

    pub(crate) fn permutation_indices<S: AsRef<str>>(&self, order: &[S]) -> Result<Vec<usize>> {
        if order.len() != self.len() {
            return Err(Error::NotLinearExtension(format!(
                "order lists {} elements, poset has {}",
                order.len(),
                self.len()
            )));
        }
        let mut seen = vec![false; self.len()];
        let mut idx = Vec::with_capacity(order.len());
        for name in order {
            let i = self.index_of(name.as_ref())?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotLinearExtension(format!("`{}` listed twice", name.as_ref())));
            }
            idx.push(i);
        }
        Ok(idx)
    }

    /// Cartan matrix in the default linear extension.
    pub fn cartan(&self) -> Result<IntMatrix> {
        incidence_cartan(self, &self.linear_extension())
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        f.debug_struct("Poset").field("elements", &self.names).field("covers", &covers).finish()
    }
}

/// Where the chain c1 < … < cv is glued onto the rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionVariant {
    /// (2,u) < c1: the chain sits above the global maximum.
    LowerOut,
    /// (1,u) < c1.
    UpperOut,
    /// cv < (2,1).
    LowerIn,
    /// cv < (1,1): the chain sits below the global minimum.
    UpperIn,
}

impl ExtensionVariant {
    pub const ALL: [ExtensionVariant; 4] = [
        ExtensionVariant::LowerOut,
        ExtensionVariant::UpperOut,
        ExtensionVariant::LowerIn,
        ExtensionVariant::UpperIn,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ExtensionVariant::LowerOut => "lower_out",
            ExtensionVariant::UpperOut => "upper_out",
            ExtensionVariant::LowerIn => "lower_in",
            ExtensionVariant::UpperIn => "upper_in",
        }
    }
}

impl fmt::Display for ExtensionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExtensionVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.as_str() == s.replace('-', "_"))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown extension variant `{s}`")))
    }
}

pub fn grid_name(i: usize, j: usize) -> String {
    format!("({i},{j})")
}

pub fn chain_name(k: usize) -> String {
    format!("c{k}")
}

fn grid_parts(u: usize) -> (Vec<String>, Vec<(usize, usize)>) {
    // Index of (i,j) is (i-1)·u + (j-1).
    let mut names = Vec::with_capacity(2 * u);
    let mut rel = Vec::new();
    for i in 1..=2 {
        for j in 1..=u {
            names.push(grid_name(i, j));
        }
    }
    for j in 0..u {
        rel.push((j, u + j));
        if j + 1 < u {
            rel.push((j, j + 1));
            rel.push((u + j, u + j + 1));
        }
    }
    (names, rel)
}

/// The 2×u grid {1,2}×{1..u} with componentwise order.
pub fn rectangle_poset(u: usize) -> Result<Poset> {
    if u < 1 {
        return Err(Error::InvalidParameter(format!("rectangle needs u >= 1, got {u}")));
    }
    let (names, rel) = grid_parts(u);
    Poset::new(names, &rel)
}

/// The rectangle of width u with a chain of length v glued as `variant` says.
pub fn extension_poset(u: usize, v: usize, variant: ExtensionVariant) -> Result<Poset> {
    if u < 1 || v < 1 {
        return Err(Error::InvalidParameter(format!("extension needs u, v >= 1, got u={u}, v={v}")));
    }
    let (mut names, mut rel) = grid_parts(u);
    let c = |k: usize| 2 * u + k - 1;
    for k in 1..=v {
        names.push(chain_name(k));
        if k < v {
            rel.push((c(k), c(k + 1)));
        }
    }
    match variant {
        ExtensionVariant::LowerOut => rel.push((2 * u - 1, c(1))),
        ExtensionVariant::UpperOut => rel.push((u - 1, c(1))),
        ExtensionVariant::LowerIn => rel.push((c(v), u)),
        ExtensionVariant::UpperIn => rel.push((c(v), 0)),
    }
    Poset::new(names, &rel)
}

/// Cartan matrix of the incidence algebra: c_xy = 1 iff x ≤ y, rows and
/// columns in the given order.
pub fn incidence_cartan<S: AsRef<str>>(x: &Poset, order: &[S]) -> Result<IntMatrix> {
    let idx = x.order_indices(order)?;
    IntMatrix::from_fn(idx.len(), |i, j| BigInt::from(x.leq(idx[i], idx[j]) as i64))
}

/// Cartan matrix of the Nakayama algebra N(n,r): c_ab = 1 iff a ≤ b < a+r.
pub fn nakayama_cartan(n: usize, r: usize) -> Result<IntMatrix> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameter(format!("Nakayama needs 2 <= r <= n, got n={n}, r={r}")));
    }
    IntMatrix::from_fn(n, |a, b| BigInt::from((a <= b && b < a + r) as i64))
}

/// Whether `y` is a down-set of `x`.
pub fn is_downward_closed<S: AsRef<str>>(x: &Poset, y: &[S]) -> Result<bool> {
    let mut member = vec![false; x.len()];
    for name in y {
        member[x.index_of(name.as_ref())?] = true;
    }
    Ok(first_missing_below(x, &member).is_none())
}

pub(crate) fn first_missing_below(x: &Poset, member: &[bool]) -> Option<usize> {
    (0..x.len()).find(|&a| !member[a] && (0..x.len()).any(|b| member[b] && x.leq(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn chain(n: usize) -> Poset {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(names, &rel).unwrap()
    }

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn rectangle_examples() {
        let r1 = rectangle_poset(1).unwrap();
        assert_eq!((r1.len(), r1.comparable_pairs()), (2, 3));
        let r2 = rectangle_poset(2).unwrap();
        assert_eq!((r2.len(), r2.comparable_pairs()), (4, 9));
        let r3 = rectangle_poset(3).unwrap();
        assert_eq!(r3.len(), 6);
        assert!(!r3.leq_named("(1,2)", "(2,1)").unwrap());
        assert!(!r3.leq_named("(2,1)", "(1,2)").unwrap());
        assert_eq!(r3.minima(), vec![r3.index_of("(1,1)").unwrap()]);
        assert_eq!(r3.maxima(), vec![r3.index_of("(2,3)").unwrap()]);
        assert!(matches!(rectangle_poset(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn extension_examples() {
        let lo = extension_poset(1, 1, ExtensionVariant::LowerOut).unwrap();
        assert_eq!(lo.comparable_pairs(), 6, "3-chain");
        let uo = extension_poset(1, 1, ExtensionVariant::UpperOut).unwrap();
        assert_eq!(uo.minima().len(), 1);
        assert_eq!(uo.maxima().len(), 2);
        for v in ExtensionVariant::ALL {
            assert_eq!(extension_poset(3, 4, v).unwrap().len(), 10);
        }
        assert!(extension_poset(0, 1, ExtensionVariant::UpperIn).is_err());
        assert!(extension_poset(1, 0, ExtensionVariant::UpperIn).is_err());
    }

    #[test]
    fn upper_out_chain_avoids_lower_row() {
        let p = extension_poset(3, 2, ExtensionVariant::UpperOut).unwrap();
        for j in 1..=3 {
            for k in 1..=2 {
                let (g, c) = (grid_name(2, j), chain_name(k));
                assert!(!p.leq_named(&g, &c).unwrap() && !p.leq_named(&c, &g).unwrap());
            }
        }
    }

    #[test]
    fn cartan_examples() {
        let c2 = chain(2);
        assert_eq!(incidence_cartan(&c2, &["1", "2"]).unwrap(), m(&[vec![1, 1], vec![0, 1]]));
        assert!(matches!(incidence_cartan(&c2, &["2", "1"]), Err(Error::NotLinearExtension(_))));
        let r2 = rectangle_poset(2).unwrap();
        assert_eq!(
            incidence_cartan(&r2, &["(1,1)", "(1,2)", "(2,1)", "(2,2)"]).unwrap(),
            m(&[vec![1, 1, 1, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1], vec![0, 0, 0, 1]])
        );
        assert!(incidence_cartan(&c2, &["1"]).is_err());
        assert!(incidence_cartan(&c2, &["1", "1"]).is_err());
    }

    #[test]
    fn nakayama_examples() {
        assert_eq!(nakayama_cartan(3, 2).unwrap(), m(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]));
        assert_eq!(nakayama_cartan(3, 3).unwrap(), m(&[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]));
        assert!(matches!(nakayama_cartan(3, 1), Err(Error::InvalidParameter(_))));
        assert!(nakayama_cartan(3, 4).is_err());
        assert_eq!(nakayama_cartan(8, 5).unwrap().n(), rectangle_poset(4).unwrap().len());
    }

    #[test]
    fn closure_examples() {
        let c3 = chain(3);
        assert!(is_downward_closed(&c3, &["1"]).unwrap());
        assert!(!is_downward_closed(&c3, &["2"]).unwrap());
        assert!(is_downward_closed::<&str>(&c3, &[]).unwrap());
        assert!(matches!(is_downward_closed(&c3, &["9"]), Err(Error::UnknownElement(_))));
    }

    #[test]
    fn parse_round_trip_and_errors() {
        let text = "# a diamond\nelem a\nelem b\nelem c\nelem d\na < b\na < c  # side\nb < d\nc < d\n";
        let p = Poset::parse(text).unwrap();
        assert_eq!(p.comparable_pairs(), 4 + 5);
        assert_eq!(Poset::parse(&p.to_text()).unwrap(), p);
        assert!(matches!(Poset::parse("elem a\nelem a\n"), Err(Error::DuplicateElement(_))));
        assert!(matches!(Poset::parse("elem a\nelem b\na < b\nb < a\n"), Err(Error::Cycle(_))));
        assert!(matches!(Poset::parse("elem a\na < a\n"), Err(Error::Cycle(_))));
        assert!(matches!(Poset::parse("elem a\na < z\n"), Err(Error::UnknownElement(_))));
        assert!(matches!(Poset::parse("elem a\nfoo\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(Poset::parse("elemx\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn default_extension_is_deterministic_and_valid() {
        for v in ExtensionVariant::ALL {
            let p = extension_poset(3, 2, v).unwrap();
            let order = p.linear_extension();
            assert_eq!(order, p.linear_extension());
            let c = incidence_cartan(&p, &order).unwrap();
            assert!(c.is_upper_triangular());
        }
        let p = extension_poset(2, 1, ExtensionVariant::UpperIn).unwrap();
        assert_eq!(p.linear_extension(), ["c1", "(1,1)", "(1,2)", "(2,1)", "(2,2)"]);
    }

    // Reverses both grid coordinates and the chain.
    fn flip_name(name: &str, u: usize, v: usize) -> String {
        if let Some(k) = name.strip_prefix('c') {
            return chain_name(v + 1 - k.parse::<usize>().unwrap());
        }
        let inner = &name[1..name.len() - 1];
        let (i, j) = inner.split_once(',').unwrap();
        grid_name(3 - i.parse::<usize>().unwrap(), u + 1 - j.parse::<usize>().unwrap())
    }

    #[test]
    fn in_variants_are_opposites_of_out_variants() {
        use ExtensionVariant::*;
        for u in 1..=5 {
            for v in 1..=5 {
                for (a, b) in [(UpperIn, LowerOut), (LowerIn, UpperOut)] {
                    let p = extension_poset(u, v, a).unwrap();
                    let q = extension_poset(u, v, b).unwrap();
                    for x in p.names() {
                        for y in p.names() {
                            let lhs = p.leq_named(x, y).unwrap();
                            let rhs = q.leq_named(&flip_name(y, u, v), &flip_name(x, u, v)).unwrap();
                            assert_eq!(lhs, rhs, "u={u} v={v} {a}: {x} vs {y}");
                        }
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn family_cartans_are_unimodular(u in 1usize..7, v in 1usize..7, which in 0usize..4) {
            let p = extension_poset(u, v, ExtensionVariant::ALL[which]).unwrap();
            let c = p.cartan().unwrap();
            prop_assert!(c.is_upper_triangular());
            prop_assert_eq!(c.det(), BigInt::from(1));
        }

        #[test]
        fn parse_rejects_nothing_it_prints(u in 1usize..5, v in 1usize..4, which in 0usize..4) {
            let p = extension_poset(u, v, ExtensionVariant::ALL[which]).unwrap();
            prop_assert_eq!(Poset::parse(&p.to_text()).unwrap(), p);
        }
    }
}
