//! Cartan data of the flip algebra A_Y attached to a down-set Y of a poset,
//! and equality of matrices up to simultaneous row/column permutation.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::IntMatrix;
use crate::poset::{first_missing_below, Poset};

/// Cartan matrix of A_Y in the given vertex order.
///
/// With U the complement of Y: c_{yy'} = [y ≤ y'], c_{u'u} = [u' ≤ u],
/// c_{uy} = [y < u] and c_{yu} = 0. The order must list every element once
/// and restrict to a linear extension on Y and on U.
pub fn flip_cartan<S: AsRef<str>, T: AsRef<str>>(x: &Poset, y: &[S], order: &[T]) -> Result<IntMatrix> {
    let in_y = membership(x, y)?;
    if let Some(a) = first_missing_below(x, &in_y) {
        return Err(Error::NotClosed(x.names()[a].clone()));
    }
    let idx = x.permutation_indices(order)?;
    for (p, &a) in idx.iter().enumerate() {
        for &b in &idx[..p] {
            if in_y[a] == in_y[b] && x.lt(a, b) {
                return Err(Error::NotLinearExtension(format!(
                    "{} < {} but {} is listed first",
                    x.names()[a],
                    x.names()[b],
                    x.names()[b]
                )));
            }
        }
    }
    IntMatrix::from_fn(idx.len(), |i, j| {
        let (a, b) = (idx[i], idx[j]);
        let v = match (in_y[a], in_y[b]) {
            (true, true) | (false, false) => x.leq(a, b),
            (false, true) => x.lt(b, a),
            (true, false) => false,
        };
        BigInt::from(v as i64)
    })
}

/// Y in the default linear extension of X, followed by the rest.
pub fn default_flip_order<S: AsRef<str>>(x: &Poset, y: &[S]) -> Result<Vec<String>> {
    let in_y = membership(x, y)?;
    let ext = x.linear_extension();
    let (mut ys, us): (Vec<String>, Vec<String>) =
        ext.into_iter().partition(|name| in_y[x.index_of(name).unwrap()]);
    ys.extend(us);
    Ok(ys)
}

fn membership<S: AsRef<str>>(x: &Poset, y: &[S]) -> Result<Vec<bool>> {
    let mut in_y = vec![false; x.len()];
    for name in y {
        in_y[x.index_of(name.as_ref())?] = true;
    }
    Ok(in_y)
}

/// Finds σ with a[i][j] = b[σ(i)][σ(j)] for all i, j.
pub fn permutation_equivalent(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<usize>> {
    let n = a.n();
    if b.n() != n {
        return None;
    }
    let profile = |m: &IntMatrix, i: usize| {
        let mut row: Vec<BigInt> = m.row(i).to_vec();
        let mut col = m.col(i);
        row.sort();
        col.sort();
        (m.get(i, i).clone(), row, col)
    };
    let pa: Vec<_> = (0..n).map(|i| profile(a, i)).collect();
    let pb: Vec<_> = (0..n).map(|i| profile(b, i)).collect();
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|i| (0..n).filter(|&k| pa[i] == pb[k]).collect()).collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }
    // Most constrained rows first.
    let mut rows: Vec<usize> = (0..n).collect();
    rows.sort_by_key(|&i| candidates[i].len());

    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        rows: &[usize],
        candidates: &[Vec<usize>],
        a: &IntMatrix,
        b: &IntMatrix,
        sigma: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&i) = rows.get(depth) else {
            return true;
        };
        for &k in &candidates[i] {
            if used[k] {
                continue;
            }
            let consistent = rows[..depth]
                .iter()
                .all(|&j| a.get(i, j) == b.get(k, sigma[j]) && a.get(j, i) == b.get(sigma[j], k));
            if !consistent {
                continue;
            }
            sigma[i] = k;
            used[k] = true;
            if extend(depth + 1, rows, candidates, a, b, sigma, used) {
                return true;
            }
            used[k] = false;
        }
        sigma[i] = usize::MAX;
        false
    }
    extend(0, &rows, &candidates, a, b, &mut sigma, &mut used).then_some(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::coxeter_polynomial;
    use crate::poset::{extension_poset, grid_name, incidence_cartan, nakayama_cartan, ExtensionVariant};

    fn chain(n: usize) -> Poset {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let rel: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(names, &rel).unwrap()
    }

    #[test]
    fn chain_example() {
        let c3 = chain(3);
        let got = flip_cartan(&c3, &["1"], &["1", "2", "3"]).unwrap();
        let want = IntMatrix::from_i64_rows(&[vec![1, 0, 0], vec![1, 1, 1], vec![1, 0, 1]]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn trivial_flips_are_incidence() {
        let p = extension_poset(2, 2, ExtensionVariant::UpperOut).unwrap();
        let order = p.linear_extension();
        let c = incidence_cartan(&p, &order).unwrap();
        assert_eq!(flip_cartan(&p, &order, &order).unwrap(), c);
        assert_eq!(flip_cartan::<&str, _>(&p, &[], &order).unwrap(), c);
    }

    #[test]
    fn errors() {
        let c3 = chain(3);
        assert!(matches!(flip_cartan(&c3, &["2"], &["1", "2", "3"]), Err(Error::NotClosed(_))));
        assert!(matches!(flip_cartan(&c3, &["1"], &["1", "3", "2"]), Err(Error::NotLinearExtension(_))));
        assert!(matches!(flip_cartan(&c3, &["9"], &["1", "2", "3"]), Err(Error::UnknownElement(_))));
        // U may precede Y; only the induced orders matter.
        assert!(flip_cartan(&c3, &["1"], &["2", "3", "1"]).is_ok());
    }

    #[test]
    fn permutation_search() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 1, 1]]).unwrap();
        let perm = [2, 0, 1];
        let b = a.permute(&perm).unwrap();
        let sigma = permutation_equivalent(&a, &b).unwrap();
        assert_eq!(b.permute(&sigma).unwrap(), a);
        // A V-shaped poset is not isomorphic to its opposite.
        assert!(permutation_equivalent(&a, &a.transpose()).is_none());
        let c = IntMatrix::from_i64_rows(&[vec![1, 1, 1], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(permutation_equivalent(&a, &c).is_none());
        assert!(permutation_equivalent(&a, &IntMatrix::identity(2).unwrap()).is_none());
    }

    #[test]
    fn branch_moves_from_bottom_to_top() {
        for u in 1..=4 {
            for v in 1..=4 {
                let x = extension_poset(u, v, ExtensionVariant::UpperIn).unwrap();
                let y: Vec<String> = (1..=v).map(crate::poset::chain_name).collect();
                let f = flip_cartan(&x, &y, &default_flip_order(&x, &y).unwrap()).unwrap();
                let target = extension_poset(u, v, ExtensionVariant::LowerOut).unwrap().cartan().unwrap();
                assert!(permutation_equivalent(&f, &target).is_some(), "u={u} v={v}");

                let mut z = y.clone();
                z.extend((1..=u).map(|j| grid_name(1, j)));
                let g = flip_cartan(&x, &z, &default_flip_order(&x, &z).unwrap()).unwrap();
                let nak = nakayama_cartan(2 * u + v, u + v + 1).unwrap();
                assert!(permutation_equivalent(&g, &nak).is_some(), "u={u} v={v}");
                assert_eq!(coxeter_polynomial(&g).unwrap(), coxeter_polynomial(&x.cartan().unwrap()).unwrap());
            }
        }
    }
}
