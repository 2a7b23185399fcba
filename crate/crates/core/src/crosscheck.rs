//! Exhaustive agreement of two backends for the same complex on every
//! operation and every pair of basis cochains.

use rayon::prelude::*;

use crate::cochain::{Cochain, ComplexBackend};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::{CheckEntry, CheckReport, Witness};

fn mismatch<K: Field>(k: &K, degrees: Vec<usize>, indices: Vec<usize>, a: &Cochain<K>, b: &Cochain<K>) -> Witness {
    Witness {
        degrees,
        indices,
        lhs: a.to_strings(k),
        rhs: b.to_strings(k),
        detail: "backends disagree".into(),
        ..Witness::default()
    }
}

fn entry<K: Field>(
    k: &K,
    label: String,
    degrees: Vec<usize>,
    cases: Vec<(Vec<usize>, Cochain<K>, Cochain<K>)>,
) -> CheckEntry {
    let n = cases.len();
    let w = cases
        .into_iter()
        .find(|(_, a, b)| a != b)
        .map(|(idx, a, b)| mismatch(k, degrees, idx, &a, &b));
    CheckEntry::from_outcome(label, n, w)
}

/// Compares `δ`, `∪`, `⊔`, every `◇_i`, the equivariance matrices, `π` and
/// `ε` on all basis cochains, with every operand and result of degree at most
/// `max_degree`.
pub fn check_agreement<K: Field, A, B>(a: &A, b: &B, max_degree: usize) -> Result<CheckReport>
where
    A: ComplexBackend<K> + ?Sized,
    B: ComplexBackend<K> + ?Sized,
{
    let k = a.field();
    for n in 0..=max_degree {
        if a.cochain_dim(n) != b.cochain_dim(n) {
            return Err(Error::dim(format!("cochain space of degree {n}"), a.cochain_dim(n), b.cochain_dim(n)));
        }
    }
    let basis = |n: usize| -> Vec<Cochain<K>> { (0..a.cochain_dim(n)).map(|j| a.basis_cochain(n, j)).collect() };
    let mut r = CheckReport::new("cross-implementation");

    for n in 0..max_degree {
        let cases = basis(n)
            .into_par_iter()
            .enumerate()
            .map(|(j, f)| Ok((vec![j], a.delta(&f)?, b.delta(&f)?)))
            .collect::<Result<_>>()?;
        r.push(entry(k, format!("agree/delta/({n})"), vec![n], cases));
    }
    for n in 0..=max_degree {
        let (ma, mb) = (a.equivariance_matrix(n)?, b.equivariance_matrix(n)?);
        let w = (ma != mb).then(|| Witness {
            degrees: vec![n],
            detail: "equivariance matrices differ".into(),
            ..Witness::default()
        });
        r.push(CheckEntry::from_outcome(format!("agree/equivariance/({n})"), 1, w));
    }
    for m in 0..=max_degree {
        for n in 0..=max_degree {
            let (fs, gs) = (basis(m), basis(n));
            let pairs: Vec<(usize, usize)> = (0..fs.len()).flat_map(|i| (0..gs.len()).map(move |j| (i, j))).collect();
            if m + n <= max_degree {
                for (name, sq) in [("cup", false), ("sqcup", true)] {
                    let cases = pairs
                        .par_iter()
                        .map(|&(i, j)| {
                            let (x, y) = if sq {
                                (a.sqcup(&fs[i], &gs[j])?, b.sqcup(&fs[i], &gs[j])?)
                            } else {
                                (a.cup(&fs[i], &gs[j])?, b.cup(&fs[i], &gs[j])?)
                            };
                            Ok((vec![i, j], x, y))
                        })
                        .collect::<Result<_>>()?;
                    r.push(entry(k, format!("agree/{name}/({m},{n})"), vec![m, n], cases));
                }
            }
            if m >= 1 && m + n <= max_degree + 1 {
                for i in 0..m {
                    let cases = pairs
                        .par_iter()
                        .map(|&(x, y)| {
                            Ok((
                                vec![x, y],
                                a.diamond_i(&fs[x], &gs[y], i)?,
                                b.diamond_i(&fs[x], &gs[y], i)?,
                            ))
                        })
                        .collect::<Result<_>>()?;
                    r.push(entry(k, format!("agree/diamond-{i}/({m},{n})"), vec![m, n], cases));
                }
            }
        }
    }
    r.push(entry(k, "agree/pi".into(), vec![2], vec![(vec![], a.pi(), b.pi())]));
    r.push(entry(k, "agree/eps".into(), vec![0], vec![(vec![], a.eps(), b.eps())]));
    Ok(r.sorted())
}
