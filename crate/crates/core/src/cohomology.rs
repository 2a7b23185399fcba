//! Cohomology of the complex and of its equivariant subcomplex, coboundary
//! membership, and the identities that hold on cohomology.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::cochain::{sign, Cochain, ComplexBackend, Subspace};
use crate::comp::{bracket, check_jacobi, sample_rng, Sampling, Space};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::report::{CheckEntry, CheckReport, Witness};

/// Cohomology in one degree. All bases are columns in ambient cochain
/// coordinates.
#[derive(Debug, Clone)]
pub struct CohomologySlice<K: Field> {
    pub degree: usize,
    pub betti: usize,
    pub cocycle_basis: Matrix<K>,
    pub coboundary_basis: Matrix<K>,
    /// Cocycles completing the coboundaries to a basis of the cocycles.
    pub representative_basis: Matrix<K>,
}

impl<K: Field> CohomologySlice<K> {
    pub fn representatives(&self) -> Vec<Cochain<K>> {
        self.representative_basis
            .columns()
            .into_iter()
            .map(|c| Cochain::new(self.degree, c))
            .collect()
    }
}

/// Lazily computed cohomology of a backend, either of the whole complex or
/// of the equivariant subcomplex.
pub struct Cohomology<'a, K: Field, B: ?Sized> {
    backend: &'a B,
    equivariant: bool,
    spaces: Vec<OnceLock<Subspace<K>>>,
    deltas: Vec<OnceLock<Matrix<K>>>,
    slices: Vec<OnceLock<CohomologySlice<K>>>,
}

fn cached<T>(cell: &OnceLock<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    let _ = cell.set(v);
    Ok(cell.get().expect("initialized"))
}

fn embed_columns<K: Field>(k: &K, sub: &Subspace<K>, m: &Matrix<K>) -> Result<Matrix<K>> {
    let cols: Vec<Vec<K::Elem>> = m.columns().iter().map(|c| sub.embed(c)).collect();
    Matrix::from_columns(k, sub.ambient_dim(), &cols)
}

impl<'a, K: Field, B: ComplexBackend<K> + ?Sized> Cohomology<'a, K, B> {
    /// Cohomology of the whole complex.
    pub fn new(backend: &'a B) -> Self {
        Self::with_mode(backend, false)
    }

    /// Cohomology of the equivariant subcomplex.
    pub fn equivariant(backend: &'a B) -> Self {
        Self::with_mode(backend, true)
    }

    pub fn with_mode(backend: &'a B, equivariant: bool) -> Self {
        let top = backend.max_degree() + 2;
        Cohomology {
            backend,
            equivariant,
            spaces: (0..=top).map(|_| OnceLock::new()).collect(),
            deltas: (0..top).map(|_| OnceLock::new()).collect(),
            slices: (0..top).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn backend(&self) -> &'a B {
        self.backend
    }

    pub fn is_equivariant(&self) -> bool {
        self.equivariant
    }

    fn cap(&self, n: usize, cells: usize) -> Result<()> {
        if n >= cells {
            return Err(Error::DegreeCap {
                degree: n,
                max: self.backend.max_degree(),
            });
        }
        Ok(())
    }

    /// The cochain space in degree `n`: everything, or the equivariant part.
    pub fn space(&self, n: usize) -> Result<&Subspace<K>> {
        self.cap(n, self.spaces.len())?;
        cached(&self.spaces[n], || {
            self.backend.guard(n)?;
            if self.equivariant {
                self.backend.equivariant_subspace(n)
            } else {
                Ok(Subspace::Full(self.backend.cochain_dim(n)))
            }
        })
    }

    /// The differential out of degree `n` in subspace coordinates.
    pub fn delta(&self, n: usize) -> Result<&Matrix<K>> {
        self.cap(n, self.deltas.len())?;
        cached(&self.deltas[n], || {
            let src = self.space(n)?;
            let dst = self.space(n + 1)?;
            if src.is_full() && dst.is_full() {
                return self.backend.delta_matrix(n);
            }
            let k = self.backend.field();
            let basis = src.basis_matrix(k);
            let cols: Vec<Vec<K::Elem>> = (0..src.dim())
                .into_par_iter()
                .map(|j| {
                    let df = self.backend.delta(&Cochain::new(n, basis.column(j)))?;
                    dst.coords(k, &df.coords).ok_or(Error::ClosureViolation { degree: n })
                })
                .collect::<Result<_>>()?;
            Matrix::from_columns(k, dst.dim(), &cols)
        })
    }

    pub fn slice(&self, n: usize) -> Result<&CohomologySlice<K>> {
        self.cap(n, self.slices.len().min(self.backend.max_degree() + 1))?;
        cached(&self.slices[n], || {
            let k = self.backend.field();
            let sub = self.space(n)?;
            let z = self.delta(n)?.kernel_basis();
            let b = if n == 0 {
                Matrix::zeros(k, sub.dim(), 0)
            } else {
                let dp = self.delta(n - 1)?;
                dp.select_columns(&dp.rref().pivots)
            };
            let nb = b.cols();
            let independent = b.hstack(&z)?.independent_columns();
            let reps: Vec<usize> = independent.into_iter().filter(|&j| j >= nb).map(|j| j - nb).collect();
            let r = z.select_columns(&reps);
            Ok(CohomologySlice {
                degree: n,
                betti: reps.len(),
                cocycle_basis: embed_columns(k, sub, &z)?,
                coboundary_basis: embed_columns(k, sub, &b)?,
                representative_basis: embed_columns(k, sub, &r)?,
            })
        })
    }

    pub fn betti(&self, n: usize) -> Result<usize> {
        Ok(self.slice(n)?.betti)
    }

    /// Betti numbers in degrees `0..=max`.
    pub fn betti_table(&self, max: usize) -> Result<Vec<usize>> {
        (0..=max).map(|n| self.betti(n)).collect()
    }

    pub fn representatives(&self, n: usize) -> Result<Vec<Cochain<K>>> {
        Ok(self.slice(n)?.representatives())
    }

    /// A cochain `g` with `δg = f`, or `None` if `f` is not a coboundary.
    /// In degree 0 the only coboundary is zero and its witness is the empty
    /// cochain.
    pub fn is_coboundary(&self, f: &Cochain<K>) -> Result<Option<Cochain<K>>> {
        Ok(self.is_coboundary_many(f.degree, std::slice::from_ref(f))?.pop().expect("one answer"))
    }

    /// [`Self::is_coboundary`] for several cochains of degree `n`, with a
    /// single elimination.
    pub fn is_coboundary_many(&self, n: usize, fs: &[Cochain<K>]) -> Result<Vec<Option<Cochain<K>>>> {
        let k = self.backend.field();
        for f in fs {
            self.backend.check_cochain(f)?;
            if f.degree != n {
                return Err(Error::dim("cochain degree", n, f.degree));
            }
        }
        if n == 0 {
            return Ok(fs.iter().map(|f| f.is_zero(k).then(|| Cochain::new(0, vec![]))).collect());
        }
        let dst = self.space(n)?;
        let coords: Vec<Option<Vec<K::Elem>>> = fs.iter().map(|f| dst.coords(k, &f.coords)).collect();
        let inside: Vec<Vec<K::Elem>> = coords.iter().flatten().cloned().collect();
        let d = self.delta(n - 1)?;
        let rhs = Matrix::from_columns(k, d.rows(), &inside)?;
        let mut solved = d.solve_many(&rhs)?.into_iter();
        let src = self.space(n - 1)?;
        Ok(coords
            .iter()
            .map(|c| {
                c.as_ref()
                    .and_then(|_| solved.next().expect("one solution per column"))
                    .map(|y| Cochain::new(n - 1, src.embed(&y)))
            })
            .collect())
    }
}

fn tag(degrees: &[usize]) -> String {
    let d: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    format!("({})", d.join(","))
}

/// Shared driver: evaluates `expr` on each operand tuple and asks whether
/// the result is a coboundary.
fn modulo_coboundaries<K: Field, B: ComplexBackend<K> + ?Sized>(
    coh: &Cohomology<'_, K, B>,
    label: String,
    degrees: Vec<usize>,
    out_degree: usize,
    tuples: Vec<(Vec<usize>, Vec<Cochain<K>>)>,
    expr: impl Fn(&[Cochain<K>]) -> Result<(Cochain<K>, Cochain<K>)> + Sync,
) -> Result<CheckEntry> {
    let k = coh.backend().field();
    let sides: Vec<(Cochain<K>, Cochain<K>)> = tuples.par_iter().map(|(_, ops)| expr(ops)).collect::<Result<_>>()?;
    let diffs: Vec<Cochain<K>> = sides.iter().map(|(l, r)| l.sub(k, r)).collect::<Result<_>>()?;
    let answers = coh.is_coboundary_many(out_degree, &diffs)?;
    let bad = answers.iter().position(|a| a.is_none());
    let witness = bad.map(|i| Witness {
        degrees: degrees.clone(),
        indices: tuples[i].0.clone(),
        operands: tuples[i].1.iter().map(|c| c.to_strings(k)).collect(),
        lhs: sides[i].0.to_strings(k),
        rhs: sides[i].1.to_strings(k),
        detail: "difference is not a coboundary".into(),
        ..Witness::default()
    });
    Ok(CheckEntry::from_outcome(label, tuples.len(), witness))
}

fn rep_pairs<K: Field>(f: &[Cochain<K>], g: &[Cochain<K>]) -> Vec<(Vec<usize>, Vec<Cochain<K>>)> {
    let mut out = Vec::new();
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out.push((vec![i, j], vec![a.clone(), b.clone()]));
        }
    }
    out
}

/// `f∪g - (-1)^{mn} g⊔f` is a coboundary for all representative cocycles
/// `f` of degree `m` and `g` of degree `n`.
pub fn check_graded_commutativity<K: Field, B: ComplexBackend<K> + ?Sized>(
    coh: &Cohomology<'_, K, B>,
    m: usize,
    n: usize,
) -> Result<CheckReport> {
    check_graded_commutativity_with_offset(coh, m, n, 0)
}

/// As [`check_graded_commutativity`] with the sign exponent shifted by
/// `offset`; an odd offset states a false identity.
pub fn check_graded_commutativity_with_offset<K: Field, B: ComplexBackend<K> + ?Sized>(
    coh: &Cohomology<'_, K, B>,
    m: usize,
    n: usize,
    offset: usize,
) -> Result<CheckReport> {
    let b = coh.backend();
    let k = b.field();
    let tuples = rep_pairs(&coh.representatives(m)?, &coh.representatives(n)?);
    let s = sign(k, m * n + offset);
    let entry = modulo_coboundaries(
        coh,
        format!("graded-commutativity/cup-sqcup/{}", tag(&[m, n])),
        vec![m, n],
        m + n,
        tuples,
        |ops| Ok((b.cup(&ops[0], &ops[1])?, b.sqcup(&ops[1], &ops[0])?.scale(k, &s))),
    )?;
    let mut r = CheckReport::new("graded-commutativity");
    r.push(entry);
    Ok(r)
}

/// The Gerstenhaber structure on the cohomology of the equivariant
/// subcomplex: `∪` graded commutative up to coboundaries, the bracket of
/// cocycles a cocycle, the bracket with a coboundary a coboundary, the
/// Jacobi identity at cochain level, and the Leibniz rule up to
/// coboundaries. Every cochain formed has degree at most `s.max_degree`.
pub fn check_gerstenhaber_equivariant<K: Field, B: ComplexBackend<K> + ?Sized>(
    coh: &Cohomology<'_, K, B>,
    s: &Sampling,
) -> Result<CheckReport> {
    if !coh.is_equivariant() {
        return Err(Error::Scope(
            "the Gerstenhaber checks apply to the equivariant subcomplex only".into(),
        ));
    }
    let b = coh.backend();
    let k = b.field();
    let d = s.max_degree;
    let top = d.min(b.max_degree() + 1);
    let reps: Vec<Vec<Cochain<K>>> = (0..top).map(|n| coh.representatives(n)).collect::<Result<_>>()?;
    let mut r = CheckReport::new("gerstenhaber");

    for m in 0..top {
        for n in 0..top {
            if m + n > d {
                continue;
            }
            let sg = sign(k, m * n);
            r.push(modulo_coboundaries(
                coh,
                format!("gerstenhaber/cup-commutativity/{}", tag(&[m, n])),
                vec![m, n],
                m + n,
                rep_pairs(&reps[m], &reps[n]),
                |ops| Ok((b.cup(&ops[0], &ops[1])?, b.cup(&ops[1], &ops[0])?.scale(k, &sg))),
            )?);
            if m == 0 || n == 0 || m + n > d {
                continue;
            }
            let tuples = rep_pairs(&reps[m], &reps[n]);
            let brackets: Vec<Cochain<K>> = tuples
                .par_iter()
                .map(|(_, ops)| bracket(b, &ops[0], &ops[1]))
                .collect::<Result<_>>()?;
            let bad = brackets
                .par_iter()
                .map(|x| b.delta(x).map(|dx| (!dx.is_zero(k)).then_some(dx)))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .enumerate()
                .find_map(|(i, dx)| dx.map(|dx| (i, dx)));
            let w = bad.map(|(i, dx)| Witness {
                degrees: vec![m, n],
                indices: tuples[i].0.clone(),
                operands: tuples[i].1.iter().map(|c| c.to_strings(k)).collect(),
                lhs: dx.to_strings(k),
                detail: "bracket of cocycles is not a cocycle".into(),
                ..Witness::default()
            });
            r.push(CheckEntry::from_outcome(
                format!("gerstenhaber/bracket-cocycle/{}", tag(&[m, n])),
                tuples.len(),
                w,
            ));
        }
    }

    let space = Space::equivariant(b, d)?;
    for m in 1..top {
        for n in 1..=d {
            if m + n - 1 > d || reps[m].is_empty() {
                continue;
            }
            let mut tuples = Vec::new();
            for smp in 0..s.samples {
                let label = format!("gerstenhaber/bracket-coboundary/{}", tag(&[m, n]));
                let mut rng = sample_rng(s.seed, &label, smp);
                let h = space.draw(n - 1, &mut rng);
                let dh = b.delta(&h)?;
                for (i, f) in reps[m].iter().enumerate() {
                    tuples.push((vec![i, smp], vec![f.clone(), dh.clone()]));
                }
            }
            let mut entry = modulo_coboundaries(
                coh,
                format!("gerstenhaber/bracket-coboundary/{}", tag(&[m, n])),
                vec![m, n],
                m + n - 1,
                tuples,
                |ops| Ok((bracket(b, &ops[0], &ops[1])?, b.zero(m + n - 1))),
            )?;
            if let Some(w) = entry.witness.as_mut() {
                w.seed = Some(s.seed);
            }
            r.push(entry);
        }
    }

    r.extend(check_jacobi(b, &space, s)?);

    for m in 1..top {
        for n in 0..top {
            for p in 0..top {
                if m + n + p > d + 1 || n + p > d {
                    continue;
                }
                let mut tuples = Vec::new();
                for (i, f) in reps[m].iter().enumerate() {
                    for (j, g) in reps[n].iter().enumerate() {
                        for (l, h) in reps[p].iter().enumerate() {
                            tuples.push((vec![i, j, l], vec![f.clone(), g.clone(), h.clone()]));
                        }
                    }
                }
                let sg = sign(k, (m + 1) * n);
                r.push(modulo_coboundaries(
                    coh,
                    format!("gerstenhaber/leibniz/{}", tag(&[m, n, p])),
                    vec![m, n, p],
                    m + n + p - 1,
                    tuples,
                    |ops| {
                        let (f, g, h) = (&ops[0], &ops[1], &ops[2]);
                        let lhs = bracket(b, f, &b.cup(g, h)?)?;
                        let mut rhs = b.cup(&bracket(b, f, g)?, h)?;
                        rhs.axpy(k, &sg, &b.cup(g, &bracket(b, f, h)?)?)?;
                        Ok((lhs, rhs))
                    },
                )?);
            }
        }
    }
    Ok(r.sorted())
}

/// Dimensions of `H^n(G; k)` with trivial coefficients for `n ≤ n_max`.
///
/// Uses invariant homogeneous cochains, stored by their values on tuples
/// `(e, y_1, …, y_n)`; the face that drops `e` is brought back to this form
/// by left multiplication with `y_1^{-1}`.
pub fn group_cohomology_oracle<K: Field>(k: &K, group: &FiniteGroup, n_max: usize) -> Result<Vec<usize>> {
    const CAP: usize = 1 << 22;
    let q = group.order();
    let dim = |n: usize| q.checked_pow(n as u32).unwrap_or(usize::MAX);
    if dim(n_max + 1) > CAP {
        return Err(Error::CapExceeded {
            degree: n_max + 1,
            dim: dim(n_max + 1),
            cap: CAP,
        });
    }
    let index = |ys: &[usize]| ys.iter().fold(0, |acc, &y| acc * q + y);
    let ranks: Vec<usize> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut d = Matrix::zeros(k, dim(n + 1), dim(n));
            let mut ys = vec![0; n + 1];
            for row in 0..dim(n + 1) {
                let mut t = row;
                for slot in ys.iter_mut().rev() {
                    *slot = t % q;
                    t /= q;
                }
                let y1 = group.inv(ys[0]);
                let shifted: Vec<usize> = ys[1..].iter().map(|&y| group.mul(y1, y)).collect();
                let mut terms = vec![(index(&shifted), false)];
                for i in 0..=n {
                    let face: Vec<usize> = ys.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &y)| y).collect();
                    terms.push((index(&face), i % 2 == 0));
                }
                for (col, negative) in terms {
                    let v = k.add(d.get(row, col), &k.sign(negative));
                    d.set(row, col, v);
                }
            }
            d.rank()
        })
        .collect();
    Ok((0..=n_max)
        .map(|n| dim(n) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::vecg::{CenterCoalgebra, VecGBackend};

    #[test]
    fn oracle_small_groups() {
        let f2 = PrimeField::new(2).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(group_cohomology_oracle(&f2, &z2, 4).unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(group_cohomology_oracle(&Rationals, &z2, 4).unwrap(), vec![1, 0, 0, 0, 0]);
        let trivial = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(group_cohomology_oracle(&f2, &trivial, 3).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn unit_coefficient_betti_and_coboundaries() {
        let f2 = PrimeField::new(2).unwrap();
        let c = CenterCoalgebra::unit(&f2, FiniteGroup::cyclic(2).unwrap()).unwrap();
        let b = VecGBackend::new(c, 3, 1 << 16).unwrap();
        let coh = Cohomology::new(&b);
        assert_eq!(coh.betti_table(3).unwrap(), vec![1, 1, 1, 1]);

        assert!(coh.is_coboundary(&b.zero(2)).unwrap().is_some());
        let mut rng = sample_rng(9, "t", 0);
        let g = b.random_cochain(1, &mut rng);
        let dg = b.delta(&g).unwrap();
        let w = coh.is_coboundary(&dg).unwrap().expect("coboundary");
        assert_eq!(b.delta(&w).unwrap(), dg);
        for rep in coh.representatives(2).unwrap() {
            assert!(coh.is_coboundary(&rep).unwrap().is_none());
            assert!(b.delta(&rep).unwrap().is_zero(&f2));
        }
    }

    #[test]
    fn gerstenhaber_guard_requires_equivariant_mode() {
        let c = CenterCoalgebra::unit(&Rationals, FiniteGroup::cyclic(2).unwrap()).unwrap();
        let b = VecGBackend::new(c, 3, 1 << 16).unwrap();
        let s = Sampling {
            seed: 1,
            samples: 2,
            max_degree: 3,
        };
        assert!(matches!(
            check_gerstenhaber_equivariant(&Cohomology::new(&b), &s),
            Err(Error::Scope(_))
        ));
        assert!(check_gerstenhaber_equivariant(&Cohomology::equivariant(&b), &s).unwrap().passed());
    }
}
