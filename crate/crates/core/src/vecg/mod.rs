//! Coalgebras in the Drinfeld center of `Vec_G` and the two models of their
//! complex for the forgetful functor.
//!
//! An object of the center is a G-graded space `U = ⊕_g U_g` with a
//! G-action `π` satisfying `π(x)(U_g) = U_{xgx⁻¹}`. The half-braiding with a
//! simple object `k_x` is `u ⊗ 1_x ↦ 1_x ⊗ π(x)⁻¹u`.
//!
//! Basis vectors of U are ordered by grade, following the element order of
//! the group. Cochains of degree n are functions `G^n → W*` with `W = U_e`,
//! stored at index `tuple · dim W + w` with tuples in lexicographic order.

mod fast;
mod model;

pub use fast::VecGBackend;
pub use model::VecGModel;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::report::{CheckEntry, CheckReport, Witness};

#[derive(Debug, Clone)]
pub struct CenterCoalgebra<K: Field> {
    field: K,
    group: FiniteGroup,
    grade_dims: Vec<usize>,
    offsets: Vec<usize>,
    grade_of: Vec<usize>,
    labels: Vec<String>,
    action: Vec<Matrix<K>>,
    comul: Matrix<K>,
    counit: Matrix<K>,
}

impl<K: Field> CenterCoalgebra<K> {
    /// Assembles a coefficient from explicit data. Only shapes are checked
    /// here; call [`validate`](Self::validate) for the axioms.
    pub fn new(
        field: &K,
        group: FiniteGroup,
        grade_dims: Vec<usize>,
        action: Vec<Matrix<K>>,
        comul: Matrix<K>,
        counit: Matrix<K>,
    ) -> Result<Self> {
        let q = group.order();
        if grade_dims.len() != q {
            return Err(Error::dim("grade dimensions", q, grade_dims.len()));
        }
        let du: usize = grade_dims.iter().sum();
        if action.len() != q {
            return Err(Error::dim("action matrices", q, action.len()));
        }
        for (x, a) in action.iter().enumerate() {
            if a.rows() != du || a.cols() != du {
                return Err(Error::Coefficient(format!(
                    "action of element {x} is {}x{}, expected {du}x{du}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if comul.rows() != du * du || comul.cols() != du {
            return Err(Error::Coefficient(format!(
                "comultiplication is {}x{}, expected {}x{du}",
                comul.rows(),
                comul.cols(),
                du * du
            )));
        }
        if counit.rows() != 1 || counit.cols() != du {
            return Err(Error::Coefficient(format!(
                "counit is {}x{}, expected 1x{du}",
                counit.rows(),
                counit.cols()
            )));
        }
        let mut offsets = Vec::with_capacity(q);
        let mut grade_of = Vec::with_capacity(du);
        let mut acc = 0;
        for (g, &d) in grade_dims.iter().enumerate() {
            offsets.push(acc);
            acc += d;
            grade_of.extend(std::iter::repeat(g).take(d));
        }
        let labels = (0..du).map(|i| format!("u{i}")).collect();
        Ok(CenterCoalgebra {
            field: field.clone(),
            group,
            grade_dims,
            offsets,
            grade_of,
            labels,
            action,
            comul,
            counit,
        })
    }

    /// The tensor unit `k`, concentrated in the neutral grade.
    pub fn unit(field: &K, group: FiniteGroup) -> Result<Self> {
        let q = group.order();
        let mut dims = vec![0; q];
        dims[group.identity()] = 1;
        let action = vec![Matrix::identity(field, 1); q];
        let one = Matrix::identity(field, 1);
        let mut c = Self::new(field, group, dims, action, one.clone(), one)?;
        c.labels = vec!["1".into()];
        Ok(c)
    }

    /// `k[S]` for a conjugation-stable subset `S`, placed in the neutral
    /// grade with the conjugation action and group-like elements
    /// `Δs = s⊗s`, `ε(s) = 1`.
    pub fn grouplike(field: &K, group: FiniteGroup, support: &[usize]) -> Result<Self> {
        let q = group.order();
        let mut s: Vec<usize> = Vec::new();
        for &x in support {
            if x >= q {
                return Err(Error::Coefficient(format!("support element {x} out of range")));
            }
            if !s.contains(&x) {
                s.push(x);
            }
        }
        if s.is_empty() {
            return Err(Error::Coefficient("empty support".into()));
        }
        let d = s.len();
        let mut action = Vec::with_capacity(q);
        for x in 0..q {
            let mut m = Matrix::zeros(field, d, d);
            for (i, &si) in s.iter().enumerate() {
                let c = group.conjugate(si, x);
                let j = s.iter().position(|&t| t == c).ok_or_else(|| {
                    Error::NotConjugationStable {
                        element: group.name(si).to_string(),
                        by: group.name(x).to_string(),
                    }
                })?;
                m.set(j, i, field.one());
            }
            action.push(m);
        }
        let mut comul = Matrix::zeros(field, d * d, d);
        for i in 0..d {
            comul.set(i * d + i, i, field.one());
        }
        let counit = Matrix::from_fn(field, 1, d, |_, _| field.one());
        let mut dims = vec![0; q];
        dims[group.identity()] = d;
        let labels = s.iter().map(|&x| group.name(x).to_string()).collect();
        let mut c = Self::new(field, group, dims, action, comul, counit)?;
        c.labels = labels;
        Ok(c)
    }

    /// `kG` graded by the group itself, with conjugation action,
    /// `Δ u_g = Σ_{ab=g} u_a⊗u_b` and `ε(u_g) = [g = e]`.
    pub fn regular(field: &K, group: FiniteGroup) -> Result<Self> {
        let q = group.order();
        let action = (0..q)
            .map(|x| {
                let mut m = Matrix::zeros(field, q, q);
                for g in 0..q {
                    m.set(group.conjugate(g, x), g, field.one());
                }
                m
            })
            .collect();
        let mut comul = Matrix::zeros(field, q * q, q);
        for a in 0..q {
            for b in 0..q {
                comul.set(a * q + b, group.mul(a, b), field.one());
            }
        }
        let counit = Matrix::from_fn(field, 1, q, |_, j| {
            if j == group.identity() {
                field.one()
            } else {
                field.zero()
            }
        });
        let labels = group.names().to_vec();
        let mut c = Self::new(field, group, vec![1; q], action, comul, counit)?;
        c.labels = labels;
        Ok(c)
    }

    /// The dual of the algebra of upper triangular 2×2 matrices, with basis
    /// `c11, c12, c22`, `Δ c_ij = Σ_k c_ik ⊗ c_kj`, trivial action and
    /// neutral grading. It is not cocommutative.
    pub fn upper_triangular(field: &K, group: FiniteGroup) -> Result<Self> {
        let q = group.order();
        let mut dims = vec![0; q];
        dims[group.identity()] = 3;
        let action = vec![Matrix::identity(field, 3); q];
        let mut comul = Matrix::zeros(field, 9, 3);
        comul.set(0, 0, field.one());
        comul.set(1, 1, field.one());
        comul.set(5, 1, field.one());
        comul.set(8, 2, field.one());
        let counit = Matrix::from_i64(field, &[&[1, 0, 1]])?;
        let mut c = Self::new(field, group, dims, action, comul, counit)?;
        c.labels = vec!["c11".into(), "c12".into(), "c22".into()];
        Ok(c)
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }
    pub fn dim(&self) -> usize {
        self.grade_of.len()
    }
    pub fn grade_dims(&self) -> &[usize] {
        &self.grade_dims
    }
    /// Dimension of the neutral component `W = U_e`.
    pub fn neutral_dim(&self) -> usize {
        self.grade_dims[self.group.identity()]
    }
    /// Index in U of the first basis vector of `W`.
    pub fn neutral_offset(&self) -> usize {
        self.offsets[self.group.identity()]
    }
    pub fn grade_of(&self, i: usize) -> usize {
        self.grade_of[i]
    }
    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }
    pub fn action(&self, x: usize) -> &Matrix<K> {
        &self.action[x]
    }
    pub fn comul(&self) -> &Matrix<K> {
        &self.comul
    }
    pub fn counit(&self) -> &Matrix<K> {
        &self.counit
    }

    /// The half-braiding with `k_x` as a map on U, equal to `π(x⁻¹)`.
    pub fn braiding(&self, x: usize) -> &Matrix<K> {
        &self.action[self.group.inv(x)]
    }

    /// Checks every axiom of a coalgebra in the center and reports each one.
    pub fn validate(&self) -> CheckReport {
        let k = &self.field;
        let g = &self.group;
        let q = g.order();
        let du = self.dim();
        let id = Matrix::identity(k, du);
        let mut r = CheckReport::new("center-coalgebra");

        let mut w = None;
        'grading: for x in 0..q {
            for i in 0..du {
                let target = g.conjugate(self.grade_of[i], x);
                for row in 0..du {
                    if self.grade_of[row] != target && !k.is_zero(self.action[x].get(row, i)) {
                        w = Some(Witness {
                            indices: vec![x, i, row],
                            detail: format!(
                                "action of {} sends basis vector {i} (grade {}) to grade {}",
                                g.name(x),
                                g.name(self.grade_of[i]),
                                g.name(self.grade_of[row])
                            ),
                            ..Witness::default()
                        });
                        break 'grading;
                    }
                }
            }
        }
        r.push(CheckEntry::from_outcome("action/grading", q * du, w));

        let mut w = None;
        if self.action[g.identity()] != id {
            w = Some(Witness::detail("the neutral element does not act as the identity"));
        }
        'hom: for x in 0..q {
            for y in 0..q {
                let xy = self.action[x].mul(&self.action[y]).expect("square");
                if w.is_none() && xy != self.action[g.mul(x, y)] {
                    w = Some(Witness {
                        indices: vec![x, y],
                        detail: format!(
                            "action of {}·{} differs from the composite",
                            g.name(x),
                            g.name(y)
                        ),
                        ..Witness::default()
                    });
                    break 'hom;
                }
            }
        }
        r.push(CheckEntry::from_outcome("action/homomorphism", q * q, w));

        let w = (0..q).find(|&x| self.action[x].rank() != du).map(|x| Witness {
            indices: vec![x],
            detail: format!("action of {} is singular", g.name(x)),
            ..Witness::default()
        });
        r.push(CheckEntry::from_outcome("action/invertible", q, w));

        let mut w = None;
        'cgrade: for i in 0..du {
            for a in 0..du {
                for b in 0..du {
                    let c = self.comul.get(a * du + b, i);
                    if !k.is_zero(c) && g.mul(self.grade_of[a], self.grade_of[b]) != self.grade_of[i] {
                        w = Some(Witness {
                            indices: vec![i, a, b],
                            detail: format!(
                                "comultiplication of basis vector {i} has a term in grades ({}, {})",
                                g.name(self.grade_of[a]),
                                g.name(self.grade_of[b])
                            ),
                            ..Witness::default()
                        });
                        break 'cgrade;
                    }
                }
            }
        }
        r.push(CheckEntry::from_outcome("comul/grading", du, w));

        let left = self.comul.kron(&id).mul(&self.comul).expect("shape");
        let right = id.kron(&self.comul).mul(&self.comul).expect("shape");
        r.push(CheckEntry::from_outcome(
            "comul/coassociativity",
            du,
            first_difference(&left, &right, "coassociativity"),
        ));

        let lc = self.counit.kron(&id).mul(&self.comul).expect("shape");
        r.push(CheckEntry::from_outcome(
            "counit/left",
            du,
            first_difference(&lc, &id, "left counit"),
        ));
        let rc = id.kron(&self.counit).mul(&self.comul).expect("shape");
        r.push(CheckEntry::from_outcome(
            "counit/right",
            du,
            first_difference(&rc, &id, "right counit"),
        ));

        let w = (0..du)
            .find(|&i| self.grade_of[i] != g.identity() && !k.is_zero(self.counit.get(0, i)))
            .map(|i| Witness {
                indices: vec![i],
                detail: format!("counit is nonzero on basis vector {i} of nonneutral grade"),
                ..Witness::default()
            });
        r.push(CheckEntry::from_outcome("counit/grading", du, w));

        let mut w = None;
        for x in 0..q {
            let a = &self.action[x];
            let lhs = a.kron(a).mul(&self.comul).expect("shape");
            let rhs = self.comul.mul(a).expect("shape");
            if let Some(mut d) = first_difference(&lhs, &rhs, "comultiplication is not equivariant") {
                d.indices.insert(0, x);
                d.detail = format!("{} under {}", d.detail, g.name(x));
                w = Some(d);
                break;
            }
        }
        r.push(CheckEntry::from_outcome("comul/center-morphism", q, w));

        let mut w = None;
        for x in 0..q {
            let lhs = self.counit.mul(&self.action[x]).expect("shape");
            if let Some(mut d) = first_difference(&lhs, &self.counit, "counit is not invariant") {
                d.indices.insert(0, x);
                w = Some(d);
                break;
            }
        }
        r.push(CheckEntry::from_outcome("counit/center-morphism", q, w));

        r.sorted()
    }
}

/// Witness for the first entry where two equally shaped matrices differ.
pub(crate) fn first_difference<K: Field>(a: &Matrix<K>, b: &Matrix<K>, what: &str) -> Option<Witness> {
    let k = a.field();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if a.get(i, j) != b.get(i, j) {
                return Some(Witness {
                    indices: vec![i, j],
                    lhs: vec![k.format(a.get(i, j))],
                    rhs: vec![k.format(b.get(i, j))],
                    detail: format!("{what}: entry ({i}, {j}) differs"),
                    ..Witness::default()
                });
            }
        }
    }
    None
}

/// Decodes a tuple index into `n` group elements, most significant first.
pub(crate) fn decode(mut t: usize, q: usize, n: usize, out: &mut Vec<usize>) {
    out.clear();
    out.resize(n, 0);
    for k in (0..n).rev() {
        out[k] = t % q;
        t /= q;
    }
}

pub(crate) fn encode(digits: impl IntoIterator<Item = usize>, q: usize) -> usize {
    digits.into_iter().fold(0, |acc, x| acc * q + x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn presets_validate() {
        let k = Rationals;
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let transpositions: Vec<usize> = (0..6).filter(|&a| s3.element_order(a) == 2).collect();
        let cases = vec![
            CenterCoalgebra::unit(&k, z2.clone()).unwrap(),
            CenterCoalgebra::grouplike(&k, z2.clone(), &[0, 1]).unwrap(),
            CenterCoalgebra::grouplike(&k, s3.clone(), &transpositions).unwrap(),
            CenterCoalgebra::regular(&k, s3.clone()).unwrap(),
            CenterCoalgebra::upper_triangular(&k, z2).unwrap(),
        ];
        for c in cases {
            let r = c.validate();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn unstable_support_is_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t12 = s3.index_of("(12)").unwrap();
        let err = CenterCoalgebra::grouplike(&Rationals, s3, &[t12]).unwrap_err();
        assert!(matches!(err, Error::NotConjugationStable { .. }));
    }

    #[test]
    fn broken_counit_is_reported() {
        let k = PrimeField::new(3).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let c = CenterCoalgebra::unit(&k, z2.clone()).unwrap();
        let bad = CenterCoalgebra::new(
            &k,
            z2,
            c.grade_dims().to_vec(),
            c.action.clone(),
            c.comul().clone(),
            Matrix::from_i64(&k, &[&[2]]).unwrap(),
        )
        .unwrap();
        let r = bad.validate();
        assert_eq!(r.entry("counit/left").unwrap().status, crate::report::Status::Fail);
        assert_eq!(r.entry("comul/coassociativity").unwrap().status, crate::report::Status::Pass);
    }

    #[test]
    fn tuple_encoding_round_trips() {
        let mut d = Vec::new();
        for t in 0..27 {
            decode(t, 3, 3, &mut d);
            assert_eq!(encode(d.iter().copied(), 3), t);
        }
        decode(5, 3, 2, &mut d);
        assert_eq!(d, vec![1, 2]);
    }
}
