//! Finite-dimensional Hopf algebras, Yetter-Drinfeld coalgebras, and the
//! complex of the forgetful functor `H-mod → Vect`.
//!
//! A cochain is determined by its value at the regular module,
//! `f̂(u) = f_{H,…,H}(u ⊗ 1 ⊗ … ⊗ 1) ∈ H^{⊗n}`, stored as a
//! `dim(H)^n × dim(U)` matrix in row-major order. Other components are
//! `f_{X1..Xn}(u ⊗ x) = f̂(u) · x` with `H^{⊗n}` acting factorwise.

mod model;
mod yd;

pub use model::{HopfBackend, HopfModel};
pub use yd::YDCoalgebra;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::report::{CheckEntry, CheckReport, Witness};
use crate::vecg::first_difference;

/// Sparse vector: `(index, coefficient)` pairs with nonzero coefficients.
pub type Sparse<E> = Vec<(usize, E)>;

#[derive(Debug, Clone)]
pub struct HopfData<K: Field> {
    field: K,
    dim: usize,
    labels: Vec<String>,
    /// `H⊗H → H`, column `i·dim + j` is `e_i e_j`.
    mult: Matrix<K>,
    unit: Vec<K::Elem>,
    /// `H → H⊗H`.
    comul: Matrix<K>,
    counit: Matrix<K>,
    antipode: Matrix<K>,
    mult_sparse: Vec<Sparse<K::Elem>>,
}

impl<K: Field> HopfData<K> {
    /// Assembles Hopf data from explicit structure maps. Only shapes are
    /// checked; call [`validate`](Self::validate) for the axioms.
    pub fn new(
        field: &K,
        mult: Matrix<K>,
        unit: Vec<K::Elem>,
        comul: Matrix<K>,
        counit: Matrix<K>,
        antipode: Matrix<K>,
    ) -> Result<Self> {
        let d = unit.len();
        let shape = |name: &str, m: &Matrix<K>, r: usize, c: usize| -> Result<()> {
            if m.rows() != r || m.cols() != c {
                return Err(Error::Hopf(format!(
                    "{name} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(())
        };
        shape("multiplication", &mult, d, d * d)?;
        shape("comultiplication", &comul, d * d, d)?;
        shape("counit", &counit, 1, d)?;
        shape("antipode", &antipode, d, d)?;
        let mult_sparse = (0..d * d)
            .map(|c| {
                (0..d)
                    .filter(|&r| !field.is_zero(mult.get(r, c)))
                    .map(|r| (r, mult.get(r, c).clone()))
                    .collect()
            })
            .collect();
        Ok(HopfData {
            field: field.clone(),
            dim: d,
            labels: (0..d).map(|i| format!("h{i}")).collect(),
            mult,
            unit,
            comul,
            counit,
            antipode,
            mult_sparse,
        })
    }

    /// The group algebra `kG` with basis the group elements.
    pub fn group_algebra(field: &K, group: &FiniteGroup) -> Result<Self> {
        let q = group.order();
        let one = field.one();
        let mut mult = Matrix::zeros(field, q, q * q);
        let mut comul = Matrix::zeros(field, q * q, q);
        let mut antipode = Matrix::zeros(field, q, q);
        for a in 0..q {
            for b in 0..q {
                mult.set(group.mul(a, b), a * q + b, one.clone());
            }
            comul.set(a * q + a, a, one.clone());
            antipode.set(group.inv(a), a, one.clone());
        }
        let mut unit = vec![field.zero(); q];
        unit[group.identity()] = one.clone();
        let counit = Matrix::from_fn(field, 1, q, |_, _| one.clone());
        let mut h = Self::new(field, mult, unit, comul, counit, antipode)?;
        h.labels = group.names().to_vec();
        Ok(h)
    }

    /// The algebra `k^G` of functions on G with basis the indicator
    /// functions `δ_g`.
    pub fn dual_group_algebra(field: &K, group: &FiniteGroup) -> Result<Self> {
        let q = group.order();
        let one = field.one();
        let mut mult = Matrix::zeros(field, q, q * q);
        let mut comul = Matrix::zeros(field, q * q, q);
        let mut antipode = Matrix::zeros(field, q, q);
        for a in 0..q {
            mult.set(a, a * q + a, one.clone());
            for b in 0..q {
                comul.set(a * q + b, group.mul(a, b), one.clone());
            }
            antipode.set(group.inv(a), a, one.clone());
        }
        let unit = vec![one.clone(); q];
        let counit = Matrix::from_fn(field, 1, q, |_, j| {
            if j == group.identity() {
                one.clone()
            } else {
                field.zero()
            }
        });
        let mut h = Self::new(field, mult, unit, comul, counit, antipode)?;
        h.labels = group.names().iter().map(|n| format!("δ_{n}")).collect();
        Ok(h)
    }

    /// Sweedler's four-dimensional algebra with basis `1, g, x, gx`,
    /// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
    /// Needs characteristic other than 2.
    pub fn sweedler(field: &K) -> Result<Self> {
        if field.spec().characteristic() == 2 {
            return Err(Error::Hopf("Sweedler's algebra needs characteristic other than 2".into()));
        }
        // Basis index a + 2b stands for g^a x^b.
        let mut mult = Matrix::zeros(field, 4, 16);
        for i in 0..4 {
            for j in 0..4 {
                let (a, b) = (i % 2, i / 2);
                let (c, d) = (j % 2, j / 2);
                if b + d >= 2 {
                    continue;
                }
                let sign = field.sign(b * c == 1);
                mult.set((a + c) % 2 + 2 * (b + d), i * 4 + j, sign);
            }
        }
        let comul = Matrix::from_i64(
            field,
            &[
                // rows e_i⊗e_j for i, j in 1, g, x, gx; columns 1, g, x, gx
                &[1, 0, 0, 0], // 1⊗1
                &[0, 0, 0, 0], // 1⊗g
                &[0, 0, 0, 0], // 1⊗x
                &[0, 0, 0, 1], // 1⊗gx
                &[0, 0, 0, 0], // g⊗1
                &[0, 1, 0, 0], // g⊗g
                &[0, 0, 1, 0], // g⊗x
                &[0, 0, 0, 0], // g⊗gx
                &[0, 0, 1, 0], // x⊗1
                &[0, 0, 0, 0], // x⊗g
                &[0, 0, 0, 0], // x⊗x
                &[0, 0, 0, 0], // x⊗gx
                &[0, 0, 0, 0], // gx⊗1
                &[0, 0, 0, 1], // gx⊗g
                &[0, 0, 0, 0], // gx⊗x
                &[0, 0, 0, 0], // gx⊗gx
            ],
        )?;
        let counit = Matrix::from_i64(field, &[&[1, 1, 0, 0]])?;
        let antipode = Matrix::from_i64(
            field,
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
        )?;
        let unit = vec![field.one(), field.zero(), field.zero(), field.zero()];
        let mut h = Self::new(field, mult, unit, comul, counit, antipode)?;
        h.labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
        Ok(h)
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn mult(&self) -> &Matrix<K> {
        &self.mult
    }
    pub fn unit(&self) -> &[K::Elem] {
        &self.unit
    }
    pub fn comul(&self) -> &Matrix<K> {
        &self.comul
    }
    pub fn counit(&self) -> &Matrix<K> {
        &self.counit
    }
    pub fn antipode(&self) -> &Matrix<K> {
        &self.antipode
    }

    /// Nonzero terms of `e_i e_j`.
    #[inline]
    pub fn product_terms(&self, i: usize, j: usize) -> &Sparse<K::Elem> {
        &self.mult_sparse[i * self.dim + j]
    }

    /// Corrupts one structure constant, for exercising validation.
    pub fn with_mult_entry(mut self, row: usize, col: usize, value: K::Elem) -> Result<Self> {
        self.mult.set(row, col, value);
        Self::new(
            &self.field,
            self.mult,
            self.unit,
            self.comul,
            self.counit,
            self.antipode,
        )
        .map(|mut h| {
            h.labels = self.labels;
            h
        })
    }

    /// Checks the Hopf algebra axioms and reports each one.
    pub fn validate(&self) -> CheckReport {
        let k = &self.field;
        let d = self.dim;
        let id = Matrix::identity(k, d);
        let unit_col = Matrix::from_vec(k, d, 1, self.unit.clone()).expect("unit length");
        let mut r = CheckReport::new("hopf-algebra");

        let left = self.mult.mul(&self.mult.kron(&id)).expect("shape");
        let right = self.mult.mul(&id.kron(&self.mult)).expect("shape");
        let w = first_difference(&left, &right, "associativity").map(|mut w| {
            let (a, b, c) = (w.indices[1] / (d * d), (w.indices[1] / d) % d, w.indices[1] % d);
            w.detail = format!(
                "({}·{})·{} differs from {}·({}·{}) in coordinate {}",
                self.labels[a], self.labels[b], self.labels[c], self.labels[a], self.labels[b],
                self.labels[c], self.labels[w.indices[0]]
            );
            w.indices = vec![a, b, c];
            w
        });
        r.push(CheckEntry::from_outcome("algebra/associativity", d * d * d, w));

        let lu = self.mult.mul(&unit_col.kron(&id)).expect("shape");
        let ru = self.mult.mul(&id.kron(&unit_col)).expect("shape");
        let w = first_difference(&lu, &id, "left unit").or_else(|| first_difference(&ru, &id, "right unit"));
        r.push(CheckEntry::from_outcome("algebra/unit", d, w));

        let left = self.comul.kron(&id).mul(&self.comul).expect("shape");
        let right = id.kron(&self.comul).mul(&self.comul).expect("shape");
        r.push(CheckEntry::from_outcome(
            "coalgebra/coassociativity",
            d,
            first_difference(&left, &right, "coassociativity"),
        ));

        let lc = self.counit.kron(&id).mul(&self.comul).expect("shape");
        let rc = id.kron(&self.counit).mul(&self.comul).expect("shape");
        let w = first_difference(&lc, &id, "left counit").or_else(|| first_difference(&rc, &id, "right counit"));
        r.push(CheckEntry::from_outcome("coalgebra/counit", d, w));

        // Δ(ab) = Δ(a)Δ(b), with H⊗H multiplied factorwise.
        let mult2 = self.tensor_square_mult();
        let lhs = self.comul.mul(&self.mult).expect("shape");
        let rhs = mult2.mul(&self.comul.kron(&self.comul)).expect("shape");
        let mut w = first_difference(&lhs, &rhs, "comultiplication is not multiplicative");
        let du = self.comul.mul_vec(&self.unit).expect("shape");
        let uu = unit_col.kron(&unit_col).column(0);
        if w.is_none() && du != uu {
            w = Some(Witness::detail("comultiplication does not preserve the unit"));
        }
        r.push(CheckEntry::from_outcome("bialgebra/comul-multiplicative", d * d, w));

        let lhs = self.counit.mul(&self.mult).expect("shape");
        let rhs = self.counit.kron(&self.counit);
        let mut w = first_difference(&lhs, &rhs, "counit is not multiplicative");
        let eu = self.counit.mul_vec(&self.unit).expect("shape");
        if w.is_none() && eu != vec![k.one()] {
            w = Some(Witness::detail("counit of the unit is not 1"));
        }
        r.push(CheckEntry::from_outcome("bialgebra/counit-multiplicative", d * d, w));

        let ue = unit_col.mul(&self.counit).expect("shape");
        let ls = self.mult.mul(&self.antipode.kron(&id)).expect("shape").mul(&self.comul).expect("shape");
        let rs = self.mult.mul(&id.kron(&self.antipode)).expect("shape").mul(&self.comul).expect("shape");
        let w = first_difference(&ls, &ue, "left antipode").or_else(|| first_difference(&rs, &ue, "right antipode"));
        r.push(CheckEntry::from_outcome("hopf/antipode", d, w));

        r.sorted()
    }

    /// Multiplication of `H⊗H` as a map `(H⊗H)⊗(H⊗H) → H⊗H`.
    fn tensor_square_mult(&self) -> Matrix<K> {
        let k = &self.field;
        let d = self.dim;
        let mut m = Matrix::zeros(k, d * d, d.pow(4));
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    for e in 0..d {
                        let col = ((a * d + b) * d + c) * d + e;
                        for (r1, c1) in self.product_terms(a, c) {
                            for (r2, c2) in self.product_terms(b, e) {
                                let v = k.add(m.get(r1 * d + r2, col), &k.mul(c1, c2));
                                m.set(r1 * d + r2, col, v);
                            }
                        }
                    }
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::report::Status;

    #[test]
    fn presets_are_hopf_algebras() {
        let k = Rationals;
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for h in [
            HopfData::group_algebra(&k, &s3).unwrap(),
            HopfData::dual_group_algebra(&k, &s3).unwrap(),
            HopfData::sweedler(&k).unwrap(),
        ] {
            let r = h.validate();
            assert!(r.passed(), "{r:?}");
        }
        let f3 = PrimeField::new(3).unwrap();
        assert!(HopfData::sweedler(&f3).unwrap().validate().passed());
    }

    #[test]
    fn sweedler_needs_odd_characteristic() {
        let f2 = PrimeField::new(2).unwrap();
        assert!(HopfData::sweedler(&f2).is_err());
    }

    #[test]
    fn corrupted_group_algebra_fails_associativity() {
        let k = Rationals;
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let h = HopfData::group_algebra(&k, &z3).unwrap();
        // e_1 · e_1 := e_0 instead of e_2.
        let h = h
            .with_mult_entry(2, 4, k.zero())
            .unwrap()
            .with_mult_entry(0, 4, k.one())
            .unwrap();
        let r = h.validate();
        let e = r.entry("algebra/associativity").unwrap();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_ref().unwrap().indices.len(), 3);
    }
}
