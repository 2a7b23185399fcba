//! Yetter-Drinfeld modules over H carrying a coalgebra structure.
//!
//! Left action `H⊗U → U`, left coaction `U → H⊗U`, `u ↦ u₍₋₁₎ ⊗ u₍₀₎`.
//! Only the coaction enters the complex of the forgetful functor; the action
//! is checked for the Yetter-Drinfeld compatibility and otherwise unused.

use super::{HopfData, HopfModel};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::report::{CheckEntry, CheckReport};
use crate::vecg::first_difference;

#[derive(Debug, Clone)]
pub struct YDCoalgebra<K: Field> {
    field: K,
    dim: usize,
    labels: Vec<String>,
    /// `H⊗U → U`, column `h·dim U + u`.
    action: Matrix<K>,
    /// `U → H⊗U`.
    coaction: Matrix<K>,
    comul: Matrix<K>,
    counit: Matrix<K>,
}

impl<K: Field> YDCoalgebra<K> {
    /// Assembles the data for a Hopf algebra of dimension `hdim`. Only shapes
    /// are checked here.
    pub fn new(
        field: &K,
        hdim: usize,
        action: Matrix<K>,
        coaction: Matrix<K>,
        comul: Matrix<K>,
        counit: Matrix<K>,
    ) -> Result<Self> {
        let du = counit.cols();
        let shape = |name: &str, m: &Matrix<K>, r: usize, c: usize| -> Result<()> {
            if m.rows() != r || m.cols() != c {
                return Err(Error::Coefficient(format!(
                    "{name} is {}x{}, expected {r}x{c}",
                    m.rows(),
                    m.cols()
                )));
            }
            Ok(())
        };
        shape("counit", &counit, 1, du)?;
        shape("action", &action, du, hdim * du)?;
        shape("coaction", &coaction, hdim * du, du)?;
        shape("comultiplication", &comul, du * du, du)?;
        Ok(YDCoalgebra {
            field: field.clone(),
            dim: du,
            labels: (0..du).map(|i| format!("u{i}")).collect(),
            action,
            coaction,
            comul,
            counit,
        })
    }

    /// The unit object `k` with action by the counit and coaction `1 ↦ 1⊗1`.
    pub fn trivial(h: &HopfData<K>) -> Result<Self> {
        let k = h.field();
        let action = h.counit().clone();
        let coaction = Matrix::from_vec(k, h.dim(), 1, h.unit().to_vec())?;
        let one = Matrix::identity(k, 1);
        let mut u = Self::new(k, h.dim(), action, coaction, one.clone(), one)?;
        u.labels = vec!["1".into()];
        Ok(u)
    }

    /// The non-cocommutative coalgebra dual to upper triangular 2×2
    /// matrices, with trivial action and coaction.
    pub fn upper_triangular(h: &HopfData<K>) -> Result<Self> {
        let k = h.field();
        let d = h.dim();
        let id3 = Matrix::identity(k, 3);
        let counit_h = h.counit();
        let action = Matrix::from_fn(k, 3, 3 * d, |r, c| k.mul(counit_h.get(0, c / 3), id3.get(r, c % 3)));
        let unit_col = Matrix::from_vec(k, d, 1, h.unit().to_vec())?;
        let coaction = unit_col.kron(&id3);
        let mut comul = Matrix::zeros(k, 9, 3);
        comul.set(0, 0, k.one());
        comul.set(1, 1, k.one());
        comul.set(5, 1, k.one());
        comul.set(8, 2, k.one());
        let counit = Matrix::from_i64(k, &[&[1, 0, 1]])?;
        let mut u = Self::new(k, d, action, coaction, comul, counit)?;
        u.labels = vec!["c11".into(), "c12".into(), "c22".into()];
        Ok(u)
    }

    /// For the group algebra `kG` (basis the group elements): `U = kG`
    /// graded by `u_g ↦ g ⊗ u_g`, with conjugation action and
    /// `Δ u_g = Σ_{ab=g} u_a ⊗ u_b`.
    pub fn group_regular(field: &K, group: &FiniteGroup) -> Result<Self> {
        let q = group.order();
        let one = field.one();
        let mut action = Matrix::zeros(field, q, q * q);
        let mut coaction = Matrix::zeros(field, q * q, q);
        let mut comul = Matrix::zeros(field, q * q, q);
        for x in 0..q {
            for g in 0..q {
                action.set(group.conjugate(g, x), x * q + g, one.clone());
                comul.set(x * q + g, group.mul(x, g), one.clone());
            }
            coaction.set(x * q + x, x, one.clone());
        }
        let counit = Matrix::from_fn(field, 1, q, |_, j| {
            if j == group.identity() {
                one.clone()
            } else {
                field.zero()
            }
        });
        let mut u = Self::new(field, q, action, coaction, comul, counit)?;
        u.labels = group.names().to_vec();
        Ok(u)
    }

    /// `U = H` with the adjoint action, the regular coaction `Δ_H`, and the
    /// coalgebra structure of H. It is a Yetter-Drinfeld module, but `Δ_H` is
    /// not a comodule map, so it is not a coalgebra in the center unless H is
    /// trivial.
    pub fn adjoint(h: &HopfData<K>) -> Result<Self> {
        let k = h.field();
        let d = h.dim();
        let mut action = Matrix::zeros(k, d, d * d);
        for x in 0..d {
            for u in 0..d {
                // x·u = x₁ u S(x₂)
                for i in 0..d {
                    for j in 0..d {
                        let c = h.comul().get(i * d + j, x);
                        if k.is_zero(c) {
                            continue;
                        }
                        for (r, c1) in h.product_terms(i, u) {
                            for s in 0..d {
                                let c2 = h.antipode().get(s, j);
                                if k.is_zero(c2) {
                                    continue;
                                }
                                for (t, c3) in h.product_terms(*r, s) {
                                    let v = k.mul(&k.mul(c, c1), &k.mul(c2, c3));
                                    let e = k.add(action.get(*t, x * d + u), &v);
                                    action.set(*t, x * d + u, e);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut u = Self::new(k, d, action, h.comul().clone(), h.comul().clone(), h.counit().clone())?;
        u.labels = h.labels().to_vec();
        Ok(u)
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
    pub fn action(&self) -> &Matrix<K> {
        &self.action
    }
    pub fn coaction(&self) -> &Matrix<K> {
        &self.coaction
    }
    pub fn comul(&self) -> &Matrix<K> {
        &self.comul
    }
    pub fn counit(&self) -> &Matrix<K> {
        &self.counit
    }

    /// Checks the module, comodule, Yetter-Drinfeld and coalgebra axioms,
    /// and the compatibility of the coalgebra maps with the half-braiding at
    /// the regular module.
    pub fn validate(&self, h: &HopfData<K>) -> Result<CheckReport> {
        let k = &self.field;
        let d = h.dim();
        let du = self.dim;
        if self.action.cols() != d * du {
            return Err(Error::dim("action columns", d * du, self.action.cols()));
        }
        let idu = Matrix::identity(k, du);
        let idh = Matrix::identity(k, d);
        let unit_col = Matrix::from_vec(k, d, 1, h.unit().to_vec())?;
        let mut r = CheckReport::new("yd-coalgebra");

        let lhs = self.action.mul(&h.mult().kron(&idu))?;
        let rhs = self.action.mul(&idh.kron(&self.action))?;
        r.push(CheckEntry::from_outcome(
            "module/associativity",
            d * d * du,
            first_difference(&lhs, &rhs, "(ab)·u differs from a·(b·u)"),
        ));
        let lhs = self.action.mul(&unit_col.kron(&idu))?;
        r.push(CheckEntry::from_outcome("module/unit", du, first_difference(&lhs, &idu, "1·u differs from u")));

        let lhs = h.comul().kron(&idu).mul(&self.coaction)?;
        let rhs = idh.kron(&self.coaction).mul(&self.coaction)?;
        r.push(CheckEntry::from_outcome(
            "comodule/coassociativity",
            du,
            first_difference(&lhs, &rhs, "coaction is not coassociative"),
        ));
        let lhs = h.counit().kron(&idu).mul(&self.coaction)?;
        r.push(CheckEntry::from_outcome(
            "comodule/counit",
            du,
            first_difference(&lhs, &idu, "coaction is not counital"),
        ));

        let lhs = self.coaction.mul(&self.action)?;
        let rhs = self.yd_rhs(h)?;
        r.push(CheckEntry::from_outcome(
            "yetter-drinfeld/compatibility",
            d * du,
            first_difference(&lhs, &rhs, "Yetter-Drinfeld condition"),
        ));

        let lhs = self.comul.kron(&idu).mul(&self.comul)?;
        let rhs = idu.kron(&self.comul).mul(&self.comul)?;
        r.push(CheckEntry::from_outcome(
            "comul/coassociativity",
            du,
            first_difference(&lhs, &rhs, "coassociativity"),
        ));
        let lc = self.counit.kron(&idu).mul(&self.comul)?;
        let rc = idu.kron(&self.counit).mul(&self.comul)?;
        let w = first_difference(&lc, &idu, "left counit").or_else(|| first_difference(&rc, &idu, "right counit"));
        r.push(CheckEntry::from_outcome("comul/counit", du, w));

        let model = HopfModel::new_unchecked(h.clone(), self.clone());
        let rho1 = model.braiding_matrix(1);
        let rho2 = model.braiding_matrix(2);
        let hex = idh.kron(&rho1).mul(&rho1.kron(&idh))?;
        r.push(CheckEntry::from_outcome(
            "braiding/hexagon",
            du * d * d,
            first_difference(&rho2, &hex, "braiding with H⊗H is not the composite"),
        ));
        let w = (rho1.rank() != du * d).then(|| crate::report::Witness::detail("braiding with H is singular"));
        r.push(CheckEntry::from_outcome("braiding/invertible", 1, w));

        let lhs = idh.kron(&self.comul).mul(&rho1)?;
        let rhs = rho1
            .kron(&idu)
            .mul(&idu.kron(&rho1))?
            .mul(&self.comul.kron(&idh))?;
        r.push(CheckEntry::from_outcome(
            "comul/center-morphism",
            du * d,
            first_difference(&lhs, &rhs, "comultiplication does not commute with the braiding"),
        ));
        let lhs = idh.kron(&self.counit).mul(&rho1)?;
        let rhs = self.counit.kron(&idh);
        r.push(CheckEntry::from_outcome(
            "counit/center-morphism",
            du * d,
            first_difference(&lhs, &rhs, "counit does not commute with the braiding"),
        ));

        Ok(r.sorted())
    }

    /// `h ⊗ u ↦ h₁ u₍₋₁₎ S(h₃) ⊗ h₂·u₍₀₎`.
    fn yd_rhs(&self, h: &HopfData<K>) -> Result<Matrix<K>> {
        let k = &self.field;
        let d = h.dim();
        let du = self.dim;
        let idh = Matrix::identity(k, d);
        let comul2 = h.comul().kron(&idh).mul(h.comul())?;
        let mut out = Matrix::zeros(k, d * du, d * du);
        for x in 0..d {
            for a in 0..du {
                let col = x * du + a;
                for t in 0..d * d * d {
                    let c = comul2.get(t, x);
                    if k.is_zero(c) {
                        continue;
                    }
                    let (i, j, l) = (t / (d * d), (t / d) % d, t % d);
                    for b in 0..d {
                        for e in 0..du {
                            let cc = self.coaction.get(b * du + e, a);
                            if k.is_zero(cc) {
                                continue;
                            }
                            let coeff = k.mul(c, cc);
                            // h-part: e_i e_b S(e_l); u-part: e_j · u_e.
                            for (p, c1) in h.product_terms(i, b) {
                                for s in 0..d {
                                    let c2 = h.antipode().get(s, l);
                                    if k.is_zero(c2) {
                                        continue;
                                    }
                                    for (hq, c3) in h.product_terms(*p, s) {
                                        let hc = k.mul(&coeff, &k.mul(c1, &k.mul(c2, c3)));
                                        for v in 0..du {
                                            let av = self.action.get(v, j * du + e);
                                            if k.is_zero(av) {
                                                continue;
                                            }
                                            let e0 = k.add(out.get(hq * du + v, col), &k.mul(&hc, av));
                                            out.set(hq * du + v, col, e0);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::report::Status;

    #[test]
    fn presets_validate() {
        let k = Rationals;
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let kg = HopfData::group_algebra(&k, &s3).unwrap();
        let sw = HopfData::sweedler(&k).unwrap();
        let dual = HopfData::dual_group_algebra(&k, &s3).unwrap();
        for (h, u) in [
            (&kg, YDCoalgebra::trivial(&kg).unwrap()),
            (&sw, YDCoalgebra::trivial(&sw).unwrap()),
            (&sw, YDCoalgebra::upper_triangular(&sw).unwrap()),
            (&dual, YDCoalgebra::trivial(&dual).unwrap()),
            (&kg, YDCoalgebra::group_regular(&k, &s3).unwrap()),
        ] {
            let r = u.validate(h).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn adjoint_coefficient_is_yd_but_not_a_center_coalgebra() {
        let k = PrimeField::new(3).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let h = HopfData::group_algebra(&k, &z2).unwrap();
        let r = YDCoalgebra::adjoint(&h).unwrap().validate(&h).unwrap();
        assert_eq!(r.entry("yetter-drinfeld/compatibility").unwrap().status, Status::Pass);
        assert_eq!(r.entry("comul/center-morphism").unwrap().status, Status::Fail);
        let sw = HopfData::sweedler(&k).unwrap();
        let r = YDCoalgebra::adjoint(&sw).unwrap().validate(&sw).unwrap();
        assert_eq!(r.entry("yetter-drinfeld/compatibility").unwrap().status, Status::Pass);
        assert_eq!(r.entry("comul/center-morphism").unwrap().status, Status::Fail);
    }
}
