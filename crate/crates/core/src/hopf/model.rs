//! The forgetful functor `H-mod → Vect` as a [`DiagramModel`].
//!
//! Objects are tensor powers `H^{⊗k}` of the regular module, acting through
//! iterated comultiplication. The half-braiding is
//! `u ⊗ x ↦ u₍₋₁₎·x ⊗ u₍₀₎`.

use std::sync::OnceLock;

use super::{HopfData, Sparse, YDCoalgebra};
use crate::cochain::Cochain;
use crate::diagram::{DiagramEvaluator, DiagramModel, Eval};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::report::Witness;

/// Largest tensor power with cached iterated coproducts.
const MAX_POWER: usize = 12;

#[derive(Debug)]
pub struct HopfModel<K: Field> {
    h: HopfData<K>,
    u: YDCoalgebra<K>,
    /// `powers[k][b]` is `Δ^{(k)}(e_b) ∈ H^{⊗k}`.
    powers: Vec<OnceLock<Vec<Sparse<K::Elem>>>>,
    /// Terms `(b, c, coeff)` of `δ(u_a) = Σ coeff e_b ⊗ u_c`.
    coaction_terms: Vec<Vec<(usize, usize, K::Elem)>>,
}

impl<K: Field> Clone for HopfModel<K> {
    fn clone(&self) -> Self {
        Self::new_unchecked(self.h.clone(), self.u.clone())
    }
}

/// The Hopf complex, evaluated through string diagrams.
pub type HopfBackend<K> = DiagramEvaluator<HopfModel<K>>;

impl<K: Field> HopfModel<K> {
    /// Validates both inputs and builds the model.
    pub fn new(h: HopfData<K>, u: YDCoalgebra<K>) -> Result<Self> {
        if let Some(e) = h.validate().failures().next() {
            let detail = e.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default();
            return Err(Error::Hopf(format!("{} failed: {detail}", e.identity)));
        }
        if let Some(e) = u.validate(&h)?.failures().next() {
            let detail = e.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default();
            return Err(Error::Coefficient(format!("{} failed: {detail}", e.identity)));
        }
        Ok(Self::new_unchecked(h, u))
    }

    pub(crate) fn new_unchecked(h: HopfData<K>, u: YDCoalgebra<K>) -> Self {
        let k = h.field().clone();
        let d = h.dim();
        let du = u.dim();
        let coaction_terms = (0..du)
            .map(|a| {
                let mut t = Vec::new();
                for b in 0..d {
                    for c in 0..du {
                        let x = u.coaction().get(b * du + c, a);
                        if !k.is_zero(x) {
                            t.push((b, c, x.clone()));
                        }
                    }
                }
                t
            })
            .collect();
        HopfModel {
            h,
            u,
            powers: (0..=MAX_POWER).map(|_| OnceLock::new()).collect(),
            coaction_terms,
        }
    }

    /// Builds the diagram backend for this model.
    pub fn backend(h: HopfData<K>, u: YDCoalgebra<K>, max_degree: usize, memory_cap: usize) -> Result<HopfBackend<K>> {
        Ok(DiagramEvaluator::new(Self::new(h, u)?, max_degree, memory_cap))
    }

    pub fn hopf(&self) -> &HopfData<K> {
        &self.h
    }

    pub fn coefficient(&self) -> &YDCoalgebra<K> {
        &self.u
    }

    fn k(&self) -> &K {
        self.h.field()
    }

    /// `Δ^{(p)}(e_b)` for every basis element, with `Δ^{(0)} = ε`.
    pub fn coproduct_power(&self, p: usize) -> &[Sparse<K::Elem>] {
        assert!(p <= MAX_POWER, "tensor power {p} above {MAX_POWER}");
        self.powers[p].get_or_init(|| {
            let k = self.k();
            let d = self.h.dim();
            (0..d)
                .map(|b| match p {
                    0 => sparse(k, &[self.h.counit().get(0, b).clone()]),
                    1 => vec![(b, k.one())],
                    _ => {
                        let mut acc = vec![k.zero(); d.pow(p as u32)];
                        // Δ^{(p)} = (Δ^{(p-1)} ⊗ id) ∘ Δ.
                        for i in 0..d {
                            for j in 0..d {
                                let c = self.h.comul().get(i * d + j, b);
                                if k.is_zero(c) {
                                    continue;
                                }
                                for (idx, v) in &self.coproduct_power(p - 1)[i] {
                                    k.mul_add_assign(&mut acc[idx * d + j], c, v);
                                }
                            }
                        }
                        sparse(k, &acc)
                    }
                })
                .collect()
        })
    }

    /// Product of two elements of `H^{⊗p}` given as sparse vectors.
    fn tensor_product(&self, p: usize, a: &Sparse<K::Elem>, y: &Sparse<K::Elem>, out: &mut [K::Elem]) {
        let k = self.k();
        let d = self.h.dim();
        let mut da = vec![0; p];
        let mut dy = vec![0; p];
        let mut terms: Vec<(usize, K::Elem)> = Vec::new();
        let mut next: Vec<(usize, K::Elem)> = Vec::new();
        for (ia, ca) in a {
            digits(*ia, d, &mut da);
            for (iy, cy) in y {
                digits(*iy, d, &mut dy);
                terms.clear();
                terms.push((0, k.mul(ca, cy)));
                for t in 0..p {
                    next.clear();
                    for (idx, c) in &terms {
                        for (r, m) in self.h.product_terms(da[t], dy[t]) {
                            next.push((idx * d + r, k.mul(c, m)));
                        }
                    }
                    std::mem::swap(&mut terms, &mut next);
                    if terms.is_empty() {
                        break;
                    }
                }
                for (idx, c) in &terms {
                    k.add_assign(&mut out[*idx], c);
                }
            }
        }
    }

    /// `(Δ^{(k1)} ⊗ … ⊗ Δ^{(kn)})` applied to column `a` of `f̂`.
    fn expand(&self, f: &Cochain<K>, a: usize, objs: &[usize]) -> Sparse<K::Elem> {
        let k = self.k();
        let d = self.h.dim();
        let du = self.u.dim();
        let n = objs.len();
        let total: usize = objs.iter().sum();
        let mut acc = vec![k.zero(); d.pow(total as u32)];
        let mut beta = vec![0; n];
        let mut terms: Vec<(usize, K::Elem)> = Vec::new();
        let mut next: Vec<(usize, K::Elem)> = Vec::new();
        for row in 0..d.pow(n as u32) {
            let c = &f.coords[row * du + a];
            if k.is_zero(c) {
                continue;
            }
            digits(row, d, &mut beta);
            terms.clear();
            terms.push((0, c.clone()));
            for (t, &p) in objs.iter().enumerate() {
                let shift = d.pow(p as u32);
                next.clear();
                for (idx, v) in &terms {
                    for (j, w) in &self.coproduct_power(p)[beta[t]] {
                        next.push((idx * shift + j, k.mul(v, w)));
                    }
                }
                std::mem::swap(&mut terms, &mut next);
            }
            for (idx, v) in &terms {
                k.add_assign(&mut acc[*idx], v);
            }
        }
        sparse(k, &acc)
    }

    /// Unit of `H^{⊗n}`.
    fn unit_power(&self, n: usize) -> Vec<K::Elem> {
        let k = self.k();
        let mut v = vec![k.one()];
        for _ in 0..n {
            v = v
                .iter()
                .flat_map(|a| self.h.unit().iter().map(move |b| k.mul(a, b)))
                .collect();
        }
        v
    }

    /// `u_a ⊗ 1 ⊗ … ⊗ 1`.
    fn generator(&self, a: usize, n: usize) -> Vec<K::Elem> {
        let k = self.k();
        let unit = self.unit_power(n);
        let mut v = vec![k.zero(); self.u.dim() * unit.len()];
        v[a * unit.len()..(a + 1) * unit.len()].clone_from_slice(&unit);
        v
    }

    /// Matrix of the half-braiding `U⊗H^{⊗p} → H^{⊗p}⊗U`.
    pub fn braiding_matrix(&self, p: usize) -> Matrix<K> {
        let k = self.k();
        let n = self.u.dim() * self.h.dim().pow(p as u32);
        let cols: Vec<Vec<K::Elem>> = (0..n)
            .map(|j| {
                let mut v = vec![k.zero(); n];
                v[j] = k.one();
                self.braid(&p, &v)
            })
            .collect();
        Matrix::from_columns(k, n, &cols).expect("square")
    }

    /// Checks that the components of `f` at `(H, …, H)` commute with right
    /// multiplications, which are module maps of the regular module.
    pub fn check_naturality(&self, f: &Cochain<K>) -> Option<Witness> {
        let k = self.k();
        let d = self.h.dim();
        let du = self.u.dim();
        let n = f.degree;
        let objs = vec![1; n];
        let size = d.pow(n as u32);
        for pos in 0..n {
            for b in 0..d {
                // φ = right multiplication by e_b on factor `pos`.
                let phi = |v: &[K::Elem], blocks: usize| -> Vec<K::Elem> {
                    let mut out = vec![k.zero(); v.len()];
                    let inner = d.pow((n - pos - 1) as u32);
                    let outer = blocks * d.pow(pos as u32);
                    for o in 0..outer {
                        for x in 0..d {
                            for i in 0..inner {
                                let src = &v[(o * d + x) * inner + i];
                                if k.is_zero(src) {
                                    continue;
                                }
                                for (r, c) in self.h.product_terms(x, b) {
                                    k.mul_add_assign(&mut out[(o * d + r) * inner + i], src, c);
                                }
                            }
                        }
                    }
                    out
                };
                for j in 0..du * size {
                    let mut v = vec![k.zero(); du * size];
                    v[j] = k.one();
                    let lhs = self.component(f, &objs, &phi(&v, du));
                    let rhs = phi(&self.component(f, &objs, &v), 1);
                    if lhs != rhs {
                        return Some(Witness {
                            degrees: vec![n],
                            indices: vec![pos, b, j],
                            detail: format!(
                                "component fails to commute with right multiplication by {} on factor {pos}",
                                self.h.labels()[b]
                            ),
                            ..Witness::default()
                        });
                    }
                }
            }
        }
        None
    }
}

fn sparse<K: Field>(k: &K, v: &[K::Elem]) -> Sparse<K::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !k.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

fn digits(mut idx: usize, d: usize, out: &mut [usize]) {
    for t in (0..out.len()).rev() {
        out[t] = idx % d;
        idx /= d;
    }
}

impl<K: Field> DiagramModel<K> for HopfModel<K> {
    type Obj = usize;

    fn field(&self) -> &K {
        self.h.field()
    }

    fn label(&self) -> String {
        format!("H-mod, dim H = {}, dim U = {}", self.h.dim(), self.u.dim())
    }

    fn coeff_dim(&self) -> usize {
        self.u.dim()
    }

    fn obj_dim(&self, x: &usize) -> usize {
        self.h.dim().pow(*x as u32)
    }

    fn obj_label(&self, x: &usize) -> String {
        match x {
            0 => "k".to_string(),
            1 => "H".to_string(),
            _ => format!("H^{x}"),
        }
    }

    fn unit_obj(&self) -> usize {
        0
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }

    fn cochain_dim(&self, n: usize) -> usize {
        self.h
            .dim()
            .saturating_pow(n as u32)
            .saturating_mul(self.u.dim())
    }

    fn comul(&self) -> &Matrix<K> {
        self.u.comul()
    }

    fn counit(&self) -> &Matrix<K> {
        self.u.counit()
    }

    fn braid(&self, x: &usize, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.k();
        let du = self.u.dim();
        let size = self.h.dim().pow(*x as u32);
        let mut out = vec![k.zero(); size * du];
        let mut z = vec![k.zero(); size];
        for a in 0..du {
            let y = sparse(k, &v[a * size..(a + 1) * size]);
            if y.is_empty() {
                continue;
            }
            for (b, c, coeff) in &self.coaction_terms[a] {
                z.iter_mut().for_each(|e| *e = k.zero());
                self.tensor_product(*x, &self.coproduct_power(*x)[*b], &y, &mut z);
                for (i, zi) in z.iter().enumerate() {
                    k.mul_add_assign(&mut out[i * du + c], coeff, zi);
                }
            }
        }
        out
    }

    fn component(&self, f: &Cochain<K>, objs: &[usize], v: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.k();
        let du = self.u.dim();
        let total: usize = objs.iter().sum();
        let size = self.h.dim().pow(total as u32);
        let mut out = vec![k.zero(); size];
        for a in 0..du {
            let y = sparse(k, &v[a * size..(a + 1) * size]);
            if y.is_empty() {
                continue;
            }
            let fa = self.expand(f, a, objs);
            self.tensor_product(total, &fa, &y, &mut out);
        }
        out
    }

    fn probe_tuples(&self, n: usize) -> Vec<Vec<usize>> {
        vec![vec![1; n]]
    }

    fn read_cochain(&self, n: usize, eval: &Eval<'_, usize, K::Elem>) -> Result<Vec<K::Elem>> {
        let k = self.k();
        let du = self.u.dim();
        let size = self.h.dim().pow(n as u32);
        let objs = vec![1; n];
        let mut coords = vec![k.zero(); size * du];
        let inputs: Vec<Vec<K::Elem>> = (0..du).map(|a| self.generator(a, n)).collect();
        for (a, out) in eval(&objs, &inputs)?.into_iter().enumerate() {
            for (row, x) in out.into_iter().enumerate() {
                coords[row * du + a] = x;
            }
        }
        Ok(coords)
    }

    fn read_condition(&self, n: usize, eval: &Eval<'_, usize, K::Elem>) -> Result<Vec<K::Elem>> {
        let objs = vec![1; n];
        let inputs: Vec<Vec<K::Elem>> = (0..self.u.dim()).map(|a| self.generator(a, n)).collect();
        Ok(eval(&objs, &inputs)?.into_iter().flatten().collect())
    }

    fn pi(&self) -> Cochain<K> {
        let k = self.k();
        let du = self.u.dim();
        let unit = self.unit_power(2);
        let mut coords = vec![k.zero(); unit.len() * du];
        for (row, x) in unit.iter().enumerate() {
            for a in 0..du {
                coords[row * du + a] = k.mul(x, self.u.counit().get(0, a));
            }
        }
        Cochain::new(2, coords)
    }

    fn eps(&self) -> Cochain<K> {
        Cochain::new(0, self.u.counit().row(0).to_vec())
    }
}
