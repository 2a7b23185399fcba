//! Vec_G as a [`DiagramModel`]: objects are simple objects `k_x`, every
//! component is a `1 × dim U` row vanishing outside the neutral grade.

use rayon::prelude::*;

use super::{decode, encode, CenterCoalgebra};
use crate::cochain::Cochain;
use crate::diagram::{DiagramModel, Eval};
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct VecGModel<K: Field> {
    coeff: CenterCoalgebra<K>,
}

impl<K: Field> VecGModel<K> {
    pub fn new(coeff: CenterCoalgebra<K>) -> Self {
        VecGModel { coeff }
    }

    pub fn coefficient(&self) -> &CenterCoalgebra<K> {
        &self.coeff
    }

    fn tuples(&self, n: usize) -> usize {
        self.coeff.group().order().pow(n as u32)
    }

    fn unit_input(&self, u: usize) -> Vec<K::Elem> {
        let k = self.coeff.field();
        let mut v = vec![k.zero(); self.coeff.dim()];
        v[u] = k.one();
        v
    }
}

impl<K: Field> DiagramModel<K> for VecGModel<K> {
    type Obj = usize;

    fn field(&self) -> &K {
        self.coeff.field()
    }

    fn label(&self) -> String {
        format!(
            "Vec_G, |G| = {}, dim U = {}",
            self.coeff.group().order(),
            self.coeff.dim()
        )
    }

    fn coeff_dim(&self) -> usize {
        self.coeff.dim()
    }

    fn obj_dim(&self, _x: &usize) -> usize {
        1
    }

    fn obj_label(&self, x: &usize) -> String {
        self.coeff.group().name(*x).to_string()
    }

    fn unit_obj(&self) -> usize {
        self.coeff.group().identity()
    }

    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        self.coeff.group().mul(*a, *b)
    }

    fn cochain_dim(&self, n: usize) -> usize {
        self.coeff
            .group()
            .order()
            .saturating_pow(n as u32)
            .saturating_mul(self.coeff.neutral_dim())
    }

    fn comul(&self) -> &Matrix<K> {
        self.coeff.comul()
    }

    fn counit(&self) -> &Matrix<K> {
        self.coeff.counit()
    }

    fn braid(&self, x: &usize, v: &[K::Elem]) -> Vec<K::Elem> {
        self.coeff.braiding(*x).mul_vec(v).expect("braiding shape")
    }

    fn component(&self, f: &Cochain<K>, objs: &[usize], v: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.coeff.field();
        let dw = self.coeff.neutral_dim();
        let off = self.coeff.neutral_offset();
        let t = encode(objs.iter().copied(), self.coeff.group().order());
        let mut acc = k.zero();
        for w in 0..dw {
            k.mul_add_assign(&mut acc, &f.coords[t * dw + w], &v[off + w]);
        }
        vec![acc]
    }

    fn probe_tuples(&self, n: usize) -> Vec<Vec<usize>> {
        let q = self.coeff.group().order();
        (0..self.tuples(n))
            .map(|t| {
                let mut x = Vec::new();
                decode(t, q, n, &mut x);
                x
            })
            .collect()
    }

    fn read_cochain(&self, n: usize, eval: &Eval<'_, usize, K::Elem>) -> Result<Vec<K::Elem>> {
        let q = self.coeff.group().order();
        let dw = self.coeff.neutral_dim();
        let off = self.coeff.neutral_offset();
        let rows: Vec<Vec<K::Elem>> = (0..self.tuples(n))
            .into_par_iter()
            .map(|t| {
                let mut x = Vec::new();
                decode(t, q, n, &mut x);
                let inputs: Vec<Vec<K::Elem>> = (0..dw).map(|w| self.unit_input(off + w)).collect();
                Ok(eval(&x, &inputs)?.into_iter().map(|o| o[0].clone()).collect::<Vec<_>>())
            })
            .collect::<Result<_>>()?;
        Ok(rows.concat())
    }

    fn read_condition(&self, n: usize, eval: &Eval<'_, usize, K::Elem>) -> Result<Vec<K::Elem>> {
        let q = self.coeff.group().order();
        let du = self.coeff.dim();
        let mut out = Vec::with_capacity(self.tuples(n) * du * du);
        let inputs: Vec<Vec<K::Elem>> = (0..du).map(|u| self.unit_input(u)).collect();
        let mut x = Vec::new();
        for t in 0..self.tuples(n) {
            decode(t, q, n, &mut x);
            out.extend(eval(&x, &inputs)?.into_iter().flatten());
        }
        Ok(out)
    }

    fn pi(&self) -> Cochain<K> {
        let eps = self.eps();
        let coords = (0..self.tuples(2)).flat_map(|_| eps.coords.iter().cloned()).collect();
        Cochain::new(2, coords)
    }

    fn eps(&self) -> Cochain<K> {
        let off = self.coeff.neutral_offset();
        let coords = (0..self.coeff.neutral_dim())
            .map(|w| self.coeff.counit().get(0, off + w).clone())
            .collect();
        Cochain::new(0, coords)
    }
}
