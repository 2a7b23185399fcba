//! Verbatim evaluation of the complex's operations as string-diagram
//! composites.
//!
//! A [`DiagramModel`] supplies the pieces of a strict tensor functor with a
//! coalgebra coefficient: object dimensions, the half-braiding, the coalgebra
//! maps, and the components of a cochain. The evaluator composes them on
//! tensor states with no reduction; merged objects reuse the data of their
//! factors because the tensor structure of the functor is the identity.

use std::fmt;

use rayon::prelude::*;

use crate::cochain::{sign, Cochain, ComplexBackend};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Evaluation callback: given an object tuple and a batch of input vectors,
/// return the output vectors of a composite.
pub type Eval<'a, O, E> = dyn Fn(&[O], &[Vec<E>]) -> Result<Vec<Vec<E>>> + Sync + 'a;

pub trait DiagramModel<K: Field>: Sync {
    type Obj: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn field(&self) -> &K;
    fn label(&self) -> String;
    /// Dimension of the coefficient U.
    fn coeff_dim(&self) -> usize;
    fn obj_dim(&self, x: &Self::Obj) -> usize;
    fn obj_label(&self, x: &Self::Obj) -> String;
    fn unit_obj(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn cochain_dim(&self, n: usize) -> usize;
    /// `U → U⊗U`.
    fn comul(&self) -> &Matrix<K>;
    /// `U → k` as a `1 × dim U` matrix.
    fn counit(&self) -> &Matrix<K>;
    /// The half-braiding `U⊗F(X) → F(X)⊗U` applied to one vector.
    fn braid(&self, x: &Self::Obj, v: &[K::Elem]) -> Vec<K::Elem>;
    /// The component `U⊗F(X1)⊗…⊗F(Xn) → F(X1)⊗…⊗F(Xn)` of a cochain.
    fn component(&self, f: &Cochain<K>, objs: &[Self::Obj], v: &[K::Elem]) -> Vec<K::Elem>;
    /// Object tuples used when displaying a natural transformation.
    fn probe_tuples(&self, n: usize) -> Vec<Vec<Self::Obj>>;
    /// Coordinates of the degree-`n` cochain whose components are computed by
    /// `eval`.
    fn read_cochain(&self, n: usize, eval: &Eval<'_, Self::Obj, K::Elem>) -> Result<Vec<K::Elem>>;
    /// Flattened values of a transformation `U⊗F^n → F^n⊗U` on the inputs
    /// that determine it.
    fn read_condition(&self, n: usize, eval: &Eval<'_, Self::Obj, K::Elem>)
        -> Result<Vec<K::Elem>>;
    fn pi(&self) -> Cochain<K>;
    fn eps(&self) -> Cochain<K>;
}

/// A vector in a tensor product of factors, row-major over `dims`.
#[derive(Debug, Clone)]
struct State<E> {
    dims: Vec<usize>,
    data: Vec<E>,
}

impl<E: Clone> State<E> {
    fn new(dims: Vec<usize>, data: Vec<E>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), data.len());
        State { dims, data }
    }

    /// Replaces factors `start..start+len` by `out_dims`, applying `map` to
    /// every fibre. `is_zero` lets all-zero fibres be skipped.
    fn apply(
        &mut self,
        zero: &E,
        is_zero: impl Fn(&E) -> bool,
        start: usize,
        len: usize,
        out_dims: Vec<usize>,
        map: impl Fn(&[E]) -> Vec<E>,
    ) {
        let left: usize = self.dims[..start].iter().product();
        let mid: usize = self.dims[start..start + len].iter().product();
        let right: usize = self.dims[start + len..].iter().product();
        let out_mid: usize = out_dims.iter().product();
        let mut out = vec![zero.clone(); left * out_mid * right];
        let mut fibre = Vec::with_capacity(mid);
        for l in 0..left {
            for r in 0..right {
                fibre.clear();
                fibre.extend((0..mid).map(|m| self.data[(l * mid + m) * right + r].clone()));
                if fibre.iter().all(&is_zero) {
                    continue;
                }
                let y = map(&fibre);
                debug_assert_eq!(y.len(), out_mid);
                for (m, v) in y.into_iter().enumerate() {
                    out[(l * out_mid + m) * right + r] = v;
                }
            }
        }
        self.dims.splice(start..start + len, out_dims);
        self.data = out;
    }

    /// Regards factors `start..start+len` as one factor; `len = 0` inserts a
    /// factor of dimension 1.
    fn merge(&mut self, start: usize, len: usize) {
        let d: usize = self.dims[start..start + len].iter().product();
        self.dims.splice(start..start + len, [d]);
    }
}

/// Composites evaluated by [`DiagramEvaluator`].
#[derive(Debug, Clone, Copy)]
pub enum Expression<'a, K: Field> {
    Delta(&'a Cochain<K>),
    Cup(&'a Cochain<K>, &'a Cochain<K>),
    Sqcup(&'a Cochain<K>, &'a Cochain<K>),
    Diamond(&'a Cochain<K>, &'a Cochain<K>, usize),
    /// `Δ ⊗ F^n`.
    LambdaL(usize),
    /// `(U ⊗ ρ(X1..Xn)) ∘ (Δ ⊗ F^n)`.
    LambdaR(usize),
    /// `(f ⊗ U) ∘ λ_R`.
    EquivarianceLhs(&'a Cochain<K>),
    /// `ρ(X1..Xn) ∘ (U ⊗ f) ∘ λ_L`.
    EquivarianceRhs(&'a Cochain<K>),
}

/// Components of a natural transformation at the model's probe tuples.
#[derive(Debug, Clone)]
pub struct DiagramNat<K: Field> {
    /// Number of functor factors in the source.
    pub arity: usize,
    pub components: Vec<(Vec<String>, Matrix<K>)>,
}

/// Evaluates composites in a [`DiagramModel`] and exposes them as a
/// [`ComplexBackend`].
#[derive(Debug, Clone)]
pub struct DiagramEvaluator<M> {
    model: M,
    max_degree: usize,
    memory_cap: usize,
}

impl<M> DiagramEvaluator<M> {
    pub fn new(model: M, max_degree: usize, memory_cap: usize) -> Self {
        DiagramEvaluator {
            model,
            max_degree,
            memory_cap,
        }
    }

    pub fn model(&self) -> &M {
        &self.model
    }
}

/// Stateless helpers for the evaluation steps.
struct Steps<'m, K: Field, M: DiagramModel<K>> {
    model: &'m M,
    k: &'m K,
}

impl<'m, K: Field, M: DiagramModel<K>> Steps<'m, K, M> {
    fn apply(
        &self,
        s: &mut State<K::Elem>,
        start: usize,
        len: usize,
        out_dims: Vec<usize>,
        map: impl Fn(&[K::Elem]) -> Vec<K::Elem>,
    ) {
        let k = self.k;
        s.apply(&k.zero(), |x| k.is_zero(x), start, len, out_dims, map);
    }

    fn comul(&self, s: &mut State<K::Elem>, pos: usize) {
        let du = self.model.coeff_dim();
        let d = self.model.comul();
        self.apply(s, pos, 1, vec![du, du], |x| d.mul_vec(x).expect("comul shape"));
    }

    /// Moves the U factor at `pos` to the right past the factors holding `objs`.
    fn braid_past(&self, s: &mut State<K::Elem>, pos: usize, objs: &[M::Obj]) {
        let du = self.model.coeff_dim();
        for (t, x) in objs.iter().enumerate() {
            let dx = self.model.obj_dim(x);
            self.apply(s, pos + t, 2, vec![dx, du], |v| self.model.braid(x, v));
        }
    }

    /// Applies the component of `f` at `objs` to the U factor at `pos` and the
    /// following `objs.len()` factors.
    fn component(&self, s: &mut State<K::Elem>, pos: usize, f: &Cochain<K>, objs: &[M::Obj]) {
        let out: Vec<usize> = objs.iter().map(|x| self.model.obj_dim(x)).collect();
        self.apply(s, pos, objs.len() + 1, out, |v| self.model.component(f, objs, v));
    }

    fn merged(&self, objs: &[M::Obj]) -> M::Obj {
        objs.iter()
            .fold(self.model.unit_obj(), |acc, x| self.model.tensor_obj(&acc, x))
    }

    fn add_into(&self, acc: &mut [K::Elem], c: &K::Elem, v: &[K::Elem]) {
        for (a, b) in acc.iter_mut().zip(v) {
            self.k.mul_add_assign(a, c, b);
        }
    }

    /// The batch becomes a trailing factor that no step touches.
    fn initial(&self, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> State<K::Elem> {
        let mut dims = vec![self.model.coeff_dim()];
        dims.extend(objs.iter().map(|x| self.model.obj_dim(x)));
        let len: usize = dims.iter().product();
        dims.push(v.len());
        let data = (0..len).flat_map(|i| v.iter().map(move |x| x[i].clone())).collect();
        State::new(dims, data)
    }

    fn delta(&self, f: &Cochain<K>, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> Vec<K::Elem> {
        let k = self.k;
        let n = f.degree;
        let out_len: usize = objs.iter().map(|x| self.model.obj_dim(x)).product();
        let mut acc = vec![k.zero(); out_len * v.len()];

        let mut s = self.initial(objs, v);
        self.braid_past(&mut s, 0, &objs[..1]);
        self.component(&mut s, 1, f, &objs[1..]);
        self.add_into(&mut acc, &k.one(), &s.data);

        for i in 1..=n {
            let mut s = self.initial(objs, v);
            s.merge(i, 2);
            let mut merged: Vec<M::Obj> = objs[..i - 1].to_vec();
            merged.push(self.model.tensor_obj(&objs[i - 1], &objs[i]));
            merged.extend_from_slice(&objs[i + 1..]);
            self.component(&mut s, 0, f, &merged);
            self.add_into(&mut acc, &sign(k, i), &s.data);
        }

        let mut s = self.initial(objs, v);
        self.component(&mut s, 0, f, &objs[..n]);
        self.add_into(&mut acc, &sign(k, n + 1), &s.data);
        acc
    }

    fn cup(&self, f: &Cochain<K>, g: &Cochain<K>, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> Vec<K::Elem> {
        let m = f.degree;
        let mut s = self.initial(objs, v);
        self.comul(&mut s, 0);
        self.braid_past(&mut s, 1, &objs[..m]);
        self.component(&mut s, m + 1, g, &objs[m..]);
        self.component(&mut s, 0, f, &objs[..m]);
        s.data
    }

    fn sqcup(&self, f: &Cochain<K>, g: &Cochain<K>, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> Vec<K::Elem> {
        let m = f.degree;
        let mut s = self.initial(objs, v);
        self.comul(&mut s, 0);
        self.component(&mut s, 1, f, &objs[..m]);
        self.braid_past(&mut s, 0, &objs[..m]);
        self.component(&mut s, m, g, &objs[m..]);
        s.data
    }

    fn diamond(
        &self,
        f: &Cochain<K>,
        g: &Cochain<K>,
        i: usize,
        objs: &[M::Obj],
        v: &[Vec<K::Elem>],
    ) -> Vec<K::Elem> {
        let n = g.degree;
        let mut s = self.initial(objs, v);
        self.comul(&mut s, 0);
        self.braid_past(&mut s, 1, &objs[..i]);
        self.component(&mut s, i + 1, g, &objs[i..i + n]);
        s.merge(i + 1, n);
        let mut fobjs: Vec<M::Obj> = objs[..i].to_vec();
        fobjs.push(self.merged(&objs[i..i + n]));
        fobjs.extend_from_slice(&objs[i + n..]);
        self.component(&mut s, 0, f, &fobjs);
        s.data
    }

    fn lambda_l(&self, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> State<K::Elem> {
        let mut s = self.initial(objs, v);
        self.comul(&mut s, 0);
        s
    }

    fn lambda_r(&self, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> State<K::Elem> {
        let mut s = self.lambda_l(objs, v);
        self.braid_past(&mut s, 1, objs);
        s
    }

    fn equivariance_lhs(&self, f: &Cochain<K>, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> Vec<K::Elem> {
        let mut s = self.lambda_r(objs, v);
        self.component(&mut s, 0, f, objs);
        s.data
    }

    fn equivariance_rhs(&self, f: &Cochain<K>, objs: &[M::Obj], v: &[Vec<K::Elem>]) -> Vec<K::Elem> {
        let mut s = self.lambda_l(objs, v);
        self.component(&mut s, 1, f, objs);
        self.braid_past(&mut s, 0, objs);
        s.data
    }
}

impl<M> DiagramEvaluator<M> {
    fn steps<'m, K: Field>(&'m self) -> Steps<'m, K, M>
    where
        M: DiagramModel<K>,
    {
        Steps {
            model: &self.model,
            k: self.model.field(),
        }
    }

    /// Arity of the composite and a check that its operands fit the model.
    fn arity<K: Field>(&self, expr: &Expression<'_, K>) -> Result<usize>
    where
        M: DiagramModel<K>,
    {
        let check = |f: &Cochain<K>| -> Result<()> {
            let d = self.model.cochain_dim(f.degree);
            if f.dim() != d {
                return Err(Error::Expression(format!(
                    "operand of degree {} has {} coordinates, expected {d}",
                    f.degree,
                    f.dim()
                )));
            }
            Ok(())
        };
        Ok(match *expr {
            Expression::Delta(f) => {
                check(f)?;
                f.degree + 1
            }
            Expression::Cup(f, g) | Expression::Sqcup(f, g) => {
                check(f)?;
                check(g)?;
                f.degree + g.degree
            }
            Expression::Diamond(f, g, _) => {
                check(f)?;
                check(g)?;
                (f.degree + g.degree).checked_sub(1).ok_or(Error::NegativeDegree)?
            }
            Expression::LambdaL(n) | Expression::LambdaR(n) => n,
            Expression::EquivarianceLhs(f) | Expression::EquivarianceRhs(f) => {
                check(f)?;
                f.degree
            }
        })
    }

    /// Output of the composite on one input vector at one object tuple.
    pub fn evaluate_on<K: Field>(
        &self,
        expr: &Expression<'_, K>,
        objs: &[M::Obj],
        v: &[K::Elem],
    ) -> Result<Vec<K::Elem>>
    where
        M: DiagramModel<K>,
    {
        Ok(self.evaluate_batch(expr, objs, &[v.to_vec()])?.pop().expect("one output"))
    }

    /// Outputs of the composite on several input vectors at one object tuple.
    pub fn evaluate_batch<K: Field>(
        &self,
        expr: &Expression<'_, K>,
        objs: &[M::Obj],
        v: &[Vec<K::Elem>],
    ) -> Result<Vec<Vec<K::Elem>>>
    where
        M: DiagramModel<K>,
    {
        let arity = self.arity(expr)?;
        if objs.len() != arity {
            return Err(Error::Expression(format!(
                "composite takes {arity} objects, got {}",
                objs.len()
            )));
        }
        let input: usize =
            self.model.coeff_dim() * objs.iter().map(|x| self.model.obj_dim(x)).product::<usize>();
        if let Some(bad) = v.iter().find(|x| x.len() != input) {
            return Err(Error::Expression(format!(
                "input vector has length {}, expected {input}",
                bad.len()
            )));
        }
        let st = self.steps();
        let data = match *expr {
            Expression::Delta(f) => st.delta(f, objs, v),
            Expression::Cup(f, g) => st.cup(f, g, objs, v),
            Expression::Sqcup(f, g) => st.sqcup(f, g, objs, v),
            Expression::Diamond(f, g, i) => {
                if i >= f.degree {
                    let out: usize = objs.iter().map(|x| self.model.obj_dim(x)).product();
                    vec![self.model.field().zero(); out * v.len()]
                } else {
                    st.diamond(f, g, i, objs, v)
                }
            }
            Expression::LambdaL(_) => st.lambda_l(objs, v).data,
            Expression::LambdaR(_) => st.lambda_r(objs, v).data,
            Expression::EquivarianceLhs(f) => st.equivariance_lhs(f, objs, v),
            Expression::EquivarianceRhs(f) => st.equivariance_rhs(f, objs, v),
        };
        let b = v.len();
        Ok((0..b).map(|j| data.iter().skip(j).step_by(b.max(1)).cloned().collect()).collect())
    }

    /// Full component matrices of the composite at the model's probe tuples.
    pub fn evaluate<K: Field>(&self, expr: &Expression<'_, K>) -> Result<DiagramNat<K>>
    where
        M: DiagramModel<K>,
    {
        let arity = self.arity(expr)?;
        let k = self.model.field();
        let mut components = Vec::new();
        for objs in self.model.probe_tuples(arity) {
            let input: usize = self.model.coeff_dim()
                * objs.iter().map(|x| self.model.obj_dim(x)).product::<usize>();
            let units: Vec<Vec<K::Elem>> = (0..input)
                .map(|j| {
                    let mut v = vec![k.zero(); input];
                    v[j] = k.one();
                    v
                })
                .collect();
            let cols = self.evaluate_batch(expr, &objs, &units)?;
            let rows = cols.first().map_or(0, |c| c.len());
            let m = Matrix::from_columns(k, rows, &cols)?;
            let labels = objs.iter().map(|x| self.model.obj_label(x)).collect();
            components.push((labels, m));
        }
        Ok(DiagramNat { arity, components })
    }

    fn read<K: Field>(&self, n: usize, expr: &Expression<'_, K>) -> Result<Cochain<K>>
    where
        M: DiagramModel<K>,
    {
        let coords = self
            .model
            .read_cochain(n, &|objs: &[M::Obj], v: &[Vec<K::Elem>]| self.evaluate_batch(expr, objs, v))?;
        Ok(Cochain::new(n, coords))
    }
}

impl<K: Field, M: DiagramModel<K>> ComplexBackend<K> for DiagramEvaluator<M> {
    fn field(&self) -> &K {
        self.model.field()
    }
    fn label(&self) -> String {
        format!("{} (diagram)", self.model.label())
    }
    fn max_degree(&self) -> usize {
        self.max_degree
    }
    fn memory_cap(&self) -> usize {
        self.memory_cap
    }
    fn cochain_dim(&self, n: usize) -> usize {
        self.model.cochain_dim(n)
    }

    fn delta(&self, f: &Cochain<K>) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.guard(f.degree + 1)?;
        self.read(f.degree + 1, &Expression::Delta(f))
    }

    fn cup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.check_cochain(g)?;
        self.guard(f.degree + g.degree)?;
        self.read(f.degree + g.degree, &Expression::Cup(f, g))
    }

    fn sqcup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.check_cochain(g)?;
        self.guard(f.degree + g.degree)?;
        self.read(f.degree + g.degree, &Expression::Sqcup(f, g))
    }

    fn diamond_i(&self, f: &Cochain<K>, g: &Cochain<K>, i: usize) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.check_cochain(g)?;
        let n = (f.degree + g.degree).checked_sub(1).ok_or(Error::NegativeDegree)?;
        self.guard(n)?;
        if i >= f.degree {
            return Ok(self.zero(n));
        }
        self.read(n, &Expression::Diamond(f, g, i))
    }

    fn equivariance_matrix(&self, n: usize) -> Result<Matrix<K>> {
        self.guard(n)?;
        let k = self.model.field();
        let cols: Vec<Vec<K::Elem>> = (0..self.cochain_dim(n))
            .into_par_iter()
            .map(|j| {
                let f = self.basis_cochain(n, j);
                self.model.read_condition(n, &|objs: &[M::Obj], v: &[Vec<K::Elem>]| {
                    let l = self.evaluate_batch(&Expression::EquivarianceLhs(&f), objs, v)?;
                    let r = self.evaluate_batch(&Expression::EquivarianceRhs(&f), objs, v)?;
                    Ok(l.iter()
                        .zip(&r)
                        .map(|(l, r)| l.iter().zip(r).map(|(a, b)| k.sub(a, b)).collect())
                        .collect())
                })
            })
            .collect::<Result<_>>()?;
        let rows = cols.first().map_or(0, |c| c.len());
        Matrix::from_columns(k, rows, &cols)
    }

    fn pi(&self) -> Cochain<K> {
        self.model.pi()
    }
    fn eps(&self) -> Cochain<K> {
        self.model.eps()
    }
}

#[cfg(test)]
mod tests {
    use super::State;

    #[test]
    fn apply_on_middle_factor() {
        // dims [2, 2]: swap entries of the second factor.
        let mut s = State::new(vec![2, 2], vec![1, 2, 3, 4]);
        s.apply(&0, |x| *x == 0, 1, 1, vec![2], |v| vec![v[1], v[0]]);
        assert_eq!(s.data, vec![2, 1, 4, 3]);
        s.apply(&0, |x| *x == 0, 0, 2, vec![1], |v| vec![v.iter().sum()]);
        assert_eq!((s.dims.clone(), s.data.clone()), (vec![1], vec![10]));
        s.merge(0, 0);
        assert_eq!(s.dims, vec![1, 1]);
    }
}
