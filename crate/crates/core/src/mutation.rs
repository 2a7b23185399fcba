//! Deliberately broken backends, used to confirm that the checkers detect
//! sign errors.

use crate::cochain::{sign, Cochain, ComplexBackend, Subspace};
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Flips the sign of the last face term `(-1)^{n+1} f(x_0,…,x_{n-1})`
    /// of the differential, which is the `π◇_0 f` term.
    DeltaLastSign,
    /// Negates `π◇_1 π`.
    PiDiamondPi,
}

/// A backend that agrees with `inner` except for one injected sign error.
pub struct MutatedBackend<'a, B: ?Sized> {
    inner: &'a B,
    mutation: Mutation,
}

impl<'a, B: ?Sized> MutatedBackend<'a, B> {
    pub fn new(inner: &'a B, mutation: Mutation) -> Self {
        MutatedBackend { inner, mutation }
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }
}

impl<K: Field, B: ComplexBackend<K> + ?Sized> ComplexBackend<K> for MutatedBackend<'_, B> {
    fn field(&self) -> &K {
        self.inner.field()
    }
    fn label(&self) -> String {
        format!("{} with {:?}", self.inner.label(), self.mutation)
    }
    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }
    fn memory_cap(&self) -> usize {
        self.inner.memory_cap()
    }
    fn cochain_dim(&self, n: usize) -> usize {
        self.inner.cochain_dim(n)
    }

    fn delta(&self, f: &Cochain<K>) -> Result<Cochain<K>> {
        let mut d = self.inner.delta(f)?;
        if self.mutation == Mutation::DeltaLastSign {
            let k = self.field();
            let last = self.inner.diamond_i(&self.inner.pi(), f, 0)?;
            let c = k.add(&sign(k, f.degree), &sign(k, f.degree));
            d.axpy(k, &c, &last)?;
        }
        Ok(d)
    }

    fn cup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.inner.cup(f, g)
    }
    fn sqcup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.inner.sqcup(f, g)
    }

    fn diamond_i(&self, f: &Cochain<K>, g: &Cochain<K>, i: usize) -> Result<Cochain<K>> {
        let out = self.inner.diamond_i(f, g, i)?;
        if self.mutation == Mutation::PiDiamondPi && i == 1 {
            let pi = self.inner.pi();
            if *f == pi && *g == pi {
                return Ok(out.scale(self.field(), &self.field().sign(true)));
            }
        }
        Ok(out)
    }

    fn equivariance_matrix(&self, n: usize) -> Result<Matrix<K>> {
        self.inner.equivariance_matrix(n)
    }
    fn equivariant_subspace(&self, n: usize) -> Result<Subspace<K>> {
        self.inner.equivariant_subspace(n)
    }
    fn pi(&self) -> Cochain<K> {
        self.inner.pi()
    }
    fn eps(&self) -> Cochain<K> {
        self.inner.eps()
    }
}
