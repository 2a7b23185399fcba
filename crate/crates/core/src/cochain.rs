//! Cochains, the [`ComplexBackend`] interface shared by the concrete models,
//! and subspaces of cochain spaces.

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{free_columns, Matrix};

/// A cochain of a given degree in backend-specific flat coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<K: Field> {
    pub degree: usize,
    pub coords: Vec<K::Elem>,
}

impl<K: Field> Cochain<K> {
    pub fn new(degree: usize, coords: Vec<K::Elem>) -> Self {
        Cochain { degree, coords }
    }

    pub fn zero(k: &K, degree: usize, dim: usize) -> Self {
        Cochain::new(degree, vec![k.zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self, k: &K) -> bool {
        self.coords.iter().all(|x| k.is_zero(x))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::dim("cochain degree", self.degree, other.degree));
        }
        if self.dim() != other.dim() {
            return Err(Error::dim("cochain length", self.dim(), other.dim()));
        }
        Ok(())
    }

    pub fn add(&self, k: &K, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| k.add(a, b)).collect();
        Ok(Cochain::new(self.degree, coords))
    }

    pub fn sub(&self, k: &K, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| k.sub(a, b)).collect();
        Ok(Cochain::new(self.degree, coords))
    }

    pub fn scale(&self, k: &K, c: &K::Elem) -> Self {
        Cochain::new(self.degree, self.coords.iter().map(|a| k.mul(a, c)).collect())
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, k: &K, c: &K::Elem, other: &Self) -> Result<()> {
        self.check_same(other)?;
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            k.mul_add_assign(a, c, b);
        }
        Ok(())
    }

    pub fn to_strings(&self, k: &K) -> Vec<String> {
        self.coords.iter().map(|x| k.format(x)).collect()
    }
}

/// `(-1)^e` as a field element.
pub fn sign<K: Field>(k: &K, e: usize) -> K::Elem {
    k.sign(e % 2 == 1)
}

/// A model of the Davydov-Yetter complex with its cup products and partial
/// compositions.
///
/// `cup`, `sqcup` and `diamond_i` act on cochains of any degrees; the result
/// degrees are `m + n`, `m + n` and `m + n - 1`.
pub trait ComplexBackend<K: Field>: Sync {
    fn field(&self) -> &K;
    fn label(&self) -> String;
    /// Highest degree in which cohomology may be requested.
    fn max_degree(&self) -> usize;
    /// Largest cochain dimension any operation may allocate.
    fn memory_cap(&self) -> usize;
    fn cochain_dim(&self, n: usize) -> usize;

    fn delta(&self, f: &Cochain<K>) -> Result<Cochain<K>>;
    fn cup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>>;
    fn sqcup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>>;
    /// Zero for `i >= deg f`.
    fn diamond_i(&self, f: &Cochain<K>, g: &Cochain<K>, i: usize) -> Result<Cochain<K>>;

    /// Matrix whose kernel is the equivariant subspace of degree `n`.
    fn equivariance_matrix(&self, n: usize) -> Result<Matrix<K>>;

    /// The distinguished element of degree 2.
    fn pi(&self) -> Cochain<K>;
    /// The unit of degree 0.
    fn eps(&self) -> Cochain<K>;

    /// The equivariant subspace in degree `n`.
    fn equivariant_subspace(&self, n: usize) -> Result<Subspace<K>> {
        let m = self.equivariance_matrix(n)?;
        Ok(Subspace::kernel_of(&m))
    }

    /// Rejects degrees whose cochain space exceeds the memory cap.
    fn guard(&self, n: usize) -> Result<()> {
        let dim = self.cochain_dim(n);
        if dim > self.memory_cap() {
            return Err(Error::CapExceeded {
                degree: n,
                dim,
                cap: self.memory_cap(),
            });
        }
        Ok(())
    }

    fn check_cochain(&self, f: &Cochain<K>) -> Result<()> {
        self.guard(f.degree)?;
        let d = self.cochain_dim(f.degree);
        if f.dim() != d {
            return Err(Error::dim(format!("cochain of degree {}", f.degree), d, f.dim()));
        }
        Ok(())
    }

    fn zero(&self, n: usize) -> Cochain<K> {
        Cochain::zero(self.field(), n, self.cochain_dim(n))
    }

    fn basis_cochain(&self, n: usize, j: usize) -> Cochain<K> {
        let mut f = self.zero(n);
        f.coords[j] = self.field().one();
        f
    }

    fn random_cochain(&self, n: usize, rng: &mut dyn rand::RngCore) -> Cochain<K> {
        let k = self.field();
        let coords = (0..self.cochain_dim(n)).map(|_| k.sample(rng)).collect();
        Cochain::new(n, coords)
    }

    /// Matrix of `δ: C^n → C^{n+1}`, assembled column by column.
    fn delta_matrix(&self, n: usize) -> Result<Matrix<K>> {
        self.guard(n + 1)?;
        let cols: Vec<Vec<K::Elem>> = (0..self.cochain_dim(n))
            .into_par_iter()
            .map(|j| self.delta(&self.basis_cochain(n, j)).map(|c| c.coords))
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.field(), self.cochain_dim(n + 1), &cols)
    }
}

/// A subspace of a cochain space: either everything or the column span of a
/// basis in free-column normal form.
#[derive(Debug, Clone)]
pub enum Subspace<K: Field> {
    Full(usize),
    Span {
        /// `ambient × dim` matrix of basis columns.
        basis: Matrix<K>,
        /// `basis[free[b]][c] = δ_{bc}`, so coordinates are read off directly.
        free: Vec<usize>,
        /// Matrix cutting out the subspace, used for membership tests.
        equations: Matrix<K>,
    },
}

impl<K: Field> Subspace<K> {
    /// Kernel of `m`, in the normal form of [`Matrix::kernel_basis`].
    pub fn kernel_of(m: &Matrix<K>) -> Self {
        let r = m.rref();
        if r.rank() == 0 {
            return Subspace::Full(m.cols());
        }
        let free = free_columns(m.cols(), &r.pivots);
        let basis = m.kernel_basis();
        let equations = r.matrix;
        Subspace::Span {
            basis,
            free,
            equations,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            Subspace::Full(n) => *n,
            Subspace::Span { basis, .. } => basis.rows(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Subspace::Full(n) => *n,
            Subspace::Span { free, .. } => free.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn contains(&self, k: &K, v: &[K::Elem]) -> bool {
        match self {
            Subspace::Full(_) => true,
            Subspace::Span { equations, .. } => equations
                .mul_vec(v)
                .map(|r| r.iter().all(|x| k.is_zero(x)))
                .unwrap_or(false),
        }
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is not in the span.
    pub fn coords(&self, k: &K, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        match self {
            Subspace::Full(_) => Some(v.to_vec()),
            Subspace::Span { free, .. } => {
                if !self.contains(k, v) {
                    return None;
                }
                Some(free.iter().map(|&j| v[j].clone()).collect())
            }
        }
    }

    /// The ambient vector with the given coordinates.
    pub fn embed(&self, y: &[K::Elem]) -> Vec<K::Elem> {
        match self {
            Subspace::Full(_) => y.to_vec(),
            Subspace::Span { basis, .. } => basis.mul_vec(y).expect("coordinate length"),
        }
    }

    /// Basis as columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self, k: &K) -> Matrix<K> {
        match self {
            Subspace::Full(n) => Matrix::identity(k, *n),
            Subspace::Span { basis, .. } => basis.clone(),
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, k: &K, rng: &mut R) -> Vec<K::Elem> {
        let y: Vec<K::Elem> = (0..self.dim()).map(|_| k.sample(rng)).collect();
        self.embed(&y)
    }

    /// Direct sum of subspaces living on consecutive coordinate blocks.
    pub fn block_sum(k: &K, blocks: Vec<Subspace<K>>) -> Self {
        if blocks.iter().all(|b| b.is_full()) {
            return Subspace::Full(blocks.iter().map(|b| b.ambient_dim()).sum());
        }
        let ambient: usize = blocks.iter().map(|b| b.ambient_dim()).sum();
        let dim: usize = blocks.iter().map(|b| b.dim()).sum();
        let eq_rows: usize = blocks.iter().map(|b| b.ambient_dim() - b.dim()).sum();
        let mut basis = Matrix::zeros(k, ambient, dim);
        let mut equations = Matrix::zeros(k, eq_rows, ambient);
        let mut free = Vec::with_capacity(dim);
        let (mut r0, mut c0, mut e0) = (0, 0, 0);
        for b in &blocks {
            let bm = b.basis_matrix(k);
            for i in 0..bm.rows() {
                for j in 0..bm.cols() {
                    basis.set(r0 + i, c0 + j, bm.get(i, j).clone());
                }
            }
            match b {
                Subspace::Full(n) => free.extend(r0..r0 + n),
                Subspace::Span {
                    free: f,
                    equations: eq,
                    ..
                } => {
                    free.extend(f.iter().map(|&j| r0 + j));
                    let rank = b.ambient_dim() - b.dim();
                    for i in 0..rank {
                        for j in 0..eq.cols() {
                            equations.set(e0 + i, r0 + j, eq.get(i, j).clone());
                        }
                    }
                    e0 += rank;
                }
            }
            r0 += bm.rows();
            c0 += bm.cols();
        }
        Subspace::Span {
            basis,
            free,
            equations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn kernel_subspace_coordinates() {
        let k = Rationals;
        let m = Matrix::from_i64(&k, &[&[1, -1, 0]]).unwrap();
        let s = Subspace::kernel_of(&m);
        assert_eq!(s.dim(), 2);
        let v = vec![k.from_i64(3), k.from_i64(3), k.from_i64(5)];
        let y = s.coords(&k, &v).unwrap();
        assert_eq!(s.embed(&y), v);
        assert!(s.coords(&k, &[k.from_i64(1), k.zero(), k.zero()]).is_none());
    }

    #[test]
    fn block_sum_matches_blocks() {
        let k = Rationals;
        let a = Subspace::kernel_of(&Matrix::from_i64(&k, &[&[1, -1]]).unwrap());
        let b = Subspace::<Rationals>::Full(1);
        let s = Subspace::block_sum(&k, vec![a, b]);
        assert_eq!((s.ambient_dim(), s.dim()), (3, 2));
        let v = vec![k.from_i64(2), k.from_i64(2), k.from_i64(7)];
        assert_eq!(s.embed(&s.coords(&k, &v).unwrap()), v);
        assert!(!s.contains(&k, &[k.from_i64(1), k.zero(), k.zero()]));
    }
}
