//! Reduced formulas for the Vec_G complex.
//!
//! With `ρ(x) = π(x⁻¹)` restricted to `W` and `Δ_W` the `(e, e)` block of
//! the comultiplication:
//!
//! ```text
//! δf(x0..xn)(w)       = f(x1..xn)(ρ(x0)w) + Σ_i (-1)^i f(.., x_{i-1}x_i, ..)(w)
//!                       + (-1)^{n+1} f(x0..x_{n-1})(w)
//! (f ∪ g)(x)(w)       = Σ f(x1..xm)(w₁) g(x_{m+1}..)(ρ(x1⋯xm)w₂)
//! (f ⊔ g)(x)(w)       = Σ f(x1..xm)(w₂) g(x_{m+1}..)(ρ(x1⋯xm)w₁)
//! (f ◇_i g)(x)(w)     = Σ f(x1..xi, x_{i+1}⋯x_{i+n}, ..)(w₁) g(x_{i+1}..x_{i+n})(ρ(x1⋯xi)w₂)
//! ```

use rayon::prelude::*;

use super::{decode, encode, CenterCoalgebra};
use crate::cochain::{sign, Cochain, ComplexBackend, Subspace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct VecGBackend<K: Field> {
    coeff: CenterCoalgebra<K>,
    q: usize,
    dw: usize,
    /// `ρ(x)` on W, row-major `dw × dw`.
    rho_w: Vec<Vec<K::Elem>>,
    /// Terms `(w, w1, w2, c)` of the neutral block of Δ.
    comul_w: Vec<(usize, usize, usize, K::Elem)>,
    eps_w: Vec<K::Elem>,
    /// Terms `(u1, u2, c)` of the full Δ for each basis vector of U.
    comul_full: Vec<Vec<(usize, usize, K::Elem)>>,
    max_degree: usize,
    memory_cap: usize,
}

impl<K: Field> VecGBackend<K> {
    /// Validates the coefficient and precomputes the reduced data.
    pub fn new(coeff: CenterCoalgebra<K>, max_degree: usize, memory_cap: usize) -> Result<Self> {
        let report = coeff.validate();
        if let Some(e) = report.failures().next() {
            let detail = e.witness.as_ref().map(|w| w.detail.clone()).unwrap_or_default();
            return Err(Error::Coefficient(format!("{} failed: {detail}", e.identity)));
        }
        let k = coeff.field().clone();
        let q = coeff.group().order();
        let dw = coeff.neutral_dim();
        let off = coeff.neutral_offset();
        let du = coeff.dim();
        let rho_w = (0..q)
            .map(|x| {
                let r = coeff.braiding(x);
                (0..dw * dw).map(|t| r.get(off + t / dw, off + t % dw).clone()).collect()
            })
            .collect();
        let mut comul_w = Vec::new();
        for w in 0..dw {
            for a in 0..dw {
                for b in 0..dw {
                    let c = coeff.comul().get((off + a) * du + off + b, off + w);
                    if !k.is_zero(c) {
                        comul_w.push((w, a, b, c.clone()));
                    }
                }
            }
        }
        let eps_w = (0..dw).map(|w| coeff.counit().get(0, off + w).clone()).collect();
        let comul_full = (0..du)
            .map(|u| {
                let mut terms = Vec::new();
                for a in 0..du {
                    for b in 0..du {
                        let c = coeff.comul().get(a * du + b, u);
                        if !k.is_zero(c) {
                            terms.push((a, b, c.clone()));
                        }
                    }
                }
                terms
            })
            .collect();
        Ok(VecGBackend {
            coeff,
            q,
            dw,
            rho_w,
            comul_w,
            eps_w,
            comul_full,
            max_degree,
            memory_cap,
        })
    }

    pub fn coefficient(&self) -> &CenterCoalgebra<K> {
        &self.coeff
    }

    fn k(&self) -> &K {
        self.coeff.field()
    }

    fn tuples(&self, n: usize) -> usize {
        self.q.pow(n as u32)
    }

    fn row<'a>(&self, f: &'a Cochain<K>, t: usize) -> &'a [K::Elem] {
        &f.coords[t * self.dw..(t + 1) * self.dw]
    }

    /// `w ↦ g(ρ(x) w)` as a row vector.
    fn twisted(&self, g: &[K::Elem], x: usize) -> Vec<K::Elem> {
        let k = self.k();
        let r = &self.rho_w[x];
        let dw = self.dw;
        let mut out = vec![k.zero(); dw];
        for (a, ga) in g.iter().enumerate() {
            if k.is_zero(ga) {
                continue;
            }
            for (w, o) in out.iter_mut().enumerate() {
                k.mul_add_assign(o, ga, &r[a * dw + w]);
            }
        }
        out
    }

    /// `Σ c f(w1) h(w2)` (or with the tensor legs swapped) for each `w`.
    fn contract(&self, f: &[K::Elem], h: &[K::Elem], swap: bool, out: &mut [K::Elem]) {
        let k = self.k();
        for (w, a, b, c) in &self.comul_w {
            let (fa, hb) = if swap { (&f[*b], &h[*a]) } else { (&f[*a], &h[*b]) };
            if k.is_zero(fa) || k.is_zero(hb) {
                continue;
            }
            let t = k.mul(fa, hb);
            k.mul_add_assign(&mut out[*w], c, &t);
        }
    }

    fn cup_impl(&self, f: &Cochain<K>, g: &Cochain<K>, swap: bool) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.check_cochain(g)?;
        let (m, n) = (f.degree, g.degree);
        self.guard(m + n)?;
        let (qm, qn, dw) = (self.tuples(m), self.tuples(n), self.dw);
        let group = self.coeff.group();
        let k = self.k();
        let blocks: Vec<Vec<K::Elem>> = (0..qm)
            .into_par_iter()
            .map(|a| {
                let mut digits = Vec::new();
                decode(a, self.q, m, &mut digits);
                let xbar = group.product(&digits);
                let fa = self.row(f, a);
                let mut block = vec![k.zero(); qn * dw];
                for b in 0..qn {
                    let h = self.twisted(self.row(g, b), xbar);
                    self.contract(fa, &h, swap, &mut block[b * dw..(b + 1) * dw]);
                }
                block
            })
            .collect();
        Ok(Cochain::new(m + n, blocks.concat()))
    }
}

impl<K: Field> ComplexBackend<K> for VecGBackend<K> {
    fn field(&self) -> &K {
        self.coeff.field()
    }

    fn label(&self) -> String {
        format!("Vec_G fast path, |G| = {}, dim U = {}", self.q, self.coeff.dim())
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn memory_cap(&self) -> usize {
        self.memory_cap
    }

    fn cochain_dim(&self, n: usize) -> usize {
        self.q.saturating_pow(n as u32).saturating_mul(self.dw)
    }

    fn delta(&self, f: &Cochain<K>) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        let n = f.degree;
        self.guard(n + 1)?;
        let (q, dw) = (self.q, self.dw);
        let group = self.coeff.group();
        let k = self.k();
        let qn = self.tuples(n);
        let rows: Vec<Vec<K::Elem>> = (0..q * qn)
            .into_par_iter()
            .map(|t| {
                let mut x = Vec::new();
                decode(t, q, n + 1, &mut x);
                let mut out = self.twisted(self.row(f, t % qn), x[0]);
                for i in 1..=n {
                    let merged = encode(
                        x[..i - 1]
                            .iter()
                            .copied()
                            .chain([group.mul(x[i - 1], x[i])])
                            .chain(x[i + 1..].iter().copied()),
                        q,
                    );
                    let s = sign(k, i);
                    for (o, v) in out.iter_mut().zip(self.row(f, merged)) {
                        k.mul_add_assign(o, &s, v);
                    }
                }
                let s = sign(k, n + 1);
                for (o, v) in out.iter_mut().zip(self.row(f, t / q)) {
                    k.mul_add_assign(o, &s, v);
                }
                out
            })
            .collect();
        debug_assert!(rows.iter().all(|r| r.len() == dw));
        Ok(Cochain::new(n + 1, rows.concat()))
    }

    fn cup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.cup_impl(f, g, false)
    }

    fn sqcup(&self, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
        self.cup_impl(f, g, true)
    }

    fn diamond_i(&self, f: &Cochain<K>, g: &Cochain<K>, i: usize) -> Result<Cochain<K>> {
        self.check_cochain(f)?;
        self.check_cochain(g)?;
        let (m, n) = (f.degree, g.degree);
        let deg = (m + n).checked_sub(1).ok_or(Error::NegativeDegree)?;
        self.guard(deg)?;
        if i >= m {
            return Ok(self.zero(deg));
        }
        let q = self.q;
        let group = self.coeff.group();
        let rows: Vec<Vec<K::Elem>> = (0..self.tuples(deg))
            .into_par_iter()
            .map(|t| {
                let mut x = Vec::new();
                decode(t, q, deg, &mut x);
                let xbar = group.product(&x[..i]);
                let inner = &x[i..i + n];
                let fidx = encode(
                    x[..i]
                        .iter()
                        .copied()
                        .chain([group.product(inner)])
                        .chain(x[i + n..].iter().copied()),
                    q,
                );
                let gidx = encode(inner.iter().copied(), q);
                let h = self.twisted(self.row(g, gidx), xbar);
                let mut out = vec![self.k().zero(); self.dw];
                self.contract(self.row(f, fidx), &h, false, &mut out);
                out
            })
            .collect();
        Ok(Cochain::new(deg, rows.concat()))
    }

    /// Rows are indexed by `(tuple, input basis vector of U, output basis
    /// vector of U)`, columns by cochain coordinates. The entry is the
    /// coefficient of `(f⊗U)λ_R − ρ(X)(U⊗f)λ_L`.
    fn equivariance_matrix(&self, n: usize) -> Result<Matrix<K>> {
        self.guard(n)?;
        let du = self.coeff.dim();
        let qn = self.tuples(n);
        let mut m = Matrix::zeros(self.k(), qn * du * du, qn * self.dw);
        for t in 0..qn {
            let block = self.equivariance_block(n, t);
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    m.set(t * du * du + i, t * self.dw + j, block.get(i, j).clone());
                }
            }
        }
        Ok(m)
    }

    fn equivariant_subspace(&self, n: usize) -> Result<Subspace<K>> {
        self.guard(n)?;
        let qn = self.tuples(n);
        let mut by_product: Vec<Option<Subspace<K>>> = vec![None; self.q];
        let group = self.coeff.group();
        let mut blocks = Vec::with_capacity(qn);
        let mut x = Vec::new();
        for t in 0..qn {
            decode(t, self.q, n, &mut x);
            let p = group.product(&x);
            if by_product[p].is_none() {
                by_product[p] = Some(Subspace::kernel_of(&self.equivariance_block(n, t)));
            }
            blocks.push(by_product[p].clone().expect("filled"));
        }
        Ok(Subspace::block_sum(self.k(), blocks))
    }

    fn pi(&self) -> Cochain<K> {
        let coords = (0..self.tuples(2)).flat_map(|_| self.eps_w.iter().cloned()).collect();
        Cochain::new(2, coords)
    }

    fn eps(&self) -> Cochain<K> {
        Cochain::new(0, self.eps_w.clone())
    }
}

impl<K: Field> VecGBackend<K> {
    /// The `du² × dw` block of the equivariance condition at one tuple.
    fn equivariance_block(&self, n: usize, t: usize) -> Matrix<K> {
        let k = self.k();
        let du = self.coeff.dim();
        let off = self.coeff.neutral_offset();
        let dw = self.dw;
        let mut x = Vec::new();
        decode(t, self.q, n, &mut x);
        let r = self.coeff.braiding(self.coeff.group().product(&x));
        let mut m = Matrix::zeros(k, du * du, dw);
        let in_w = |u: usize| (off..off + dw).contains(&u).then(|| u - off);
        for u in 0..du {
            for (a, b, c) in &self.comul_full[u] {
                if let Some(w) = in_w(*a) {
                    for out in 0..du {
                        let v = k.mul(c, r.get(out, *b));
                        let e = k.add(m.get(u * du + out, w), &v);
                        m.set(u * du + out, w, e);
                    }
                }
                if let Some(w) = in_w(*b) {
                    for out in 0..du {
                        let v = k.mul(c, r.get(out, *a));
                        let e = k.sub(m.get(u * du + out, w), &v);
                        m.set(u * du + out, w, e);
                    }
                }
            }
        }
        m
    }
}
