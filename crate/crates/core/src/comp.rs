//! The diamond product and bracket, and sampled checkers for the identities
//! satisfied by the complex and its equivariant subcomplex.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::cochain::{sign, Cochain, ComplexBackend, Subspace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::report::{CheckEntry, CheckReport, Witness};

/// `f◇g = Σ_{i<m} (-1)^{i(n-1)} f◇_i g`.
pub fn diamond<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
    let k = b.field();
    let deg = (f.degree + g.degree).checked_sub(1).ok_or(Error::NegativeDegree)?;
    let mut out = b.zero(deg);
    for i in 0..f.degree {
        let t = b.diamond_i(f, g, i)?;
        out.axpy(k, &sign(k, i * (g.degree + 1)), &t)?;
    }
    Ok(out)
}

/// `[f,g] = f◇g - (-1)^{(m-1)(n-1)} g◇f`.
pub fn bracket<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, f: &Cochain<K>, g: &Cochain<K>) -> Result<Cochain<K>> {
    let k = b.field();
    let mut out = diamond(b, f, g)?;
    let e = (f.degree + 1) * (g.degree + 1) + 1;
    out.axpy(k, &sign(k, e), &diamond(b, g, f)?)?;
    Ok(out)
}

/// Deterministic generator for one sample of one check.
pub fn sample_rng(seed: u64, label: &str, sample: usize) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    h.update((sample as u64).to_le_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

/// Parameters shared by the sampled checkers. Every cochain a check forms,
/// operands and intermediate results included, has degree at most
/// `max_degree`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: usize,
    pub max_degree: usize,
}

/// Whether axiom (3) is checked only with `π` as one argument, or for
/// arbitrary arguments drawn from the equivariant subcomplex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompMode {
    Weak,
    Full,
}

/// Where operands are drawn from: all cochains, or the equivariant ones.
pub struct Space<'a, K: Field, B: ?Sized> {
    backend: &'a B,
    sub: Option<Vec<Subspace<K>>>,
}

impl<'a, K: Field, B: ComplexBackend<K> + ?Sized> Space<'a, K, B> {
    pub fn full(backend: &'a B) -> Self {
        Space { backend, sub: None }
    }

    /// The equivariant subcomplex in degrees `0..=max_degree`.
    pub fn equivariant(backend: &'a B, max_degree: usize) -> Result<Self> {
        let sub = (0..=max_degree)
            .into_par_iter()
            .map(|n| backend.equivariant_subspace(n))
            .collect::<Result<_>>()?;
        Ok(Space { backend, sub: Some(sub) })
    }

    pub fn is_equivariant(&self) -> bool {
        self.sub.is_some()
    }

    pub fn subspace(&self, n: usize) -> Option<&Subspace<K>> {
        self.sub.as_ref().and_then(|s| s.get(n))
    }

    pub fn draw(&self, n: usize, rng: &mut ChaCha8Rng) -> Cochain<K> {
        match &self.sub {
            None => self.backend.random_cochain(n, rng),
            Some(s) => Cochain::new(n, s[n].sample(self.backend.field(), rng)),
        }
    }

    pub fn contains(&self, f: &Cochain<K>) -> bool {
        match &self.sub {
            None => true,
            Some(s) => s[f.degree].contains(self.backend.field(), &f.coords),
        }
    }
}

/// One sampled instance: operands and the pairs of sides that must agree.
pub(crate) struct Trial<K: Field> {
    pub operands: Vec<Cochain<K>>,
    pub sides: Vec<(Vec<usize>, Cochain<K>, Cochain<K>)>,
}

impl<K: Field> Trial<K> {
    pub fn new(operands: Vec<Cochain<K>>) -> Self {
        Trial {
            operands,
            sides: Vec::new(),
        }
    }

    pub fn compare(&mut self, indices: Vec<usize>, lhs: Cochain<K>, rhs: Cochain<K>) {
        self.sides.push((indices, lhs, rhs));
    }
}

/// Runs `body` on `samples` seeded samples in parallel and reports the first
/// failing comparison, in sample order.
pub(crate) fn sampled<K, F>(k: &K, label: String, degrees: Vec<usize>, seed: u64, samples: usize, body: F) -> Result<CheckEntry>
where
    K: Field,
    F: Fn(&mut ChaCha8Rng) -> Result<Trial<K>> + Sync,
{
    let outcomes: Vec<(usize, Option<Witness>)> = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = sample_rng(seed, &label, s);
            let trial = body(&mut rng)?;
            let count = trial.sides.len();
            let bad = trial.sides.iter().find(|(_, l, r)| l != r);
            let witness = bad.map(|(idx, l, r)| Witness {
                degrees: degrees.clone(),
                indices: idx.clone(),
                seed: Some(seed),
                sample: Some(s),
                operands: trial.operands.iter().map(|c| c.to_strings(k)).collect(),
                lhs: l.to_strings(k),
                rhs: r.to_strings(k),
                detail: String::new(),
            });
            Ok((count, witness))
        })
        .collect::<Result<_>>()?;
    let checked = outcomes.iter().map(|o| o.0).sum();
    let witness = outcomes.into_iter().find_map(|o| o.1);
    Ok(CheckEntry::from_outcome(label, checked, witness))
}

fn tag(degrees: &[usize]) -> String {
    let d: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
    format!("({})", d.join(","))
}

fn pairs(max: usize, ok: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    (0..=max)
        .flat_map(|m| (0..=max).map(move |n| (m, n)))
        .filter(|&(m, n)| ok(m, n))
        .collect()
}

fn triples(max: usize, ok: impl Fn(usize, usize, usize) -> bool) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            for p in 0..=max {
                if ok(m, n, p) {
                    out.push((m, n, p));
                }
            }
        }
    }
    out
}

fn collect(suite: &str, entries: Vec<Result<CheckEntry>>) -> Result<CheckReport> {
    let mut r = CheckReport::new(suite);
    for e in entries {
        r.push(e?);
    }
    Ok(r.sorted())
}

/// `δ∘δ = 0` on every basis cochain of degree `n < max_degree`.
pub fn check_complex<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, max_degree: usize) -> Result<CheckReport> {
    let k = b.field();
    let entries = (0..max_degree)
        .map(|n| -> Result<CheckEntry> {
            let dim = b.cochain_dim(n);
            let bad = (0..dim)
                .into_par_iter()
                .map(|j| {
                    let dd = b.delta(&b.delta(&b.basis_cochain(n, j))?)?;
                    Ok((!dd.is_zero(k)).then_some((j, dd)))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .next();
            let witness = bad.map(|(j, dd)| Witness {
                degrees: vec![n],
                indices: vec![j],
                lhs: dd.to_strings(k),
                detail: format!("delta(delta(e_{j})) is nonzero"),
                ..Witness::default()
            });
            Ok(CheckEntry::from_outcome(format!("complex/delta-squared/{}", tag(&[n])), dim, witness))
        })
        .collect();
    collect("complex", entries)
}

/// `δ(f∪g) = δf∪g + (-1)^m f∪δg`, and the same for `⊔`.
pub fn check_derivation<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, s: &Sampling) -> Result<CheckReport> {
    let k = b.field();
    let space = Space::full(b);
    let mut jobs = Vec::new();
    for (m, n) in pairs(s.max_degree, |m, n| m + n < s.max_degree) {
        for product in ["cup", "sqcup"] {
            jobs.push((product, m, n));
        }
    }
    let entries = jobs
        .into_par_iter()
        .map(|(product, m, n)| {
            let mul = |f: &Cochain<K>, g: &Cochain<K>| {
                if product == "cup" {
                    b.cup(f, g)
                } else {
                    b.sqcup(f, g)
                }
            };
            let label = format!("derivation/{product}/{}", tag(&[m, n]));
            sampled(k, label, vec![m, n], s.seed, s.samples, |rng| {
                let f = space.draw(m, rng);
                let g = space.draw(n, rng);
                let lhs = b.delta(&mul(&f, &g)?)?;
                let mut rhs = mul(&b.delta(&f)?, &g)?;
                rhs.axpy(k, &sign(k, m), &mul(&f, &b.delta(&g)?)?)?;
                let mut t = Trial::new(vec![f, g]);
                t.compare(vec![], lhs, rhs);
                Ok(t)
            })
        })
        .collect();
    collect("cup-derivation", entries)
}

/// The weak comp algebra axioms. In [`CompMode::Weak`] operands range over
/// all cochains; in [`CompMode::Full`] they range over the equivariant
/// subcomplex and axiom (3) is also checked for arbitrary arguments.
pub fn check_weak_comp<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, s: &Sampling, mode: CompMode) -> Result<CheckReport> {
    let k = b.field();
    let d = s.max_degree;
    let space = match mode {
        CompMode::Weak => Space::full(b),
        CompMode::Full => Space::equivariant(b, d)?,
    };
    let scope = match mode {
        CompMode::Weak => "full-complex",
        CompMode::Full => "equivariant",
    };
    let pi = b.pi();
    let fits = |m: usize, n: usize, p: usize| {
        m + n >= 1 && m + n <= d + 1 && n + p <= d + 1 && m + p <= d + 1 && m + n + p <= d + 2
    };

    enum Job {
        Axiom1(usize, usize),
        Axiom2(usize, usize, usize),
        Axiom3 { m: usize, n: usize, p: usize, g_pi: bool, h_pi: bool },
    }
    let mut jobs = Vec::new();
    for (m, n) in pairs(d, |m, n| m + n >= 1 && m + n <= d + 1) {
        jobs.push(Job::Axiom1(m, n));
    }
    for (m, n, p) in triples(d, |m, n, p| m >= 1 && n >= 1 && fits(m, n, p)) {
        jobs.push(Job::Axiom2(m, n, p));
    }
    for (m, n, p) in triples(d, |m, n, p| m >= 2 && fits(m, n, p)) {
        if n == 2 {
            jobs.push(Job::Axiom3 { m, n, p, g_pi: true, h_pi: false });
        }
        if p == 2 {
            jobs.push(Job::Axiom3 { m, n, p, g_pi: false, h_pi: true });
        }
        if mode == CompMode::Full {
            jobs.push(Job::Axiom3 { m, n, p, g_pi: false, h_pi: false });
        }
    }

    let mut entries: Vec<Result<CheckEntry>> = jobs
        .into_par_iter()
        .map(|job| match job {
            Job::Axiom1(m, n) => {
                let label = format!("weak-comp/{scope}/axiom-1/{}", tag(&[m, n]));
                sampled(k, label, vec![m, n], s.seed, s.samples, |rng| {
                    let f = space.draw(m, rng);
                    let g = space.draw(n, rng);
                    let mut t = Trial::new(vec![]);
                    for i in m..m + 2 {
                        t.compare(vec![i], b.diamond_i(&f, &g, i)?, b.zero(m + n - 1));
                    }
                    t.operands = vec![f, g];
                    Ok(t)
                })
            }
            Job::Axiom2(m, n, p) => {
                let label = format!("weak-comp/{scope}/axiom-2/{}", tag(&[m, n, p]));
                sampled(k, label, vec![m, n, p], s.seed, s.samples, |rng| {
                    let f = space.draw(m, rng);
                    let g = space.draw(n, rng);
                    let h = space.draw(p, rng);
                    let mut t = Trial::new(vec![]);
                    for i in 0..m {
                        let fg = b.diamond_i(&f, &g, i)?;
                        for j in i..n + i {
                            let lhs = b.diamond_i(&fg, &h, j)?;
                            let rhs = b.diamond_i(&f, &b.diamond_i(&g, &h, j - i)?, i)?;
                            t.compare(vec![i, j], lhs, rhs);
                        }
                    }
                    t.operands = vec![f, g, h];
                    Ok(t)
                })
            }
            Job::Axiom3 { m, n, p, g_pi, h_pi } => {
                let variant = match (g_pi, h_pi) {
                    (true, _) => "axiom-3/g=pi",
                    (_, true) => "axiom-3/h=pi",
                    _ => "axiom-3/generic",
                };
                let label = format!("weak-comp/{scope}/{variant}/{}", tag(&[m, n, p]));
                sampled(k, label, vec![m, n, p], s.seed, s.samples, |rng| {
                    let f = space.draw(m, rng);
                    let g = if g_pi { pi.clone() } else { space.draw(n, rng) };
                    let h = if h_pi { pi.clone() } else { space.draw(p, rng) };
                    let mut t = Trial::new(vec![]);
                    for i in 1..m {
                        let fg = b.diamond_i(&f, &g, i)?;
                        for j in 0..i {
                            let lhs = b.diamond_i(&fg, &h, j)?;
                            let rhs = b.diamond_i(&b.diamond_i(&f, &h, j)?, &g, i + p - 1)?;
                            t.compare(vec![i, j], lhs, rhs);
                        }
                    }
                    t.operands = vec![f, g, h];
                    Ok(t)
                })
            }
        })
        .collect();

    if d >= 3 {
        let lhs = b.diamond_i(&pi, &pi, 0)?;
        let rhs = b.diamond_i(&pi, &pi, 1)?;
        let w = (lhs != rhs).then(|| Witness {
            degrees: vec![2, 2],
            indices: vec![0, 1],
            lhs: lhs.to_strings(k),
            rhs: rhs.to_strings(k),
            detail: "pi<>_0 pi differs from pi<>_1 pi".into(),
            ..Witness::default()
        });
        entries.push(Ok(CheckEntry::from_outcome(format!("weak-comp/{scope}/axiom-4"), 1, w)));
    }
    collect("weak-comp", entries)
}

/// `∪`, `⊔` and `δ` expressed through `π` and the partial compositions.
pub fn check_recovery<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, s: &Sampling) -> Result<CheckReport> {
    let k = b.field();
    let d = s.max_degree;
    let space = Space::full(b);
    let pi = b.pi();
    let mut jobs = Vec::new();
    for (m, n) in pairs(d, |m, n| m + n <= d && m < d) {
        jobs.push(("cup", m, n));
    }
    for (m, n) in pairs(d, |m, n| m + n <= d && n < d) {
        jobs.push(("sqcup", m, n));
    }
    for m in 0..d {
        jobs.push(("delta", m, 0));
    }
    let entries = jobs
        .into_par_iter()
        .map(|(what, m, n)| {
            if what == "delta" {
                let label = format!("recovery/delta/{}", tag(&[m]));
                return sampled(k, label, vec![m], s.seed, s.samples, |rng| {
                    let f = space.draw(m, rng);
                    let lhs = b.delta(&f)?;
                    let mut rhs = b.diamond_i(&pi, &f, 1)?;
                    rhs.axpy(k, &sign(k, m + 1), &b.diamond_i(&pi, &f, 0)?)?;
                    for i in 1..=m {
                        rhs.axpy(k, &sign(k, i), &b.diamond_i(&f, &pi, i - 1)?)?;
                    }
                    let mut t = Trial::new(vec![f]);
                    t.compare(vec![], lhs, rhs);
                    Ok(t)
                });
            }
            let label = format!("recovery/{what}/{}", tag(&[m, n]));
            sampled(k, label, vec![m, n], s.seed, s.samples, |rng| {
                let f = space.draw(m, rng);
                let g = space.draw(n, rng);
                let (lhs, rhs) = if what == "cup" {
                    (b.cup(&f, &g)?, b.diamond_i(&b.diamond_i(&pi, &f, 0)?, &g, m)?)
                } else {
                    (b.sqcup(&f, &g)?, b.diamond_i(&b.diamond_i(&pi, &g, 1)?, &f, 0)?)
                };
                let mut t = Trial::new(vec![f, g]);
                t.compare(vec![], lhs, rhs);
                Ok(t)
            })
        })
        .collect();
    collect("recovery", entries)
}

/// Associativity of `∪` and `⊔`, and `ε` as a two-sided unit for both.
pub fn check_dga<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, s: &Sampling) -> Result<CheckReport> {
    let k = b.field();
    let d = s.max_degree;
    let space = Space::full(b);
    let eps = b.eps();
    // `None` in the second slot marks a unit check.
    let mut jobs = Vec::new();
    for product in ["cup", "sqcup"] {
        for (m, n, p) in triples(d, |m, n, p| m + n + p <= d) {
            jobs.push((product, m, Some((n, p))));
        }
        for m in 0..=d {
            jobs.push((product, m, None));
        }
    }
    let entries = jobs
        .into_par_iter()
        .map(|(product, m, rest)| {
            let mul = |f: &Cochain<K>, g: &Cochain<K>| {
                if product == "cup" {
                    b.cup(f, g)
                } else {
                    b.sqcup(f, g)
                }
            };
            let Some((n, p)) = rest else {
                let label = format!("dga/{product}-unit/{}", tag(&[m]));
                return sampled(k, label, vec![m], s.seed, s.samples, |rng| {
                    let f = space.draw(m, rng);
                    let mut t = Trial::new(vec![]);
                    t.compare(vec![0], mul(&eps, &f)?, f.clone());
                    t.compare(vec![1], mul(&f, &eps)?, f.clone());
                    t.operands = vec![f];
                    Ok(t)
                });
            };
            let label = format!("dga/{product}-associativity/{}", tag(&[m, n, p]));
            sampled(k, label, vec![m, n, p], s.seed, s.samples, |rng| {
                let f = space.draw(m, rng);
                let g = space.draw(n, rng);
                let h = space.draw(p, rng);
                let lhs = mul(&mul(&f, &g)?, &h)?;
                let rhs = mul(&f, &mul(&g, &h)?)?;
                let mut t = Trial::new(vec![f, g, h]);
                t.compare(vec![], lhs, rhs);
                Ok(t)
            })
        })
        .collect();
    collect("dga", entries)
}

/// Membership of `π` and `ε` in the equivariant subcomplex, closure under
/// `δ` on a basis, and closure under `◇_i` on samples.
pub fn check_equivariant<K: Field, B: ComplexBackend<K> + ?Sized>(b: &B, s: &Sampling) -> Result<CheckReport> {
    let k = b.field();
    let d = s.max_degree;
    let space = Space::equivariant(b, d)?;
    let mut entries = Vec::new();
    for (name, x) in [("pi", b.pi()), ("eps", b.eps())] {
        if x.degree > d {
            continue;
        }
        let w = (!space.contains(&x)).then(|| Witness {
            degrees: vec![x.degree],
            operands: vec![x.to_strings(k)],
            detail: format!("{name} is not equivariant"),
            ..Witness::default()
        });
        entries.push(Ok(CheckEntry::from_outcome(format!("equivariant/contains-{name}"), 1, w)));
    }
    for n in 0..d {
        let sub = space.subspace(n).expect("computed");
        let basis = sub.basis_matrix(k);
        let bad = (0..sub.dim())
            .into_par_iter()
            .map(|j| {
                let f = Cochain::new(n, basis.column(j));
                let df = b.delta(&f)?;
                Ok((!space.contains(&df)).then_some((j, f, df)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        let w = bad.map(|(j, f, df)| Witness {
            degrees: vec![n],
            indices: vec![j],
            operands: vec![f.to_strings(k)],
            lhs: df.to_strings(k),
            detail: "delta leaves the equivariant subcomplex".into(),
            ..Witness::default()
        });
        entries.push(Ok(CheckEntry::from_outcome(
            format!("equivariant/delta-closure/{}", tag(&[n])),
            sub.dim(),
            w,
        )));
    }
    let closure: Vec<Result<CheckEntry>> = pairs(d, |m, n| m >= 1 && m + n <= d + 1)
        .into_par_iter()
        .map(|(m, n)| {
            let label = format!("equivariant/diamond-closure/{}", tag(&[m, n]));
            let outcomes = (0..s.samples)
                .into_par_iter()
                .map(|smp| {
                    let mut rng = sample_rng(s.seed, &label, smp);
                    let f = space.draw(m, &mut rng);
                    let g = space.draw(n, &mut rng);
                    for i in 0..m {
                        let x = b.diamond_i(&f, &g, i)?;
                        if !space.contains(&x) {
                            return Ok(Some(Witness {
                                degrees: vec![m, n],
                                indices: vec![i],
                                seed: Some(s.seed),
                                sample: Some(smp),
                                operands: vec![f.to_strings(k), g.to_strings(k)],
                                lhs: x.to_strings(k),
                                rhs: vec![],
                                detail: "partial composition leaves the equivariant subcomplex".into(),
                            }));
                        }
                    }
                    Ok(None)
                })
                .collect::<Result<Vec<_>>>()?;
            let w = outcomes.into_iter().flatten().next();
            Ok(CheckEntry::from_outcome(label, s.samples * m, w))
        })
        .collect();
    entries.extend(closure);
    collect("equivariant", entries)
}

/// Graded Jacobi identity for the bracket, exactly at cochain level, on
/// samples from `space`.
pub fn check_jacobi<K: Field, B: ComplexBackend<K> + ?Sized>(
    b: &B,
    space: &Space<'_, K, B>,
    s: &Sampling,
) -> Result<CheckReport> {
    let k = b.field();
    let d = s.max_degree;
    let fits = |m: usize, n: usize, p: usize| {
        m >= 1 && n >= 1 && p >= 1 && m + n <= d + 1 && n + p <= d + 1 && m + p <= d + 1 && m + n + p <= d + 2
    };
    let entries = triples(d, fits)
        .into_par_iter()
        .map(|(m, n, p)| {
            let label = format!("gerstenhaber/jacobi/{}", tag(&[m, n, p]));
            sampled(k, label, vec![m, n, p], s.seed, s.samples, |rng| {
                let f = space.draw(m, rng);
                let g = space.draw(n, rng);
                let h = space.draw(p, rng);
                let (a, bb, c) = (m + 1, n + 1, p + 1);
                let mut sum = b.zero(m + n + p - 2);
                sum.axpy(k, &sign(k, a * c), &bracket(b, &bracket(b, &f, &g)?, &h)?)?;
                sum.axpy(k, &sign(k, bb * a), &bracket(b, &bracket(b, &g, &h)?, &f)?)?;
                sum.axpy(k, &sign(k, c * bb), &bracket(b, &bracket(b, &h, &f)?, &g)?)?;
                let zero = b.zero(m + n + p - 2);
                let mut t = Trial::new(vec![f, g, h]);
                t.compare(vec![], sum, zero);
                Ok(t)
            })
        })
        .collect();
    collect("gerstenhaber", entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::group::FiniteGroup;
    use crate::vecg::{CenterCoalgebra, VecGBackend};

    fn z2_unit() -> VecGBackend<Rationals> {
        let c = CenterCoalgebra::unit(&Rationals, FiniteGroup::cyclic(2).unwrap()).unwrap();
        VecGBackend::new(c, 4, 1 << 20).unwrap()
    }

    #[test]
    fn sample_rng_is_deterministic_and_label_sensitive() {
        use rand::RngCore;
        let a = sample_rng(7, "x", 0).next_u64();
        assert_eq!(a, sample_rng(7, "x", 0).next_u64());
        assert_ne!(a, sample_rng(7, "y", 0).next_u64());
        assert_ne!(a, sample_rng(7, "x", 1).next_u64());
    }

    #[test]
    fn pi_diamond_pi_vanishes() {
        let b = z2_unit();
        let pi = b.pi();
        assert!(diamond(&b, &pi, &pi).unwrap().is_zero(&Rationals));
    }

    #[test]
    fn degree_one_diamond_is_single_term() {
        let b = z2_unit();
        let mut rng = sample_rng(1, "t", 0);
        let f = b.random_cochain(1, &mut rng);
        let g = b.random_cochain(2, &mut rng);
        assert_eq!(diamond(&b, &f, &g).unwrap(), b.diamond_i(&f, &g, 0).unwrap());
    }

    #[test]
    fn unit_coefficient_degree_one_bracket_vanishes() {
        let b = z2_unit();
        let mut rng = sample_rng(2, "t", 0);
        let f = b.random_cochain(1, &mut rng);
        let g = b.random_cochain(1, &mut rng);
        assert!(bracket(&b, &f, &g).unwrap().is_zero(&Rationals));
    }

    #[test]
    fn diamond_of_degree_zero_left_factor_is_zero() {
        let b = z2_unit();
        let mut rng = sample_rng(3, "t", 0);
        let f = b.random_cochain(0, &mut rng);
        let g = b.random_cochain(2, &mut rng);
        assert!(diamond(&b, &f, &g).unwrap().is_zero(&Rationals));
        assert!(matches!(diamond(&b, &f, &b.eps()), Err(Error::NegativeDegree)));
    }

    #[test]
    fn suites_pass_on_grouplike_s3() {
        let k = PrimeField::new(3).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = CenterCoalgebra::grouplike(&k, s3, &[1, 2, 5]).unwrap();
        let b = VecGBackend::new(c, 3, 1 << 20).unwrap();
        let s = Sampling { seed: 5, samples: 3, max_degree: 3 };
        for r in [
            check_complex(&b, 2).unwrap(),
            check_derivation(&b, &s).unwrap(),
            check_weak_comp(&b, &s, CompMode::Weak).unwrap(),
            check_weak_comp(&b, &s, CompMode::Full).unwrap(),
            check_recovery(&b, &s).unwrap(),
            check_dga(&b, &s).unwrap(),
            check_equivariant(&b, &s).unwrap(),
        ] {
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
