//! Seeded checks of the weak comp algebra axioms, the recovery of δ, ∪ and
//! ⊔ from the comp operations, and the Jacobi identity on the equivariant
//! subcomplex.

use dycoh::comp::{check_jacobi, check_recovery, check_weak_comp, CompMode, Sampling, Space};
use dycoh::field::Rationals;
use dycoh::group::FiniteGroup;
use dycoh::report::CheckReport;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

fn show(r: &CheckReport) {
    println!("{}: {} entries, {} instances, passed {}", r.suite, r.results.len(), r.checked(), r.passed());
}

fn main() -> dycoh::error::Result<()> {
    let coeff = CenterCoalgebra::upper_triangular(&Rationals, FiniteGroup::cyclic(2)?)?;
    let b = VecGBackend::new(coeff, 4, 200_000)?;
    let s = Sampling {
        seed: 7,
        samples: 5,
        max_degree: 4,
    };
    show(&check_weak_comp(&b, &s, CompMode::Weak)?);
    show(&check_weak_comp(&b, &s, CompMode::Full)?);
    show(&check_recovery(&b, &s)?);
    show(&check_jacobi(&b, &Space::equivariant(&b, 3)?, &Sampling { max_degree: 3, ..s })?);
    Ok(())
}
