//! The equivariant subcomplex for a non-cocommutative coefficient and the
//! Gerstenhaber structure on its cohomology.

use dycoh::cochain::ComplexBackend;
use dycoh::cohomology::{check_gerstenhaber_equivariant, Cohomology};
use dycoh::comp::Sampling;
use dycoh::field::PrimeField;
use dycoh::group::FiniteGroup;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

fn main() -> dycoh::error::Result<()> {
    let k = PrimeField::new(3)?;
    let coeff = CenterCoalgebra::upper_triangular(&k, FiniteGroup::cyclic(2)?)?;
    let b = VecGBackend::new(coeff, 3, 200_000)?;
    for n in 0..=3 {
        println!(
            "degree {n}: dim C = {}, dim equivariant part = {}",
            b.cochain_dim(n),
            b.equivariant_subspace(n)?.dim()
        );
    }
    let coh = Cohomology::equivariant(&b);
    println!("betti of the equivariant part {:?}", coh.betti_table(3)?);
    let s = Sampling {
        seed: 11,
        samples: 5,
        max_degree: 3,
    };
    let r = check_gerstenhaber_equivariant(&coh, &s)?;
    println!(
        "gerstenhaber checks: {} entries, {} instances, passed {}",
        r.results.len(),
        r.checked(),
        r.passed()
    );
    Ok(())
}
