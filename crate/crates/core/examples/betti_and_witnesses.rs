//! Betti numbers, representative cocycles and coboundary witnesses, with
//! the unit coefficient compared against group cohomology.

use dycoh::cochain::ComplexBackend;
use dycoh::cohomology::{check_graded_commutativity, group_cohomology_oracle, Cohomology};
use dycoh::field::PrimeField;
use dycoh::group::FiniteGroup;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

fn main() -> dycoh::error::Result<()> {
    let k = PrimeField::new(2)?;
    let g = FiniteGroup::cyclic(2)?;
    let b = VecGBackend::new(CenterCoalgebra::unit(&k, g.clone())?, 3, 200_000)?;
    let coh = Cohomology::new(&b);
    println!("betti {:?}", coh.betti_table(3)?);
    println!("oracle {:?}", group_cohomology_oracle(&k, &g, 3)?);

    let rep = &coh.representatives(1)?[0];
    println!("a representative in degree 1: {:?}", rep.to_strings(&k));
    let cup = b.cup(rep, rep)?;
    println!("its cup square vanishes in cohomology: {}", coh.is_coboundary(&cup)?.is_some());

    let x = b.basis_cochain(1, 1);
    let witness = coh.is_coboundary(&b.delta(&x)?)?.expect("δx is a coboundary");
    println!("δ of the witness equals δx: {}", b.delta(&witness)? == b.delta(&x)?);

    let r = check_graded_commutativity(&coh, 1, 2)?;
    println!("f∪g and g⊔f agree on cohomology in degrees (1,2): {}", r.passed());
    Ok(())
}
