//! Modules over a Hopf algebra: Sweedler's algebra with a non-cocommutative
//! Yetter-Drinfeld coefficient, and dual group algebras, whose cohomology
//! with the trivial coefficient is group cohomology.

use dycoh::cohomology::{group_cohomology_oracle, Cohomology};
use dycoh::field::{PrimeField, Rationals};
use dycoh::group::FiniteGroup;
use dycoh::hopf::{HopfData, HopfModel, YDCoalgebra};

fn main() -> dycoh::error::Result<()> {
    let h = HopfData::sweedler(&Rationals)?;
    println!("Sweedler algebra passes the Hopf axioms: {}", h.validate().passed());
    let u = YDCoalgebra::upper_triangular(&h)?;
    println!("coefficient passes its axioms: {}", u.validate(&h)?.passed());
    let b = HopfModel::backend(h.clone(), u, 3, 200_000)?;
    println!("betti, full complex:         {:?}", Cohomology::new(&b).betti_table(2)?);
    println!("betti, equivariant part:     {:?}", Cohomology::equivariant(&b).betti_table(2)?);

    let t = YDCoalgebra::trivial(&h)?;
    let b = HopfModel::backend(h, t, 3, 200_000)?;
    println!("betti, trivial coefficient:  {:?}", Cohomology::new(&b).betti_table(3)?);

    let k = PrimeField::new(2)?;
    let g = FiniteGroup::klein_four()?;
    let dual = HopfData::dual_group_algebra(&k, &g)?;
    let t = YDCoalgebra::trivial(&dual)?;
    let b = HopfModel::backend(dual, t, 3, 200_000)?;
    println!(
        "k^V4 over F2: {:?}, H*(V4; F2): {:?}",
        Cohomology::new(&b).betti_table(3)?,
        group_cohomology_oracle(&k, &g, 3)?
    );
    Ok(())
}
