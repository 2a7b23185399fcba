//! The complex of the forgetful functor on G-graded vector spaces with a
//! coalgebra coefficient: differential, both cup products and the comp
//! operations on basis cochains.

use dycoh::cochain::{Cochain, ComplexBackend};
use dycoh::field::{Field, PrimeField};
use dycoh::group::FiniteGroup;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

/// Nonzero coordinates as `index:value`.
fn support<K: Field>(k: &K, c: &Cochain<K>) -> String {
    let parts: Vec<String> = c
        .coords
        .iter()
        .enumerate()
        .filter(|(_, x)| !k.is_zero(x))
        .map(|(i, x)| format!("{i}:{}", k.format(x)))
        .collect();
    format!("degree {} [{}]", c.degree, parts.join(" "))
}

fn main() -> dycoh::error::Result<()> {
    let k = PrimeField::new(3)?;
    let g = FiniteGroup::symmetric(3)?;
    let transpositions: Vec<usize> = (0..g.order()).filter(|&a| g.element_order(a) == 2).collect();
    let coeff = CenterCoalgebra::grouplike(&k, g, &transpositions)?;
    println!("coefficient basis {:?}", coeff.basis_labels());
    let b = VecGBackend::new(coeff, 3, 200_000)?;
    for n in 0..=3 {
        println!("dim C^{n} = {}", b.cochain_dim(n));
    }

    let f = b.basis_cochain(1, 0);
    let g1 = b.basis_cochain(1, 3);
    println!("f    = {}", support(&k, &f));
    println!("g    = {}", support(&k, &g1));
    println!("δf   = {}", support(&k, &b.delta(&f)?));
    println!("f∪g  = {}", support(&k, &b.cup(&f, &g1)?));
    println!("f⊔g  = {}", support(&k, &b.sqcup(&f, &g1)?));
    println!("π◇₀f = {}", support(&k, &b.diamond_i(&b.pi(), &f, 0)?));
    println!("f◇₀g = {}", support(&k, &b.diamond_i(&f, &g1, 0)?));
    println!("ε ∪ f == f: {}", b.cup(&b.eps(), &f)? == f);
    Ok(())
}
