//! Group presets, products and groups given by a multiplication table.

use dycoh::group::FiniteGroup;

fn describe(label: &str, g: &FiniteGroup) {
    let orders: Vec<String> = (0..g.order())
        .map(|a| format!("{}:{}", g.name(a), g.element_order(a)))
        .collect();
    println!("{label}: order {}, element orders {}", g.order(), orders.join(" "));
}

fn main() -> dycoh::error::Result<()> {
    describe("Z/4", &FiniteGroup::cyclic(4)?);
    describe("D4", &FiniteGroup::dihedral(4)?);
    describe("S3", &FiniteGroup::symmetric(3)?);
    describe("Z/2 x Z/3", &FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(3)?)?);

    let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    let names = Some(vec!["e".to_string(), "x".into(), "x2".into()]);
    describe("from a table", &FiniteGroup::from_table(table, names)?);

    let bad = vec![vec![0, 1], vec![1, 1]];
    println!("non-group table rejected: {}", FiniteGroup::from_table(bad, None).unwrap_err());
    Ok(())
}
