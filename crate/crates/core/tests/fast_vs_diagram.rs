//! The reduced Vec_G formulas agree with the verbatim diagram composites.

use dycoh::crosscheck::check_agreement;
use dycoh::diagram::DiagramEvaluator;
use dycoh::field::{Field, PrimeField, Rationals};
use dycoh::group::FiniteGroup;
use dycoh::vecg::{CenterCoalgebra, VecGBackend, VecGModel};

fn compare_all<K: Field>(coeff: CenterCoalgebra<K>, max: usize) {
    let fast = VecGBackend::new(coeff.clone(), 4, 200_000).unwrap();
    let diag = DiagramEvaluator::new(VecGModel::new(coeff), 4, 200_000);
    let r = check_agreement(&fast, &diag, max).unwrap();
    assert!(r.passed(), "{:?}", r.failures().next());
    assert!(r.checked() > 0);
}

#[test]
fn z2_unit_rationals() {
    let g = FiniteGroup::cyclic(2).unwrap();
    compare_all(CenterCoalgebra::unit(&Rationals, g).unwrap(), 3);
}

#[test]
fn s3_regular_f3() {
    let k = PrimeField::new(3).unwrap();
    let g = FiniteGroup::symmetric(3).unwrap();
    compare_all(CenterCoalgebra::regular(&k, g).unwrap(), 2);
}

#[test]
fn s3_grouplike_f3() {
    let k = PrimeField::new(3).unwrap();
    let g = FiniteGroup::symmetric(3).unwrap();
    let t: Vec<usize> = (0..6).filter(|&a| g.element_order(a) == 2).collect();
    compare_all(CenterCoalgebra::grouplike(&k, g, &t).unwrap(), 2);
}

#[test]
fn z2_upper_triangular() {
    let g = FiniteGroup::cyclic(2).unwrap();
    compare_all(CenterCoalgebra::upper_triangular(&Rationals, g).unwrap(), 3);
}

#[test]
fn z3_grouplike_support_rationals() {
    let g = FiniteGroup::cyclic(3).unwrap();
    compare_all(CenterCoalgebra::grouplike(&Rationals, g, &[0, 1, 2]).unwrap(), 2);
}
