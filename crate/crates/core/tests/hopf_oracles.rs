//! The Hopf backend against independent expectations.
//!
//! With the trivial coefficient the complex is the cobar complex of the
//! coalgebra `H`. For `k^G` this computes `Ext_{kG}(k, k) = H^*(G; k)`; for
//! `kG` it computes `Ext` over the semisimple algebra `k^G`.

use dycoh::cochain::ComplexBackend;
use dycoh::cohomology::{group_cohomology_oracle, Cohomology};
use dycoh::comp::check_complex;
use dycoh::field::{Field, PrimeField, Rationals};
use dycoh::group::FiniteGroup;
use dycoh::hopf::{HopfData, HopfModel, YDCoalgebra};

const CAP: usize = 1 << 18;

fn trivial<K: Field>(h: HopfData<K>, max: usize) -> dycoh::hopf::HopfBackend<K> {
    let u = YDCoalgebra::trivial(&h).unwrap();
    HopfModel::backend(h, u, max, CAP).unwrap()
}

fn groups() -> Vec<(&'static str, FiniteGroup, usize)> {
    vec![
        ("Z/2", FiniteGroup::cyclic(2).unwrap(), 3),
        ("Z/3", FiniteGroup::cyclic(3).unwrap(), 3),
        ("S3", FiniteGroup::symmetric(3).unwrap(), 3),
    ]
}

fn dual_group_algebra_matches_group_cohomology<K: Field>(k: &K) {
    for (name, g, max) in groups() {
        let b = trivial(HopfData::dual_group_algebra(k, &g).unwrap(), max);
        let got = Cohomology::new(&b).betti_table(max).unwrap();
        let want = group_cohomology_oracle(k, &g, max).unwrap();
        assert_eq!(got, want, "{name} over {:?}", k.spec());
    }
}

fn group_algebra_is_acyclic<K: Field>(k: &K) {
    for (name, g, max) in groups() {
        let b = trivial(HopfData::group_algebra(k, &g).unwrap(), max);
        assert_eq!(b.cochain_dim(max), g.order().pow(max as u32));
        let mut want = vec![0; max + 1];
        want[0] = 1;
        assert_eq!(Cohomology::new(&b).betti_table(max).unwrap(), want, "{name} over {:?}", k.spec());
    }
}

#[test]
fn dual_group_algebra_over_q() {
    dual_group_algebra_matches_group_cohomology(&Rationals);
}

#[test]
fn dual_group_algebra_over_f2() {
    dual_group_algebra_matches_group_cohomology(&PrimeField::new(2).unwrap());
}

#[test]
fn dual_group_algebra_over_f3() {
    dual_group_algebra_matches_group_cohomology(&PrimeField::new(3).unwrap());
}

#[test]
fn group_algebra_trivial_coefficient() {
    group_algebra_is_acyclic(&Rationals);
    group_algebra_is_acyclic(&PrimeField::new(2).unwrap());
    group_algebra_is_acyclic(&PrimeField::new(3).unwrap());
}

#[test]
fn delta_squared_with_nontrivial_coefficients() {
    let k = PrimeField::new(3).unwrap();
    let g = FiniteGroup::symmetric(3).unwrap();
    let h = HopfData::group_algebra(&k, &g).unwrap();
    let u = YDCoalgebra::group_regular(&k, &g).unwrap();
    let b = HopfModel::backend(h, u, 2, CAP).unwrap();
    assert!(check_complex(&b, 2).unwrap().passed());

    let sw = HopfData::sweedler(&Rationals).unwrap();
    let u = YDCoalgebra::upper_triangular(&sw).unwrap();
    let b = HopfModel::backend(sw, u, 3, CAP).unwrap();
    assert!(check_complex(&b, 3).unwrap().passed());
}

#[test]
fn sweedler_trivial_betti_is_stable_across_fields() {
    let q = Cohomology::new(&trivial(HopfData::sweedler(&Rationals).unwrap(), 3))
        .betti_table(3)
        .unwrap();
    let f3 = Cohomology::new(&trivial(HopfData::sweedler(&PrimeField::new(3).unwrap()).unwrap(), 3))
        .betti_table(3)
        .unwrap();
    assert_eq!(q[0], 1);
    assert_eq!(q, f3);
}
