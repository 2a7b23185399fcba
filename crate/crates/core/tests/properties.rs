//! Randomised properties: field axioms, linear algebra, bilinearity of the
//! operations and graded antisymmetry of the bracket.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dycoh::cochain::{Cochain, ComplexBackend};
use dycoh::comp::bracket;
use dycoh::field::{Field, PrimeField, Rationals};
use dycoh::group::FiniteGroup;
use dycoh::hopf::{HopfData, HopfModel, YDCoalgebra};
use dycoh::matrix::Matrix;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

fn prime() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u64, 3, 5, 7, 101]).prop_map(|p| PrimeField::new(p).unwrap())
}

fn rational() -> impl Strategy<Value = String> {
    (-50i64..50, 1i64..20).prop_map(|(a, b)| format!("{a}/{b}"))
}

fn field_axioms<K: Field>(k: &K, a: &K::Elem, b: &K::Elem, c: &K::Elem) -> std::result::Result<(), TestCaseError> {
    prop_assert_eq!(k.add(a, b), k.add(b, a));
    prop_assert_eq!(k.mul(a, b), k.mul(b, a));
    prop_assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
    prop_assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
    prop_assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
    prop_assert!(k.is_zero(&k.add(a, &k.neg(a))));
    prop_assert_eq!(k.sub(a, b), k.add(a, &k.neg(b)));
    match k.inv(a) {
        Some(i) => prop_assert_eq!(k.mul(a, &i), k.one()),
        None => prop_assert!(k.is_zero(a)),
    }
    prop_assert_eq!(k.parse(&k.format(a)).unwrap(), a.clone());
    Ok(())
}

proptest! {
    #[test]
    fn prime_field_axioms(k in prime(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let (a, b, c) = (k.from_i64(a), k.from_i64(b), k.from_i64(c));
        field_axioms(&k, &a, &b, &c)?;
    }

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        let k = Rationals;
        let (a, b, c) = (k.parse(&a).unwrap(), k.parse(&b).unwrap(), k.parse(&c).unwrap());
        field_axioms(&k, &a, &b, &c)?;
    }

    #[test]
    fn rank_nullity_and_solve(
        k in prime(),
        rows in 1usize..6,
        cols in 1usize..6,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Matrix::from_fn(&k, rows, cols, |_, _| k.sample(&mut rng));
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.cols(), cols);
        prop_assert!(m.mul(&kernel).unwrap().is_zero());
        let x: Vec<_> = (0..cols).map(|_| k.sample(&mut rng)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }
}

fn backends() -> Vec<(&'static str, Box<dyn ComplexBackend<PrimeField>>)> {
    let k = PrimeField::new(3).unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let t: Vec<usize> = (0..6).filter(|&a| s3.element_order(a) == 2).collect();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let sw = HopfData::sweedler(&k).unwrap();
    let swu = YDCoalgebra::upper_triangular(&sw).unwrap();
    vec![
        (
            "S3 transpositions",
            Box::new(VecGBackend::new(CenterCoalgebra::grouplike(&k, s3, &t).unwrap(), 3, 1 << 18).unwrap()),
        ),
        (
            "Z/2 upper triangular",
            Box::new(VecGBackend::new(CenterCoalgebra::upper_triangular(&k, z2).unwrap(), 3, 1 << 18).unwrap()),
        ),
        ("Sweedler upper triangular", Box::new(HopfModel::backend(sw, swu, 3, 1 << 18).unwrap())),
    ]
}

fn draw(b: &dyn ComplexBackend<PrimeField>, n: usize, rng: &mut ChaCha8Rng) -> Cochain<PrimeField> {
    b.random_cochain(n, rng)
}

/// `op(a x + y, z) = a op(x, z) + op(y, z)` and the same in the second slot.
fn bilinear(
    b: &dyn ComplexBackend<PrimeField>,
    op: &dyn Fn(&Cochain<PrimeField>, &Cochain<PrimeField>) -> Cochain<PrimeField>,
    (m, n): (usize, usize),
    a: i64,
    rng: &mut ChaCha8Rng,
) -> bool {
    let k = b.field();
    let a = k.from_i64(a);
    let (x, y, z) = (draw(b, m, rng), draw(b, m, rng), draw(b, n, rng));
    let mut ax_y = y.clone();
    ax_y.axpy(k, &a, &x).unwrap();
    let mut lhs = op(&y, &z);
    lhs.axpy(k, &a, &op(&x, &z)).unwrap();
    let left = op(&ax_y, &z) == lhs;

    let (u, v, w) = (draw(b, m, rng), draw(b, n, rng), draw(b, n, rng));
    let mut av_w = w.clone();
    av_w.axpy(k, &a, &v).unwrap();
    let mut rhs = op(&u, &w);
    rhs.axpy(k, &a, &op(&u, &v)).unwrap();
    left && op(&u, &av_w) == rhs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn operations_are_bilinear(seed in any::<u64>(), a in -5i64..5, m in 0usize..3, n in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, b) in backends() {
            let b = b.as_ref();
            let d = (m + n).min(3);
            let (m, n) = (m.min(d), d - m.min(d));
            prop_assert!(bilinear(b, &|f, g| b.cup(f, g).unwrap(), (m, n), a, &mut rng), "cup on {}", name);
            prop_assert!(bilinear(b, &|f, g| b.sqcup(f, g).unwrap(), (m, n), a, &mut rng), "sqcup on {}", name);
            let m1 = m.max(1);
            for i in 0..m1 {
                let op = |f: &Cochain<PrimeField>, g: &Cochain<PrimeField>| b.diamond_i(f, g, i).unwrap();
                prop_assert!(bilinear(b, &op, (m1, n.min(3 + 1 - m1)), a, &mut rng), "diamond_{} on {}", i, name);
            }
        }
    }

    #[test]
    fn delta_is_linear_and_squares_to_zero(seed in any::<u64>(), a in -5i64..5, n in 0usize..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, b) in backends() {
            let b = b.as_ref();
            let k = b.field();
            let (x, y) = (draw(b, n, &mut rng), draw(b, n, &mut rng));
            let mut s = y.clone();
            s.axpy(k, &k.from_i64(a), &x).unwrap();
            let mut want = b.delta(&y).unwrap();
            want.axpy(k, &k.from_i64(a), &b.delta(&x).unwrap()).unwrap();
            prop_assert_eq!(b.delta(&s).unwrap(), want, "linearity on {}", name);
            prop_assert!(b.delta(&b.delta(&x).unwrap()).unwrap().is_zero(k), "delta squared on {}", name);
        }
    }

    #[test]
    fn bracket_is_graded_antisymmetric(seed in any::<u64>(), m in 1usize..3, n in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, b) in backends() {
            let b = b.as_ref();
            let k = b.field();
            let (f, g) = (draw(b, m, &mut rng), draw(b, n, &mut rng));
            let fg = bracket(b, &f, &g).unwrap();
            let gf = bracket(b, &g, &f).unwrap();
            let s = k.sign((m - 1) * (n - 1) % 2 == 0);
            prop_assert_eq!(fg, gf.scale(k, &s), "on {}", name);
        }
    }
}
