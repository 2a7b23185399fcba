//! Exact row reduction, kernels and linear solves over ℚ and 𝔽_p.

use dycoh::field::{Field, PrimeField, Rationals};
use dycoh::matrix::Matrix;

fn main() -> dycoh::error::Result<()> {
    let q = Rationals;
    let m = Matrix::from_i64(&q, &[&[1, 2, 3], &[2, 4, 7], &[1, 2, 4]])?;
    println!("rank over Q: {}", m.rank());
    println!("kernel over Q: {:?}", m.kernel_basis().to_strings());

    let half = q.parse("1/2")?;
    let b = vec![half.clone(), q.one(), half];
    match m.solve(&b)? {
        Some(x) => println!("solution of m x = (1/2, 1, 1/2): {:?}", x.iter().map(|e| q.format(e)).collect::<Vec<_>>()),
        None => println!("m x = b is inconsistent"),
    }

    let f2 = PrimeField::new(2)?;
    let m2 = Matrix::from_i64(&f2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])?;
    println!("rank over F2: {} (the rows sum to zero)", m2.rank());
    Ok(())
}
