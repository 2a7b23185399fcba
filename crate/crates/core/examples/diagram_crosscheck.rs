//! Compares the reduced Vec_G formulas with direct evaluation of the
//! defining composites on every basis cochain.

use dycoh::crosscheck::check_agreement;
use dycoh::diagram::DiagramEvaluator;
use dycoh::field::Rationals;
use dycoh::group::FiniteGroup;
use dycoh::vecg::{CenterCoalgebra, VecGBackend, VecGModel};

fn main() -> dycoh::error::Result<()> {
    let coeff = CenterCoalgebra::upper_triangular(&Rationals, FiniteGroup::cyclic(2)?)?;
    let fast = VecGBackend::new(coeff.clone(), 3, 200_000)?;
    let slow = DiagramEvaluator::new(VecGModel::new(coeff), 3, 200_000);
    let report = check_agreement(&fast, &slow, 3)?;
    println!(
        "{} entries, {} comparisons, agreement: {}",
        report.results.len(),
        report.checked(),
        report.passed()
    );
    Ok(())
}
