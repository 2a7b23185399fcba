//! Injected sign errors and the checks that catch them.

use dycoh::comp::{check_complex, check_weak_comp, CompMode, Sampling};
use dycoh::field::Rationals;
use dycoh::group::FiniteGroup;
use dycoh::mutation::{Mutation, MutatedBackend};
use dycoh::report::CheckReport;
use dycoh::vecg::{CenterCoalgebra, VecGBackend};

fn first_failure(r: &CheckReport) -> String {
    match r.failures().next() {
        Some(e) => format!("{} ({})", e.identity, e.witness.as_ref().map_or("", |w| w.detail.as_str())),
        None => "not detected".into(),
    }
}

fn main() -> dycoh::error::Result<()> {
    let base = VecGBackend::new(CenterCoalgebra::unit(&Rationals, FiniteGroup::cyclic(2)?)?, 4, 200_000)?;
    let s = Sampling {
        seed: 1,
        samples: 3,
        max_degree: 3,
    };
    let m = MutatedBackend::new(&base, Mutation::DeltaLastSign);
    println!("{:?}: {}", m.mutation(), first_failure(&check_complex(&m, 3)?));
    let m = MutatedBackend::new(&base, Mutation::PiDiamondPi);
    println!("{:?}: {}", m.mutation(), first_failure(&check_weak_comp(&m, &s, CompMode::Weak)?));
    Ok(())
}
