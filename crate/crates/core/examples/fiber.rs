//! Fibers of π: QDet together with the linear relations fixing λ, and their dimension.
//!
//! `cargo run --release --example fiber`

use recalg::artin::generator_set;
use recalg::combinatorics::GroupParams;
use recalg::deform::{fiber_dimension, reduced_fiber, DeformationParams};
use recalg::groebner::Limits;

fn main() {
    let g = GroupParams::new(2, 1).unwrap();
    let s = generator_set(g);
    let lam = DeformationParams::from_strings(g, &[vec!["5".into(), "-5".into()]]).unwrap();
    println!("{g}, λ = {:?}: {:?}", lam.to_strings(), reduced_fiber(&s, &lam).unwrap().to_strings());

    for (r, a) in [(5, 2), (7, 3), (9, 4)] {
        let g = GroupParams::new(r, a).unwrap();
        let s = generator_set(g);
        for lam in DeformationParams::seeded_samples(g, 3, 2) {
            let dim = fiber_dimension(&s, &lam, Limits::default()).unwrap();
            println!("{g} λ = {:?}: dimension {dim:?}", lam.to_strings());
        }
    }
}
