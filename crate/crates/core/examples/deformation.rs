//! The deformed relations over λ, and emptiness of the representation space off Δ.
//!
//! `cargo run --example deformation`

use recalg::artin::generator_set;
use recalg::combinatorics::GroupParams;
use recalg::deform::{deformed_relations, rep_variety_empty_check, DeformationParams};
use rand::SeedableRng;

fn main() {
    let g = GroupParams::new(7, 3).unwrap();
    let s = generator_set(g);
    let rel = deformed_relations(&s);
    for line in rel.render() {
        println!("{line}");
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let inside = DeformationParams::random_in_delta(g, &mut rng);
    let outside = DeformationParams::random_unconstrained(g, &mut rng);
    for lam in [inside, outside] {
        println!(
            "λ = {:?}: in Δ {}, representation space empty {}",
            lam.to_strings(),
            lam.in_delta(),
            rep_variety_empty_check(&rel, &lam).unwrap()
        );
    }
}
