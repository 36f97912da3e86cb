//! Each chart W_t is an affine plane: normalizing the designated arrows lets every other
//! arrow be solved triangularly, leaving two free coordinates and no residual relation.
//!
//! `cargo run --example charts -- 11 4`

use recalg::artin::generator_set;
use recalg::combinatorics::GroupParams;
use recalg::deform::{chart_eliminate, chart_indices, DeformationParams, Lambda};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, a) = match args[..] {
        [r, a] => (r, a),
        _ => (11, 4),
    };
    let g = GroupParams::new(r, a).unwrap();
    let s = generator_set(g);
    let lam = DeformationParams::seeded_samples(g, 1, 1).pop().unwrap();
    println!("{g} at λ = {:?}", lam.to_strings());
    for t in chart_indices(&s) {
        let c = chart_eliminate(&s, t, Lambda::Concrete(&lam)).unwrap();
        println!("W{t}: units {:?}, free {:?}, affine plane {}", c.units, c.free, c.is_affine_plane());
        for (arrow, value) in &c.solved {
            println!("    {arrow} = {value}");
        }
    }
    let symbolic = chart_eliminate(&s, 0, Lambda::Symbolic).unwrap();
    println!("W0 over symbolic λ:");
    for (arrow, value) in &symbolic.solved {
        println!("    {arrow} = {value}");
    }
}
