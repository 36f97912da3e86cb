//! For 1/3(1,1), normalizing a1 instead of c1 leaves a singular residual surface, while the
//! two standard charts are smooth planes.
//!
//! `cargo run --example counterexample_chart`

use recalg::artin::generator_set;
use recalg::combinatorics::GroupParams;
use recalg::deform::{chart_eliminate, chart_eliminate_custom, chart_indices, jacobian_singular_at, DeformationParams, Lambda};
use recalg::groebner::Limits;
use recalg::poly::Coeff;

fn main() {
    let g = GroupParams::new(3, 1).unwrap();
    let s = generator_set(g);
    let zero = DeformationParams::zero(g);
    for units in [["a1"], ["a2"], ["k1"]] {
        let c = chart_eliminate_custom(&s, &units, &zero).unwrap();
        let residual: Vec<String> = c.residual.iter().map(|p| p.to_string()).collect();
        println!("{units:?} ≠ 0: free {:?}, residual {residual:?}", c.free);
        if units == ["a1"] {
            let ideal = c.residual_ideal().unwrap();
            let origin = vec![Coeff::from_integer(0.into()); ideal.ring().nvars()];
            println!("    singular at origin: {}", jacobian_singular_at(&ideal, &origin, Limits::default()).unwrap());
        }
    }
    for t in chart_indices(&s) {
        let c = chart_eliminate(&s, t, Lambda::Concrete(&zero)).unwrap();
        println!("W{t}: units {:?}, affine plane {}", c.units, c.is_affine_plane());
    }
}
