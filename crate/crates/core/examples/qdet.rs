//! The quasimatrix, its quasiminors and the product E, with φ checked on each minor.
//!
//! `cargo run --example qdet`

use recalg::artin::{generator_set, quasiminors, saturating_product_e, QuasiMatrix};
use recalg::combinatorics::GroupParams;

fn main() {
    for (r, a) in [(7, 3), (7, 2), (165, 104)] {
        let s = generator_set(GroupParams::new(r, a).unwrap());
        println!("{}", s.group);
        println!("{}", QuasiMatrix::new(&s).render(&s));
        let weights = s.z_ring.vars.weights().to_vec();
        for f in quasiminors(&s) {
            let deg = f.lhs.weighted_degree_u128(&weights).unwrap();
            println!("  f{}{} = {}   (degree {deg}, φ = {})", f.i, f.j, f.poly, s.phi(&f.poly));
        }
        println!("  E = {}\n", s.z_ring.format_monomial(&saturating_product_e(&s)));
    }
}
