//! The generators z_{i,j} of the invariant ring as cycles in the quiver.
//!
//! `cargo run --example generators`

use recalg::artin::generator_set;
use recalg::combinatorics::GroupParams;

fn main() {
    for (r, a) in [(7, 3), (165, 104)] {
        let s = generator_set(GroupParams::new(r, a).unwrap());
        println!("{}: {} generators, β = {:?}", s.group, s.len(), s.beta);
        for v in &s.vars {
            println!("  {:<6} deg {:>4}  {}", v.name, v.degree, s.quiver.labels(&v.path).join("*"));
        }
    }
}
