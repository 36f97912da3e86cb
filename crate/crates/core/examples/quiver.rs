//! The labelled quiver, and its extra arrows' tails.
//!
//! `cargo run --example quiver`

use recalg::combinatorics::{build_quiver, riemenschneider_holds, GroupParams};

fn main() {
    for (r, a) in [(7, 3), (165, 104), (3, 1)] {
        let q = build_quiver(GroupParams::new(r, a).unwrap());
        print!("{}", q.render_table());
        println!("  point diagram duality holds: {}\n", riemenschneider_holds(&q));
    }
}
