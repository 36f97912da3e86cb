//! The exponent matrix M of φ, the kernel matrix K and its unimodular completion Q.
//!
//! `cargo run --example exponent_matrices`

use recalg::artin::{exponent_matrices, generator_set, kernel_report};
use recalg::combinatorics::GroupParams;
use recalg::lattice::{integer_kernel, smith_normal_form};

fn main() {
    let s = generator_set(GroupParams::new(7, 2).unwrap());
    let b = exponent_matrices(&s);
    println!("columns {:?}", b.col_labels);
    for (label, row) in b.row_labels.iter().zip(b.m.to_i64_rows()) {
        println!("  {label:<5} {row:?}");
    }
    println!("K (rows as columns of M):");
    for (label, row) in b.col_labels.iter().zip(b.k.to_i64_rows()) {
        println!("  {label:<5} {row:?}");
    }
    println!("invariant factors of M: {:?}", smith_normal_form(&b.m).invariant_factors());
    println!("SNF kernel has {} columns", integer_kernel(&b.m).cols());
    println!("{:#?}", kernel_report(&s));
}
