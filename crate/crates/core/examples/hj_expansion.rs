//! Hirzebruch–Jung expansions and the i/j-series.
//!
//! `cargo run --example hj_expansion -- 165 104`

use recalg::combinatorics::{embedding_dimension, hj_dual, hj_primary, ij_series, GroupParams};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (r, a) = match args[..] {
        [r, a] => (r, a),
        _ => (165, 104),
    };
    let g = GroupParams::new(r, a).expect("r > a >= 1 coprime");
    let alpha = hj_primary(g);
    let beta = hj_dual(g);
    println!("{g}");
    println!("  {r}/{a} = {:?} = {}", alpha.terms, alpha.evaluate());
    println!("  {r}/{} = {:?}", r - a, beta.terms);
    println!("  embedding dimension {}", embedding_dimension(g));
    let ij = ij_series(g);
    for (t, (i, j)) in ij.i_seq.iter().zip(&ij.j_seq).enumerate() {
        println!("  x^{i} y^{j}  (t = {t})");
    }
}
