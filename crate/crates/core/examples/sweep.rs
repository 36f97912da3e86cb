//! All checks over every group with r ≤ N, in parallel.
//!
//! `cargo run --release --example sweep -- 20`

use recalg::artin::VerifyMode;
use recalg::cli::sweep;
use recalg::groebner::Limits;

fn main() {
    let max_r = std::env::args().nth(1).and_then(|x| x.parse().ok()).unwrap_or(12);
    let results = sweep(max_r, VerifyMode::BuchbergerOnly, 0, 3, Limits::default());
    let failed: Vec<_> = results.iter().filter(|e| !e.passed).collect();
    println!("{} groups with r ≤ {max_r}, {} failed", results.len(), failed.len());
    for e in failed {
        println!("  1/{}(1,{}): {:?}", e.r, e.a, e.failures);
    }
}
