//! Checks that the quasiminors cut out the Artin component: Buchberger's criterion on
//! QDet ∪ {E − u}, elimination of u, and optionally the toric oracle.
//!
//! `cargo run --release --example verify_theorem -- 11 4 full_oracle`

use recalg::artin::{generator_set, s_pair_outcomes, verify_theorem, VerifyMode};
use recalg::combinatorics::GroupParams;
use recalg::groebner::Limits;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let r = args.first().and_then(|x| x.parse().ok()).unwrap_or(7);
    let a = args.get(1).and_then(|x| x.parse().ok()).unwrap_or(3);
    let mode: VerifyMode = args.get(2).map_or(Ok(VerifyMode::FullOracle), |m| m.parse()).unwrap();
    let s = generator_set(GroupParams::new(r, a).unwrap());
    let report = verify_theorem(&s, mode, Limits::default()).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    for p in s_pair_outcomes(&s).iter().take(6) {
        println!(
            "S({}, {}) is {:?}: closed form {}, zero after {} steps",
            p.first, p.second, p.shape, p.matches_closed_form, p.steps
        );
    }
}
