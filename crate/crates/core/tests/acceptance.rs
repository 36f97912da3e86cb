//! Acceptance criteria, one PASS/FAIL line each. Values derived here come from oracles written
//! independently of the library: brute-force invariant monomials, substitution back into the
//! relations, and direct sums over λ.

use rayon::prelude::*;
use recalg::artin::{
    generator_set, kernel_report, quasiminors, s_pair_outcomes, verify_theorem, GeneratorSet, VerifyMode,
};
use recalg::combinatorics::GroupParams;
use recalg::deform::{
    chart_eliminate, chart_indices, deformed_relations, fiber_dimension, fiber_dimension_direct, reduced_fiber,
    rep_variety_empty_check, DeformationParams, Lambda,
};
use recalg::fixtures::replay_all;
use recalg::groebner::Limits;
use recalg::poly::Polynomial;
use rand::SeedableRng;
use std::time::{Duration, Instant};

const SEED: u64 = 2024;

fn groups(max_r: u64) -> Vec<GroupParams> {
    GroupParams::all_up_to(max_r)
}

/// Minimal generators of {(i, j) : i + a j ≡ 0 mod r} found by exhaustive search, ordered by j.
fn invariant_generators(r: u64, a: u64) -> Vec<(u64, u64)> {
    let inv: Vec<(u64, u64)> = (0..=r)
        .flat_map(|j| (0..=r).map(move |i| (i, j)))
        .filter(|&(i, j)| (i, j) != (0, 0) && (i + a * j).is_multiple_of(r))
        .collect();
    let decomposable = |&(i, j): &(u64, u64)| {
        inv.iter()
            .any(|&(p, q)| (p, q) != (i, j) && p <= i && q <= j && inv.contains(&(i - p, j - q)))
    };
    let mut gens: Vec<(u64, u64)> = inv.iter().copied().filter(|g| !decomposable(g)).collect();
    gens.sort_by_key(|&(i, j)| (j, std::cmp::Reverse(i)));
    gens
}

/// Exponents of x, y for a monomial in the z ring, sending z_{i,·} to the i-th invariant generator.
fn xy_exponent(s: &GeneratorSet, gens: &[(u64, u64)], m: &recalg::poly::Monomial) -> (u64, u64) {
    m.iter().fold((0, 0), |(x, y), (v, e)| {
        let (p, q) = gens[s.vars[v].i];
        (x + p * e as u64, y + q * e as u64)
    })
}

struct Criterion {
    id: usize,
    title: &'static str,
    budget: Duration,
    run: fn() -> Result<String, String>,
}

fn c1_fixtures() -> Result<String, String> {
    let outcomes = replay_all();
    let bad: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| format!("{}: {:?}", o.name, o.detail))
        .collect();
    if bad.is_empty() {
        Ok(format!("{} fixtures", outcomes.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c2_buchberger() -> Result<String, String> {
    let gs = groups(20);
    let bad: Vec<String> = gs
        .par_iter()
        .filter_map(|&g| {
            let s = generator_set(g);
            let gens = invariant_generators(g.r(), g.a());
            if gens.len() != s.m() + 2 {
                return Some(format!("{g}: {} invariant generators", gens.len()));
            }
            for f in quasiminors(&s) {
                if xy_exponent(&s, &gens, &f.lhs) != xy_exponent(&s, &gens, &f.rhs) {
                    return Some(format!("{g}: f{}{} does not vanish on x, y", f.i, f.j));
                }
            }
            match verify_theorem(&s, VerifyMode::BuchbergerOnly, Limits::default()) {
                Ok(r) if r.passed && r.phi_kills_qdet && r.degrevlex.passed && r.elimination_matches => None,
                Ok(r) => Some(format!("{g}: {}", serde_json::to_string(&r).unwrap())),
                Err(e) => Some(format!("{g}: {e}")),
            }
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} groups", gs.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c3_oracle() -> Result<String, String> {
    let gs = groups(12);
    let bad: Vec<String> = gs
        .par_iter()
        .filter_map(|&g| {
            let s = generator_set(g);
            match verify_theorem(&s, VerifyMode::FullOracle, Limits::default()) {
                Ok(r) if r.oracle.as_ref().is_some_and(|o| o.ideal_equal) => None,
                Ok(r) => Some(format!("{g}: oracle {:?}", r.oracle)),
                Err(e) => Some(format!("{g}: {e}")),
            }
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} groups", gs.len()))
    } else {
        Err(bad.join("; "))
    }
}

/// Rank over ℚ by fraction-free elimination on i128.
fn rank_i128(mut m: Vec<Vec<i128>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let (a, b) = (m[rank][c], m[r][c]);
            if b != 0 {
                let pivot_row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x = *x * a - y * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn c4_kernel() -> Result<String, String> {
    let gs = groups(20);
    let bad: Vec<String> = gs
        .par_iter()
        .filter_map(|&g| {
            let s = generator_set(g);
            let rep = kernel_report(&s);
            let m = recalg::artin::exponent_matrices(&s).m.to_i64_rows();
            let independent = rank_i128(m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect());
            let expected = s.len() - (s.m());
            (!(rep.spans_equal && rep.mk_zero && rep.rank_m == expected && independent == expected))
                .then(|| format!("{g}: {rep:?}, rank {independent}"))
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} groups", gs.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn c5_s_pairs() -> Result<String, String> {
    let gs = groups(20);
    let counts: Vec<Result<usize, String>> = gs
        .par_iter()
        .map(|&g| {
            let outcomes = s_pair_outcomes(&generator_set(g));
            match outcomes.iter().find(|p| !(p.matches_closed_form && p.reached_zero && p.steps <= 2)) {
                None => Ok(outcomes.len()),
                Some(p) => Err(format!("{g}: {p:?}")),
            }
        })
        .collect();
    let bad: Vec<String> = counts.iter().filter_map(|c| c.clone().err()).collect();
    if bad.is_empty() {
        Ok(format!("{} pairs", counts.iter().map(|c| c.clone().unwrap()).sum::<usize>()))
    } else {
        Err(bad.join("; "))
    }
}

/// Units set to 1 and solved arrows replaced by their expressions must kill every relation.
fn chart_substitution_vanishes(s: &GeneratorSet, relations: &[Polynomial], chart: &recalg::deform::Chart) -> bool {
    let ring = s.arrow_ring.clone();
    let pos = |n: &str| ring.vars.position(n).unwrap();
    relations.iter().all(|rel| {
        let mut p = rel.clone();
        for u in &chart.units {
            p = p.substitute(pos(u), &Polynomial::one(&ring));
        }
        for (arrow, value) in &chart.solved {
            p = p.substitute(pos(arrow), value);
        }
        p.is_zero()
    })
}

fn c6_charts() -> Result<String, String> {
    let gs = groups(20);
    let counts: Vec<Result<usize, String>> = gs
        .par_iter()
        .map(|&g| {
            let s = generator_set(g);
            let rel = deformed_relations(&s);
            let mut n = 0;
            for lam in DeformationParams::seeded_samples(g, SEED, 3) {
                let polys = rel.polynomials(Lambda::Concrete(&lam)).map_err(|e| e.to_string())?;
                for t in chart_indices(&s) {
                    let c = chart_eliminate(&s, t, Lambda::Concrete(&lam)).map_err(|e| format!("{g} W{t}: {e}"))?;
                    if !c.is_affine_plane() || !chart_substitution_vanishes(&s, &polys, &c) {
                        return Err(format!("{g} W{t} at {:?}: {:?}", lam.to_strings(), c.to_json()));
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    let bad: Vec<String> = counts.iter().filter_map(|c| c.clone().err()).collect();
    if bad.is_empty() {
        Ok(format!("{} charts", counts.iter().map(|c| c.clone().unwrap()).sum::<usize>()))
    } else {
        Err(bad.join("; "))
    }
}

fn c7_fibers() -> Result<String, String> {
    let gs = groups(12);
    let mut bad: Vec<String> = gs
        .par_iter()
        .flat_map(|&g| {
            let s = generator_set(g);
            DeformationParams::seeded_samples(g, SEED, 3)
                .into_iter()
                .filter_map(|lam| {
                    let d = fiber_dimension(&s, &lam, Limits::default());
                    let direct = (g.r() <= 7).then(|| fiber_dimension_direct(&s, &lam, Limits::default()));
                    match (d, direct) {
                        (Ok(Some(2)), None | Some(Ok(Some(2)))) => None,
                        (d, direct) => Some(format!("{g} at {:?}: {d:?} / {direct:?}", lam.to_strings())),
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let g = GroupParams::new(2, 1).unwrap();
    let s = generator_set(g);
    for lam in DeformationParams::seeded_samples(g, SEED, 3) {
        let fiber = reduced_fiber(&s, &lam).map_err(|e| e.to_string())?;
        let ring = fiber.ring();
        let z = |n: &str| Polynomial::var_named(ring, n).unwrap();
        let shifted = z("z1_1").add(&Polynomial::constant(ring, lam.get(1, 1).clone()));
        let want = z("z0_0").mul(&z("z2_0")).sub(&z("z1_1").mul(&shifted));
        if fiber.generators() != [want.clone()] && fiber.generators() != [want.neg()] {
            bad.push(format!("1/2(1,1) at {:?}: {:?}", lam.to_strings(), fiber.to_strings()));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} fibers", gs.len() * 4))
    } else {
        Err(bad.join("; "))
    }
}

fn c8_emptiness() -> Result<String, String> {
    let gs = groups(20);
    let bad: Vec<String> = gs
        .par_iter()
        .filter_map(|&g| {
            let rel = deformed_relations(&generator_set(g));
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(SEED ^ g.r() << 16 ^ g.a());
            for k in 0..100 {
                let lam = if k % 2 == 0 {
                    DeformationParams::random_in_delta(g, &mut rng)
                } else {
                    DeformationParams::random_unconstrained(g, &mut rng)
                };
                let inside = lam.steps().iter().all(|step| num_traits::Zero::is_zero(&step.iter().sum::<recalg::poly::Coeff>()));
                match rep_variety_empty_check(&rel, &lam) {
                    Ok(empty) if empty != inside => {}
                    other => return Some(format!("{g} at {:?}: {other:?}", lam.to_strings())),
                }
            }
            None
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} parameters", gs.len() * 100))
    } else {
        Err(bad.join("; "))
    }
}

fn c9_counterexample() -> Result<String, String> {
    let o = replay_all().into_iter().find(|o| o.name == "counterexample_3_1").ok_or("missing fixture")?;
    if o.passed {
        Ok("principal residual, singular at origin, W1/W2 planes".into())
    } else {
        Err(format!("{:?}", o.detail))
    }
}

fn c10_grading() -> Result<String, String> {
    let s = generator_set(GroupParams::new(7, 2).unwrap());
    let w = s.z_ring.vars.weights().to_vec();
    let mut bad = Vec::new();
    for f in quasiminors(&s).iter().filter(|f| [(1, 2), (3, 4)].contains(&(f.i, f.j))) {
        let d = (f.lhs.weighted_degree_u128(&w), f.rhs.weighted_degree_u128(&w));
        if d != (Some(12), Some(12)) {
            bad.push(format!("f{}{} degrees {d:?}", f.i, f.j));
        }
    }
    let mut total = 0;
    for g in groups(20) {
        let s = generator_set(g);
        let gens = invariant_generators(g.r(), g.a());
        let w = s.z_ring.vars.weights().to_vec();
        for v in &s.vars {
            let (p, q) = gens[v.i];
            if v.degree != p + q {
                bad.push(format!("{g}: deg {} = {}", v.name, v.degree));
            }
        }
        for f in quasiminors(&s) {
            total += 1;
            if !f.poly.is_homogeneous() || f.lhs.weighted_degree_u128(&w) != f.rhs.weighted_degree_u128(&w) {
                bad.push(format!("{g}: f{}{} not homogeneous", f.i, f.j));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{total} quasiminors"))
    } else {
        Err(bad.join("; "))
    }
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "fixture fidelity", budget: Duration::from_secs(1), run: c1_fixtures },
        Criterion { id: 2, title: "Buchberger criterion on QDet and E - u, r <= 20", budget: Duration::from_secs(60), run: c2_buchberger },
        Criterion { id: 3, title: "toric oracle equals QDet, r <= 12", budget: Duration::from_secs(600), run: c3_oracle },
        Criterion { id: 4, title: "kernel of M spanned by K, r <= 20", budget: Duration::from_secs(10), run: c4_kernel },
        Criterion { id: 5, title: "S-polynomials match closed forms and reduce in <= 2 steps", budget: Duration::from_secs(30), run: c5_s_pairs },
        Criterion { id: 6, title: "every chart is an affine plane, r <= 20", budget: Duration::from_secs(60), run: c6_charts },
        Criterion { id: 7, title: "fibers of pi have dimension 2, r <= 12", budget: Duration::from_secs(300), run: c7_fibers },
        Criterion { id: 8, title: "representation space empty exactly off Delta", budget: Duration::from_secs(10), run: c8_emptiness },
        Criterion { id: 9, title: "1/3(1,1) counterexample chart", budget: Duration::from_secs(1), run: c9_counterexample },
        Criterion { id: 10, title: "grading of quasiminors", budget: Duration::from_secs(5), run: c10_grading },
    ];
    let mut failed = 0;
    for c in criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if elapsed <= c.budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}, over budget {:?}", c.budget)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} criterion {}: {} ({detail}; {:.2?})", c.id, c.title, elapsed);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
