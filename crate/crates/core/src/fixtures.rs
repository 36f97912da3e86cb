//! Printed reference objects, stored as JSON under `fixtures/` and replayed against the
//! library. Matrix K is compared up to the sign of each column; everything else is exact.

use crate::artin::{
    exponent_matrices, generator_set, qdet_ideal, quasiminors, saturating_product_e, GeneratorSet,
};
use crate::combinatorics::{hj_primary, ArrowKind, GroupParams};
use crate::deform::{
    chart_eliminate, chart_eliminate_custom, chart_indices, deformed_relations, impose_delta,
    jacobian_singular_at, symbolic_ring, DeformationParams, Lambda,
};
use crate::groebner::{s_polynomial, Limits};
use crate::poly::{parse_polynomial, Coeff, PolyRing, Polynomial};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Name and contents of every bundled fixture file.
pub const FILES: &[(&str, &str)] = &[
    ("quiver_7_3", include_str!("../fixtures/quiver_7_3.json")),
    ("quiver_165_104", include_str!("../fixtures/quiver_165_104.json")),
    ("generators_7_3", include_str!("../fixtures/generators_7_3.json")),
    ("generators_165_104", include_str!("../fixtures/generators_165_104.json")),
    ("images_3_1", include_str!("../fixtures/images_3_1.json")),
    ("qdet_7_3", include_str!("../fixtures/qdet_7_3.json")),
    ("qdet_165_104", include_str!("../fixtures/qdet_165_104.json")),
    ("qdet_7_2", include_str!("../fixtures/qdet_7_2.json")),
    ("matrix_m_3_1", include_str!("../fixtures/matrix_m_3_1.json")),
    ("matrix_m_7_2", include_str!("../fixtures/matrix_m_7_2.json")),
    ("matrix_k_7_2", include_str!("../fixtures/matrix_k_7_2.json")),
    ("deformed_7_3", include_str!("../fixtures/deformed_7_3.json")),
    ("deformed_165_104", include_str!("../fixtures/deformed_165_104.json")),
    ("counterexample_3_1", include_str!("../fixtures/counterexample_3_1.json")),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    /// First mismatch, when the replay failed.
    pub detail: Option<String>,
}

#[derive(Deserialize)]
struct Group {
    r: u64,
    a: u64,
}

#[derive(Deserialize)]
struct QuiverFixture {
    hj: Vec<u64>,
    vertices: usize,
    #[serde(default)]
    arrows: Vec<(String, usize, usize)>,
    #[serde(default)]
    extra_tails: Vec<(String, usize)>,
}

#[derive(Deserialize)]
struct NamesFixture {
    names: Vec<String>,
}

#[derive(Deserialize)]
struct ImagesFixture {
    images: Vec<(String, Vec<String>)>,
}

#[derive(Deserialize)]
struct QdetFixture {
    #[serde(default)]
    relations: Vec<String>,
    count: Option<usize>,
    e: Option<String>,
    s_f12_f34: Option<String>,
    degree_f12: Option<u128>,
    degree_f34: Option<u128>,
}

#[derive(Deserialize)]
struct MatrixFixture {
    #[serde(default)]
    rows: Vec<String>,
    #[serde(default)]
    cols: Vec<String>,
    entries: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RelationsFixture {
    relations: Vec<String>,
}

#[derive(Deserialize)]
struct CounterexampleFixture {
    units: Vec<String>,
    residual: String,
    singular_at_origin: bool,
}

type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn normalize(ring: &Arc<PolyRing>, texts: &[String]) -> Result<Vec<Polynomial>, String> {
    texts
        .iter()
        .map(|t| parse_polynomial(ring, t).map_err(|e| format!("{t}: {e}")))
        .collect()
}

fn replay(name: &str, text: &str) -> Check {
    let group: Group = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let g = GroupParams::new(group.r, group.a).map_err(|e| e.to_string())?;
    let s = generator_set(g);
    let parse = |e: serde_json::Error| e.to_string();
    match name.split('_').next().unwrap_or_default() {
        "quiver" => quiver(&s, serde_json::from_str(text).map_err(parse)?),
        "generators" => {
            let f: NamesFixture = serde_json::from_str(text).map_err(parse)?;
            let got: Vec<String> = s.vars.iter().map(|v| v.name.clone()).collect();
            ensure(got == f.names, || format!("generators {got:?}"))
        }
        "images" => images(&s, serde_json::from_str(text).map_err(parse)?),
        "qdet" => qdet(&s, serde_json::from_str(text).map_err(parse)?),
        "matrix" if name.starts_with("matrix_k") => matrix_k(&s, serde_json::from_str(text).map_err(parse)?),
        "matrix" => matrix_m(&s, serde_json::from_str(text).map_err(parse)?),
        "deformed" => deformed(&s, serde_json::from_str(text).map_err(parse)?),
        "counterexample" => counterexample(&s, serde_json::from_str(text).map_err(parse)?),
        other => Err(format!("unknown fixture kind {other}")),
    }
}

fn quiver(s: &GeneratorSet, f: QuiverFixture) -> Check {
    let hj = hj_primary(s.group).terms;
    ensure(hj == f.hj, || format!("expansion {hj:?}"))?;
    let q = &s.quiver;
    ensure(q.vertex_count() == f.vertices, || format!("{} vertices", q.vertex_count()))?;
    if !f.arrows.is_empty() {
        let mut got: Vec<(String, usize, usize)> = q.arrows.iter().map(|a| (a.label.clone(), a.tail, a.head)).collect();
        let mut want = f.arrows.clone();
        got.sort();
        want.sort();
        ensure(got == want, || format!("arrows {got:?}"))?;
    }
    if !f.extra_tails.is_empty() {
        let got: Vec<(String, usize)> = q
            .arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::Extra)
            .map(|a| (a.label.clone(), a.tail))
            .collect();
        ensure(got == f.extra_tails, || format!("extra arrows {got:?}"))?;
    }
    Ok(())
}

fn images(s: &GeneratorSet, f: ImagesFixture) -> Check {
    for (name, want) in f.images {
        let k = s.vars.iter().position(|v| v.name == name).ok_or(format!("no generator {name}"))?;
        let mut got = s.quiver.labels(&s.vars[k].path);
        let mut want = want;
        got.sort();
        want.sort();
        ensure(got == want, || format!("{name} ↦ {got:?}"))?;
    }
    Ok(())
}

fn qdet(s: &GeneratorSet, f: QdetFixture) -> Check {
    let ring = &s.z_ring;
    let ideal = qdet_ideal(s);
    if let Some(n) = f.count {
        ensure(ideal.len() == n, || format!("{} quasiminors", ideal.len()))?;
    }
    if !f.relations.is_empty() {
        let want = normalize(ring, &f.relations)?;
        ensure(ideal.generators() == want.as_slice(), || format!("QDet {:?}", ideal.to_strings()))?;
    }
    if let Some(e) = f.e {
        let got = ring.format_monomial(&saturating_product_e(s));
        let want = normalize(ring, &[e])?[0].to_string();
        ensure(got == want, || format!("E = {got}"))?;
    }
    let minors = quasiminors(s);
    let minor = |i, j| minors.iter().find(|q| (q.i, q.j) == (i, j)).ok_or(format!("no f{i}_{j}"));
    if let Some(text) = f.s_f12_f34 {
        let want = normalize(ring, &[text])?.remove(0);
        let got = s_polynomial(&minor(1, 2)?.poly, &minor(3, 4)?.poly).map_err(|e| e.to_string())?;
        ensure(got == want || got == want.neg(), || format!("S(f12, f34) = {got}"))?;
    }
    let w = ring.vars.weights().to_vec();
    for ((i, j), want) in [((1, 2), f.degree_f12), ((3, 4), f.degree_f34)] {
        if let Some(d) = want {
            let q = minor(i, j)?;
            let got = (q.lhs.weighted_degree_u128(&w), q.rhs.weighted_degree_u128(&w));
            ensure(got == (Some(d), Some(d)), || format!("deg f{i}_{j} = {got:?}"))?;
        }
    }
    Ok(())
}

fn matrix_m(s: &GeneratorSet, f: MatrixFixture) -> Check {
    let b = exponent_matrices(s);
    ensure(b.row_labels == f.rows, || format!("rows {:?}", b.row_labels))?;
    ensure(b.col_labels == f.cols, || format!("columns {:?}", b.col_labels))?;
    let got = b.m.to_i64_rows();
    ensure(got == f.entries, || format!("M = {got:?}"))
}

fn matrix_k(s: &GeneratorSet, f: MatrixFixture) -> Check {
    let k = exponent_matrices(s).k.to_i64_rows();
    let cols = f.entries.first().map_or(0, Vec::len);
    ensure(k.len() == f.entries.len() && k.first().map_or(0, Vec::len) == cols, || {
        format!("K has shape {}×{}", k.len(), k.first().map_or(0, Vec::len))
    })?;
    for c in 0..cols {
        let ours: Vec<i64> = k.iter().map(|row| row[c]).collect();
        let theirs: Vec<i64> = f.entries.iter().map(|row| row[c]).collect();
        let flipped: Vec<i64> = theirs.iter().map(|x| -x).collect();
        ensure(ours == theirs || ours == flipped, || format!("K column {c} = {ours:?}"))?;
    }
    Ok(())
}

fn deformed(s: &GeneratorSet, f: RelationsFixture) -> Check {
    let ring = symbolic_ring(s);
    let got: Vec<Polynomial> = deformed_relations(s)
        .polynomials(Lambda::Symbolic)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| impose_delta(s, p))
        .collect();
    let want: Vec<Polynomial> = normalize(&ring, &f.relations)?.iter().map(|p| impose_delta(s, p)).collect();
    ensure(got.len() == want.len(), || format!("{} relations", got.len()))?;
    for (k, (a, b)) in got.iter().zip(&want).enumerate() {
        ensure(a == b, || format!("relation {k}: {a}"))?;
    }
    Ok(())
}

fn counterexample(s: &GeneratorSet, f: CounterexampleFixture) -> Check {
    let zero = DeformationParams::zero(s.group);
    let units: Vec<&str> = f.units.iter().map(String::as_str).collect();
    let chart = chart_eliminate_custom(s, &units, &zero).map_err(|e| e.to_string())?;
    let want = normalize(&s.arrow_ring, &[f.residual])?.remove(0).monic();
    let got: Vec<String> = chart.residual.iter().map(|p| p.to_string()).collect();
    ensure(chart.residual.len() == 1 && chart.residual[0].monic() == want, || {
        format!("residual {got:?}")
    })?;
    let ideal = chart.residual_ideal().map_err(|e| e.to_string())?;
    let origin = vec![Coeff::from_integer(0.into()); ideal.ring().nvars()];
    let singular = jacobian_singular_at(&ideal, &origin, Limits::default()).map_err(|e| e.to_string())?;
    ensure(singular == f.singular_at_origin, || format!("singular at origin: {singular}"))?;
    for t in chart_indices(s) {
        let c = chart_eliminate(s, t, Lambda::Concrete(&zero)).map_err(|e| e.to_string())?;
        ensure(c.is_affine_plane(), || format!("chart W{t} residual {:?}", c.to_json().residual))?;
    }
    Ok(())
}

/// Replays every bundled fixture in file order.
pub fn replay_all() -> Vec<FixtureOutcome> {
    FILES
        .iter()
        .map(|(name, text)| {
            let result = replay(name, text);
            FixtureOutcome {
                name: name.to_string(),
                passed: result.is_ok(),
                detail: result.err(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_replay() {
        for o in replay_all() {
            assert!(o.passed, "{}: {:?}", o.name, o.detail);
        }
    }

    #[test]
    fn tampered_fixture_fails() {
        let text = FILES.iter().find(|(n, _)| *n == "qdet_7_3").unwrap().1;
        let bad = text.replace("z0_0*z2_3", "z0_0*z2_2");
        assert!(replay("qdet_7_3", &bad).is_err());
    }
}
