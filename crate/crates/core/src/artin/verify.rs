use super::generators::GeneratorSet;
use super::matrices::{column_order, exponent_matrices};
use super::qdet::{qdet_ideal, quasiminors, saturating_product_e, QuasiMatrix, QuasiMinor};
use super::ArtinError;
use crate::groebner::{
    buchberger_check, certified, eliminate, ideal_equal, lead_reduce, s_polynomial, saturate_ideal, IdealBasis, Limits,
};
use crate::lattice::integer_kernel;
use crate::poly::{rational, Monomial, MonomialOrder, PolyRing, Polynomial, VarTable};
use num_traits::Signed;
use serde::Serialize;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    BuchbergerOnly,
    FullOracle,
}

impl FromStr for VerifyMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "buchberger_only" => Ok(Self::BuchbergerOnly),
            "full_oracle" => Ok(Self::FullOracle),
            other => Err(format!("unknown mode {other:?}; expected buchberger_only or full_oracle")),
        }
    }
}

impl std::fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::BuchbergerOnly => "buchberger_only",
            Self::FullOracle => "full_oracle",
        })
    }
}

/// z ring with a new first variable `u` of weight deg E, under `order`.
pub fn u_ring(s: &GeneratorSet, order: MonomialOrder) -> Arc<PolyRing> {
    let e = saturating_product_e(s);
    let deg_e: u64 = e.iter().map(|(v, k)| s.vars[v].degree * k as u64).sum();
    let mut names = vec!["u".to_string()];
    names.extend(s.vars.iter().map(|v| v.name.clone()));
    let mut weights = vec![deg_e];
    weights.extend(s.degrees());
    PolyRing::new(VarTable::new(names, weights).expect("u is fresh"), order)
}

/// The weighted DegRevLex u ring, and the block order that eliminates u.
pub fn u_rings(s: &GeneratorSet) -> (Arc<PolyRing>, Arc<PolyRing>) {
    (
        u_ring(s, MonomialOrder::DegRevLex),
        u_ring(
            s,
            MonomialOrder::Block {
                split: 1,
                rest: Box::new(MonomialOrder::DegRevLex),
            },
        ),
    )
}

fn shift(s: &GeneratorSet) -> Vec<Option<usize>> {
    (0..s.len()).map(|k| Some(k + 1)).collect()
}

/// QDet followed by E − u, in the given u ring.
pub fn saturation_basis(s: &GeneratorSet, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    let sh = shift(s);
    let mut gens: Vec<Polynomial> = quasiminors(s)
        .iter()
        .map(|f| f.poly.remap(ring, &sh).expect("shift is injective"))
        .collect();
    gens.push(e_minus_u(s, ring));
    gens
}

pub fn e_minus_u(s: &GeneratorSet, ring: &Arc<PolyRing>) -> Polynomial {
    let e = saturating_product_e(s).remap(&shift(s)).unwrap();
    Polynomial::binomial(ring, e, Monomial::var(0))
}

fn labels(s: &GeneratorSet) -> Vec<String> {
    let mut l: Vec<String> = quasiminors(s).iter().map(|f| format!("f{}_{}", f.i, f.j)).collect();
    l.push("E-u".into());
    l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub first: String,
    pub second: String,
    pub remainder: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub order: String,
    pub passed: bool,
    pub pairs_checked: usize,
    pub witness: Option<PairWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub kernel_columns: usize,
    pub lattice_generators: usize,
    pub saturated_generators: usize,
    pub ideal_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub r: u64,
    pub a: u64,
    pub mode: VerifyMode,
    pub generators: usize,
    pub quasiminors: usize,
    pub homogeneous: bool,
    pub phi_kills_qdet: bool,
    pub phi_witness: Option<String>,
    pub leading_terms_expected: bool,
    pub degrevlex: CheckSummary,
    pub block: CheckSummary,
    pub elimination_matches: bool,
    pub oracle: Option<OracleSummary>,
    pub passed: bool,
}

fn summarize(s: &GeneratorSet, ring: &Arc<PolyRing>) -> CheckSummary {
    let basis = IdealBasis::new(ring, saturation_basis(s, ring)).expect("same ring");
    let check = buchberger_check(&basis);
    let names = labels(s);
    CheckSummary {
        order: ring.order.describe(),
        passed: check.passed,
        pairs_checked: check.pairs_checked,
        witness: check.witness.map(|w| PairWitness {
            first: names[w.i].clone(),
            second: names[w.j].clone(),
            remainder: w.remainder.to_string(),
        }),
    }
}

fn same_set(a: &[Polynomial], b: &[Polynomial]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.contains(p)) && b.iter().all(|p| a.contains(p))
}

/// Binomials x^{v+} − x^{v−} from the SNF kernel basis of M.
pub fn lattice_ideal(s: &GeneratorSet) -> IdealBasis {
    let bundle = exponent_matrices(s);
    let cols = column_order(s);
    let ker = integer_kernel(&bundle.m);
    let gens = ker
        .columns()
        .iter()
        .map(|v| {
            let mut plus = Vec::new();
            let mut minus = Vec::new();
            for (pos, x) in v.iter().enumerate() {
                let e: u32 = x.abs().try_into().expect("small kernel entries");
                if x.is_positive() {
                    plus.push((cols[pos], e));
                } else if x.is_negative() {
                    minus.push((cols[pos], e));
                }
            }
            Polynomial::binomial(&s.z_ring, Monomial::from_pairs(plus), Monomial::from_pairs(minus))
        })
        .collect();
    IdealBasis::new(&s.z_ring, gens).unwrap()
}

/// Toric ideal recomputed from the lattice: I_L saturated by the product of all variables.
pub fn toric_oracle(s: &GeneratorSet, limits: Limits) -> Result<(IdealBasis, IdealBasis), ArtinError> {
    let il = lattice_ideal(s);
    let p = Monomial::from_pairs((0..s.len()).map(|k| (k, 1)));
    let sat = saturate_ideal(&il, &p, limits)?;
    Ok((il, sat))
}

pub fn verify_theorem(s: &GeneratorSet, mode: VerifyMode, limits: Limits) -> Result<TheoremReport, ArtinError> {
    let minors = quasiminors(s);
    let phi_witness = minors
        .iter()
        .find(|f| !s.phi(&f.poly).is_zero())
        .map(|f| f.poly.to_string());
    let homogeneous = minors.iter().all(|f| f.poly.is_homogeneous());
    let leading_terms_expected = minors
        .iter()
        .all(|f| f.poly.leading_monomial() == Some(&f.rhs) && f.poly.leading_coeff() == Some(&rational(-1)));

    let (drl, blk) = u_rings(s);
    let degrevlex = summarize(s, &drl);
    let block = summarize(s, &blk);
    let elimination_matches = match certified(&IdealBasis::new(&blk, saturation_basis(s, &blk))?) {
        Some(gb) => {
            let kept = eliminate(&gb, &[0])?;
            let back: Vec<Option<usize>> = std::iter::once(None).chain((0..s.len()).map(Some)).collect();
            let kept: Vec<Polynomial> = kept
                .generators()
                .iter()
                .map(|p| p.remap(&s.z_ring, &back))
                .collect::<Result<_, _>>()?;
            same_set(&kept, qdet_ideal(s).generators())
        }
        None => false,
    };

    let oracle = match mode {
        VerifyMode::BuchbergerOnly => None,
        VerifyMode::FullOracle => {
            let (il, sat) = toric_oracle(s, limits)?;
            Some(OracleSummary {
                kernel_columns: il.len(),
                lattice_generators: il.len(),
                saturated_generators: sat.len(),
                ideal_equal: ideal_equal(&sat, &qdet_ideal(s), limits)?,
            })
        }
    };
    let passed = phi_witness.is_none()
        && homogeneous
        && degrevlex.passed
        && block.passed
        && elimination_matches
        && oracle.as_ref().is_none_or(|o| o.ideal_equal);
    Ok(TheoremReport {
        r: s.group.r(),
        a: s.group.a(),
        mode,
        generators: s.len(),
        quasiminors: minors.len(),
        homogeneous,
        phi_kills_qdet: phi_witness.is_none(),
        phi_witness,
        leading_terms_expected,
        degrevlex,
        block,
        elimination_matches,
        oracle,
        passed,
    })
}

/// Position of a pair of quasiminors (i,j) < (k,ℓ) among the five closed-form shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairShape {
    /// i < j < k < ℓ
    Disjoint,
    /// i < k ≤ j < ℓ
    Interleaved,
    /// i = k < j < ℓ
    SameStart,
    /// i < k < j = ℓ
    SameEnd,
    /// i < k < ℓ < j
    Nested,
}

pub fn pair_shape(i: usize, j: usize, k: usize, l: usize) -> Option<PairShape> {
    if !(i < j && k < l && (i, j) < (k, l)) {
        return None;
    }
    Some(if i == k {
        PairShape::SameStart
    } else if j < k {
        PairShape::Disjoint
    } else if j < l {
        PairShape::Interleaved
    } else if j == l {
        PairShape::SameEnd
    } else {
        PairShape::Nested
    })
}

struct Entries<'a> {
    s: &'a GeneratorSet,
    q: QuasiMatrix,
}

impl Entries<'_> {
    fn a(&self, t: usize) -> usize {
        self.q.top[t - 1]
    }
    fn b(&self, t: usize) -> usize {
        self.q.bottom[t - 1]
    }
    fn w(&self, from: usize, to: usize) -> Vec<usize> {
        if to < from {
            Vec::new()
        } else {
            self.q.middle_product(from, to)
        }
    }
    fn mono(&self, parts: &[&[usize]]) -> Monomial {
        self.s.z_monomial(&parts.concat())
    }
    /// `second − first` as a polynomial.
    fn diff(&self, neg: Monomial, pos: Monomial) -> Polynomial {
        Polynomial::binomial(&self.s.z_ring, pos, neg)
    }
}

/// The S-polynomial of f_ij and f_kℓ written out term by term.
pub fn closed_form_s_polynomial(s: &GeneratorSet, (i, j): (usize, usize), (k, l): (usize, usize)) -> Option<Polynomial> {
    if (i, j) == (k, l) {
        return Some(Polynomial::zero(&s.z_ring));
    }
    let e = Entries { s, q: QuasiMatrix::new(s) };
    let (ai, bi, aj, bj, ak, bk, al, bl) = (e.a(i), e.b(i), e.a(j), e.b(j), e.a(k), e.b(k), e.a(l), e.b(l));
    Some(match pair_shape(i, j, k, l)? {
        PairShape::Disjoint => e.diff(
            e.mono(&[&[bk], &e.w(k, l - 1), &[al, ai, bj]]),
            e.mono(&[&[bi], &e.w(i, j - 1), &[aj, ak, bl]]),
        ),
        PairShape::Interleaved => e.diff(
            e.mono(&[&[bk], &e.w(j, l - 1), &[al, ai, bj]]),
            e.mono(&[&[bi], &e.w(i, k - 1), &[ak, bl, aj]]),
        ),
        PairShape::SameStart => e.diff(e.mono(&[&e.w(j, l - 1), &[al, ak, bj]]), e.mono(&[&[aj, ak, bl]])),
        PairShape::SameEnd => e.diff(e.mono(&[&[bk, ai, bl]]), e.mono(&[&[bi], &e.w(i, k - 1), &[ak, bl]])),
        PairShape::Nested => e.diff(
            e.mono(&[&[bk, al, ai, bj]]),
            e.mono(&[&[bi], &e.w(i, k - 1), &e.w(l, j - 1), &[aj, ak, bl]]),
        ),
    })
}

/// S(f_ij, E − u) = −u·a_i·b_j + b_i·W_i⋯W_{j−1}·a_j·E, in the DegRevLex u ring.
pub fn closed_form_s_with_e(s: &GeneratorSet, ring: &Arc<PolyRing>, i: usize, j: usize) -> Polynomial {
    let e = Entries { s, q: QuasiMatrix::new(s) };
    let sh = shift(s);
    let emono = saturating_product_e(s);
    let neg = e.mono(&[&[e.a(i), e.b(j)]]).remap(&sh).unwrap().mul(&Monomial::var(0));
    let pos = e
        .mono(&[&[e.b(i)], &e.w(i, j - 1), &[e.a(j)]])
        .mul(&emono)
        .remap(&sh)
        .unwrap();
    Polynomial::binomial(ring, pos, neg)
}

/// The quasiminors used, in order, to lead-reduce the S-polynomial of a pair to zero.
pub fn reduction_chain(i: usize, j: usize, k: usize, l: usize) -> Vec<(usize, usize)> {
    match pair_shape(i, j, k, l) {
        Some(PairShape::Disjoint) => vec![(k, l), (i, j)],
        Some(PairShape::Interleaved) => vec![(j, l), (i, k)],
        Some(PairShape::SameStart) => vec![(j, l)],
        Some(PairShape::SameEnd) => vec![(i, k)],
        Some(PairShape::Nested) => vec![(i, k), (l, j)],
        None => Vec::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOutcome {
    pub first: String,
    pub second: String,
    pub shape: Option<PairShape>,
    pub matches_closed_form: bool,
    pub steps: usize,
    pub reached_zero: bool,
}

fn follow_chain(mut p: Polynomial, chain: &[&Polynomial]) -> (usize, bool) {
    let mut steps = 0;
    for g in chain {
        if p.is_zero() {
            break;
        }
        match lead_reduce(&p, g) {
            Some(next) => {
                p = next;
                steps += 1;
            }
            None => return (steps, false),
        }
    }
    (steps, p.is_zero())
}

/// Every quasiminor pair and every (f_ij, E − u) pair: engine S-polynomial against the
/// closed form, then the stated lead-reduction chain.
pub fn s_pair_outcomes(s: &GeneratorSet) -> Vec<PairOutcome> {
    let minors = quasiminors(s);
    let find = |i: usize, j: usize| -> &QuasiMinor { minors.iter().find(|f| f.i == i && f.j == j).unwrap() };
    let mut out = Vec::new();
    for (x, f) in minors.iter().enumerate() {
        for g in &minors[x + 1..] {
            let sp = s_polynomial(&f.poly, &g.poly).expect("nonzero");
            let closed = closed_form_s_polynomial(s, (f.i, f.j), (g.i, g.j));
            let chain_ids = reduction_chain(f.i, f.j, g.i, g.j);
            let chain: Vec<&Polynomial> = chain_ids.iter().map(|&(a, b)| &find(a, b).poly).collect();
            let (steps, zero) = follow_chain(sp.clone(), &chain);
            out.push(PairOutcome {
                first: format!("f{}_{}", f.i, f.j),
                second: format!("f{}_{}", g.i, g.j),
                shape: pair_shape(f.i, f.j, g.i, g.j),
                matches_closed_form: closed.as_ref() == Some(&sp),
                steps,
                reached_zero: zero,
            });
        }
    }
    let ring = u_ring(s, MonomialOrder::DegRevLex);
    let sh = shift(s);
    let eu = e_minus_u(s, &ring);
    for f in &minors {
        let fu = f.poly.remap(&ring, &sh).unwrap();
        let sp = s_polynomial(&fu, &eu).expect("nonzero");
        let (steps, zero) = follow_chain(sp.clone(), &[&eu, &fu]);
        out.push(PairOutcome {
            first: format!("f{}_{}", f.i, f.j),
            second: "E-u".into(),
            shape: None,
            matches_closed_form: closed_form_s_with_e(s, &ring, f.i, f.j) == sp,
            steps,
            reached_zero: zero,
        });
    }
    out
}
