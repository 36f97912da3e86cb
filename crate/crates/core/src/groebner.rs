//! Reduction, S-polynomials, Buchberger's criterion and algorithm, elimination,
//! saturation and Krull dimension.

use crate::poly::{Coeff, Monomial, MonomialOrder, PolyError, PolyRing, Polynomial, VarTable};
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("resource cap exceeded: more than {limit} S-pairs processed")]
    ResourceCap { limit: usize },
    #[error("operation needs nonzero polynomials")]
    ZeroPolynomial,
    #[error("ideals or polynomials belong to different rings")]
    RingMismatch,
    #[error("basis is not known to be a Gröbner basis")]
    NotGroebner,
    #[error("order {order} does not eliminate the requested variables")]
    NotEliminationOrder { order: String },
    #[error("the sequential saturation route needs homogeneous generators")]
    NotHomogeneous,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Limits for Buchberger completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_pairs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_pairs: 100_000 }
    }
}

/// A list of nonzero generators in one ring, deduplicated up to scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        let mut out: Vec<Polynomial> = Vec::with_capacity(generators.len());
        let mut seen: Vec<Polynomial> = Vec::new();
        for g in generators {
            g.check_compatible(&Polynomial::zero(ring))
                .map_err(|_| GroebnerError::RingMismatch)?;
            if g.is_zero() {
                continue;
            }
            let key = g.monic();
            if !seen.contains(&key) {
                seen.push(key);
                out.push(g);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            generators: out,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    /// Moves every generator into `ring`, matching variables by name.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<IdealBasis, GroebnerError> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>, _>>()?;
        IdealBasis::new(ring, gens)
    }
}

/// An ideal basis together with what is known about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub basis: IdealBasis,
    pub is_groebner: bool,
    pub is_reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        self.basis.generators()
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.generators().iter().any(|g| g.is_constant())
    }
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, GroebnerError> {
    f.check_compatible(g).map_err(|_| GroebnerError::RingMismatch)?;
    let (cf, mf) = f.leading_term().map_err(|_| GroebnerError::ZeroPolynomial)?;
    let (cg, mg) = g.leading_term().map_err(|_| GroebnerError::ZeroPolynomial)?;
    let gamma = mf.lcm(mg);
    let left = f.mul_term(&cf.recip(), &mf.quotient_of(&gamma).unwrap());
    let right = g.mul_term(&cg.recip(), &mg.quotient_of(&gamma).unwrap());
    Ok(left.sub(&right))
}

/// One lead-reduction step of `f` by `g`, when LM(g) divides LM(f).
pub fn lead_reduce(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let (cf, mf) = f.leading_term().ok()?;
    let (cg, mg) = g.leading_term().ok()?;
    let q = mg.quotient_of(mf)?;
    Some(f.add_scaled(&-(cf / cg), &q, g))
}

struct Reducer<'a> {
    gens: Vec<&'a Polynomial>,
    lms: Vec<&'a Monomial>,
    masks: Option<Vec<u128>>,
}

impl<'a> Reducer<'a> {
    fn new(gens: impl IntoIterator<Item = &'a Polynomial>, nvars: usize) -> Self {
        let gens: Vec<&Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let lms: Vec<&Monomial> = gens.iter().map(|g| g.leading_monomial().unwrap()).collect();
        let masks = (nvars <= 128).then(|| lms.iter().map(|m| m.support_mask()).collect());
        Self { gens, lms, masks }
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        match &self.masks {
            Some(masks) => {
                let mm = m.support_mask();
                (0..self.gens.len()).find(|&k| masks[k] & !mm == 0 && self.lms[k].divides(m))
            }
            None => (0..self.gens.len()).find(|&k| self.lms[k].divides(m)),
        }
    }

    fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let ring = f.ring().clone();
        let mut rem: Vec<(Coeff, Monomial)> = Vec::new();
        let mut p = f.clone();
        while let Some((c, m)) = p.terms().first().cloned() {
            match self.find(&m) {
                Some(k) => {
                    let g = self.gens[k];
                    let q = self.lms[k].quotient_of(&m).unwrap();
                    p = p.add_scaled(&-(c / g.leading_coeff().unwrap()), &q, g);
                }
                None => {
                    rem.push((c, m));
                    let rest = p.terms()[1..].to_vec();
                    p = Polynomial::from_sorted_unchecked(&ring, rest);
                }
            }
        }
        Polynomial::from_sorted_unchecked(&ring, rem)
    }
}

/// Fully reduces `f` modulo `g`, choosing the first divisor in basis order.
pub fn normal_form(f: &Polynomial, g: &IdealBasis) -> Polynomial {
    Reducer::new(g.generators(), g.ring().nvars()).normal_form(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckWitness {
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchbergerCheck {
    pub passed: bool,
    pub pairs_checked: usize,
    pub witness: Option<CheckWitness>,
}

/// Checks Buchberger's criterion on every pair of generators. On failure the
/// first failing pair in `(i, j)` order is reported.
pub fn buchberger_check(g: &IdealBasis) -> BuchbergerCheck {
    let n = g.len();
    let reducer = Reducer::new(g.generators(), g.ring().nvars());
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let gens = g.generators();
    let witness = pairs.par_iter().find_map_first(|&(i, j)| {
        let s = s_polynomial(&gens[i], &gens[j]).expect("nonzero generators");
        let r = reducer.normal_form(&s);
        (!r.is_zero()).then_some(CheckWitness { i, j, remainder: r })
    });
    BuchbergerCheck {
        passed: witness.is_none(),
        pairs_checked: pairs.len(),
        witness,
    }
}

/// Wraps a basis already certified by [`buchberger_check`].
pub fn certified(g: &IdealBasis) -> Option<GroebnerBasis> {
    buchberger_check(g).passed.then(|| GroebnerBasis {
        basis: g.clone(),
        is_groebner: true,
        is_reduced: is_reduced(g),
    })
}

/// Monic generators, and no term of any generator divisible by another's leading monomial.
pub fn is_reduced(g: &IdealBasis) -> bool {
    let gens = g.generators();
    gens.iter().enumerate().all(|(i, f)| {
        f.leading_coeff().is_some_and(One::is_one)
            && f.terms().iter().all(|(_, m)| {
                gens.iter()
                    .enumerate()
                    .all(|(j, h)| j == i || !h.leading_monomial().unwrap().divides(m))
            })
    })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger completion with the normal selection strategy and the
/// Gebauer–Möller criteria; returns the reduced Gröbner basis.
pub fn buchberger_complete(g: &IdealBasis, limits: Limits) -> Result<GroebnerBasis, GroebnerError> {
    let ring = g.ring().clone();
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut processed = 0usize;

    let mut seeds: Vec<Polynomial> = g.generators().iter().map(|p| p.monic()).collect();
    seeds.sort_by(|a, b| ring.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    for h in seeds {
        let reducer = Reducer::new(active_iter(&polys, &active), ring.nvars());
        let h = reducer.normal_form(&h);
        if h.is_zero() {
            continue;
        }
        update(&mut polys, &mut active, &mut pairs, h.monic());
    }

    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| ring.compare(&pairs[a].lcm, &pairs[b].lcm))
            .unwrap();
        let p = pairs.swap_remove(k);
        processed += 1;
        if processed > limits.max_pairs {
            return Err(GroebnerError::ResourceCap { limit: limits.max_pairs });
        }
        let s = s_polynomial(&polys[p.i], &polys[p.j])?;
        let reducer = Reducer::new(active_iter(&polys, &active), ring.nvars());
        let h = reducer.normal_form(&s);
        if !h.is_zero() {
            update(&mut polys, &mut active, &mut pairs, h.monic());
        }
    }

    let basis: Vec<Polynomial> = active_iter(&polys, &active).cloned().collect();
    Ok(reduce_basis(&ring, basis))
}

fn active_iter<'a>(polys: &'a [Polynomial], active: &'a [bool]) -> impl Iterator<Item = &'a Polynomial> {
    polys.iter().zip(active).filter(|(_, &a)| a).map(|(p, _)| p)
}

fn update(
    polys: &mut Vec<Polynomial>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Polynomial,
) {
    let hn = polys.len();
    let lh = h.leading_monomial().unwrap().clone();
    let lm = |k: usize, polys: &Vec<Polynomial>| polys[k].leading_monomial().unwrap().clone();

    let cands: Vec<(usize, Monomial)> = (0..hn)
        .filter(|&k| active[k])
        .map(|k| (k, lh.lcm(&lm(k, polys))))
        .collect();
    // Chain criterion among the new pairs.
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    for (idx, (k, l)) in cands.iter().enumerate() {
        let coprime = lh.is_coprime(&lm(*k, polys));
        let dominated = cands.iter().enumerate().any(|(idx2, (_, l2))| {
            idx2 != idx && l2.divides(l) && (l2 != l || idx2 < idx)
        });
        if coprime || !dominated {
            kept.push((*k, l.clone()));
        }
    }
    kept.retain(|(k, _)| !lh.is_coprime(&lm(*k, polys)));
    // Old pairs made redundant by h.
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(&lm(p.i, polys)) != p.lcm
            && lh.lcm(&lm(p.j, polys)) != p.lcm)
    });
    for (k, l) in kept {
        pairs.push(Pair { i: k, j: hn, lcm: l });
    }
    for (k, alive) in active.iter_mut().enumerate().take(hn) {
        if *alive && lh.divides(&lm(k, polys)) {
            *alive = false;
        }
    }
    polys.push(h);
    active.push(true);
}

/// Minimalises and interreduces a Gröbner basis; output sorted by decreasing leading monomial.
fn reduce_basis(ring: &Arc<PolyRing>, basis: Vec<Polynomial>) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = basis.into_iter().map(|p| p.monic()).collect();
    basis.sort_by(|a, b| ring.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in basis {
        let lp = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lp)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others = minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q);
        let reducer = Reducer::new(others, ring.nvars());
        let p = &minimal[i];
        let (c, m) = p.terms()[0].clone();
        let tail = Polynomial::from_sorted_unchecked(ring, p.terms()[1..].to_vec());
        let head = Polynomial::monomial(ring, c, m);
        reduced.push(head.add(&reducer.normal_form(&tail)));
    }
    reduced.sort_by(|a, b| ring.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    GroebnerBasis {
        basis: IdealBasis {
            ring: ring.clone(),
            generators: reduced,
        },
        is_groebner: true,
        is_reduced: true,
    }
}

/// Keeps the generators free of `vars`; valid when `g` is a Gröbner basis under
/// an order that eliminates `vars`.
pub fn eliminate(g: &GroebnerBasis, vars: &[usize]) -> Result<IdealBasis, GroebnerError> {
    if !g.is_groebner {
        return Err(GroebnerError::NotGroebner);
    }
    let ring = g.basis.ring();
    if !ring.order.eliminates(vars, ring.nvars()) {
        return Err(GroebnerError::NotEliminationOrder {
            order: ring.order.describe(),
        });
    }
    let kept = g
        .generators()
        .iter()
        .filter(|p| vars.iter().all(|&v| !p.involves(v)))
        .cloned()
        .collect();
    IdealBasis::new(ring, kept)
}

/// Ring with `u` prepended, ordered by a block order with `u` in the first block.
fn ring_with_u(ring: &Arc<PolyRing>, u_weight: u64) -> Result<Arc<PolyRing>, GroebnerError> {
    let mut names = vec![fresh_name(ring)];
    names.extend(ring.vars.names().iter().cloned());
    let mut weights = vec![u_weight];
    weights.extend_from_slice(ring.vars.weights());
    Ok(PolyRing::new(
        VarTable::new(names, weights)?,
        MonomialOrder::Block {
            split: 1,
            rest: Box::new(ring.order.clone()),
        },
    ))
}

fn fresh_name(ring: &PolyRing) -> String {
    let mut name = "u".to_string();
    while ring.vars.position(&name).is_some() {
        name.push('_');
    }
    name
}

/// (I : m^∞) through I + (1 − u·m) and elimination of u.
pub fn saturate_rabinowitsch(i: &IdealBasis, m: &Monomial, limits: Limits) -> Result<IdealBasis, GroebnerError> {
    let ring = i.ring();
    let big = ring_with_u(ring, 1)?;
    let shift: Vec<Option<usize>> = (0..ring.nvars()).map(|k| Some(k + 1)).collect();
    let mut gens = i
        .generators()
        .iter()
        .map(|g| g.remap(&big, &shift))
        .collect::<Result<Vec<_>, _>>()?;
    let um = m.remap(&shift).ok_or(GroebnerError::RingMismatch)?.mul(&Monomial::var(0));
    gens.push(Polynomial::from_terms(
        &big,
        vec![(Coeff::one(), Monomial::one()), (-Coeff::one(), um)],
    ));
    let gb = buchberger_complete(&IdealBasis::new(&big, gens)?, limits)?;
    let elim = eliminate(&gb, &[0])?;
    let back: Vec<Option<usize>> = std::iter::once(None).chain((0..ring.nvars()).map(Some)).collect();
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.remap(ring, &back))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(buchberger_complete(&IdealBasis::new(ring, gens)?, limits)?.basis)
}

/// (I : m^∞) for weighted-homogeneous I, one variable at a time: under DegRevLex
/// with x last, (I : x^∞) is generated by the reduced basis divided by powers of x.
pub fn saturate_sequential(i: &IdealBasis, m: &Monomial, limits: Limits) -> Result<IdealBasis, GroebnerError> {
    let ring = i.ring().clone();
    if !i.generators().iter().all(|g| g.is_homogeneous()) {
        return Err(GroebnerError::NotHomogeneous);
    }
    let n = ring.nvars();
    let mut current: Vec<Polynomial> = i.generators().to_vec();
    for (x, _) in m.iter() {
        // Permute so that x is the last variable.
        let perm: Vec<usize> = (0..n).filter(|&k| k != x).chain(std::iter::once(x)).collect();
        let mut to_new = vec![None; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = Some(new);
        }
        let names = perm.iter().map(|&k| ring.vars.name(k).to_string()).collect();
        let weights = perm.iter().map(|&k| ring.vars.weights()[k]).collect();
        let pr = PolyRing::new(VarTable::new(names, weights)?, MonomialOrder::DegRevLex);
        let gens = current
            .iter()
            .map(|g| g.remap(&pr, &to_new))
            .collect::<Result<Vec<_>, _>>()?;
        let gb = buchberger_complete(&IdealBasis::new(&pr, gens)?, limits)?;
        let back: Vec<Option<usize>> = perm.iter().map(|&k| Some(k)).collect();
        current = gb
            .generators()
            .iter()
            .map(|g| {
                let k = g.terms().iter().map(|(_, t)| t.exponent(n - 1)).min().unwrap_or(0);
                let divided: Vec<_> = g
                    .terms()
                    .iter()
                    .map(|(c, t)| {
                        let (rest, e) = t.split_var(n - 1);
                        (c.clone(), rest.mul(&Monomial::var_pow(n - 1, e - k)))
                    })
                    .collect();
                Polynomial::from_terms(&pr, divided).remap(&ring, &back)
            })
            .collect::<Result<Vec<_>, _>>()?;
    }
    Ok(buchberger_complete(&IdealBasis::new(&ring, current)?, limits)?.basis)
}

/// (I : m^∞): the sequential route for homogeneous ideals, otherwise Rabinowitsch.
pub fn saturate_ideal(i: &IdealBasis, m: &Monomial, limits: Limits) -> Result<IdealBasis, GroebnerError> {
    if i.generators().iter().all(|g| g.is_homogeneous()) {
        saturate_sequential(i, m, limits)
    } else {
        saturate_rabinowitsch(i, m, limits)
    }
}

pub fn ideal_equal(i: &IdealBasis, j: &IdealBasis, limits: Limits) -> Result<bool, GroebnerError> {
    if !crate::poly::Polynomial::zero(i.ring()).check_compatible(&Polynomial::zero(j.ring())).is_ok() {
        return Err(GroebnerError::RingMismatch);
    }
    let a = buchberger_complete(i, limits)?;
    let b = buchberger_complete(j, limits)?;
    Ok(a.generators() == b.generators())
}

/// Dimension of the quotient ring, or `Empty` for the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Empty,
    Dim(usize),
}

pub fn krull_dimension(i: &IdealBasis, limits: Limits) -> Result<Dimension, GroebnerError> {
    let gb = buchberger_complete(i, limits)?;
    if gb.is_unit() {
        return Ok(Dimension::Empty);
    }
    let n = i.ring().nvars();
    assert!(n <= 128, "dimension search supports at most 128 variables");
    let masks: Vec<u128> = gb.generators().iter().map(|g| g.leading_monomial().unwrap().support_mask()).collect();
    Ok(Dimension::Dim(max_independent(&masks, n)))
}

/// Largest set S of variables such that no mask is contained in S.
fn max_independent(masks: &[u128], n: usize) -> usize {
    fn go(k: usize, n: usize, set: u128, size: usize, best: &mut usize, masks: &[u128]) {
        if size + (n - k) <= *best {
            return;
        }
        if k == n {
            *best = size;
            return;
        }
        let with = set | (1u128 << k);
        if !masks.iter().any(|&m| m & !with == 0) {
            go(k + 1, n, with, size + 1, best, masks);
        }
        go(k + 1, n, set, size, best, masks);
    }
    let mut best = 0;
    go(0, n, 0, 0, &mut best, masks);
    best
}

impl Polynomial {
    /// Internal constructor for term lists already sorted and merged.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<PolyRing>, terms: Vec<(Coeff, Monomial)>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial::from_terms_sorted(ring, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use proptest::prelude::*;

    fn ring(names: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
        PolyRing::new(VarTable::unweighted(names.iter().copied()).unwrap(), order)
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = ring(&["x", "y", "z"], MonomialOrder::Lex);
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let check = buchberger_check(&i);
        assert!(!check.passed);
        let w = check.witness.unwrap();
        assert_eq!((w.i, w.j), (0, 1));
        let gb = buchberger_complete(&i, Limits::default()).unwrap();
        assert_eq!(gb.basis.to_strings(), vec!["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);
        assert!(buchberger_check(&gb.basis).passed);
        assert!(is_reduced(&gb.basis));
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let g = ideal(&r, &["x*y - 1"]);
        let f = parse_polynomial(&r, "x*y").unwrap();
        assert!(normal_form(&g.generators()[0], &g).is_zero());
        assert_eq!(normal_form(&f, &g).to_string(), "1");
        let one = Polynomial::one(&r);
        assert_eq!(normal_form(&one, &g), one);
        assert!(buchberger_check(&g).passed);
    }

    #[test]
    fn elimination() {
        let r = PolyRing::new(
            VarTable::unweighted(["t", "x", "y"]).unwrap(),
            MonomialOrder::Block {
                split: 1,
                rest: Box::new(MonomialOrder::DegRevLex),
            },
        );
        let i = ideal(&r, &["x - t^2", "y - t^3"]);
        let gb = buchberger_complete(&i, Limits::default()).unwrap();
        let e = eliminate(&gb, &[0]).unwrap();
        assert_eq!(e.to_strings(), vec!["x^3 - y^2"]);
        assert_eq!(eliminate(&gb, &[]).unwrap(), gb.basis);
        assert!(eliminate(&gb, &[0, 1, 2]).unwrap().is_empty());
        let drl = ring(&["t", "x", "y"], MonomialOrder::DegRevLex);
        let gb2 = buchberger_complete(&ideal(&drl, &["x - t^2"]), Limits::default()).unwrap();
        assert!(matches!(eliminate(&gb2, &[0]), Err(GroebnerError::NotEliminationOrder { .. })));
    }

    #[test]
    fn saturation() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let i = ideal(&r, &["x*y"]);
        let x = Monomial::var(0);
        for route in [saturate_rabinowitsch, saturate_sequential] {
            let s = route(&i, &x, Limits::default()).unwrap();
            assert_eq!(s.to_strings(), vec!["y"]);
        }
        let r3 = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
        let i = ideal(&r3, &["x*z - y^2", "x^2*y - z^3"]);
        let m = Monomial::from_dense(&[1, 1, 1]);
        let a = saturate_rabinowitsch(&i, &m, Limits::default()).unwrap();
        let b = saturate_sequential(&i, &m, Limits::default()).unwrap();
        assert!(ideal_equal(&a, &b, Limits::default()).unwrap());
    }

    #[test]
    fn ideal_equality() {
        let r = ring(&["x", "y"], MonomialOrder::DegRevLex);
        let l = Limits::default();
        assert!(ideal_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "x + y"]), l).unwrap());
        assert!(!ideal_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"]), l).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
        let l = Limits::default();
        assert_eq!(krull_dimension(&IdealBasis::new(&r, vec![]).unwrap(), l).unwrap(), Dimension::Dim(3));
        assert_eq!(krull_dimension(&ideal(&r, &["x*y", "x*z"]), l).unwrap(), Dimension::Dim(2));
        assert_eq!(krull_dimension(&ideal(&r, &["x", "x - 1"]), l).unwrap(), Dimension::Empty);
    }

    #[test]
    fn resource_cap_is_hard() {
        let r = ring(&["x", "y", "z"], MonomialOrder::Lex);
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let e = buchberger_complete(&i, Limits { max_pairs: 1 });
        assert_eq!(e, Err(GroebnerError::ResourceCap { limit: 1 }));
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
        prop::collection::vec((-3i64..4, prop::collection::vec(0u32..3, 3)), 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn completion_properties(gens in prop::collection::vec(small_poly(), 1..4), f in small_poly()) {
            let r = ring(&["x", "y", "z"], MonomialOrder::DegRevLex);
            let mk = |t: Vec<(i64, Vec<u32>)>| Polynomial::from_terms(&r, t.into_iter().map(|(c, e)| (crate::poly::rational(c), Monomial::from_dense(&e))).collect());
            let i = IdealBasis::new(&r, gens.into_iter().map(mk).collect()).unwrap();
            let f = mk(f);
            if let Ok(gb) = buchberger_complete(&i, Limits { max_pairs: 2000 }) {
                prop_assert!(buchberger_check(&gb.basis).passed);
                prop_assert!(is_reduced(&gb.basis));
                let again = buchberger_complete(&gb.basis, Limits::default()).unwrap();
                prop_assert_eq!(&again.basis, &gb.basis);
                for g in i.generators() {
                    prop_assert!(normal_form(g, &gb.basis).is_zero());
                }
                let nf = normal_form(&f, &gb.basis);
                prop_assert_eq!(normal_form(&nf, &gb.basis), nf.clone());
                prop_assert!(normal_form(&f.sub(&nf), &gb.basis).is_zero());
            }
        }
    }
}
