use super::params::DeformationParams;
use super::relations::{deformed_relations, impose_delta, Lambda};
use super::DeformError;
use crate::artin::GeneratorSet;
use crate::groebner::{krull_dimension, Dimension, IdealBasis, Limits};
use crate::poly::{Coeff, MonomialOrder, PolyRing, Polynomial, VarTable};
use num_traits::{One, Zero};
use serde::Serialize;
use std::sync::Arc;

/// How the substitution engine picks the next arrow to solve for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveRule {
    /// A relation with exactly one unsolved arrow, linear with constant coefficient.
    Triangular,
    /// Any unsolved arrow that occurs linearly with constant coefficient in some relation.
    Greedy,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    pub index: Option<usize>,
    pub units: Vec<String>,
    pub coordinates: Vec<String>,
    /// Arrow → expression in the coordinates (and λ), in the order solved.
    pub solved: Vec<(String, Polynomial)>,
    /// Arrows neither normalized nor solved for.
    pub free: Vec<String>,
    pub residual: Vec<Polynomial>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChartJson {
    pub index: Option<usize>,
    pub units: Vec<String>,
    pub coordinates: Vec<String>,
    pub solved: Vec<(String, String)>,
    pub free: Vec<String>,
    pub residual: Vec<String>,
    pub certified: bool,
}

impl Chart {
    /// Affine plane: every arrow is normalized or solved, two are free, and nothing remains.
    pub fn is_affine_plane(&self) -> bool {
        self.residual.is_empty() && self.free.len() == 2
    }

    /// The residual relations as an ideal in the free arrows.
    pub fn residual_ideal(&self) -> Result<IdealBasis, DeformError> {
        let ring = PolyRing::new(VarTable::unweighted(self.free.clone())?, MonomialOrder::DegRevLex);
        let gens = self
            .residual
            .iter()
            .map(|p| p.to_ring(&ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealBasis::new(&ring, gens)?)
    }

    pub fn to_json(&self) -> ChartJson {
        ChartJson {
            index: self.index,
            units: self.units.clone(),
            coordinates: self.coordinates.clone(),
            solved: self.solved.iter().map(|(a, p)| (a.clone(), p.to_string())).collect(),
            free: self.free.clone(),
            residual: self.residual.iter().map(|p| p.to_string()).collect(),
            certified: self.is_affine_plane(),
        }
    }
}

/// Normalized arrows and coordinate pair of chart `t`.
pub fn chart_layout(s: &GeneratorSet, t: usize) -> Result<(Vec<String>, Vec<String>), DeformError> {
    let q = &s.quiver;
    let label = |a: usize| q.arrows[a].label.clone();
    if q.is_degenerate() {
        let last = q.k(s.m());
        return match t {
            1 => Ok((vec!["c1".into()], vec!["a1".into(), "c2".into()])),
            2 => Ok((vec!["c2".into()], vec!["c1".into(), label(last)])),
            _ => Err(DeformError::ChartIndex(t)),
        };
    }
    let n = q.n;
    if t > n {
        return Err(DeformError::ChartIndex(t));
    }
    let mut units: Vec<String> = Vec::new();
    if t < n {
        units.extend(q.clockwise_path(0, t + 1).into_iter().map(label));
    }
    if t > 0 {
        units.extend(q.anticlockwise_path(0, t).into_iter().map(label));
    }
    let coords = if t == n {
        vec![label(q.clockwise_from(0)), label(q.anticlockwise_from(n))]
    } else {
        vec![label(q.clockwise_from(t + 1)), label(q.anticlockwise_from(t))]
    };
    Ok((units, coords))
}

pub fn chart_indices(s: &GeneratorSet) -> Vec<usize> {
    if s.quiver.is_degenerate() {
        vec![1, 2]
    } else {
        (0..=s.quiver.n).collect()
    }
}

/// Relations in the ring for `lambda`, with Δ imposed when λ is symbolic.
fn prepared(s: &GeneratorSet, lambda: Lambda<'_>) -> Result<Vec<Polynomial>, DeformError> {
    if let Lambda::Concrete(p) = lambda {
        if !p.in_delta() {
            return Err(DeformError::NotInDelta);
        }
    }
    let polys = deformed_relations(s).polynomials(lambda)?;
    Ok(match lambda {
        Lambda::Symbolic => polys.iter().map(|p| impose_delta(s, p)).collect(),
        Lambda::Concrete(_) => polys,
    })
}

/// The triangular substitution on chart `t`.
pub fn chart_eliminate(s: &GeneratorSet, t: usize, lambda: Lambda<'_>) -> Result<Chart, DeformError> {
    let (units, coords) = chart_layout(s, t)?;
    let relations = prepared(s, lambda)?;
    let mut chart = run_engine(s, relations, &units, &coords, SolveRule::Triangular)?;
    chart.index = Some(t);
    Ok(chart)
}

/// The same engine with caller-chosen normalized arrows and greedy solving.
pub fn chart_eliminate_custom(
    s: &GeneratorSet,
    units: &[&str],
    lambda: &DeformationParams,
) -> Result<Chart, DeformError> {
    let units: Vec<String> = units.iter().map(|u| u.to_string()).collect();
    for u in &units {
        if s.quiver.arrow_index(u).is_none() {
            return Err(DeformError::UnknownArrow(u.clone()));
        }
    }
    let relations = prepared(s, Lambda::Concrete(lambda))?;
    run_engine(s, relations, &units, &[], SolveRule::Greedy)
}

fn constant_coefficient(p: &Polynomial, var: usize) -> Option<(Coeff, Polynomial)> {
    if p.degree_in(var) != 1 {
        return None;
    }
    let (coef, rest) = p.linear_split(var)?;
    (coef.is_constant() && !coef.is_zero()).then(|| (coef.constant_term(), rest))
}

fn run_engine(
    s: &GeneratorSet,
    mut relations: Vec<Polynomial>,
    units: &[String],
    coords: &[String],
    rule: SolveRule,
) -> Result<Chart, DeformError> {
    let ring: Arc<PolyRing> = relations
        .first()
        .map(|p| p.ring().clone())
        .unwrap_or_else(|| s.arrow_ring.clone());
    let pos = |name: &String| ring.vars.position(name).ok_or_else(|| DeformError::UnknownArrow(name.clone()));
    let one = Polynomial::one(&ring);
    for u in units {
        let v = pos(u)?;
        relations = relations.iter().map(|p| p.substitute(v, &one)).collect();
    }
    let fixed: Vec<usize> = units.iter().chain(coords).map(pos).collect::<Result<_, _>>()?;
    let mut unknown: Vec<usize> = (0..s.quiver.arrows.len()).filter(|a| !fixed.contains(a)).collect();
    let mut solved: Vec<(usize, Polynomial)> = Vec::new();

    loop {
        relations.retain(|p| !p.is_zero());
        let mut seen: Vec<Polynomial> = Vec::new();
        relations.retain(|p| {
            let key = p.monic();
            let fresh = !seen.contains(&key);
            seen.push(key);
            fresh
        });
        if let Some(bad) = relations.iter().find(|p| p.is_constant()) {
            return Err(DeformError::Inconsistent {
                relation: bad.to_string(),
            });
        }
        let pick = relations.iter().enumerate().find_map(|(k, p)| {
            let vars: Vec<usize> = p.variables().into_iter().filter(|v| unknown.contains(v)).collect();
            match rule {
                SolveRule::Triangular if vars.len() == 1 => {
                    constant_coefficient(p, vars[0]).map(|(c, rest)| (k, vars[0], c, rest))
                }
                SolveRule::Triangular => None,
                SolveRule::Greedy => vars
                    .iter()
                    .find_map(|&v| constant_coefficient(p, v).map(|(c, rest)| (k, v, c, rest))),
            }
        });
        let Some((k, var, coef, rest)) = pick else {
            break;
        };
        let value = rest.scale(&(-Coeff::one() / coef));
        relations.remove(k);
        relations = relations.iter().map(|p| p.substitute(var, &value)).collect();
        for (_, e) in solved.iter_mut() {
            *e = e.substitute(var, &value);
        }
        solved.push((var, value));
        unknown.retain(|&v| v != var);
    }

    if rule == SolveRule::Triangular && !unknown.is_empty() {
        return Err(DeformError::EliminationStuck {
            unsolved: unknown.iter().map(|&v| ring.vars.name(v).to_string()).collect(),
        });
    }
    let name = |v: usize| ring.vars.name(v).to_string();
    let mut free: Vec<String> = coords.to_vec();
    free.extend(unknown.iter().map(|&v| name(v)));
    Ok(Chart {
        index: None,
        units: units.to_vec(),
        coordinates: coords.to_vec(),
        solved: solved.into_iter().map(|(v, p)| (name(v), p)).collect(),
        free,
        residual: relations,
    })
}

/// Whether the point is a singular point of V(I): the Jacobian rank there is below the
/// codimension of V(I).
pub fn jacobian_singular_at(i: &IdealBasis, point: &[Coeff], limits: Limits) -> Result<bool, DeformError> {
    let n = i.ring().nvars();
    if point.len() != n {
        return Err(DeformError::PointDimension { expected: n, got: point.len() });
    }
    if i.generators().iter().any(|g| !g.evaluate(point).is_zero()) {
        return Err(DeformError::NotOnVariety);
    }
    let dim = match krull_dimension(i, limits)? {
        Dimension::Empty => return Err(DeformError::NotOnVariety),
        Dimension::Dim(d) => d,
    };
    let jac: Vec<Vec<Coeff>> = i
        .generators()
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v).evaluate(point)).collect())
        .collect();
    Ok(rational_rank(jac) < n - dim)
}

fn rational_rank(mut m: Vec<Vec<Coeff>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                let row = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}
