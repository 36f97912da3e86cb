use super::params::DeformationParams;
use super::DeformError;
use crate::artin::GeneratorSet;
use crate::poly::{Coeff, Monomial, MonomialOrder, PolyRing, Polynomial, VarTable};
use num_traits::One;
use serde::Serialize;
use std::sync::Arc;

/// One relation `positive − negative = λ_{step, lambda}` at dimension vector (1, …, 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformedRelation {
    pub step: usize,
    /// Second index j of λ_{i,j}.
    pub lambda: usize,
    /// l_i − l_{i−1} for the step, 0 when a = 1.
    pub d: usize,
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DeformedRelations {
    pub gens: GeneratorSet,
    pub relations: Vec<DeformedRelation>,
}

/// Concrete λ values, or one ring variable `lam{i}_{j}` per entry.
#[derive(Debug, Clone, Copy)]
pub enum Lambda<'a> {
    Concrete(&'a DeformationParams),
    Symbolic,
}

pub fn lambda_name(i: usize, j: usize) -> String {
    format!("lam{i}_{j}")
}

/// Arrow variables followed by `lam{i}_{j}` for every step, all of weight one.
pub fn symbolic_ring(s: &GeneratorSet) -> Arc<PolyRing> {
    let mut names: Vec<String> = s.quiver.arrows.iter().map(|a| a.label.clone()).collect();
    for (i, &b) in s.beta.iter().enumerate() {
        names.extend((0..b as usize).rev().map(|j| lambda_name(i + 1, j)));
    }
    PolyRing::new(VarTable::unweighted(names).expect("valid names"), MonomialOrder::DegRevLex)
}

impl DeformedRelations {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn step(&self, i: usize) -> impl Iterator<Item = &DeformedRelation> {
        self.relations.iter().filter(move |r| r.step == i)
    }

    /// The ring the relations live in for the given λ.
    pub fn ring(&self, lambda: Lambda<'_>) -> Arc<PolyRing> {
        match lambda {
            Lambda::Concrete(_) => self.gens.arrow_ring.clone(),
            Lambda::Symbolic => symbolic_ring(&self.gens),
        }
    }

    fn check(&self, lambda: Lambda<'_>) -> Result<(), DeformError> {
        if let Lambda::Concrete(p) = lambda {
            let want = DeformationParams::shape(self.gens.group);
            let got: Vec<usize> = p.steps().iter().map(Vec::len).collect();
            if want != got {
                return Err(DeformError::Shape { expected: want, got });
            }
        }
        Ok(())
    }

    fn lambda_poly(&self, ring: &Arc<PolyRing>, lambda: Lambda<'_>, i: usize, j: usize) -> Polynomial {
        match lambda {
            Lambda::Concrete(p) => Polynomial::constant(ring, p.get(i, j).clone()),
            Lambda::Symbolic => Polynomial::var_named(ring, &lambda_name(i, j)).expect("λ variable"),
        }
    }

    /// positive − negative − λ for every relation, with arrows commuting.
    pub fn polynomials(&self, lambda: Lambda<'_>) -> Result<Vec<Polynomial>, DeformError> {
        self.check(lambda)?;
        let ring = self.ring(lambda);
        let path = |p: &[usize]| {
            Polynomial::monomial(&ring, Coeff::one(), Monomial::from_pairs(p.iter().map(|&a| (a, 1))))
        };
        Ok(self
            .relations
            .iter()
            .map(|r| {
                path(&r.positive)
                    .sub(&path(&r.negative))
                    .sub(&self.lambda_poly(&ring, lambda, r.step, r.lambda))
            })
            .collect())
    }

    /// Sum of each step's relations with arrows commuting; equals −Σ_j λ_{i,j}.
    pub fn step_sums(&self, lambda: Lambda<'_>) -> Result<Vec<Polynomial>, DeformError> {
        let polys = self.polynomials(lambda)?;
        let ring = self.ring(lambda);
        Ok((1..=self.gens.m())
            .map(|i| {
                self.relations
                    .iter()
                    .zip(&polys)
                    .filter(|(r, _)| r.step == i)
                    .fold(Polynomial::zero(&ring), |acc, (_, p)| acc.add(p))
            })
            .collect())
    }

    /// `k1*c0_3*c3_2*c2_1 - c1_0*a0_1 = lam1_1` style lines.
    pub fn render(&self) -> Vec<String> {
        let q = &self.gens.quiver;
        let path = |p: &[usize]| q.labels(p).join("*");
        self.relations
            .iter()
            .map(|r| format!("{} - {} = {}", path(&r.positive), path(&r.negative), lambda_name(r.step, r.lambda)))
            .collect()
    }
}

/// Each step's relations read z_{i,j} − z_{i,j+1} = λ_{i,β_i−1−j} on the cycles, the last one
/// closing the ladder back to z_{i,0}.
pub fn deformed_relations(s: &GeneratorSet) -> DeformedRelations {
    let mut relations = Vec::new();
    let q = &s.quiver;
    for i in 1..=s.m() {
        let beta = s.beta[i - 1] as usize;
        let d = if q.is_degenerate() {
            0
        } else {
            q.tail_table[i] - q.tail_table[i - 1]
        };
        for j in 0..beta {
            relations.push(DeformedRelation {
                step: i,
                lambda: beta - 1 - j,
                d,
                positive: display_path(s, i, j),
                negative: display_path(s, i, (j + 1) % beta),
            });
        }
    }
    DeformedRelations {
        gens: s.clone(),
        relations,
    }
}

/// Cycle of z_{i,j} as displayed in the relations: the k arrow leads on the two ends of a ladder.
fn display_path(s: &GeneratorSet, i: usize, j: usize) -> Vec<usize> {
    let mut p = s.vars[s.idx(i, j)].path.clone();
    if !s.quiver.is_degenerate() && (j == 0 || j == s.s[i]) {
        p.rotate_right(1);
    }
    p
}

/// True when the relations at dimension vector (1, …, 1) have no solution, witnessed by a
/// step whose relations sum to a nonzero constant.
pub fn rep_variety_empty_check(rel: &DeformedRelations, lambda: &DeformationParams) -> Result<bool, DeformError> {
    Ok(rel
        .step_sums(Lambda::Concrete(lambda))?
        .iter()
        .any(|p| p.is_constant() && !p.is_zero()))
}

/// Replaces each λ_{i,0} by −Σ_{j≥1} λ_{i,j} in a polynomial over the symbolic ring.
pub fn impose_delta(s: &GeneratorSet, p: &Polynomial) -> Polynomial {
    let ring = p.ring().clone();
    let mut out = p.clone();
    for (i, &b) in s.beta.iter().enumerate() {
        let i = i + 1;
        let v0 = ring.vars.position(&lambda_name(i, 0)).expect("λ variable");
        let others = (1..b as usize).fold(Polynomial::zero(&ring), |acc, j| {
            acc.sub(&Polynomial::var_named(&ring, &lambda_name(i, j)).unwrap())
        });
        out = out.substitute(v0, &others);
    }
    out
}
