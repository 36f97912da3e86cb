use super::params::DeformationParams;
use super::DeformError;
use crate::artin::{qdet_ideal, GeneratorSet};
use crate::groebner::{krull_dimension, Dimension, IdealBasis, Limits};
use crate::poly::{Coeff, MonomialOrder, PolyRing, Polynomial, VarTable};
use std::sync::Arc;

fn check(s: &GeneratorSet, lambda: &DeformationParams) -> Result<(), DeformError> {
    let want = DeformationParams::shape(s.group);
    let got: Vec<usize> = lambda.steps().iter().map(Vec::len).collect();
    if want != got {
        return Err(DeformError::Shape { expected: want, got });
    }
    if !lambda.in_delta() {
        return Err(DeformError::NotInDelta);
    }
    Ok(())
}

/// z_{i,j} − z_{i,j+1} − λ_{i,β_i−1−j} for 0 ≤ j ≤ β_i − 2.
pub fn fiber_relations(s: &GeneratorSet, lambda: &DeformationParams) -> Result<Vec<Polynomial>, DeformError> {
    check(s, lambda)?;
    let ring = &s.z_ring;
    let z = |i, j| Polynomial::var(ring, s.idx(i, j));
    let mut out = Vec::new();
    for i in 1..=s.m() {
        let beta = s.beta[i - 1] as usize;
        let mut sum = Polynomial::zero(ring);
        for j in 0..beta - 1 {
            let rel = z(i, j)
                .sub(&z(i, j + 1))
                .sub(&Polynomial::constant(ring, lambda.get(i, beta - 1 - j).clone()));
            sum = sum.add(&rel);
            out.push(rel);
        }
        let closing = z(i, beta - 1)
            .sub(&z(i, 0))
            .sub(&Polynomial::constant(ring, lambda.get(i, 0).clone()));
        if !sum.add(&closing).is_zero() {
            return Err(DeformError::ClosingRelation { step: i });
        }
    }
    Ok(out)
}

/// QDet together with the fiber relations over λ.
pub fn pi_fiber_ideal(s: &GeneratorSet, lambda: &DeformationParams) -> Result<IdealBasis, DeformError> {
    let mut gens = qdet_ideal(s).generators().to_vec();
    gens.extend(fiber_relations(s, lambda)?);
    Ok(IdealBasis::new(&s.z_ring, gens)?)
}

/// The fiber after solving the linear relations: z_{i,j} = z_{i,s_i} + Σ_{t=j}^{s_i−1} λ_{i,β_i−1−t},
/// leaving z_{0,0}, z_{i,s_i} and z_{m+1,0}.
pub fn reduced_fiber(s: &GeneratorSet, lambda: &DeformationParams) -> Result<IdealBasis, DeformError> {
    check(s, lambda)?;
    let m = s.m();
    let kept: Vec<usize> = std::iter::once(s.idx(0, 0))
        .chain((1..=m).map(|i| s.idx(i, s.s[i])))
        .chain(std::iter::once(s.idx(m + 1, 0)))
        .collect();
    let ring: Arc<PolyRing> = PolyRing::new(
        VarTable::new(
            kept.iter().map(|&k| s.name(k).to_string()).collect(),
            kept.iter().map(|&k| s.vars[k].degree).collect(),
        )?,
        MonomialOrder::DegRevLex,
    );
    let map: Vec<Option<usize>> = (0..s.len()).map(|k| kept.iter().position(|&x| x == k)).collect();
    let lift = |k: usize| -> Polynomial {
        let v = &s.vars[k];
        let base = Polynomial::var(&ring, map[s.idx(v.i, s.s[v.i])].unwrap());
        if map[k].is_some() {
            return base;
        }
        let beta = s.beta[v.i - 1] as usize;
        let shift: Coeff = (v.j..s.s[v.i]).map(|t| lambda.get(v.i, beta - 1 - t).clone()).sum();
        base.add(&Polynomial::constant(&ring, shift))
    };
    let images: Vec<Polynomial> = (0..s.len()).map(lift).collect();
    let gens = qdet_ideal(s)
        .generators()
        .iter()
        .map(|f| {
            f.terms().iter().fold(Polynomial::zero(&ring), |acc, (c, mono)| {
                let term = mono
                    .iter()
                    .fold(Polynomial::constant(&ring, c.clone()), |t, (v, e)| t.mul(&images[v].pow(e)));
                acc.add(&term)
            })
        })
        .collect();
    Ok(IdealBasis::new(&ring, gens)?)
}

fn as_usize(d: Dimension) -> Option<usize> {
    match d {
        Dimension::Empty => None,
        Dimension::Dim(k) => Some(k),
    }
}

/// Krull dimension of the fiber, computed on the reduced presentation. `None` means empty.
pub fn fiber_dimension(s: &GeneratorSet, lambda: &DeformationParams, limits: Limits) -> Result<Option<usize>, DeformError> {
    Ok(as_usize(krull_dimension(&reduced_fiber(s, lambda)?, limits)?))
}

/// Krull dimension of the unreduced fiber ideal, for cross-checking.
pub fn fiber_dimension_direct(
    s: &GeneratorSet,
    lambda: &DeformationParams,
    limits: Limits,
) -> Result<Option<usize>, DeformError> {
    Ok(as_usize(krull_dimension(&pi_fiber_ideal(s, lambda)?, limits)?))
}

/// π at a point over the generators: (α_{i,0} − α_{i,1}, …, α_{i,β_i−1} − α_{i,0}) per step.
pub fn pi_map_eval(s: &GeneratorSet, point: &[Coeff]) -> Result<DeformationParams, DeformError> {
    if point.len() != s.len() {
        return Err(DeformError::PointDimension {
            expected: s.len(),
            got: point.len(),
        });
    }
    let steps = (1..=s.m())
        .map(|i| {
            let beta = s.beta[i - 1] as usize;
            (0..beta)
                .map(|j| &point[s.idx(i, j)] - &point[s.idx(i, (j + 1) % beta)])
                .collect()
        })
        .collect();
    DeformationParams::new(s.group, steps)
}
