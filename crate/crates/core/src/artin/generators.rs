use crate::combinatorics::{build_quiver, hj_dual, ij_series, GroupParams, Quiver};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, VarTable};
use serde::Serialize;
use std::sync::Arc;

use super::ArtinError;

/// One generator z_{i,j} of the invariant ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZVar {
    pub i: usize,
    pub j: usize,
    pub name: String,
    pub degree: u64,
    /// The closed walk in the quiver, as arrow indices.
    pub path: Vec<usize>,
    /// Exponent vector of the walk over the arrow ring.
    #[serde(skip)]
    pub image: Monomial,
}

/// The generators z_{i,j}, their images as cycles, and the rings they live in.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub group: GroupParams,
    pub quiver: Quiver,
    pub beta: Vec<u64>,
    pub vars: Vec<ZVar>,
    /// `s_i` for `i = 0..=m+1` (with `s_0 = s_{m+1} = 0`).
    pub s: Vec<usize>,
    /// Arrow variables, unit weights, DegRevLex.
    pub arrow_ring: Arc<PolyRing>,
    /// z variables weighted by 𝕚ᵢ + 𝕛ᵢ, DegRevLex, lexicographic in (i, j).
    pub z_ring: Arc<PolyRing>,
}

pub fn z_name(i: usize, j: usize) -> String {
    format!("z{i}_{j}")
}

impl GeneratorSet {
    /// m = e − 2, the number of interior steps.
    pub fn m(&self) -> usize {
        self.beta.len()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn index(&self, i: usize, j: usize) -> Option<usize> {
        self.vars.iter().position(|v| v.i == i && v.j == j)
    }

    pub(crate) fn idx(&self, i: usize, j: usize) -> usize {
        self.index(i, j)
            .unwrap_or_else(|| panic!("{} has no generator z{i}_{j}", self.group))
    }

    pub fn name(&self, k: usize) -> &str {
        &self.vars[k].name
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.vars.iter().map(|v| v.degree).collect()
    }

    /// Image of a z-polynomial in the arrow ring.
    pub fn phi(&self, f: &Polynomial) -> Polynomial {
        let terms = f
            .terms()
            .iter()
            .map(|(c, m)| {
                let img = m
                    .iter()
                    .fold(Monomial::one(), |acc, (v, e)| acc.mul(&self.vars[v].image.pow(e)));
                (c.clone(), img)
            })
            .collect();
        Polynomial::from_terms(&self.arrow_ring, terms)
    }

    /// Monomial over the z ring from a list of generator indices.
    pub fn z_monomial(&self, idxs: &[usize]) -> Monomial {
        Monomial::from_pairs(idxs.iter().map(|&k| (k, 1)))
    }
}

pub fn phi_image(s: &GeneratorSet, k: usize) -> Result<Monomial, ArtinError> {
    s.vars
        .get(k)
        .map(|v| v.image.clone())
        .ok_or(ArtinError::IndexOutOfRange(k))
}

pub fn generator_set(g: GroupParams) -> GeneratorSet {
    let quiver = build_quiver(g);
    let beta = hj_dual(g).terms;
    let m = beta.len();
    let series = ij_series(g);
    let deg = |i: usize| series.i_seq[i] + series.j_seq[i];
    let arrow_ring = PolyRing::new(
        VarTable::unweighted(quiver.arrows.iter().map(|a| a.label.clone())).expect("arrow labels are valid names"),
        MonomialOrder::DegRevLex,
    );
    let mut s = vec![0usize];
    s.extend(beta.iter().map(|&b| b as usize - 1));
    s.push(0);

    let mut paths: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    if g.a() == 1 {
        let c1 = quiver.arrow_index("c1").unwrap();
        let c2 = quiver.arrow_index("c2").unwrap();
        let y = |h: usize| quiver.k(h);
        paths.push((0, 0, vec![c1, y(0)]));
        for i in 1..=m {
            paths.push((i, 0, vec![c1, y(i)]));
            paths.push((i, 1, vec![c2, y(i - 1)]));
        }
        paths.push((m + 1, 0, vec![c2, y(m)]));
    } else {
        let l = &quiver.tail_table;
        paths.push((0, 0, quiver.clockwise_path(0, 0)));
        for i in 1..=m {
            let mut top = quiver.clockwise_path(0, l[i]);
            top.push(quiver.k(i));
            paths.push((i, 0, top));
            let d = l[i] - l[i - 1];
            for j in 1..=d {
                let v = l[i] - (j - 1);
                paths.push((i, j, vec![quiver.clockwise_from(v), quiver.anticlockwise_from(v - 1)]));
            }
            let mut bottom = quiver.anticlockwise_path(0, l[i - 1]);
            bottom.push(quiver.k(i - 1));
            paths.push((i, d + 1, bottom));
        }
        paths.push((m + 1, 0, quiver.anticlockwise_path(0, 0)));
    }

    let vars: Vec<ZVar> = paths
        .into_iter()
        .map(|(i, j, path)| {
            debug_assert!(quiver.is_closed_path(&path));
            ZVar {
                i,
                j,
                name: z_name(i, j),
                degree: deg(i),
                image: Monomial::from_pairs(path.iter().map(|&a| (a, 1))),
                path,
            }
        })
        .collect();
    let z_ring = PolyRing::new(
        VarTable::new(vars.iter().map(|v| v.name.clone()).collect(), vars.iter().map(|v| v.degree).collect())
            .expect("generator names are valid"),
        MonomialOrder::DegRevLex,
    );
    GeneratorSet {
        group: g,
        quiver,
        beta,
        vars,
        s,
        arrow_ring,
        z_ring,
    }
}
