use super::generators::GeneratorSet;
use crate::groebner::IdealBasis;
use crate::poly::{Monomial, Polynomial};
use serde::Serialize;

/// The 2 × (m+1) quasimatrix with interstitial products W_t, as generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiMatrix {
    /// a_1..a_{m+1} = z_{0,0}, …, z_{m,0}.
    pub top: Vec<usize>,
    /// b_1..b_{m+1} = z_{1,s_1}, …, z_{m+1,s_{m+1}}.
    pub bottom: Vec<usize>,
    /// W_1..W_m with W_t = z_{t,s_t−1}·…·z_{t,1} (empty when s_t = 1).
    pub middle: Vec<Vec<usize>>,
}

impl QuasiMatrix {
    pub fn new(s: &GeneratorSet) -> Self {
        let m = s.m();
        let top = (0..=m).map(|t| s.idx(t, 0)).collect();
        let bottom = (1..=m + 1).map(|t| s.idx(t, s.s[t])).collect();
        let middle = (1..=m)
            .map(|t| (1..s.s[t]).rev().map(|j| s.idx(t, j)).collect())
            .collect();
        Self { top, bottom, middle }
    }

    /// Product W_i · … · W_{j} (1-based, inclusive), as generator indices.
    pub fn middle_product(&self, from: usize, to: usize) -> Vec<usize> {
        (from..=to).flat_map(|t| self.middle[t - 1].iter().copied()).collect()
    }

    /// Three-row text layout: top row, middle entries, bottom row.
    pub fn render(&self, s: &GeneratorSet) -> String {
        let cell = |v: &[usize]| v.iter().map(|&k| s.name(k).to_string()).collect::<Vec<_>>().join("*");
        let n = self.top.len();
        let mut cols: Vec<[String; 3]> = Vec::new();
        for t in 0..n {
            cols.push([s.name(self.top[t]).into(), String::new(), s.name(self.bottom[t]).into()]);
            if t + 1 < n {
                cols.push([String::new(), cell(&self.middle[t]), String::new()]);
            }
        }
        let widths: Vec<usize> = cols.iter().map(|c| c.iter().map(|x| x.len()).max().unwrap_or(0)).collect();
        (0..3)
            .map(|row| {
                let line: Vec<String> = cols
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{:^w$}", c[row]))
                    .collect();
                format!("( {} )", line.join("  ")).trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// f_ij = a_i b_j − b_i (∏_{t=i}^{j−1} W_t) a_j for 1 ≤ i < j ≤ m+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiMinor {
    pub i: usize,
    pub j: usize,
    pub lhs: Monomial,
    pub rhs: Monomial,
    pub poly: Polynomial,
}

pub fn quasiminors(s: &GeneratorSet) -> Vec<QuasiMinor> {
    let q = QuasiMatrix::new(s);
    let m = s.m();
    let mut out = Vec::new();
    for i in 1..=m + 1 {
        for j in i + 1..=m + 1 {
            let lhs = s.z_monomial(&[q.top[i - 1], q.bottom[j - 1]]);
            let mut r = vec![q.bottom[i - 1]];
            r.extend(q.middle_product(i, j - 1));
            r.push(q.top[j - 1]);
            let rhs = s.z_monomial(&r);
            let poly = Polynomial::binomial(&s.z_ring, lhs.clone(), rhs.clone());
            out.push(QuasiMinor { i, j, lhs, rhs, poly });
        }
    }
    out
}

/// All quasiminors as an ideal basis over the z ring, ordered f_12, f_13, …, f_{m,m+1}.
pub fn qdet_ideal(s: &GeneratorSet) -> IdealBasis {
    let gens = quasiminors(s).into_iter().map(|q| q.poly).collect();
    IdealBasis::new(&s.z_ring, gens).expect("quasiminors live in the z ring")
}

/// E = z_{0,0}·b_2·…·b_{m+1}.
pub fn saturating_product_e(s: &GeneratorSet) -> Monomial {
    let q = QuasiMatrix::new(s);
    let mut idx = vec![q.top[0]];
    idx.extend(q.bottom[1..].iter().copied());
    s.z_monomial(&idx)
}
