//! Hirzebruch–Jung expansions, the i/j-series and the quiver of a cyclic
//! quotient singularity 1/r(1,a).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombinatoricsError {
    #[error("expected p > q >= 1 with gcd(p, q) = 1, got p = {p}, q = {q}")]
    InvalidFraction { p: u64, q: u64 },
    #[error("invalid group 1/{r}(1,{a}): need r > a >= 1 and gcd(r, a) = 1")]
    InvalidGroup { r: u64, a: u64 },
}

/// The cyclic group 1/r(1,a), validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupParams {
    r: u64,
    a: u64,
}

impl GroupParams {
    pub fn new(r: u64, a: u64) -> Result<Self, CombinatoricsError> {
        if a == 0 || r <= a || r.gcd(&a) != 1 {
            return Err(CombinatoricsError::InvalidGroup { r, a });
        }
        Ok(Self { r, a })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// All valid groups with `2 <= r <= max_r`, ordered by `(r, a)`.
    pub fn all_up_to(max_r: u64) -> Vec<GroupParams> {
        (2..=max_r)
            .flat_map(|r| (1..r).filter_map(move |a| GroupParams::new(r, a).ok()))
            .collect()
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}(1,{})", self.r, self.a)
    }
}

/// A continued fraction p/q = [α₁, …, α_n] = α₁ − 1/(α₂ − 1/(…)) with all αᵢ ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HjExpansion {
    pub numerator: u64,
    pub denominator: u64,
    pub terms: Vec<u64>,
}

impl HjExpansion {
    /// Evaluates the continued fraction exactly.
    pub fn evaluate(&self) -> BigRational {
        let mut acc: Option<BigRational> = None;
        for &t in self.terms.iter().rev() {
            let t = BigRational::from_integer(BigInt::from(t));
            acc = Some(match acc {
                None => t,
                Some(x) => t - x.recip(),
            });
        }
        acc.unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

pub fn hj_expand(p: u64, q: u64) -> Result<HjExpansion, CombinatoricsError> {
    if q == 0 || p <= q || p.gcd(&q) != 1 {
        return Err(CombinatoricsError::InvalidFraction { p, q });
    }
    let (mut num, mut den) = (p, q);
    let mut terms = Vec::new();
    loop {
        let alpha = num.div_ceil(den);
        terms.push(alpha);
        let rem = alpha * den - num;
        if rem == 0 {
            break;
        }
        num = den;
        den = rem;
    }
    Ok(HjExpansion {
        numerator: p,
        denominator: q,
        terms,
    })
}

/// The expansion of r/a, whose terms are the αᵢ.
pub fn hj_primary(g: GroupParams) -> HjExpansion {
    hj_expand(g.r, g.a).expect("validated group")
}

/// The dual expansion r/(r−a), whose terms are the βᵢ.
pub fn hj_dual(g: GroupParams) -> HjExpansion {
    hj_expand(g.r, g.r - g.a).expect("validated group")
}

/// The 𝕚 and 𝕛 sequences, indexed 0..=m+1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IjSeries {
    pub i_seq: Vec<u64>,
    pub j_seq: Vec<u64>,
}

pub fn ij_series(g: GroupParams) -> IjSeries {
    let beta = hj_dual(g).terms;
    let mut i_seq = vec![g.r as i128, (g.r - g.a) as i128];
    let mut j_seq = vec![0i128, 1];
    for t in 2..=beta.len() + 1 {
        let b = beta[t - 2] as i128;
        i_seq.push(b * i_seq[t - 1] - i_seq[t - 2]);
        j_seq.push(b * j_seq[t - 1] - j_seq[t - 2]);
    }
    let conv = |v: Vec<i128>| v.into_iter().map(|x| u64::try_from(x).expect("series stays non-negative")).collect();
    IjSeries {
        i_seq: conv(i_seq),
        j_seq: conv(j_seq),
    }
}

/// Exponent pairs (𝕚_t, 𝕛_t) of the monomials x^𝕚 y^𝕛 generating the invariant ring.
pub fn invariant_monomials(g: GroupParams) -> Vec<(u64, u64)> {
    let s = ij_series(g);
    s.i_seq.into_iter().zip(s.j_seq).collect()
}

/// The embedding dimension e = m + 2, cross-checked against 3 + Σ(αᵢ − 2).
pub fn embedding_dimension(g: GroupParams) -> usize {
    let m = hj_dual(g).len();
    let ell: u64 = hj_primary(g).terms.iter().map(|a| a - 2).sum();
    assert_eq!(m as u64 + 2, 3 + ell, "embedding dimension mismatch for {g}");
    m + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    Clockwise,
    Anticlockwise,
    Extra,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub kind: ArrowKind,
    pub tail: usize,
    pub head: usize,
    pub label: String,
}

/// The quiver of the reconstruction algebra.
///
/// For `a > 1` the vertices `0..=n` sit on a cycle with clockwise arrows
/// `c{i}_{i-1}`, `c0_{n}`, anticlockwise arrows `a{i}_{i+1}`, `a{n}_0` and extra
/// arrows `k{h}` from `l_h` to 0. For `a = 1` there are two vertices joined by
/// `c1, c2: 0 → 1` and `a1, a2, k1, …: 1 → 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub group: GroupParams,
    pub n: usize,
    pub arrows: Vec<Arrow>,
    /// `l_0, …, l_{e−2}`, including the aliased ends `l_0 = 1`, `l_{e−2} = n`.
    pub tail_table: Vec<usize>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.n + 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.group.a == 1
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    fn idx(&self, label: &str) -> usize {
        self.arrow_index(label)
            .unwrap_or_else(|| panic!("quiver {} has no arrow {label}", self.group))
    }

    /// Number of genuine extra arrows, ℓ = Σ(αᵢ − 2).
    pub fn extra_count(&self) -> usize {
        self.arrows.iter().filter(|a| a.kind == ArrowKind::Extra).count()
    }

    /// The clockwise arrow leaving vertex `v`.
    pub fn clockwise_from(&self, v: usize) -> usize {
        assert!(!self.is_degenerate());
        let n = self.n;
        if v == 0 {
            self.idx(&format!("c0_{n}"))
        } else {
            self.idx(&format!("c{v}_{}", v - 1))
        }
    }

    /// The anticlockwise arrow leaving vertex `v`.
    pub fn anticlockwise_from(&self, v: usize) -> usize {
        assert!(!self.is_degenerate());
        if v == self.n {
            self.idx(&format!("a{v}_0"))
        } else {
            self.idx(&format!("a{v}_{}", v + 1))
        }
    }

    /// `k_h` with the aliases `k_0 = c1_0` and `k_{e−2} = a{n}_0`.
    pub fn k(&self, h: usize) -> usize {
        let last = self.tail_table.len() - 1;
        if self.is_degenerate() {
            return match h {
                0 => self.idx("a1"),
                _ if h == 1 => self.idx("a2"),
                _ => self.idx(&format!("k{}", h - 1)),
            };
        }
        if h == 0 {
            self.idx("c1_0")
        } else if h == last {
            self.idx(&format!("a{}_0", self.n))
        } else {
            self.idx(&format!("k{h}"))
        }
    }

    /// Clockwise path from `from` to `to`; equal endpoints give the full loop.
    pub fn clockwise_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut v = from;
        loop {
            let id = self.clockwise_from(v);
            out.push(id);
            v = self.arrows[id].head;
            if v == to {
                return out;
            }
        }
    }

    /// Anticlockwise path from `from` to `to`; equal endpoints give the full loop.
    pub fn anticlockwise_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut v = from;
        loop {
            let id = self.anticlockwise_from(v);
            out.push(id);
            v = self.arrows[id].head;
            if v == to {
                return out;
            }
        }
    }

    /// Checks that consecutive arrows compose and the path returns to its start.
    pub fn is_closed_path(&self, path: &[usize]) -> bool {
        if path.is_empty() || path.iter().any(|&p| p >= self.arrows.len()) {
            return false;
        }
        let composable = path
            .windows(2)
            .all(|w| self.arrows[w[0]].head == self.arrows[w[1]].tail);
        composable && self.arrows[*path.last().unwrap()].head == self.arrows[path[0]].tail
    }

    pub fn labels(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&i| self.arrows[i].label.clone()).collect()
    }

    /// Aligned table of arrows: label, kind, tail → head.
    pub fn render_table(&self) -> String {
        let w = self.arrows.iter().map(|a| a.label.len()).max().unwrap_or(1);
        let mut s = format!("quiver of {} with {} vertices\n", self.group, self.vertex_count());
        for a in &self.arrows {
            let kind = match a.kind {
                ArrowKind::Clockwise => "clockwise",
                ArrowKind::Anticlockwise => "anticlockwise",
                ArrowKind::Extra => "extra",
            };
            s.push_str(&format!("  {:<w$}  {:<13}  {} -> {}\n", a.label, kind, a.tail, a.head));
        }
        s.push_str(&format!("  tail table l = {:?}\n", self.tail_table));
        s
    }
}

pub fn build_quiver(g: GroupParams) -> Quiver {
    let alpha = hj_primary(g).terms;
    let e = embedding_dimension(g);
    let n = alpha.len();
    let arrow = |kind, tail, head, label: String| Arrow {
        kind,
        tail,
        head,
        label,
    };
    if g.a == 1 {
        let mut arrows = vec![
            arrow(ArrowKind::Clockwise, 0, 1, "c1".into()),
            arrow(ArrowKind::Clockwise, 0, 1, "c2".into()),
            arrow(ArrowKind::Anticlockwise, 1, 0, "a1".into()),
            arrow(ArrowKind::Anticlockwise, 1, 0, "a2".into()),
        ];
        for h in 1..=alpha[0] - 2 {
            arrows.push(arrow(ArrowKind::Extra, 1, 0, format!("k{h}")));
        }
        return Quiver {
            group: g,
            n: 1,
            arrows,
            tail_table: vec![1; e - 1],
        };
    }
    let mut arrows = Vec::new();
    for i in 1..=n {
        arrows.push(arrow(ArrowKind::Clockwise, i, i - 1, format!("c{i}_{}", i - 1)));
    }
    arrows.push(arrow(ArrowKind::Clockwise, 0, n, format!("c0_{n}")));
    for i in 0..n {
        arrows.push(arrow(ArrowKind::Anticlockwise, i, i + 1, format!("a{i}_{}", i + 1)));
    }
    arrows.push(arrow(ArrowKind::Anticlockwise, n, 0, format!("a{n}_0")));
    let mut tail_table = vec![1];
    let mut h = 1;
    for (i, &a) in alpha.iter().enumerate() {
        for _ in 2..a {
            arrows.push(arrow(ArrowKind::Extra, i + 1, 0, format!("k{h}")));
            tail_table.push(i + 1);
            h += 1;
        }
    }
    tail_table.push(n);
    debug_assert_eq!(tail_table.len(), e - 1);
    Quiver {
        group: g,
        n,
        arrows,
        tail_table,
    }
}

/// Returns true when `p/q` and the evaluation of `h` agree.
pub fn round_trips(h: &HjExpansion) -> bool {
    h.evaluate() == BigRational::new(BigInt::from(h.numerator), BigInt::from(h.denominator))
}

/// Checks β_t = l_t − l_{t−1} + 2 for every step.
pub fn riemenschneider_holds(q: &Quiver) -> bool {
    let beta = hj_dual(q.group).terms;
    beta.iter().enumerate().all(|(k, &b)| {
        let t = k + 1;
        b as i64 == q.tail_table[t] as i64 - q.tail_table[t - 1] as i64 + 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: u64, a: u64) -> GroupParams {
        GroupParams::new(r, a).unwrap()
    }

    #[test]
    fn expansions() {
        assert_eq!(hj_expand(7, 3).unwrap().terms, vec![3, 2, 2]);
        assert_eq!(hj_expand(165, 104).unwrap().terms, vec![2, 3, 2, 4, 3, 2, 2]);
        assert_eq!(hj_expand(9, 1).unwrap().terms, vec![9]);
        assert!(hj_expand(6, 4).is_err());
        assert!(hj_expand(3, 3).is_err());
        assert!(GroupParams::new(4, 2).is_err());
    }

    #[test]
    fn duals() {
        assert_eq!(hj_dual(g(7, 3)).terms, vec![2, 4]);
        assert_eq!(hj_dual(g(7, 2)).terms, vec![2, 2, 3]);
        assert_eq!(hj_dual(g(165, 104)).terms, vec![3, 4, 2, 3, 4]);
        assert_eq!(hj_dual(g(2, 1)).terms, vec![2]);
        let s: u64 = hj_dual(g(165, 104)).terms.iter().sum();
        assert_eq!(s + 2, 18);
    }

    #[test]
    fn series() {
        let s = ij_series(g(7, 2));
        assert_eq!(s.i_seq, vec![7, 5, 3, 1, 0]);
        assert_eq!(s.j_seq, vec![0, 1, 2, 3, 7]);
        let s = ij_series(g(2, 1));
        assert_eq!(s.i_seq, vec![2, 1, 0]);
        assert_eq!(s.j_seq, vec![0, 1, 2]);
        assert_eq!(invariant_monomials(g(3, 1)), vec![(3, 0), (2, 1), (1, 2), (0, 3)]);
    }

    #[test]
    fn embedding_dims() {
        assert_eq!(embedding_dimension(g(7, 3)), 4);
        assert_eq!(embedding_dimension(g(165, 104)), 7);
        assert_eq!(embedding_dimension(g(2, 1)), 3);
    }

    #[test]
    fn quiver_7_3() {
        let q = build_quiver(g(7, 3));
        assert_eq!(q.vertex_count(), 4);
        let labels: Vec<_> = q.arrows.iter().map(|a| a.label.as_str()).collect();
        assert_eq!(
            labels,
            ["c1_0", "c2_1", "c3_2", "c0_3", "a0_1", "a1_2", "a2_3", "a3_0", "k1"]
        );
        assert_eq!(q.arrows[8].tail, 1);
        assert_eq!(q.tail_table, vec![1, 1, 3]);
        assert_eq!(q.k(0), q.arrow_index("c1_0").unwrap());
        assert_eq!(q.k(2), q.arrow_index("a3_0").unwrap());
    }

    #[test]
    fn quiver_165_104() {
        let q = build_quiver(g(165, 104));
        let tails: Vec<_> = q
            .arrows
            .iter()
            .filter(|a| a.kind == ArrowKind::Extra)
            .map(|a| (a.label.clone(), a.tail))
            .collect();
        assert_eq!(
            tails,
            vec![("k1".into(), 2), ("k2".into(), 4), ("k3".into(), 4), ("k4".into(), 5)]
        );
        assert!(riemenschneider_holds(&q));
    }

    #[test]
    fn quiver_degenerate() {
        let q = build_quiver(g(3, 1));
        let labels: Vec<_> = q.arrows.iter().map(|a| a.label.as_str()).collect();
        assert_eq!(labels, ["c1", "c2", "a1", "a2", "k1"]);
        assert!(riemenschneider_holds(&q));
    }

    #[test]
    fn paths_close() {
        let q = build_quiver(g(7, 2));
        let full = q.clockwise_path(0, 0);
        assert_eq!(full.len(), q.vertex_count());
        assert!(q.is_closed_path(&full));
        assert_eq!(q.labels(&q.clockwise_path(0, 1)), ["c0_2", "c2_1"]);
        assert_eq!(q.labels(&q.anticlockwise_path(0, 2)), ["a0_1", "a1_2"]);
    }
}
