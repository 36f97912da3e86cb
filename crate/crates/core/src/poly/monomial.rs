use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

/// A monomial stored as a sparse exponent vector sorted by variable index.
///
/// Zero exponents are never stored, so structural equality is monomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Self {
            exps: vec![(index as u32, exp)],
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order; repeated
    /// variables accumulate.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut exps: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(v, e)| (v as u32, e))
            .collect();
        exps.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (v, e) in exps {
            match out.last_mut() {
                Some(last) if last.0 == v => {
                    last.1 = last.1.checked_add(e).expect("exponent overflow")
                }
                _ => out.push((v, e)),
            }
        }
        Self { exps: out }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut v = vec![0; nvars];
        for &(i, e) in &self.exps {
            v[i as usize] = e;
        }
        v
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        match self.exps.binary_search_by_key(&(var as u32), |p| p.0) {
            Ok(k) => self.exps[k].1,
            Err(_) => 0,
        }
    }

    /// Iterates over `(variable, exponent)` pairs with nonzero exponent.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u32)> + ExactSizeIterator + '_ {
        self.exps.iter().map(|&(v, e)| (v as usize, e))
    }

    pub(crate) fn raw(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Weighted degree Σ eᵢ·wᵢ, with arbitrary-precision fallback.
    pub fn weighted_degree(&self, weights: &[u64]) -> BigUint {
        match self.weighted_degree_u128(weights) {
            Some(d) => BigUint::from(d),
            None => self
                .exps
                .iter()
                .map(|&(v, e)| BigUint::from(e) * BigUint::from(weights[v as usize]))
                .sum(),
        }
    }

    pub fn weighted_degree_u128(&self, weights: &[u64]) -> Option<u128> {
        self.exps.iter().try_fold(0u128, |acc, &(v, e)| {
            (e as u128)
                .checked_mul(weights[v as usize] as u128)
                .and_then(|x| acc.checked_add(x))
        })
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1.checked_add(b[j].1)?));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Some(Monomial { exps: out })
    }

    /// Product of monomials; panics on exponent overflow rather than wrapping.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&(v, e)| (v, e.checked_mul(k).expect("exponent overflow in power")))
                .filter(|&(_, e)| e > 0)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = Vec::with_capacity(other.exps.len());
        let mut i = 0;
        for &(v, e) in &other.exps {
            if i < self.exps.len() && self.exps[i].0 == v {
                let d = e - self.exps[i].1;
                if d > 0 {
                    out.push((v, d));
                }
                i += 1;
            } else {
                out.push((v, e));
            }
        }
        Some(Monomial { exps: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// Removes `var` entirely, returning the monomial and the removed exponent.
    pub fn split_var(&self, var: usize) -> (Monomial, u32) {
        let mut e = 0;
        let exps = self
            .exps
            .iter()
            .filter(|&&(v, x)| {
                if v as usize == var {
                    e = x;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        (Monomial { exps }, e)
    }

    /// Bitmask of the variables in the support (requires fewer than 128 variables).
    pub fn support_mask(&self) -> u128 {
        self.exps.iter().fold(0u128, |m, &(v, _)| {
            assert!(v < 128, "support masks need fewer than 128 variables");
            m | (1u128 << v)
        })
    }

    /// Renames variables through `map`; `None` entries must not occur in the support.
    pub fn remap(&self, map: &[Option<usize>]) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.exps.len());
        for &(v, e) in &self.exps {
            pairs.push((map[v as usize]?, e));
        }
        Some(Monomial::from_pairs(pairs))
    }
}
