use super::DeformError;
use crate::combinatorics::{hj_dual, GroupParams};
use crate::poly::{parse_rational, Coeff};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

/// λ = (λ_1, …, λ_{e−2}) with λ_i = (λ_{i,β_i−1}, …, λ_{i,1}, λ_{i,0}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationParams {
    steps: Vec<Vec<Coeff>>,
}

impl Serialize for DeformationParams {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

/// Bound on numerators and denominators of sampled parameters.
pub const SAMPLE_BOUND: i64 = 100;

fn random_rational(rng: &mut impl Rng) -> Coeff {
    let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let den = rng.gen_range(1..=SAMPLE_BOUND);
    Coeff::new(BigInt::from(num), BigInt::from(den))
}

impl DeformationParams {
    pub fn shape(g: GroupParams) -> Vec<usize> {
        hj_dual(g).terms.iter().map(|&b| b as usize).collect()
    }

    pub fn zero(g: GroupParams) -> Self {
        Self {
            steps: Self::shape(g).into_iter().map(|b| vec![Coeff::zero(); b]).collect(),
        }
    }

    pub fn new(g: GroupParams, steps: Vec<Vec<Coeff>>) -> Result<Self, DeformError> {
        let want = Self::shape(g);
        let got: Vec<usize> = steps.iter().map(Vec::len).collect();
        if want != got {
            return Err(DeformError::Shape { expected: want, got });
        }
        Ok(Self { steps })
    }

    pub fn from_strings(g: GroupParams, steps: &[Vec<String>]) -> Result<Self, DeformError> {
        let parsed = steps
            .iter()
            .map(|s| s.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(g, parsed)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.steps.iter().map(|s| s.iter().map(|c| c.to_string()).collect()).collect()
    }

    pub fn steps(&self) -> &[Vec<Coeff>] {
        &self.steps
    }

    pub fn beta(&self, i: usize) -> usize {
        self.steps[i - 1].len()
    }

    /// λ_{i,j} for 1 ≤ i ≤ e−2 and 0 ≤ j < β_i.
    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        let s = &self.steps[i - 1];
        &s[s.len() - 1 - j]
    }

    pub fn step_sums(&self) -> Vec<Coeff> {
        self.steps.iter().map(|s| s.iter().sum()).collect()
    }

    pub fn in_delta(&self) -> bool {
        self.step_sums().iter().all(Zero::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.steps.iter().flatten().all(Zero::is_zero)
    }

    /// A point of Δ: λ_{i,j} for j ≥ 1 drawn at random, λ_{i,0} = −Σ of the rest.
    pub fn random_in_delta(g: GroupParams, rng: &mut impl Rng) -> Self {
        let steps = Self::shape(g)
            .into_iter()
            .map(|b| {
                let mut s: Vec<Coeff> = (1..b).map(|_| random_rational(rng)).collect();
                let total: Coeff = s.iter().sum();
                s.push(-total);
                s
            })
            .collect();
        Self { steps }
    }

    /// Every entry drawn independently; almost never in Δ.
    pub fn random_unconstrained(g: GroupParams, rng: &mut impl Rng) -> Self {
        let steps = Self::shape(g)
            .into_iter()
            .map(|b| (0..b).map(|_| random_rational(rng)).collect())
            .collect();
        Self { steps }
    }

    /// λ = 0 followed by `count` seeded points of Δ.
    pub fn seeded_samples(g: GroupParams, seed: u64, count: usize) -> Vec<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (g.r() << 32) ^ g.a());
        std::iter::once(Self::zero(g))
            .chain((0..count).map(|_| Self::random_in_delta(g, &mut rng)))
            .collect()
    }
}
