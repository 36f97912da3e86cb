use super::monomial::Monomial;
use super::order::PolyRing;
use super::PolyError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub type Coeff = BigRational;

/// A sparse polynomial with rational coefficients, terms sorted strictly
/// decreasing under the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Coeff, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn rational(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, c, Monomial::one())
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::monomial(ring, Coeff::one(), Monomial::var(i))
    }

    pub fn var_named(ring: &Arc<PolyRing>, name: &str) -> Result<Self, PolyError> {
        let i = ring
            .vars
            .position(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Arc<PolyRing>, c: Coeff, m: Monomial) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(c, m)] };
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges and drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Coeff, Monomial)>) -> Self {
        terms.sort_by(|a, b| ring.compare(&b.1, &a.1));
        let mut out: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Self {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn from_terms_sorted(ring: &Arc<PolyRing>, terms: Vec<(Coeff, Monomial)>) -> Self {
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    /// The binomial m1 − m2.
    pub fn binomial(ring: &Arc<PolyRing>, m1: Monomial, m2: Monomial) -> Self {
        Self::from_terms(ring, vec![(Coeff::one(), m1), (-Coeff::one(), m2)])
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Coeff, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<(&Coeff, &Monomial), PolyError> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.0)
    }

    /// Constant term (zero when absent).
    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((c, m)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    pub fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials live in different rings"
        );
    }

    /// `self + c·m·g`, merging two sorted term lists.
    pub fn add_scaled(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        self.assert_compatible(g);
        if c.is_zero() || g.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let a = &self.terms;
        let shifted = g.terms.iter().map(|(gc, gm)| (gc * c, gm.mul(m)));
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        for (bc, bm) in shifted {
            while i < a.len() && ring.compare(&a[i].1, &bm) == Ordering::Greater {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].1 == bm {
                let s = &a[i].0 + bc;
                if !s.is_zero() {
                    out.push((s, bm));
                }
                i += 1;
            } else {
                out.push((bc, bm));
            }
        }
        out.extend_from_slice(&a[i..]);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(&Coeff::one(), &Monomial::one(), other)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(&-Coeff::one(), &Monomial::one(), other)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(x, m)| (x * c, m.clone())).collect(),
        }
    }

    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(x, t)| (x * c, t.mul(m))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                terms.push((a * b, m.mul(n)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    /// Replaces `var` by `value` everywhere; the result no longer involves `var`
    /// unless `value` does.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Polynomial {
        self.assert_compatible(value);
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(&self.ring)];
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &self.terms {
            let (rest, e) = m.split_var(var);
            if e == 0 {
                acc = acc.add(&Polynomial::monomial(&self.ring, c.clone(), rest));
                continue;
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            acc = acc.add_scaled(c, &rest, &powers[e as usize]);
        }
        acc
    }

    /// Evaluates at a full point, one rational per variable.
    pub fn evaluate(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension mismatch");
        self.terms
            .iter()
            .map(|(c, m)| {
                m.iter().fold(c.clone(), |acc, (v, e)| {
                    acc * num_traits::pow::pow(point[v].clone(), e as usize)
                })
            })
            .fold(Coeff::zero(), |a, b| a + b)
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(c, m)| {
                let (rest, e) = m.split_var(var);
                (e > 0).then(|| {
                    (
                        c * rational(e as i64),
                        rest.mul(&Monomial::var_pow(var, e - 1)),
                    )
                })
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(_, m)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Sorted list of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .terms
            .iter()
            .flat_map(|(_, m)| m.iter().map(|(i, _)| i))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(_, m)| m.exponent(var) > 0)
    }

    /// Splits `self = x·coeff + rest` when the degree in `x` is at most 1.
    pub fn linear_split(&self, var: usize) -> Option<(Polynomial, Polynomial)> {
        if self.degree_in(var) > 1 {
            return None;
        }
        let mut lin = Vec::new();
        let mut rest = Vec::new();
        for (c, m) in &self.terms {
            let (r, e) = m.split_var(var);
            if e == 1 {
                lin.push((c.clone(), r));
            } else {
                rest.push((c.clone(), m.clone()));
            }
        }
        Some((
            Polynomial::from_terms(&self.ring, lin),
            Polynomial::from_terms(&self.ring, rest),
        ))
    }

    /// True when all terms share one weighted degree.
    pub fn is_homogeneous(&self) -> bool {
        let w = self.ring.vars.weights();
        let mut it = self.terms.iter().map(|(_, m)| m.weighted_degree(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Moves the polynomial into another ring through a variable map.
    pub fn remap(&self, ring: &Arc<PolyRing>, map: &[Option<usize>]) -> Result<Polynomial, PolyError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            terms.push((c.clone(), m.remap(map).ok_or(PolyError::RingMismatch)?));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Moves into a ring whose variables are matched by name.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Result<Polynomial, PolyError> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars
            .names()
            .iter()
            .map(|n| ring.vars.position(n))
            .collect();
        self.remap(ring, &map)
    }
}

fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = self.ring.format_monomial(m);
            if m.is_one() {
                write!(f, "{}", format_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_coeff(&abs))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
