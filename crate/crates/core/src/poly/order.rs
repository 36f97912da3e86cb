use super::monomial::Monomial;
use super::PolyError;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashMap;

/// Ordered variable names with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarTable {
    names: Vec<String>,
    weights: Vec<u64>,
    #[serde(skip)]
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new(names: Vec<String>, weights: Vec<u64>) -> Result<Self, PolyError> {
        if names.len() != weights.len() {
            return Err(PolyError::InvalidVarTable("names and weights differ in length".into()));
        }
        if weights.contains(&0) {
            return Err(PolyError::InvalidVarTable("weights must be positive".into()));
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            let ok = !n.is_empty()
                && n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::InvalidVarTable(format!("bad variable name {n:?}")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(PolyError::InvalidVarTable(format!("duplicate variable {n}")));
            }
        }
        Ok(Self {
            names,
            weights,
            index,
        })
    }

    /// Unit-weight table.
    pub fn unweighted<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let w = vec![1; names.len()];
        Self::new(names, w)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Term orders. `DegRevLex` is weighted by the variable table; in `Block`, the
/// variables `0..split` are compared first by weighted DegRevLex and ties are
/// broken on the remaining variables by `rest`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    Block { split: usize, rest: Box<MonomialOrder> },
}

fn weighted_cmp(a: &[(u32, u32)], b: &[(u32, u32)], w: &[u64]) -> Ordering {
    let deg = |m: &[(u32, u32)]| {
        m.iter().try_fold(0u128, |acc, &(v, e)| {
            (e as u128).checked_mul(w[v as usize] as u128).and_then(|x| acc.checked_add(x))
        })
    };
    match (deg(a), deg(b)) {
        (Some(x), Some(y)) => x.cmp(&y),
        _ => {
            let big = |m: &[(u32, u32)]| -> num_bigint::BigUint {
                m.iter()
                    .map(|&(v, e)| num_bigint::BigUint::from(e) * w[v as usize])
                    .sum()
            };
            big(a).cmp(&big(b))
        }
    }
}

/// Reverse-lexicographic tie break: `a ≻ b` iff the last nonzero entry of a − b is negative.
fn revlex_cmp(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Greater,
            (_, 0) => return Ordering::Less,
            _ => {}
        }
        let (va, ea) = a[i - 1];
        let (vb, eb) = b[j - 1];
        match va.cmp(&vb) {
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
            Ordering::Equal => {
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
}

/// Lexicographic: `a ≻ b` iff the first nonzero entry of a − b is positive.
fn lex_cmp(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.0.cmp(&y.0) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {
                if x.1 != y.1 {
                    return x.1.cmp(&y.1);
                }
            }
        }
    }
    a.len().cmp(&b.len())
}

impl MonomialOrder {
    pub(crate) fn cmp_raw(&self, a: &[(u32, u32)], b: &[(u32, u32)], w: &[u64]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => weighted_cmp(a, b, w).then_with(|| revlex_cmp(a, b)),
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::Block { split, rest } => {
                let s = *split as u32;
                let ka = a.partition_point(|p| p.0 < s);
                let kb = b.partition_point(|p| p.0 < s);
                let (a1, a2) = a.split_at(ka);
                let (b1, b2) = b.split_at(kb);
                weighted_cmp(a1, b1, w)
                    .then_with(|| revlex_cmp(a1, b1))
                    .then_with(|| rest.cmp_raw(a2, b2, w))
            }
        }
    }

    /// True when every monomial involving a variable of `vars` exceeds every
    /// monomial free of them, so that u-free elements of a Gröbner basis
    /// generate the elimination ideal.
    pub fn eliminates(&self, vars: &[usize], nvars: usize) -> bool {
        if vars.is_empty() || vars.len() >= nvars {
            return true;
        }
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let is_prefix = sorted.iter().enumerate().all(|(i, &v)| i == v);
        match self {
            MonomialOrder::DegRevLex => false,
            MonomialOrder::Lex => is_prefix,
            MonomialOrder::Block { split, .. } => is_prefix && sorted.len() == *split,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Block { split, rest } => format!("block({split}; {})", rest.describe()),
        }
    }
}

/// A polynomial ring: variables, weights and the active term order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyRing {
    pub vars: VarTable,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(vars: VarTable, order: MonomialOrder) -> std::sync::Arc<Self> {
        std::sync::Arc::new(Self { vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp_raw(a.raw(), b.raw(), self.vars.weights())
    }

    /// A monomial parsed from `v1^e1*v2...` or `1`.
    pub fn monomial(&self, text: &str) -> Result<Monomial, PolyError> {
        let p = super::parse::parse_polynomial(&std::sync::Arc::new(self.clone()), text)?;
        match p.terms() {
            [(c, m)] if num_traits::One::is_one(c) => Ok(m.clone()),
            _ => Err(PolyError::Parse {
                pos: 0,
                msg: format!("{text:?} is not a monomial"),
            }),
        }
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.iter()
            .map(|(v, e)| {
                if e == 1 {
                    self.vars.name(v).to_string()
                } else {
                    format!("{}^{e}", self.vars.name(v))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Compares two monomials under an order, checking that both live in the ring.
pub fn compare(ring: &PolyRing, m1: &Monomial, m2: &Monomial) -> Result<Ordering, PolyError> {
    let n = ring.nvars();
    for m in [m1, m2] {
        if m.iter().any(|(v, _)| v >= n) {
            return Err(PolyError::RingMismatch);
        }
    }
    Ok(ring.compare(m1, m2))
}
