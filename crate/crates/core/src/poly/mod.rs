//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use order::{compare, MonomialOrder, PolyRing, VarTable};
pub use parse::{parse_polynomial, parse_rational};
pub use polynomial::{rational, Coeff, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials or monomials belong to different rings")]
    RingMismatch,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid variable table: {0}")]
    InvalidVarTable(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::cmp::Ordering;
    use std::sync::Arc;

    fn xyz(order: MonomialOrder) -> Arc<PolyRing> {
        PolyRing::new(VarTable::unweighted(["x", "y", "z"]).unwrap(), order)
    }

    fn p(r: &Arc<PolyRing>, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        let r = xyz(MonomialOrder::DegRevLex);
        let f = p(&r, "x - y");
        assert!((&f + &f.neg()).is_zero());
        assert_eq!(&f * &p(&r, "x + y"), p(&r, "x^2 - y^2"));
        let sq = p(&r, "x^2").substitute(0, &p(&r, "y + 1"));
        assert_eq!(sq, p(&r, "y^2 + 2*y + 1"));
        assert!(!sq.involves(0));
    }

    #[test]
    fn leading_terms() {
        let r = xyz(MonomialOrder::DegRevLex);
        let (c, m) = p(&r, "5").leading_term().map(|(c, m)| (c.clone(), m.clone())).unwrap();
        assert_eq!(c, rational(5));
        assert!(m.is_one());
        assert!(Polynomial::zero(&r).leading_term().is_err());
    }

    #[test]
    fn display_round_trip() {
        let r = xyz(MonomialOrder::DegRevLex);
        let f = p(&r, "3/2*x^2*y - z + 7 - 2*x*z");
        let text = f.to_string();
        assert_eq!(text, "3/2*x^2*y - 2*x*z - z + 7");
        assert_eq!(p(&r, &text), f);
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert!(parse_polynomial(&r, "x + w").is_err());
        assert!(parse_polynomial(&r, "x +").is_err());
    }

    #[test]
    fn calculus() {
        let r = xyz(MonomialOrder::Lex);
        let f = p(&r, "x^3*y + 2*y - 1");
        assert_eq!(f.derivative(0), p(&r, "3*x^2*y"));
        let v = f.evaluate(&[rational(2), rational(1), rational(0)]);
        assert_eq!(v, rational(9));
        let (lin, rest) = p(&r, "x*y + x + z^2").linear_split(0).unwrap();
        assert_eq!(lin, p(&r, "y + 1"));
        assert_eq!(rest, p(&r, "z^2"));
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..4, 4).prop_map(|v| Monomial::from_dense(&v))
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::DegRevLex),
            Just(MonomialOrder::Lex),
            (1usize..4).prop_map(|s| MonomialOrder::Block {
                split: s,
                rest: Box::new(MonomialOrder::DegRevLex)
            }),
            (1usize..4).prop_map(|s| MonomialOrder::Block {
                split: s,
                rest: Box::new(MonomialOrder::Lex)
            }),
        ]
    }

    proptest! {
        #[test]
        fn term_order_axioms(o in orders(), w in prop::collection::vec(1u64..6, 4),
                             a in mono(), b in mono(), c in mono()) {
            let names: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
            let ring = PolyRing { vars: VarTable::new(names, w).unwrap(), order: o };
            let ab = ring.compare(&a, &b);
            prop_assert_eq!(ab, ring.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ring.compare(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(ring.compare(&a, &Monomial::one()), Ordering::Less);
            if ab != Ordering::Less && ring.compare(&b, &c) != Ordering::Less {
                prop_assert_ne!(ring.compare(&a, &c), Ordering::Less);
            }
        }

        #[test]
        fn ring_laws(a in prop::collection::vec((-5i64..5, mono()), 0..5),
                     b in prop::collection::vec((-5i64..5, mono()), 0..5),
                     c in prop::collection::vec((-5i64..5, mono()), 0..5)) {
            let names: Vec<String> = (0..4).map(|i| format!("v{i}")).collect();
            let ring = PolyRing::new(VarTable::unweighted(names).unwrap(), MonomialOrder::DegRevLex);
            let mk = |t: Vec<(i64, Monomial)>| Polynomial::from_terms(&ring, t.into_iter().map(|(c, m)| (rational(c), m)).collect());
            let (a, b, c) = (mk(a), mk(b), mk(c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(parse_polynomial(&ring, &a.to_string()).unwrap(), a);
        }
    }
}
