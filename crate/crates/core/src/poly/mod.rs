//! Exact Laurent polynomials and rational functions in one or two variables.

mod laurent;
mod rational;
mod upoly;

use thiserror::Error;

pub(crate) use laurent::bigint_json;
pub use laurent::{Exp, LaurentPoly, Vars};
pub use rational::RationalFn;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable mismatch: {0:?} vs {1:?}")]
    VarMismatch(Vars, Vars),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable '{0}'")]
    UnknownVariable(char),
    #[error("half-integral power of a value with no monomial square root")]
    NoSquareRoot,
}

pub const Q: Vars = Vars::one('q');

/// `x^k` in the one-variable ring `vars`.
pub fn mono(vars: Vars, k: i64) -> LaurentPoly {
    LaurentPoly::var_pow(vars, 0, k, 1)
}

/// The quantum integer `[k] = q^{k-1} + q^{k-3} + ... + q^{1-k}`, with `[0] = 0`.
pub fn quantum_integer(k: u32) -> LaurentPoly {
    let k = k as i64;
    let mut p = LaurentPoly::zero(Q);
    for i in 0..k {
        p.add_term([2 * (k - 1 - 2 * i), 0], 1.into());
    }
    p
}

/// `1 + x + ... + x^n` in `vars` (the graded dimension `{n}_x`).
pub fn geometric_sum(vars: Vars, n: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    for i in 0..=n as i64 {
        p.add_term([2 * i, 0], 1.into());
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_quantum_integers() {
        assert!(quantum_integer(0).is_zero());
        assert_eq!(quantum_integer(1), LaurentPoly::one(Q));
        assert_eq!(quantum_integer(2), LaurentPoly::from_terms(Q, &[(1, 1), (-1, 1)]));
        assert_eq!(quantum_integer(3), LaurentPoly::from_terms(Q, &[(2, 1), (0, 1), (-2, 1)]));
    }

    #[test]
    fn quantum_integer_identity() {
        let d = LaurentPoly::from_terms(Q, &[(1, 1), (-1, -1)]);
        for k in 0..=20u32 {
            let lhs = &quantum_integer(k) * &d;
            let rhs = LaurentPoly::from_terms(Q, &[(k as i64, 1), (-(k as i64), -1)]);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    const QT: Vars = Vars::two('q', 't');

    fn arb_poly2() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..4, -3i64..4, -4i64..5), 0..5).prop_map(|ts| LaurentPoly::from_terms2(QT, &ts))
    }

    fn arb_poly1() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-3i64..4, -4i64..5), 0..5).prop_map(|ts| LaurentPoly::from_terms(Q, &ts))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly2(), b in arb_poly2(), c in arb_poly2()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn substitution_is_multiplicative(a in arb_poly2(), b in arb_poly2(), k in -3i64..4, s in prop::bool::ANY) {
            let value = LaurentPoly::var_pow(Q, 0, k, if s { 1 } else { -1 });
            let lhs = (&a * &b).substitute('t', &value).unwrap();
            let rhs = a.substitute('t', &value).unwrap().try_mul(&b.substitute('t', &value).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rational_canonical_under_refactoring(a in arb_poly1(), b in arb_poly1(), c in arb_poly1()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let direct = RationalFn::new(a.clone(), b.clone()).unwrap();
            let scaled = RationalFn::new(&a * &c, &b * &c).unwrap();
            prop_assert_eq!(direct, scaled);
        }

        #[test]
        fn rational_field_ops(a in arb_poly2(), b in arb_poly2(), c in arb_poly2(), d in arb_poly2()) {
            prop_assume!(!b.is_zero() && !d.is_zero());
            let x = RationalFn::new(a, b).unwrap();
            let y = RationalFn::new(c, d).unwrap();
            let s = x.try_add(&y).unwrap();
            prop_assert_eq!(s.try_sub(&y).unwrap(), x.clone());
            if !y.is_zero() {
                prop_assert_eq!(x.try_mul(&y).unwrap().try_div(&y).unwrap(), x);
            }
        }
    }
}
