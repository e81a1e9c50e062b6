//! The HOMFLYPT polynomial of braid closures through the Hecke algebra and
//! its Markov trace.

mod hecke;
mod models;
mod trace;
mod wide;

use thiserror::Error;

pub use hecke::{identity_perm, length, reduced_word, HeckeElement, Perm};
pub use models::{fixed_model_one, fixed_model_two};
pub use trace::{markov_trace, unknot_factor, MarkovTrace, QT};
pub use wide::{parse_wide_word, wide_edge_expand, WideLetter};

use crate::link::{BraidWord, LinkError};
use crate::poly::{mono, LaurentPoly, PolyError, RationalFn, Vars, Q};

/// Variables of `G` written with `a = q√α`.
pub const QA: Vars = Vars::two('q', 'a');

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomflyError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error("specialization is not a Laurent polynomial: {0}")]
    NotPolynomial(String),
    #[error("bad wide-edge word: {0}")]
    BadWord(String),
}

/// The image of a braid word in the Hecke algebra.
pub fn hecke_normal_form(b: &BraidWord) -> HeckeElement {
    let mut h = HeckeElement::identity(b.strands());
    for &w in b.letters() {
        let i = w.unsigned_abs() as usize;
        h = if w > 0 { h.mul_generator(i) } else { h.mul_inverse_generator(i) };
    }
    h
}

/// `F` of a braid closure together with `ω = n_+ - n_- - s + 1`, which fixes
/// `G = √α^ω F` with `α = -t^{-1} q^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomflyValue {
    /// `F` in `q` and `t`.
    pub f: RationalFn,
    pub omega: i64,
}

impl HomflyValue {
    /// `G` in `q` and `a = q√α`: `G = (a/q)^ω F(q, t = -q a^{-2})`.
    pub fn g(&self) -> Result<RationalFn, HomflyError> {
        let q = RationalFn::from_poly(LaurentPoly::var(QA, 0));
        let t = RationalFn::from_poly(LaurentPoly::from_terms2(QA, &[(1, -2, -1)]));
        let f = self.f.eval(&[q, t], QA)?;
        let unit = LaurentPoly::from_terms2(QA, &[(-self.omega, self.omega, 1)]);
        Ok(f.mul_poly(&unit))
    }

    /// `G_n = q^{(n-1)ω} F(q, t = -q^{1-2n})`.
    pub fn specialize(&self, n: u32) -> Result<LaurentPoly, HomflyError> {
        let n = n as i64;
        let q = RationalFn::from_poly(mono(Q, 1));
        let t = RationalFn::from_poly(LaurentPoly::from_terms(Q, &[(1 - 2 * n, -1)]));
        let v = self.f.eval(&[q, t], Q)?.mul_poly(&mono(Q, (n - 1) * self.omega));
        v.as_poly().cloned().ok_or_else(|| HomflyError::NotPolynomial(v.to_string()))
    }
}

pub fn homfly_f(b: &BraidWord) -> RationalFn {
    markov_trace(&hecke_normal_form(b))
}

pub fn homfly_g(b: &BraidWord) -> HomflyValue {
    let omega = b.n_plus() as i64 - b.n_minus() as i64 - b.strands() as i64 + 1;
    HomflyValue { f: homfly_f(b), omega }
}

pub fn specialize_gn(g: &HomflyValue, n: u32) -> Result<LaurentPoly, HomflyError> {
    g.specialize(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::parse_braid;

    fn braid(s: &str) -> BraidWord {
        parse_braid(s).unwrap()
    }

    #[test]
    fn hecke_examples() {
        assert_eq!(hecke_normal_form(&braid("3:")), HeckeElement::identity(3));
        let h = hecke_normal_form(&braid("2: 1 1"));
        assert_eq!(h.coefficient(&[0, 1]), mono(Q, 2));
        assert_eq!(h.coefficient(&[1, 0]), &LaurentPoly::one(Q) - &mono(Q, 2));
        assert_eq!(hecke_normal_form(&braid("2: 1 -1")), HeckeElement::identity(2));
    }

    #[test]
    fn f_values() {
        assert_eq!(homfly_f(&braid("1:")), RationalFn::one(QT));
        assert_eq!(homfly_f(&braid("2: 1")), RationalFn::one(QT));
        assert_eq!(homfly_f(&braid("2:")), unknot_factor());
        let alpha = RationalFn::from_poly(LaurentPoly::from_terms2(QT, &[(-1, -1, -1)]));
        assert_eq!(homfly_f(&braid("2: -1")), alpha);
        assert_eq!(homfly_f(&braid("2: 1 1 1")), homfly_f(&braid("2: -1 1 1 1 1")));
    }

    #[test]
    fn g_is_markov_invariant() {
        let one = RationalFn::one(QA);
        for s in ["1:", "2: 1", "2: -1", "3: 1 2", "3: -1 2", "4: 1 -2 3"] {
            assert_eq!(homfly_g(&braid(s)).g().unwrap(), one, "{s}");
            for n in 1..5 {
                assert!(homfly_g(&braid(s)).specialize(n).unwrap().is_one());
            }
        }
        let t = homfly_g(&braid("2: 1 1 1")).g().unwrap();
        assert_eq!(t, homfly_g(&braid("3: 1 1 1 2")).g().unwrap());
        assert_eq!(t, homfly_g(&braid("3: 1 1 1 -2")).g().unwrap());
        let m = homfly_g(&braid("2: -1 -1 -1")).g().unwrap();
        assert_ne!(t, m);
        assert_eq!(m, t.invert_var(0).invert_var(1));
    }

    #[test]
    fn g_skein() {
        // a^{-1} G(L+) - a G(L-) = (q^{-1} - q) G(L0)
        let g = |s: &str| homfly_g(&braid(s)).g().unwrap();
        let a = RationalFn::from_poly(LaurentPoly::var(QA, 1));
        let z = RationalFn::from_poly(LaurentPoly::from_terms2(QA, &[(-1, 0, 1), (1, 0, -1)]));
        for (p, m, o) in [("2: 1 1 1", "2: 1 1 -1", "2: 1 1"), ("3: 1 -2 1 2", "3: 1 -2 -1 2", "3: 1 -2 2")] {
            let lhs = g(p).try_div(&a).unwrap().try_sub(&g(m).try_mul(&a).unwrap()).unwrap();
            assert_eq!(lhs, z.try_mul(&g(o)).unwrap());
        }
    }

    #[test]
    fn two_unknots() {
        let g = homfly_g(&braid("2:"));
        assert_eq!(g.omega, -1);
        assert_eq!(g.specialize(2).unwrap(), crate::poly::quantum_integer(2));
        assert_eq!(g.specialize(3).unwrap(), crate::poly::quantum_integer(3));
    }
}
