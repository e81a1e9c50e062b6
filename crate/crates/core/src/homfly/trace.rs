use std::collections::HashMap;

use super::hecke::{length, reduced_word, HeckeElement, Perm};
use crate::poly::{LaurentPoly, RationalFn, Vars};

/// Trace values are kept as polynomials in `q` and `d`, the value of a
/// disjoint unknot, and only then evaluated at `d = (1 + t^{-1}q)/(1 - q^2)`.
const QD: Vars = Vars::two('q', 'd');
pub const QT: Vars = Vars::two('q', 't');

/// `d = (1 + t^{-1}q)/(1 - q^2)`
pub fn unknot_factor() -> RationalFn {
    let num = LaurentPoly::from_terms2(QT, &[(0, 0, 1), (1, -1, 1)]);
    let den = LaurentPoly::from_terms2(QT, &[(0, 0, 1), (2, 0, -1)]);
    RationalFn::new(num, den).expect("nonzero denominator")
}

fn lift(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero(QD);
    for (e, c) in p.terms() {
        out.add_term([e[0], 0], c.clone());
    }
    out
}

/// The trace with `tr(x T_{n}) = tr(x)`, `tr(x ⊔ |) = d tr(x)`, `tr(1_1) = 1`.
/// Memoizes the value of every basis element met.
#[derive(Clone, Debug, Default)]
pub struct MarkovTrace {
    memo: HashMap<Perm, LaurentPoly>,
}

impl MarkovTrace {
    pub fn new() -> Self {
        Self::default()
    }

    fn basis_trace(&mut self, w: &[u8]) -> LaurentPoly {
        let p = w.len();
        if p <= 1 {
            return LaurentPoly::one(QD);
        }
        if let Some(v) = self.memo.get(w) {
            return v.clone();
        }
        let top = (p - 1) as u8;
        let value = if w[p - 1] == top {
            &self.basis_trace(&w[..p - 1]) * &LaurentPoly::var(QD, 1)
        } else {
            // w = u · s_{p-1} s_{p-2} ... s_{j+1} with u fixing the last point,
            // so tr(T_w) = tr(T_u T_{p-1} T_v) = tr(T_v T_u) one level down.
            let j = w.iter().position(|&x| x == top).expect("permutation");
            let mut u = w.to_vec();
            for k in j..p - 1 {
                u.swap(k, k + 1);
            }
            assert_eq!(length(&u) + (p - 1 - j), length(w), "coset decomposition must be reduced");
            let mut x = HeckeElement::identity(p - 1);
            for g in (j + 1..p - 1).rev() {
                x = x.mul_generator(g);
            }
            for g in reduced_word(&u[..p - 1]) {
                x = x.mul_generator(g);
            }
            self.trace_qd(&x)
        };
        self.memo.insert(w.to_vec(), value.clone());
        value
    }

    fn trace_qd(&mut self, h: &HeckeElement) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(QD);
        for (w, c) in h.terms() {
            acc += &(&lift(c) * &self.basis_trace(w));
        }
        acc
    }

    /// The trace as a rational function of `q` and `t`.
    pub fn trace(&mut self, h: &HeckeElement) -> RationalFn {
        let q = RationalFn::from_poly(LaurentPoly::var(QT, 0));
        self.trace_qd(h).eval(&[q, unknot_factor()], QT).expect("d has a nonzero denominator")
    }
}

pub fn markov_trace(h: &HeckeElement) -> RationalFn {
    MarkovTrace::new().trace(h)
}
