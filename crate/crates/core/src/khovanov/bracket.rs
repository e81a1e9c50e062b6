use num_bigint::BigInt;
use rayon::prelude::*;

use super::KhError;
use crate::link::Diagram;
use crate::poly::{mono, LaurentPoly, RationalFn, Q};

/// `q + q^{-1}`
pub(crate) fn circle_value() -> LaurentPoly {
    LaurentPoly::from_terms(Q, &[(1, 1), (-1, 1)])
}

/// Number of states with `|ε| = i` and `c(ε) = c`, as `counts[i][c]`.
fn state_counts(d: &Diagram) -> Vec<Vec<u64>> {
    let n = d.crossing_count();
    let width = d.arcs() + 1;
    let fold = |mut acc: Vec<Vec<u64>>, mask: u64| {
        let r = d.resolve_mask(mask);
        acc[mask.count_ones() as usize][r.circles] += 1;
        acc
    };
    (0..1u64 << n).into_par_iter().fold(|| vec![vec![0; width]; n + 1], fold).reduce(
        || vec![vec![0; width]; n + 1],
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                for (u, v) in x.iter_mut().zip(y) {
                    *u += v;
                }
            }
            a
        },
    )
}

/// `⟨D⟩ = Σ_ε (-1)^{|ε|} q^{|ε|} (q + q^{-1})^{c(ε)}`
pub fn kauffman_bracket(d: &Diagram) -> LaurentPoly {
    let counts = state_counts(d);
    let v = circle_value();
    let max_c = counts.iter().flat_map(|row| row.iter().rposition(|&k| k > 0)).max().unwrap_or(0);
    let powers: Vec<LaurentPoly> = (0..=max_c as u32).map(|c| v.pow(c)).collect();
    let mut out = LaurentPoly::zero(Q);
    for (i, row) in counts.iter().enumerate() {
        let mut layer = LaurentPoly::zero(Q);
        for (c, &k) in row.iter().enumerate().filter(|e| *e.1 > 0) {
            layer += &powers[c].scale(&BigInt::from(k));
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out += &layer.shift([2 * i as i64, 0]).scale(&BigInt::from(sign));
    }
    out
}

/// `Ĵ(D) = (-1)^{n_-} q^{n_+ - 2n_-} ⟨D⟩`
pub fn jones_unnormalized(d: &Diagram) -> LaurentPoly {
    let (np, nm) = (d.n_plus() as i64, d.n_minus() as i64);
    let sign = if nm % 2 == 0 { 1 } else { -1 };
    kauffman_bracket(d).shift([2 * (np - 2 * nm), 0]).scale(&BigInt::from(sign))
}

/// The normalized Jones polynomial `J = Ĵ / (q + q^{-1})`.
pub fn jones_polynomial(d: &Diagram) -> LaurentPoly {
    let r = RationalFn::new(jones_unnormalized(d), circle_value()).expect("nonzero divisor");
    r.as_poly().cloned().expect("Ĵ of a link is divisible by q + q^{-1}")
}

/// Checks `q^{-2} Ĵ(L+) - q^2 Ĵ(L-) = (q^{-1} - q) Ĵ(L0)`. The triple must
/// have matching crossing counts and signs away from the changed crossing.
pub fn jones_skein_check(plus: &Diagram, minus: &Diagram, zero: &Diagram) -> Result<bool, KhError> {
    let n = plus.crossing_count();
    let consistent = n >= 1
        && minus.crossing_count() == n
        && zero.crossing_count() + 1 == n
        && plus.n_plus() == minus.n_plus() + 1
        && zero.n_plus() == minus.n_plus()
        && zero.n_minus() == plus.n_minus();
    if !consistent {
        return Err(KhError::SkeinTriple);
    }
    let lhs = &jones_unnormalized(plus).shift([-4, 0]) - &jones_unnormalized(minus).shift([4, 0]);
    let rhs = &(&mono(Q, -1) - &mono(Q, 1)) * &jones_unnormalized(zero);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{braid_closure, parse_braid, parse_pd};

    fn closure(s: &str) -> Diagram {
        braid_closure(&parse_braid(s).unwrap())
    }

    fn q(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Q, terms)
    }

    #[test]
    fn unlinks() {
        for k in 0..=5 {
            assert_eq!(kauffman_bracket(&Diagram::unlink(k)), circle_value().pow(k as u32));
        }
        for s in ["1:", "2: 1", "2: -1", "3: 1 -2"] {
            assert_eq!(jones_unnormalized(&closure(s)), circle_value(), "{s}");
        }
    }

    #[test]
    fn hopf_and_trefoil() {
        assert_eq!(kauffman_bracket(&closure("2: 1 1")), q(&[(-2, 1), (0, 1), (2, 1), (4, 1)]));
        assert_eq!(jones_unnormalized(&closure("2: 1 1")), q(&[(0, 1), (2, 1), (4, 1), (6, 1)]));
        assert_eq!(jones_polynomial(&closure("2: 1 1 1")), q(&[(2, 1), (6, 1), (8, -1)]));
        assert!(jones_polynomial(&closure("2: 1")).is_one());
        let t = jones_unnormalized(&closure("2: 1 1 1"));
        assert_eq!(t, q(&[(1, 1), (3, 1), (5, 1), (9, -1)]));
        assert_eq!(jones_unnormalized(&closure("2: 1 1 1").mirror()), t.invert_var(0));
    }

    #[test]
    fn pd_trefoil_matches_a_braid_closure() {
        let d = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3").unwrap();
        let j = jones_unnormalized(&d);
        let t = jones_unnormalized(&closure("2: 1 1 1"));
        assert!(j == t || j == t.invert_var(0));
    }

    #[test]
    fn recursive_axiom() {
        for s in ["2: 1 1 1", "3: 1 -2 1 -2", "3: 1 2 2 -1 2"] {
            let d = closure(s);
            let b = kauffman_bracket(&d);
            for c in 0..d.crossing_count() {
                let d0 = kauffman_bracket(&d.resolve_crossing(c, false).unwrap());
                let d1 = kauffman_bracket(&d.resolve_crossing(c, true).unwrap());
                assert_eq!(b, &d0 - &d1.shift([2, 0]), "{s} at {c}");
            }
        }
    }

    #[test]
    fn skein_triples() {
        let t = closure("2: 1 1 1");
        assert!(jones_skein_check(&t, &closure("2: 1 1 -1"), &closure("2: 1 1")).unwrap());
        assert!(jones_skein_check(&closure("2: 1"), &closure("2: -1"), &closure("2:")).unwrap());
        assert!(!jones_skein_check(&t, &closure("2: 1 1 -1"), &closure("3: 1 2")).unwrap());
        assert!(jones_skein_check(&t, &t, &closure("2: 1 1")).is_err());
    }
}
