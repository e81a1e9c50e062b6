use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{GraphError, Multigraph};
use crate::poly::{geometric_sum, mono, LaurentPoly, RationalFn, Vars, Q};

pub(crate) const QV: Vars = Vars::two('q', 'v');
const XY: Vars = Vars::two('x', 'y');
const QT: Vars = Vars::two('q', 't');

/// `counts[i][k]`: number of edge subsets with `|s| = i` and `k(s) = k`.
pub(crate) fn state_counts(g: &Multigraph) -> Vec<Vec<u64>> {
    let (m, n) = (g.edge_count(), g.vertices());
    let empty = || vec![vec![0u64; n + 1]; m + 1];
    (0..1u64 << m)
        .into_par_iter()
        .fold(empty, |mut acc, s| {
            acc[s.count_ones() as usize][g.state(s).components] += 1;
            acc
        })
        .reduce(empty, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                for (u, v) in x.iter_mut().zip(y) {
                    *u += v;
                }
            }
            a
        })
}

/// `P_G(q, v) = Σ_s (-1)^{|s|} q^{|s|} v^{k(s)}`
pub fn dichromatic(g: &Multigraph) -> LaurentPoly {
    let mut p = LaurentPoly::zero(QV);
    for (i, row) in state_counts(g).iter().enumerate() {
        for (k, &c) in row.iter().enumerate().filter(|e| *e.1 > 0) {
            let c = BigInt::from(c);
            p.add_term([2 * i as i64, 2 * k as i64], if i % 2 == 0 { c } else { -c });
        }
    }
    p
}

type Key = (usize, Vec<(usize, usize)>);

fn key(g: &Multigraph) -> Key {
    let mut e: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    (g.vertices(), e)
}

/// `P_G` by deletion-contraction: `P_G = P_{G-e} - q P_{G/e}`, `P_{N_k} = v^k`.
pub fn dichromatic_dc(g: &Multigraph) -> LaurentPoly {
    fn go(g: &Multigraph, memo: &mut HashMap<Key, LaurentPoly>) -> LaurentPoly {
        if g.edge_count() == 0 {
            return LaurentPoly::var_pow(QV, 1, g.vertices() as i64, 1);
        }
        let k = key(g);
        if let Some(p) = memo.get(&k) {
            return p.clone();
        }
        let e = g.edge_count() - 1;
        let del = go(&g.without_edge(e), memo);
        let con = go(&g.contract_edge(e), memo);
        let p = &del - &con.shift([2, 0]);
        memo.insert(k, p.clone());
        p
    }
    go(g, &mut HashMap::new())
}

fn rf(p: LaurentPoly) -> RationalFn {
    RationalFn::from_poly(p)
}

/// `T_G(x, y) = (x-1)^{-k(E)} (y-1)^{-N} P_G(1 - y, (x-1)(y-1))`
pub fn tutte(g: &Multigraph) -> Result<LaurentPoly, GraphError> {
    let x1 = LaurentPoly::from_terms2(XY, &[(1, 0, 1), (0, 0, -1)]);
    let y1 = LaurentPoly::from_terms2(XY, &[(0, 1, 1), (0, 0, -1)]);
    let one_minus_y = -&y1;
    let p = dichromatic(g).eval(&[rf(one_minus_y), rf(&x1 * &y1)], XY)?;
    let den = &x1.pow(g.components() as u32) * &y1.pow(g.vertices() as u32);
    let t = p.try_div(&rf(den))?;
    t.as_poly().cloned().ok_or_else(|| GraphError::Parameters(format!("Tutte quotient is not a polynomial: {t}")))
}

/// `T_G` by the bridge/loop recursion.
pub fn tutte_recursive(g: &Multigraph) -> LaurentPoly {
    fn go(g: &Multigraph, memo: &mut HashMap<Key, LaurentPoly>) -> LaurentPoly {
        if g.edge_count() == 0 {
            return LaurentPoly::one(XY);
        }
        let k = key(g);
        if let Some(p) = memo.get(&k) {
            return p.clone();
        }
        let e = g.edge_count() - 1;
        let (u, v) = g.edges()[e];
        let del = g.without_edge(e);
        let p = if u == v {
            &LaurentPoly::var(XY, 1) * &go(&del, memo)
        } else if del.components() > g.components() {
            &LaurentPoly::var(XY, 0) * &go(&g.contract_edge(e), memo)
        } else {
            &go(&del, memo) + &go(&g.contract_edge(e), memo)
        };
        memo.insert(k, p.clone());
        p
    }
    go(g, &mut HashMap::new())
}

/// `P_{G,n}(q) = P_G(q^n, 1 + q + ... + q^n)`
pub fn specialize_pn(g: &Multigraph, n: u32) -> LaurentPoly {
    let images = [rf(mono(Q, n as i64)), rf(geometric_sum(Q, n))];
    let r = dichromatic(g).eval(&images, Q).expect("polynomial images");
    r.as_poly().cloned().expect("polynomial images give a polynomial")
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, t| acc * (n - t) / (t + 1))
}

/// Coefficients of `q^j`, `j ∈ window`, of the Laurent series
/// `Q_{G,n}(q) = P_G(q, q^n/(q - 1))` expanded in `q^{-1}`.
pub fn specialize_qn(g: &Multigraph, n: i64, window: (i64, i64)) -> Result<LaurentPoly, GraphError> {
    if n > 2 {
        return Err(GraphError::Parameters(format!("Q_n needs n ≤ 2, got {n}")));
    }
    let counts = state_counts(g);
    let mut p = LaurentPoly::zero(Q);
    for j in window.0..=window.1 {
        let mut c = BigInt::from(0);
        for (i, row) in counts.iter().enumerate() {
            for (k, &cnt) in row.iter().enumerate().filter(|e| *e.1 > 0) {
                let (i, k) = (i as i64, k as i64);
                // q^i v^k = Σ_r C(r + k - 1, k - 1) q^{i + k(n-1) - r}
                let r = i + k * (n - 1) - j;
                let ways = if k == 0 { BigInt::from((r == 0) as u8) } else { binomial(r + k - 1, k - 1) };
                let term = ways * cnt;
                c += if i % 2 == 0 { term } else { -term };
            }
        }
        p.add_term([2 * j, 0], c);
    }
    Ok(p)
}

/// `J_G(q) = P_G(q, q^2/(q - 1))` on a window of degrees.
pub fn jones_graph(g: &Multigraph, window: (i64, i64)) -> LaurentPoly {
    specialize_qn(g, 2, window).expect("n = 2 is allowed")
}

fn dg_factor() -> LaurentPoly {
    LaurentPoly::from_terms2(QT, &[(0, 0, 1), (1, -1, 1)])
}

/// `D_G(t, q) = (1 + t^{-1}q)^m P_G(q, (1 + t^{-1}q)/(1 - q))`
pub fn dichromatic_dg(g: &Multigraph) -> RationalFn {
    let v = RationalFn::new(dg_factor(), LaurentPoly::from_terms2(QT, &[(0, 0, 1), (1, 0, -1)])).expect("nonzero");
    let p = dichromatic(g).eval(&[rf(LaurentPoly::var(QT, 0)), v], QT).expect("evaluation");
    p.mul_poly(&dg_factor().pow(g.edge_count() as u32))
}

/// Recovers `P_G(q, v)` from `D_G` and the edge count, by `t = q/(v(1 - q) - 1)`.
pub fn dichromatic_from_dg(dg: &RationalFn, m: usize) -> Result<RationalFn, GraphError> {
    let v_one_minus_q = LaurentPoly::from_terms2(QV, &[(0, 1, 1), (1, 1, -1)]);
    let t = RationalFn::new(LaurentPoly::var(QV, 0), &v_one_minus_q - &LaurentPoly::one(QV))?;
    let p = dg.eval(&[rf(LaurentPoly::var(QV, 0)), t], QV)?;
    Ok(p.try_div(&rf(v_one_minus_q.pow(m as u32)))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn tri() -> Multigraph {
        parse_graph("v 3 / e 1 2 / e 2 3 / e 1 3").unwrap()
    }

    fn qv(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms2(QV, terms)
    }

    #[test]
    fn dichromatic_examples() {
        assert_eq!(dichromatic(&Multigraph::empty(3)), qv(&[(0, 3, 1)]));
        let edge = parse_graph("v 2 / e 1 2").unwrap();
        assert_eq!(dichromatic(&edge), qv(&[(0, 2, 1), (1, 1, -1)]));
        // brute force over the 8 subsets: v^3 - 3qv^2 + 3q^2v - q^3v
        let expect = qv(&[(0, 3, 1), (1, 2, -3), (2, 1, 3), (3, 1, -1)]);
        assert_eq!(dichromatic(&tri()), expect);
        assert_eq!(dichromatic_dc(&tri()), expect);
        let loopy = parse_graph("v 2 / e 1 1 / e 1 2 / e 1 2 / e 2 2").unwrap();
        assert_eq!(dichromatic(&loopy), dichromatic_dc(&loopy));
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(tutte(&parse_graph("v 2 / e 1 2").unwrap()).unwrap().to_string(), "x");
        assert_eq!(tutte(&parse_graph("v 1 / e 1 1").unwrap()).unwrap().to_string(), "y");
        assert_eq!(tutte(&tri()).unwrap().to_string(), "x^2 + x + y");
        let g = parse_graph("v 4 / e 1 2 / e 2 3 / e 3 1 / e 3 4 / e 4 4 / e 1 2").unwrap();
        assert_eq!(tutte(&g).unwrap(), tutte_recursive(&g));
    }

    #[test]
    fn pn_examples() {
        assert_eq!(specialize_pn(&tri(), 1), LaurentPoly::from_terms(Q, &[(0, 1), (4, -1)]));
        for n in 1..4 {
            assert_eq!(specialize_pn(&Multigraph::empty(2), n), geometric_sum(Q, n).pow(2));
            let l = parse_graph("v 1 / e 1 1").unwrap();
            assert_eq!(specialize_pn(&l, n), &geometric_sum(Q, n) * &(&LaurentPoly::one(Q) - &mono(Q, n as i64)));
        }
    }

    #[test]
    fn qn_examples() {
        let ones = LaurentPoly::from_terms(Q, &[(1, 1), (0, 1), (-1, 1), (-2, 1), (-3, 1)]);
        assert_eq!(specialize_qn(&Multigraph::empty(1), 2, (-3, 1)).unwrap(), ones);
        let edge = parse_graph("v 2 / e 1 2").unwrap();
        let s = specialize_qn(&edge, 2, (-2, 3)).unwrap();
        assert_eq!(s, LaurentPoly::from_terms(Q, &[(1, 1), (0, 2), (-1, 3), (-2, 4)]));
        assert!(specialize_qn(&edge, 3, (0, 1)).is_err());
    }

    #[test]
    fn dg_round_trip() {
        let n1 = dichromatic_dg(&Multigraph::empty(1));
        let v = RationalFn::new(dg_factor(), LaurentPoly::from_terms2(QT, &[(0, 0, 1), (1, 0, -1)])).unwrap();
        assert_eq!(n1, v);
        for g in [tri(), parse_graph("v 3 / e 1 1 / e 1 2 / e 2 1").unwrap()] {
            let back = dichromatic_from_dg(&dichromatic_dg(&g), g.edge_count()).unwrap();
            assert_eq!(back, RationalFn::from_poly(dichromatic(&g)));
        }
    }
}
