use num_bigint::BigInt;

use super::{cycle_graph, dichromatic, jones_graph, GraphError};
use crate::khovanov::{jones_unnormalized, kauffman_bracket};
use crate::link::{braid_closure, parse_braid, Diagram};
use crate::poly::{LaurentPoly, RationalFn, Q};

/// The alternating link of the cycle graph `C_k`: the closure of `σ_1^{-k}`,
/// with crossing `c` standing for edge `c`.
pub fn cycle_link(k: usize) -> Result<Diagram, GraphError> {
    if k == 0 {
        return Err(GraphError::Parameters("cycle needs k ≥ 1".into()));
    }
    let word = format!("2:{}", " -1".repeat(k));
    Ok(braid_closure(&parse_braid(&word).expect("valid word")))
}

/// Both sides of `P_G(1 + z², (z + z^{-1})²) = (z + z^{-1})^N ⟨L^G⟩(z)` for
/// `G = C_k`, plus the per-state check `2k(ε) = N - |ε| + c(ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZRelation {
    pub k: usize,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub components_vs_circles: bool,
}

impl ZRelation {
    pub fn holds(&self) -> bool {
        self.components_vs_circles && self.lhs == self.rhs
    }
}

pub fn z_relation(k: usize) -> Result<ZRelation, GraphError> {
    let g = cycle_graph(k);
    let link = cycle_link(k)?;
    let n = g.vertices() as i64;
    let components_vs_circles = (0..1u64 << k)
        .all(|e| 2 * g.state(e).components as i64 == n - e.count_ones() as i64 + link.resolve_mask(e).circles as i64);
    let z_plus = LaurentPoly::from_terms(Q, &[(1, 1), (-1, 1)]);
    let q = LaurentPoly::from_terms(Q, &[(0, 1), (2, 1)]);
    let lhs = dichromatic(&g).eval(&[RationalFn::from_poly(q), RationalFn::from_poly(z_plus.pow(2))], Q)?;
    let lhs = lhs.as_poly().cloned().expect("polynomial images");
    let rhs = &z_plus.pow(k as u32) * &kauffman_bracket(&link);
    Ok(ZRelation { k, lhs, rhs, components_vs_circles })
}

/// Search for `±q^{a/2}` and an optional `q ↦ q^{-1}` taking `Ĵ(T_{2,k})` to
/// the series `J_{C_k}` on `window`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitMatch {
    pub k: usize,
    pub window: (i64, i64),
    pub series: LaurentPoly,
    pub jones: LaurentPoly,
    /// `(sign, a, inverted)` for the first match found.
    pub unit: Option<(i8, i64, bool)>,
}

pub fn series_unit_match(k: usize, window: (i64, i64)) -> Result<UnitMatch, GraphError> {
    let g = cycle_graph(k);
    let series = jones_graph(&g, window);
    let jones = jones_unnormalized(&braid_closure(&parse_braid(&format!("2:{}", " 1".repeat(k))).expect("valid word")));
    let (lo, hi) = (2 * window.0, 2 * window.1);
    let mut unit = None;
    'search: for inverted in [false, true] {
        let base = if inverted { jones.invert_var(0) } else { jones.clone() };
        let (blo, bhi) = base.exp_range(0).unwrap_or((0, 0));
        for a in lo - bhi..=hi - blo {
            for sign in [1i8, -1] {
                let cand = base.shift([a, 0]).scale(&BigInt::from(sign)).truncate(0, lo, hi);
                if cand == series {
                    unit = Some((sign, a, inverted));
                    break 'search;
                }
            }
        }
    }
    Ok(UnitMatch { k, window, series, jones, unit })
}
