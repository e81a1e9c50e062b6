use std::collections::BTreeMap;

use super::{khovanov_homology_with, unnormalized_homology, KhError, KhOptions};
use crate::homology::HomologyTable;
use crate::link::{braid_closure, BraidWord, Diagram};
use crate::poly::LaurentPoly;

/// `(σ_1 σ_2 ... σ_{p-1})^q` on `p` strands.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord, KhError> {
    if p == 0 {
        return Err(KhError::Parameters("a torus braid needs p ≥ 1".into()));
    }
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    Ok(BraidWord::new(p, letters)?)
}

/// `D_{p,q}`, the closure of the standard torus braid.
pub fn torus_diagram(p: usize, q: usize) -> Result<Diagram, KhError> {
    Ok(braid_closure(&torus_braid(p, q)?))
}

/// One comparison `H^{i,j}(D_lhs) = H^{i,j + j_offset}(D_rhs)` for `i ≤ i_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCheck {
    pub relation: &'static str,
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
    pub j_offset: i64,
    pub i_max: i64,
    /// Bidegrees (in the `lhs` grading) where the groups differ.
    pub mismatches: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StabilityReport {
    pub checks: Vec<StabilityCheck>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatches.is_empty())
    }
}

fn differences(a: &HomologyTable, b: &HomologyTable) -> Vec<(i64, i64)> {
    let mut keys: Vec<(i64, i64)> = a.iter().chain(b.iter()).map(|(k, _)| k).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.retain(|&(i, j)| a.get(i, j) != b.get(i, j));
    keys
}

/// Checks the stabilization of the unnormalized homology of `D_{p,q}` for
/// `q ∈ qs`, in degrees `i ≤ i_max`:
///
/// * `H^{i,j}(D_{p,q}) = H^{i,j}(D_{p,q-1})` for `i < p + q - 3`,
/// * `H^{i,j}(D_{p,q}) = H^{i,j}(D_{p,p+1})` for `q > p` and `i < 2p - 1`,
/// * `H^{i,j}(D_{p,p}) = H^{i,j+1}(D_{p-1,p})` for `i < 2p - 3`.
pub fn stability_check(p: usize, qs: &[usize], i_max: i64) -> Result<StabilityReport, KhError> {
    if p < 2 || qs.is_empty() || qs.iter().any(|&q| q <= p) {
        return Err(KhError::Parameters(format!("need 2 ≤ p < q for all q, got p = {p}, q ∈ {qs:?}")));
    }
    let mut cache: BTreeMap<(usize, usize), HomologyTable> = BTreeMap::new();
    let mut table = |pq: (usize, usize)| -> Result<HomologyTable, KhError> {
        if let Some(t) = cache.get(&pq) {
            return Ok(t.clone());
        }
        let opts = KhOptions { imax: Some(i_max), ..Default::default() };
        let t = unnormalized_homology(&torus_diagram(pq.0, pq.1)?, &opts)?;
        cache.insert(pq, t.clone());
        Ok(t)
    };
    let mut checks = Vec::new();
    let mut compare = |relation,
                       lhs,
                       rhs,
                       j_offset: i64,
                       bound: i64,
                       table: &mut dyn FnMut((usize, usize)) -> Result<HomologyTable, KhError>|
     -> Result<(), KhError> {
        let i_max = i_max.min(bound - 1);
        let a = table(lhs)?.restrict_i(i64::MIN, i_max);
        let b = table(rhs)?.restrict_i(i64::MIN, i_max).shifted(0, -j_offset);
        checks.push(StabilityCheck { relation, lhs, rhs, j_offset, i_max, mismatches: differences(&a, &b) });
        Ok(())
    };
    for &q in qs {
        compare("(q-1, q)", (p, q), (p, q - 1), 0, (p + q) as i64 - 3, &mut table)?;
    }
    for &q in qs.iter().filter(|&&q| q > p + 1) {
        compare("chain", (p, q), (p, p + 1), 0, 2 * p as i64 - 1, &mut table)?;
    }
    compare("(p, p)", (p, p), (p - 1, p), 1, 2 * p as i64 - 3, &mut table)?;
    Ok(StabilityReport { checks })
}

/// Poincaré polynomials `P_{m,n} = q^{-(m-1)n} P(T_{m,n})` and the agreement
/// of consecutive ones below `t^{m+n-3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableReport {
    pub m: usize,
    pub polys: Vec<(usize, LaurentPoly)>,
    /// `(n, n', bound, agree)`: `P_{m,n}` and `P_{m,n'}` agree in all `t^i`, `i < bound`.
    pub agreements: Vec<(usize, usize, i64, bool)>,
}

impl StableReport {
    pub fn passed(&self) -> bool {
        self.agreements.iter().all(|a| a.3)
    }
}

pub fn stable_poincare(m: usize, ns: &[usize]) -> Result<StableReport, KhError> {
    if m < 2 {
        return Err(KhError::Parameters(format!("stable polynomials need m ≥ 2, got {m}")));
    }
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let polys = ns
        .iter()
        .map(|&n| {
            let h = khovanov_homology_with(&torus_diagram(m, n)?, &KhOptions::default())?;
            Ok((n, h.poincare().shift([0, -2 * ((m - 1) * n) as i64])))
        })
        .collect::<Result<Vec<_>, KhError>>()?;
    let agreements = polys
        .windows(2)
        .map(|w| {
            let ((n, a), (n2, b)) = (&w[0], &w[1]);
            let bound = (m + n) as i64 - 3;
            let cut = |p: &LaurentPoly| p.truncate(0, i64::MIN, 2 * (bound - 1));
            (*n, *n2, bound, cut(a) == cut(b))
        })
        .collect();
    Ok(StableReport { m, polys, agreements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::khovanov_homology;
    use crate::link::parse_braid;

    #[test]
    fn torus_words() {
        assert_eq!(torus_braid(2, 3).unwrap(), parse_braid("2: 1 1 1").unwrap());
        assert_eq!(torus_braid(3, 2).unwrap(), parse_braid("3: 1 2 1 2").unwrap());
        assert_eq!(torus_braid(3, 0).unwrap().len(), 0);
        assert!(torus_diagram(0, 2).is_err());
    }

    #[test]
    fn symmetric_and_trivial() {
        let h23 = khovanov_homology(&torus_diagram(2, 3).unwrap()).unwrap();
        assert_eq!(khovanov_homology(&torus_diagram(3, 2).unwrap()).unwrap(), h23);
        let u = khovanov_homology(&torus_diagram(1, 0).unwrap()).unwrap();
        for q in 1..4 {
            assert_eq!(khovanov_homology(&torus_diagram(1, q).unwrap()).unwrap(), u);
        }
    }

    #[test]
    fn stability_p2() {
        let r = stability_check(2, &[3, 4, 5], 3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(stability_check(3, &[3], 2).is_err());
    }

    #[test]
    fn stable_p2() {
        let r = stable_poincare(2, &[3, 4, 5, 6]).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.agreements.iter().map(|a| a.2).collect::<Vec<_>>(), [2, 3, 4]);
        assert!(stable_poincare(1, &[3]).is_err());
    }
}
