use num_bigint::BigInt;

use super::{GraphError, Multigraph};
use crate::homology::{Group, HomologyTable};
use crate::poly::{geometric_sum, LaurentPoly, Vars};

const TQ: Vars = Vars::two('t', 'q');

/// The polygon: `k` vertices joined in a cycle, edges `(i, i+1)` in order.
pub fn cycle_graph(k: usize) -> Multigraph {
    Multigraph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect()).expect("valid cycle")
}

fn tq(t: i64, q: i64) -> LaurentPoly {
    LaurentPoly::from_terms2(TQ, &[(t, q, 1)])
}

/// `1 + q + ... + q^m` in the `(t, q)` ring.
fn braces(m: u32) -> LaurentPoly {
    geometric_sum(Vars::one('q'), m)
        .eval(&[crate::poly::RationalFn::from_poly(tq(0, 1))], TQ)
        .expect("polynomial")
        .as_poly()
        .cloned()
        .expect("polynomial")
}

/// Closed form of the `P_n` homology of the polygon with `k ≥ 3` sides
/// (zero map on cycle-closing edges): free part and `Z_{n+1}` torsion.
pub fn polygon_reference(k: usize, n: u32) -> Result<HomologyTable, GraphError> {
    if k < 3 || n == 0 {
        return Err(GraphError::Parameters(format!("polygon reference needs k ≥ 3 and n ≥ 1, got k = {k}, n = {n}")));
    }
    let (k, ni) = (k as i64, n as i64);
    let small = braces(n - 1);
    let big = braces(n);
    let (free, torsion): (LaurentPoly, Vec<(i64, i64)>) = if k % 2 == 1 {
        let g = (k - 1) / 2;
        let mut inner = tq(2 * g - 1, 2 * g * ni);
        for i in 1..g {
            inner += &(&(&tq(2 * i - 1, 0) + &tq(2 * i, 0)) * &tq(0, g * ni - g + i * (ni + 1)));
        }
        let free = &(&(&small.pow(k as u32) + &(&small * &inner)) + &(&tq(2 * g, 2 * g * ni) * &big))
            + &(&tq(2 * g + 1, (2 * g + 1) * ni) * &big);
        (free, (1..=g).map(|i| (2 * i - 1, g * ni - g - 1 + i * (ni + 1))).collect())
    } else {
        let g = (k - 2) / 2;
        let mut inner = tq(2 * g, (2 * g + 1) * ni);
        for i in 0..g {
            inner += &(&(&tq(2 * i, 0) + &tq(2 * i + 1, 0)) * &tq(0, g * ni + ni - g + i * (ni + 1)));
        }
        let free = &(&(&small.pow(k as u32) + &(&small * &inner)) + &(&tq(2 * g + 1, (2 * g + 1) * ni) * &big))
            + &(&tq(2 * g + 2, (2 * g + 2) * ni) * &big);
        (free, (1..=g).map(|i| (2 * i, (g + 1) * (ni - 1) + i * (ni + 1))).collect())
    };
    let mut table = HomologyTable::new();
    for (e, c) in free.terms() {
        let rank = usize::try_from(c).expect("nonnegative ranks");
        table.insert(e[0] / 2, e[1] / 2, Group::free(rank));
    }
    for (i, j) in torsion {
        let rank = table.rank(i, j);
        table.insert(i, j, Group { rank, torsion: vec![BigInt::from(n + 1)] });
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{pn_homology, specialize_pn, Variant};

    #[test]
    fn triangle_n1_by_hand() {
        let r = polygon_reference(3, 1).unwrap();
        assert_eq!(
            r.poincare(),
            LaurentPoly::from_terms2(TQ, &[(0, 0, 1), (1, 2, 1), (2, 2, 1), (2, 3, 1), (3, 3, 1), (3, 4, 1)])
        );
        assert_eq!(r.torsion(1, 1), &[BigInt::from(2)]);
    }

    #[test]
    fn reference_euler_matches_specialization() {
        for k in 3..8 {
            for n in 1..4 {
                let r = polygon_reference(k, n).unwrap();
                assert_eq!(r.euler(), specialize_pn(&cycle_graph(k), n), "k = {k}, n = {n}");
            }
        }
        assert!(polygon_reference(2, 1).is_err());
    }

    #[test]
    fn small_polygons_match_computation() {
        for (k, n) in [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)] {
            let h = pn_homology(&cycle_graph(k), n, Variant::Zero).unwrap();
            assert_eq!(h, polygon_reference(k, n).unwrap(), "k = {k}, n = {n}");
        }
    }
}
