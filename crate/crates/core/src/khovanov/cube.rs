use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::KhError;
use crate::homology::{GradedComplex, SparseIntMatrix};
use crate::link::{Diagram, EdgeEvent, EventKind, Resolution};

/// Cubes larger than this are refused (the state list is kept in memory).
pub const MAX_CUBE_CROSSINGS: usize = 20;

/// A generator of the unnormalized complex: the state `mask` together with a
/// labeling of its circles, where bit `k` of `x_labels` marks circle `k` as `X`
/// and a clear bit marks it as `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KhBasisElement {
    pub mask: u64,
    pub x_labels: u32,
}

impl KhBasisElement {
    pub fn i(&self) -> i64 {
        self.mask.count_ones() as i64
    }

    /// `#1 - #X + |ε|` for a state with `circles` circles.
    pub fn degree(&self, circles: usize) -> i64 {
        circles as i64 - 2 * self.x_labels.count_ones() as i64 + self.i()
    }
}

/// The cube of resolutions of a diagram, with every state resolved once.
/// Chain groups and differentials are produced per bidegree on demand.
#[derive(Clone, Debug)]
pub struct KhCube {
    diagram: Diagram,
    states: Vec<Resolution>,
    by_weight: Vec<Vec<u64>>,
}

impl KhCube {
    pub fn new(d: &Diagram) -> Result<Self, KhError> {
        let n = d.crossing_count();
        if n > MAX_CUBE_CROSSINGS {
            return Err(KhError::TooLarge(n));
        }
        let states: Vec<Resolution> = (0..1u64 << n).into_par_iter().map(|m| d.resolve_mask(m)).collect();
        if let Some(r) = states.iter().find(|r| r.circles > 31) {
            return Err(KhError::TooManyCircles(r.circles));
        }
        let mut by_weight = vec![Vec::new(); n + 1];
        for m in 0..1u64 << n {
            by_weight[m.count_ones() as usize].push(m);
        }
        Ok(KhCube { diagram: d.clone(), states, by_weight })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn resolution(&self, mask: u64) -> &Resolution {
        &self.states[mask as usize]
    }

    /// Ranks of the chain groups `C^{i,j}` with `i ≤ imax`.
    pub fn dims(&self, imax: Option<i64>) -> BTreeMap<(i64, i64), usize> {
        let mut out = BTreeMap::new();
        for (i, masks) in self.by_weight.iter().enumerate() {
            if imax.is_some_and(|m| i as i64 > m) {
                break;
            }
            for &m in masks {
                let c = self.states[m as usize].circles as i64;
                for x in 0..=c {
                    *out.entry((i as i64, c - 2 * x + i as i64)).or_insert(0) += binomial(c, x);
                }
            }
        }
        out
    }

    /// Basis of `C^{i,j}`: states in increasing mask order, then labelings in
    /// lexicographic order over circles (sorted by smallest arc) with `1 < X`.
    pub fn block(&self, i: i64, j: i64) -> Vec<KhBasisElement> {
        let mut out = Vec::new();
        let Some(masks) = usize::try_from(i).ok().and_then(|i| self.by_weight.get(i)) else {
            return out;
        };
        for &mask in masks {
            let c = self.states[mask as usize].circles as i64;
            let twice_x = c + i - j;
            if twice_x < 0 || twice_x % 2 != 0 || twice_x / 2 > c {
                continue;
            }
            let x = (twice_x / 2) as u32;
            let c = c as u32;
            let mut v: u64 = (1u64 << x) - 1;
            while v < 1u64 << c {
                out.push(KhBasisElement { mask, x_labels: reverse_bits(v as u32, c) });
                if x == 0 {
                    break;
                }
                let t = v | (v - 1);
                v = (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1));
            }
        }
        out
    }

    /// The edge map from state `mask` across crossing `k` (bit `k` clear).
    pub fn event(&self, mask: u64, k: usize) -> EdgeEvent {
        self.diagram.event_between(&self.states[mask as usize], &self.states[(mask | 1 << k) as usize], k)
    }

    /// Matrix of `d: C^{i,j} → C^{i+1,j}` in the bases given by [`KhCube::block`].
    pub fn differential(&self, source: &[KhBasisElement], target: &[KhBasisElement]) -> SparseIntMatrix {
        let index: HashMap<KhBasisElement, usize> = target.iter().enumerate().map(|(r, g)| (*g, r)).collect();
        let n = self.diagram.crossing_count();
        let mut trip = Vec::new();
        let mut col = 0;
        for chunk in source.chunk_by(|a, b| a.mask == b.mask) {
            let mask = chunk[0].mask;
            for k in (0..n).filter(|&k| mask >> k & 1 == 0) {
                let ev = self.event(mask, k);
                let sign = ev.sign() as i64;
                let to = mask | 1 << k;
                for (off, g) in chunk.iter().enumerate() {
                    apply(&ev, g.x_labels, |lab| {
                        let row = index[&KhBasisElement { mask: to, x_labels: lab }];
                        trip.push((row, col + off, sign));
                    });
                }
            }
            col += chunk.len();
        }
        SparseIntMatrix::from_triplets(target.len(), source.len(), trip)
    }

    /// The unnormalized complex restricted to `j ∈ window` and `i ≤ imax + 1`,
    /// with differentials out of every `i ≤ imax`.
    pub fn complex(&self, window: Option<(i64, i64)>, imax: Option<i64>) -> GradedComplex {
        let dims = self.dims(imax.map(|m| m + 1));
        let mut js: Vec<i64> =
            dims.keys().map(|k| k.1).filter(|&j| window.is_none_or(|(lo, hi)| lo <= j && j <= hi)).collect();
        js.sort_unstable();
        js.dedup();
        let parts: Vec<GradedComplex> = js
            .par_iter()
            .map(|&j| {
                let is: Vec<i64> = dims.keys().filter(|k| k.1 == j).map(|k| k.0).collect();
                let blocks: BTreeMap<i64, Vec<KhBasisElement>> =
                    is.par_iter().map(|&i| (i, self.block(i, j))).collect();
                let mut c = GradedComplex::new();
                for (&i, b) in &blocks {
                    c.set_dim(i, j, b.len());
                }
                let diffs: Vec<(i64, SparseIntMatrix)> = blocks
                    .par_iter()
                    .filter(|(i, _)| imax.is_none_or(|m| **i <= m))
                    .filter_map(|(&i, src)| Some((i, self.differential(src, blocks.get(&(i + 1))?))))
                    .collect();
                for (i, m) in diffs {
                    c.set_diff(i, j, m);
                }
                c
            })
            .collect();
        let mut out = GradedComplex::new();
        for p in parts {
            out.absorb(p);
        }
        out
    }
}

/// Applies `m` or `Δ` along an edge to one labeling, emitting each target labeling.
fn apply(ev: &EdgeEvent, lab: u32, mut emit: impl FnMut(u32)) {
    let mut base = 0u32;
    for &(s, t) in &ev.unchanged {
        base |= (lab >> s & 1) << t;
    }
    match ev.kind {
        EventKind::Merge { a, b, into } => {
            let (la, lb) = (lab >> a & 1, lab >> b & 1);
            if la & lb == 0 {
                emit(base | (la | lb) << into);
            }
        }
        EventKind::Split { from, b, c } => {
            if lab >> from & 1 == 1 {
                emit(base | 1 << b | 1 << c);
            } else {
                emit(base | 1 << c);
                emit(base | 1 << b);
            }
        }
    }
}

fn reverse_bits(v: u32, width: u32) -> u32 {
    if width == 0 {
        0
    } else {
        v.reverse_bits() >> (32 - width)
    }
}

fn binomial(n: i64, k: i64) -> usize {
    (0..k).fold(1usize, |acc, t| acc * (n - t) as usize / (t + 1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::graded_homology;
    use crate::khovanov::kauffman_bracket;
    use crate::link::{braid_closure, parse_braid};

    fn closure(s: &str) -> Diagram {
        braid_closure(&parse_braid(s).unwrap())
    }

    #[test]
    fn single_crossing_is_multiplication() {
        let cube = KhCube::new(&closure("2: 1")).unwrap();
        let src = cube.block(0, 0);
        assert_eq!(src, [KhBasisElement { mask: 0, x_labels: 0b10 }, KhBasisElement { mask: 0, x_labels: 0b01 }]);
        let dst = cube.block(1, 0);
        assert_eq!(dst, [KhBasisElement { mask: 1, x_labels: 1 }]);
        assert_eq!(cube.differential(&src, &dst).to_dense(), vec![vec![1.into(), 1.into()]]);
        let d = cube.differential(&cube.block(0, -2), &cube.block(1, -2));
        assert_eq!((d.rows(), d.cols(), d.nnz()), (0, 1, 0));
        assert_eq!(cube.dims(None).values().sum::<usize>(), 6);
    }

    #[test]
    fn labelings_are_lexicographic() {
        let cube = KhCube::new(&Diagram::unlink(3)).unwrap();
        let labs: Vec<u32> = cube.block(0, 1).iter().map(|g| g.x_labels).collect();
        // 1 1 X, 1 X 1, X 1 1
        assert_eq!(labs, [0b100, 0b010, 0b001]);
        for g in cube.block(0, -1) {
            assert_eq!(g.degree(3), -1);
        }
    }

    #[test]
    fn squares_anticommute() {
        for s in ["2: 1 1 1", "3: 1 -2 1 -2", "3: 1 2 -1 2 2"] {
            let c = KhCube::new(&closure(s)).unwrap().complex(None, None);
            assert!(c.verify_d_squared().is_ok(), "{s}");
            assert_eq!(c.euler(), kauffman_bracket(&closure(s)), "{s}");
        }
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let cube = KhCube::new(&closure("3: 1 2 1 2 1 2")).unwrap();
        let full = graded_homology(&cube.complex(None, None)).unwrap();
        let low = graded_homology(&cube.complex(None, Some(2))).unwrap();
        assert_eq!(low.restrict_i(0, 2), full.restrict_i(0, 2));
        let win = graded_homology(&cube.complex(Some((3, 5)), None)).unwrap();
        assert_eq!(win, full.iter().filter(|(k, _)| (3..=5).contains(&k.1)).map(|(k, g)| (k, g.clone())).collect());
    }
}
