use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{GraphError, GraphState, Multigraph};
use crate::homology::{graded_homology, GradedComplex, HomologyTable, SparseIntMatrix};

/// Cubes over more edges than this are refused.
pub const MAX_GRAPH_EDGES: usize = 20;

/// What the `P_n` edge map does when an edge closes a cycle inside a component.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The zero map.
    #[default]
    Zero,
    /// Multiplication by `X^n`: `1 ↦ X^n`, every other label to 0.
    XPower,
}

/// The cube theories on edge subsets. Each component carries a power of `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theory {
    /// `Z[X]/(X^{n+1})`, `deg X^a = n - a`, edges shift by `n`.
    Pn { n: u32, variant: Variant },
    /// `Z[X]`, `deg X^a = n - 1 - a`; merging `X^a, X^b` gives `X^{a+b+2-n}`.
    Qn { n: u32 },
    /// Labels `X^l` of degree `1 - l`; merge adds labels, a cycle edge multiplies by `X`.
    Enhanced,
}

impl Theory {
    fn validate(&self) -> Result<(), GraphError> {
        match *self {
            Theory::Pn { n: 0, .. } => Err(GraphError::Parameters("P_n needs n ≥ 1".into())),
            Theory::Qn { n } if !(1..=2).contains(&n) => {
                Err(GraphError::Parameters(format!("Q_n needs n ∈ {{1, 2}}, got {n}")))
            }
            _ => Ok(()),
        }
    }

    /// `(degree per component, degree per edge in the subset)` before labels are subtracted.
    fn weights(&self) -> (i64, i64) {
        match *self {
            Theory::Pn { n, .. } => (n as i64, n as i64),
            Theory::Qn { n } => (n as i64 - 1, 1),
            Theory::Enhanced => (1, 1),
        }
    }

    fn bound(&self) -> Option<u32> {
        match *self {
            Theory::Pn { n, .. } => Some(n),
            _ => None,
        }
    }

    fn merge(&self, a: u32, b: u32) -> Option<u32> {
        let c = match *self {
            Theory::Qn { n } => a + b + 2 - n,
            _ => a + b,
        };
        self.bound().is_none_or(|m| c <= m).then_some(c)
    }

    fn cycle(&self, a: u32) -> Option<u32> {
        match *self {
            Theory::Pn { variant: Variant::Zero, .. } => None,
            Theory::Pn { n, variant: Variant::XPower } => (a == 0).then_some(n),
            _ => Some(a + 1),
        }
    }

    /// Degrees covered by the finite theory; `None` for the series theories.
    fn full_window(&self, g: &Multigraph) -> Option<(i64, i64)> {
        let Theory::Pn { n, .. } = *self else { return None };
        let n = n as i64;
        Some((0, n * (g.vertices() + g.edge_count()) as i64))
    }
}

/// A generator: an edge subset and one label per component (components
/// ordered by smallest vertex).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphGenerator {
    pub mask: u64,
    pub labels: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct GraphCube {
    graph: Multigraph,
    theory: Theory,
    states: Vec<GraphState>,
    by_weight: Vec<Vec<u64>>,
}

/// Compositions of `total` into `parts` labels, each at most `bound`, in lexicographic order.
fn compositions(total: u32, parts: usize, bound: Option<u32>, emit: &mut impl FnMut(&[u32])) {
    fn go(rest: u32, left: usize, bound: Option<u32>, cur: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
        if left == 0 {
            if rest == 0 {
                emit(cur);
            }
            return;
        }
        let hi = bound.map_or(rest, |b| b.min(rest));
        for a in 0..=hi {
            if bound.is_some_and(|b| rest - a > b * (left as u32 - 1)) {
                continue;
            }
            cur.push(a);
            go(rest - a, left - 1, bound, cur, emit);
            cur.pop();
        }
    }
    go(total, parts, bound, &mut Vec::with_capacity(parts), emit);
}

impl GraphCube {
    pub fn new(g: &Multigraph, theory: Theory) -> Result<Self, GraphError> {
        theory.validate()?;
        let m = g.edge_count();
        if m > MAX_GRAPH_EDGES {
            return Err(GraphError::TooManyEdges(m));
        }
        let states = (0..1u64 << m).into_par_iter().map(|s| g.state(s)).collect();
        let mut by_weight = vec![Vec::new(); m + 1];
        for s in 0..1u64 << m {
            by_weight[s.count_ones() as usize].push(s);
        }
        Ok(GraphCube { graph: g.clone(), theory, states, by_weight })
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    /// Basis of `C^{i,j}`: subsets in increasing mask order, then labels lexicographically.
    pub fn block(&self, i: i64, j: i64) -> Vec<GraphGenerator> {
        let mut out = Vec::new();
        let Some(masks) = usize::try_from(i).ok().and_then(|i| self.by_weight.get(i)) else {
            return out;
        };
        let (per_comp, per_edge) = self.theory.weights();
        for &mask in masks {
            let k = self.states[mask as usize].components;
            let total = k as i64 * per_comp + i * per_edge - j;
            if total < 0 {
                continue;
            }
            compositions(total as u32, k, self.theory.bound(), &mut |labels| {
                out.push(GraphGenerator { mask, labels: labels.to_vec() })
            });
        }
        out
    }

    /// Image of one generator along edge `e` (not in its subset), if nonzero.
    fn edge_map(&self, g: &GraphGenerator, e: usize) -> Option<GraphGenerator> {
        let from = &self.states[g.mask as usize];
        let to_mask = g.mask | 1 << e;
        let to = &self.states[to_mask as usize];
        let (u, v) = self.graph.edges()[e];
        let (p, q) = (from.component_of[u], from.component_of[v]);
        let mut labels = vec![0u32; to.components];
        let mut first = vec![true; from.components];
        for (w, &c) in from.component_of.iter().enumerate() {
            if first[c] {
                first[c] = false;
                labels[to.component_of[w]] = g.labels[c];
            }
        }
        let target = to.component_of[u];
        labels[target] =
            if p == q { self.theory.cycle(g.labels[p])? } else { self.theory.merge(g.labels[p], g.labels[q])? };
        Some(GraphGenerator { mask: to_mask, labels })
    }

    /// Matrix of `d: C^{i,j} → C^{i+1,j}`; the edge `e` carries the sign
    /// `(-1)^{#edges before e in the subset}`.
    pub fn differential(&self, source: &[GraphGenerator], target: &[GraphGenerator]) -> SparseIntMatrix {
        let index: HashMap<&GraphGenerator, usize> = target.iter().enumerate().map(|(r, g)| (g, r)).collect();
        let m = self.graph.edge_count();
        let mut trip = Vec::new();
        for (col, g) in source.iter().enumerate() {
            for e in (0..m).filter(|&e| g.mask >> e & 1 == 0) {
                if let Some(img) = self.edge_map(g, e) {
                    let sign = if (g.mask & ((1u64 << e) - 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
                    trip.push((index[&img], col, sign));
                }
            }
        }
        SparseIntMatrix::from_triplets(target.len(), source.len(), trip)
    }

    /// The complex on `j ∈ window` (every degree for `P_n` when `window` is `None`).
    pub fn complex(&self, window: Option<(i64, i64)>) -> Result<GradedComplex, GraphError> {
        let (lo, hi) = window
            .or_else(|| self.theory.full_window(&self.graph))
            .ok_or_else(|| GraphError::Parameters("this theory needs a degree window".into()))?;
        let m = self.graph.edge_count() as i64;
        let parts: Vec<GradedComplex> = (lo..=hi)
            .into_par_iter()
            .map(|j| {
                let blocks: BTreeMap<i64, Vec<GraphGenerator>> = (0..=m).map(|i| (i, self.block(i, j))).collect();
                let mut c = GradedComplex::new();
                for (&i, b) in &blocks {
                    c.set_dim(i, j, b.len());
                }
                for (&i, src) in &blocks {
                    if let Some(dst) = blocks.get(&(i + 1)) {
                        if !src.is_empty() && !dst.is_empty() {
                            c.set_diff(i, j, self.differential(src, dst));
                        }
                    }
                }
                c
            })
            .collect();
        let mut out = GradedComplex::new();
        for p in parts {
            out.absorb(p);
        }
        Ok(out)
    }
}

pub fn build_pn_complex(g: &Multigraph, n: u32, variant: Variant) -> Result<GradedComplex, GraphError> {
    GraphCube::new(g, Theory::Pn { n, variant })?.complex(None)
}

pub fn build_qn_complex(g: &Multigraph, n: u32, window: (i64, i64)) -> Result<GradedComplex, GraphError> {
    GraphCube::new(g, Theory::Qn { n })?.complex(Some(window))
}

pub fn build_enhanced_complex(g: &Multigraph, window: (i64, i64)) -> Result<GradedComplex, GraphError> {
    GraphCube::new(g, Theory::Enhanced)?.complex(Some(window))
}

pub fn pn_homology(g: &Multigraph, n: u32, variant: Variant) -> Result<HomologyTable, GraphError> {
    Ok(graded_homology(&build_pn_complex(g, n, variant)?)?)
}

pub fn qn_homology(g: &Multigraph, n: u32, window: (i64, i64)) -> Result<HomologyTable, GraphError> {
    Ok(graded_homology(&build_qn_complex(g, n, window)?)?)
}

pub fn enhanced_homology(g: &Multigraph, window: (i64, i64)) -> Result<HomologyTable, GraphError> {
    Ok(graded_homology(&build_enhanced_complex(g, window)?)?)
}
