use petgraph::unionfind::UnionFind;

use super::diagram::compact_labels;
use super::{Diagram, LinkError};

/// A total resolution: crossing `k` is smoothed according to bit `k` of `mask`.
/// Circles are numbered in order of their smallest arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub mask: u64,
    /// Circle index of every arc.
    pub circle_of_arc: Vec<usize>,
    pub circles: usize,
}

impl Resolution {
    pub fn bits(&self, n: usize) -> Vec<bool> {
        (0..n).map(|k| self.mask >> k & 1 == 1).collect()
    }

    /// Arcs of each circle, sorted.
    pub fn circle_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.circles];
        for (a, &c) in self.circle_of_arc.iter().enumerate() {
            out[c].push(a);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventKind {
    /// Circles `a` and `b` of the source become circle `into` of the target.
    Merge { a: usize, b: usize, into: usize },
    /// Circle `from` of the source becomes circles `b` and `c` of the target.
    Split { from: usize, b: usize, c: usize },
}

/// The local change along one edge of the cube of resolutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeEvent {
    pub source: u64,
    pub changed: usize,
    pub kind: EventKind,
    /// `(source circle, target circle)` for every circle not involved.
    pub unchanged: Vec<(usize, usize)>,
    /// Number of 1-bits before the changed position.
    pub sign_exponent: u32,
}

impl EdgeEvent {
    pub fn target(&self) -> u64 {
        self.source | 1 << self.changed
    }

    pub fn sign(&self) -> i8 {
        if self.sign_exponent.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub(crate) fn bits_to_mask(d: &Diagram, eps: &[bool]) -> Result<u64, LinkError> {
    if eps.len() != d.crossing_count() {
        return Err(LinkError::StateLength { expected: d.crossing_count(), got: eps.len() });
    }
    Ok(eps.iter().enumerate().fold(0, |m, (k, &b)| m | (b as u64) << k))
}

impl Diagram {
    pub fn resolve_all(&self, eps: &[bool]) -> Result<Resolution, LinkError> {
        Ok(self.resolve_mask(bits_to_mask(self, eps)?))
    }

    pub fn resolve_mask(&self, mask: u64) -> Resolution {
        let mut uf = UnionFind::new(self.arcs());
        for (k, x) in self.crossings().iter().enumerate() {
            for (p, q) in x.smoothing(mask >> k & 1 == 1) {
                uf.union(p, q);
            }
        }
        let (circle_of_arc, circles) = compact_labels(&mut uf, self.arcs());
        Resolution { mask, circle_of_arc, circles }
    }

    pub fn edge_event(&self, eps: &[bool], changed: usize) -> Result<EdgeEvent, LinkError> {
        let mask = bits_to_mask(self, eps)?;
        if changed >= eps.len() {
            return Err(LinkError::UnknownCrossing(changed));
        }
        if eps[changed] {
            return Err(LinkError::EdgeFromOne(changed));
        }
        let src = self.resolve_mask(mask);
        let dst = self.resolve_mask(mask | 1 << changed);
        Ok(self.event_between(&src, &dst, changed))
    }

    /// Classifies the edge from `src` to `dst`, which differ at `changed` only.
    pub fn event_between(&self, src: &Resolution, dst: &Resolution, changed: usize) -> EdgeEvent {
        let [a, b, c, _] = self.crossings()[changed].slots;
        // In the source, arcs a,b share a circle and c,d share one.
        let (s1, s2) = (src.circle_of_arc[a], src.circle_of_arc[c]);
        let kind = if s1 != s2 {
            EventKind::Merge { a: s1.min(s2), b: s1.max(s2), into: dst.circle_of_arc[a] }
        } else {
            // In the target a,d share a circle and b,c share one.
            let (t1, t2) = (dst.circle_of_arc[a], dst.circle_of_arc[b]);
            EventKind::Split { from: s1, b: t1.min(t2), c: t1.max(t2) }
        };
        let involved = |s: usize| match kind {
            EventKind::Merge { a, b, .. } => s == a || s == b,
            EventKind::Split { from, .. } => s == from,
        };
        let mut unchanged = Vec::new();
        let mut seen = vec![false; src.circles];
        for (arc, &s) in src.circle_of_arc.iter().enumerate() {
            if !seen[s] && !involved(s) {
                seen[s] = true;
                unchanged.push((s, dst.circle_of_arc[arc]));
            }
        }
        unchanged.sort_unstable();
        let sign_exponent = (src.mask & ((1u64 << changed) - 1)).count_ones();
        EdgeEvent { source: src.mask, changed, kind, unchanged, sign_exponent }
    }
}
