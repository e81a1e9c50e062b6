//! Graph polynomials and their categorifications.

mod complex;
mod planar;
mod polygon;
mod polys;

use std::fmt;

use petgraph::unionfind::UnionFind;
use thiserror::Error;

pub use complex::{
    build_enhanced_complex, build_pn_complex, build_qn_complex, enhanced_homology, pn_homology, qn_homology, GraphCube,
    GraphGenerator, Theory, Variant, MAX_GRAPH_EDGES,
};
pub use planar::{cycle_link, series_unit_match, z_relation, UnitMatch, ZRelation};
pub use polygon::{cycle_graph, polygon_reference};
pub use polys::{
    dichromatic, dichromatic_dc, dichromatic_dg, dichromatic_from_dg, jones_graph, specialize_pn, specialize_qn, tutte,
    tutte_recursive,
};

use crate::homology::HomologyError;
use crate::link::compact_labels;
use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} edges is beyond the supported cube size")]
    TooManyEdges(usize),
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A multigraph on vertices `0..n` (written `1..=n` in text) with ordered
/// edges; loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// The spanning subgraph on the edges selected by `mask`. Components are
/// numbered in order of their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphState {
    pub mask: u64,
    pub component_of: Vec<usize>,
    pub components: usize,
}

impl Multigraph {
    /// Builds from 0-based edges.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w + 1, n });
                }
            }
        }
        if edges.len() > 63 {
            return Err(GraphError::TooManyEdges(edges.len()));
        }
        Ok(Multigraph { n, edges })
    }

    /// `k` isolated vertices.
    pub fn empty(k: usize) -> Self {
        Multigraph { n: k, edges: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn state(&self, mask: u64) -> GraphState {
        let mut uf = UnionFind::new(self.n);
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                uf.union(u, v);
            }
        }
        let (component_of, components) = compact_labels(&mut uf, self.n);
        GraphState { mask, component_of, components }
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        self.state(u64::MAX >> (64 - self.edges.len().max(1))).components
    }

    pub fn without_edge(&self, k: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(k);
        Multigraph { n: self.n, edges }
    }

    /// Contracts edge `k`; a loop is simply deleted.
    pub fn contract_edge(&self, k: usize) -> Self {
        let (u, v) = self.edges[k];
        if u == v {
            return self.without_edge(k);
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |w: usize| {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, &(a, b))| (relabel(a), relabel(b)))
            .collect();
        Multigraph { n: self.n - 1, edges }
    }

    /// Vertices renamed by `perm` (`v ↦ perm[v]`) and edges reordered by `order`.
    pub fn relabeled(&self, perm: &[usize], order: &[usize]) -> Self {
        let edges = order.iter().map(|&k| (perm[self.edges[k].0], perm[self.edges[k].1])).collect();
        Multigraph { n: self.n, edges }
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v {}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// Parses `v N` followed by `e u v` lines (1-based vertices). Blank lines and
/// `#` comments are skipped; `/` also separates lines.
pub fn parse_graph(text: &str) -> Result<Multigraph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (no, raw) in text.split(['\n', '/']).enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| GraphError::Parse { line: no + 1, msg: msg.to_string() };
        let toks: Vec<&str> = line.split_whitespace().collect();
        let nums = |t: &[&str]| t.iter().map(|s| s.parse::<usize>()).collect::<Result<Vec<_>, _>>();
        match toks[0] {
            "v" => {
                if n.is_some() {
                    return Err(err("repeated vertex line"));
                }
                match nums(&toks[1..]).map_err(|_| err("expected a vertex count"))?[..] {
                    [k] => n = Some(k),
                    _ => return Err(err("expected `v N`")),
                }
            }
            "e" => {
                let k = n.ok_or_else(|| err("edge before the vertex line"))?;
                let [u, v] = nums(&toks[1..]).map_err(|_| err("expected two vertices"))?[..] else {
                    return Err(err("expected `e u v`"));
                };
                for w in [u, v] {
                    if w == 0 || w > k {
                        return Err(GraphError::VertexOutOfRange { vertex: w, n: k });
                    }
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err("unknown line")),
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, msg: "missing vertex line".into() })?;
    Multigraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let t = parse_graph("v 3 / e 1 2 / e 2 3 / e 1 3").unwrap();
        assert_eq!(t.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(parse_graph(&t.to_string()).unwrap(), t);
        let l = parse_graph("v 1\ne 1 1").unwrap();
        assert_eq!(l.edges(), &[(0, 0)]);
        assert!(parse_graph("e 1 2\nv 2").is_err());
        assert!(parse_graph("v 2\ne 1 3").is_err());
        assert!(parse_graph("v 2\nx").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn states_and_minors() {
        let t = parse_graph("v 3 / e 1 2 / e 2 3 / e 1 3").unwrap();
        assert_eq!(t.state(0).components, 3);
        assert_eq!(t.state(0b010).component_of, vec![0, 1, 1]);
        assert_eq!(t.components(), 1);
        let c = t.contract_edge(0);
        assert_eq!((c.vertices(), c.edges()), (2, &[(0, 1), (0, 1)][..]));
        assert_eq!(Multigraph::empty(4).components(), 4);
    }
}
