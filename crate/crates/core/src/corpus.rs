//! Named test links and seeded random generators.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::graph::Multigraph;
use crate::link::{braid_closure, parse_braid, parse_pd, BraidWord, Diagram};

/// Named braid words, smallest first.
pub const NAMED_BRAIDS: &[(&str, &str)] = &[
    ("unknot", "1:"),
    ("unknot-s", "2: 1"),
    ("unknot-ns", "2: -1"),
    ("unlink2", "2:"),
    ("hopf", "2: 1 1"),
    ("hopf-neg", "2: -1 -1"),
    ("trefoil", "2: 1 1 1"),
    ("trefoil-mirror", "2: -1 -1 -1"),
    ("figure-eight", "3: 1 -2 1 -2"),
    ("t2-4", "2: 1 1 1 1"),
    ("cinquefoil", "2: 1 1 1 1 1"),
    ("three-twist", "3: 1 1 1 2 -1 2"),
    ("t3-3", "3: 1 2 1 2 1 2"),
    ("stevedore", "4: 1 1 2 -1 -3 2 -3"),
    ("six-two", "3: 1 1 1 -2 1 -2"),
    ("six-three", "3: 1 1 -2 1 -2 -2"),
    ("borromean", "3: 1 -2 1 -2 1 -2"),
    ("t2-7", "2: 1 1 1 1 1 1 1"),
    ("t3-4", "3: 1 2 1 2 1 2 1 2"),
    ("seven-three", "2: 1 1 1 1 1 -1 1 1 1 1 1 -1"),
    ("eight-19", "3: 1 1 1 2 1 1 1 2"),
    ("t3-5", "3: 1 2 1 2 1 2 1 2 1 2"),
    ("t4-3", "4: 1 2 3 1 2 3 1 2 3"),
    ("t3-6", "3: 1 2 1 2 1 2 1 2 1 2 1 2"),
];

/// Named PD codes.
pub const NAMED_PD: &[(&str, &str)] =
    &[("trefoil-pd", "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"), ("hopf-pd", "X 1 3 2 4\nX 3 1 4 2")];

pub fn named_braid(name: &str) -> Option<BraidWord> {
    NAMED_BRAIDS.iter().find(|(n, _)| *n == name).map(|(_, w)| parse_braid(w).expect("corpus words parse"))
}

/// Every named diagram with at most `max_crossings` crossings.
pub fn named_diagrams(max_crossings: usize) -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> = NAMED_BRAIDS
        .iter()
        .map(|(n, w)| (n.to_string(), braid_closure(&parse_braid(w).expect("corpus words parse"))))
        .collect();
    out.extend(NAMED_PD.iter().map(|(n, pd)| (n.to_string(), parse_pd(pd).expect("corpus codes parse"))));
    out.retain(|(_, d)| d.crossing_count() <= max_crossings);
    out
}

/// At least `count` diagrams with at most `max_crossings` crossings: the
/// named ones, then seeded random braid closures.
pub fn diagrams(count: usize, max_crossings: usize, seed: u64) -> Vec<(String, Diagram)> {
    let mut out = named_diagrams(max_crossings);
    let mut rng = StdRng::seed_from_u64(seed);
    while out.len() < count {
        let b = random_braid(&mut rng, 4, max_crossings.min(10), false);
        out.push((b.to_string(), braid_closure(&b)));
    }
    out
}

/// Presentations of one link related by conjugation, stabilization and
/// braid relations.
pub fn markov_family(name: &str) -> Option<Vec<BraidWord>> {
    let words: &[&str] = match name {
        "unknot" => &["1:", "2: 1", "2: -1", "3: 1 2", "3: -1 2 ", "3: 1 -2", "3: -2 1 2 2"],
        "trefoil" => &["2: 1 1 1", "2: -1 1 1 1 1", "3: 1 1 1 2", "3: 1 1 1 -2", "3: 2 1 2 2", "3: 1 2 1 2"],
        "figure-eight" => &[
            "3: 1 -2 1 -2",
            "3: -2 1 -2 1",
            "3: 2 1 -2 1 -2 -2",
            "4: 1 -2 1 -2 3",
            "4: 1 -2 1 -2 -3",
            "3: 1 -2 1 1 -1 -2",
        ],
        "hopf" => &["2: 1 1", "3: 1 1 2", "3: 1 1 -2", "3: -2 1 1 2 2", "2: -1 1 1 1"],
        _ => return None,
    };
    Some(words.iter().map(|w| parse_braid(w).expect("family words parse")).collect())
}

/// A random word of `len` letters on `strands` strands.
pub fn random_braid(rng: &mut impl Rng, strands: usize, len: usize, positive: bool) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if positive || rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("generators in range")
}

/// A positive braid on 2 to 4 strands, with at most `max_len` letters, whose closure is a knot.
pub fn random_positive_knot(rng: &mut impl Rng, max_len: usize) -> BraidWord {
    loop {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(strands - 1..=max_len);
        let b = random_braid(rng, strands, len, true);
        if b.components() == 1 {
            return b;
        }
    }
}

/// A random multigraph on 1 to `max_vertices` vertices with at most `max_edges` edges.
pub fn random_multigraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(0..=max_edges);
    let edges = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    Multigraph::new(n, edges).expect("vertices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::khovanov::jones_unnormalized;

    #[test]
    fn corpus_parses() {
        let all = named_diagrams(usize::MAX);
        assert_eq!(all.len(), NAMED_BRAIDS.len() + NAMED_PD.len());
        assert!(named_diagrams(10).iter().all(|(_, d)| d.crossing_count() <= 10));
        assert_eq!(diagrams(30, 12, 1).len(), 30);
        assert!(named_braid("nope").is_none());
    }

    #[test]
    fn families_share_jones() {
        for name in ["unknot", "trefoil", "figure-eight", "hopf"] {
            let fam = markov_family(name).unwrap();
            assert!(fam.len() >= 5);
            let j = jones_unnormalized(&braid_closure(&fam[0]));
            for b in &fam {
                assert_eq!(jones_unnormalized(&braid_closure(b)), j, "{name}: {b}");
            }
        }
    }

    #[test]
    fn generators_respect_bounds() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let b = random_positive_knot(&mut rng, 12);
            assert!(b.len() <= 12 && b.n_minus() == 0 && b.components() == 1);
            let g = random_multigraph(&mut rng, 5, 8);
            assert!(g.edge_count() <= 8);
        }
    }
}
