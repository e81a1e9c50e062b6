use std::collections::{BTreeMap, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::{BraidWord, LinkError};

/// Where a crossing came from. Braid crossings are ordered by generator,
/// then by occurrence of that generator in the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossingTag {
    Braid { generator: usize, occurrence: usize },
    Pd { index: usize },
}

/// A crossing in planar-diagram form. `slots[0]` is the incoming
/// under-strand and the others follow counterclockwise, so the under-strand
/// runs `slots[0] → slots[2]`. The over-strand runs `slots[3] → slots[1]`
/// for a positive crossing and `slots[1] → slots[3]` for a negative one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub slots: [usize; 4],
    pub sign: i8,
    pub tag: CrossingTag,
}

impl Crossing {
    /// Slot pairs joined by the 0- or 1-smoothing.
    pub fn smoothing(&self, bit: bool) -> [(usize, usize); 2] {
        let [a, b, c, d] = self.slots;
        if bit {
            [(a, d), (b, c)]
        } else {
            [(a, b), (c, d)]
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    BraidClosure,
    PdCode,
}

/// A link diagram: crossings plus arcs `0..arcs`. Arcs that meet no crossing
/// are crossingless circles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    arcs: usize,
    crossings: Vec<Crossing>,
    origin: Origin,
}

impl Diagram {
    pub fn new(arcs: usize, crossings: Vec<Crossing>, origin: Origin) -> Result<Self, LinkError> {
        let mut uses = vec![0usize; arcs];
        for x in &crossings {
            if x.sign != 1 && x.sign != -1 {
                return Err(LinkError::BadSign(x.sign));
            }
            for &s in &x.slots {
                if s >= arcs {
                    return Err(LinkError::ArcOutOfRange(s));
                }
                uses[s] += 1;
            }
        }
        if let Some(a) = uses.iter().position(|&u| u != 0 && u != 2) {
            return Err(LinkError::ArcUse { arc: a, uses: uses[a] });
        }
        if crossings.len() > 63 {
            return Err(LinkError::TooManyCrossings(crossings.len()));
        }
        Ok(Diagram { arcs, crossings, origin })
    }

    /// `k` crossingless circles.
    pub fn unlink(k: usize) -> Self {
        Diagram { arcs: k, crossings: Vec::new(), origin: Origin::PdCode }
    }

    pub fn arcs(&self) -> usize {
        self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn n_plus(&self) -> usize {
        self.crossings.iter().filter(|x| x.sign > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.iter().filter(|x| x.sign < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.n_plus() as i64 - self.n_minus() as i64
    }

    /// Index of the crossing with the given tag.
    pub fn find(&self, tag: CrossingTag) -> Option<usize> {
        self.crossings.iter().position(|x| x.tag == tag)
    }

    /// Number of link components.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.arcs);
        for x in &self.crossings {
            uf.union(x.slots[0], x.slots[2]);
            uf.union(x.slots[1], x.slots[3]);
        }
        count_classes(&mut uf, self.arcs)
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.slots;
                let slots = if x.sign > 0 { [d, a, b, c] } else { [b, c, d, a] };
                Crossing { slots, sign: -x.sign, tag: x.tag }
            })
            .collect();
        Diagram { arcs: self.arcs, crossings, origin: self.origin }
    }

    /// The diagram with crossing `index` replaced by its `bit`-smoothing.
    /// Arcs are renumbered in order of their smallest old label.
    pub fn resolve_crossing(&self, index: usize, bit: bool) -> Result<Self, LinkError> {
        let x = self.crossings.get(index).ok_or(LinkError::UnknownCrossing(index))?;
        let mut uf = UnionFind::new(self.arcs);
        for (p, q) in x.smoothing(bit) {
            uf.union(p, q);
        }
        let (label, arcs) = compact_labels(&mut uf, self.arcs);
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, y)| Crossing { slots: y.slots.map(|s| label[s]), ..*y })
            .collect();
        Ok(Diagram { arcs, crossings, origin: self.origin })
    }

    /// Disjoint union; the other diagram's arcs are numbered after ours.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut crossings = self.crossings.clone();
        let off = self.arcs;
        let base = crossings.len();
        for (i, y) in other.crossings.iter().enumerate() {
            let tag = match y.tag {
                CrossingTag::Pd { .. } => CrossingTag::Pd { index: base + i },
                t => t,
            };
            crossings.push(Crossing { slots: y.slots.map(|s| s + off), sign: y.sign, tag });
        }
        Diagram { arcs: self.arcs + other.arcs, crossings, origin: Origin::PdCode }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("diagram serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, LinkError> {
        let d: Diagram = serde_json::from_value(v.clone()).map_err(|e| LinkError::BadJson(e.to_string()))?;
        Diagram::new(d.arcs, d.crossings, d.origin)
    }
}

fn count_classes(uf: &mut UnionFind<usize>, n: usize) -> usize {
    (0..n).filter(|&i| uf.find_mut(i) == i).count()
}

/// Maps each element to the rank of its class, classes ordered by smallest member.
pub(crate) fn compact_labels(uf: &mut UnionFind<usize>, n: usize) -> (Vec<usize>, usize) {
    let mut rep_label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut label = vec![0; n];
    for (i, l) in label.iter_mut().enumerate() {
        let r = uf.find_mut(i);
        let next = rep_label.len();
        *l = *rep_label.entry(r).or_insert(next);
    }
    (label, rep_label.len())
}

/// Closure of a braid. Positive letters give positive crossings whose
/// 0-smoothing is the vertical (identity) smoothing; negative letters give
/// negative crossings whose 0-smoothing is the horizontal plat.
pub fn braid_closure(b: &BraidWord) -> Diagram {
    let p = b.strands();
    let letters = b.letters();
    // The last letter touching each position closes its outgoing arc up
    // with the initial arc at that position.
    let mut last = vec![None; p];
    for (k, &w) in letters.iter().enumerate() {
        let i = w.unsigned_abs() as usize - 1;
        last[i] = Some(k);
        last[i + 1] = Some(k);
    }
    let mut cur: Vec<usize> = (0..p).collect();
    let mut next_arc = p;
    let mut occurrences = vec![0usize; p];
    let mut tagged = Vec::with_capacity(letters.len());
    for (k, &w) in letters.iter().enumerate() {
        let i = w.unsigned_abs() as usize - 1;
        let mut out = [0usize; 2];
        for (o, pos) in out.iter_mut().zip([i, i + 1]) {
            *o = if last[pos] == Some(k) {
                pos
            } else {
                next_arc += 1;
                next_arc - 1
            };
        }
        let (in_l, in_r) = (cur[i], cur[i + 1]);
        let [out_l, out_r] = out;
        let (slots, sign) = if w > 0 { ([in_r, out_r, out_l, in_l], 1) } else { ([in_l, in_r, out_r, out_l], -1) };
        occurrences[i] += 1;
        let tag = CrossingTag::Braid { generator: i + 1, occurrence: occurrences[i] };
        tagged.push(Crossing { slots, sign, tag });
        cur[i] = out_l;
        cur[i + 1] = out_r;
    }
    tagged.sort_by_key(|x| x.tag);
    Diagram { arcs: next_arc, crossings: tagged, origin: Origin::BraidClosure }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Role {
    In,
    Out,
}

/// Parses `X a b c d` lines (slot `a` the incoming under-strand, slots
/// counterclockwise). Labels are arbitrary integers used exactly twice;
/// they are renumbered in increasing order. `X[a,b,c,d]` is accepted too.
pub fn parse_pd(text: &str) -> Result<Diagram, LinkError> {
    let mut raw: Vec<[i64; 4]> = Vec::new();
    let cleaned: String =
        text.chars().map(|c| if matches!(c, '[' | ']' | ',' | '(' | ')' | ';') { ' ' } else { c }).collect();
    let mut tokens = cleaned.split_whitespace().peekable();
    while let Some(t) = tokens.next() {
        if t != "X" && t != "x" {
            if t.eq_ignore_ascii_case("pd") {
                continue;
            }
            return Err(LinkError::BadPd(format!("unexpected token '{t}'")));
        }
        let mut slots = [0i64; 4];
        for s in slots.iter_mut() {
            let tok = tokens.next().ok_or_else(|| LinkError::BadPd("truncated crossing".into()))?;
            *s = tok.parse().map_err(|_| LinkError::BadPd(format!("bad arc label '{tok}'")))?;
        }
        raw.push(slots);
    }
    if raw.is_empty() {
        return Err(LinkError::BadPd("no crossings".into()));
    }
    let mut labels: BTreeMap<i64, usize> = BTreeMap::new();
    for x in &raw {
        for &s in x {
            *labels.entry(s).or_default() += 1;
        }
    }
    if let Some((&l, &n)) = labels.iter().find(|&(_, &n)| n != 2) {
        return Err(LinkError::BadPd(format!("arc {l} used {n} times")));
    }
    let index: BTreeMap<i64, usize> = labels.keys().enumerate().map(|(i, &l)| (l, i)).collect();
    let slots: Vec<[usize; 4]> = raw.iter().map(|x| x.map(|s| index[&s])).collect();
    let signs = infer_signs(&raw, &slots, index.len())?;
    let crossings = slots
        .iter()
        .zip(signs)
        .enumerate()
        .map(|(i, (&slots, sign))| Crossing { slots, sign, tag: CrossingTag::Pd { index: i } })
        .collect();
    Diagram::new(index.len(), crossings, Origin::PdCode)
}

/// Orients every arc starting from the known under-strands. A component that
/// only passes over falls back on label order: the over-strand runs from `d`
/// to `b` when `b` follows `d` (cyclically), as in the usual PD numbering.
fn infer_signs(raw: &[[i64; 4]], slots: &[[usize; 4]], arcs: usize) -> Result<Vec<i8>, LinkError> {
    let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); arcs];
    for (x, s) in slots.iter().enumerate() {
        for (k, &a) in s.iter().enumerate() {
            ends[a].push((x, k));
        }
    }
    // over[x] = Some(true) when the over-strand runs d → b (positive)
    let mut over: Vec<Option<bool>> = vec![None; slots.len()];
    let mut queue: VecDeque<(usize, usize, Role)> = VecDeque::new();
    let role_of = |over: &[Option<bool>], x: usize, k: usize| -> Option<Role> {
        match k {
            0 => Some(Role::In),
            2 => Some(Role::Out),
            1 => over[x].map(|pos| if pos { Role::Out } else { Role::In }),
            _ => over[x].map(|pos| if pos { Role::In } else { Role::Out }),
        }
    };
    for x in 0..slots.len() {
        queue.push_back((x, 0, Role::In));
        queue.push_back((x, 2, Role::Out));
    }
    let mut next_unset = 0;
    loop {
        while let Some((x, k, role)) = queue.pop_front() {
            // the arc at (x, k) has this role here; its other end the opposite one
            let arc = slots[x][k];
            let &(y, m) = ends[arc]
                .iter()
                .find(|&&e| e != (x, k))
                .ok_or_else(|| LinkError::BadPd("arc without a second end".into()))?;
            let want = if role == Role::In { Role::Out } else { Role::In };
            match role_of(&over, y, m) {
                Some(r) if r == want => {}
                Some(_) => return Err(LinkError::Orientation(raw[y][m])),
                None => {
                    // m is an over slot of y; fix y's over direction
                    let pos = (m == 1) == (want == Role::Out);
                    over[y] = Some(pos);
                    let other = if m == 1 { 3 } else { 1 };
                    let r = role_of(&over, y, other).expect("direction just set");
                    queue.push_back((y, other, r));
                    queue.push_back((y, m, want));
                }
            }
        }
        while next_unset < slots.len() && over[next_unset].is_some() {
            next_unset += 1;
        }
        if next_unset == slots.len() {
            break;
        }
        let x = next_unset;
        let [_, b, _, d] = raw[x];
        let pos = b - d == 1 || d - b > 1;
        over[x] = Some(pos);
        queue.push_back((x, 1, role_of(&over, x, 1).unwrap()));
        queue.push_back((x, 3, role_of(&over, x, 3).unwrap()));
    }
    Ok(over.into_iter().map(|o| if o.unwrap() { 1 } else { -1 }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::parse_braid;

    const TREFOIL_PD: &str = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3";

    #[test]
    fn closure_bookkeeping() {
        let u = braid_closure(&parse_braid("1:").unwrap());
        assert_eq!((u.crossing_count(), u.arcs(), u.components()), (0, 1, 1));
        let h = braid_closure(&parse_braid("2: 1 1").unwrap());
        assert_eq!((h.n_plus(), h.n_minus(), h.components()), (2, 0, 2));
        let m = braid_closure(&parse_braid("2: 1 -1").unwrap());
        assert_eq!((m.n_plus(), m.n_minus()), (1, 1));
        assert_eq!(braid_closure(&parse_braid("3: 1").unwrap()).components(), 2);
    }

    #[test]
    fn closure_ordering() {
        let d = braid_closure(&parse_braid("3: 2 1 -2 1 2").unwrap());
        let tags: Vec<_> = d.crossings().iter().map(|x| x.tag).collect();
        let expect = [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]
            .map(|(generator, occurrence)| CrossingTag::Braid { generator, occurrence });
        assert_eq!(tags, expect);
        assert_eq!(d.crossings()[3].sign, -1);
    }

    #[test]
    fn pd_signs() {
        let d = parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.n_plus() + d.n_minus(), 3);
        assert!(d.n_plus() == 3 || d.n_minus() == 3);
        assert_eq!(d.components(), 1);
        // the same code in bracket notation
        assert_eq!(parse_pd("X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]").unwrap(), d);
    }

    #[test]
    fn pd_over_only_component() {
        // Hopf link: each component is over at one crossing and under at the other.
        let d = parse_pd("X 1 3 2 4\nX 3 1 4 2").unwrap();
        assert_eq!(d.components(), 2);
        assert_eq!(d.n_plus().max(d.n_minus()), 2);
    }

    #[test]
    fn pd_validation() {
        assert!(matches!(parse_pd(""), Err(LinkError::BadPd(_))));
        assert!(matches!(parse_pd("X 1 2 3 4"), Err(LinkError::BadPd(_))));
        assert!(parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6").is_err());
        assert!(parse_pd("Y 1 1 2 2").is_err());
    }

    #[test]
    fn pd_inconsistent_orientation() {
        // arc 1 enters under-strands at both ends
        assert!(matches!(parse_pd("X 1 2 3 2\nX 1 4 3 4"), Err(LinkError::Orientation(_))));
    }

    #[test]
    fn pd_kink() {
        // one-crossing unknot
        let d = parse_pd("X 1 1 2 2").unwrap();
        assert_eq!(d.components(), 1);
        assert_eq!(d.crossing_count(), 1);
    }

    #[test]
    fn mirror_flips_and_is_involution() {
        let d = braid_closure(&parse_braid("2: 1 1 1").unwrap());
        let m = d.mirror();
        assert_eq!((m.n_plus(), m.n_minus()), (0, 3));
        assert_eq!(m.mirror(), d);
        // mirror exchanges the two smoothings
        for (x, y) in d.crossings().iter().zip(m.crossings()) {
            let mut s0: Vec<_> = x.smoothing(false).into_iter().map(norm).collect();
            let mut t1: Vec<_> = y.smoothing(true).into_iter().map(norm).collect();
            s0.sort();
            t1.sort();
            assert_eq!(s0, t1);
        }
    }

    fn norm((p, q): (usize, usize)) -> (usize, usize) {
        (p.min(q), p.max(q))
    }

    #[test]
    fn resolve_crossing_drops_one() {
        let d = braid_closure(&parse_braid("2: 1 1 1").unwrap());
        let tag = CrossingTag::Braid { generator: 1, occurrence: 3 };
        let d0 = d.resolve_crossing(d.find(tag).unwrap(), false).unwrap();
        assert_eq!(d0.crossing_count(), 2);
        assert_eq!(d0.components(), 2);
        assert!(Diagram::unlink(1).resolve_crossing(0, false).is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = braid_closure(&parse_braid("3: 1 -2 1 2").unwrap());
        let back = Diagram::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        let p = parse_pd(TREFOIL_PD).unwrap();
        assert_eq!(Diagram::from_json(&p.to_json()).unwrap(), p);
    }
}
