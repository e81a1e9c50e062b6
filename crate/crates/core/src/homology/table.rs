use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::poly::{bigint_json, LaurentPoly, Vars};

/// Free rank and torsion invariant factors of one homology group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl Group {
    pub fn free(rank: usize) -> Self {
        Group { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Bigraded homology: `(i, j) → H^{i,j}`, trivial groups omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyTable {
    groups: BTreeMap<(i64, i64), Group>,
}

impl HomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: i64, j: i64, g: Group) {
        if g.is_trivial() {
            self.groups.remove(&(i, j));
        } else {
            self.groups.insert((i, j), g);
        }
    }

    pub fn get(&self, i: i64, j: i64) -> Option<&Group> {
        self.groups.get(&(i, j))
    }

    pub fn rank(&self, i: i64, j: i64) -> usize {
        self.get(i, j).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, i: i64, j: i64) -> &[BigInt] {
        self.get(i, j).map_or(&[], |g| &g.torsion)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), &Group)> {
        self.groups.iter().map(|(k, g)| (*k, g))
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    /// Moves every group from `(i, j)` to `(i + di, j + dj)`.
    pub fn shifted(&self, di: i64, dj: i64) -> Self {
        HomologyTable { groups: self.groups.iter().map(|(&(i, j), g)| ((i + di, j + dj), g.clone())).collect() }
    }

    /// Groups with homological degree in `lo..=hi`.
    pub fn restrict_i(&self, lo: i64, hi: i64) -> Self {
        HomologyTable {
            groups: self.groups.iter().filter(|(k, _)| k.0 >= lo && k.0 <= hi).map(|(k, g)| (*k, g.clone())).collect(),
        }
    }

    pub fn merge(&mut self, other: HomologyTable) {
        self.groups.extend(other.groups);
    }

    /// `Σ t^i q^j rank H^{i,j}`.
    pub fn poincare(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Vars::two('t', 'q'));
        for (&(i, j), g) in &self.groups {
            if g.rank > 0 {
                p.add_term([2 * i, 2 * j], BigInt::from(g.rank));
            }
        }
        p
    }

    /// `Σ (-1)^i q^j rank H^{i,j}` (torsion does not contribute).
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Vars::one('q'));
        for (&(i, j), g) in &self.groups {
            let r = BigInt::from(g.rank);
            p.add_term([2 * j, 0], if i % 2 == 0 { r } else { -r });
        }
        p
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.groups
                .iter()
                .map(|(&(i, j), g)| {
                    json!({
                        "i": i,
                        "j": j,
                        "rank": g.rank,
                        "torsion": g.torsion.iter().map(bigint_json).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let mut t = HomologyTable::new();
        for e in v.as_array()? {
            let torsion = e["torsion"]
                .as_array()?
                .iter()
                .map(|x| match x {
                    Value::Number(n) => n.as_i64().map(BigInt::from),
                    Value::String(s) => s.parse().ok(),
                    _ => None,
                })
                .collect::<Option<Vec<_>>>()?;
            t.insert(e["i"].as_i64()?, e["j"].as_i64()?, Group { rank: e["rank"].as_u64()? as usize, torsion });
        }
        Some(t)
    }

    /// CSV with header `i,j,rank,torsion`; torsion factors joined by spaces.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,rank,torsion\n");
        for (&(i, j), g) in &self.groups {
            let tors: Vec<String> = g.torsion.iter().map(|f| f.to_string()).collect();
            let _ = writeln!(s, "{i},{j},{},{}", g.rank, tors.join(" "));
        }
        s
    }

    /// Grid with `j` descending down the rows and `i` across the columns.
    /// A cell reads like `2`, `Z2`, or `1+Z2+Z4`.
    pub fn to_pretty(&self) -> String {
        if self.groups.is_empty() {
            return "(trivial)\n".to_string();
        }
        let (imin, imax) =
            (self.groups.keys().map(|k| k.0).min().unwrap(), self.groups.keys().map(|k| k.0).max().unwrap());
        let mut js: Vec<i64> = self.groups.keys().map(|k| k.1).collect();
        js.sort_unstable();
        js.dedup();
        let cell = |g: Option<&Group>| -> String {
            let Some(g) = g else { return String::new() };
            let mut parts = Vec::new();
            if g.rank > 0 {
                parts.push(g.rank.to_string());
            }
            parts.extend(g.torsion.iter().map(|f| format!("Z{f}")));
            parts.join("+")
        };
        let mut width = 3;
        for g in self.groups.values() {
            width = width.max(cell(Some(g)).len());
        }
        let mut s = String::new();
        let _ = write!(s, "{:>5} |", "j\\i");
        for i in imin..=imax {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        for &j in js.iter().rev() {
            let _ = write!(s, "{j:>5} |");
            for i in imin..=imax {
                let _ = write!(s, " {:>width$}", cell(self.get(i, j)));
            }
            s.push('\n');
        }
        s
    }
}

impl FromIterator<((i64, i64), Group)> for HomologyTable {
    fn from_iter<I: IntoIterator<Item = ((i64, i64), Group)>>(iter: I) -> Self {
        let mut t = HomologyTable::new();
        for ((i, j), g) in iter {
            t.insert(i, j, g);
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> HomologyTable {
        let mut t = HomologyTable::new();
        t.insert(0, 1, Group::free(1));
        t.insert(2, 5, Group { rank: 0, torsion: vec![BigInt::from(2)] });
        t.insert(3, 9, Group::free(1));
        t.insert(1, 1, Group::free(0));
        t
    }

    #[test]
    fn trivial_groups_are_absent() {
        let t = sample();
        assert_eq!(t.len(), 3);
        assert!(t.get(1, 1).is_none());
    }

    #[test]
    fn json_and_csv() {
        let t = sample();
        let j = t.to_json();
        assert_eq!(j[1], json!({"i": 2, "j": 5, "rank": 0, "torsion": [2]}));
        assert_eq!(HomologyTable::from_json(&j).unwrap(), t);
        assert_eq!(t.to_csv(), "i,j,rank,torsion\n0,1,1,\n2,5,0,2\n3,9,1,\n");
    }

    #[test]
    fn polynomials() {
        let t = sample();
        assert_eq!(t.poincare().to_string(), "t^3*q^9 + q");
        assert_eq!(t.euler().to_string(), "-q^9 + q");
        assert!(HomologyTable::new().poincare().is_zero());
    }
}
