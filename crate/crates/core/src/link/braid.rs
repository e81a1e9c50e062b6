use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LinkError;

/// A braid word on `strands` strands. Letter `i > 0` is the generator
/// `σ_i`, letter `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        for &w in &letters {
            if w == 0 || w.unsigned_abs() as usize >= strands {
                return Err(LinkError::GeneratorOutOfRange { letter: w, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid has at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn n_plus(&self) -> usize {
        self.letters.iter().filter(|&&w| w > 0).count()
    }

    pub fn n_minus(&self) -> usize {
        self.letters.iter().filter(|&&w| w < 0).count()
    }

    /// Number of components of the closure (cycles of the underlying permutation).
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for s in 0..self.strands {
            if !seen[s] {
                count += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        count
    }

    /// Image of each starting position after reading the word left to right.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &w in &self.letters {
            let i = w.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// `k^{-1} · self · k` for a single letter `k`.
    pub fn conjugate(&self, k: i32) -> Result<Self, LinkError> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(-k);
        letters.extend_from_slice(&self.letters);
        letters.push(k);
        Self::new(self.strands, letters)
    }

    /// Adds a strand and appends `σ_p^{±1}` where `p` is the old strand count.
    pub fn stabilize(&self, positive: bool) -> Self {
        let p = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { p } else { -p });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Word with one more trivial strand on the right.
    pub fn add_strand(&self) -> Self {
        BraidWord { strands: self.strands + 1, letters: self.letters.clone() }
    }

    /// Concatenation (the two words must have the same strand count).
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    /// Cyclic rotation of the word by `k` letters, which preserves the closure.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Word with one letter deleted.
    pub fn without(&self, pos: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.remove(pos);
        BraidWord { strands: self.strands, letters }
    }

    /// Word with letter `pos` replaced by `w`.
    pub fn with_letter(&self, pos: usize, w: i32) -> Result<Self, LinkError> {
        let mut letters = self.letters.clone();
        letters[pos] = w;
        Self::new(self.strands, letters)
    }

    /// The mirror word: every letter inverted.
    pub fn mirror(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|w| -w).collect() }
    }
}

impl FromStr for BraidWord {
    type Err = LinkError;

    fn from_str(text: &str) -> Result<Self, LinkError> {
        parse_braid(text)
    }
}

/// Parses `"<p>: w1 w2 ... wm"`.
pub fn parse_braid(text: &str) -> Result<BraidWord, LinkError> {
    let bad = || LinkError::BadBraid(text.trim().to_string());
    let (head, tail) = text.split_once(':').ok_or_else(bad)?;
    let strands: usize = head.trim().parse().map_err(|_| bad())?;
    let letters =
        tail.split_whitespace().map(|w| w.parse::<i32>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
    BraidWord::new(strands, letters)
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for w in &self.letters {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let b = parse_braid("2: 1 1 1").unwrap();
        assert_eq!((b.strands(), b.letters()), (2, &[1, 1, 1][..]));
        let b = parse_braid("  3:1   -2 1 ").unwrap();
        assert_eq!(b.letters(), &[1, -2, 1]);
        assert_eq!(parse_braid("1:").unwrap().len(), 0);
        assert!(matches!(parse_braid("2: 2"), Err(LinkError::GeneratorOutOfRange { .. })));
        assert!(matches!(parse_braid("0:"), Err(LinkError::NoStrands)));
        assert!(parse_braid("2 1 1").is_err());
        assert!(parse_braid("2: 1 x").is_err());
        assert!(parse_braid("2: 0").is_err());
    }

    #[test]
    fn markov_utilities() {
        let t = parse_braid("2: 1 1 1").unwrap();
        assert_eq!(t.conjugate(1).unwrap().to_string(), "2: -1 1 1 1 1");
        assert_eq!(t.stabilize(true).to_string(), "3: 1 1 1 2");
        assert_eq!(t.stabilize(false).to_string(), "3: 1 1 1 -2");
        assert!(t.conjugate(2).is_err());
    }

    #[test]
    fn component_count() {
        assert_eq!(parse_braid("2: 1 1 1").unwrap().components(), 1);
        assert_eq!(parse_braid("2: 1 1").unwrap().components(), 2);
        assert_eq!(parse_braid("3: 1 2 1 2 1 2").unwrap().components(), 3);
        assert_eq!(parse_braid("3:").unwrap().components(), 3);
    }

    #[test]
    fn display_round_trip() {
        let b = parse_braid("4: 1 -3 2").unwrap();
        assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }
}
