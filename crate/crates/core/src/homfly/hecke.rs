use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::poly::{mono, LaurentPoly, Q};

/// A permutation in one-line notation on `0..n`.
pub type Perm = Vec<u8>;

pub fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
}

/// A reduced word `i_1 ... i_k` (generators numbered from 1) with
/// `w = s_{i_1} ... s_{i_k}`.
pub fn reduced_word(w: &[u8]) -> Vec<usize> {
    let mut u = w.to_vec();
    let mut rev = Vec::new();
    while let Some(i) = (0..u.len().saturating_sub(1)).find(|&i| u[i] > u[i + 1]) {
        u.swap(i, i + 1);
        rev.push(i + 1);
    }
    rev.reverse();
    rev
}

/// An element of the Hecke algebra on `n` strands in the basis `T_w`, with
/// `T_i^2 = q^2 + (1 - q^2) T_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    terms: BTreeMap<Perm, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(strands: usize) -> Self {
        HeckeElement { strands, terms: BTreeMap::new() }
    }

    pub fn identity(strands: usize) -> Self {
        Self::basis(identity_perm(strands), LaurentPoly::one(Q))
    }

    pub fn basis(w: Perm, c: LaurentPoly) -> Self {
        let mut h = Self::zero(w.len());
        h.add_term(w, c);
        h
    }

    /// `T_i` for `1 ≤ i < strands`.
    pub fn generator(strands: usize, i: usize) -> Self {
        Self::identity(strands).mul_generator(i)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[u8]) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| LaurentPoly::zero(Q))
    }

    fn add_term(&mut self, w: Perm, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.strands);
        for (w, a) in &self.terms {
            out.add_term(w.clone(), a * c);
        }
        out
    }

    /// Right multiplication by `T_i`.
    pub fn mul_generator(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.strands, "generator {i} outside {} strands", self.strands);
        let q2 = mono(Q, 2);
        let one_minus_q2 = &LaurentPoly::one(Q) - &q2;
        let mut out = Self::zero(self.strands);
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(ws, c * &q2);
                out.add_term(w.clone(), c * &one_minus_q2);
            }
        }
        out
    }

    /// Right multiplication by `T_i^{-1} = q^{-2} T_i + 1 - q^{-2}`.
    pub fn mul_inverse_generator(&self, i: usize) -> Self {
        let qm2 = mono(Q, -2);
        self.mul_generator(i).scale(&qm2).add(&self.scale(&(&LaurentPoly::one(Q) - &qm2)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut out = Self::zero(self.strands);
        for (w, c) in &other.terms {
            let mut x = self.scale(c);
            for i in reduced_word(w) {
                x = x.mul_generator(i);
            }
            out = out.add(&x);
        }
        out
    }

    /// The element with every permutation extended by fixed points up to `strands`.
    pub fn extend(&self, strands: usize) -> Self {
        assert!(strands >= self.strands);
        let mut out = Self::zero(strands);
        for (w, c) in &self.terms {
            let mut w = w.clone();
            w.extend(self.strands as u8..strands as u8);
            out.add_term(w, c.clone());
        }
        out
    }
}
