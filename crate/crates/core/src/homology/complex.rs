use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::matrix::SparseIntMatrix;
use super::snf::{rank_mod_prime, smith_normal_form, SmithForm};
use super::table::{Group, HomologyTable};
use super::HomologyError;
use crate::poly::{LaurentPoly, Vars};

/// A cochain complex graded by `(i, j)` whose differential raises `i` by one
/// and preserves `j`. `diffs[(i, j)]` maps `C^{i,j}` to `C^{i+1,j}` (rows
/// index the target basis). Output indices are moved by `shift`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedComplex {
    dims: BTreeMap<(i64, i64), usize>,
    diffs: BTreeMap<(i64, i64), SparseIntMatrix>,
    shift: (i64, i64),
}

impl GradedComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_dim(&mut self, i: i64, j: i64, dim: usize) {
        if dim == 0 {
            self.dims.remove(&(i, j));
        } else {
            self.dims.insert((i, j), dim);
        }
    }

    /// Sets `d^{i,j}`; its shape must match the chain group dimensions.
    pub fn set_diff(&mut self, i: i64, j: i64, m: SparseIntMatrix) {
        assert_eq!(m.cols(), self.dim(i, j), "d^{{{i},{j}}} source dimension");
        assert_eq!(m.rows(), self.dim(i + 1, j), "d^{{{i},{j}}} target dimension");
        if m.is_zero() {
            self.diffs.remove(&(i, j));
        } else {
            self.diffs.insert((i, j), m);
        }
    }

    pub fn with_shift(mut self, di: i64, dj: i64) -> Self {
        self.shift = (di, dj);
        self
    }

    pub fn shift(&self) -> (i64, i64) {
        self.shift
    }

    pub fn dim(&self, i: i64, j: i64) -> usize {
        self.dims.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn diff(&self, i: i64, j: i64) -> Option<&SparseIntMatrix> {
        self.diffs.get(&(i, j))
    }

    pub fn dims(&self) -> impl Iterator<Item = ((i64, i64), usize)> + '_ {
        self.dims.iter().map(|(k, d)| (*k, *d))
    }

    pub fn diffs(&self) -> impl Iterator<Item = ((i64, i64), &SparseIntMatrix)> {
        self.diffs.iter().map(|(k, m)| (*k, m))
    }

    /// Adds the groups and differentials of `other` (which must not overlap).
    pub fn absorb(&mut self, other: GradedComplex) {
        for (k, d) in other.dims {
            assert!(self.dims.insert(k, d).is_none(), "overlapping chain groups at {k:?}");
        }
        self.diffs.extend(other.diffs);
    }

    /// Checks `d^{i+1,j} ∘ d^{i,j} = 0` everywhere; returns the first failing `(i, j)`.
    pub fn verify_d_squared(&self) -> Result<(), HomologyError> {
        let bad: Option<(i64, i64)> = self
            .diffs
            .par_iter()
            .filter_map(|(&(i, j), d)| {
                let next = self.diffs.get(&(i + 1, j))?;
                (!next.mul(d).is_zero()).then_some((i, j))
            })
            .min();
        match bad {
            Some((i, j)) => Err(HomologyError::DSquaredNonzero { i: i + self.shift.0, j: j + self.shift.1 }),
            None => Ok(()),
        }
    }

    /// `Σ (-1)^i q^j dim C^{i,j}` over shifted indices.
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero(Vars::one('q'));
        for (&(i, j), &d) in &self.dims {
            let (i, j) = (i + self.shift.0, j + self.shift.1);
            let d = BigInt::from(d);
            p.add_term([2 * j, 0], if i.rem_euclid(2) == 0 { d } else { -d });
        }
        p
    }
}

/// How homology is computed from the differentials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Smith normal form over the integers: ranks and torsion.
    #[default]
    Integral,
    /// Ranks only, by elimination modulo a large prime (no torsion).
    RankOnly,
}

fn reduce(m: &SparseIntMatrix, mode: Mode) -> SmithForm {
    match mode {
        Mode::Integral => smith_normal_form(m),
        Mode::RankOnly => SmithForm { factors: Vec::new(), rank: rank_mod_prime(m) },
    }
}

/// Homology of every `(i, j)` group, after checking `d² = 0`.
pub fn graded_homology(c: &GradedComplex) -> Result<HomologyTable, HomologyError> {
    graded_homology_with(c, Mode::Integral)
}

pub fn graded_homology_with(c: &GradedComplex, mode: Mode) -> Result<HomologyTable, HomologyError> {
    c.verify_d_squared()?;
    let forms: BTreeMap<(i64, i64), SmithForm> = c.diffs.par_iter().map(|(k, m)| (*k, reduce(m, mode))).collect();
    let (si, sj) = c.shift;
    Ok(c.dims
        .iter()
        .map(|(&(i, j), &dim)| {
            let out = forms.get(&(i, j)).map_or(0, |f| f.rank);
            let incoming = forms.get(&(i - 1, j));
            let rank = dim - out - incoming.map_or(0, |f| f.rank);
            let torsion = incoming.map_or_else(Vec::new, SmithForm::torsion);
            ((i + si, j + sj), Group { rank, torsion })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Q;

    fn two_term(entry: i64) -> GradedComplex {
        let mut c = GradedComplex::new();
        c.set_dim(0, 0, 1);
        c.set_dim(1, 0, 1);
        c.set_diff(0, 0, SparseIntMatrix::from_dense(&[vec![entry]]));
        c
    }

    #[test]
    fn zero_and_multiplication_by_two() {
        let h = graded_homology(&two_term(0)).unwrap();
        assert_eq!((h.rank(0, 0), h.rank(1, 0)), (1, 1));
        let h = graded_homology(&two_term(2)).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h.torsion(1, 0), &[BigInt::from(2)]);
        assert_eq!(h.rank(1, 0), 0);
        assert!(two_term(2).euler().is_zero());
        assert!(h.euler().is_zero());
    }

    #[test]
    fn single_group() {
        let mut c = GradedComplex::new();
        c.set_dim(0, 0, 1);
        assert_eq!(c.euler(), LaurentPoly::one(Q));
    }

    #[test]
    fn detects_nonzero_square() {
        let mut c = GradedComplex::new();
        for i in 0..3 {
            c.set_dim(i, 4, 1);
        }
        c.set_diff(0, 4, SparseIntMatrix::from_dense(&[vec![1]]));
        c.set_diff(1, 4, SparseIntMatrix::from_dense(&[vec![1]]));
        assert_eq!(c.verify_d_squared(), Err(HomologyError::DSquaredNonzero { i: 0, j: 4 }));
        assert!(graded_homology(&c).is_err());
    }

    #[test]
    fn shift_moves_output() {
        let c = two_term(0).with_shift(-1, 3);
        let h = graded_homology(&c).unwrap();
        assert_eq!((h.rank(-1, 3), h.rank(0, 3)), (1, 1));
        assert_eq!(c.euler(), LaurentPoly::zero(Q));
    }
}
