//! Sparse elimination for Smith normal form and ranks.
//!
//! Unit pivots are taken first, shortest row first and sparsest column
//! within the row, so most of a cube differential disappears without any
//! coefficient growth. Whatever remains is reduced by a Euclidean
//! smallest-entry pivoting that uses row and column operations.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::int::Int;
use super::matrix::SparseIntMatrix;

pub(crate) trait Scalar: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn cmp_size(&self, other: &Self) -> Ordering;
    /// `q` with `self - q * pivot` as small as possible.
    fn quotient(&self, pivot: &Self) -> Self;
    /// `self - q * x`
    fn mul_sub(&self, q: &Self, x: &Self) -> Self;
    fn factor(&self) -> BigInt;
}

impl Scalar for Int {
    fn zero() -> Self {
        Int::S(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        Int::is_unit(self)
    }
    fn cmp_size(&self, other: &Self) -> Ordering {
        self.cmp_abs(other)
    }
    fn quotient(&self, pivot: &Self) -> Self {
        self.div_round(pivot)
    }
    fn mul_sub(&self, q: &Self, x: &Self) -> Self {
        Int::mul_sub(self, q, x)
    }
    fn factor(&self) -> BigInt {
        self.to_big().abs()
    }
}

/// Residue modulo the prime `2^31 - 1`, for rank-only computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp(u64);

pub(crate) const P: u64 = (1 << 31) - 1;

impl Fp {
    pub fn from_int(v: &Int) -> Self {
        match v {
            Int::S(x) => Fp(x.rem_euclid(P as i64) as u64),
            Int::B(b) => {
                let r = b.mod_floor(&BigInt::from(P));
                Fp(r.iter_u64_digits().next().unwrap_or(0))
            }
        }
    }

    fn inv(self) -> Fp {
        // Fermat: a^(p-2)
        let (mut base, mut e, mut acc) = (self.0, P - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_unit(&self) -> bool {
        self.0 != 0
    }
    fn cmp_size(&self, _other: &Self) -> Ordering {
        Ordering::Equal
    }
    fn quotient(&self, pivot: &Self) -> Self {
        Fp(self.0 * pivot.inv().0 % P)
    }
    fn mul_sub(&self, q: &Self, x: &Self) -> Self {
        Fp((self.0 + P - q.0 * x.0 % P) % P)
    }
    fn factor(&self) -> BigInt {
        BigInt::one()
    }
}

struct Elim<S> {
    rows: Vec<Vec<(u32, S)>>,
    cols: Vec<Vec<u32>>,
    diag: Vec<S>,
}

impl<S: Scalar> Elim<S> {
    fn new(rows: Vec<Vec<(u32, S)>>, ncols: usize) -> Self {
        let mut cols = vec![Vec::new(); ncols];
        for (r, row) in rows.iter().enumerate() {
            for (c, _) in row {
                cols[*c as usize].push(r as u32);
            }
        }
        Elim { rows, cols, diag: Vec::new() }
    }

    /// `row[r2] -= q * row[r]`, keeping the column lists in sync.
    fn row_op(&mut self, r2: usize, q: &S, r: usize) {
        let target = std::mem::take(&mut self.rows[r2]);
        let src = &self.rows[r];
        let mut out = Vec::with_capacity(target.len() + src.len());
        let (mut i, mut j) = (0, 0);
        while i < target.len() || j < src.len() {
            let ci = target.get(i).map_or(u32::MAX, |e| e.0);
            let cj = src.get(j).map_or(u32::MAX, |e| e.0);
            match ci.cmp(&cj) {
                Ordering::Less => {
                    out.push(target[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let v = S::zero().mul_sub(q, &src[j].1);
                    self.cols[cj as usize].push(r2 as u32);
                    out.push((cj, v));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = target[i].1.mul_sub(q, &src[j].1);
                    if v.is_zero() {
                        let list = &mut self.cols[ci as usize];
                        let k = list.iter().position(|&x| x as usize == r2).expect("column list in sync");
                        list.swap_remove(k);
                    } else {
                        out.push((ci, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        self.rows[r2] = out;
    }

    fn entry(&self, r: usize, c: u32) -> Option<&S> {
        let row = &self.rows[r];
        row.binary_search_by_key(&c, |e| e.0).ok().map(|k| &row[k].1)
    }

    /// Clears column `c` outside row `r` as far as division allows.
    /// Returns the rows touched.
    fn clear_column(&mut self, r: usize, c: u32) -> Vec<usize> {
        let pivot = self.entry(r, c).expect("pivot present").clone();
        let others: Vec<usize> = self.cols[c as usize].iter().map(|&x| x as usize).filter(|&x| x != r).collect();
        let mut touched = Vec::with_capacity(others.len());
        for r2 in others {
            let e = self.entry(r2, c).expect("column list in sync").clone();
            let q = e.quotient(&pivot);
            if !q.is_zero() {
                self.row_op(r2, &q, r);
                touched.push(r2);
            }
        }
        touched
    }

    /// Deletes row `r` and column `c`, recording the pivot.
    fn retire(&mut self, r: usize, c: u32) {
        let row = std::mem::take(&mut self.rows[r]);
        for (c2, v) in row {
            if c2 == c {
                self.diag.push(v);
            }
            let list = &mut self.cols[c2 as usize];
            if let Some(k) = list.iter().position(|&x| x as usize == r) {
                list.swap_remove(k);
            }
        }
        debug_assert!(self.cols[c as usize].is_empty());
    }

    fn unit_phase(&mut self) {
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .map(|(r, row)| Reverse((row.len(), r)))
            .collect();
        while let Some(Reverse((len, r))) = heap.pop() {
            if self.rows[r].len() != len || len == 0 {
                continue;
            }
            let best = self.rows[r]
                .iter()
                .filter(|e| e.1.is_unit())
                .min_by_key(|e| self.cols[e.0 as usize].len())
                .map(|e| e.0);
            let Some(c) = best else { continue };
            let touched = self.clear_column(r, c);
            self.retire(r, c);
            for r2 in touched {
                heap.push(Reverse((self.rows[r2].len(), r2)));
            }
        }
    }

    fn smallest_entry(&self) -> Option<(usize, u32)> {
        let mut best: Option<(usize, u32, &S)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row {
                if best.is_none_or(|b| v.cmp_size(b.2) == Ordering::Less) {
                    best = Some((r, *c, v));
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn euclid_phase(&mut self) {
        while let Some((mut r, mut c)) = self.smallest_entry() {
            loop {
                self.clear_column(r, c);
                // a nonzero remainder left in column c is a smaller pivot
                let col_rest = self.cols[c as usize]
                    .iter()
                    .map(|&x| x as usize)
                    .filter(|&x| x != r)
                    .min_by(|&a, &b| self.entry(a, c).unwrap().cmp_size(self.entry(b, c).unwrap()));
                if let Some(r2) = col_rest {
                    r = r2;
                    continue;
                }
                // column c is clear; reduce row r by column operations, which
                // only change row r itself
                let pivot = self.entry(r, c).unwrap().clone();
                let mut row = std::mem::take(&mut self.rows[r]);
                let mut smaller: Option<(u32, S)> = None;
                for (c2, v) in row.iter_mut() {
                    if *c2 == c {
                        continue;
                    }
                    let q = v.quotient(&pivot);
                    *v = v.mul_sub(&q, &pivot);
                    if !v.is_zero() && smaller.as_ref().is_none_or(|s| v.cmp_size(&s.1) == Ordering::Less) {
                        smaller = Some((*c2, v.clone()));
                    }
                }
                let smaller = smaller.map(|s| s.0);
                for (c2, v) in &row {
                    if v.is_zero() {
                        let list = &mut self.cols[*c2 as usize];
                        let k = list.iter().position(|&x| x as usize == r).unwrap();
                        list.swap_remove(k);
                    }
                }
                row.retain(|e| !e.1.is_zero());
                self.rows[r] = row;
                match smaller {
                    Some(c2) => c = c2,
                    None => {
                        self.retire(r, c);
                        break;
                    }
                }
            }
        }
    }
}

/// Invariant factors (including 1s) and rank of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    /// Factors greater than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|f| !f.is_one()).cloned().collect()
    }
}

pub fn smith_normal_form(m: &SparseIntMatrix) -> SmithForm {
    let rows: Vec<Vec<(u32, Int)>> = m.row_data().to_vec();
    let mut e = Elim::new(rows, m.cols());
    e.unit_phase();
    e.euclid_phase();
    let diag: Vec<BigInt> = e.diag.iter().map(Scalar::factor).collect();
    let rank = diag.len();
    SmithForm { factors: invariant_factors(diag), rank }
}

/// Rank over the field with `2^31 - 1` elements, a lower bound for (and in
/// practice equal to) the rational rank.
pub fn rank_mod_prime(m: &SparseIntMatrix) -> usize {
    let rows: Vec<Vec<(u32, Fp)>> = m
        .row_data()
        .iter()
        .map(|row| row.iter().map(|(c, v)| (*c, Fp::from_int(v))).filter(|e| !e.1.is_zero()).collect())
        .collect();
    let mut e = Elim::new(rows, m.cols());
    e.unit_phase();
    e.diag.len()
}

/// Turns a diagonal into the divisibility chain with the same cokernel.
fn invariant_factors(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.sort();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if !(&d[j] % &d[i]).is_zero() {
                let g = d[i].gcd(&d[j]);
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn snf(m: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let s = smith_normal_form(&SparseIntMatrix::from_dense(m));
        (s.factors.iter().map(|f| f.try_into().unwrap()).collect(), s.rank)
    }

    #[test]
    fn basic_examples() {
        assert_eq!(snf(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), (vec![1, 1, 1], 3));
        assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), (vec![2, 4], 2));
        assert_eq!(snf(&[vec![0, 0, 0], vec![0, 0, 0]]), (vec![], 0));
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
        assert_eq!(snf(&[vec![6, 10, 15]]), (vec![1], 1));
    }

    /// gcd of all k×k minors, by cofactor expansion on small dense matrices.
    fn det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn minors_oracle(m: &[Vec<i64>]) -> Vec<BigInt> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=rows.min(cols) {
            let mut g = BigInt::zero();
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<BigInt>> =
                        rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
                    g = g.gcd(&det(&sub));
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
            prop::collection::vec(
                prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -1i64..=1, 1 => -9i64..=9], c),
                r,
            )
        })
    }

    proptest! {
        #[test]
        fn agrees_with_minors(m in small_matrix()) {
            let s = smith_normal_form(&SparseIntMatrix::from_dense(&m));
            let expect = minors_oracle(&m);
            prop_assert_eq!(s.rank, expect.len());
            prop_assert_eq!(s.factors, expect);
        }

        #[test]
        fn prime_rank_matches(m in small_matrix()) {
            let sm = SparseIntMatrix::from_dense(&m);
            prop_assert_eq!(rank_mod_prime(&sm), smith_normal_form(&sm).rank);
        }
    }

    #[test]
    fn exhaustive_six_by_six_sample() {
        // deterministic pseudo-random 6x6 instances on top of the proptest run
        let mut x: u64 = 12345;
        for _ in 0..60 {
            let m: Vec<Vec<i64>> = (0..6)
                .map(|_| {
                    (0..6)
                        .map(|_| {
                            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                            match (x >> 33) % 7 {
                                0..=2 => 0,
                                3 => 1,
                                4 => -1,
                                5 => 2,
                                _ => ((x >> 40) % 11) as i64 - 5,
                            }
                        })
                        .collect()
                })
                .collect();
            let s = smith_normal_form(&SparseIntMatrix::from_dense(&m));
            assert_eq!(s.factors, minors_oracle(&m), "{m:?}");
        }
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, big - 1], vec![big - 1, big - 2]];
        let s = smith_normal_form(&SparseIntMatrix::from_dense(&m));
        // det = big(big-2) - (big-1)^2 = -1
        assert_eq!(s.factors, vec![BigInt::one(), BigInt::one()]);
    }
}
