use num_bigint::BigInt;

use super::int::Int;

/// Sparse integer matrix stored by rows, each row sorted by column with no
/// explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(u32, Int)>>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut data: Vec<Vec<(u32, Int)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            data[r].push((c as u32, Int::S(v)));
        }
        for row in &mut data {
            normalize_row(row);
        }
        SparseIntMatrix { rows, cols, data }
    }

    pub fn from_big_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut data: Vec<Vec<(u32, Int)>> = vec![Vec::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
            data[r].push((c as u32, Int::from_big(v)));
        }
        for row in &mut data {
            normalize_row(row);
        }
        SparseIntMatrix { rows, cols, data }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Self {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        Self::from_triplets(
            rows,
            cols,
            m.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| (r, c, v))),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        let row = &self.data[r];
        match row.binary_search_by_key(&(c as u32), |e| e.0) {
            Ok(k) => row[k].1.to_big(),
            Err(_) => BigInt::from(0),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, BigInt)> + '_ {
        self.data.iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c as usize, v.to_big())))
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::from(0); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<Vec<(u32, Int)>> = vec![Vec::new(); self.cols];
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                data[*c as usize].push((r as u32, v.clone()));
            }
        }
        SparseIntMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: Vec<(u32, Int)> = Vec::new();
                for (k, a) in row {
                    for (c, b) in &other.data[*k as usize] {
                        acc.push((*c, a.mul(b)));
                    }
                }
                normalize_row(&mut acc);
                acc
            })
            .collect();
        SparseIntMatrix { rows: self.rows, cols: other.cols, data }
    }

    /// Reorders rows and columns: entry `(r, c)` moves to `(row_perm[r], col_perm[c])`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut data: Vec<Vec<(u32, Int)>> = vec![Vec::new(); self.rows];
        for (r, row) in self.data.iter().enumerate() {
            data[row_perm[r]] = row.iter().map(|(c, v)| (col_perm[*c as usize] as u32, v.clone())).collect();
        }
        for row in &mut data {
            normalize_row(row);
        }
        SparseIntMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub(crate) fn row_data(&self) -> &[Vec<(u32, Int)>] {
        &self.data
    }
}

/// Sorts by column, sums duplicates, drops zeros.
fn normalize_row(row: &mut Vec<(u32, Int)>) {
    row.sort_by_key(|e| e.0);
    let mut out: Vec<(u32, Int)> = Vec::with_capacity(row.len());
    for (c, v) in row.drain(..) {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    *row = out;
}
