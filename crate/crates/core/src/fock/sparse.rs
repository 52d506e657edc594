//! Square sparse integer matrices, stored by rows.

use std::ops::Range;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseOp {
    dim: usize,
    /// Each row sorted by column, without explicit zeros.
    rows: Vec<Vec<(usize, i64)>>,
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        SparseOp {
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1; dim])
    }

    pub fn diagonal(values: &[i64]) -> Self {
        SparseOp {
            dim: values.len(),
            rows: values
                .iter()
                .enumerate()
                .map(|(i, &v)| if v == 0 { Vec::new() } else { vec![(i, v)] })
                .collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets, summing duplicates.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Self {
        let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r}, {c}) outside dimension {dim}");
            rows[r].push((c, v));
        }
        for row in &mut rows {
            normalize(row);
        }
        SparseOp { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, r: usize) -> &[(usize, i64)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        match self.rows[r].binary_search_by_key(&c, |&(j, _)| j) {
            Ok(k) => self.rows[r][k].1,
            Err(_) => 0,
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |&(c, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.dim, self.entries().map(|(r, c, v)| (c, r, v)))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseOp) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut acc = vec![0i64; self.dim];
        let mut touched = Vec::new();
        let mut rows = Vec::with_capacity(self.dim);
        for row in &self.rows {
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    if acc[j] == 0 {
                        touched.push(j);
                    }
                    acc[j] += a * b;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::with_capacity(touched.len());
            for &j in &touched {
                if acc[j] != 0 {
                    out.push((j, acc[j]));
                }
                acc[j] = 0;
            }
            touched.clear();
            rows.push(out);
        }
        SparseOp { dim: self.dim, rows }
    }

    pub fn add(&self, other: &SparseOp) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &SparseOp) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &SparseOp, sign: i64) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(x, y)| {
                let mut row: Vec<(usize, i64)> =
                    x.iter().copied().chain(y.iter().map(|&(c, v)| (c, sign * v))).collect();
                normalize(&mut row);
                row
            })
            .collect();
        SparseOp { dim: self.dim, rows }
    }

    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero(self.dim);
        }
        SparseOp {
            dim: self.dim,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&(j, v)| (j, v * c)).collect())
                .collect(),
        }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&(j, v)| v * x[j]).sum())
            .collect()
    }

    /// First entry, in row-major order, where `self` and `other` differ on
    /// the block `rows × cols`.
    pub fn first_difference(
        &self,
        other: &SparseOp,
        rows: Range<usize>,
        cols: Range<usize>,
    ) -> Option<(usize, usize, i64, i64)> {
        for r in rows {
            let x = self.rows[r].iter().filter(|(c, _)| cols.contains(c));
            let y = other.rows[r].iter().filter(|(c, _)| cols.contains(c));
            let mut x = x.peekable();
            let mut y = y.peekable();
            loop {
                match (x.peek(), y.peek()) {
                    (None, None) => break,
                    (Some(&&(c, v)), None) => return Some((r, c, v, 0)),
                    (None, Some(&&(c, v))) => return Some((r, c, 0, v)),
                    (Some(&&(c1, v1)), Some(&&(c2, v2))) => {
                        if c1 < c2 {
                            return Some((r, c1, v1, 0));
                        }
                        if c2 < c1 {
                            return Some((r, c2, 0, v2));
                        }
                        if v1 != v2 {
                            return Some((r, c1, v1, v2));
                        }
                        x.next();
                        y.next();
                    }
                }
            }
        }
        None
    }
}

fn normalize(row: &mut Vec<(usize, i64)>) {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, i64)> = Vec::with_capacity(row.len());
    for &(c, v) in row.iter() {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|&(_, v)| v != 0);
    *row = out;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(op: &SparseOp) -> Vec<Vec<i64>> {
        (0..op.dim())
            .map(|r| (0..op.dim()).map(|c| op.get(r, c)).collect())
            .collect()
    }

    #[test]
    fn arithmetic_matches_dense() {
        let a = SparseOp::from_triplets(3, [(0, 1, 2), (1, 2, 1), (2, 0, -1), (0, 1, 1)]);
        let b = SparseOp::from_triplets(3, [(1, 1, 1), (2, 2, 4), (0, 2, 3)]);
        assert_eq!(dense(&a), [[0, 3, 0], [0, 0, 1], [-1, 0, 0]]);
        assert_eq!(dense(&a.mul(&b)), [[0, 3, 0], [0, 0, 4], [0, 0, -3]]);
        assert_eq!(dense(&a.transpose()), [[0, 0, -1], [3, 0, 0], [0, 1, 0]]);
        assert_eq!(a.sub(&a), SparseOp::zero(3));
        assert_eq!(a.add(&a), a.scale(2));
        assert_eq!(a.mul(&SparseOp::identity(3)), a);
        assert_eq!(a.apply(&[1, 2, 3]), [6, 3, -1]);
    }

    #[test]
    fn block_difference() {
        let a = SparseOp::from_triplets(3, [(0, 0, 1), (2, 2, 5)]);
        let b = SparseOp::from_triplets(3, [(0, 0, 1), (2, 2, 6)]);
        assert_eq!(a.first_difference(&b, 0..2, 0..3), None);
        assert_eq!(a.first_difference(&b, 0..3, 0..3), Some((2, 2, 5, 6)));
        assert_eq!(a.first_difference(&b, 0..3, 0..2), None);
    }
}
