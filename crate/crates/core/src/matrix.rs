//! Square matrices with nonnegative integer entries.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl IntMatrix {
    /// Builds a matrix from signed rows, rejecting negative entries and
    /// non-square shapes.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix must have at least one row".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    n
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(Error::InvalidMatrix(format!(
                        "negative entry {} at ({},{})",
                        x,
                        i + 1,
                        j + 1
                    )));
                }
                entries.push(x as u64);
            }
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_unsigned(rows: &[Vec<u64>]) -> Result<Self> {
        let signed: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        Self::new(&signed)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        IntMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let n = self.n;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        IntMatrix { n, entries }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        IntMatrix { n: self.n, entries }
    }

    pub fn scale(&self, c: u64) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn has_zero_row(&self) -> bool {
        (0..self.n).any(|i| (0..self.n).all(|j| self.get(i, j) == 0))
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.n).any(|j| (0..self.n).all(|i| self.get(i, j) == 0))
    }
}
