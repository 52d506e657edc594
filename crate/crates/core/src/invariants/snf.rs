//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMat = Vec<Vec<BigInt>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `d = u · m · v`, diagonal with `d_1 | d_2 | …`, all nonnegative.
    pub d: IntMat,
    pub u: IntMat,
    pub v: IntMat,
    /// The nonzero diagonal entries.
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

pub fn to_big(m: &[Vec<i64>]) -> IntMat {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination (Bareiss).
pub fn determinant(m: &IntMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = x / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Smith normal form of a rectangular integer matrix. Pivots are chosen by
/// minimal absolute value to limit coefficient growth.
pub fn smith_normal_form(m: &IntMat) -> SnfResult {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: minimal nonzero |entry| in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let q = a[i][t].div_floor(&a[t][t]);
            row_axpy(&mut a, i, t, &q);
            row_axpy(&mut u, i, t, &q);
            if !a[i][t].is_zero() {
                clean = false;
            }
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let q = a[t][j].div_floor(&a[t][t]);
            col_axpy(&mut a, j, t, &q);
            col_axpy(&mut v, j, t, &q);
            if !a[t][j].is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // divisibility: fold a row with a non-multiple into the pivot row
        let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
        if let Some(i) = offender {
            row_axpy(&mut a, t, i, &BigInt::from(-1));
            row_axpy(&mut u, t, i, &BigInt::from(-1));
            continue;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(u[t].iter_mut()) {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let invariant_factors: Vec<BigInt> = (0..rows.min(cols))
        .map(|i| a[i][i].clone())
        .filter(|x| !x.is_zero())
        .collect();
    SnfResult {
        rank: invariant_factors.len(),
        d: a,
        u,
        v,
        invariant_factors,
    }
}

/// `row[i] -= q · row[k]`.
fn row_axpy(a: &mut IntMat, i: usize, k: usize, q: &BigInt) {
    let src = a[k].clone();
    for (x, s) in a[i].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

/// `col[j] -= q · col[k]`.
fn col_axpy(a: &mut IntMat, j: usize, k: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[k].clone();
        row[j] -= q * s;
    }
}

fn swap_cols(a: &mut IntMat, i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}
