#![allow(dead_code)]

use quadtex::textile::{enumerate_kappas, KappaStrategy, LayeredGraph, TextileSystem};
use quadtex::{IntMatrix, Tile};
use rand::Rng;

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::new(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
}

pub fn t0() -> TextileSystem {
    TextileSystem::from_matrices(m(&[&[1]]), m(&[&[1]]), &KappaStrategy::Lex).unwrap()
}

pub fn t1() -> TextileSystem {
    TextileSystem::from_matrices(m(&[&[2]]), m(&[&[3]]), &KappaStrategy::Exchange).unwrap()
}

pub fn fib() -> IntMatrix {
    m(&[&[1, 1], &[1, 0]])
}

/// Both specifications of the Fibonacci pair, `Lex` first.
pub fn t2_all() -> Vec<TextileSystem> {
    let g = LayeredGraph::new(fib(), fib()).unwrap();
    enumerate_kappas(&g, usize::MAX)
        .map(|k| TextileSystem::new(g.clone(), k).unwrap())
        .collect()
}

pub fn t2() -> TextileSystem {
    TextileSystem::from_matrices(fib(), fib(), &KappaStrategy::Lex).unwrap()
}

/// The named test systems with every specification of T2.
pub fn test_systems() -> Vec<(String, TextileSystem)> {
    let mut out = vec![("T0".to_string(), t0()), ("T1".to_string(), t1())];
    for (i, ts) in t2_all().into_iter().enumerate() {
        out.push((format!("T2/kappa{}", i + 1), ts));
    }
    out
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// `c0·I + c1·C + c2·C²`.
fn poly(c: &[Vec<i64>], coeffs: [i64; 3]) -> Vec<Vec<i64>> {
    let n = c.len();
    let c2 = mat_mul(c, c);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| coeffs[0] * (i == j) as i64 + coeffs[1] * c[i][j] + coeffs[2] * c2[i][j])
                .collect()
        })
        .collect()
}

/// Commuting pair `(p(C), q(C))` for a random nonnegative `C` of size at
/// most 3 with entries at most 2. Pairs whose tile count falls outside
/// `1..=max_tiles` are redrawn.
pub fn random_commuting_pair(rng: &mut impl Rng, max_tiles: u64) -> (IntMatrix, IntMatrix) {
    loop {
        let n = rng.gen_range(1..=3);
        let c: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..=2)).collect()).collect();
        let mut draw = || {
            let mut k = [rng.gen_range(0..=1), rng.gen_range(0..=1), rng.gen_range(0..=1)];
            if k == [0, 0, 0] {
                k[1] = 1;
            }
            k
        };
        let (p, q) = (draw(), draw());
        let a = IntMatrix::new(&poly(&c, p)).unwrap();
        let b = IntMatrix::new(&poly(&c, q)).unwrap();
        let ab = a.mul(&b);
        let tiles: u64 = ab.rows().iter().flatten().sum();
        if (1..=max_tiles).contains(&tiles) {
            return (a, b);
        }
    }
}

/// Determinant by cofactor expansion.
pub fn det_oracle(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det_oracle(&minor)
        })
        .sum()
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

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all `k × k` minors.
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<i128>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                .collect();
            g = gcd(g, det_oracle(&sub));
        }
    }
    g
}

/// Counts `k × l` patches cell by cell, checking each new cell against its
/// left and upper neighbours.
pub fn count_patches_oracle(tiles: &[Tile], k: usize, l: usize) -> u64 {
    fn go(tiles: &[Tile], k: usize, l: usize, grid: &mut Vec<usize>) -> u64 {
        let n = grid.len();
        if n == k * l {
            return 1;
        }
        let (i, j) = (n / l, n % l);
        let mut total = 0;
        for (x, t) in tiles.iter().enumerate() {
            if j > 0 && tiles[grid[n - 1]].right != t.left {
                continue;
            }
            if i > 0 && tiles[grid[n - l]].bottom != t.top {
                continue;
            }
            grid.push(x);
            total += go(tiles, k, l, grid);
            grid.pop();
        }
        total
    }
    go(tiles, k, l, &mut Vec::new())
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
