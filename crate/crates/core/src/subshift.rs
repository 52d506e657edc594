//! Finite rectangular patches of the two-dimensional subshift whose alphabet
//! is the tile set. Horizontal neighbours share a B-edge (`right = left`),
//! vertical neighbours share an A-edge (`bottom = top`).

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::textile::{TextileSystem, Tile};

/// Default cap on the number of horizontally glued rows the counter builds.
pub const DEFAULT_PATTERN_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    Horizontal,
    Vertical,
}

/// `ω` may sit immediately left of (horizontal) or above (vertical) `ω'`.
pub fn glue(dir: Dir, w: &Tile, w2: &Tile) -> bool {
    match dir {
        Dir::Horizontal => w.right == w2.left,
        Dir::Vertical => w.bottom == w2.top,
    }
}

/// A `rows × cols` patch; `cells[i][j]` indexes the tile alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rectangle {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<usize>>,
}

impl Rectangle {
    /// Both gluing rules hold at every interior edge.
    pub fn is_valid(&self, tiles: &[Tile]) -> bool {
        let c = &self.cells;
        c.len() == self.rows
            && c.iter()
                .all(|r| r.len() == self.cols && r.iter().all(|&x| x < tiles.len()))
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    (j + 1 == self.cols || glue(Dir::Horizontal, &tiles[c[i][j]], &tiles[c[i][j + 1]]))
                        && (i + 1 == self.rows || glue(Dir::Vertical, &tiles[c[i][j]], &tiles[c[i + 1][j]]))
                })
            })
    }
}

fn check_shape(k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::Input(format!("rectangle shape {k}x{l} must be at least 1x1")));
    }
    Ok(())
}

/// Horizontally glued rows of length `l`, as (top labels, bottom labels).
fn row_configs(tiles: &[Tile], l: usize, cap: usize) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let mut by_left: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, t) in tiles.iter().enumerate() {
        by_left.entry(t.left).or_default().push(i);
    }
    let mut out = Vec::new();
    let mut row = Vec::with_capacity(l);
    fn extend(
        tiles: &[Tile],
        by_left: &HashMap<usize, Vec<usize>>,
        l: usize,
        cap: usize,
        row: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<()> {
        if row.len() == l {
            if out.len() == cap {
                return Err(Error::PatternSpaceTooLarge { size: cap + 1, cap });
            }
            out.push((
                row.iter().map(|&i| tiles[i].top).collect(),
                row.iter().map(|&i| tiles[i].bottom).collect(),
            ));
            return Ok(());
        }
        let next: Vec<usize> = match row.last() {
            None => (0..tiles.len()).collect(),
            Some(&p) => by_left.get(&tiles[p].right).cloned().unwrap_or_default(),
        };
        for i in next {
            row.push(i);
            extend(tiles, by_left, l, cap, row, out)?;
            row.pop();
        }
        Ok(())
    }
    extend(tiles, &by_left, l, cap, &mut row, &mut out)?;
    Ok(out)
}

/// Number of valid `k × l` rectangles over the system's tiles.
pub fn count_rectangles(ts: &TextileSystem, k: usize, l: usize) -> Result<BigUint> {
    count_rectangles_in(ts.tiles(), k, l, DEFAULT_PATTERN_CAP)
}

/// Transfer-matrix count over an arbitrary tile alphabet. The state after
/// each row is its sequence of bottom labels.
pub fn count_rectangles_in(tiles: &[Tile], k: usize, l: usize, cap: usize) -> Result<BigUint> {
    check_shape(k, l)?;
    let rows = row_configs(tiles, l, cap)?;
    let mut by_top: HashMap<&[usize], Vec<&[usize]>> = HashMap::new();
    let mut state: HashMap<&[usize], BigUint> = HashMap::new();
    for (top, bottom) in &rows {
        by_top.entry(top).or_default().push(bottom);
        *state.entry(bottom).or_default() += 1u32;
    }
    for _ in 1..k {
        let mut next: HashMap<&[usize], BigUint> = HashMap::new();
        for (labels, n) in &state {
            for &bottom in by_top.get(labels).map(Vec::as_slice).unwrap_or_default() {
                *next.entry(bottom).or_default() += n;
            }
        }
        state = next;
    }
    Ok(state.values().fold(BigUint::zero(), |acc, n| acc + n))
}

/// Up to `limit` rectangles, in lexicographic order of their row-major cell
/// sequences.
pub fn enumerate_rectangles(ts: &TextileSystem, k: usize, l: usize, limit: usize) -> Result<Vec<Rectangle>> {
    enumerate_rectangles_in(ts.tiles(), k, l, limit)
}

pub fn enumerate_rectangles_in(tiles: &[Tile], k: usize, l: usize, limit: usize) -> Result<Vec<Rectangle>> {
    check_shape(k, l)?;
    let mut out = Vec::new();
    let mut cells = Vec::with_capacity(k * l);
    fn fill(tiles: &[Tile], k: usize, l: usize, limit: usize, cells: &mut Vec<usize>, out: &mut Vec<Rectangle>) {
        if out.len() == limit {
            return;
        }
        let n = cells.len();
        if n == k * l {
            out.push(Rectangle {
                rows: k,
                cols: l,
                cells: cells.chunks(l).map(<[usize]>::to_vec).collect(),
            });
            return;
        }
        for (i, t) in tiles.iter().enumerate() {
            let fits_left = n.is_multiple_of(l) || glue(Dir::Horizontal, &tiles[cells[n - 1]], t);
            let fits_up = n < l || glue(Dir::Vertical, &tiles[cells[n - l]], t);
            if fits_left && fits_up {
                cells.push(i);
                fill(tiles, k, l, limit, cells, out);
                cells.pop();
            }
        }
    }
    fill(tiles, k, l, limit, &mut cells, &mut out);
    Ok(out)
}
