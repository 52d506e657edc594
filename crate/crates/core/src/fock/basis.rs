//! Graded basis of the truncated Fock module: the two base summands at level
//! zero and glued tile words above.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::textile::{Layer, TextileSystem, Tile};

pub const DEFAULT_BASIS_CAP: usize = 1_000_000;

/// How two consecutive tiles of a word are glued.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sep {
    /// Side by side: `l(next) = r(prev)`.
    Eta,
    /// Stacked: `t(next) = b(prev)`.
    Rho,
}

impl Sep {
    pub fn glues(self, prev: &Tile, next: &Tile) -> bool {
        match self {
            Sep::Eta => prev.right == next.left,
            Sep::Rho => prev.bottom == next.top,
        }
    }
}

impl fmt::Display for Sep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sep::Eta => "η",
            Sep::Rho => "ρ",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FockWord {
    /// Base element `q_b` of the `E_B` summand.
    Q(usize),
    /// Base element `p_β` of the `E_A` summand.
    P(usize),
    /// Tiles with `tiles.len() - 1` separators.
    Glued { tiles: Vec<usize>, seps: Vec<Sep> },
}

impl FockWord {
    pub fn level(&self) -> usize {
        match self {
            FockWord::Q(_) | FockWord::P(_) => 0,
            FockWord::Glued { tiles, .. } => tiles.len(),
        }
    }

    pub fn first_tile(&self) -> Option<usize> {
        match self {
            FockWord::Glued { tiles, .. } => tiles.first().copied(),
            _ => None,
        }
    }

    pub fn first_sep(&self) -> Option<Sep> {
        match self {
            FockWord::Glued { seps, .. } => seps.first().copied(),
            _ => None,
        }
    }

    /// `(ω, sep, self)` for a word of level at least one.
    pub fn prepend(&self, tile: usize, sep: Sep) -> FockWord {
        match self {
            FockWord::Glued { tiles, seps } => {
                let mut t = Vec::with_capacity(tiles.len() + 1);
                t.push(tile);
                t.extend_from_slice(tiles);
                let mut s = Vec::with_capacity(seps.len() + 1);
                s.push(sep);
                s.extend_from_slice(seps);
                FockWord::Glued { tiles: t, seps: s }
            }
            _ => panic!("prepend needs a glued word"),
        }
    }
}

/// Basis of `F_0 ⊕ … ⊕ F_L`, ordered by level, then lexicographically on
/// `(tile, sep, tile, …)`; level zero lists `q_b` before `p_β`.
#[derive(Debug, Clone)]
pub struct TruncatedFock {
    ts: TextileSystem,
    max_level: usize,
    words: Vec<FockWord>,
    level_start: Vec<usize>,
    index: HashMap<FockWord, usize>,
    vertex: Vec<usize>,
}

pub fn fock_basis(ts: &TextileSystem, max_level: usize) -> Result<TruncatedFock> {
    fock_basis_with_cap(ts, max_level, DEFAULT_BASIS_CAP)
}

pub fn fock_basis_with_cap(ts: &TextileSystem, max_level: usize, cap: usize) -> Result<TruncatedFock> {
    if max_level < 1 {
        return Err(Error::Input("Fock truncation level must be at least 1".into()));
    }
    let tiles = ts.tiles();
    let mut words: Vec<FockWord> = Vec::new();
    let mut level_start = vec![0];
    words.extend((0..ts.edge_count(Layer::B)).map(FockWord::Q));
    words.extend((0..ts.edge_count(Layer::A)).map(FockWord::P));
    level_start.push(words.len());

    if tiles.len() > cap {
        return Err(Error::BasisTooLarge {
            level: 1,
            size: tiles.len(),
            cap,
        });
    }
    words.extend((0..tiles.len()).map(|i| FockWord::Glued {
        tiles: vec![i],
        seps: Vec::new(),
    }));
    level_start.push(words.len());

    let successors: Vec<[Vec<usize>; 2]> = tiles
        .iter()
        .map(|prev| [Sep::Eta, Sep::Rho].map(|sep| (0..tiles.len()).filter(|&j| sep.glues(prev, &tiles[j])).collect()))
        .collect();

    for level in 2..=max_level {
        let prev = level_start[level - 1]..level_start[level];
        let size: usize = words[prev.clone()]
            .iter()
            .map(|w| match w {
                FockWord::Glued { tiles, .. } => {
                    let last = *tiles.last().unwrap();
                    successors[last][0].len() + successors[last][1].len()
                }
                _ => 0,
            })
            .sum();
        if size > cap {
            return Err(Error::BasisTooLarge { level, size, cap });
        }
        for k in prev {
            let (t, s) = match &words[k] {
                FockWord::Glued { tiles, seps } => (tiles.clone(), seps.clone()),
                _ => unreachable!(),
            };
            let last = *t.last().unwrap();
            for (si, sep) in [Sep::Eta, Sep::Rho].into_iter().enumerate() {
                for &next in &successors[last][si] {
                    let mut tiles = t.clone();
                    tiles.push(next);
                    let mut seps = s.clone();
                    seps.push(sep);
                    words.push(FockWord::Glued { tiles, seps });
                }
            }
        }
        level_start.push(words.len());
    }

    let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let vertex = words
        .iter()
        .map(|w| match w {
            FockWord::Q(b) => ts.edges(Layer::B)[*b].target,
            FockWord::P(beta) => ts.edges(Layer::A)[*beta].target,
            FockWord::Glued { tiles: t, .. } => tiles[*t.last().unwrap()].vertex,
        })
        .collect();
    Ok(TruncatedFock {
        ts: ts.clone(),
        max_level,
        words,
        level_start,
        index,
        vertex,
    })
}

impl TruncatedFock {
    pub fn system(&self) -> &TextileSystem {
        &self.ts
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[FockWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &FockWord {
        &self.words[i]
    }

    pub fn index_of(&self, w: &FockWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index range of the words of level `lo ..= hi`.
    pub fn level_range(&self, lo: usize, hi: usize) -> Range<usize> {
        let hi = hi.min(self.max_level);
        if lo > hi {
            return 0..0;
        }
        self.level_start[lo]..self.level_start[hi + 1]
    }

    pub fn level_size(&self, level: usize) -> usize {
        self.level_range(level, level).len()
    }

    pub fn level_of(&self, i: usize) -> usize {
        self.words[i].level()
    }

    /// Vertex of the `A`-valued norm `⟨W|W⟩_A = E_v`: `v` of the last tile,
    /// or the range of the base edge.
    pub fn vertex_of(&self, i: usize) -> usize {
        self.vertex[i]
    }

    /// Number of level-2 words glued by `sep`.
    pub fn level2_count(&self, sep: Sep) -> usize {
        self.words[self.level_range(2, 2)]
            .iter()
            .filter(|w| w.first_sep() == Some(sep))
            .count()
    }

    /// Human-readable label: `q(B:1->1#1)`, `p(A:1->1#2)` or `ω1 η ω4 ρ ω2`
    /// with 1-based tile numbers.
    pub fn label(&self, i: usize) -> String {
        match &self.words[i] {
            FockWord::Q(b) => format!("q({})", self.ts.edges(Layer::B)[*b].id()),
            FockWord::P(beta) => format!("p({})", self.ts.edges(Layer::A)[*beta].id()),
            FockWord::Glued { tiles, seps } => {
                let mut s = format!("ω{}", tiles[0] + 1);
                for (sep, t) in seps.iter().zip(&tiles[1..]) {
                    s.push_str(&format!(" {sep} ω{}", t + 1));
                }
                s
            }
        }
    }

    /// Diagonal of the vertex-valued inner product: `⟨x|y⟩_A(v)`.
    pub fn inner_a(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.ts.vertex_count()];
        for i in 0..self.dim() {
            out[self.vertex[i]] += x[i] * y[i];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use crate::textile::KappaStrategy;

    fn sys(a: &[&[i64]], b: &[&[i64]], k: KappaStrategy) -> TextileSystem {
        let conv = |m: &[&[i64]]| IntMatrix::new(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap();
        TextileSystem::from_matrices(conv(a), conv(b), &k).unwrap()
    }

    #[test]
    fn level_sizes_t1() {
        let ts = sys(&[&[2]], &[&[3]], KappaStrategy::Exchange);
        let tf = fock_basis(&ts, 3).unwrap();
        assert_eq!(tf.level_size(0), 5);
        assert_eq!(tf.level_size(1), 6);
        assert_eq!(tf.level_size(2), 30);
        assert_eq!(tf.level2_count(Sep::Eta), 12);
        assert_eq!(tf.level2_count(Sep::Rho), 18);
        assert_eq!(tf.level_size(3), 150);
    }

    #[test]
    fn words_glue_and_are_sorted() {
        let ts = sys(&[&[1, 1], &[1, 0]], &[&[1, 1], &[1, 0]], KappaStrategy::Lex);
        let tf = fock_basis(&ts, 4).unwrap();
        let tiles = ts.tiles();
        for level in 1..=4 {
            let range = tf.level_range(level, level);
            let keys: Vec<Vec<usize>> = tf.words()[range]
                .iter()
                .map(|w| match w {
                    FockWord::Glued { tiles: t, seps } => {
                        for (i, sep) in seps.iter().enumerate() {
                            assert!(sep.glues(&tiles[t[i]], &tiles[t[i + 1]]));
                        }
                        let mut key = vec![t[0]];
                        for (s, x) in seps.iter().zip(&t[1..]) {
                            key.push(*s as usize);
                            key.push(*x);
                        }
                        key
                    }
                    _ => panic!("base element above level 0"),
                })
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let ts = sys(&[&[2]], &[&[3]], KappaStrategy::Exchange);
        assert!(matches!(
            fock_basis_with_cap(&ts, 3, 100),
            Err(Error::BasisTooLarge {
                level: 3,
                size: 150,
                cap: 100
            })
        ));
    }

    #[test]
    fn labels() {
        let ts = sys(&[&[1]], &[&[1]], KappaStrategy::Lex);
        let tf = fock_basis(&ts, 2).unwrap();
        let labels: Vec<String> = (0..tf.dim()).map(|i| tf.label(i)).collect();
        assert_eq!(labels, ["q(B:1->1#1)", "p(A:1->1#1)", "ω1", "ω1 η ω1", "ω1 ρ ω1"]);
    }
}
