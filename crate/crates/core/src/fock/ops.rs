//! Operators on the truncated Fock module.
//!
//! Every basis word `W` has `⟨W|W⟩_A = E_v` for a single vertex `v` and
//! distinct words are orthogonal, so the adjoint of an operator with integer
//! matrix `X` in this basis is its transpose. Truncation drops the image of
//! level `L` under creation operators; [`Graded`] tracks how far above its
//! starting level an operator expression travels, which bounds the block on
//! which truncated and untruncated products agree.

use std::ops::{Add, Mul, Sub};

use super::basis::{FockWord, Sep, TruncatedFock};
use super::sparse::SparseOp;
use crate::diagonal::{embed, DiagElem, EdgeElem, Scalar};
use crate::error::{Error, Result};
use crate::quad::{module_basis, BasisKind, QuadVector};
use crate::textile::{EdgeKey, Layer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Creation {
    /// `s`: prepends a tile glued by `η`; indexed by `E_A`.
    S,
    /// `t`: prepends a tile glued by `ρ`; indexed by `E_B`.
    T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Rho,
    Eta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    Level(usize),
    /// Words of level at least 2 whose first separator is `η`.
    Rho,
    /// Words of level at least 2 whose first separator is `ρ`.
    Eta,
}

fn integral(c: &Scalar) -> Result<i64> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::NonIntegral(c.to_string()))
    }
}

impl TruncatedFock {
    /// `s_ξ` or `t_ξ` for a tile vector `ξ` with integer coefficients.
    pub fn creation_vec(&self, kind: Creation, xi: &QuadVector) -> Result<SparseOp> {
        let ts = self.system();
        let tiles = ts.tiles();
        let coeffs: Vec<i64> = xi.coeffs.iter().map(integral).collect::<Result<_>>()?;
        let support: Vec<usize> = (0..tiles.len()).filter(|&i| coeffs[i] != 0).collect();
        let mut triplets = Vec::new();
        for col in 0..self.dim() {
            let word = self.word(col);
            match (kind, word) {
                (Creation::S, FockWord::Q(b)) => {
                    for &w in &support {
                        if tiles[w].right == *b {
                            triplets.push((self.tile_index(w), col, coeffs[w]));
                        }
                    }
                }
                (Creation::T, FockWord::P(beta)) => {
                    for &w in &support {
                        if tiles[w].bottom == *beta {
                            triplets.push((self.tile_index(w), col, coeffs[w]));
                        }
                    }
                }
                (_, FockWord::Glued { tiles: wt, .. }) if word.level() < self.max_level() => {
                    let head = &tiles[wt[0]];
                    let sep = match kind {
                        Creation::S => Sep::Eta,
                        Creation::T => Sep::Rho,
                    };
                    for &w in &support {
                        if sep.glues(&tiles[w], head) {
                            let row = self
                                .index_of(&word.prepend(w, sep))
                                .expect("glued word is in the basis");
                            triplets.push((row, col, coeffs[w]));
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(SparseOp::from_triplets(self.dim(), triplets))
    }

    /// `s_α = s_{u_α}` (edge in `E_A`) or `t_a = t_{v_a}` (edge in `E_B`).
    pub fn creation(&self, kind: Creation, key: EdgeKey) -> Result<SparseOp> {
        let (expected, basis) = match kind {
            Creation::S => (Layer::A, BasisKind::U),
            Creation::T => (Layer::B, BasisKind::V),
        };
        if key.layer != expected {
            return Err(Error::LayerMismatch {
                expected: expected.to_string(),
                found: key.layer.to_string(),
            });
        }
        let xi = module_basis(self.system(), basis, key.index)?;
        self.creation_vec(kind, &xi)
    }

    fn tile_index(&self, tile: usize) -> usize {
        self.level_range(1, 1).start + tile
    }

    /// `φ̄_ρ(w)` or `φ̄_η(z)`: scales a word by the coefficient at the top
    /// (resp. left) edge of its first tile; on level zero only the `p`
    /// (resp. `q`) summand is kept and scaled.
    pub fn left_action(&self, side: Side, elem: &EdgeElem) -> Result<SparseOp> {
        let expected = match side {
            Side::Rho => Layer::A,
            Side::Eta => Layer::B,
        };
        if elem.layer != expected {
            return Err(Error::LayerMismatch {
                expected: expected.to_string(),
                found: elem.layer.to_string(),
            });
        }
        let coeffs: Vec<i64> = elem.coeffs.iter().map(integral).collect::<Result<_>>()?;
        let tiles = self.system().tiles();
        let diag: Vec<i64> = self
            .words()
            .iter()
            .map(|w| match (side, w) {
                (Side::Rho, FockWord::P(beta)) => coeffs[*beta],
                (Side::Eta, FockWord::Q(b)) => coeffs[*b],
                (Side::Rho, FockWord::Glued { tiles: t, .. }) => coeffs[tiles[t[0]].top],
                (Side::Eta, FockWord::Glued { tiles: t, .. }) => coeffs[tiles[t[0]].left],
                _ => 0,
            })
            .collect();
        Ok(SparseOp::diagonal(&diag))
    }

    /// `φ̄_ρ(ι_ρ(y))`.
    pub fn phi_rho_vertex(&self, y: &DiagElem) -> Result<SparseOp> {
        self.left_action(Side::Rho, &embed(self.system(), Layer::A, y))
    }

    /// `φ̄_η(ι_η(y))`.
    pub fn phi_eta_vertex(&self, y: &DiagElem) -> Result<SparseOp> {
        self.left_action(Side::Eta, &embed(self.system(), Layer::B, y))
    }

    /// `φ̄(y)`: the common value of `φ̄_ρ(ι_ρ(y))` and `φ̄_η(ι_η(y))` above
    /// level zero, extended to level zero by acting on both summands.
    pub fn phi_vertex(&self, y: &DiagElem) -> Result<SparseOp> {
        Ok(self
            .phi_rho_vertex(y)?
            .add(&self.phi_eta_vertex(y)?.mul(&self.projection(Projection::Level(0)))))
    }

    pub fn projection(&self, which: Projection) -> SparseOp {
        let diag: Vec<i64> = self
            .words()
            .iter()
            .map(|w| {
                let hit = match which {
                    Projection::Level(n) => w.level() == n,
                    Projection::Rho => w.first_sep() == Some(Sep::Eta),
                    Projection::Eta => w.first_sep() == Some(Sep::Rho),
                };
                hit as i64
            })
            .collect();
        SparseOp::diagonal(&diag)
    }

    /// `L̄` for a diagonal operator `L` on the tile module: scales a word by
    /// `L(first tile)`, zero on level zero.
    pub fn tile_lift(&self, diag: &QuadVector) -> Result<SparseOp> {
        let coeffs: Vec<i64> = diag.coeffs.iter().map(integral).collect::<Result<_>>()?;
        let values: Vec<i64> = self
            .words()
            .iter()
            .map(|w| w.first_tile().map_or(0, |t| coeffs[t]))
            .collect();
        Ok(SparseOp::diagonal(&values))
    }

    /// `θ_{ξ,ζ}(γ) = ξ · ⟨ζ|γ⟩_A`: entry `(W', W)` is `ξ(W') ζ(W)` when the
    /// two words share their vertex.
    pub fn rank_one(&self, xi: &[i64], zeta: &[i64]) -> SparseOp {
        let mut triplets = Vec::new();
        for (r, &x) in xi.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (c, &z) in zeta.iter().enumerate() {
                if z != 0 && self.vertex_of(r) == self.vertex_of(c) {
                    triplets.push((r, c, x * z));
                }
            }
        }
        SparseOp::from_triplets(self.dim(), triplets)
    }

    pub fn unit_vector(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Index of the base element `q_b` or `p_β`.
    pub fn base_index(&self, key: EdgeKey) -> usize {
        match key.layer {
            Layer::B => key.index,
            Layer::A => self.system().edge_count(Layer::B) + key.index,
        }
    }

    /// Index of the level-one word `ω`.
    pub fn level_one_index(&self, tile: usize) -> usize {
        self.tile_index(tile)
    }
}

/// An operator with its level bookkeeping: applied to a word of level `c`,
/// the result lies in level `c + shift` (for `shift` in `shift_min ..=
/// shift_max`) and no intermediate step goes above `c + peak`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graded {
    pub op: SparseOp,
    pub shift_min: i32,
    pub shift_max: i32,
    pub peak: i32,
}

impl Graded {
    /// Level-preserving operator.
    pub fn diagonal(op: SparseOp) -> Self {
        Graded {
            op,
            shift_min: 0,
            shift_max: 0,
            peak: 0,
        }
    }

    /// Operator raising the level by one.
    pub fn raising(op: SparseOp) -> Self {
        Graded {
            op,
            shift_min: 1,
            shift_max: 1,
            peak: 1,
        }
    }

    pub fn adj(&self) -> Self {
        Graded {
            op: self.op.transpose(),
            shift_min: -self.shift_max,
            shift_max: -self.shift_min,
            peak: self.peak - self.shift_min,
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Graded {
            op: self.op.scale(c),
            ..self.clone()
        }
    }

    /// Sum of a nonempty family.
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a Graded>) -> Graded {
        let mut it = items.into_iter();
        let first = it.next().expect("sum of an empty family").clone();
        it.fold(first, |acc, x| &acc + x)
    }

    /// Sum of a possibly empty family of level-preserving operators.
    pub fn sum_or_zero<'a>(dim: usize, items: impl IntoIterator<Item = &'a Graded>) -> Graded {
        items
            .into_iter()
            .fold(Graded::diagonal(SparseOp::zero(dim)), |acc, x| &acc + x)
    }
}

impl Mul for &Graded {
    type Output = Graded;

    /// `self · rhs`: `rhs` acts first.
    fn mul(self, rhs: &Graded) -> Graded {
        Graded {
            op: self.op.mul(&rhs.op),
            shift_min: self.shift_min + rhs.shift_min,
            shift_max: self.shift_max + rhs.shift_max,
            peak: rhs.peak.max(rhs.shift_max + self.peak),
        }
    }
}

impl Add for &Graded {
    type Output = Graded;

    fn add(self, rhs: &Graded) -> Graded {
        Graded {
            op: self.op.add(&rhs.op),
            shift_min: self.shift_min.min(rhs.shift_min),
            shift_max: self.shift_max.max(rhs.shift_max),
            peak: self.peak.max(rhs.peak),
        }
    }
}

impl Sub for &Graded {
    type Output = Graded;

    fn sub(self, rhs: &Graded) -> Graded {
        let mut out = self + &rhs.scale(-1);
        out.op = self.op.sub(&rhs.op);
        out
    }
}
