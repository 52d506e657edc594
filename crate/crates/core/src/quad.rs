//! The quad module spanned by the tiles: vectors `Σ ξ(ω) e_ω`, three inner
//! products, five scalar actions and the bases `u_α`, `v_a`.

use num_traits::Zero;

use crate::diagonal::{to_f64, DiagElem, EdgeElem, Scalar};
use crate::error::{Error, Result};
use crate::textile::{EdgeKey, Layer, TextileSystem, Tile};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadVector {
    pub coeffs: Vec<Scalar>,
}

impl QuadVector {
    pub fn zero(ts: &TextileSystem) -> Self {
        QuadVector {
            coeffs: vec![Scalar::zero(); ts.tiles().len()],
        }
    }

    /// `e_ω` for the tile at position `i`.
    pub fn basis(ts: &TextileSystem, i: usize) -> Self {
        let mut v = Self::zero(ts);
        v.coeffs[i] = Scalar::from_integer(1);
        v
    }

    pub fn from_ints(values: &[i64]) -> Self {
        QuadVector {
            coeffs: values.iter().map(|&v| Scalar::from_integer(v)).collect(),
        }
    }

    pub fn add(&self, other: &QuadVector) -> Self {
        QuadVector {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Positions of nonzero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerKind {
    A,
    Rho,
    Eta,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InnerValue {
    Diag(DiagElem),
    Edge(EdgeElem),
}

/// Vertex-valued inner product: `Σ ξ(ω) ξ'(ω) E_{v(ω)}`.
pub fn inner_a(ts: &TextileSystem, x: &QuadVector, y: &QuadVector) -> DiagElem {
    let mut out = DiagElem::zero(ts.vertex_count());
    for (t, (a, b)) in ts.tiles().iter().zip(x.coeffs.iter().zip(&y.coeffs)) {
        out.coeffs[t.vertex] += a * b;
    }
    out
}

/// `E_A`-valued inner product, collected at the bottom edge.
pub fn inner_rho(ts: &TextileSystem, x: &QuadVector, y: &QuadVector) -> EdgeElem {
    collect_edges(ts, Layer::A, |t| t.bottom, x, y)
}

/// `E_B`-valued inner product, collected at the right edge.
pub fn inner_eta(ts: &TextileSystem, x: &QuadVector, y: &QuadVector) -> EdgeElem {
    collect_edges(ts, Layer::B, |t| t.right, x, y)
}

fn collect_edges(
    ts: &TextileSystem,
    layer: Layer,
    at: impl Fn(&Tile) -> usize,
    x: &QuadVector,
    y: &QuadVector,
) -> EdgeElem {
    let mut out = EdgeElem {
        layer,
        coeffs: vec![Scalar::zero(); ts.edge_count(layer)],
    };
    for (t, (a, b)) in ts.tiles().iter().zip(x.coeffs.iter().zip(&y.coeffs)) {
        out.coeffs[at(t)] += a * b;
    }
    out
}

pub fn inner(ts: &TextileSystem, kind: InnerKind, x: &QuadVector, y: &QuadVector) -> InnerValue {
    match kind {
        InnerKind::A => InnerValue::Diag(inner_a(ts, x, y)),
        InnerKind::Rho => InnerValue::Edge(inner_rho(ts, x, y)),
        InnerKind::Eta => InnerValue::Edge(inner_eta(ts, x, y)),
    }
}

/// The scalar actions. Every one is diagonal in the tile basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// Scales `e_ω` by `y(v(ω))`.
    RightA(DiagElem),
    /// Scales by `w(b(ω))`, `w` over `E_A`.
    RightRho(EdgeElem),
    /// Scales by `z(r(ω))`, `z` over `E_B`.
    RightEta(EdgeElem),
    /// Scales by `w(t(ω))`, `w` over `E_A`.
    LeftRho(EdgeElem),
    /// Scales by `z(l(ω))`, `z` over `E_B`.
    LeftEta(EdgeElem),
}

impl Action {
    /// Scaling factor on the given tile.
    pub fn factor(&self, ts: &TextileSystem, t: &Tile) -> Result<Scalar> {
        let check = |w: &EdgeElem, layer: Layer| {
            if w.layer != layer {
                Err(Error::LayerMismatch {
                    expected: layer.to_string(),
                    found: w.layer.to_string(),
                })
            } else if w.coeffs.len() != ts.edge_count(layer) {
                Err(Error::Input(format!("element has {} coefficients", w.coeffs.len())))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            Action::RightA(y) => y.coeffs[t.vertex],
            Action::RightRho(w) => {
                check(w, Layer::A)?;
                w.coeffs[t.bottom]
            }
            Action::RightEta(z) => {
                check(z, Layer::B)?;
                z.coeffs[t.right]
            }
            Action::LeftRho(w) => {
                check(w, Layer::A)?;
                w.coeffs[t.top]
            }
            Action::LeftEta(z) => {
                check(z, Layer::B)?;
                z.coeffs[t.left]
            }
        })
    }
}

pub fn act(ts: &TextileSystem, action: &Action, x: &QuadVector) -> Result<QuadVector> {
    let coeffs = ts
        .tiles()
        .iter()
        .zip(&x.coeffs)
        .map(|(t, c)| Ok(c * action.factor(ts, t)?))
        .collect::<Result<_>>()?;
    Ok(QuadVector { coeffs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    /// `u_α`: tiles with top `α`.
    U,
    /// `v_a`: tiles with left `a`.
    V,
}

/// 0/1 indicator of the tiles over a given top (`U`) or left (`V`) edge.
/// A zero vector means no tile carries the edge.
pub fn module_basis(ts: &TextileSystem, kind: BasisKind, edge: usize) -> Result<QuadVector> {
    let key = match kind {
        BasisKind::U => EdgeKey::a(edge),
        BasisKind::V => EdgeKey::b(edge),
    };
    ts.check_edge(key)?;
    let coeffs = ts
        .tiles()
        .iter()
        .map(|t| {
            let hit = match kind {
                BasisKind::U => t.top == edge,
                BasisKind::V => t.left == edge,
            };
            Scalar::from_integer(hit as i64)
        })
        .collect();
    Ok(QuadVector { coeffs })
}

/// `Σ_α u_α · ⟨u_α | ξ⟩_η`, which returns `ξ`.
pub fn reconstruct(ts: &TextileSystem, x: &QuadVector) -> Result<QuadVector> {
    let mut out = QuadVector::zero(ts);
    for alpha in 0..ts.edge_count(Layer::A) {
        let u = module_basis(ts, BasisKind::U, alpha)?;
        let c = inner_eta(ts, &u, x);
        out = out.add(&act(ts, &Action::RightEta(c), &u)?);
    }
    Ok(out)
}

/// `Σ_a v_a · ⟨v_a | ξ⟩_ρ`, which returns `ξ`.
pub fn reconstruct_v(ts: &TextileSystem, x: &QuadVector) -> Result<QuadVector> {
    let mut out = QuadVector::zero(ts);
    for a in 0..ts.edge_count(Layer::B) {
        let v = module_basis(ts, BasisKind::V, a)?;
        let c = inner_rho(ts, &v, x);
        out = out.add(&act(ts, &Action::RightRho(c), &v)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Norms {
    pub a: f64,
    pub rho: f64,
    pub eta: f64,
}

pub fn norms(ts: &TextileSystem, x: &QuadVector) -> Norms {
    let sqrt_max = |e: Vec<Scalar>| e.iter().map(to_f64).fold(0.0, f64::max).sqrt();
    Norms {
        a: sqrt_max(inner_a(ts, x, x).coeffs),
        rho: sqrt_max(inner_rho(ts, x, x).coeffs),
        eta: sqrt_max(inner_eta(ts, x, x).coeffs),
    }
}
