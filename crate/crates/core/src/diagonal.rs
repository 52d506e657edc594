//! The commutative algebras over vertices and edges, with the endomorphisms
//! and conditional maps between them. Elements are exact rational vectors.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::textile::{EdgeKey, Layer, TextileSystem};

pub type Scalar = Rational64;

/// Element of the vertex algebra, one coefficient per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagElem {
    pub coeffs: Vec<Scalar>,
}

impl DiagElem {
    pub fn zero(n: usize) -> Self {
        DiagElem {
            coeffs: vec![Scalar::zero(); n],
        }
    }

    pub fn unit(n: usize) -> Self {
        DiagElem {
            coeffs: vec![Scalar::one(); n],
        }
    }

    /// Minimal projection `E_i`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[i] = Scalar::one();
        x
    }

    pub fn from_ints(values: &[i64]) -> Self {
        DiagElem {
            coeffs: values.iter().map(|&v| Scalar::from_integer(v)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: Scalar) -> Self {
        DiagElem {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &DiagElem) -> Self {
        DiagElem {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x * y).collect(),
        }
    }

    /// Max absolute coefficient, the C*-norm of a diagonal element.
    pub fn sup_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max)
    }
}

/// Element `Σ w(e) p_e` of the edge algebra of one layer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeElem {
    pub layer: Layer,
    pub coeffs: Vec<Scalar>,
}

impl EdgeElem {
    pub fn zero(ts: &TextileSystem, layer: Layer) -> Self {
        EdgeElem {
            layer,
            coeffs: vec![Scalar::zero(); ts.edge_count(layer)],
        }
    }

    pub fn unit(ts: &TextileSystem, layer: Layer) -> Self {
        EdgeElem {
            layer,
            coeffs: vec![Scalar::one(); ts.edge_count(layer)],
        }
    }

    /// Minimal projection `p_e` (layer A) or `q_e` (layer B).
    pub fn basis(ts: &TextileSystem, key: EdgeKey) -> Result<Self> {
        ts.check_edge(key)?;
        let mut w = Self::zero(ts, key.layer);
        w.coeffs[key.index] = Scalar::one();
        Ok(w)
    }

    pub fn from_ints(layer: Layer, values: &[i64]) -> Self {
        EdgeElem {
            layer,
            coeffs: values.iter().map(|&v| Scalar::from_integer(v)).collect(),
        }
    }

    pub fn add(&self, other: &EdgeElem) -> Self {
        assert_eq!(self.layer, other.layer, "layer mismatch");
        EdgeElem {
            layer: self.layer,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn scale(&self, c: Scalar) -> Self {
        EdgeElem {
            layer: self.layer,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn expect_layer(&self, layer: Layer) -> Result<()> {
        if self.layer != layer {
            return Err(Error::LayerMismatch {
                expected: layer.to_string(),
                found: self.layer.to_string(),
            });
        }
        Ok(())
    }
}

pub(crate) fn to_f64(c: &Scalar) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

/// `rho_e(x)`: places `x(s(e))` at `r(e)`.
pub fn rho_edge(ts: &TextileSystem, key: EdgeKey, x: &DiagElem) -> Result<DiagElem> {
    let edge = *ts.graph().edge(key)?;
    let mut out = DiagElem::zero(ts.vertex_count());
    out.coeffs[edge.target] = x.coeffs[edge.source];
    Ok(out)
}

/// Embedding of the vertex algebra: coefficient at `e` is `y(s(e))`.
pub fn embed(ts: &TextileSystem, layer: Layer, y: &DiagElem) -> EdgeElem {
    EdgeElem {
        layer,
        coeffs: ts.edges(layer).iter().map(|e| y.coeffs[e.source]).collect(),
    }
}

/// `psi(y) = Σ_e S_e y S_e*`: coefficient at `e` is `y(r(e))`.
pub fn psi(ts: &TextileSystem, layer: Layer, y: &DiagElem) -> EdgeElem {
    EdgeElem {
        layer,
        coeffs: ts.edges(layer).iter().map(|e| y.coeffs[e.target]).collect(),
    }
}

/// `lambda(w)(j) = Σ_{r(e) = j} w(e)`.
pub fn lambda(ts: &TextileSystem, w: &EdgeElem) -> DiagElem {
    let mut out = DiagElem::zero(ts.vertex_count());
    for (e, c) in ts.edges(w.layer).iter().zip(&w.coeffs) {
        out.coeffs[e.target] += c;
    }
    out
}

/// Compression by an edge of the opposite layer.
///
/// For `a` in `E_B` and `w` over `E_A`: `(result)(beta) = w(kappa_a(beta))`,
/// where `kappa_a(beta)` is the top of the tile with left `a` and bottom
/// `beta`, and zero if no such tile exists. Symmetrically for `alpha` in `E_A`
/// and `z` over `E_B` with `z(kappa_alpha(b))`.
pub fn hat_rho(ts: &TextileSystem, opposite: EdgeKey, w: &EdgeElem) -> Result<EdgeElem> {
    ts.check_edge(opposite)?;
    w.expect_layer(opposite.layer.opposite())?;
    let mut out = EdgeElem::zero(ts, w.layer);
    for (i, slot) in out.coeffs.iter_mut().enumerate() {
        let source = match opposite.layer {
            Layer::B => ts.kappa_b_edge(opposite.index, i),
            Layer::A => ts.kappa_a_edge(opposite.index, i),
        };
        if let Some(j) = source {
            *slot = w.coeffs[j];
        }
    }
    Ok(out)
}

/// Compression by an edge of the same layer: `w(e) E_{r(e)}`.
pub fn hat_rho_diag(ts: &TextileSystem, key: EdgeKey, w: &EdgeElem) -> Result<DiagElem> {
    let edge = *ts.graph().edge(key)?;
    w.expect_layer(key.layer)?;
    let mut out = DiagElem::zero(ts.vertex_count());
    out.coeffs[edge.target] = w.coeffs[key.index];
    Ok(out)
}

/// Zero rows and columns of both layer matrices (1-based vertices).
///
/// `Σ_e rho_e(1) >= 1` fails exactly at vertices with no incoming edge, i.e.
/// zero columns; zero rows are sinks. Both are reported.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Essentiality {
    pub zero_rows_a: Vec<usize>,
    pub zero_cols_a: Vec<usize>,
    pub zero_rows_b: Vec<usize>,
    pub zero_cols_b: Vec<usize>,
    pub essential: bool,
}

pub fn essentiality(ts: &TextileSystem) -> Essentiality {
    let n = ts.vertex_count();
    let scan = |layer: Layer| {
        let m = ts.graph().matrix(layer);
        let rows: Vec<usize> = (0..n)
            .filter(|&i| (0..n).all(|j| m.get(i, j) == 0))
            .map(|i| i + 1)
            .collect();
        let cols: Vec<usize> = (0..n)
            .filter(|&j| (0..n).all(|i| m.get(i, j) == 0))
            .map(|j| j + 1)
            .collect();
        (rows, cols)
    };
    let (zero_rows_a, zero_cols_a) = scan(Layer::A);
    let (zero_rows_b, zero_cols_b) = scan(Layer::B);
    let essential =
        zero_rows_a.is_empty() && zero_cols_a.is_empty() && zero_rows_b.is_empty() && zero_cols_b.is_empty();
    Essentiality {
        zero_rows_a,
        zero_cols_a,
        zero_rows_b,
        zero_cols_b,
        essential,
    }
}
