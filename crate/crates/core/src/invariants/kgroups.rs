//! Transition matrices on `Ω_κ` and the K-groups of the Cuntz–Krieger
//! algebra they present.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::snf::{smith_normal_form, to_big, SnfResult};
use crate::error::{Error, Result};
use crate::textile::{omega_set, OmegaPair, TextileSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadMatrices {
    pub omega: Vec<OmegaPair>,
    /// `A_κ((α,a),(δ,b)) = 1` iff some tile has top `α`, left `a`, right `b`.
    pub a_kappa: Vec<Vec<i64>>,
    /// `B_κ((α,a),(β,d)) = 1` iff some tile has top `α`, left `a`, bottom `β`.
    pub b_kappa: Vec<Vec<i64>>,
    /// `[[A_κ, A_κ], [B_κ, B_κ]]`.
    pub h_kappa: Vec<Vec<i64>>,
}

pub fn build_quad_matrices(ts: &TextileSystem) -> QuadMatrices {
    let omega = omega_set(ts);
    let n = omega.len();
    let mut a_kappa = vec![vec![0; n]; n];
    let mut b_kappa = vec![vec![0; n]; n];
    for t in ts.tiles() {
        let i = omega
            .iter()
            .position(|p| p.alpha == t.top && p.a == t.left)
            .expect("tile corner lies in omega");
        for (j, q) in omega.iter().enumerate() {
            if q.a == t.right {
                a_kappa[i][j] = 1;
            }
            if q.alpha == t.bottom {
                b_kappa[i][j] = 1;
            }
        }
    }
    let h_kappa = (0..2 * n)
        .map(|i| {
            let src = if i < n { &a_kappa[i] } else { &b_kappa[i - n] };
            src.iter().chain(src.iter()).copied().collect()
        })
        .collect();
    QuadMatrices {
        omega,
        a_kappa,
        b_kappa,
        h_kappa,
    }
}

/// Cokernel and kernel of a square integer matrix, read off its Smith form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KGroups {
    /// Invariant factors greater than one, as decimal strings.
    pub k0_torsion: Vec<String>,
    pub k0_free_rank: usize,
    pub k1_free_rank: usize,
}

impl KGroups {
    pub fn from_snf(n: usize, snf: &SnfResult) -> Self {
        KGroups {
            k0_torsion: snf
                .invariant_factors
                .iter()
                .filter(|d| !d.is_one())
                .map(BigInt::to_string)
                .collect(),
            k0_free_rank: n - snf.rank,
            k1_free_rank: n - snf.rank,
        }
    }

    pub fn k0_string(&self) -> String {
        let mut parts = Vec::new();
        match self.k0_free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.k0_torsion.iter().map(|d| format!("Z/{d}Z")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn k1_string(&self) -> String {
        match self.k1_free_rank {
            0 => "0".into(),
            1 => "Z".into(),
            r => format!("Z^{r}"),
        }
    }
}

impl fmt::Display for KGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K0 = {}, K1 = {}", self.k0_string(), self.k1_string())
    }
}

/// `M - I` for a square matrix.
pub fn minus_identity(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &x)| x - (i == j) as i64).collect())
        .collect()
}

pub fn k_groups_of(m_minus_i: &[Vec<i64>]) -> KGroups {
    KGroups::from_snf(m_minus_i.len(), &smith_normal_form(&to_big(m_minus_i)))
}

/// K-groups from `A_κ + B_κ - I`, cross-checked against `H_κ - I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTheory {
    pub groups: KGroups,
    pub snf: SnfResult,
    pub snf_h: SnfResult,
}

pub fn k_theory(ts: &TextileSystem) -> Result<KTheory> {
    k_theory_of(&build_quad_matrices(ts))
}

pub fn k_theory_of(qm: &QuadMatrices) -> Result<KTheory> {
    let n = qm.omega.len();
    let sum: Vec<Vec<i64>> = qm
        .a_kappa
        .iter()
        .zip(&qm.b_kappa)
        .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
        .collect();
    let snf = smith_normal_form(&to_big(&minus_identity(&sum)));
    let snf_h = smith_normal_form(&to_big(&minus_identity(&qm.h_kappa)));
    let groups = KGroups::from_snf(n, &snf);
    let groups_h = KGroups::from_snf(2 * n, &snf_h);
    if groups != groups_h {
        return Err(Error::CrossCheckFailure(format!(
            "A+B-I gives {groups} (factors {:?}) but H-I gives {groups_h} (factors {:?})",
            snf.invariant_factors, snf_h.invariant_factors
        )));
    }
    Ok(KTheory { groups, snf, snf_h })
}
