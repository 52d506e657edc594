//! Machine checks of the operator identities in the truncated Fock module.
//!
//! Each identity is a list of instances `lhs = rhs` of [`Graded`] operators.
//! With `m` the largest peak of any side, truncated and untruncated entries
//! agree in every column of level at most `L - m`; both sides are compared on
//! rows and columns of levels `lo ..= L - m`. The Fock suite uses `lo = 0`,
//! the relation suites compare on the interior `lo = 2` where the level-0/1
//! corrections vanish.

use serde::{Deserialize, Serialize};

use super::basis::TruncatedFock;
use super::ops::{Creation, Graded, Projection, Side};
use super::sparse::SparseOp;
use crate::diagonal::{embed, hat_rho, hat_rho_diag, rho_edge, DiagElem, EdgeElem};
use crate::error::{Error, Result};
use crate::invariants::build_quad_matrices;
use crate::quad::{inner_eta, inner_rho, module_basis, BasisKind, QuadVector};
use crate::textile::{kappa_indicators, omega_set, EdgeKey, Layer, OmegaPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub instance: String,
    pub row: String,
    pub col: String,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub identity_id: String,
    /// The identity as a formula.
    pub paper_ref: String,
    pub levels_checked: [usize; 2],
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(move |e| e.status == status)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }
}

/// Whether an identity whose margin does not fit is an error or a skipped
/// report entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Lenient,
}

struct Checker<'a> {
    tf: &'a TruncatedFock,
    lo: usize,
    floor: usize,
    mode: Mode,
    report: Report,
}

type Instance = (String, Graded, Graded);

impl<'a> Checker<'a> {
    fn new(tf: &'a TruncatedFock, lo: usize, floor: usize, mode: Mode) -> Self {
        Checker {
            tf,
            lo,
            floor,
            mode,
            report: Report::default(),
        }
    }

    fn check(&mut self, id: &str, formula: &str, instances: Vec<Instance>) -> Result<()> {
        self.check_from(id, formula, self.lo, self.floor, instances)
    }

    fn check_from(&mut self, id: &str, formula: &str, lo: usize, floor: usize, instances: Vec<Instance>) -> Result<()> {
        let level = self.tf.max_level();
        let margin = instances
            .iter()
            .map(|(_, l, r)| l.peak.max(r.peak).max(0) as usize)
            .max()
            .unwrap_or(0);
        if level < margin + floor {
            let err = Error::TruncationTooShallow {
                identity: id.to_string(),
                level,
                margin,
                floor,
            };
            return match self.mode {
                Mode::Strict => Err(err),
                Mode::Lenient => {
                    self.report.entries.push(ReportEntry {
                        identity_id: id.to_string(),
                        paper_ref: formula.to_string(),
                        levels_checked: [lo, level.saturating_sub(margin)],
                        status: Status::Skipped,
                        witness: None,
                        notice: Some(err.to_string()),
                    });
                    Ok(())
                }
            };
        }
        let hi = level - margin;
        let range = self.tf.level_range(lo, hi);
        let mut entry = ReportEntry {
            identity_id: id.to_string(),
            paper_ref: formula.to_string(),
            levels_checked: [lo, hi],
            status: Status::Pass,
            witness: None,
            notice: None,
        };
        for (name, lhs, rhs) in &instances {
            if let Some((r, c, x, y)) = lhs.op.first_difference(&rhs.op, range.clone(), range.clone()) {
                entry.status = Status::Fail;
                entry.witness = Some(Witness {
                    instance: name.clone(),
                    row: self.tf.label(r),
                    col: self.tf.label(c),
                    lhs: x,
                    rhs: y,
                });
                break;
            }
        }
        self.report.entries.push(entry);
        Ok(())
    }
}

/// Operators shared by all suites.
struct Toolkit<'a> {
    tf: &'a TruncatedFock,
    s: Vec<Graded>,
    t: Vec<Graded>,
    /// `φ̄_ρ(p_β)`.
    w: Vec<Graded>,
    /// `φ̄_η(q_b)`.
    z: Vec<Graded>,
    one: Graded,
    p0: Graded,
    p1: Graded,
    p_rho: Graded,
    p_eta: Graded,
}

impl<'a> Toolkit<'a> {
    fn new(tf: &'a TruncatedFock) -> Result<Self> {
        let ts = tf.system();
        let na = ts.edge_count(Layer::A);
        let nb = ts.edge_count(Layer::B);
        let s = (0..na)
            .map(|i| Ok(Graded::raising(tf.creation(Creation::S, EdgeKey::a(i))?)))
            .collect::<Result<Vec<_>>>()?;
        let t = (0..nb)
            .map(|i| Ok(Graded::raising(tf.creation(Creation::T, EdgeKey::b(i))?)))
            .collect::<Result<Vec<_>>>()?;
        let w = (0..na)
            .map(|i| {
                Ok(Graded::diagonal(
                    tf.left_action(Side::Rho, &EdgeElem::basis(ts, EdgeKey::a(i))?)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let z = (0..nb)
            .map(|i| {
                Ok(Graded::diagonal(
                    tf.left_action(Side::Eta, &EdgeElem::basis(ts, EdgeKey::b(i))?)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Toolkit {
            tf,
            s,
            t,
            w,
            z,
            one: Graded::diagonal(SparseOp::identity(tf.dim())),
            p0: Graded::diagonal(tf.projection(Projection::Level(0))),
            p1: Graded::diagonal(tf.projection(Projection::Level(1))),
            p_rho: Graded::diagonal(tf.projection(Projection::Rho)),
            p_eta: Graded::diagonal(tf.projection(Projection::Eta)),
        })
    }

    fn diag(&self, op: SparseOp) -> Graded {
        Graded::diagonal(op)
    }

    fn phi_rho(&self, w: &EdgeElem) -> Result<Graded> {
        Ok(self.diag(self.tf.left_action(Side::Rho, w)?))
    }

    fn phi_eta(&self, z: &EdgeElem) -> Result<Graded> {
        Ok(self.diag(self.tf.left_action(Side::Eta, z)?))
    }

    fn range_s(&self, i: usize) -> Graded {
        &self.s[i] * &self.s[i].adj()
    }

    fn range_t(&self, i: usize) -> Graded {
        &self.t[i] * &self.t[i].adj()
    }

    fn sum_ss(&self) -> Graded {
        Graded::sum_or_zero(
            self.tf.dim(),
            &(0..self.s.len()).map(|i| self.range_s(i)).collect::<Vec<_>>(),
        )
    }

    fn sum_tt(&self) -> Graded {
        Graded::sum_or_zero(
            self.tf.dim(),
            &(0..self.t.len()).map(|i| self.range_t(i)).collect::<Vec<_>>(),
        )
    }

    fn vertices(&self) -> Vec<(usize, DiagElem)> {
        let n = self.tf.system().vertex_count();
        (0..n).map(|i| (i, DiagElem::basis(n, i))).collect()
    }

    fn a_id(&self, i: usize) -> String {
        self.tf.system().edges(Layer::A)[i].id()
    }

    fn b_id(&self, i: usize) -> String {
        self.tf.system().edges(Layer::B)[i].id()
    }
}

fn commutator(x: &Graded, y: &Graded) -> (Graded, Graded) {
    (x * y, y * x)
}

/// Identities of the Fock representation on levels `0 ..= L - m`.
pub fn verify_fock_identities(tf: &TruncatedFock) -> Result<Report> {
    verify_fock_identities_with(tf, Mode::Strict)
}

pub fn verify_fock_identities_with(tf: &TruncatedFock, mode: Mode) -> Result<Report> {
    suite_guard(tf, "Fock identity suite", 3, 1)?;
    let ts = tf.system();
    let k = Toolkit::new(tf)?;
    let mut c = Checker::new(tf, 0, 1, mode);
    let na = ts.edge_count(Layer::A);
    let nb = ts.edge_count(Layer::B);
    let tiles = ts.tiles();

    c.check(
        "fock.s_range",
        "Σ_α s_α s_α* = P₁ + P_ρ",
        vec![("sum".into(), k.sum_ss(), &k.p1 + &k.p_rho)],
    )?;
    c.check(
        "fock.t_range",
        "Σ_a t_a t_a* = P₁ + P_η",
        vec![("sum".into(), k.sum_tt(), &k.p1 + &k.p_eta)],
    )?;
    c.check(
        "fock.completeness",
        "Σ_α s_α s_α* + Σ_a t_a t_a* + P₀ = 1 + P₁",
        vec![("sum".into(), &(&k.sum_ss() + &k.sum_tt()) + &k.p0, &k.one + &k.p1)],
    )?;

    // s_ζ* s_ξ over ζ, ξ in {ε_ω} ∪ {u_α}, and the t analogue with {v_a}
    for (kind, id, formula) in [
        (Creation::S, "fock.s_inner", "s_ζ* s_ξ = φ̄_η(⟨ζ|ξ⟩_η)"),
        (Creation::T, "fock.t_inner", "t_ζ* t_ξ = φ̄_ρ(⟨ζ|ξ⟩_ρ)"),
    ] {
        let mut vectors: Vec<(String, QuadVector)> = (0..tiles.len())
            .map(|i| (format!("ε_ω{}", i + 1), QuadVector::basis(ts, i)))
            .collect();
        match kind {
            Creation::S => {
                for a in 0..na {
                    vectors.push((format!("u[{}]", k.a_id(a)), module_basis(ts, BasisKind::U, a)?));
                }
            }
            Creation::T => {
                for a in 0..nb {
                    vectors.push((format!("v[{}]", k.b_id(a)), module_basis(ts, BasisKind::V, a)?));
                }
            }
        }
        let ops = vectors
            .iter()
            .map(|(_, v)| Ok(Graded::raising(tf.creation_vec(kind, v)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut instances = Vec::new();
        for (i, (zn, zeta)) in vectors.iter().enumerate() {
            for (j, (xn, xi)) in vectors.iter().enumerate() {
                let rhs = match kind {
                    Creation::S => k.phi_eta(&inner_eta(ts, zeta, xi))?,
                    Creation::T => k.phi_rho(&inner_rho(ts, zeta, xi))?,
                };
                instances.push((format!("ζ={zn}, ξ={xn}"), &ops[i].adj() * &ops[j], rhs));
            }
        }
        c.check(id, formula, instances)?;
    }

    // vertex algebra compressions and range commutation
    let mut s_comp = Vec::new();
    let mut s_comm = Vec::new();
    for a in 0..na {
        for (i, y) in k.vertices() {
            let phi = k.diag(tf.phi_vertex(&y)?);
            let rho = rho_edge(ts, EdgeKey::a(a), &y)?;
            let name = format!("α={}, y=E{}", k.a_id(a), i + 1);
            s_comp.push((
                name.clone(),
                &(&k.s[a].adj() * &phi) * &k.s[a],
                k.diag(tf.phi_eta_vertex(&rho)?),
            ));
            let phi_eta = k.diag(tf.phi_eta_vertex(&y)?);
            s_comm.push((name, &k.range_s(a) * &phi_eta, &phi * &k.range_s(a)));
        }
    }
    c.check("fock.s_vertex_compression", "s_α* φ̄(y) s_α = φ̄_η(ρ_α(y))", s_comp)?;
    c.check("fock.s_range_vertex", "s_α s_α* φ̄_η(y) = φ̄(y) s_α s_α*", s_comm)?;

    let mut t_comp = Vec::new();
    let mut t_comm = Vec::new();
    for a in 0..nb {
        for (i, y) in k.vertices() {
            let phi = k.diag(tf.phi_vertex(&y)?);
            let eta = rho_edge(ts, EdgeKey::b(a), &y)?;
            let name = format!("a={}, y=E{}", k.b_id(a), i + 1);
            t_comp.push((
                name.clone(),
                &(&k.t[a].adj() * &phi) * &k.t[a],
                k.diag(tf.phi_rho_vertex(&eta)?),
            ));
            let phi_rho = k.diag(tf.phi_rho_vertex(&y)?);
            t_comm.push((name, &k.range_t(a) * &phi_rho, &phi * &k.range_t(a)));
        }
    }
    c.check("fock.t_vertex_compression", "t_a* φ̄(y) t_a = φ̄_ρ(η_a(y))", t_comp)?;
    c.check("fock.t_range_vertex", "t_a t_a* φ̄_ρ(y) = φ̄(y) t_a t_a*", t_comm)?;

    let mut tile_comm = Vec::new();
    for (w, tile) in tiles.iter().enumerate() {
        let x = &(&(&k.t[tile.left] * &k.s[tile.bottom]) * &k.t[tile.right].adj()) * &k.s[tile.top].adj();
        for (i, y) in k.vertices() {
            let phi = k.diag(tf.phi_vertex(&y)?);
            let (l, r) = commutator(&x, &phi);
            tile_comm.push((format!("ω{}, y=E{}", w + 1, i + 1), l, r));
        }
    }
    c.check(
        "fock.tile_commutation",
        "t_a s_β t_b* s_α* φ̄(y) = φ̄(y) t_a s_β t_b* s_α* for each tile (α,b,a,β)",
        tile_comm,
    )?;

    // restriction to the ranges of s and t
    let mut s_restr = Vec::new();
    for a in 0..na {
        let target = ts.edges(Layer::A)[a].target;
        for (i, y) in k.vertices() {
            let mut w = EdgeElem::zero(ts, Layer::A);
            w.coeffs[a] = y.coeffs[target];
            let lhs = &k.phi_rho(&w)? * &k.p_rho;
            let rhs = &(&k.s[a] * &k.diag(tf.phi_rho_vertex(&y)?)) * &k.s[a].adj();
            s_restr.push((format!("α={}, y=E{}", k.a_id(a), i + 1), lhs, rhs));
        }
    }
    c.check(
        "fock.s_range_restriction",
        "φ̄_ρ(S_α y S_α*) P_ρ = s_α φ̄_ρ(y) s_α*",
        s_restr,
    )?;
    let mut t_restr = Vec::new();
    for a in 0..nb {
        let target = ts.edges(Layer::B)[a].target;
        for (i, y) in k.vertices() {
            let mut z = EdgeElem::zero(ts, Layer::B);
            z.coeffs[a] = y.coeffs[target];
            let lhs = &k.phi_eta(&z)? * &k.p_eta;
            let rhs = &(&k.t[a] * &k.diag(tf.phi_eta_vertex(&y)?)) * &k.t[a].adj();
            t_restr.push((format!("a={}, y=E{}", k.b_id(a), i + 1), lhs, rhs));
        }
    }
    c.check(
        "fock.t_range_restriction",
        "φ̄_η(T_a y T_a*) P_η = t_a φ̄_η(y) t_a*",
        t_restr,
    )?;

    // range projections commute with the diagonal actions
    let mut ranges: Vec<(String, Graded)> = Vec::new();
    for a in 0..na {
        ranges.push((format!("s[{}]s*", k.a_id(a)), k.range_s(a)));
    }
    for a in 0..nb {
        ranges.push((format!("t[{}]t*", k.b_id(a)), k.range_t(a)));
    }
    ranges.push(("P_ρ".into(), k.p_rho.clone()));
    ranges.push(("P_η".into(), k.p_eta.clone()));
    let mut diags: Vec<(String, &Graded)> = Vec::new();
    for a in 0..na {
        diags.push((format!("φ̄_ρ(p[{}])", k.a_id(a)), &k.w[a]));
    }
    for a in 0..nb {
        diags.push((format!("φ̄_η(q[{}])", k.b_id(a)), &k.z[a]));
    }
    let mut comm = Vec::new();
    for (rn, r) in &ranges {
        for (dn, d) in &diags {
            let (l, rr) = commutator(r, d);
            comm.push((format!("{rn}, {dn}"), l, rr));
        }
    }
    c.check(
        "fock.range_commutation",
        "s_α s_α*, t_a t_a*, P_ρ, P_η commute with φ̄_ρ(w) and φ̄_η(z)",
        comm,
    )?;

    // lifted compressions of diagonal operators on the tile module
    let mut s_lift = Vec::new();
    let mut t_lift = Vec::new();
    for w in 0..tiles.len() {
        let l = QuadVector::basis(ts, w);
        let lbar = k.diag(tf.tile_lift(&l)?);
        for a in 0..na {
            let u = module_basis(ts, BasisKind::U, a)?;
            let rhs = k.phi_eta(&inner_eta(ts, &u, &pointwise(&l, &u)))?;
            s_lift.push((
                format!("L=e_ω{}, α={}", w + 1, k.a_id(a)),
                &(&k.s[a].adj() * &lbar) * &k.s[a],
                rhs,
            ));
        }
        for a in 0..nb {
            let v = module_basis(ts, BasisKind::V, a)?;
            let rhs = k.phi_rho(&inner_rho(ts, &v, &pointwise(&l, &v)))?;
            t_lift.push((
                format!("L=e_ω{}, a={}", w + 1, k.b_id(a)),
                &(&k.t[a].adj() * &lbar) * &k.t[a],
                rhs,
            ));
        }
    }
    c.check("fock.s_lifted_compression", "s_α* L̄ s_α = φ̄_η(⟨u_α|L u_α⟩_η)", s_lift)?;
    c.check("fock.t_lifted_compression", "t_a* L̄ t_a = φ̄_ρ(⟨v_a|L v_a⟩_ρ)", t_lift)?;

    // compressions of the edge algebras
    let mut hats: [Vec<Instance>; 4] = Default::default();
    for a in 0..na {
        for beta in 0..na {
            let w = EdgeElem::basis(ts, EdgeKey::a(beta))?;
            let rhs = k.phi_eta(&embed(ts, Layer::B, &hat_rho_diag(ts, EdgeKey::a(a), &w)?))?;
            hats[0].push((
                format!("α={}, w=p[{}]", k.a_id(a), k.a_id(beta)),
                &(&k.s[a].adj() * &k.w[beta]) * &k.s[a],
                rhs,
            ));
        }
        for b in 0..nb {
            let z = EdgeElem::basis(ts, EdgeKey::b(b))?;
            let rhs = k.phi_eta(&hat_rho(ts, EdgeKey::a(a), &z)?)?;
            hats[1].push((
                format!("α={}, z=q[{}]", k.a_id(a), k.b_id(b)),
                &(&k.s[a].adj() * &k.z[b]) * &k.s[a],
                rhs,
            ));
        }
    }
    for a in 0..nb {
        for b in 0..nb {
            let z = EdgeElem::basis(ts, EdgeKey::b(b))?;
            let rhs = k.phi_rho(&embed(ts, Layer::A, &hat_rho_diag(ts, EdgeKey::b(a), &z)?))?;
            hats[2].push((
                format!("a={}, z=q[{}]", k.b_id(a), k.b_id(b)),
                &(&k.t[a].adj() * &k.z[b]) * &k.t[a],
                rhs,
            ));
        }
        for beta in 0..na {
            let w = EdgeElem::basis(ts, EdgeKey::a(beta))?;
            let rhs = k.phi_rho(&hat_rho(ts, EdgeKey::b(a), &w)?)?;
            hats[3].push((
                format!("a={}, w=p[{}]", k.b_id(a), k.a_id(beta)),
                &(&k.t[a].adj() * &k.w[beta]) * &k.t[a],
                rhs,
            ));
        }
    }
    let [h0, h1, h2, h3] = hats;
    c.check("fock.s_compress_rho", "s_α* φ̄_ρ(w) s_α = φ̄_η(ρ̂_α(w))", h0)?;
    c.check("fock.s_compress_eta", "s_α* φ̄_η(z) s_α = φ̄_η(ρ̂^η_α(z))", h1)?;
    c.check("fock.t_compress_eta", "t_a* φ̄_η(z) t_a = φ̄_ρ(η̂_a(z))", h2)?;
    c.check("fock.t_compress_rho", "t_a* φ̄_ρ(w) t_a = φ̄_ρ(η̂^ρ_a(w))", h3)?;

    // decomposition of the diagonal actions
    let mut dec_rho = Vec::new();
    for beta in 0..na {
        let w = EdgeElem::basis(ts, EdgeKey::a(beta))?;
        let mut terms = Vec::new();
        for a in 0..na {
            let inner = k.phi_eta(&embed(ts, Layer::B, &hat_rho_diag(ts, EdgeKey::a(a), &w)?))?;
            terms.push(&(&k.s[a] * &inner) * &k.s[a].adj());
        }
        terms.push(&(&k.p_eta * &k.w[beta]) * &k.p_eta);
        terms.push(&(&k.p0 * &k.w[beta]) * &k.p0);
        dec_rho.push((format!("w=p[{}]", k.a_id(beta)), k.w[beta].clone(), Graded::sum(&terms)));
    }
    c.check(
        "fock.rho_decomposition",
        "φ̄_ρ(w) = Σ_α s_α φ̄_η(ρ̂_α(w)) s_α* + P_η φ̄_ρ(w) P_η + P₀ φ̄_ρ(w) P₀",
        dec_rho,
    )?;
    let mut dec_eta = Vec::new();
    for b in 0..nb {
        let z = EdgeElem::basis(ts, EdgeKey::b(b))?;
        let mut terms = Vec::new();
        for a in 0..nb {
            let inner = k.phi_rho(&embed(ts, Layer::A, &hat_rho_diag(ts, EdgeKey::b(a), &z)?))?;
            terms.push(&(&k.t[a] * &inner) * &k.t[a].adj());
        }
        terms.push(&(&k.p_rho * &k.z[b]) * &k.p_rho);
        terms.push(&(&k.p0 * &k.z[b]) * &k.p0);
        dec_eta.push((format!("z=q[{}]", k.b_id(b)), k.z[b].clone(), Graded::sum(&terms)));
    }
    c.check(
        "fock.eta_decomposition",
        "φ̄_η(z) = Σ_a t_a φ̄_ρ(η̂_a(z)) t_a* + P_ρ φ̄_η(z) P_ρ + P₀ φ̄_η(z) P₀",
        dec_eta,
    )?;

    // rank-one operators
    let base: Vec<Graded> = (0..tf.level_size(0))
        .map(|i| {
            let v = tf.unit_vector(i);
            k.diag(tf.rank_one(&v, &v))
        })
        .collect();
    c.check(
        "fock.base_rank_one",
        "Σ_α θ_{p_α,p_α} + Σ_a θ_{q_a,q_a} = P₀",
        vec![("sum".into(), Graded::sum_or_zero(tf.dim(), &base), k.p0.clone())],
    )?;
    let level1: Vec<Graded> = (0..tiles.len())
        .map(|w| {
            let v = tf.unit_vector(tf.level_one_index(w));
            k.diag(tf.rank_one(&v, &v))
        })
        .collect();
    c.check(
        "fock.tile_rank_one",
        "Σ_ω θ_{ε_ω,ε_ω} = P₁",
        vec![("sum".into(), Graded::sum_or_zero(tf.dim(), &level1), k.p1.clone())],
    )?;
    Ok(c.report)
}

fn pointwise(l: &QuadVector, x: &QuadVector) -> QuadVector {
    QuadVector {
        coeffs: l.coeffs.iter().zip(&x.coeffs).map(|(a, b)| a * b).collect(),
    }
}

fn suite_guard(tf: &TruncatedFock, suite: &str, min_level: usize, floor: usize) -> Result<()> {
    if tf.max_level() < min_level {
        return Err(Error::TruncationTooShallow {
            identity: suite.to_string(),
            level: tf.max_level(),
            margin: min_level - floor,
            floor,
        });
    }
    Ok(())
}

/// The defining relations of the quad-module algebra, in the generators
/// `u_α = s_α`, `v_a = t_a`, `w = φ̄_ρ(·)`, `z = φ̄_η(·)`, compared on the
/// interior levels `2 ..= L - m`.
pub fn verify_relations_hk(tf: &TruncatedFock) -> Result<Report> {
    verify_relations_hk_with(tf, Mode::Strict)
}

pub fn verify_relations_hk_with(tf: &TruncatedFock, mode: Mode) -> Result<Report> {
    suite_guard(tf, "relation suite", 4, 2)?;
    let ts = tf.system();
    let k = Toolkit::new(tf)?;
    let mut c = Checker::new(tf, 2, 2, mode);
    let na = ts.edge_count(Layer::A);
    let nb = ts.edge_count(Layer::B);
    let ea = ts.edges(Layer::A);
    let eb = ts.edges(Layer::B);
    let ind = kappa_indicators(ts);
    let sum_uv = &k.sum_ss() + &k.sum_tt();

    c.check(
        "hk.M1",
        "Σ_β u_β u_β* + Σ_b v_b v_b* = 1",
        vec![("sum".into(), sum_uv.clone(), k.one.clone())],
    )?;
    c.check_from(
        "hk.M1_exact",
        "Σ_α s_α s_α* + Σ_a t_a t_a* + P₀ = 1 + P₁",
        0,
        1,
        vec![("sum".into(), &sum_uv + &k.p0, &k.one + &k.p1)],
    )?;

    let mut m2 = Vec::new();
    let mut m3 = Vec::new();
    for beta in 0..na {
        for a in 0..na {
            let (l, r) = commutator(&k.range_s(a), &k.w[beta]);
            m2.push((format!("u[{}], w=p[{}]", k.a_id(a), k.a_id(beta)), l, r));
        }
        for a in 0..nb {
            let (l, r) = commutator(&k.range_t(a), &k.w[beta]);
            m2.push((format!("v[{}], w=p[{}]", k.b_id(a), k.a_id(beta)), l, r));
        }
    }
    for b in 0..nb {
        for a in 0..na {
            let (l, r) = commutator(&k.range_s(a), &k.z[b]);
            m3.push((format!("u[{}], z=q[{}]", k.a_id(a), k.b_id(b)), l, r));
        }
        for a in 0..nb {
            let (l, r) = commutator(&k.range_t(a), &k.z[b]);
            m3.push((format!("v[{}], z=q[{}]", k.b_id(a), k.b_id(b)), l, r));
        }
    }
    c.check("hk.M2", "u_α u_α* w = w u_α u_α*, v_a v_a* w = w v_a v_a*", m2)?;
    c.check("hk.M3", "u_α u_α* z = z u_α u_α*, v_a v_a* z = z v_a v_a*", m3)?;

    let mut m4 = Vec::new();
    let mut m5 = Vec::new();
    for a in 0..na {
        for beta in 0..na {
            let w = EdgeElem::basis(ts, EdgeKey::a(beta))?;
            let rhs = k.phi_eta(&embed(ts, Layer::B, &hat_rho_diag(ts, EdgeKey::a(a), &w)?))?;
            m4.push((
                format!("α={}, w=p[{}]", k.a_id(a), k.a_id(beta)),
                &(&k.s[a].adj() * &k.w[beta]) * &k.s[a],
                rhs,
            ));
        }
        for b in 0..nb {
            let z = EdgeElem::basis(ts, EdgeKey::b(b))?;
            let rhs = k.phi_eta(&hat_rho(ts, EdgeKey::a(a), &z)?)?;
            m5.push((
                format!("α={}, z=q[{}]", k.a_id(a), k.b_id(b)),
                &(&k.s[a].adj() * &k.z[b]) * &k.s[a],
                rhs,
            ));
        }
    }
    for a in 0..nb {
        for b in 0..nb {
            let z = EdgeElem::basis(ts, EdgeKey::b(b))?;
            let rhs = k.phi_rho(&embed(ts, Layer::A, &hat_rho_diag(ts, EdgeKey::b(a), &z)?))?;
            m4.push((
                format!("a={}, z=q[{}]", k.b_id(a), k.b_id(b)),
                &(&k.t[a].adj() * &k.z[b]) * &k.t[a],
                rhs,
            ));
        }
        for beta in 0..na {
            let w = EdgeElem::basis(ts, EdgeKey::a(beta))?;
            let rhs = k.phi_rho(&hat_rho(ts, EdgeKey::b(a), &w)?)?;
            m5.push((
                format!("a={}, w=p[{}]", k.b_id(a), k.a_id(beta)),
                &(&k.t[a].adj() * &k.w[beta]) * &k.t[a],
                rhs,
            ));
        }
    }
    c.check("hk.M4", "ρ̂_α(w) = u_α* w u_α, η̂_a(z) = v_a* z v_a", m4)?;
    c.check("hk.M5", "ρ̂^η_α(z) = u_α* z u_α, η̂^ρ_a(w) = v_a* w v_a", m5)?;

    let mut m6 = Vec::new();
    for (i, y) in k.vertices() {
        m6.push((
            format!("y=E{}", i + 1),
            k.diag(tf.phi_eta_vertex(&y)?),
            k.diag(tf.phi_rho_vertex(&y)?),
        ));
    }
    c.check("hk.M6", "ι_η(y) = ι_ρ(y)", m6)?;

    let sum_p = Graded::sum_or_zero(tf.dim(), &k.w);
    let sum_q = Graded::sum_or_zero(tf.dim(), &k.z);
    c.check(
        "hk.P1",
        "Σ_β p_β = Σ_b q_b = Σ_β u_β u_β* + Σ_b v_b v_b* = 1",
        vec![
            ("Σp".into(), sum_p, k.one.clone()),
            ("Σq".into(), sum_q, k.one.clone()),
            ("Σuu*+Σvv*".into(), sum_uv.clone(), k.one.clone()),
        ],
    )?;

    let mut p2 = Vec::new();
    for a in 0..na {
        p2.push((format!("u[{}]", k.a_id(a)), &k.range_s(a) * &k.w[a], k.range_s(a)));
    }
    for a in 0..nb {
        p2.push((format!("v[{}]", k.b_id(a)), &k.range_t(a) * &k.z[a], k.range_t(a)));
    }
    c.check("hk.P2", "u_α u_α* p_α = u_α u_α*, v_a v_a* q_a = v_a v_a*", p2)?;

    let mut p3 = Vec::new();
    for a in 0..na {
        for b in 0..nb {
            let (l, r) = commutator(&k.range_s(a), &k.z[b]);
            p3.push((format!("u[{}], q[{}]", k.a_id(a), k.b_id(b)), l, r));
            let (l, r) = commutator(&k.range_t(b), &k.w[a]);
            p3.push((format!("v[{}], p[{}]", k.b_id(b), k.a_id(a)), l, r));
        }
    }
    c.check("hk.P3", "u_α u_α* q_a = q_a u_α u_α*, v_a v_a* p_α = p_α v_a v_a*", p3)?;

    let mut p4 = Vec::new();
    for a in 0..na {
        let terms: Vec<Graded> = (0..na)
            .filter(|&b| ea[a].target == ea[b].source)
            .map(|b| k.w[b].clone())
            .collect();
        p4.push((
            format!("u[{}]", k.a_id(a)),
            &k.s[a].adj() * &k.s[a],
            Graded::sum_or_zero(tf.dim(), &terms),
        ));
    }
    for a in 0..nb {
        let terms: Vec<Graded> = (0..nb)
            .filter(|&b| eb[a].target == eb[b].source)
            .map(|b| k.z[b].clone())
            .collect();
        p4.push((
            format!("v[{}]", k.b_id(a)),
            &k.t[a].adj() * &k.t[a],
            Graded::sum_or_zero(tf.dim(), &terms),
        ));
    }
    c.check("hk.P4", "u_α* u_α = Σ_β A^E(α,β) p_β, v_a* v_a = Σ_b B^E(a,b) q_b", p4)?;

    let mut p5 = Vec::new();
    for alpha in 0..na {
        for a in 0..nb {
            let terms: Vec<Graded> = (0..nb)
                .filter(|&b| ind.kappa_a(a, alpha, b) == 1)
                .map(|b| k.z[b].clone())
                .collect();
            p5.push((
                format!("α={}, q[{}]", k.a_id(alpha), k.b_id(a)),
                &(&k.s[alpha].adj() * &k.z[a]) * &k.s[alpha],
                Graded::sum_or_zero(tf.dim(), &terms),
            ));
            let terms: Vec<Graded> = (0..na)
                .filter(|&beta| ind.kappa_b(alpha, a, beta) == 1)
                .map(|beta| k.w[beta].clone())
                .collect();
            p5.push((
                format!("a={}, p[{}]", k.b_id(a), k.a_id(alpha)),
                &(&k.t[a].adj() * &k.w[alpha]) * &k.t[a],
                Graded::sum_or_zero(tf.dim(), &terms),
            ));
        }
    }
    c.check(
        "hk.P5",
        "u_α* q_a u_α = Σ_b κ_A(a,α,b) q_b, v_a* p_α v_a = Σ_β κ_B(α,a,β) p_β",
        p5,
    )?;

    let mut pq = Vec::new();
    for alpha in 0..na {
        for a in 0..nb {
            let (l, r) = commutator(&k.w[alpha], &k.z[a]);
            pq.push((format!("p[{}], q[{}]", k.a_id(alpha), k.b_id(a)), l, r));
        }
    }
    c.check("hk.pq_commute", "p_α q_a = q_a p_α", pq)?;

    let mut src = Vec::new();
    for alpha in 0..na {
        let terms: Vec<Graded> = (0..nb)
            .filter(|&b| ea[alpha].target == eb[b].source)
            .map(|b| k.z[b].clone())
            .collect();
        src.push((
            format!("u[{}]", k.a_id(alpha)),
            &k.s[alpha].adj() * &k.s[alpha],
            Graded::sum_or_zero(tf.dim(), &terms),
        ));
    }
    for a in 0..nb {
        let terms: Vec<Graded> = (0..na)
            .filter(|&b| eb[a].target == ea[b].source)
            .map(|b| k.w[b].clone())
            .collect();
        src.push((
            format!("v[{}]", k.b_id(a)),
            &k.t[a].adj() * &k.t[a],
            Graded::sum_or_zero(tf.dim(), &terms),
        ));
    }
    c.check(
        "hk.source_projections",
        "u_α* u_α = Σ_b κ_AB(α,b) q_b, v_a* v_a = Σ_β κ_BA(a,β) p_β",
        src,
    )?;

    let mut eq = Vec::new();
    for alpha in 0..na {
        for a in 0..nb {
            if ea[alpha].target == eb[a].target {
                eq.push((
                    format!("α={}, a={}", k.a_id(alpha), k.b_id(a)),
                    &k.s[alpha].adj() * &k.s[alpha],
                    &k.t[a].adj() * &k.t[a],
                ));
            }
        }
    }
    c.check("hk.equal_sources", "r(α) = r(a) ⟹ u_α* u_α = v_a* v_a", eq)?;

    // relations in the projections e_(α,a) = p_α q_a
    let e = |alpha: usize, a: usize| &k.w[alpha] * &k.z[a];
    let omega = omega_set(ts);
    let qm = build_quad_matrices(ts);
    let sum_e = Graded::sum_or_zero(tf.dim(), &omega.iter().map(|p| e(p.alpha, p.a)).collect::<Vec<_>>());
    c.check(
        "hk.P1'",
        "Σ_Ω e_(α,a) = Σ_β u_β u_β* + Σ_b v_b v_b* = 1",
        vec![
            ("Σe".into(), sum_e.clone(), k.one.clone()),
            ("Σe vs Σuu*+Σvv*".into(), sum_e, sum_uv),
        ],
    )?;
    let mut p2p = Vec::new();
    for alpha in 0..na {
        let es: Vec<Graded> = (0..nb).map(|a| e(alpha, a)).collect();
        let r = k.range_s(alpha);
        let right = Graded::sum_or_zero(tf.dim(), &es.iter().map(|x| &r * x).collect::<Vec<_>>());
        let left = Graded::sum_or_zero(tf.dim(), &es.iter().map(|x| x * &r).collect::<Vec<_>>());
        p2p.push((format!("α={} (right)", k.a_id(alpha)), r.clone(), right));
        p2p.push((format!("α={} (left)", k.a_id(alpha)), r, left));
    }
    c.check("hk.P2'", "u_α u_α* = Σ_a u_α u_α* e_(α,a) = Σ_a e_(α,a) u_α u_α*", p2p)?;
    let mut p3p = Vec::new();
    for a in 0..nb {
        let es: Vec<Graded> = (0..na).map(|alpha| e(alpha, a)).collect();
        let r = k.range_t(a);
        let right = Graded::sum_or_zero(tf.dim(), &es.iter().map(|x| &r * x).collect::<Vec<_>>());
        let left = Graded::sum_or_zero(tf.dim(), &es.iter().map(|x| x * &r).collect::<Vec<_>>());
        p3p.push((format!("a={} (right)", k.b_id(a)), r.clone(), right));
        p3p.push((format!("a={} (left)", k.b_id(a)), r, left));
    }
    c.check("hk.P3'", "v_a v_a* = Σ_α v_a v_a* e_(α,a) = Σ_α e_(α,a) v_a v_a*", p3p)?;

    let mut p4p = Vec::new();
    let mut p5p = Vec::new();
    for (i, p) in omega.iter().enumerate() {
        let ep = e(p.alpha, p.a);
        let a_terms: Vec<Graded> = omega
            .iter()
            .enumerate()
            .filter(|&(j, _)| qm.a_kappa[i][j] == 1)
            .map(|(_, q)| e(q.alpha, q.a))
            .collect();
        let b_terms: Vec<Graded> = omega
            .iter()
            .enumerate()
            .filter(|&(j, _)| qm.b_kappa[i][j] == 1)
            .map(|(_, q)| e(q.alpha, q.a))
            .collect();
        let name = pair_name(&k, p);
        p4p.push((
            name.clone(),
            &(&k.s[p.alpha].adj() * &ep) * &k.s[p.alpha],
            Graded::sum_or_zero(tf.dim(), &a_terms),
        ));
        p5p.push((
            name,
            &(&k.t[p.a].adj() * &ep) * &k.t[p.a],
            Graded::sum_or_zero(tf.dim(), &b_terms),
        ));
    }
    c.check("hk.P4'", "u_α* e_(α,a) u_α = Σ_Ω A_κ((α,a),(δ,b)) e_(δ,b)", p4p)?;
    c.check("hk.P5'", "v_a* e_(α,a) v_a = Σ_Ω B_κ((α,a),(β,d)) e_(β,d)", p5p)?;
    Ok(c.report)
}

fn pair_name(k: &Toolkit<'_>, p: &OmegaPair) -> String {
    format!("({}, {})", k.a_id(p.alpha), k.b_id(p.a))
}

/// Cuntz–Krieger generators `S_(α,a) = e_(α,a) s_α`, `T_(α,a) = e_(α,a) t_a`
/// indexed by `Ω_κ`, with the report on their relations.
#[derive(Debug, Clone)]
pub struct CkRealization {
    pub omega: Vec<OmegaPair>,
    pub s: Vec<SparseOp>,
    pub t: Vec<SparseOp>,
    pub report: Report,
}

pub fn ck_generators(tf: &TruncatedFock) -> Result<CkRealization> {
    ck_generators_with(tf, Mode::Strict)
}

pub fn ck_generators_with(tf: &TruncatedFock, mode: Mode) -> Result<CkRealization> {
    suite_guard(tf, "Cuntz–Krieger suite", 4, 2)?;
    let ts = tf.system();
    let k = Toolkit::new(tf)?;
    let mut c = Checker::new(tf, 2, 2, mode);
    let omega = omega_set(ts);
    let qm = build_quad_matrices(ts);
    let e: Vec<Graded> = omega.iter().map(|p| &k.w[p.alpha] * &k.z[p.a]).collect();
    let s: Vec<Graded> = omega.iter().zip(&e).map(|(p, e)| e * &k.s[p.alpha]).collect();
    let t: Vec<Graded> = omega.iter().zip(&e).map(|(p, e)| e * &k.t[p.a]).collect();
    let ranges: Vec<Graded> = s
        .iter()
        .zip(&t)
        .map(|(s, t)| &(s * &s.adj()) + &(t * &t.adj()))
        .collect();

    c.check(
        "ck.unit",
        "Σ_Ω S S* + Σ_Ω T T* = 1",
        vec![("sum".into(), Graded::sum_or_zero(tf.dim(), &ranges), k.one.clone())],
    )?;
    let mut rel_s = Vec::new();
    let mut rel_t = Vec::new();
    let mut proj = Vec::new();
    let mut iso = Vec::new();
    for (i, p) in omega.iter().enumerate() {
        let name = pair_name(&k, p);
        let a_terms: Vec<Graded> = (0..omega.len())
            .filter(|&j| qm.a_kappa[i][j] == 1)
            .map(|j| ranges[j].clone())
            .collect();
        let b_terms: Vec<Graded> = (0..omega.len())
            .filter(|&j| qm.b_kappa[i][j] == 1)
            .map(|j| ranges[j].clone())
            .collect();
        rel_s.push((
            name.clone(),
            &s[i].adj() * &s[i],
            Graded::sum_or_zero(tf.dim(), &a_terms),
        ));
        rel_t.push((
            name.clone(),
            &t[i].adj() * &t[i],
            Graded::sum_or_zero(tf.dim(), &b_terms),
        ));
        proj.push((name.clone(), e[i].clone(), ranges[i].clone()));
        iso.push((format!("S{name}"), &(&s[i] * &s[i].adj()) * &s[i], s[i].clone()));
        iso.push((format!("T{name}"), &(&t[i] * &t[i].adj()) * &t[i], t[i].clone()));
    }
    c.check(
        "ck.S_relation",
        "S*_(α,a) S_(α,a) = Σ_Ω A_κ((α,a),(δ,b)) (SS* + TT*)_(δ,b)",
        rel_s,
    )?;
    c.check(
        "ck.T_relation",
        "T*_(α,a) T_(α,a) = Σ_Ω B_κ((α,a),(β,d)) (SS* + TT*)_(β,d)",
        rel_t,
    )?;
    c.check(
        "ck.range_projection",
        "e_(α,a) = S_(α,a) S*_(α,a) + T_(α,a) T*_(α,a)",
        proj,
    )?;
    c.check("ck.partial_isometry", "S S* S = S, T T* T = T", iso)?;
    Ok(CkRealization {
        omega,
        s: s.into_iter().map(|g| g.op).collect(),
        t: t.into_iter().map(|g| g.op).collect(),
        report: c.report,
    })
}
