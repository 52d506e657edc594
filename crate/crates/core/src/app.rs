//! Command orchestration behind the `quadtex` binary. Every command returns
//! an [`Outcome`]: the rendered report and a process exit code.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 validation error or a
//! skipped check, 3 internal cross-check failure.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::diagonal::{essentiality, Essentiality};
use crate::error::{Error, Result};
use crate::fock::{
    ck_generators_with, fock_basis_with_cap, verify_fock_identities_with, verify_relations_hk_with, Mode, Report,
    ReportEntry, Status, TruncatedFock, DEFAULT_BASIS_CAP,
};
use crate::input::{InputDoc, KappaSpec};
use crate::invariants::{build_quad_matrices, k_theory_of, structure_checks, StructureReport};
use crate::subshift::{count_rectangles_in, enumerate_rectangles, DEFAULT_PATTERN_CAP};
use crate::textile::{
    count_specifications, enumerate_kappas, omega_set, KappaStrategy, Layer, LayeredGraph, TextileSystem,
};

pub const BASIS_CAP_ENV: &str = "QUADTEX_BASIS_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Verify,
    Kappa,
    Tiles,
    Subshift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Command-line override of the document's specification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KappaChoice {
    Lex,
    Exchange,
    /// The table given in the input document.
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub command: Command,
    /// Fock truncation level.
    pub level: usize,
    pub kappa: Option<KappaChoice>,
    pub format: Format,
    /// Listing limit for `kappa` and `subshift`.
    pub limit: usize,
    pub basis_cap: usize,
    pub pattern_cap: usize,
    pub rows: usize,
    pub cols: usize,
    /// `tiles` writes the Wang tile list regardless of format.
    pub emit_wang: bool,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, command: Command) -> Self {
        RunConfig {
            input: input.into(),
            command,
            level: 4,
            kappa: None,
            format: Format::Text,
            limit: 10,
            basis_cap: DEFAULT_BASIS_CAP,
            pattern_cap: DEFAULT_PATTERN_CAP,
            rows: 2,
            cols: 2,
            emit_wang: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.level == 0 {
            return Err(Error::Input("--level must be at least 1".into()));
        }
        if self.basis_cap == 0 || self.pattern_cap == 0 {
            return Err(Error::Input("caps must be positive".into()));
        }
        if self.rows == 0 || self.cols == 0 {
            return Err(Error::Input("--rows and --cols must be at least 1".into()));
        }
        Ok(())
    }
}

/// Parses the basis cap override, if set.
pub fn basis_cap_from_env(value: Option<&str>) -> Result<Option<usize>> {
    match value {
        None => Ok(None),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Input(format!("{BASIS_CAP_ENV}={s:?} is not a positive integer"))),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(exit_code: i32, stdout: String) -> Self {
        Outcome {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Outcome {
            exit_code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    let result = config.validate().and_then(|()| match config.command {
        Command::Analyze => cmd_analyze(config),
        Command::Verify => cmd_verify(config),
        Command::Kappa => cmd_kappa(config),
        Command::Tiles => cmd_tiles(config),
        Command::Subshift => cmd_subshift(config),
    });
    result.unwrap_or_else(|e| Outcome::error(&e))
}

fn resolve_strategy(doc: &InputDoc, choice: Option<KappaChoice>) -> Result<KappaStrategy> {
    match choice {
        None => doc.strategy(),
        Some(KappaChoice::Lex) => Ok(KappaStrategy::Lex),
        Some(KappaChoice::Exchange) => Ok(KappaStrategy::Exchange),
        Some(KappaChoice::Explicit) => match &doc.kappa {
            Some(KappaSpec::Table(t)) => Ok(KappaStrategy::Explicit(t.clone())),
            _ => Err(Error::Input(
                "--kappa explicit needs a specification table in the input".into(),
            )),
        },
    }
}

fn strategy_name(s: &KappaStrategy) -> &'static str {
    match s {
        KappaStrategy::Lex => "lex",
        KappaStrategy::Exchange => "exchange",
        KappaStrategy::Explicit(_) => "explicit",
    }
}

fn load(config: &RunConfig) -> Result<(KappaStrategy, TextileSystem)> {
    let doc = InputDoc::read(&config.input)?;
    let strategy = resolve_strategy(&doc, config.kappa)?;
    let ts = doc.system_with(&strategy)?;
    Ok((strategy, ts))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn write_matrix(out: &mut String, name: &str, m: &[Vec<i64>]) {
    let _ = writeln!(out, "{name}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

fn list_or_none(v: &[usize]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K0Report {
    pub torsion: Vec<String>,
    pub free_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K1Report {
    pub free_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub kappa: String,
    pub tiles: usize,
    pub n: usize,
    /// `(alpha, a)` pairs indexing the rows of the transition matrices.
    pub omega: Vec<String>,
    #[serde(rename = "A_kappa")]
    pub a_kappa: Vec<Vec<i64>>,
    #[serde(rename = "B_kappa")]
    pub b_kappa: Vec<Vec<i64>>,
    #[serde(rename = "H_kappa")]
    pub h_kappa: Vec<Vec<i64>>,
    #[serde(rename = "K0")]
    pub k0: K0Report,
    #[serde(rename = "K1")]
    pub k1: K1Report,
    pub groups: String,
    pub cross_check: String,
    /// Matrix-level checks on `H_kappa`.
    pub structure: StructureReport,
    pub essentiality: Essentiality,
}

impl AnalyzeReport {
    pub fn build(strategy: &KappaStrategy, ts: &TextileSystem) -> Result<Self> {
        let qm = build_quad_matrices(ts);
        let kt = k_theory_of(&qm)?;
        let ea = ts.edges(Layer::A);
        let eb = ts.edges(Layer::B);
        Ok(AnalyzeReport {
            kappa: strategy_name(strategy).into(),
            tiles: ts.tiles().len(),
            n: qm.omega.len(),
            omega: omega_set(ts)
                .iter()
                .map(|p| format!("({}, {})", ea[p.alpha].id(), eb[p.a].id()))
                .collect(),
            structure: structure_checks(&qm.h_kappa),
            a_kappa: qm.a_kappa,
            b_kappa: qm.b_kappa,
            h_kappa: qm.h_kappa,
            k0: K0Report {
                torsion: kt.groups.k0_torsion.clone(),
                free_rank: kt.groups.k0_free_rank,
            },
            k1: K1Report {
                free_rank: kt.groups.k1_free_rank,
            },
            groups: kt.groups.to_string(),
            cross_check: "ok".into(),
            essentiality: essentiality(ts),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "kappa: {}", self.kappa);
        let _ = writeln!(out, "tiles: {}", self.tiles);
        let _ = writeln!(out, "n = {}", self.n);
        for (i, p) in self.omega.iter().enumerate() {
            let _ = writeln!(out, "  {:>3}  {p}", i + 1);
        }
        write_matrix(&mut out, "A_kappa", &self.a_kappa);
        write_matrix(&mut out, "B_kappa", &self.b_kappa);
        write_matrix(&mut out, "H_kappa", &self.h_kappa);
        let torsion = if self.k0.torsion.is_empty() {
            "none".to_string()
        } else {
            self.k0.torsion.join(", ")
        };
        let _ = writeln!(
            out,
            "K0 torsion: {torsion}; K0 free rank: {}; K1 free rank: {}",
            self.k0.free_rank, self.k1.free_rank
        );
        let _ = writeln!(out, "{}", self.groups);
        let _ = writeln!(out, "cross-check against H_kappa - I: {}", self.cross_check);
        let s = &self.structure;
        let _ = writeln!(
            out,
            "H_kappa: irreducible = {}, condition (I) (matrix level) = {}, zero row = {} (rows: {})",
            s.irreducible,
            s.condition_i,
            s.has_zero_row,
            list_or_none(&s.zero_rows)
        );
        let e = &self.essentiality;
        let _ = writeln!(
            out,
            "essential = {}; A zero rows: {}, zero cols: {}; B zero rows: {}, zero cols: {}",
            e.essential,
            list_or_none(&e.zero_rows_a),
            list_or_none(&e.zero_cols_a),
            list_or_none(&e.zero_rows_b),
            list_or_none(&e.zero_cols_b)
        );
        out
    }
}

pub fn cmd_analyze(config: &RunConfig) -> Result<Outcome> {
    let (strategy, ts) = load(config)?;
    let report = AnalyzeReport::build(&strategy, &ts)?;
    let text = match config.format {
        Format::Text => report.render_text(),
        Format::Json => to_json(&report),
    };
    Ok(Outcome::ok(0, text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub level: usize,
    pub dimension: usize,
    pub identities: Vec<ReportEntry>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerifyReport {
    pub fn build(tf: &TruncatedFock) -> Result<Self> {
        let mut report = Report::default();
        suite(&mut report, "fock.*", verify_fock_identities_with(tf, Mode::Lenient))?;
        suite(&mut report, "hk.*", verify_relations_hk_with(tf, Mode::Lenient))?;
        suite(
            &mut report,
            "ck.*",
            ck_generators_with(tf, Mode::Lenient).map(|ck| ck.report),
        )?;
        let count = |s| report.with_status(s).count();
        Ok(VerifyReport {
            level: tf.max_level(),
            dimension: tf.dim(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            identities: report.entries,
        })
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            1
        } else if self.skipped > 0 {
            2
        } else {
            0
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Fock truncation level {}, dimension {}",
            self.level, self.dimension
        );
        for e in &self.identities {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let [lo, hi] = e.levels_checked;
            let _ = writeln!(
                out,
                "{status:<8} {:<28} levels {lo}..={hi}  {}",
                e.identity_id, e.paper_ref
            );
            if let Some(w) = &e.witness {
                let _ = writeln!(
                    out,
                    "         witness {}: row {}, col {}: lhs {} != rhs {}",
                    w.instance, w.row, w.col, w.lhs, w.rhs
                );
            }
            if let Some(n) = &e.notice {
                let _ = writeln!(out, "         notice: {n}");
            }
        }
        let _ = writeln!(
            out,
            "passed {}, failed {}, skipped {}",
            self.passed, self.failed, self.skipped
        );
        out
    }
}

/// A suite whose minimum truncation is not met becomes one skipped entry.
fn suite(report: &mut Report, id: &str, result: Result<Report>) -> Result<()> {
    match result {
        Ok(r) => report.extend(r),
        Err(e @ Error::TruncationTooShallow { .. }) => {
            let Error::TruncationTooShallow { level, .. } = &e else {
                unreachable!()
            };
            report.entries.push(ReportEntry {
                identity_id: id.into(),
                paper_ref: "whole suite".into(),
                levels_checked: [0, *level],
                status: Status::Skipped,
                witness: None,
                notice: Some(e.to_string()),
            });
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

pub fn cmd_verify(config: &RunConfig) -> Result<Outcome> {
    let (_, ts) = load(config)?;
    let tf = fock_basis_with_cap(&ts, config.level, config.basis_cap)?;
    let report = VerifyReport::build(&tf)?;
    let text = match config.format {
        Format::Text => report.render_text(),
        Format::Json => to_json(&report),
    };
    Ok(Outcome::ok(report.exit_code(), text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaReport {
    /// Total number of specifications, in decimal.
    pub specifications: String,
    pub listed: usize,
    pub kappas: Vec<Vec<[[String; 2]; 2]>>,
}

impl KappaReport {
    pub fn build(g: &LayeredGraph, limit: usize) -> Result<Self> {
        let total = count_specifications(g.matrix(Layer::A), g.matrix(Layer::B))?;
        let kappas: Vec<_> = enumerate_kappas(g, limit).map(|k| k.id_table(g)).collect();
        Ok(KappaReport {
            specifications: total.to_string(),
            listed: kappas.len(),
            kappas,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} specifications", self.specifications);
        let _ = writeln!(out, "listed: {}", self.listed);
        for (i, k) in self.kappas.iter().enumerate() {
            let _ = writeln!(out, "kappa {}:", i + 1);
            for [[alpha, b], [a, beta]] in k {
                let _ = writeln!(out, "  ({alpha}, {b}) -> ({a}, {beta})");
            }
        }
        out
    }
}

pub fn cmd_kappa(config: &RunConfig) -> Result<Outcome> {
    let doc = InputDoc::read(&config.input)?;
    let (a, b) = doc.matrices()?;
    let g = LayeredGraph::new(a, b)?;
    let report = KappaReport::build(&g, config.limit)?;
    let text = match config.format {
        Format::Text => report.render_text(),
        Format::Json => to_json(&report),
    };
    Ok(Outcome::ok(0, text))
}

/// One tile with its four edge labels and its corner vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WangTile {
    /// 1-based position in the tile alphabet.
    pub id: usize,
    pub top: String,
    pub right: String,
    pub left: String,
    pub bottom: String,
    /// 1-based.
    pub vertex: usize,
}

pub fn wang_tiles(ts: &TextileSystem) -> Vec<WangTile> {
    let ea = ts.edges(Layer::A);
    let eb = ts.edges(Layer::B);
    ts.tiles()
        .iter()
        .enumerate()
        .map(|(i, t)| WangTile {
            id: i + 1,
            top: ea[t.top].id(),
            right: eb[t.right].id(),
            left: eb[t.left].id(),
            bottom: ea[t.bottom].id(),
            vertex: t.vertex + 1,
        })
        .collect()
}

pub fn cmd_tiles(config: &RunConfig) -> Result<Outcome> {
    let (_, ts) = load(config)?;
    let tiles = wang_tiles(&ts);
    let text = if config.emit_wang || config.format == Format::Json {
        to_json(&tiles)
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "{} tiles", tiles.len());
        for t in &tiles {
            let _ = writeln!(
                out,
                "  {:>3}  top {}  right {}  left {}  bottom {}  vertex {}",
                t.id, t.top, t.right, t.left, t.bottom, t.vertex
            );
        }
        out
    };
    Ok(Outcome::ok(0, text))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubshiftReport {
    pub rows: usize,
    pub cols: usize,
    /// Transfer-matrix count, in decimal.
    pub count: String,
    pub listed: usize,
    /// Cells as 1-based tile ids.
    pub rectangles: Vec<Vec<Vec<usize>>>,
}

impl SubshiftReport {
    /// Counts by transfer matrix and lists up to `limit` patches. When the
    /// listing is exhaustive its length must equal the count.
    pub fn build(ts: &TextileSystem, rows: usize, cols: usize, limit: usize, cap: usize) -> Result<Self> {
        let count = count_rectangles_in(ts.tiles(), rows, cols, cap)?;
        let rects = enumerate_rectangles(ts, rows, cols, limit)?;
        if rects.len() < limit && count != rects.len().into() {
            return Err(Error::CrossCheckFailure(format!(
                "{rows}x{cols}: transfer matrix counts {count}, enumeration finds {}",
                rects.len()
            )));
        }
        Ok(SubshiftReport {
            rows,
            cols,
            count: count.to_string(),
            listed: rects.len(),
            rectangles: rects
                .into_iter()
                .map(|r| {
                    r.cells
                        .into_iter()
                        .map(|row| row.into_iter().map(|c| c + 1).collect())
                        .collect()
                })
                .collect(),
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} rectangles of shape {}x{}", self.count, self.rows, self.cols);
        let _ = writeln!(out, "listed: {}", self.listed);
        for (i, r) in self.rectangles.iter().enumerate() {
            let rows: Vec<String> = r
                .iter()
                .map(|row| row.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let _ = writeln!(out, "  {:>3}  {}", i + 1, rows.join(" / "));
        }
        out
    }
}

pub fn cmd_subshift(config: &RunConfig) -> Result<Outcome> {
    let (_, ts) = load(config)?;
    let report = SubshiftReport::build(&ts, config.rows, config.cols, config.limit, config.pattern_cap)?;
    let text = match config.format {
        Format::Text => report.render_text(),
        Format::Json => to_json(&report),
    };
    Ok(Outcome::ok(0, text))
}
