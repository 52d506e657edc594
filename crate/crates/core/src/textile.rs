//! Layered edge graphs of two commuting matrices, specifications between
//! their composable edge pairs, and the tile alphabet they generate.
//!
//! Vertices are 0-based internally and 1-based in edge ids. Every ordering in
//! this module is fixed: edges by `(source, target, mult_index)`, pairs by the
//! positions of their edges, tiles by `(top, right)`. All matrix orderings
//! downstream derive from these, so results are reproducible bit for bit.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    A,
    B,
}

impl Layer {
    pub fn opposite(self) -> Layer {
        match self {
            Layer::A => Layer::B,
            Layer::B => Layer::A,
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Layer::A => "A",
            Layer::B => "B",
        })
    }
}

/// One of the `M(source, target)` parallel edges of a layer graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub layer: Layer,
    pub source: usize,
    pub target: usize,
    /// 1-based position among the parallel edges `source -> target`.
    pub mult_index: usize,
}

impl Edge {
    /// Canonical id `L:i->j#k` with 1-based vertices.
    pub fn id(&self) -> String {
        format!(
            "{}:{}->{}#{}",
            self.layer,
            self.source + 1,
            self.target + 1,
            self.mult_index
        )
    }

    pub fn parse_id(id: &str) -> Result<Edge> {
        let bad = || Error::Input(format!("malformed edge id {id:?}"));
        let (layer, rest) = id.split_once(':').ok_or_else(bad)?;
        let layer = match layer {
            "A" => Layer::A,
            "B" => Layer::B,
            _ => return Err(bad()),
        };
        let (src, rest) = rest.split_once("->").ok_or_else(bad)?;
        let (dst, mult) = rest.split_once('#').ok_or_else(bad)?;
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
        let (src, dst, mult) = (parse(src)?, parse(dst)?, parse(mult)?);
        if src == 0 || dst == 0 || mult == 0 {
            return Err(bad());
        }
        Ok(Edge {
            layer,
            source: src - 1,
            target: dst - 1,
            mult_index: mult,
        })
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Layer plus position in that layer's ordered edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey {
    pub layer: Layer,
    pub index: usize,
}

impl EdgeKey {
    pub fn a(index: usize) -> Self {
        EdgeKey { layer: Layer::A, index }
    }

    pub fn b(index: usize) -> Self {
        EdgeKey { layer: Layer::B, index }
    }
}

/// Expands `M` into its edge list: `M(i,j)` edges `i -> j`, ordered
/// lexicographically by `(source, target, mult_index)`.
pub fn edges_from_matrix(m: &IntMatrix, layer: Layer) -> Vec<Edge> {
    let n = m.size();
    let mut edges = Vec::new();
    for source in 0..n {
        for target in 0..n {
            for k in 0..m.get(source, target) {
                edges.push(Edge {
                    layer,
                    source,
                    target,
                    mult_index: k as usize + 1,
                });
            }
        }
    }
    edges
}

/// Succeeds iff `AB = BA`; otherwise reports the first differing entry in
/// row-major order.
pub fn check_commuting(a: &IntMatrix, b: &IntMatrix) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            a: a.size(),
            b: b.size(),
        });
    }
    let ab = a.mul(b);
    let ba = b.mul(a);
    let n = a.size();
    for i in 0..n {
        for j in 0..n {
            if ab.get(i, j) != ba.get(i, j) {
                return Err(Error::NonCommuting {
                    row: i + 1,
                    col: j + 1,
                    lhs: ab.get(i, j),
                    rhs: ba.get(i, j),
                });
            }
        }
    }
    Ok(())
}

/// The two layer graphs over a common vertex set, before a specification is
/// chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredGraph {
    a: IntMatrix,
    b: IntMatrix,
    edges_a: Vec<Edge>,
    edges_b: Vec<Edge>,
}

impl LayeredGraph {
    pub fn new(a: IntMatrix, b: IntMatrix) -> Result<Self> {
        check_commuting(&a, &b)?;
        let edges_a = edges_from_matrix(&a, Layer::A);
        let edges_b = edges_from_matrix(&b, Layer::B);
        Ok(LayeredGraph { a, b, edges_a, edges_b })
    }

    pub fn matrix(&self, layer: Layer) -> &IntMatrix {
        match layer {
            Layer::A => &self.a,
            Layer::B => &self.b,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.a.size()
    }

    pub fn edges(&self, layer: Layer) -> &[Edge] {
        match layer {
            Layer::A => &self.edges_a,
            Layer::B => &self.edges_b,
        }
    }

    pub fn edge(&self, key: EdgeKey) -> Result<&Edge> {
        self.edges(key.layer)
            .get(key.index)
            .ok_or_else(|| Error::UnknownEdge(format!("{}#{}", key.layer, key.index)))
    }

    /// Position of an edge given by id, checking its layer.
    pub fn lookup(&self, id: &str, layer: Layer) -> Result<usize> {
        let edge = Edge::parse_id(id)?;
        if edge.layer != layer {
            return Err(Error::LayerMismatch {
                expected: layer.to_string(),
                found: id.to_string(),
            });
        }
        self.edges(layer)
            .iter()
            .position(|e| *e == edge)
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn source(&self, key: EdgeKey) -> usize {
        self.edges(key.layer)[key.index].source
    }

    pub fn target(&self, key: EdgeKey) -> usize {
        self.edges(key.layer)[key.index].target
    }
}

/// Composable pairs grouped by their outer vertices `(i, j)`.
///
/// `ab` holds `(alpha, b)` with `r(alpha) = s(b)`, `ba` holds `(a, beta)`
/// with `r(a) = s(beta)`; both as positions into the respective edge lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaBlocks {
    pub blocks: BTreeMap<(usize, usize), SigmaBlock>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SigmaBlock {
    pub ab: Vec<(usize, usize)>,
    pub ba: Vec<(usize, usize)>,
}

impl SigmaBlocks {
    pub fn get(&self, i: usize, j: usize) -> Option<&SigmaBlock> {
        self.blocks.get(&(i, j))
    }

    pub fn total(&self) -> usize {
        self.blocks.values().map(|b| b.ab.len()).sum()
    }
}

pub fn sigma_blocks(g: &LayeredGraph) -> SigmaBlocks {
    let mut blocks: BTreeMap<(usize, usize), SigmaBlock> = BTreeMap::new();
    for (ia, alpha) in g.edges_a.iter().enumerate() {
        for (ib, b) in g.edges_b.iter().enumerate() {
            if alpha.target == b.source {
                blocks.entry((alpha.source, b.target)).or_default().ab.push((ia, ib));
            }
        }
    }
    for (ib, a) in g.edges_b.iter().enumerate() {
        for (ia, beta) in g.edges_a.iter().enumerate() {
            if a.target == beta.source {
                blocks.entry((a.source, beta.target)).or_default().ba.push((ib, ia));
            }
        }
    }
    SigmaBlocks { blocks }
}

/// A specification: bijection from `(alpha, b)` pairs to `(a, beta)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kappa {
    forward: BTreeMap<(usize, usize), (usize, usize)>,
    inverse: BTreeMap<(usize, usize), (usize, usize)>,
}

impl Kappa {
    /// Builds from an explicit map and validates it against `g`.
    pub fn from_map(g: &LayeredGraph, map: BTreeMap<(usize, usize), (usize, usize)>) -> Result<Self> {
        let mut inverse = BTreeMap::new();
        for (&dom, &cod) in &map {
            if let Some(prev) = inverse.insert(cod, dom) {
                return Err(Error::NotABijection(format!(
                    "{} and {} both map to {}",
                    pair_label(g, Layer::A, prev),
                    pair_label(g, Layer::A, dom),
                    pair_label(g, Layer::B, cod)
                )));
            }
        }
        let kappa = Kappa { forward: map, inverse };
        kappa.validate(g)?;
        Ok(kappa)
    }

    pub fn apply(&self, alpha: usize, b: usize) -> Option<(usize, usize)> {
        self.forward.get(&(alpha, b)).copied()
    }

    pub fn apply_inverse(&self, a: usize, beta: usize) -> Option<(usize, usize)> {
        self.inverse.get(&(a, beta)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.forward.iter().map(|(k, v)| (*k, *v))
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Checks totality, bijectivity, composability and the outer
    /// source/range constraint.
    pub fn validate(&self, g: &LayeredGraph) -> Result<()> {
        let ea = g.edges(Layer::A);
        let eb = g.edges(Layer::B);
        for (&(alpha, b), &(a, beta)) in &self.forward {
            if alpha >= ea.len() || beta >= ea.len() {
                return Err(Error::UnknownEdge(format!("A-edge index {}", alpha.max(beta))));
            }
            if b >= eb.len() || a >= eb.len() {
                return Err(Error::UnknownEdge(format!("B-edge index {}", a.max(b))));
            }
            let label = || {
                format!(
                    "{} -> {}",
                    pair_label(g, Layer::A, (alpha, b)),
                    pair_label(g, Layer::B, (a, beta))
                )
            };
            if ea[alpha].target != eb[b].source || eb[a].target != ea[beta].source {
                return Err(Error::BlockViolation { pair: label() });
            }
            if ea[alpha].source != eb[a].source || eb[b].target != ea[beta].target {
                return Err(Error::BlockViolation { pair: label() });
            }
        }
        if self.inverse.len() != self.forward.len() {
            return Err(Error::NotABijection("map is not injective".into()));
        }
        let blocks = sigma_blocks(g);
        for block in blocks.blocks.values() {
            for p in &block.ab {
                if !self.forward.contains_key(p) {
                    return Err(Error::NotABijection(format!(
                        "{} has no image",
                        pair_label(g, Layer::A, *p)
                    )));
                }
            }
            for p in &block.ba {
                if !self.inverse.contains_key(p) {
                    return Err(Error::NotABijection(format!(
                        "{} has no preimage",
                        pair_label(g, Layer::B, *p)
                    )));
                }
            }
        }
        if self.forward.len() != blocks.total() {
            return Err(Error::NotABijection("domain contains non-composable pairs".into()));
        }
        Ok(())
    }

    /// Table of `(alpha, b) -> (a, beta)` as edge ids, in domain order.
    pub fn id_table(&self, g: &LayeredGraph) -> Vec<[[String; 2]; 2]> {
        self.iter()
            .map(|((alpha, b), (a, beta))| {
                [
                    [g.edges_a[alpha].id(), g.edges_b[b].id()],
                    [g.edges_b[a].id(), g.edges_a[beta].id()],
                ]
            })
            .collect()
    }
}

fn pair_label(g: &LayeredGraph, first: Layer, (x, y): (usize, usize)) -> String {
    let second = first.opposite();
    format!(
        "({}, {})",
        g.edges(first).get(x).map(Edge::id).unwrap_or_else(|| format!("?{x}")),
        g.edges(second).get(y).map(Edge::id).unwrap_or_else(|| format!("?{y}"))
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KappaStrategy {
    /// Pairs the k-th `(alpha, b)` with the k-th `(a, beta)` of each block.
    Lex,
    /// `(alpha, b) -> (b, alpha)`; only valid when every such swap is a
    /// block-preserving composable pair (single-vertex systems).
    Exchange,
    /// `[(alpha_id, b_id), (a_id, beta_id)]` entries.
    Explicit(Vec<[[String; 2]; 2]>),
}

pub fn build_kappa(g: &LayeredGraph, blocks: &SigmaBlocks, strategy: &KappaStrategy) -> Result<Kappa> {
    let mut map = BTreeMap::new();
    match strategy {
        KappaStrategy::Lex => {
            for block in blocks.blocks.values() {
                if block.ab.len() != block.ba.len() {
                    return Err(Error::NotABijection("block sizes differ".into()));
                }
                for (p, q) in block.ab.iter().zip(&block.ba) {
                    map.insert(*p, *q);
                }
            }
        }
        KappaStrategy::Exchange => {
            let ea = g.edges(Layer::A);
            let eb = g.edges(Layer::B);
            for block in blocks.blocks.values() {
                for &(alpha, b) in &block.ab {
                    let (ealpha, eb_) = (&ea[alpha], &eb[b]);
                    let ok = eb_.target == ealpha.source && ealpha.source == eb_.source && eb_.target == ealpha.target;
                    if !ok {
                        return Err(Error::ExchangeUnavailable(format!(
                            "({}, {}) cannot be exchanged; exchange needs a single-vertex system",
                            ealpha.id(),
                            eb_.id()
                        )));
                    }
                    map.insert((alpha, b), (b, alpha));
                }
            }
        }
        KappaStrategy::Explicit(entries) => {
            for [[alpha, b], [a, beta]] in entries {
                let dom = (g.lookup(alpha, Layer::A)?, g.lookup(b, Layer::B)?);
                let cod = (g.lookup(a, Layer::B)?, g.lookup(beta, Layer::A)?);
                if map.insert(dom, cod).is_some() {
                    return Err(Error::NotABijection(format!("({alpha}, {b}) listed twice")));
                }
            }
        }
    }
    Kappa::from_map(g, map)
}

/// Number of specifications: the product of `((AB)(i,j))!`.
pub fn count_specifications(a: &IntMatrix, b: &IntMatrix) -> Result<BigUint> {
    check_commuting(a, b)?;
    let ab = a.mul(b);
    let n = a.size();
    let mut total = BigUint::one();
    for i in 0..n {
        for j in 0..n {
            for k in 2..=ab.get(i, j) {
                total *= k;
            }
        }
    }
    Ok(total)
}

/// Iterates specifications in a fixed order: blocks in `(i, j)` order, each
/// block's bijection running through permutations of the `(a, beta)` list in
/// lexicographic order, the last block varying fastest. The first item is
/// the `Lex` specification.
pub struct KappaIter<'g> {
    graph: &'g LayeredGraph,
    blocks: Vec<SigmaBlock>,
    perms: Vec<Vec<usize>>,
    remaining: usize,
    done: bool,
}

impl Iterator for KappaIter<'_> {
    type Item = Kappa;

    fn next(&mut self) -> Option<Kappa> {
        if self.done || self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mut map = BTreeMap::new();
        for (block, perm) in self.blocks.iter().zip(&self.perms) {
            for (k, p) in block.ab.iter().enumerate() {
                map.insert(*p, block.ba[perm[k]]);
            }
        }
        let kappa = Kappa::from_map(self.graph, map).expect("enumerated specification is valid");
        // odometer step
        let mut carry = true;
        for perm in self.perms.iter_mut().rev() {
            if next_permutation(perm) {
                carry = false;
                break;
            }
            perm.sort_unstable();
        }
        if carry {
            self.done = true;
        }
        Some(kappa)
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn enumerate_kappas(g: &LayeredGraph, limit: usize) -> KappaIter<'_> {
    let blocks: Vec<SigmaBlock> = sigma_blocks(g).blocks.into_values().collect();
    let perms = blocks.iter().map(|b| (0..b.ba.len()).collect()).collect();
    KappaIter {
        graph: g,
        blocks,
        perms,
        remaining: limit,
        done: false,
    }
}

/// A square `omega = (top, right, left, bottom)` with `kappa(top, right) =
/// (left, bottom)`. `top`/`bottom` index A-edges, `right`/`left` B-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub top: usize,
    pub right: usize,
    pub left: usize,
    pub bottom: usize,
    /// `r(right) = r(bottom)`.
    pub vertex: usize,
}

/// `(alpha, a)` top-left corner of at least one tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaPair {
    pub alpha: usize,
    pub a: usize,
}

/// Commuting matrices together with a validated specification and the tile
/// alphabet it determines.
#[derive(Debug, Clone)]
pub struct TextileSystem {
    graph: LayeredGraph,
    kappa: Kappa,
    tiles: Vec<Tile>,
    by_top_right: HashMap<(usize, usize), usize>,
    by_left_bottom: HashMap<(usize, usize), usize>,
}

impl TextileSystem {
    pub fn new(graph: LayeredGraph, kappa: Kappa) -> Result<Self> {
        kappa.validate(&graph)?;
        let mut tiles: Vec<Tile> = kappa
            .iter()
            .map(|((top, right), (left, bottom))| Tile {
                top,
                right,
                left,
                bottom,
                vertex: graph.edges_b[right].target,
            })
            .collect();
        tiles.sort_by_key(|t| (t.top, t.right));
        let by_top_right = tiles.iter().enumerate().map(|(i, t)| ((t.top, t.right), i)).collect();
        let by_left_bottom = tiles.iter().enumerate().map(|(i, t)| ((t.left, t.bottom), i)).collect();
        Ok(TextileSystem {
            graph,
            kappa,
            tiles,
            by_top_right,
            by_left_bottom,
        })
    }

    /// Convenience: validate matrices and build the specification in one go.
    pub fn from_matrices(a: IntMatrix, b: IntMatrix, strategy: &KappaStrategy) -> Result<Self> {
        let graph = LayeredGraph::new(a, b)?;
        let blocks = sigma_blocks(&graph);
        let kappa = build_kappa(&graph, &blocks, strategy)?;
        Self::new(graph, kappa)
    }

    pub fn graph(&self) -> &LayeredGraph {
        &self.graph
    }

    pub fn kappa(&self) -> &Kappa {
        &self.kappa
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edges(&self, layer: Layer) -> &[Edge] {
        self.graph.edges(layer)
    }

    pub fn edge_count(&self, layer: Layer) -> usize {
        self.graph.edges(layer).len()
    }

    pub fn check_edge(&self, key: EdgeKey) -> Result<()> {
        self.graph.edge(key).map(|_| ())
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Tile with the given top A-edge and right B-edge.
    pub fn tile_at_top_right(&self, top: usize, right: usize) -> Option<usize> {
        self.by_top_right.get(&(top, right)).copied()
    }

    /// Tile with the given left B-edge and bottom A-edge.
    pub fn tile_at_left_bottom(&self, left: usize, bottom: usize) -> Option<usize> {
        self.by_left_bottom.get(&(left, bottom)).copied()
    }

    /// `kappa_a(beta)`: the top of the tile with left `a` and bottom `beta`.
    pub fn kappa_b_edge(&self, a: usize, beta: usize) -> Option<usize> {
        self.tile_at_left_bottom(a, beta).map(|i| self.tiles[i].top)
    }

    /// `kappa_alpha(b)`: the left of the tile with top `alpha` and right `b`.
    pub fn kappa_a_edge(&self, alpha: usize, b: usize) -> Option<usize> {
        self.tile_at_top_right(alpha, b).map(|i| self.tiles[i].left)
    }

    pub fn tile_label(&self, t: &Tile) -> String {
        let ea = self.edges(Layer::A);
        let eb = self.edges(Layer::B);
        format!(
            "({}, {}, {}, {})",
            ea[t.top].id(),
            eb[t.right].id(),
            eb[t.left].id(),
            ea[t.bottom].id()
        )
    }
}

/// Distinct `(top, left)` projections of the tiles, ordered by edge position.
pub fn omega_set(ts: &TextileSystem) -> Vec<OmegaPair> {
    ts.tiles()
        .iter()
        .map(|t| OmegaPair {
            alpha: t.top,
            a: t.left,
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// The indicator functions `kappa_A(a, alpha, b)` and `kappa_B(alpha, a, beta)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaIndicators {
    kappa_a: BTreeSet<(usize, usize, usize)>,
    kappa_b: BTreeSet<(usize, usize, usize)>,
}

impl KappaIndicators {
    /// 1 iff some `beta` has `kappa(alpha, b) = (a, beta)`.
    pub fn kappa_a(&self, a: usize, alpha: usize, b: usize) -> u8 {
        self.kappa_a.contains(&(a, alpha, b)) as u8
    }

    /// 1 iff some `b` has `kappa(alpha, b) = (a, beta)`.
    pub fn kappa_b(&self, alpha: usize, a: usize, beta: usize) -> u8 {
        self.kappa_b.contains(&(alpha, a, beta)) as u8
    }
}

pub fn kappa_indicators(ts: &TextileSystem) -> KappaIndicators {
    let mut kappa_a = BTreeSet::new();
    let mut kappa_b = BTreeSet::new();
    for t in ts.tiles() {
        kappa_a.insert((t.left, t.top, t.right));
        kappa_b.insert((t.top, t.left, t.bottom));
    }
    KappaIndicators { kappa_a, kappa_b }
}
