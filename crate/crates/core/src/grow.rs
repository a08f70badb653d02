//! Seed-and-grow enumeration: one-vertex cyclotomic extensions, breadth-first
//! closure up to equivalence, maximality, excluded forms and saturating
//! extensions.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;

use crate::equiv::{canonical_form, canonical_form_colored, canonical_key, CanonicalKey, MAX_CANONICAL_N};
use crate::error::{Error, Result};
use crate::lgraph::{FormPattern, LGraph};
use crate::ring::{label_set, RingElement, RingId};
use crate::spectra::{is_cyclotomic, is_cyclotomic_matrix, QMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowConfig {
    pub ring: RingId,
    /// Label norms a new edge may carry, from 1..=4.
    pub allowed_edge_norms: Vec<u8>,
    pub allowed_charges: Vec<i8>,
    pub max_rounds: usize,
    pub max_vertices: usize,
    pub reduce_mod_equivalence: bool,
    /// Cap on the number of classes held at once; exceeding it aborts the run.
    pub max_classes: usize,
}

impl GrowConfig {
    /// Every label and charge, default bounds.
    pub fn full(ring: RingId) -> Self {
        GrowConfig {
            ring,
            allowed_edge_norms: vec![1, 2, 3, 4],
            allowed_charges: vec![-1, 0, 1],
            max_rounds: 16,
            max_vertices: 16,
            reduce_mod_equivalence: true,
            max_classes: 2_000_000,
        }
    }

    pub fn with_norms(mut self, norms: &[u8]) -> Self {
        self.allowed_edge_norms = norms.to_vec();
        self
    }

    pub fn with_charges(mut self, charges: &[i8]) -> Self {
        self.allowed_charges = charges.to_vec();
        self
    }

    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self
    }

    pub fn with_max_rounds(mut self, r: usize) -> Self {
        self.max_rounds = r;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.allowed_edge_norms.is_empty() || self.allowed_edge_norms.iter().any(|&k| !(1..=4).contains(&k)) {
            return Err(Error::BadInput(format!("edge norms must be a nonempty subset of 1..=4, got {:?}", self.allowed_edge_norms)));
        }
        if self.allowed_charges.is_empty() || self.allowed_charges.iter().any(|c| !(-1..=1).contains(c)) {
            return Err(Error::BadInput(format!("charges must be a nonempty subset of -1..=1, got {:?}", self.allowed_charges)));
        }
        if self.max_vertices > MAX_CANONICAL_N {
            return Err(Error::SizeBound { n: self.max_vertices, limit: MAX_CANONICAL_N });
        }
        Ok(())
    }

    fn labels(&self) -> Vec<RingElement> {
        label_set(self.ring).with_norms(&self.allowed_edge_norms)
    }
}

/// Enumerates new columns for `g` under the degree budgets and calls `f` on
/// every one that keeps the matrix cyclotomic.
struct ColumnSearch<'a> {
    g: &'a LGraph,
    base: QMatrix,
    labels: Vec<RingElement>,
    deg: Vec<u32>,
    comp: Vec<usize>,
    ncomp: usize,
    normalize_sign: bool,
    /// Vertices `0..touch` must include a neighbour of the new vertex.
    touch: usize,
}

impl<'a> ColumnSearch<'a> {
    fn new(g: &'a LGraph, cfg: &GrowConfig, normalize_sign: bool, touch: usize) -> Self {
        let mut comp = vec![0; g.n()];
        let comps = g.component_vertices();
        for (c, vs) in comps.iter().enumerate() {
            for &v in vs {
                comp[v] = c;
            }
        }
        ColumnSearch {
            g,
            base: QMatrix::from_graph(g),
            labels: cfg.labels(),
            deg: g.weighted_degrees(),
            comp,
            ncomp: comps.len(),
            normalize_sign,
            touch,
        }
    }

    fn run<F>(&self, charges: &[i8], f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(i8, &[RingElement]) -> ControlFlow<()>,
    {
        let mut col = vec![self.g.ring().zero(); self.g.n()];
        for &c in charges {
            let budget = 4 - c.unsigned_abs() as u32;
            self.rec(0, budget, c, &mut col, false, f)?;
        }
        ControlFlow::Continue(())
    }

    fn rec<F>(&self, v: usize, budget: u32, charge: i8, col: &mut Vec<RingElement>, any: bool, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(i8, &[RingElement]) -> ControlFlow<()>,
    {
        if v == col.len() {
            return self.finish(charge, col, f);
        }
        col[v] = self.g.ring().zero();
        self.rec(v + 1, budget, charge, col, any, f)?;
        let room = budget.min(4u32.saturating_sub(self.deg[v]));
        for &x in &self.labels {
            let w = x.norm() as u32;
            if w > room {
                continue;
            }
            if self.normalize_sign && !any && -x < x {
                continue;
            }
            col[v] = x;
            self.rec(v + 1, budget - w, charge, col, true, f)?;
        }
        col[v] = self.g.ring().zero();
        ControlFlow::Continue(())
    }

    fn finish<F>(&self, charge: i8, col: &[RingElement], f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(i8, &[RingElement]) -> ControlFlow<()>,
    {
        if !col[..self.touch].iter().any(|x| !x.is_zero()) {
            return ControlFlow::Continue(());
        }
        if self.ncomp > 1 {
            let touched: BTreeSet<usize> = col.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(v, _)| self.comp[v]).collect();
            if touched.len() < self.ncomp {
                return ControlFlow::Continue(());
            }
        }
        if is_cyclotomic_matrix(&self.base.with_vertex(charge, col)) {
            f(charge, col)
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// All connected cyclotomic one-vertex extensions of `g`. The input is the
/// induced subgraph on the first `n` vertices of each output. With
/// `reduce_mod_equivalence` the list holds one graph per class.
pub fn extensions(g: &LGraph, cfg: &GrowConfig) -> Vec<LGraph> {
    let search = ColumnSearch::new(g, cfg, cfg.reduce_mod_equivalence, g.n());
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let _ = search.run(&cfg.allowed_charges, &mut |c, col| {
        let h = g.with_vertex(c, col).expect("labels come from the label set");
        if !cfg.reduce_mod_equivalence || seen.insert(canonical_key(&h).expect("size checked by caller")) {
            out.push(h);
        }
        ControlFlow::Continue(())
    });
    out
}

/// Whether `g` has any connected cyclotomic one-vertex extension under `cfg`.
pub fn has_extension(g: &LGraph, cfg: &GrowConfig) -> bool {
    let search = ColumnSearch::new(g, cfg, true, g.n());
    search.run(&cfg.allowed_charges, &mut |_, _| ControlFlow::Break(())).is_break()
}

/// No strictly larger connected cyclotomic graph contains `g`. Checking
/// one-vertex extensions suffices: any larger connected supergraph can be
/// reached one vertex at a time while staying connected, and every
/// intermediate graph is cyclotomic by interlacing.
pub fn is_maximal(g: &LGraph) -> bool {
    g.is_connected() && is_cyclotomic(g) && !has_extension(g, &GrowConfig::full(g.ring()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    pub n: usize,
    /// No extension under the run's alphabet.
    pub maximal: bool,
    pub graph: LGraph,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowReport {
    /// Rounds run, counting a final round that found nothing new.
    pub rounds_executed: usize,
    /// New classes found in each round.
    pub new_classes_per_round: Vec<usize>,
    /// The closure is complete: no class has an unexplored extension.
    pub terminated: bool,
    /// Some class at `max_vertices` still had an extension.
    pub vertex_capped: bool,
    /// `max_rounds` or `max_classes` stopped the run early.
    pub budget_exhausted: bool,
    pub classes: Vec<ClassRecord>,
    pub maximal_representatives: Vec<LGraph>,
}

impl GrowReport {
    /// Rounds that found at least one new class.
    pub fn productive_rounds(&self) -> usize {
        self.new_classes_per_round.iter().filter(|&&c| c > 0).count()
    }

    pub fn maximal_keys(&self) -> BTreeSet<CanonicalKey> {
        self.classes.iter().filter(|c| c.maximal).map(|c| c.key.clone()).collect()
    }

    pub fn keys(&self) -> Vec<&CanonicalKey> {
        self.classes.iter().map(|c| &c.key).collect()
    }
}

/// Breadth-first closure of `seeds` under [`extensions`], one representative
/// per class. The result does not depend on seed order or thread count.
pub fn grow_closure(seeds: &[LGraph], cfg: &GrowConfig) -> Result<GrowReport> {
    cfg.validate()?;
    let mut visited: BTreeMap<CanonicalKey, ClassRecord> = BTreeMap::new();
    let mut frontier: BTreeMap<CanonicalKey, LGraph> = BTreeMap::new();
    for s in seeds {
        if s.ring() != cfg.ring {
            return Err(Error::RingMismatch { left: s.ring().d(), right: cfg.ring.d() });
        }
        if s.n() > cfg.max_vertices || !s.is_connected() || !is_cyclotomic(s) {
            return Err(Error::BadInput(format!("seed {} must be connected, cyclotomic and within max_vertices", s.to_json())));
        }
        let (k, rep) = canonical_form(s)?;
        frontier.entry(k).or_insert(rep);
    }

    let mut report = GrowReport {
        rounds_executed: 0,
        new_classes_per_round: Vec::new(),
        terminated: false,
        vertex_capped: false,
        budget_exhausted: false,
        classes: Vec::new(),
        maximal_representatives: Vec::new(),
    };
    for (k, g) in &frontier {
        visited.insert(k.clone(), ClassRecord { key: k.clone(), n: g.n(), maximal: false, graph: g.clone() });
    }

    while !frontier.is_empty() {
        if report.rounds_executed == cfg.max_rounds {
            report.budget_exhausted = true;
            break;
        }
        report.rounds_executed += 1;
        let items: Vec<(&CanonicalKey, &LGraph)> = frontier.iter().collect();
        let results: Vec<(bool, Vec<(CanonicalKey, LGraph)>)> = items
            .par_iter()
            .map(|(_, g)| {
                if g.n() >= cfg.max_vertices {
                    return (has_extension(g, cfg), Vec::new());
                }
                let exts = extensions(g, &GrowConfig { reduce_mod_equivalence: true, ..cfg.clone() });
                let keyed = exts.iter().map(|h| canonical_form(h).expect("within bound")).collect();
                (!exts.is_empty(), keyed)
            })
            .collect();
        let mut next = BTreeMap::new();
        for ((k, g), (extendable, exts)) in items.iter().zip(results) {
            if g.n() >= cfg.max_vertices && extendable {
                report.vertex_capped = true;
            }
            visited.get_mut(*k).expect("frontier is visited").maximal = !extendable;
            for (hk, h) in exts {
                if !visited.contains_key(&hk) {
                    next.entry(hk).or_insert(h);
                }
            }
        }
        report.new_classes_per_round.push(next.len());
        for (k, g) in &next {
            visited.insert(k.clone(), ClassRecord { key: k.clone(), n: g.n(), maximal: false, graph: g.clone() });
        }
        if visited.len() > cfg.max_classes {
            report.budget_exhausted = true;
            frontier = next;
            break;
        }
        frontier = next;
    }
    report.terminated = frontier.is_empty() && !report.vertex_capped && !report.budget_exhausted;
    report.classes = visited.into_values().collect();
    report.maximal_representatives = report.classes.iter().filter(|c| c.maximal).map(|c| c.graph.clone()).collect();
    Ok(report)
}

/// Calls `f` on every graph consistent with `p` over `ring`.
fn for_each_instance<F: FnMut(&LGraph) -> ControlFlow<()>>(p: &FormPattern, ring: RingId, f: &mut F) -> ControlFlow<()> {
    let n = p.n();
    let ls = label_set(ring);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let options: Vec<Vec<RingElement>> = pairs
        .iter()
        .map(|&(i, j)| {
            p.pair(i, j)
                .weights()
                .into_iter()
                .flat_map(|w| if w == 0 { vec![ring.zero()] } else { ls.of_norm(w as usize).to_vec() })
                .collect()
        })
        .collect();
    let charge_opts: Vec<Vec<i8>> = (0..n).map(|v| p.charge_pattern(v).options()).collect();
    let mut charges = vec![0i8; n];
    let mut labels = vec![ring.zero(); pairs.len()];

    #[allow(clippy::too_many_arguments)]
    fn charges_rec<F: FnMut(&LGraph) -> ControlFlow<()>>(
        v: usize,
        ring: RingId,
        charge_opts: &[Vec<i8>],
        charges: &mut Vec<i8>,
        pairs: &[(usize, usize)],
        options: &[Vec<RingElement>],
        labels: &mut Vec<RingElement>,
        f: &mut F,
    ) -> ControlFlow<()> {
        if v == charges.len() {
            return labels_rec(0, ring, charges, pairs, options, labels, f);
        }
        for &c in &charge_opts[v] {
            charges[v] = c;
            charges_rec(v + 1, ring, charge_opts, charges, pairs, options, labels, f)?;
        }
        ControlFlow::Continue(())
    }

    fn labels_rec<F: FnMut(&LGraph) -> ControlFlow<()>>(
        e: usize,
        ring: RingId,
        charges: &[i8],
        pairs: &[(usize, usize)],
        options: &[Vec<RingElement>],
        labels: &mut Vec<RingElement>,
        f: &mut F,
    ) -> ControlFlow<()> {
        if e == pairs.len() {
            let edges = pairs.iter().zip(labels.iter()).filter(|(_, x)| !x.is_zero()).map(|(&(i, j), &x)| (i, j, x));
            let g = LGraph::new(ring, charges.to_vec(), edges).expect("instances are valid graphs");
            return f(&g);
        }
        for &x in &options[e] {
            labels[e] = x;
            labels_rec(e + 1, ring, charges, pairs, options, labels, f)?;
        }
        ControlFlow::Continue(())
    }

    charges_rec(0, ring, &charge_opts, &mut charges, &pairs, &options, &mut labels, f)
}

/// Number of label assignments consistent with `p` over `ring`, and how many
/// of them are cyclotomic.
pub fn count_form_instances(p: &FormPattern, ring: RingId) -> (usize, usize) {
    let (mut total, mut cyc) = (0, 0);
    let _ = for_each_instance(p, ring, &mut |g| {
        total += 1;
        if is_cyclotomic(g) {
            cyc += 1;
        }
        ControlFlow::Continue(())
    });
    (total, cyc)
}

/// True iff no graph of form `p` over `ring` is cyclotomic. Exhaustive.
pub fn verify_no_cyclotomic_of_form(p: &FormPattern, ring: RingId) -> bool {
    for_each_instance(p, ring, &mut |g| if is_cyclotomic(g) { ControlFlow::Break(()) } else { ControlFlow::Continue(()) })
        .is_continue()
}

/// Minimal saturating extensions of `g`: sets of added vertices, each joined
/// to at least one original vertex, after which every original vertex has
/// weighted degree 4. Returns one graph per class, with the original vertices
/// first; the classes respect which vertices are original.
pub fn saturating_extensions(g: &LGraph, cfg: &GrowConfig) -> Result<Vec<LGraph>> {
    cfg.validate()?;
    if !is_cyclotomic(g) {
        return Err(Error::BadInput("saturating extensions need a cyclotomic graph".into()));
    }
    let n0 = g.n();
    let saturated = |h: &LGraph| (0..n0).all(|v| h.weighted_degree(v) == 4);
    let colored_key = |h: &LGraph| {
        let colors: Vec<u8> = (0..h.n()).map(|v| u8::from(v >= n0)).collect();
        canonical_form_colored(h, &colors).map(|(k, _)| k)
    };
    if saturated(g) {
        return Ok(vec![g.clone()]);
    }
    let deficit: u32 = (0..n0).map(|v| 4 - g.weighted_degree(v)).sum();
    let mut done: BTreeMap<CanonicalKey, LGraph> = BTreeMap::new();
    let mut level: BTreeMap<CanonicalKey, LGraph> = BTreeMap::new();
    level.insert(colored_key(g)?, g.clone());
    for _ in 0..deficit {
        if level.is_empty() {
            break;
        }
        let states: Vec<&LGraph> = level.values().collect();
        let produced: Vec<Result<Vec<(CanonicalKey, LGraph)>>> = states
            .par_iter()
            .map(|h| {
                if h.n() >= cfg.max_vertices {
                    return Err(Error::Budget(format!("saturating extension exceeds {} vertices", cfg.max_vertices)));
                }
                let search = ColumnSearch::new(h, cfg, true, n0);
                let mut out = Vec::new();
                let _ = search.run(&cfg.allowed_charges, &mut |c, col| {
                    out.push(h.with_vertex(c, col).expect("valid labels"));
                    ControlFlow::Continue(())
                });
                out.into_iter().map(|x| colored_key(&x).map(|k| (k, x))).collect()
            })
            .collect();
        let mut next = BTreeMap::new();
        for batch in produced {
            for (k, h) in batch? {
                if saturated(&h) {
                    done.entry(k).or_insert(h);
                } else {
                    next.entry(k).or_insert(h);
                }
            }
        }
        if next.len() > cfg.max_classes {
            return Err(Error::Budget(format!("more than {} partial saturating extensions", cfg.max_classes)));
        }
        level = next;
    }
    Ok(done.into_values().collect())
}

/// One graph per class among `graphs`, keeping the first of each, sorted by key.
pub fn dedup_classes(graphs: impl IntoIterator<Item = LGraph>) -> Vec<LGraph> {
    let mut out: BTreeMap<CanonicalKey, LGraph> = BTreeMap::new();
    for g in graphs {
        out.entry(canonical_key(&g).expect("seed sizes are small")).or_insert(g);
    }
    out.into_values().collect()
}

/// Connected cyclotomic 2-vertex graphs whose edge has weight at least 2.
pub fn two_vertex_seeds(ring: RingId) -> Vec<LGraph> {
    let labels: Vec<RingElement> = label_set(ring).nonzero().filter(|x| x.norm() >= 2).collect();
    let mut out = Vec::new();
    for c1 in -1..=1 {
        for c2 in -1..=1 {
            for &x in &labels {
                let g = LGraph::new(ring, vec![c1, c2], [(0, 1, x)]).expect("valid");
                if is_cyclotomic(&g) {
                    out.push(g);
                }
            }
        }
    }
    dedup_classes(out)
}

/// Cyclotomic 2-vertex graphs with a weight-3 edge and any charges.
pub fn weight_three_seeds(ring: RingId) -> Vec<LGraph> {
    two_vertex_seeds(ring).into_iter().filter(|g| g.max_weight() == 3).collect()
}

/// A charged vertex joined by a weight-2 edge to a vertex of any charge.
pub fn charged_weight_two_seeds(ring: RingId) -> Vec<LGraph> {
    two_vertex_seeds(ring).into_iter().filter(|g| g.max_weight() == 2 && g.charges().iter().any(|&c| c != 0)).collect()
}

/// Uncharged `a–b`, `c–d` of weight 1 and `b–d` of weight 2, with `a–c`
/// absent or of weight 1 or 2 (vertex order `a, b, c, d`).
pub fn isolated_weight_two_seeds(ring: RingId) -> Vec<LGraph> {
    let ls = label_set(ring);
    let mut out = Vec::new();
    let closing: Vec<RingElement> = std::iter::once(ring.zero()).chain(ls.with_norms(&[1, 2])).collect();
    for &x in ls.of_norm(1) {
        for &y in ls.of_norm(1) {
            for &z in ls.of_norm(2) {
                for &t in &closing {
                    let g = LGraph::new(ring, vec![0; 4], [(0, 1, x), (2, 3, y), (1, 3, z), (0, 2, t)]).expect("valid");
                    if is_cyclotomic(&g) {
                        out.push(g);
                    }
                }
            }
        }
    }
    dedup_classes(out)
}

pub const SEED_SET_NAMES: [&str; 4] = ["two-vertex", "weight3", "charged-w2", "isolated-w2"];

/// Seed sets by name; see [`SEED_SET_NAMES`].
pub fn named_seeds(name: &str, ring: RingId) -> Option<Vec<LGraph>> {
    Some(match name {
        "two-vertex" => two_vertex_seeds(ring),
        "weight3" => weight_three_seeds(ring),
        "charged-w2" => charged_weight_two_seeds(ring),
        "isolated-w2" => isolated_weight_two_seeds(ring),
        _ => return None,
    })
}
