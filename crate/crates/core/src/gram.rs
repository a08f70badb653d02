//! Extending a cyclotomic graph by a vertex whose Gram vector is a ring-linear
//! combination of the existing ones.
//!
//! With `A = M + 2I` and `B = 2I − M` both positive semidefinite, there are
//! Gram vectors `w_i`, `w'_i` with `⟨w_i, w_j⟩ = A_ij` and `⟨w'_i, w'_j⟩ = B_ij`.
//! For `x = Σ c_j w_j` every inner product with `x` is a form in `A`, so the
//! vectors never need to exist explicitly. The inner product is linear in its
//! first argument: `⟨x, w_i⟩ = Σ_j c_j A_ji` and `⟨x, x⟩ = Σ_jk c_j c̄_k A_jk`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::grow::{extensions, GrowConfig};
use crate::lgraph::{find_induced_form, ChargePattern, FormPattern, LGraph};
use crate::ring::{label_set, RingElement, RingId};

/// `x = Σ c_i w_i` together with the primed-side `x' = Σ c'_i w'_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinationSpec {
    pub coefficients: BTreeMap<usize, RingElement>,
    pub primed: BTreeMap<usize, RingElement>,
}

impl CombinationSpec {
    pub fn new(coefficients: impl IntoIterator<Item = (usize, RingElement)>, primed: impl IntoIterator<Item = (usize, RingElement)>) -> Self {
        let clean = |it: BTreeMap<usize, RingElement>| it.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        CombinationSpec { coefficients: clean(coefficients.into_iter().collect()), primed: clean(primed.into_iter().collect()) }
    }

    /// `x = 2w_v − Σ_u A_vu w_u` over the neighbours `u` of `v`, with the
    /// primed side `x' = −2w'_v − Σ_u A_vu w'_u`.
    pub fn vertex_rule(g: &LGraph, v: usize) -> Self {
        let ring = g.ring();
        let nb: Vec<(usize, RingElement)> = g.neighbors(v).into_iter().map(|u| (u, -g.entry(v, u))).collect();
        CombinationSpec::new(
            std::iter::once((v, ring.int(2))).chain(nb.iter().copied()),
            std::iter::once((v, ring.int(-2))).chain(nb.iter().copied()),
        )
    }

    /// `x = w_w − Σ_u A_wu w_u` over the neighbours `u ≠ v` of `w`, with
    /// `x' = w'_w + Σ_u A_wu w'_u`.
    pub fn edge_rule(g: &LGraph, v: usize, w: usize) -> Self {
        let ring = g.ring();
        let nb: Vec<(usize, RingElement)> = g.neighbors(w).into_iter().filter(|&u| u != v).map(|u| (u, g.entry(w, u))).collect();
        CombinationSpec::new(
            std::iter::once((w, ring.one())).chain(nb.iter().map(|&(u, s)| (u, -s))),
            std::iter::once((w, ring.one())).chain(nb.iter().copied()),
        )
    }
}

fn gram_entry(g: &LGraph, primed: bool, i: usize, j: usize) -> RingElement {
    let ring = g.ring();
    match (i == j, primed) {
        (true, false) => ring.int(2 + g.charge(i) as i64),
        (true, true) => ring.int(2 - g.charge(i) as i64),
        (false, false) => g.entry(i, j),
        (false, true) => -g.entry(i, j),
    }
}

fn inner_products(g: &LGraph, c: &BTreeMap<usize, RingElement>, primed: bool) -> (Vec<RingElement>, i64) {
    let ring = g.ring();
    let row = (0..g.n())
        .map(|i| c.iter().fold(ring.zero(), |acc, (&j, &cj)| acc + cj * gram_entry(g, primed, j, i)))
        .collect();
    let mut norm = ring.zero();
    for (&j, &cj) in c {
        for (&k, &ck) in c {
            norm = norm + cj * ck.conj() * gram_entry(g, primed, j, k);
        }
    }
    let norm = norm.as_int().expect("c†Ac is real for Hermitian A");
    (row, norm)
}

/// `(⟨x, w_i⟩ for each vertex i, ⟨x, x⟩)`, exact.
pub fn combination_inner_products(g: &LGraph, c: &CombinationSpec) -> (Vec<RingElement>, i64) {
    inner_products(g, &c.coefficients, false)
}

/// `(⟨x', w'_i⟩, ⟨x', x'⟩)` on the primed side.
pub fn primed_inner_products(g: &LGraph, c: &CombinationSpec) -> (Vec<RingElement>, i64) {
    inner_products(g, &c.primed, true)
}

/// Why a combination does not give a cyclotomic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramRejection {
    EmptyCombination,
    SelfNormOutOfRange(i64),
    NotALabel { vertex: usize, value: RingElement },
    Orthogonal,
    PrimedSelfNorm { expected: i64, found: i64 },
    PrimedMismatch { vertex: usize },
}

impl fmt::Display for GramRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramRejection::EmptyCombination => write!(f, "all coefficients are zero"),
            GramRejection::SelfNormOutOfRange(s) => write!(f, "<x,x> = {s} is not in {{1,2,3}}"),
            GramRejection::NotALabel { vertex, value } => write!(f, "<x,w_{vertex}> = {value} is not a label"),
            GramRejection::Orthogonal => write!(f, "x is orthogonal to every w_i"),
            GramRejection::PrimedSelfNorm { expected, found } => write!(f, "<x',x'> = {found}, expected {expected}"),
            GramRejection::PrimedMismatch { vertex } => write!(f, "<x',w'_{vertex}> != -<x,w_{vertex}>"),
        }
    }
}

/// The graph of `W ∪ {x}` if all the extension conditions hold. The new vertex
/// has charge `⟨x,x⟩ − 2` and the label on `(i, new)` is `⟨w_i, x⟩`.
pub fn try_gram_extension(g: &LGraph, c: &CombinationSpec) -> Result<LGraph, GramRejection> {
    if c.coefficients.is_empty() {
        return Err(GramRejection::EmptyCombination);
    }
    let (row, s) = combination_inner_products(g, c);
    if !(1..=3).contains(&s) {
        return Err(GramRejection::SelfNormOutOfRange(s));
    }
    let ls = label_set(g.ring());
    if let Some((vertex, &value)) = row.iter().enumerate().find(|(_, x)| !x.is_zero() && !ls.contains(x)) {
        return Err(GramRejection::NotALabel { vertex, value });
    }
    if row.iter().all(|x| x.is_zero()) {
        return Err(GramRejection::Orthogonal);
    }
    let (prow, ps) = primed_inner_products(g, c);
    if ps != 4 - s {
        return Err(GramRejection::PrimedSelfNorm { expected: 4 - s, found: ps });
    }
    if let Some(vertex) = (0..g.n()).find(|&i| prow[i] != -row[i]) {
        return Err(GramRejection::PrimedMismatch { vertex });
    }
    let column: Vec<RingElement> = row.iter().map(|x| x.conj()).collect();
    Ok(g.with_vertex((s - 2) as i8, &column).expect("labels checked above"))
}

/// The four local configurations with a known extending combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GramTemplate {
    /// `(v, a, b)`: `v` of weighted degree 3 with a weight-2 neighbour `a` and
    /// a weight-1 neighbour `b`.
    Gram1,
    /// `(a, b, c, v)`: `v` with three weight-1 neighbours, `a` charged `+1`.
    Gram2,
    /// `(a, b, c, v)`: as `Gram2` with every vertex uncharged.
    Gram3,
    /// `(v, w, a, b)`: `v` of weighted degree 2 whose one neighbour `w` has the
    /// further weight-1 neighbours `a`, `b`.
    Gram4,
}

impl GramTemplate {
    pub const ALL: [GramTemplate; 4] = [GramTemplate::Gram1, GramTemplate::Gram2, GramTemplate::Gram3, GramTemplate::Gram4];

    pub fn name(self) -> &'static str {
        match self {
            GramTemplate::Gram1 => "gram1",
            GramTemplate::Gram2 => "gram2",
            GramTemplate::Gram3 => "gram3",
            GramTemplate::Gram4 => "gram4",
        }
    }

    /// The induced form, in the vertex order listed on each variant.
    pub fn form(self) -> FormPattern {
        match self {
            GramTemplate::Gram1 => FormPattern::new(3).weight(0, 1, 2).weight(0, 2, 1),
            GramTemplate::Gram2 => {
                FormPattern::new(4).charge(0, ChargePattern::Exactly(1)).weight(3, 0, 1).weight(3, 1, 1).weight(3, 2, 1)
            }
            GramTemplate::Gram3 => FormPattern::new(4).weight(3, 0, 1).weight(3, 1, 1).weight(3, 2, 1),
            GramTemplate::Gram4 => FormPattern::new(4).weight(0, 1, 2).weight(1, 2, 1).weight(1, 3, 1),
        }
    }

    /// Index of the centre vertex (`v`, or `w` for `Gram4`) within the form.
    fn centre(self) -> usize {
        match self {
            GramTemplate::Gram1 => 0,
            GramTemplate::Gram2 | GramTemplate::Gram3 => 3,
            GramTemplate::Gram4 => 1,
        }
    }

    /// Embeddings of the template in `g` where the centre has no neighbours
    /// outside the form and, for `Gram4`, `v` has weighted degree 2.
    pub fn embeddings(self, g: &LGraph) -> Vec<Vec<usize>> {
        let p = self.form();
        find_induced_form(g, &p)
            .into_iter()
            .filter(|emb| {
                let c = emb[self.centre()];
                let inside = g.neighbors(c).iter().all(|u| emb.contains(u));
                match self {
                    GramTemplate::Gram4 => inside && g.weighted_degree(emb[0]) == 2,
                    _ => inside,
                }
            })
            .collect()
    }

    pub fn combination(self, g: &LGraph, emb: &[usize]) -> CombinationSpec {
        match self {
            GramTemplate::Gram4 => CombinationSpec::edge_rule(g, emb[0], emb[1]),
            _ => CombinationSpec::vertex_rule(g, emb[self.centre()]),
        }
    }
}

/// How a graph was shown to be nonmaximal.
#[derive(Clone, Debug, Serialize)]
pub enum GramWitness {
    Template { template: GramTemplate, embedding: Vec<usize>, spec: CombinationSpec, extension: LGraph },
    VertexRule { vertex: usize, spec: CombinationSpec, extension: LGraph },
    EdgeRule { v: usize, w: usize, spec: CombinationSpec, extension: LGraph },
    Extension { extension: LGraph },
}

impl GramWitness {
    pub fn extension(&self) -> &LGraph {
        match self {
            GramWitness::Template { extension, .. }
            | GramWitness::VertexRule { extension, .. }
            | GramWitness::EdgeRule { extension, .. }
            | GramWitness::Extension { extension } => extension,
        }
    }
}

/// A strictly larger cyclotomic graph containing `g`, found by the four
/// templates, then the same combinations at any vertex below weighted degree
/// 4, then by plain one-vertex extension.
pub fn gram_witness(g: &LGraph) -> Option<GramWitness> {
    for t in GramTemplate::ALL {
        for emb in t.embeddings(g) {
            let spec = t.combination(g, &emb);
            if let Ok(extension) = try_gram_extension(g, &spec) {
                return Some(GramWitness::Template { template: t, embedding: emb, spec, extension });
            }
        }
    }
    let deg = g.weighted_degrees();
    for v in (0..g.n()).filter(|&v| deg[v] < 4) {
        let spec = CombinationSpec::vertex_rule(g, v);
        if let Ok(extension) = try_gram_extension(g, &spec) {
            return Some(GramWitness::VertexRule { vertex: v, spec, extension });
        }
        for w in g.neighbors(v) {
            let spec = CombinationSpec::edge_rule(g, v, w);
            if let Ok(extension) = try_gram_extension(g, &spec) {
                return Some(GramWitness::EdgeRule { v, w, spec, extension });
            }
        }
    }
    let mut cfg = GrowConfig::full(g.ring());
    cfg.reduce_mod_equivalence = false;
    extensions(g, &cfg).into_iter().next().map(|extension| GramWitness::Extension { extension })
}

/// Whether a strict cyclotomic supergraph of `g` was found.
pub fn prove_nonmaximal_by_gram(g: &LGraph) -> bool {
    gram_witness(g).is_some()
}

/// The smallest instance of each template over `ring` (`−2` or `−7`).
pub fn template_example(t: GramTemplate, ring: RingId) -> LGraph {
    let w = ring.omega();
    let one = ring.one();
    match t {
        GramTemplate::Gram1 => LGraph::new(ring, vec![0; 3], [(0, 1, w), (0, 2, one)]),
        GramTemplate::Gram2 => LGraph::new(ring, vec![1, 0, 0, 0], [(0, 3, one), (1, 3, one), (2, 3, one)]),
        GramTemplate::Gram3 => LGraph::new(ring, vec![0; 4], [(0, 3, one), (1, 3, one), (2, 3, one)]),
        GramTemplate::Gram4 => LGraph::new(ring, vec![0; 4], [(0, 1, w), (1, 2, one), (1, 3, one)]),
    }
    .expect("valid configuration")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{catalogue_with_bound, chain, t2k4};
    use crate::spectra::is_cyclotomic;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ints(r: RingId, xs: &[i64]) -> Vec<RingElement> {
        xs.iter().map(|&x| r.int(x)).collect()
    }

    #[test]
    fn template_inner_products() {
        for r in [RingId::NEG2, RingId::NEG7] {
            let expect: [(GramTemplate, Vec<RingElement>, i64); 4] = [
                (GramTemplate::Gram1, ints(r, &[1, 0, 0]), 2),
                (GramTemplate::Gram2, ints(r, &[-1, 0, 0, 1]), 3),
                (GramTemplate::Gram3, ints(r, &[0, 0, 0, 1]), 2),
                (GramTemplate::Gram4, vec![r.omega().conj(), r.zero(), r.int(-1), r.int(-1)], 2),
            ];
            for (t, row, s) in expect {
                let g = template_example(t, r);
                let id: Vec<usize> = (0..g.n()).collect();
                assert!(t.embeddings(&g).contains(&id), "{}", t.name());
                let spec = t.combination(&g, &id);
                assert_eq!(combination_inner_products(&g, &spec), (row.clone(), s), "{}", t.name());
                let (prow, ps) = primed_inner_products(&g, &spec);
                assert_eq!(ps, 4 - s);
                assert_eq!(prow, row.iter().map(|&x| -x).collect::<Vec<_>>());
                let h = try_gram_extension(&g, &spec).unwrap();
                assert!(is_cyclotomic(&h));
                assert_eq!(h.induced(&(0..g.n()).collect::<Vec<_>>()), g);
            }
        }
    }

    #[test]
    fn gram1_extension_shape() {
        let r = RingId::NEG7;
        let g = template_example(GramTemplate::Gram1, r);
        let spec = CombinationSpec::new([(0, r.int(2)), (1, -r.omega()), (2, r.int(-1))], [(0, r.int(-2)), (1, -r.omega()), (2, r.int(-1))]);
        let h = try_gram_extension(&g, &spec).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.charge(3), 0);
        assert_eq!(h.neighbors(3), vec![0]);
        assert_eq!(h.weight(0, 3), 1);
    }

    #[test]
    fn indicator_combination() {
        let r = RingId::NEG2;
        let g = crate::families::c2k2plus(2, r).unwrap();
        for i in 0..g.n() {
            let spec = CombinationSpec::new([(i, r.one())], [(i, r.one())]);
            let (row, s) = combination_inner_products(&g, &spec);
            assert_eq!(s, 2 + g.charge(i) as i64);
            for j in 0..g.n() {
                let a = if i == j { r.int(s) } else { g.entry(i, j) };
                assert_eq!(row[j], a);
            }
        }
    }

    #[test]
    fn rejections() {
        let r = RingId::NEG2;
        let g = template_example(GramTemplate::Gram3, r);
        // x = w_0 + w_1 has <x,x> = 4.
        let spec = CombinationSpec::new([(0, r.one()), (1, r.one())], [(0, r.one()), (1, r.one())]);
        assert_eq!(try_gram_extension(&g, &spec), Err(GramRejection::SelfNormOutOfRange(4)));
        assert_eq!(try_gram_extension(&g, &CombinationSpec::new([], [])), Err(GramRejection::EmptyCombination));
        let mut bad = GramTemplate::Gram3.combination(&g, &[0, 1, 2, 3]);
        bad.primed.insert(3, r.int(2));
        assert!(matches!(try_gram_extension(&g, &bad), Err(GramRejection::PrimedMismatch { .. }) | Err(GramRejection::PrimedSelfNorm { .. })));
    }

    #[test]
    fn nonmaximality_examples() {
        assert!(prove_nonmaximal_by_gram(&template_example(GramTemplate::Gram1, RingId::NEG2)));
        assert!(!prove_nonmaximal_by_gram(&t2k4(3, RingId::NEG2, false).unwrap()));
        assert!(prove_nonmaximal_by_gram(&chain(1, RingId::NEG2).unwrap()));
    }

    #[test]
    fn accepted_extensions_are_cyclotomic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut accepted = 0;
        for r in [RingId::NEG2, RingId::NEG7] {
            let labels: Vec<RingElement> = std::iter::once(r.zero()).chain(label_set(r).nonzero()).collect();
            for e in catalogue_with_bound(r, 4) {
                for _ in 0..200 {
                    let k = rng.gen_range(2..e.graph.n().min(6) + 1);
                    let mut vs: Vec<usize> = (0..e.graph.n()).collect();
                    for i in 0..k {
                        let j = rng.gen_range(i..vs.len());
                        vs.swap(i, j);
                    }
                    let g = e.graph.induced(&vs[..k]);
                    let coef = |rng: &mut ChaCha8Rng| -> Vec<(usize, RingElement)> {
                        (0..g.n())
                            .map(|i| {
                                let x = if rng.gen_bool(0.5) { r.int(rng.gen_range(-2..=2)) } else { labels[rng.gen_range(0..labels.len())] };
                                (i, x)
                            })
                            .collect()
                    };
                    let spec = CombinationSpec::new(coef(&mut rng), coef(&mut rng));
                    // Mirror the primed side half the time so acceptances occur.
                    let spec = if rng.gen_bool(0.5) {
                        let v = rng.gen_range(0..g.n());
                        CombinationSpec::vertex_rule(&g, v)
                    } else {
                        spec
                    };
                    if let Ok(h) = try_gram_extension(&g, &spec) {
                        accepted += 1;
                        assert!(is_cyclotomic(&h), "{}", h.to_json());
                    }
                }
            }
        }
        assert!(accepted > 50, "{accepted}");
    }
}
