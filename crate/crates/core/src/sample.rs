//! Seeded random graphs for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::grow::{extensions, GrowConfig};
use crate::lgraph::LGraph;
use crate::ring::{label_set, RingElement, RingId};

/// Any graph: charges uniform in {−1, 0, 1}, each pair joined with
/// probability `p_edge` by a uniform nonzero label.
pub fn random_lgraph<R: Rng>(ring: RingId, n: usize, p_edge: f64, rng: &mut R) -> LGraph {
    let labels: Vec<RingElement> = label_set(ring).nonzero().collect();
    let charges = (0..n).map(|_| rng.gen_range(-1..=1)).collect();
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p_edge) {
                edges.push((i, j, *labels.choose(rng).expect("label sets are nonempty")));
            }
        }
    }
    LGraph::new(ring, charges, edges).expect("labels come from the label set")
}

/// A connected cyclotomic graph grown one uniformly chosen extension at a
/// time. Has `n` vertices unless every attempt ran into a maximal graph first,
/// in which case the largest graph reached is returned.
pub fn random_cyclotomic<R: Rng>(ring: RingId, n: usize, rng: &mut R) -> LGraph {
    let mut cfg = GrowConfig::full(ring);
    cfg.reduce_mod_equivalence = false;
    let mut best = LGraph::vertex(ring, 0);
    for _ in 0..20 {
        let mut g = LGraph::vertex(ring, rng.gen_range(-1..=1));
        while g.n() < n {
            let exts = extensions(&g, &cfg);
            match exts.choose(rng) {
                Some(h) => g = h.clone(),
                None => break,
            }
        }
        if g.n() == n {
            return g;
        }
        if g.n() > best.n() {
            best = g;
        }
    }
    best
}

/// `g` with one charge or one entry replaced by a random value.
pub fn perturb<R: Rng>(g: &LGraph, rng: &mut R) -> LGraph {
    let n = g.n();
    if n < 2 || rng.gen_bool(0.25) {
        let v = rng.gen_range(0..n);
        return g.with_charge(v, rng.gen_range(-1..=1)).expect("charge in range");
    }
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    let options: Vec<RingElement> = std::iter::once(g.ring().zero()).chain(label_set(g.ring()).nonzero()).collect();
    g.with_entry(i, j, *options.choose(rng).expect("nonempty")).expect("label from the label set")
}

/// A mix for oracle comparisons: a third arbitrary graphs, a third cyclotomic,
/// a third cyclotomic graphs with one entry perturbed.
pub fn random_mixed<R: Rng>(ring: RingId, max_n: usize, rng: &mut R) -> LGraph {
    let n = rng.gen_range(1..=max_n);
    match rng.gen_range(0..3) {
        0 => random_lgraph(ring, n, rng.gen_range(0.2..0.8), rng),
        1 => random_cyclotomic(ring, n, rng),
        _ => perturb(&random_cyclotomic(ring, n, rng), rng),
    }
}
