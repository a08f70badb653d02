use std::collections::BTreeMap;

use super::LGraph;

/// What a form requires of a vertex's charge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChargePattern {
    /// Uncharged.
    Neutral,
    /// Charge +1 or −1.
    Charged,
    /// Anything.
    Any,
    /// Exactly this charge.
    Exactly(i8),
}

impl ChargePattern {
    pub fn matches(self, c: i8) -> bool {
        match self {
            ChargePattern::Neutral => c == 0,
            ChargePattern::Charged => c != 0,
            ChargePattern::Any => true,
            ChargePattern::Exactly(e) => c == e,
        }
    }

    /// Charges admitted by the pattern.
    pub fn options(self) -> Vec<i8> {
        [-1, 0, 1].into_iter().filter(|&c| self.matches(c)).collect()
    }
}

/// What a form requires of a vertex pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgePattern {
    Absent,
    /// A label of norm exactly `k` (1..=4).
    Weight(u8),
    /// Possibly absent, any label.
    Unspecified,
    /// Weight in the given list; 0 stands for absent.
    WeightIn(Vec<u8>),
}

impl EdgePattern {
    pub fn matches(&self, weight: u8) -> bool {
        match self {
            EdgePattern::Absent => weight == 0,
            EdgePattern::Weight(k) => weight == *k,
            EdgePattern::Unspecified => true,
            EdgePattern::WeightIn(ws) => ws.contains(&weight),
        }
    }

    /// Weights (0 = absent) admitted by the pattern.
    pub fn weights(&self) -> Vec<u8> {
        (0..=4).filter(|&w| self.matches(w)).collect()
    }
}

/// A graph specified up to charge classes and edge weights. Pairs not set
/// explicitly are `Absent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormPattern {
    charges: Vec<ChargePattern>,
    pairs: BTreeMap<(usize, usize), EdgePattern>,
}

impl FormPattern {
    /// `n` neutral vertices, all pairs absent.
    pub fn new(n: usize) -> Self {
        FormPattern { charges: vec![ChargePattern::Neutral; n], pairs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.charges.len()
    }

    pub fn charge(mut self, v: usize, p: ChargePattern) -> Self {
        self.charges[v] = p;
        self
    }

    pub fn edge(mut self, i: usize, j: usize, p: EdgePattern) -> Self {
        assert!(i != j && i < self.n() && j < self.n());
        let key = (i.min(j), i.max(j));
        if p == EdgePattern::Absent {
            self.pairs.remove(&key);
        } else {
            self.pairs.insert(key, p);
        }
        self
    }

    pub fn weight(self, i: usize, j: usize, k: u8) -> Self {
        self.edge(i, j, EdgePattern::Weight(k))
    }

    pub fn charge_pattern(&self, v: usize) -> ChargePattern {
        self.charges[v]
    }

    pub fn pair(&self, i: usize, j: usize) -> EdgePattern {
        self.pairs.get(&(i.min(j), i.max(j))).cloned().unwrap_or(EdgePattern::Absent)
    }
}

/// Whether `g` restricted to `embedding` (pattern vertex `p` ↦ `embedding[p]`)
/// has the form `p`. The embedding must be injective.
pub fn matches_form(g: &LGraph, p: &FormPattern, embedding: &[usize]) -> bool {
    if embedding.len() != p.n() || embedding.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for (a, &u) in embedding.iter().enumerate() {
        if embedding[..a].contains(&u) || !p.charge_pattern(a).matches(g.charge(u)) {
            return false;
        }
        for (b, &v) in embedding.iter().enumerate().take(a) {
            if !p.pair(b, a).matches(g.weight(v, u)) {
                return false;
            }
        }
    }
    true
}

/// All injective embeddings under which `g` induces the form `p`.
pub fn find_induced_form(g: &LGraph, p: &FormPattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p.n() > g.n() {
        return out;
    }
    let mut emb = Vec::with_capacity(p.n());
    let mut used = vec![false; g.n()];
    extend_embedding(g, p, &mut emb, &mut used, &mut out);
    out
}

fn extend_embedding(
    g: &LGraph,
    p: &FormPattern,
    emb: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let a = emb.len();
    if a == p.n() {
        out.push(emb.clone());
        return;
    }
    for u in 0..g.n() {
        if used[u] || !p.charge_pattern(a).matches(g.charge(u)) {
            continue;
        }
        if (0..a).all(|b| p.pair(b, a).matches(g.weight(emb[b], u))) {
            used[u] = true;
            emb.push(u);
            extend_embedding(g, p, emb, used, out);
            emb.pop();
            used[u] = false;
        }
    }
}
