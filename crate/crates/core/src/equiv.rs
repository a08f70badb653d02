//! The equivalence group: switching, permutation, negation and conjugation,
//! together with a byte-comparable canonical form.
//!
//! For a connected graph the key is the lexicographic minimum, over the four
//! variants `±M`, `±M̄` and all connected vertex orderings, of the column-wise
//! serialization. Each column holds a vertex invariant followed by the labels
//! to the previously placed vertices. Switching is folded in by fixing each new
//! vertex's sign so that its first nonzero label is the smaller of `±x`; because
//! every column in a connected ordering has a nonzero label, this choice is
//! forced and the search only branches over orderings.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lgraph::LGraph;
use crate::ring::RingElement;

/// Largest vertex count accepted by [`canonical_key`].
pub const MAX_CANONICAL_N: usize = 20;

/// Canonical form bytes; equal keys iff equivalent graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s).map(CanonicalKey).map_err(|e| Error::BadInput(e.to_string()))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

impl serde::Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Negates every label incident to `v`.
pub fn switch(g: &LGraph, v: usize) -> LGraph {
    assert!(v < g.n());
    let edges = g.edges().map(|(i, j, x)| if i == v || j == v { (i, j, -x) } else { (i, j, x) });
    LGraph::new(g.ring(), g.charges().to_vec(), edges).expect("switching preserves validity")
}

/// `−M`: negates charges and labels.
pub fn negate(g: &LGraph) -> LGraph {
    let charges = g.charges().iter().map(|c| -c).collect();
    LGraph::new(g.ring(), charges, g.edges().map(|(i, j, x)| (i, j, -x))).expect("valid")
}

/// `M̄`: conjugates every label.
pub fn conjugate(g: &LGraph) -> LGraph {
    LGraph::new(g.ring(), g.charges().to_vec(), g.edges().map(|(i, j, x)| (i, j, x.conj())))
        .expect("valid")
}

/// Relabels vertex `v` as `sigma[v]`.
pub fn permute(g: &LGraph, sigma: &[usize]) -> LGraph {
    assert_eq!(sigma.len(), g.n());
    let mut charges = vec![0; g.n()];
    for (v, &c) in g.charges().iter().enumerate() {
        charges[sigma[v]] = c;
    }
    let edges = g.edges().map(|(i, j, x)| (sigma[i], sigma[j], x));
    LGraph::new(g.ring(), charges, edges).expect("sigma must be a permutation")
}

pub fn canonical_key(g: &LGraph) -> Result<CanonicalKey> {
    canonical_form(g).map(|(k, _)| k)
}

/// The canonical key and the representative graph it serializes.
pub fn canonical_form(g: &LGraph) -> Result<(CanonicalKey, LGraph)> {
    canonical_form_colored(g, &vec![0; g.n()])
}

/// Canonical form under the subgroup that preserves vertex `colors`.
pub fn canonical_form_colored(g: &LGraph, colors: &[u8]) -> Result<(CanonicalKey, LGraph)> {
    if g.n() > MAX_CANONICAL_N {
        return Err(Error::SizeBound { n: g.n(), limit: MAX_CANONICAL_N });
    }
    assert_eq!(colors.len(), g.n());
    let mut parts: Vec<(Vec<u8>, LGraph)> = g
        .component_vertices()
        .into_iter()
        .map(|vs| {
            let h = g.induced(&vs);
            let cols: Vec<u8> = vs.iter().map(|&v| colors[v]).collect();
            canonical_connected(&h, &cols)
        })
        .collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));

    let mut key = vec![(g.ring().d() + 128) as u8, g.n() as u8, parts.len() as u8];
    let mut rep: Option<LGraph> = None;
    for (bytes, h) in &parts {
        key.extend_from_slice(&(bytes.len() as u16).to_be_bytes());
        key.extend_from_slice(bytes);
        rep = Some(match rep {
            None => h.clone(),
            Some(r) => r.disjoint_union(h)?,
        });
    }
    Ok((CanonicalKey(key), rep.expect("at least one component")))
}

pub fn are_equivalent(g1: &LGraph, g2: &LGraph) -> bool {
    if g1.ring() != g2.ring() || g1.n() != g2.n() {
        return false;
    }
    match (canonical_key(g1), canonical_key(g2)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Label bytes ordered like the ring order, with 0 first.
fn label_code(x: RingElement) -> [u8; 3] {
    if x.is_zero() {
        [0, 0, 0]
    } else {
        [x.norm() as u8, (x.a + 128) as u8, (x.b + 128) as u8]
    }
}

const INV_LEN: usize = 7;

struct Search<'a> {
    n: usize,
    m: &'a [Vec<RingElement>],
    inv: Vec<[u8; INV_LEN]>,
    adj: Vec<Vec<usize>>,
    best: Option<Vec<u8>>,
    best_order: Vec<usize>,
    best_signs: Vec<i8>,
}

impl Search<'_> {
    /// Column of `v` placed after `order`, with its forced sign.
    fn column(&self, v: usize, order: &[usize], signs: &[i8]) -> (Vec<u8>, i8) {
        let mut sign = 0i8;
        let mut col = Vec::with_capacity(INV_LEN + 3 * order.len());
        col.extend_from_slice(&self.inv[v]);
        for (q, &u) in order.iter().enumerate() {
            let mut x = self.m[u][v];
            if signs[q] < 0 {
                x = -x;
            }
            if sign == 0 && !x.is_zero() {
                sign = if x <= -x { 1 } else { -1 };
            }
            if sign < 0 {
                x = -x;
            }
            col.extend_from_slice(&label_code(x));
        }
        (col, if sign == 0 { 1 } else { sign })
    }

    fn run(&mut self, order: &mut Vec<usize>, signs: &mut Vec<i8>, placed: &mut [bool], prefix: &mut Vec<u8>, improving: bool) {
        if order.len() == self.n {
            if self.best.as_ref().is_none_or(|b| prefix.as_slice() < b.as_slice()) {
                self.best = Some(prefix.clone());
                self.best_order = order.clone();
                self.best_signs = signs.clone();
            }
            return;
        }
        let candidates: Vec<usize> = if order.is_empty() {
            (0..self.n).collect()
        } else {
            let mut c: Vec<usize> = order.iter().flat_map(|&u| self.adj[u].iter().copied()).filter(|&v| !placed[v]).collect();
            c.sort_unstable();
            c.dedup();
            c
        };
        let cols: Vec<(usize, Vec<u8>, i8)> = candidates
            .into_iter()
            .map(|v| {
                let (c, s) = self.column(v, order, signs);
                (v, c, s)
            })
            .collect();
        let min = cols.iter().map(|(_, c, _)| c).min().expect("connected graph has a candidate").clone();
        let start = prefix.len();
        prefix.extend_from_slice(&min);
        let mut improving = improving;
        if !improving {
            if let Some(b) = &self.best {
                match prefix.as_slice().cmp(&b[..prefix.len()]) {
                    Ordering::Greater => {
                        prefix.truncate(start);
                        return;
                    }
                    Ordering::Less => improving = true,
                    Ordering::Equal => {}
                }
            } else {
                improving = true;
            }
        }
        for (v, c, s) in cols {
            if c != min {
                continue;
            }
            order.push(v);
            signs.push(s);
            placed[v] = true;
            self.run(order, signs, placed, prefix, improving);
            // Once a strictly better prefix has been completed, later siblings
            // must beat it rather than the stale bound.
            improving = false;
            if let Some(b) = &self.best {
                if prefix.as_slice() > &b[..prefix.len()] {
                    placed[v] = false;
                    signs.pop();
                    order.pop();
                    break;
                }
            }
            placed[v] = false;
            signs.pop();
            order.pop();
        }
        prefix.truncate(start);
    }
}

fn variant(g: &LGraph, neg: bool, conj: bool) -> LGraph {
    let h = if neg { negate(g) } else { g.clone() };
    if conj {
        conjugate(&h)
    } else {
        h
    }
}

/// Canonical bytes and representative of a connected graph.
fn canonical_connected(g: &LGraph, colors: &[u8]) -> (Vec<u8>, LGraph) {
    let n = g.n();
    let adj = g.adjacency();
    let mut best: Option<(Vec<u8>, LGraph)> = None;
    for (neg, conj) in [(false, false), (true, false), (false, true), (true, true)] {
        let h = variant(g, neg, conj);
        let m = h.matrix();
        let deg = h.weighted_degrees();
        let inv: Vec<[u8; INV_LEN]> = (0..n)
            .map(|v| {
                let mut w = [0u8; 4];
                for u in &adj[v] {
                    w[h.weight(v, *u) as usize - 1] += 1;
                }
                [colors[v], (h.charge(v) + 1) as u8, deg[v] as u8, w[0], w[1], w[2], w[3]]
            })
            .collect();
        let mut s = Search { n, m: &m, inv, adj: adj.clone(), best: None, best_order: vec![], best_signs: vec![] };
        s.run(&mut Vec::new(), &mut Vec::new(), &mut vec![false; n], &mut Vec::new(), false);
        let bytes = s.best.take().expect("search visits at least one ordering");
        if best.as_ref().is_none_or(|(b, _)| bytes < *b) {
            let rep = representative(&h, &s.best_order, &s.best_signs);
            best = Some((bytes, rep));
        }
    }
    best.expect("four variants")
}

fn representative(h: &LGraph, order: &[usize], signs: &[i8]) -> LGraph {
    let charges = order.iter().map(|&v| h.charge(v)).collect();
    let mut edges = BTreeMap::new();
    for p in 0..order.len() {
        for q in 0..p {
            let mut x = h.entry(order[q], order[p]);
            if signs[p] * signs[q] < 0 {
                x = -x;
            }
            if !x.is_zero() {
                edges.insert((q, p), x);
            }
        }
    }
    LGraph::from_parts_unchecked(h.ring(), charges, edges)
}
