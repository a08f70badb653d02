//! Charged L-graphs: Hermitian matrices with diagonal in {0, ±1} and
//! off-diagonal entries drawn from the label set L of the ring.

mod form;
mod io;

pub use form::{find_induced_form, matches_form, ChargePattern, EdgePattern, FormPattern};
pub use io::GraphJson;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::{label_set, RingElement, RingId};

/// A charged L-graph. Edges are kept upper-triangular: the entry stored at
/// `(i, j)` with `i < j` is `M[i][j]`, and `M[j][i]` is its conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LGraph {
    ring: RingId,
    charges: Vec<i8>,
    edges: BTreeMap<(usize, usize), RingElement>,
}

impl LGraph {
    /// Builds a graph from charges and `(i, j, label)` triples. A triple with
    /// `i > j` is read as `M[i][j]` and stored conjugated at `(j, i)`.
    pub fn new(
        ring: RingId,
        charges: Vec<i8>,
        edges: impl IntoIterator<Item = (usize, usize, RingElement)>,
    ) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if let Some(c) = charges.iter().find(|c| !(-1..=1).contains(*c)) {
            return Err(Error::InvalidGraph(format!("charge {c} outside {{-1,0,1}}")));
        }
        let mut g = LGraph { ring, charges, edges: BTreeMap::new() };
        let labels = label_set(ring);
        for (i, j, x) in edges {
            if x.ring != ring {
                return Err(Error::RingMismatch { left: ring.d(), right: x.ring.d() });
            }
            if i == j || i >= g.n() || j >= g.n() {
                return Err(Error::InvalidGraph(format!("bad edge ({i}, {j}) for n={}", g.n())));
            }
            if x.is_zero() {
                continue;
            }
            if !labels.contains(&x) {
                return Err(Error::InvalidGraph(format!("label {x} (norm {}) not in L", x.norm())));
            }
            let (key, val) = if i < j { ((i, j), x) } else { ((j, i), x.conj()) };
            if g.edges.insert(key, val).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i}, {j})")));
            }
        }
        Ok(g)
    }

    /// `n` uncharged isolated vertices.
    pub fn empty(ring: RingId, n: usize) -> Self {
        assert!(n >= 1);
        LGraph { ring, charges: vec![0; n], edges: BTreeMap::new() }
    }

    /// One vertex with the given charge.
    pub fn vertex(ring: RingId, charge: i8) -> Self {
        LGraph::new(ring, vec![charge], []).expect("valid charge")
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn n(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[i8] {
        &self.charges
    }

    pub fn charge(&self, v: usize) -> i8 {
        self.charges[v]
    }

    /// Upper-triangular edges `(i, j, M[i][j])` with `i < j`, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, RingElement)> + '_ {
        self.edges.iter().map(|(&(i, j), &x)| (i, j, x))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Matrix entry `M[i][j]`; the diagonal holds the charge.
    pub fn entry(&self, i: usize, j: usize) -> RingElement {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => self.ring.int(self.charges[i] as i64),
            Less => self.edges.get(&(i, j)).copied().unwrap_or(self.ring.zero()),
            Greater => self.edges.get(&(j, i)).map(|x| x.conj()).unwrap_or(self.ring.zero()),
        }
    }

    /// Norm of the edge label between `i` and `j` (0 if absent).
    pub fn weight(&self, i: usize, j: usize) -> u8 {
        if i == j {
            return 0;
        }
        self.entry(i, j).norm() as u8
    }

    /// Sum of incident edge weights, plus 1 if `v` is charged.
    pub fn weighted_degree(&self, v: usize) -> u32 {
        let edges: i64 = self
            .edges
            .iter()
            .filter(|(&(i, j), _)| i == v || j == v)
            .map(|(_, x)| x.norm())
            .sum();
        edges as u32 + (self.charges[v] != 0) as u32
    }

    pub fn weighted_degrees(&self) -> Vec<u32> {
        let mut deg: Vec<u32> = self.charges.iter().map(|&c| (c != 0) as u32).collect();
        for (&(i, j), x) in &self.edges {
            deg[i] += x.norm() as u32;
            deg[j] += x.norm() as u32;
        }
        deg
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n()).filter(|&u| u != v && !self.entry(v, u).is_zero()).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n()];
        for &(i, j) in self.edges.keys() {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Largest edge weight present (0 if edgeless).
    pub fn max_weight(&self) -> u8 {
        self.edges.values().map(|x| x.norm() as u8).max().unwrap_or(0)
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_vertices().len() == 1
    }

    pub fn components(&self) -> Vec<LGraph> {
        self.component_vertices().iter().map(|vs| self.induced(vs)).collect()
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> LGraph {
        assert!(!vertices.is_empty());
        let charges = vertices.iter().map(|&v| self.charges[v]).collect();
        let mut edges = BTreeMap::new();
        for (p, &u) in vertices.iter().enumerate() {
            for (q, &v) in vertices.iter().enumerate().skip(p + 1) {
                let x = self.entry(u, v);
                if !x.is_zero() {
                    edges.insert((p, q), x);
                }
            }
        }
        LGraph { ring: self.ring, charges, edges }
    }

    /// Removes vertex `v` and compacts indices.
    pub fn delete_vertex(&self, v: usize) -> Result<LGraph> {
        if self.n() < 2 {
            return Err(Error::InvalidGraph("cannot delete the only vertex".into()));
        }
        if v >= self.n() {
            return Err(Error::InvalidGraph(format!("vertex {v} out of range")));
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Appends a vertex with `charge` whose column is `column[i] = M[i][new]`.
    pub fn with_vertex(&self, charge: i8, column: &[RingElement]) -> Result<LGraph> {
        if column.len() != self.n() {
            return Err(Error::InvalidGraph("column length must equal n".into()));
        }
        let n = self.n();
        let mut charges = self.charges.clone();
        charges.push(charge);
        let edges = self
            .edges()
            .chain(column.iter().enumerate().map(|(i, &x)| (i, n, x)));
        LGraph::new(self.ring, charges, edges)
    }

    /// Disjoint union, with `other`'s vertices shifted after `self`'s.
    pub fn disjoint_union(&self, other: &LGraph) -> Result<LGraph> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { left: self.ring.d(), right: other.ring.d() });
        }
        let off = self.n();
        let mut charges = self.charges.clone();
        charges.extend_from_slice(&other.charges);
        let edges = self.edges().chain(other.edges().map(|(i, j, x)| (i + off, j + off, x)));
        LGraph::new(self.ring, charges, edges)
    }

    /// Dense matrix `M` (row-major), materialized on demand.
    pub fn matrix(&self) -> Vec<Vec<RingElement>> {
        (0..self.n()).map(|i| (0..self.n()).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Replaces the charge of `v`.
    pub fn with_charge(&self, v: usize, charge: i8) -> Result<LGraph> {
        let mut charges = self.charges.clone();
        charges[v] = charge;
        LGraph::new(self.ring, charges, self.edges())
    }

    /// Sets `M[i][j]` (and its conjugate); a zero label removes the edge.
    pub fn with_entry(&self, i: usize, j: usize, x: RingElement) -> Result<LGraph> {
        let edges = self
            .edges()
            .filter(|&(a, b, _)| (a, b) != (i.min(j), i.max(j)))
            .chain(std::iter::once((i, j, x)));
        LGraph::new(self.ring, self.charges.clone(), edges)
    }

    pub(crate) fn from_parts_unchecked(
        ring: RingId,
        charges: Vec<i8>,
        edges: BTreeMap<(usize, usize), RingElement>,
    ) -> Self {
        LGraph { ring, charges, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c2k2plus, sporadic, t2k4};

    fn s2(ring: RingId) -> LGraph {
        LGraph::new(ring, vec![0, 0], [(0, 1, ring.int(2))]).unwrap()
    }

    #[test]
    fn weighted_degree_examples() {
        let g = s2(RingId::NEG2);
        assert_eq!(g.weighted_degree(0), 4);
        assert_eq!(g.weighted_degree(1), 4);
        assert_eq!(LGraph::empty(RingId::NEG2, 1).weighted_degree(0), 0);
        let s2p = sporadic("S_2'", RingId::NEG2).unwrap();
        assert_eq!(s2p.charges(), &[1, -1]);
        assert_eq!(s2p.weighted_degree(0), 4);
    }

    #[test]
    fn weighted_degree_is_diagonal_of_square() {
        for r in [RingId::NEG2, RingId::NEG7] {
            for g in [t2k4(3, r, false).unwrap(), c2k2plus(2, r).unwrap(), sporadic("S_4", r).unwrap()] {
                let m = g.matrix();
                for v in 0..g.n() {
                    let sq = (0..g.n()).fold(r.zero(), |acc, k| acc + m[v][k] * m[k][v]);
                    assert_eq!(sq, r.int(g.weighted_degree(v) as i64));
                    assert_eq!(g.weighted_degrees()[v], g.weighted_degree(v));
                }
            }
        }
    }

    #[test]
    fn hermitian_by_construction() {
        let g = sporadic("S_8*", RingId::NEG7).unwrap();
        let m = g.matrix();
        for i in 0..g.n() {
            for j in 0..g.n() {
                assert_eq!(m[i][j], m[j][i].conj());
            }
        }
    }

    #[test]
    fn connectivity() {
        let r = RingId::NEG2;
        assert!(sporadic("S_4", r).unwrap().is_connected());
        let two = s2(r).disjoint_union(&s2(r)).unwrap();
        assert!(!two.is_connected());
        assert_eq!(two.components(), vec![s2(r), s2(r)]);
        assert!(LGraph::empty(r, 1).is_connected());
    }

    #[test]
    fn delete_vertex_examples() {
        let r = RingId::NEG2;
        assert_eq!(s2(r).delete_vertex(0).unwrap(), LGraph::empty(r, 1));
        assert_eq!(s2(r).delete_vertex(1).unwrap(), LGraph::empty(r, 1));
        assert!(LGraph::empty(r, 1).delete_vertex(0).is_err());

        let c = c2k2plus(3, r).unwrap();
        let cyl = c.delete_vertex(6).unwrap();
        assert_eq!(cyl.n(), 6);
        assert_eq!(cyl.max_weight(), 1);
        assert_eq!(cyl.charges(), &[1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn delete_then_readd_round_trips() {
        let g = t2k4(3, RingId::NEG7, true).unwrap();
        let last = g.n() - 1;
        let h = g.delete_vertex(last).unwrap();
        let col: Vec<_> = (0..last).map(|i| g.entry(i, last)).collect();
        assert_eq!(h.with_vertex(g.charge(last), &col).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        let r = RingId::NEG2;
        assert!(LGraph::new(r, vec![2], []).is_err());
        assert!(LGraph::new(r, vec![0, 0], [(0, 0, r.one())]).is_err());
        assert!(LGraph::new(r, vec![0, 0], [(0, 1, r.int(3))]).is_err());
        assert!(LGraph::new(r, vec![0, 0], [(0, 1, r.one()), (1, 0, r.one())]).is_err());
        assert!(LGraph::new(r, vec![0, 0], [(0, 1, RingId::NEG7.one())]).is_err());
        assert!(LGraph::new(r, vec![], []).is_err());
    }

    #[test]
    fn lower_triangle_input_is_conjugated() {
        let r = RingId::NEG7;
        let g = LGraph::new(r, vec![0, 0], [(1, 0, r.omega())]).unwrap();
        assert_eq!(g.entry(0, 1), r.omega().conj());
        assert_eq!(g.entry(1, 0), r.omega());
    }
}
