use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::LGraph;
use crate::error::{Error, Result};
use crate::ring::RingId;

/// Wire format: `{"d": int, "n": int, "charges": [int], "edges": [[i, j, [a, b]], ...]}`
/// with `i < j` and 0-based vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub d: i64,
    pub n: usize,
    pub charges: Vec<i8>,
    pub edges: Vec<(usize, usize, [i64; 2])>,
}

impl From<&LGraph> for GraphJson {
    fn from(g: &LGraph) -> Self {
        GraphJson {
            d: g.ring().d(),
            n: g.n(),
            charges: g.charges().to_vec(),
            edges: g.edges().map(|(i, j, x)| (i, j, [x.a, x.b])).collect(),
        }
    }
}

impl TryFrom<GraphJson> for LGraph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        let ring = RingId::new(j.d)?;
        if j.charges.len() != j.n {
            return Err(Error::InvalidGraph(format!(
                "n={} but {} charges given",
                j.n,
                j.charges.len()
            )));
        }
        if let Some(&(i, k, _)) = j.edges.iter().find(|(i, k, _)| i >= k) {
            return Err(Error::InvalidGraph(format!("edge ({i}, {k}) must have i < j")));
        }
        LGraph::new(ring, j.charges, j.edges.into_iter().map(|(i, k, [a, b])| (i, k, ring.elem(a, b))))
    }
}

impl Serialize for LGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GraphJson::deserialize(d)?;
        LGraph::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl LGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(s: &str) -> Result<LGraph> {
        let j: GraphJson = serde_json::from_str(s)?;
        LGraph::try_from(j)
    }

    /// Graphviz rendering. Weight 1 solid, 2 double, 3 triple, 4 bold dashed;
    /// node labels `+`, `-`, or `●`, with the 1-based index as an external label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "'"));
        let _ = writeln!(s, "  label=\"{}  ({})\";", name.replace('"', "'"), self.ring().legend());
        let _ = writeln!(s, "  node [shape=circle, width=0.3, fixedsize=true];");
        for (v, &c) in self.charges().iter().enumerate() {
            let mark = match c {
                1 => "+",
                -1 => "-",
                _ => "●",
            };
            let _ = writeln!(s, "  v{} [label=\"{}\", xlabel=\"{}\"];", v + 1, mark, v + 1);
        }
        for (i, j, x) in self.edges() {
            let style = match x.norm() {
                1 => "",
                2 => ", color=\"black:invis:black\"",
                3 => ", color=\"black:invis:black:invis:black\"",
                _ => ", style=\"bold,dashed\"",
            };
            let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"{}];", i + 1, j + 1, x, style);
        }
        s.push_str("}\n");
        s
    }
}
