//! Generators for the maximal graphs of the classification and the structural
//! templates (cylinders, chains) used when growing them.
//!
//! Vertex numbering is fixed per family so tests can compare matrices entrywise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lgraph::{ChargePattern, EdgePattern, FormPattern, LGraph};
use crate::ring::{RingElement, RingId};

/// Largest family parameter in [`catalogue`].
pub const DEFAULT_FAMILY_BOUND: usize = 8;

/// Maximal connected cyclotomic charged signed graphs over the integers. They
/// are L-graphs for every ring but have no edge of weight at least 2, so the
/// enumerations here never need their generators.
pub const INTEGER_MAXIMAL_NAMES: [&str; 8] = ["S_14", "S_16", "T_2k", "C_2k^++", "C_2k^+-", "S_7", "S_8", "S_8'"];

/// The sporadic names this crate can build, in catalogue order.
pub const SPORADIC_NAMES: [&str; 8] = ["S_2", "S_2*", "S_2'", "S_4'", "S_4", "S_4*", "S_6†", "S_8*"];

#[derive(Clone, Debug, Serialize)]
pub struct CatalogueEntry {
    /// Display name, e.g. `S_8*` or `T_6^4`.
    pub name: String,
    /// Family name (`T_2k^4`, `T_2k^4'`, `C_2k^2+`) or the sporadic name.
    pub family: String,
    pub ring: RingId,
    pub k: Option<usize>,
    pub graph: LGraph,
    pub cyclotomic: bool,
    pub maximal: bool,
    pub all_pm2: bool,
}

impl CatalogueEntry {
    fn new(name: String, family: &str, k: Option<usize>, graph: LGraph) -> Self {
        CatalogueEntry {
            name,
            family: family.to_string(),
            ring: graph.ring(),
            k,
            graph,
            cyclotomic: true,
            maximal: true,
            all_pm2: true,
        }
    }
}

/// Builds a graph from a 1-based edge list.
fn build(ring: RingId, charges: &[i8], edges: &[(usize, usize, RingElement)]) -> LGraph {
    LGraph::new(ring, charges.to_vec(), edges.iter().map(|&(i, j, x)| (i - 1, j - 1, x)))
        .expect("sporadic data is valid")
}

/// Accepts a few ASCII spellings: `S_6dag`, `S_8star`, `S_4prime`.
fn normalize(name: &str) -> String {
    name.trim().replace("dag", "†").replace("star", "*").replace("prime", "'")
}

fn invalid(name: &str, ring: RingId) -> Error {
    Error::InvalidFamily(format!("{name} is not defined for d={}", ring.d()))
}

pub fn sporadic(name: &str, ring: RingId) -> Result<LGraph> {
    let name = normalize(name);
    let r = ring;
    let d = r.d();
    let w = r.omega();
    let one = r.one();
    let m1 = r.int(-1);
    let g = match name.as_str() {
        "S_2" => build(r, &[0, 0], &[(1, 2, r.int(2))]),
        "S_2*" => {
            let t = match d {
                -7 => r.elem(1, 1),
                -15 => r.elem(0, 1),
                _ => return Err(invalid(&name, r)),
            };
            build(r, &[0, 0], &[(1, 2, t)])
        }
        "S_2'" | "S_4'" => {
            let alpha = match d {
                -2 => r.elem(1, 1),
                -11 => r.elem(0, 1),
                _ => return Err(invalid(&name, r)),
            };
            if name == "S_2'" {
                build(r, &[1, -1], &[(1, 2, alpha)])
            } else {
                build(r, &[0; 4], &[(1, 2, alpha), (3, 4, -alpha), (1, 3, one), (2, 4, one)])
            }
        }
        "S_4" => {
            if d != -2 && d != -7 {
                return Err(invalid(&name, r));
            }
            build(r, &[1, -1, -1, 1], &[(1, 2, w), (3, 4, -w), (1, 3, one), (2, 4, one)])
        }
        "S_4*" => {
            if d != -2 {
                return Err(invalid(&name, r));
            }
            build(
                r,
                &[0; 4],
                &[(1, 2, w), (3, 4, -w), (1, 3, one), (2, 4, one), (1, 4, one), (2, 3, m1)],
            )
        }
        "S_6†" => {
            if d != -7 {
                return Err(invalid(&name, r));
            }
            build(
                r,
                &[0; 6],
                &[
                    (1, 2, one),
                    (3, 4, one),
                    (5, 6, one),
                    (3, 6, one),
                    (2, 5, m1),
                    (1, 4, m1),
                    (1, 6, w.conj()),
                    (4, 5, -w),
                    (2, 3, w),
                ],
            )
        }
        "S_8*" => {
            if d != -2 && d != -7 {
                return Err(invalid(&name, r));
            }
            build(
                r,
                &[0; 8],
                &[
                    (7, 8, m1),
                    (5, 6, m1),
                    (4, 8, one),
                    (3, 7, one),
                    (1, 5, one),
                    (2, 6, one),
                    (3, 4, one),
                    (1, 2, one),
                    (5, 8, -w),
                    (6, 7, w),
                    (2, 3, -w),
                    (1, 4, w),
                ],
            )
        }
        _ => return Err(Error::InvalidFamily(format!("unknown sporadic graph {name}"))),
    };
    Ok(g)
}

fn require_toral_ring(ring: RingId, what: &str) -> Result<()> {
    if ring == RingId::NEG2 || ring == RingId::NEG7 {
        Ok(())
    } else {
        Err(invalid(what, ring))
    }
}

/// Rails of a cylinder of length `l` on vertices `1..=2l` (1-based): top path
/// labels 1, bottom path labels −1, crossings 1 and −1.
fn rails(ring: RingId, l: usize) -> Vec<(usize, usize, RingElement)> {
    let mut e = Vec::new();
    for i in 1..l {
        e.push((i, i + 1, ring.one()));
        e.push((l + i, l + i + 1, ring.int(-1)));
        e.push((i, l + i + 1, ring.one()));
        e.push((l + i, i + 1, ring.int(-1)));
    }
    e
}

/// The toral family `T_2k^4` (or `T_2k^4'` when `primed`, `d = −7` only).
pub fn t2k4(k: usize, ring: RingId, primed: bool) -> Result<LGraph> {
    require_toral_ring(ring, "T_2k^4")?;
    if k < 2 {
        return Err(Error::InvalidFamily(format!("T_2k^4 needs k >= 2, got {k}")));
    }
    if primed && ring != RingId::NEG7 {
        return Err(invalid("T_2k^4'", ring));
    }
    let l = k - 1;
    let w = ring.omega();
    let right = if primed { w.conj() } else { w };
    let mut e = rails(ring, l);
    e.extend([(1, 2 * l + 1, w), (l + 1, 2 * l + 1, w), (l, 2 * l + 2, right), (2 * l, 2 * l + 2, -right)]);
    Ok(build(ring, &vec![0; 2 * k], &e))
}

/// The charged family `C_2k^2+` on `2k + 1` vertices.
pub fn c2k2plus(k: usize, ring: RingId) -> Result<LGraph> {
    require_toral_ring(ring, "C_2k^2+")?;
    if k < 1 {
        return Err(Error::InvalidFamily("C_2k^2+ needs k >= 1".into()));
    }
    let w = ring.omega();
    let mut e = rails(ring, k);
    e.extend([(1, k + 1, ring.one()), (k, 2 * k + 1, w), (2 * k, 2 * k + 1, -w)]);
    let mut charges = vec![0; 2 * k + 1];
    charges[0] = 1;
    charges[k] = 1;
    Ok(build(ring, &charges, &e))
}

/// A chain of length `k`: `T_{2(k+2)}^4` with its first cap removed, so the
/// rails `a_k..a_0`, `b_k..b_0` are vertices `0..=k` and `k+1..=2k+1`, and the
/// remaining cap `z` is vertex `2k+2`.
pub fn chain(k: usize, ring: RingId) -> Result<LGraph> {
    require_toral_ring(ring, "chain")?;
    if k < 1 {
        return Err(Error::InvalidFamily("chain needs k >= 1".into()));
    }
    let t = t2k4(k + 2, ring, false)?;
    let l = k + 1;
    let keep: Vec<usize> = (0..2 * l).chain([2 * l + 1]).collect();
    Ok(t.induced(&keep))
}

/// Uncharged weight-1 double rail on `2m` vertices, all other pairs absent.
pub fn cylinder(m: usize) -> FormPattern {
    assert!(m >= 1);
    let mut p = FormPattern::new(2 * m);
    for v in 0..2 * m {
        p = p.charge(v, ChargePattern::Neutral);
    }
    for i in 0..m.saturating_sub(1) {
        p = p.weight(i, i + 1, 1).weight(m + i, m + i + 1, 1).weight(i, m + i + 1, 1).weight(m + i, i + 1, 1);
    }
    p
}

fn pattern_of(g: &LGraph) -> FormPattern {
    let mut p = FormPattern::new(g.n());
    for v in 0..g.n() {
        p = p.charge(v, if g.charge(v) == 0 { ChargePattern::Neutral } else { ChargePattern::Charged });
    }
    for (i, j, x) in g.edges() {
        p = p.edge(i, j, EdgePattern::Weight(x.norm() as u8));
    }
    p
}

/// Form of `T_2k^4`: weights only, labels free.
pub fn t2k4_form(k: usize) -> FormPattern {
    pattern_of(&t2k4(k, RingId::NEG2, false).expect("k >= 2"))
}

/// Form of `C_2k^2±`: the two charged vertices may carry either sign.
pub fn c2k2pm_form(k: usize) -> FormPattern {
    pattern_of(&c2k2plus(k, RingId::NEG2).expect("k >= 1"))
}

pub fn chain_form(k: usize) -> FormPattern {
    pattern_of(&chain(k, RingId::NEG2).expect("k >= 1"))
}

pub fn catalogue(ring: RingId) -> Vec<CatalogueEntry> {
    catalogue_with_bound(ring, DEFAULT_FAMILY_BOUND)
}

/// Sporadics valid for `ring` plus family members with `k <= kmax`.
pub fn catalogue_with_bound(ring: RingId, kmax: usize) -> Vec<CatalogueEntry> {
    let mut out: Vec<CatalogueEntry> = SPORADIC_NAMES
        .iter()
        .filter_map(|&name| sporadic(name, ring).ok().map(|g| CatalogueEntry::new(name.to_string(), name, None, g)))
        .collect();
    if require_toral_ring(ring, "").is_ok() {
        for k in 2..=kmax {
            out.push(CatalogueEntry::new(format!("T_{}^4", 2 * k), "T_2k^4", Some(k), t2k4(k, ring, false).unwrap()));
            if ring == RingId::NEG7 {
                out.push(CatalogueEntry::new(format!("T_{}^4'", 2 * k), "T_2k^4'", Some(k), t2k4(k, ring, true).unwrap()));
            }
        }
        for k in 1..=kmax {
            out.push(CatalogueEntry::new(format!("C_{}^2+", 2 * k), "C_2k^2+", Some(k), c2k2plus(k, ring).unwrap()));
        }
    }
    out
}
