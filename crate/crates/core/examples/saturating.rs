//! Minimal saturating extensions of a path of two weight-2 edges.

use cyclo_lgraphs::grow::{saturating_extensions, GrowConfig};
use cyclo_lgraphs::{LGraph, RingId};

fn main() -> cyclo_lgraphs::Result<()> {
    let r = RingId::NEG7;
    let w = r.omega();
    let g = LGraph::new(r, vec![0; 3], [(0, 1, w), (1, 2, w)])?;
    let exts = saturating_extensions(&g, &GrowConfig::full(r).with_max_vertices(8))?;
    println!("{} minimal saturating extensions", exts.len());
    for h in exts {
        println!("  +{} vertices: {}", h.n() - g.n(), h.to_json());
    }
    Ok(())
}
