//! Exact spectral checks on a few small graphs.
//!
//! Usage: `cargo run --example check_graph [-- graph.json]`

use cyclo_lgraphs::families::sporadic;
use cyclo_lgraphs::grow::is_maximal;
use cyclo_lgraphs::spectra::{char_poly, eigenvalues_all_pm2, is_cyclotomic};
use cyclo_lgraphs::{LGraph, RingId};

fn report(name: &str, g: &LGraph) {
    println!("{name}: n={} d={}", g.n(), g.ring().d());
    println!("  char poly   {}", char_poly(g));
    println!("  cyclotomic  {}", is_cyclotomic(g));
    println!("  maximal     {}", g.is_connected() && is_cyclotomic(g) && is_maximal(g));
    println!("  all ±2      {}", eigenvalues_all_pm2(g));
}

fn main() -> cyclo_lgraphs::Result<()> {
    if let Some(path) = std::env::args().nth(1) {
        let g = LGraph::from_json(&std::fs::read_to_string(&path)?)?;
        report(&path, &g);
        return Ok(());
    }
    let r = RingId::NEG7;
    report("S_6†", &sporadic("S_6†", r)?);
    // A triangle of weight-2 edges is not cyclotomic.
    let w = r.omega();
    report("w2 triangle", &LGraph::new(r, vec![0; 3], [(0, 1, w), (1, 2, w), (0, 2, w)])?);
    report("w2 edge", &LGraph::new(r, vec![0; 2], [(0, 1, w)])?);
    Ok(())
}
