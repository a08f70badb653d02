//! Enumerates all small connected cyclotomic graphs with an edge of weight at
//! least 2 and compares them with the catalogue.
//!
//! Usage: `cargo run --release --example verify_theorem [-- D MAX_N]`

use cyclo_lgraphs::cli::verify_theorem;
use cyclo_lgraphs::families::DEFAULT_FAMILY_BOUND;
use cyclo_lgraphs::RingId;

fn main() -> cyclo_lgraphs::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let d = args.first().and_then(|s| s.parse().ok()).unwrap_or(-7);
    let max_n = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let rep = verify_theorem(RingId::new(d)?, max_n, DEFAULT_FAMILY_BOUND)?;
    println!("d={d} max-n={max_n}: {:?}", rep.status);
    println!("classes per vertex count: {:?}", rep.per_n);
    println!("maximal: {:?}", rep.maximal_found);
    Ok(())
}
