//! Writes the catalogue for d = -7 as DOT files into a temporary directory and
//! prints a summary table.

use cyclo_lgraphs::cli::file_stem;
use cyclo_lgraphs::families::catalogue_with_bound;
use cyclo_lgraphs::RingId;

fn main() -> cyclo_lgraphs::Result<()> {
    let r = RingId::NEG7;
    let dir = std::env::temp_dir().join("cyclo-catalogue-d7");
    std::fs::create_dir_all(&dir)?;
    println!("{:<10} {:>8} {:>3} {:>6}", "name", "family", "n", "edges");
    for e in catalogue_with_bound(r, 4) {
        println!("{:<10} {:>8} {:>3} {:>6}", e.name, e.family, e.graph.n(), e.graph.edge_count());
        std::fs::write(dir.join(format!("{}.dot", file_stem(&e.name))), e.graph.to_dot(&e.name))?;
    }
    println!("DOT files in {}", dir.display());
    Ok(())
}
