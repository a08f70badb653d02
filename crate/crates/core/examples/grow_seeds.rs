//! Grows the three named seed sets to closure and names the maximal classes.

use cyclo_lgraphs::equiv::canonical_key;
use cyclo_lgraphs::families::catalogue;
use cyclo_lgraphs::grow::{charged_weight_two_seeds, grow_closure, isolated_weight_two_seeds, weight_three_seeds, GrowConfig};
use cyclo_lgraphs::{LGraph, RingId};

fn run(title: &str, seeds: Vec<LGraph>, r: RingId, norms: &[u8]) -> cyclo_lgraphs::Result<()> {
    let rep = grow_closure(&seeds, &GrowConfig::full(r).with_norms(norms))?;
    let cat = catalogue(r);
    let names: Vec<String> = rep
        .maximal_representatives
        .iter()
        .map(|g| {
            let k = canonical_key(g).ok();
            cat.iter().find(|e| canonical_key(&e.graph).ok() == k).map_or("?".to_string(), |e| e.name.clone())
        })
        .collect();
    println!(
        "{title} d={}: new classes per round {:?}, maximal {:?}",
        r.d(),
        rep.new_classes_per_round,
        names
    );
    Ok(())
}

fn main() -> cyclo_lgraphs::Result<()> {
    for r in [RingId::NEG2, RingId::NEG11] {
        run("weight 3", weight_three_seeds(r), r, &[1, 2, 3])?;
    }
    for r in [RingId::NEG2, RingId::NEG7] {
        run("charged weight 2", charged_weight_two_seeds(r), r, &[1, 2])?;
        run("isolated weight 2", isolated_weight_two_seeds(r), r, &[1, 2])?;
    }
    Ok(())
}
