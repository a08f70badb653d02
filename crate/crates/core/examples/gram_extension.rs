//! Builds new vertices from ring-linear combinations of Gram vectors.

use cyclo_lgraphs::gram::{combination_inner_products, gram_witness, template_example, try_gram_extension, GramTemplate};
use cyclo_lgraphs::families::chain;
use cyclo_lgraphs::RingId;

fn main() -> cyclo_lgraphs::Result<()> {
    let r = RingId::NEG2;
    for t in GramTemplate::ALL {
        let g = template_example(t, r);
        let id: Vec<usize> = (0..g.n()).collect();
        let spec = t.combination(&g, &id);
        let (row, s) = combination_inner_products(&g, &spec);
        let row: Vec<String> = row.iter().map(ToString::to_string).collect();
        match try_gram_extension(&g, &spec) {
            Ok(h) => println!("{}: <x,w_i> = ({}), <x,x> = {s} -> {}", t.name(), row.join(", "), h.to_json()),
            Err(e) => println!("{}: rejected, {e}", t.name()),
        }
    }
    let g = chain(1, r)?;
    if let Some(w) = gram_witness(&g) {
        println!("chain of length 1 extends to {}", w.extension().to_json());
    }
    Ok(())
}
