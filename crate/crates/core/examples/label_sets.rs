//! Prints the labels of each norm for every supported ring.

use cyclo_lgraphs::cli::render_label_set;
use cyclo_lgraphs::{label_set, RingId};

fn main() {
    for r in RingId::ALL {
        println!("d = {}   ({})", r.d(), r.legend());
        let ls = label_set(r);
        for k in 1..=4 {
            println!("  L{k}: {}", render_label_set(ls.of_norm(k)));
        }
    }
}
