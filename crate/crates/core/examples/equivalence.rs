//! Canonical keys under switching, permutation, negation and conjugation.

use cyclo_lgraphs::equiv::{are_equivalent, canonical_form, conjugate, negate, permute, switch};
use cyclo_lgraphs::families::t2k4;
use cyclo_lgraphs::RingId;

fn main() -> cyclo_lgraphs::Result<()> {
    let r = RingId::NEG7;
    let t = t2k4(3, r, false)?;
    let scrambled = conjugate(&negate(&switch(&permute(&t, &[3, 0, 5, 1, 4, 2]), 2)));
    let (k1, rep) = canonical_form(&t)?;
    let (k2, _) = canonical_form(&scrambled)?;
    println!("T_6^4 key        {k1}");
    println!("scrambled key    {k2}");
    println!("equal: {}", k1 == k2);
    println!("representative: {}", rep.to_json());

    let tp = t2k4(3, r, true)?;
    println!("T_6^4 ~ T_6^4' : {}", are_equivalent(&t, &tp));
    Ok(())
}
