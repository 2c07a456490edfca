//! Run each explicit builder on a small input and print its trace.

use pairsum::bounds::BoundVariant;
use pairsum::constructive::{
    construct_even_lemma, construct_g3, construct_g3_nonneg, construct_g4, construct_g5_allodds,
    construct_g5_bounded, construct_h4_bounded, Construction,
};
use pairsum::{Result, SumSet};

fn show(name: &str, r: Result<Construction>) {
    match r {
        Ok(c) => println!("{name:<16} {:?}  {}", c.witness.values(), c.trace),
        Err(e) => println!("{name:<16} error[{}]: {e}", e.kind()),
    }
}

fn main() -> Result<()> {
    show("g3", construct_g3(&SumSet::from_members(3, [3, 4, 5, 6])?));
    show("g3_nonneg", construct_g3_nonneg(&SumSet::from_members(4, [3, 4, 5, 6, 8])?));
    show("g4", construct_g4(&SumSet::full(5)?));

    let mut a = SumSet::odds(5)?;
    for e in [2, 6, 8, 10] {
        a.insert(e);
    }
    show("g5_allodds", construct_g5_allodds(&a));

    show("lemma strict", construct_even_lemma(&[2, 4, 6, 8], 3, BoundVariant::Strict));
    show("lemma weak", construct_even_lemma(&[2, 4, 6, 8], 3, BoundVariant::Weak));
    show("lemma sidon", construct_even_lemma(&[2, 4, 8, 16], 3, BoundVariant::Strict));

    show("g5_bounded", construct_g5_bounded(&SumSet::full(12)?, 12));
    show("h4_bounded", construct_h4_bounded(&SumSet::full(8)?, 8));
    Ok(())
}
