//! Reproduce the two explicit constants and sample the bound functions.

use pairsum::bounds::{
    check_dominance, check_general_upper, check_growth_properties, eval_bound, solve_g5_constant,
    BoundVariant, DominanceQuery, H4_CONSTANT,
};

fn main() -> pairsum::Result<()> {
    let c = solve_g5_constant()?;
    println!("smallest C with x/12 + C/2 - 2 >= f_5(x): {c}");
    println!("  at C-1: {}", check_dominance(&DominanceQuery::g5(c - 1))?);
    println!("(x-6)/16 + {H4_CONSTANT}/2 >= F_4(x): {}", check_dominance(&DominanceQuery::h4(H4_CONSTANT))?);

    for k in 3..=6 {
        let x = 1e6;
        println!(
            "f_{k}({x:e}) = {:.3}   F_{k}({x:e}) = {:.3}",
            eval_bound(k, x, BoundVariant::Strict)?,
            eval_bound(k, x, BoundVariant::Weak)?
        );
    }
    let growth = check_growth_properties(8, 2000, 1)?;
    println!("growth properties (k <= 8, 2000 samples): {}", if growth.passed { "pass" } else { "FAIL" });
    let upper = check_general_upper(8, 2000, 1)?;
    println!("f_k(2n) < 4 n^(1 - 2^(2-k)) on [1e6, 1e12]: {}", if upper.passed() { "pass" } else { "FAIL" });
    Ok(())
}
