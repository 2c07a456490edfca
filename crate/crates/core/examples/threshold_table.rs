//! Exact g_k(n) / h_k(n) for small n.
//!
//! cargo run --release --example threshold_table -- 4 g 3 9

use std::time::Instant;

use pairsum::extremal::{threshold_table, Strategy};
use pairsum::Mode;

fn main() -> pairsum::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k: usize = args.first().map_or(3, |s| s.parse().expect("k"));
    let mode: Mode = args.get(1).map_or(Ok(Mode::Integer), |s| s.parse())?;
    let lo: u32 = args.get(2).map_or(1, |s| s.parse().expect("n-from"));
    let hi: u32 = args.get(3).map_or(8, |s| s.parse().expect("n-to"));

    let start = Instant::now();
    let rows = threshold_table(k, mode, lo..=hi, Strategy::BranchAndBound)?;
    println!("{:>3} {:>9} {:>6} {:>10}  extremal set", "n", "threshold", "size", "nodes");
    for r in &rows {
        let flag = if r.vacuous_above { " (vacuous above)" } else { "" };
        println!(
            "{:>3} {:>9} {:>6} {:>10}  {:?}{flag}",
            r.n,
            r.threshold,
            r.extremal_set.len(),
            r.attestation.nodes,
            r.extremal_set.members()
        );
    }
    eprintln!("k = {k}, {mode} mode, {:.2?}", start.elapsed());
    Ok(())
}
