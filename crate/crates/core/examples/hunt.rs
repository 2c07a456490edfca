//! Randomized search for large witness-free sets.
//!
//! cargo run --release --example hunt -- 5 5 g 4 1000000 7

use pairsum::extremal::hunt_with_progress;
use pairsum::Mode;

fn main() -> pairsum::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(5, |s| s.parse().expect("n"));
    let k: usize = args.get(1).map_or(5, |s| s.parse().expect("k"));
    let mode: Mode = args.get(2).map_or(Ok(Mode::Integer), |s| s.parse())?;
    let target: u32 = args.get(3).map_or(4, |s| s.parse().expect("target"));
    let budget: u64 = args.get(4).map_or(1_000_000, |s| s.parse().expect("budget"));
    let seed: u64 = args.get(5).map_or(7, |s| s.parse().expect("seed"));

    let report = hunt_with_progress(n, k, mode, target, budget, seed, |p| {
        eprintln!("nodes {:>10}  restarts {:>5}  best {}", p.nodes, p.restarts, p.best_size);
    })?;
    match &report.found {
        Some(a) => println!("witness-free set of size {} = n + {}: {:?}", a.len(), a.len() as u32 - n, a.members()),
        None => println!(
            "nothing of size n + {target} within {} nodes; best {} = {:?}",
            report.nodes,
            report.best.len(),
            report.best.members()
        ),
    }
    Ok(())
}
