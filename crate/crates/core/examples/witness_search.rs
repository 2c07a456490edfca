//! Find the lexicographically smallest k-witness for a set.
//!
//! cargo run --example witness_search -- 6 5 g 1,2,3,4,5,7,8,9,11

use pairsum::{find_witness, Mode, SumSet};

fn main() -> pairsum::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(6, |s| s.parse().expect("n"));
    let k: usize = args.get(1).map_or(5, |s| s.parse().expect("k"));
    let mode: Mode = args.get(2).map_or(Ok(Mode::Integer), |s| s.parse())?;
    let members: Vec<i64> = match args.get(3) {
        Some(list) => list.split(',').map(|x| x.trim().parse().expect("member")).collect(),
        None => vec![1, 2, 3, 4, 5, 7, 8, 9, 11],
    };
    let a = SumSet::from_members(n, members)?;
    let cert = find_witness(&a, k, mode)?;
    println!("A = {:?}", a.members());
    println!("universe [{}, {}], {} search nodes", cert.universe.lo, cert.universe.hi, cert.examined);
    match cert.witness() {
        Some(w) => {
            let sums: Vec<i64> = w.pairwise_sums().collect();
            println!("witness {:?}, sums {:?}", w.values(), sums);
        }
        None => println!("no {k}-witness in {mode} mode"),
    }
    println!("{}", serde_json::to_string(&cert).expect("certificate serializes"));
    Ok(())
}
