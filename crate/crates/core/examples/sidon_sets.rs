//! Sidon set construction and difference families.

use pairsum::sidon::{
    build_sidon, is_sidon, is_weak_sidon, max_disjoint_representations, SidonMethod,
};

fn main() -> pairsum::Result<()> {
    let greedy = build_sidon(100, SidonMethod::Greedy)?;
    println!("greedy up to 100 ({} elements): {greedy:?}", greedy.len());
    let modular = build_sidon(10_000, SidonMethod::Modular)?;
    println!("modular up to 10^4: {} elements, sidon = {}", modular.len(), is_sidon(&modular));
    for s in [vec![1, 2, 5, 11], vec![1, 2, 3, 4], vec![1, 2, 4, 7]] {
        println!("{s:?}: sidon {} weak sidon {}", is_sidon(&s), is_weak_sidon(&s));
    }
    let evens: Vec<i64> = vec![2, 4, 6, 8, 12, 14, 20];
    let fam = max_disjoint_representations(&evens)?;
    println!("{evens:?}: difference {} has {} disjoint representations {:?}", fam.m, fam.s(), fam.pairs);
    Ok(())
}
