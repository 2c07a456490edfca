//! Certify the named witness-free families at small n.

use pairsum::families::{certify_family, FamilyName};
use pairsum::Mode;

fn main() -> pairsum::Result<()> {
    let runs: [(FamilyName, usize, Mode); 6] = [
        (FamilyName::OddPlusTwo, 3, Mode::Positive),
        (FamilyName::Powers2, 5, Mode::Positive),
        (FamilyName::Powers2, 5, Mode::Integer),
        (FamilyName::G4Lower, 4, Mode::Integer),
        (FamilyName::G5Lower, 5, Mode::Integer),
        (FamilyName::Sidon6, 6, Mode::Integer),
    ];
    for (name, k, mode) in runs {
        for n in 4..=9 {
            let c = certify_family(name, n, k, mode)?;
            let verdict = match c.certificate.witness() {
                Some(w) => format!("witness {:?}", w.values()),
                None => "no witness".to_string(),
            };
            println!("{name:<13} k={k} {mode}  n={n}  |A|-n={:<2} {verdict}", c.excess);
        }
    }
    let c = certify_family(FamilyName::G5Point, 5, 5, Mode::Integer)?;
    println!("g5_point      {:?} witness-free: {}", c.set.members(), c.is_absent());
    Ok(())
}
