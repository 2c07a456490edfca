//! Named witness-free example sets used as lower-bound certificates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{find_witness_with, SearchOptions};
use crate::sidon::{build_sidon, SidonMethod};
use crate::sumset::{Certificate, Mode, SumSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    /// All odds plus `2`.
    OddPlusTwo,
    /// All odds plus the powers of two up to `2n`.
    Powers2,
    /// All odds plus `2n - 2` and `2n`.
    G4Lower,
    /// All odds plus `2n - 4`, `2n - 2` and `2n`.
    G5Lower,
    /// `{1, 2, 4, 5, ..., 10}`, only at `n = 5`.
    G5Point,
    /// All odds plus `4a - 2` for `a` in a Sidon subset of `[1, n/2]`.
    Sidon6,
}

impl FamilyName {
    pub const ALL: [FamilyName; 6] = [
        FamilyName::OddPlusTwo,
        FamilyName::Powers2,
        FamilyName::G4Lower,
        FamilyName::G5Lower,
        FamilyName::G5Point,
        FamilyName::Sidon6,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyName::OddPlusTwo => "odd_plus_two",
            FamilyName::Powers2 => "powers2",
            FamilyName::G4Lower => "g4_lower",
            FamilyName::G5Lower => "g5_lower",
            FamilyName::G5Point => "g5_point",
            FamilyName::Sidon6 => "sidon6",
        }
    }

    /// Whether the family is defined at `n`.
    pub fn valid_at(self, n: u32) -> bool {
        match self {
            FamilyName::OddPlusTwo | FamilyName::Powers2 => n >= 1,
            FamilyName::G4Lower | FamilyName::Sidon6 => n >= 2,
            FamilyName::G5Lower => n >= 3,
            FamilyName::G5Point => n == 5,
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.tag())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyName::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::InvalidSet(format!("unknown family {s:?}")))
    }
}

/// `⌊log₂ 2n⌋`, the number of powers of two in `[1, 2n]` minus one.
pub fn log2_floor_2n(n: u32) -> u32 {
    (2 * u64::from(n)).ilog2()
}

/// The Sidon set behind [`FamilyName::Sidon6`] at `n`.
pub fn sidon6_base(n: u32) -> Result<Vec<i64>> {
    build_sidon(u64::from((n / 2).max(1)), SidonMethod::Modular)
}

/// The family's set inside `{1..2n}`.
pub fn family_set(name: FamilyName, n: u32) -> Result<SumSet> {
    if !name.valid_at(n) {
        return Err(Error::OutOfRange(format!("{name} is not defined at n = {n}")));
    }
    if name == FamilyName::G5Point {
        return SumSet::from_members(5, [1, 2, 4, 5, 6, 7, 8, 9, 10]);
    }
    let top = 2 * i64::from(n);
    let mut a = SumSet::odds(n)?;
    let extra: Vec<i64> = match name {
        FamilyName::OddPlusTwo => vec![2],
        FamilyName::Powers2 => (1..=log2_floor_2n(n)).map(|e| 1i64 << e).collect(),
        FamilyName::G4Lower => vec![top - 2, top],
        FamilyName::G5Lower => vec![top - 4, top - 2, top],
        FamilyName::Sidon6 => sidon6_base(n)?.into_iter().map(|x| 4 * x - 2).collect(),
        FamilyName::G5Point => unreachable!(),
    };
    for e in extra {
        a.insert(e);
    }
    Ok(a)
}

/// A family set with its search certificate.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyCertificate {
    pub name: FamilyName,
    pub n: u32,
    pub k: usize,
    pub mode: Mode,
    pub set: SumSet,
    /// `|A| - n`.
    pub excess: i64,
    pub certificate: Certificate,
}

impl FamilyCertificate {
    /// True when the set has no witness, i.e. it shows the threshold is
    /// larger than `excess`.
    pub fn is_absent(&self) -> bool {
        !self.certificate.is_found()
    }
}

pub fn certify_family(name: FamilyName, n: u32, k: usize, mode: Mode) -> Result<FamilyCertificate> {
    certify_family_with(name, n, k, mode, &SearchOptions::default())
}

pub fn certify_family_with(
    name: FamilyName,
    n: u32,
    k: usize,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<FamilyCertificate> {
    let set = family_set(name, n)?;
    let certificate = find_witness_with(&set, k, mode, opts)?;
    let excess = set.len() as i64 - i64::from(n);
    Ok(FamilyCertificate { name, n, k, mode, set, excess, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::verify_witness;
    use crate::sumset::Witness;

    #[test]
    fn exact_sets() {
        assert_eq!(
            family_set(FamilyName::Powers2, 6).unwrap().members(),
            vec![1, 2, 3, 4, 5, 7, 8, 9, 11]
        );
        assert_eq!(
            family_set(FamilyName::G5Lower, 5).unwrap().members(),
            vec![1, 3, 5, 6, 7, 8, 9, 10]
        );
        assert_eq!(
            family_set(FamilyName::G5Point, 5).unwrap().members(),
            vec![1, 2, 4, 5, 6, 7, 8, 9, 10]
        );
        assert!(matches!(family_set(FamilyName::G5Point, 6), Err(Error::OutOfRange(_))));
        assert!(matches!(family_set(FamilyName::G5Lower, 2), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn sizes() {
        for n in 1..=40u32 {
            let size = |f| family_set(f, n).map(|a| a.len());
            assert_eq!(size(FamilyName::OddPlusTwo).unwrap(), n as usize + 1);
            assert_eq!(
                size(FamilyName::Powers2).unwrap(),
                (n + log2_floor_2n(n)) as usize
            );
            if n >= 2 {
                assert_eq!(size(FamilyName::G4Lower).unwrap(), n as usize + 2);
                let s = sidon6_base(n).unwrap();
                assert_eq!(size(FamilyName::Sidon6).unwrap(), n as usize + s.len());
            }
            if n >= 3 {
                assert_eq!(size(FamilyName::G5Lower).unwrap(), n as usize + 3);
            }
        }
        assert_eq!(family_set(FamilyName::G5Point, 5).unwrap().len(), 9);
    }

    #[test]
    fn certificates() {
        let c = certify_family(FamilyName::Powers2, 6, 5, Mode::Positive).unwrap();
        assert!(c.is_absent());
        assert_eq!(c.excess, 3);
        let c = certify_family(FamilyName::Powers2, 6, 5, Mode::Integer).unwrap();
        assert_eq!(c.certificate.witness().unwrap().values(), &[-1, 2, 3, 5, 6]);
        let w = Witness::new(vec![-1, 2, 3, 5, 6], Mode::Integer).unwrap();
        assert!(verify_witness(&c.set, &w));
        assert!(certify_family(FamilyName::G4Lower, 6, 4, Mode::Integer).unwrap().is_absent());
        let tight = SearchOptions { max_universe: 4, max_nodes: None };
        assert!(matches!(
            certify_family_with(FamilyName::G4Lower, 6, 4, Mode::Integer, &tight),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn small_family_properties() {
        for n in 4..=9 {
            assert!(certify_family(FamilyName::OddPlusTwo, n, 3, Mode::Positive).unwrap().is_absent());
        }
        for n in 3..=9 {
            assert!(certify_family(FamilyName::G5Lower, n, 5, Mode::Integer).unwrap().is_absent());
        }
    }

    #[test]
    fn tags_round_trip() {
        for f in FamilyName::ALL {
            assert_eq!(f.tag().parse::<FamilyName>().unwrap(), f);
            assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.tag()));
        }
    }
}
