//! Ground types: the set `A ⊆ {1..2n}`, witness tuples and search certificates.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `{1, ..., 2n}` stored as a bit vector.
///
/// Bit `i` of the backing words corresponds to the integer `i + 1`; no bit
/// past `2n` is ever set, so derived equality is extensional.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SumSet {
    n: u32,
    words: Vec<u64>,
}

impl SumSet {
    /// The empty subset of `{1..2n}`.
    pub fn empty(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSet("n must be positive".into()));
        }
        let bits = 2 * n as usize;
        Ok(SumSet { n, words: vec![0; bits.div_ceil(64)] })
    }

    /// All of `{1..2n}`.
    pub fn full(n: u32) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in 1..=2 * i64::from(n) {
            s.insert(v);
        }
        Ok(s)
    }

    /// The odd integers `{1, 3, ..., 2n-1}`.
    pub fn odds(n: u32) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in (1..2 * i64::from(n)).step_by(2) {
            s.insert(v);
        }
        Ok(s)
    }

    /// Builds a set from arbitrary members; duplicates are merged, members
    /// outside `[1, 2n]` are rejected.
    pub fn from_members<I: IntoIterator<Item = i64>>(n: u32, members: I) -> Result<Self> {
        let mut s = Self::empty(n)?;
        for v in members {
            if !s.in_range(v) {
                return Err(Error::InvalidSet(format!("member {v} outside [1, {}]", 2 * n)));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Like [`SumSet::from_members`] but additionally requires the members to
    /// be strictly ascending, which is the canonical textual form.
    pub fn from_ascending(n: u32, members: &[i64]) -> Result<Self> {
        if let Some(w) = members.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSet(format!(
                "members must be strictly ascending ({} then {})",
                w[0], w[1]
            )));
        }
        Self::from_members(n, members.iter().copied())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Largest admissible member, `2n`.
    pub fn upper(&self) -> i64 {
        2 * i64::from(self.n)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn in_range(&self, v: i64) -> bool {
        v >= 1 && v <= self.upper()
    }

    #[inline]
    pub fn contains(&self, v: i64) -> bool {
        if !self.in_range(v) {
            return false;
        }
        let i = (v - 1) as usize;
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Inserts `v`; returns false when `v` lies outside `[1, 2n]`.
    pub fn insert(&mut self, v: i64) -> bool {
        if !self.in_range(v) {
            return false;
        }
        let i = (v - 1) as usize;
        self.words[i / 64] |= 1 << (i % 64);
        true
    }

    pub fn remove(&mut self, v: i64) -> bool {
        if !self.contains(v) {
            return false;
        }
        let i = (v - 1) as usize;
        self.words[i / 64] &= !(1 << (i % 64));
        true
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((wi * 64 + b + 1) as i64)
            })
        })
    }

    pub fn members(&self) -> Vec<i64> {
        self.iter().collect()
    }

    pub fn evens(&self) -> Vec<i64> {
        self.iter().filter(|v| v % 2 == 0).collect()
    }

    pub fn is_subset(&self, other: &SumSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// The set as a single word, when `2n <= 64`.
    pub fn to_mask(&self) -> Option<u64> {
        (self.n <= 32).then(|| self.words[0])
    }

    pub fn from_mask(n: u32, mask: u64) -> Result<Self> {
        if n > 32 {
            return Err(Error::InvalidSet("mask form needs 2n <= 64".into()));
        }
        let mut s = Self::empty(n)?;
        let limit = if n == 32 { u64::MAX } else { (1u64 << (2 * n)) - 1 };
        s.words[0] = mask & limit;
        Ok(s)
    }
}

impl fmt::Debug for SumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SumSet(n={}, {:?})", self.n, self.members())
    }
}

#[derive(Serialize, Deserialize)]
struct SumSetRepr {
    n: u32,
    members: Vec<i64>,
}

impl Serialize for SumSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SumSetRepr { n: self.n, members: self.members() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SumSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SumSetRepr::deserialize(deserializer)?;
        SumSet::from_ascending(repr.n, &repr.members).map_err(D::Error::custom)
    }
}

/// Whether witnesses range over all integers or only positive ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Mode {
    /// Arbitrary integers (the `g_k` threshold).
    #[serde(rename = "g")]
    Integer,
    /// Strictly positive integers (the `h_k` threshold).
    #[serde(rename = "h")]
    Positive,
}

impl Mode {
    pub fn tag(self) -> &'static str {
        match self {
            Mode::Integer => "g",
            Mode::Positive => "h",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" | "g-mode" | "integer" => Ok(Mode::Integer),
            "h" | "h-mode" | "positive" => Ok(Mode::Positive),
            other => Err(Error::PreconditionViolation(format!("unknown mode {other:?}"))),
        }
    }
}

/// `k` strictly increasing integers whose pairwise sums should land in a set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    values: Vec<i64>,
    mode: Mode,
}

impl Witness {
    pub fn new(values: Vec<i64>, mode: Mode) -> Result<Self> {
        if values.len() < 3 {
            return Err(Error::InvalidArity(values.len()));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidWitness(format!("{values:?} is not strictly increasing")));
        }
        match mode {
            Mode::Positive if values[0] < 1 => {
                return Err(Error::InvalidWitness(format!("{values:?} has a non-positive value")))
            }
            Mode::Integer if values.len() > 1 && values[1] <= 0 => {
                return Err(Error::InvalidWitness(format!(
                    "{values:?} has more than one non-positive value"
                )))
            }
            _ => {}
        }
        Ok(Witness { values, mode })
    }

    /// Sorts `values` first; distinctness is still required.
    pub fn from_unsorted(mut values: Vec<i64>, mode: Mode) -> Result<Self> {
        values.sort_unstable();
        Self::new(values, mode)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    /// All `k(k-1)/2` pairwise sums, in `(i, j)` order with `i < j`.
    pub fn pairwise_sums(&self) -> impl Iterator<Item = i64> + '_ {
        let v = &self.values;
        (0..v.len()).flat_map(move |i| (i + 1..v.len()).map(move |j| v[i] + v[j]))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(serializer)
    }
}

/// Closed integer interval `[lo, hi]`; empty when `hi < lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    pub lo: i64,
    pub hi: i64,
}

impl Universe {
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl Serialize for Universe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Found(Witness),
    Absent,
}

/// Result of a witness query: either a verified witness or an attested
/// exhaustive absence over `universe`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub outcome: Outcome,
    pub universe: Universe,
    /// Search nodes visited.
    pub examined: u64,
    /// Wall-clock time; not serialized so JSON output stays byte-stable.
    pub elapsed: Duration,
}

impl Certificate {
    pub fn witness(&self) -> Option<&Witness> {
        match &self.outcome {
            Outcome::Found(w) => Some(w),
            Outcome::Absent => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found(_))
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Certificate", 4)?;
        match &self.outcome {
            Outcome::Found(w) => {
                st.serialize_field("outcome", "found")?;
                st.serialize_field("witness", w)?;
            }
            Outcome::Absent => {
                st.serialize_field("outcome", "absent")?;
                st.serialize_field("witness", &None::<Vec<i64>>)?;
            }
        }
        st.serialize_field("universe", &self.universe)?;
        st.serialize_field("examined", &self.examined)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn size_counts_bits() {
        let a = SumSet::from_members(6, [1, 3, 5, 7, 9, 11, 2, 4, 8]).unwrap();
        assert_eq!(a.len(), 9);
        assert_eq!(a.members(), vec![1, 2, 3, 4, 5, 7, 8, 9, 11]);
        assert!(!a.contains(0) && !a.contains(13) && !a.contains(6));
    }

    #[test]
    fn rejects_out_of_range_and_unsorted() {
        assert!(SumSet::from_members(3, [7]).is_err());
        assert!(SumSet::from_members(3, [0]).is_err());
        assert!(SumSet::from_ascending(3, &[2, 1]).is_err());
        assert!(SumSet::from_ascending(3, &[2, 2]).is_err());
        assert!(SumSet::empty(0).is_err());
    }

    #[test]
    fn json_form() {
        let a = SumSet::from_members(3, [1, 2, 4, 6]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":3,"members":[1,2,4,6]}"#);
        let bad: std::result::Result<SumSet, _> =
            serde_json::from_str(r#"{"n":3,"members":[4,2]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn witness_invariants() {
        assert!(Witness::new(vec![1, 2], Mode::Integer).is_err());
        assert!(Witness::new(vec![1, 1, 2], Mode::Integer).is_err());
        assert!(Witness::new(vec![0, 1, 2], Mode::Positive).is_err());
        assert!(Witness::new(vec![-1, 0, 2], Mode::Integer).is_err());
        assert!(Witness::new(vec![-1, 2, 3], Mode::Integer).is_ok());
        let w = Witness::from_unsorted(vec![3, 1, 2], Mode::Positive).unwrap();
        assert_eq!(w.values(), &[1, 2, 3]);
        assert_eq!(w.pairwise_sums().collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn certificate_json() {
        let c = Certificate {
            outcome: Outcome::Absent,
            universe: Universe { lo: 1, hi: 8 },
            examined: 12,
            elapsed: Duration::from_millis(3),
        };
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"outcome":"absent","witness":null,"universe":[1,8],"examined":12}"#
        );
    }

    proptest! {
        #[test]
        fn json_round_trip(n in 1u32..80, raw in proptest::collection::vec(1i64..160, 0..40)) {
            let members: Vec<i64> = raw.into_iter().filter(|&v| v <= 2 * i64::from(n)).collect();
            let a = SumSet::from_members(n, members.clone()).unwrap();
            let back: SumSet = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(&back, &a);
            let mut sorted = members;
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(a.len(), sorted.len());
        }
    }
}
