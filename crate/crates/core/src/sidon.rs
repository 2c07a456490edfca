//! Sidon and weak Sidon predicates, Sidon set constructions, and extraction
//! of pairwise-disjoint representations of a repeated difference.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};

/// True iff all differences `b - a` (`a < b` in `set`) are distinct.
///
/// Duplicated entries in `set` are ignored.
pub fn is_sidon(set: &[i64]) -> bool {
    let v = normalised(set);
    let mut seen = HashSet::with_capacity(v.len() * v.len() / 2);
    for (i, &a) in v.iter().enumerate() {
        for &b in &v[i + 1..] {
            if !seen.insert(b - a) {
                return false;
            }
        }
    }
    true
}

/// True iff no four distinct elements `a < b < c < d` satisfy `a + d = b + c`.
pub fn is_weak_sidon(set: &[i64]) -> bool {
    weak_quadruple(set).is_none()
}

/// Lexicographically smallest `(a, b, c, d)` with `a < b < c < d` in `set`
/// and `a + d = b + c`.
pub fn weak_quadruple(set: &[i64]) -> Option<[i64; 4]> {
    let v = normalised(set);
    let members: HashSet<i64> = v.iter().copied().collect();
    for (i, &a) in v.iter().enumerate() {
        for (j, &b) in v.iter().enumerate().skip(i + 1) {
            for &c in &v[j + 1..] {
                let d = b + c - a;
                if members.contains(&d) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

fn normalised(set: &[i64]) -> Vec<i64> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SidonMethod {
    /// Mian–Chowla: scan upwards, keep each integer that preserves the property.
    Greedy,
    /// Erdős–Turán: `{2pi + (i² mod p) + 1 : 0 <= i < p}`.
    Modular,
}

impl std::str::FromStr for SidonMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greedy" => Ok(SidonMethod::Greedy),
            "modular" => Ok(SidonMethod::Modular),
            other => Err(Error::PreconditionViolation(format!("unknown method {other:?}"))),
        }
    }
}

/// A Sidon subset of `[1, limit]`.
///
/// The modular construction uses the largest prime `p` with `2p² <= limit`;
/// its largest element is `2p² - p`, so it always fits. When no prime
/// qualifies (`limit < 8`) the greedy scan is used instead.
pub fn build_sidon(limit: u64, method: SidonMethod) -> Result<Vec<i64>> {
    if limit == 0 {
        return Err(Error::PreconditionViolation("limit must be positive".into()));
    }
    match method {
        SidonMethod::Greedy => Ok(mian_chowla(limit as i64)),
        SidonMethod::Modular => match largest_prime_with_room(limit) {
            Some(p) => {
                let p = p as i64;
                let mut out: Vec<i64> = (0..p)
                    .map(|i| 2 * p * i + (i * i) % p + 1)
                    .filter(|&x| x <= limit as i64)
                    .collect();
                out.sort_unstable();
                Ok(out)
            }
            None => Ok(mian_chowla(limit as i64)),
        },
    }
}

fn mian_chowla(limit: i64) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::new();
    let mut diffs: HashSet<i64> = HashSet::new();
    for x in 1..=limit {
        let new: Vec<i64> = out.iter().map(|&a| x - a).collect();
        // new differences are distinct among themselves since `out` is a set
        if new.iter().all(|d| !diffs.contains(d)) {
            diffs.extend(new);
            out.push(x);
        }
    }
    out
}

fn largest_prime_with_room(limit: u64) -> Option<u64> {
    let mut p = ((limit / 2) as f64).sqrt() as u64 + 1;
    while p >= 2 {
        if 2 * p * p <= limit && is_prime(p) {
            return Some(p);
        }
        p -= 1;
    }
    None
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Pairwise-disjoint pairs `(x, x + m)` inside a set, all with the same `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DifferenceFamily {
    pub m: i64,
    /// Sorted by start.
    pub pairs: Vec<(i64, i64)>,
}

impl DifferenceFamily {
    pub fn s(&self) -> usize {
        self.pairs.len()
    }

    pub fn starts(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn ends(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

/// Disjoint representations of a fixed difference `m`: every maximal chain
/// `x, x + m, x + 2m, ...` inside `set` contributes its pairs
/// `(x, x+m), (x+2m, x+3m), ...`, i.e. `⌊L/2⌋` pairs from a chain of `L`.
pub fn disjoint_representations(set: &[i64], m: i64) -> DifferenceFamily {
    let v = normalised(set);
    let members: HashSet<i64> = v.iter().copied().collect();
    let mut pairs = Vec::new();
    if m > 0 {
        for &x in &v {
            if members.contains(&(x - m)) {
                continue;
            }
            let mut cur = x;
            while members.contains(&cur) && members.contains(&(cur + m)) {
                pairs.push((cur, cur + m));
                cur += 2 * m;
            }
        }
    }
    pairs.sort_unstable();
    DifferenceFamily { m, pairs }
}

/// Number of disjoint representations for every positive difference present.
pub fn representation_counts(set: &[i64]) -> BTreeMap<i64, usize> {
    let v = normalised(set);
    let diffs: std::collections::BTreeSet<i64> = v
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| v[i + 1..].iter().map(move |&b| b - a))
        .collect();
    diffs.into_iter().map(|m| (m, disjoint_representations(&v, m).s())).collect()
}

/// The difference with the most pairwise-disjoint representations in an
/// even set; ties go to the smallest difference.
pub fn max_disjoint_representations(evens: &[i64]) -> Result<DifferenceFamily> {
    let v = normalised(evens);
    if v.len() < 2 {
        return Err(Error::DegenerateInput(format!("need at least two elements, got {}", v.len())));
    }
    if let Some(x) = v.iter().find(|x| *x % 2 != 0) {
        return Err(Error::PreconditionViolation(format!("{x} is not even")));
    }
    let counts = representation_counts(&v);
    let (&m, _) = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .expect("at least one difference");
    Ok(disjoint_representations(&v, m))
}
