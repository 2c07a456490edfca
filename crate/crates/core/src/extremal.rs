//! Exact thresholds at small `n` and a randomized hunt for large
//! witness-free sets.
//!
//! Having a witness is preserved under supersets, so the witness-free sets
//! are exactly the subsets of `{1..2n}` that contain no *sum mask* (the set
//! of pairwise sums of a candidate witness). Only inclusion-minimal masks
//! matter. Sets are `u64` bitmasks here, bit `i` standing for `i + 1`, which
//! limits this module to `2n <= 64`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::{candidate_universe, find_witness, SumGraph};
use crate::sumset::{Mode, SumSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Every subset, largest sizes first.
    Exhaustive,
    /// Russian-doll branch and bound over the mask hypergraph.
    BranchAndBound,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::BranchAndBound => "branch-and-bound",
        })
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "branch-and-bound" | "bnb" => Ok(Strategy::BranchAndBound),
            _ => Err(Error::InvalidSet(format!("unknown strategy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ExtremalOptions {
    /// Largest `2n` accepted by [`Strategy::Exhaustive`].
    pub max_exhaustive_width: u32,
    /// Largest `2n` accepted by [`Strategy::BranchAndBound`] (at most 64).
    pub max_bnb_width: u32,
    pub max_nodes: Option<u64>,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions { max_exhaustive_width: 24, max_bnb_width: 40, max_nodes: None }
    }
}

/// The sum masks of every candidate witness for `{1..2n}`.
#[derive(Debug, Clone)]
pub struct MaskFamily {
    pub width: u32,
    /// Number of candidate witnesses.
    pub witnesses: u64,
    /// Distinct masks.
    pub distinct: Vec<u64>,
    /// Inclusion-minimal masks, by popcount then value.
    pub minimal: Vec<u64>,
}

impl MaskFamily {
    /// True iff the set (as a bitmask) contains no witness.
    pub fn is_free(&self, set: u64) -> bool {
        !self.minimal.iter().any(|&m| set & m == m)
    }
}

fn check_width(n: u32) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidSet("n must be positive".into()));
    }
    if n > 32 {
        return Err(Error::OutOfRange(format!("2n = {} exceeds 64", 2 * u64::from(n))));
    }
    Ok(2 * n)
}

/// Builds the mask family for `(n, k, mode)`.
pub fn sum_masks(n: u32, k: usize, mode: Mode) -> Result<MaskFamily> {
    let width = check_width(n)?;
    let universe = candidate_universe(n, k, mode)?;
    let full = SumSet::full(n)?;
    let mut distinct = HashSet::new();
    let mut witnesses = 0u64;
    if !universe.is_empty() {
        let graph = SumGraph::build(universe, &full);
        let mut values = vec![0i64; k];
        graph.cliques(k, None, |clique| {
            for (slot, &i) in values.iter_mut().zip(clique) {
                *slot = graph.value(i);
            }
            let mut mask = 0u64;
            for i in 0..k {
                for j in i + 1..k {
                    mask |= 1 << (values[i] + values[j] - 1);
                }
            }
            distinct.insert(mask);
            witnesses += 1;
            false
        });
    }
    let mut distinct: Vec<u64> = distinct.into_iter().collect();
    distinct.sort_unstable_by_key(|&m| (m.count_ones(), m));
    let minimal = minimal_masks(&distinct);
    Ok(MaskFamily { width, witnesses, distinct, minimal })
}

/// Inclusion-minimal members of `masks`, ordered by popcount then value.
pub fn minimal_masks(masks: &[u64]) -> Vec<u64> {
    let mut sorted = masks.to_vec();
    sorted.sort_unstable_by_key(|&m| (m.count_ones(), m));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::new();
    let mut lookup: HashSet<u64> = HashSet::new();
    for m in sorted {
        let dominated = if (1usize << m.count_ones()) < kept.len() {
            // walk proper submasks
            let mut sub = (m - 1) & m;
            let mut hit = false;
            while sub != 0 {
                if lookup.contains(&sub) {
                    hit = true;
                    break;
                }
                sub = (sub - 1) & m;
            }
            hit
        } else {
            kept.iter().any(|&k| k & m == k)
        };
        if !dominated {
            kept.push(m);
            lookup.insert(m);
        }
    }
    kept
}

fn mask_to_set(n: u32, mask: u64) -> SumSet {
    SumSet::from_mask(n, mask).expect("mask fits width")
}

/// How a threshold was established.
#[derive(Debug, Clone, Serialize)]
pub struct Attestation {
    pub strategy: Strategy,
    pub nodes: u64,
    pub witnesses: u64,
    pub distinct_masks: usize,
    pub minimal_masks: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ThresholdResult {
    pub n: u32,
    pub k: usize,
    pub mode: Mode,
    /// `|extremal_set| - n + 1`.
    pub threshold: i64,
    /// Lexicographically smallest witness-free set of maximum size.
    pub extremal_set: SumSet,
    /// Set when `n + threshold > 2n`, i.e. no set is large enough to meet
    /// the defining hypothesis.
    pub vacuous_above: bool,
    pub attestation: Attestation,
}

struct Budget {
    nodes: u64,
    max: Option<u64>,
}

impl Budget {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.max {
            Some(max) if self.nodes > max => {
                Err(Error::BudgetExceeded(format!("stopped after {max} nodes")))
            }
            _ => Ok(()),
        }
    }
}

pub fn max_witnessfree(n: u32, k: usize, mode: Mode, strategy: Strategy) -> Result<ThresholdResult> {
    max_witnessfree_with(n, k, mode, strategy, &ExtremalOptions::default())
}

pub fn max_witnessfree_with(
    n: u32,
    k: usize,
    mode: Mode,
    strategy: Strategy,
    opts: &ExtremalOptions,
) -> Result<ThresholdResult> {
    let width = check_width(n)?;
    let cap = match strategy {
        Strategy::Exhaustive => opts.max_exhaustive_width,
        Strategy::BranchAndBound => opts.max_bnb_width.min(64),
    };
    if width > cap {
        return Err(Error::BudgetExceeded(format!("{strategy} is capped at 2n <= {cap}, got {width}")));
    }
    let family = sum_masks(n, k, mode)?;
    let mut budget = Budget { nodes: 0, max: opts.max_nodes };
    let best = match strategy {
        Strategy::Exhaustive => exhaustive(&family, &mut budget)?,
        Strategy::BranchAndBound => branch_and_bound(&family, &mut budget)?,
    };
    let size = i64::from(best.count_ones());
    let threshold = size - i64::from(n) + 1;
    Ok(ThresholdResult {
        n,
        k,
        mode,
        threshold,
        extremal_set: mask_to_set(n, best),
        vacuous_above: threshold > i64::from(n),
        attestation: Attestation {
            strategy,
            nodes: budget.nodes,
            witnesses: family.witnesses,
            distinct_masks: family.distinct.len(),
            minimal_masks: family.minimal.len(),
        },
    })
}

/// `g_k(n)` (integer mode) or `h_k(n)` (positive mode).
pub fn exact_threshold(n: u32, k: usize, mode: Mode) -> Result<i64> {
    Ok(max_witnessfree(n, k, mode, Strategy::BranchAndBound)?.threshold)
}

/// [`max_witnessfree`] for each `n` in the range, rows computed in parallel.
pub fn threshold_table(
    k: usize,
    mode: Mode,
    ns: std::ops::RangeInclusive<u32>,
    strategy: Strategy,
) -> Result<Vec<ThresholdResult>> {
    ns.collect::<Vec<_>>()
        .into_par_iter()
        .map(|n| max_witnessfree(n, k, mode, strategy))
        .collect()
}

/// Combinations of `size` bits out of `width`, lexicographic in the sorted
/// member list; first witness-free one wins.
fn exhaustive(family: &MaskFamily, budget: &mut Budget) -> Result<u64> {
    let w = family.width as usize;
    for size in (0..=w).rev() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            budget.tick()?;
            let set = idx.iter().fold(0u64, |acc, &i| acc | 1 << i);
            if family.is_free(set) {
                return Ok(set);
            }
            let mut i = size;
            let advanced = loop {
                if i == 0 {
                    break false;
                }
                i -= 1;
                if idx[i] < w - size + i {
                    idx[i] += 1;
                    for j in i + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
    Ok(0)
}

struct Doll<'a> {
    by_vertex: Vec<Vec<u64>>,
    /// `c[i]`: maximum free-set size inside vertices `i..width`.
    c: Vec<u32>,
    budget: &'a mut Budget,
}

impl Doll<'_> {
    /// Candidates still addable after adding `v` to `cur`.
    fn restrict(&self, cur: u64, v: usize, cand: u64) -> u64 {
        let with = cur | 1 << v;
        let mut cand = cand & !(1 << v);
        for &m in &self.by_vertex[v] {
            let rest = m & !with;
            if rest.count_ones() == 1 {
                cand &= !rest;
            }
        }
        cand
    }

    /// Tries to extend `cur` to more than `best` members using `cand`.
    fn grow(&mut self, cur: u64, cand: u64, best: u32) -> Result<Option<u64>> {
        self.budget.tick()?;
        let size = cur.count_ones();
        if cand == 0 {
            return Ok((size > best).then_some(cur));
        }
        if size + cand.count_ones() <= best {
            return Ok(None);
        }
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            if size + rest.count_ones() <= best || size + self.c[u] <= best {
                return Ok(None);
            }
            rest &= !(1 << u);
            let next = self.restrict(cur, u, rest);
            if let Some(found) = self.grow(cur | 1 << u, next, best)? {
                return Ok(Some(found));
            }
        }
        Ok((size > best).then_some(cur))
    }

    /// First (lexicographically smallest) free set of exactly `target`
    /// members extending `cur`.
    fn lex_first(&mut self, cur: u64, cand: u64, target: u32) -> Result<Option<u64>> {
        self.budget.tick()?;
        let size = cur.count_ones();
        if size == target {
            return Ok(Some(cur));
        }
        let mut rest = cand;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            if size + rest.count_ones() < target || size + self.c[u] < target {
                return Ok(None);
            }
            rest &= !(1 << u);
            let next = self.restrict(cur, u, rest);
            if let Some(found) = self.lex_first(cur | 1 << u, next, target)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

fn branch_and_bound(family: &MaskFamily, budget: &mut Budget) -> Result<u64> {
    let w = family.width as usize;
    let mut by_vertex = vec![Vec::new(); w];
    for &m in &family.minimal {
        let mut bits = m;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            by_vertex[v].push(m);
            bits &= bits - 1;
        }
    }
    // singleton masks forbid a vertex outright
    let mut doll = Doll { by_vertex, c: vec![0; w + 1], budget };
    let all = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
    let banned = family.minimal.iter().filter(|m| m.count_ones() == 1).fold(0, |acc, m| acc | m);
    for i in (0..w).rev() {
        let best = doll.c[i + 1];
        doll.c[i] = best;
        if banned >> i & 1 == 1 {
            continue;
        }
        let suffix = all & !((1u64 << i) - 1) & !banned;
        let cand = doll.restrict(0, i, suffix);
        if doll.grow(1 << i, cand, best)?.is_some() {
            doll.c[i] = best + 1;
        }
    }
    let target = doll.c[0];
    if target == 0 {
        return Ok(0);
    }
    let found = doll.lex_first(0, all & !banned, target)?;
    Ok(found.expect("an optimum of the computed size exists"))
}

/// Periodic report from [`hunt_with_progress`].
#[derive(Debug, Clone, Serialize)]
pub struct HuntProgress {
    pub nodes: u64,
    pub restarts: u64,
    pub current_size: u32,
    pub best_size: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    /// A verified witness-free set with at least `n + target` members.
    pub found: Option<SumSet>,
    /// Largest witness-free set seen.
    pub best: SumSet,
    /// Mask inspections performed.
    pub nodes: u64,
    pub restarts: u64,
}

struct HuntState<'a> {
    masks: &'a [u64],
    by_vertex: Vec<Vec<u32>>,
    width: usize,
    set: u64,
    /// Members of each mask missing from `set`.
    deficit: Vec<u8>,
    nodes: u64,
}

impl HuntState<'_> {
    fn reset(&mut self, set: u64) {
        self.set = set;
        for (d, &m) in self.deficit.iter_mut().zip(self.masks) {
            *d = (m & !set).count_ones() as u8;
        }
        self.nodes += self.masks.len() as u64;
    }

    fn add(&mut self, v: usize) {
        self.set |= 1 << v;
        for &i in &self.by_vertex[v] {
            self.deficit[i as usize] -= 1;
        }
        self.nodes += self.by_vertex[v].len() as u64;
    }

    fn remove(&mut self, v: usize) {
        self.set &= !(1 << v);
        for &i in &self.by_vertex[v] {
            self.deficit[i as usize] += 1;
        }
        self.nodes += self.by_vertex[v].len() as u64;
    }

    fn addable(&mut self, v: usize) -> bool {
        self.nodes += self.by_vertex[v].len() as u64;
        self.by_vertex[v].iter().all(|&i| self.deficit[i as usize] >= 2)
    }

    /// Removes elements until no mask is fully present, never touching
    /// `keep`. Each step drops the member of a random violated mask that
    /// lies in the most violated masks.
    fn repair(&mut self, keep: u64, rng: &mut ChaCha8Rng) {
        let mut violated: Vec<u32> =
            (0..self.masks.len() as u32).filter(|&i| self.deficit[i as usize] == 0).collect();
        self.nodes += self.masks.len() as u64;
        let mut counts = vec![0u32; self.width];
        while !violated.is_empty() {
            counts.iter_mut().for_each(|c| *c = 0);
            for &i in &violated {
                let mut bits = self.masks[i as usize] & !keep;
                while bits != 0 {
                    counts[bits.trailing_zeros() as usize] += 1;
                    bits &= bits - 1;
                }
            }
            self.nodes += violated.len() as u64;
            let pick = self.masks[violated[rng.gen_range(0..violated.len())] as usize] & !keep;
            let mut options: Vec<usize> = Vec::new();
            let mut top = 0;
            let mut bits = pick;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                match counts[v].cmp(&top) {
                    std::cmp::Ordering::Greater => {
                        top = counts[v];
                        options.clear();
                        options.push(v);
                    }
                    std::cmp::Ordering::Equal => options.push(v),
                    std::cmp::Ordering::Less => {}
                }
            }
            let v = *options.choose(rng).expect("violated mask has a removable member");
            self.remove(v);
            violated.retain(|&i| self.masks[i as usize] >> v & 1 == 0);
        }
    }

    /// Adds every addable non-member, in random order.
    fn fill(&mut self, rng: &mut ChaCha8Rng) {
        let mut outside: Vec<usize> = (0..self.width).filter(|&v| self.set >> v & 1 == 0).collect();
        outside.shuffle(rng);
        for v in outside {
            if self.addable(v) {
                self.add(v);
            }
        }
    }
}

/// Searches for a witness-free `A ⊆ {1..2n}` with `|A| >= n + target`.
pub fn hunt(n: u32, k: usize, mode: Mode, target: u32, budget: u64, seed: u64) -> Result<Option<SumSet>> {
    Ok(hunt_with_progress(n, k, mode, target, budget, seed, |_| {})?.found)
}

/// [`hunt`] with a callback invoked on each restart and improvement.
///
/// Randomized greedy descent from the full set (witness-guided removals),
/// then iterated local search: force a random outsider in, repair, refill,
/// and fall back to the best set when the walk drifts more than one below
/// it. Stops once `budget` mask inspections are spent.
pub fn hunt_with_progress<F: FnMut(&HuntProgress)>(
    n: u32,
    k: usize,
    mode: Mode,
    target: u32,
    budget: u64,
    seed: u64,
    mut progress: F,
) -> Result<HuntReport> {
    if target == 0 {
        return Err(Error::PreconditionViolation("target must be at least 1".into()));
    }
    let width = check_width(n)? as usize;
    let family = sum_masks(n, k, mode)?;
    let goal = n + target;
    let mut by_vertex = vec![Vec::new(); width];
    for (i, &m) in family.minimal.iter().enumerate() {
        let mut bits = m;
        while bits != 0 {
            by_vertex[bits.trailing_zeros() as usize].push(i as u32);
            bits &= bits - 1;
        }
    }
    let full = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    let mut st = HuntState {
        masks: &family.minimal,
        by_vertex,
        width,
        set: 0,
        deficit: vec![0; family.minimal.len()],
        nodes: 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0u64;
    let mut restarts = 0u64;
    let stale_limit = 50 * width as u64;
    'restart: while st.nodes < budget {
        st.reset(full);
        st.repair(0, &mut rng);
        st.fill(&mut rng);
        let mut local_best = st.set;
        let mut stale = 0u64;
        loop {
            let size = st.set.count_ones();
            if size > best.count_ones() {
                best = st.set;
                progress(&HuntProgress { nodes: st.nodes, restarts, current_size: size, best_size: size });
            }
            if size >= goal {
                let candidate = mask_to_set(n, st.set);
                if !find_witness(&candidate, k, mode)?.is_found() {
                    return Ok(HuntReport { found: Some(candidate), best: mask_to_set(n, best), nodes: st.nodes, restarts });
                }
                return Err(Error::InvalidConstruction(format!(
                    "hunt produced {candidate:?}, which has a witness"
                )));
            }
            if st.nodes >= budget {
                break 'restart;
            }
            if size > local_best.count_ones() {
                local_best = st.set;
                stale = 0;
            } else {
                stale += 1;
            }
            if stale > stale_limit {
                break;
            }
            if size + 1 < local_best.count_ones() {
                st.reset(local_best);
            }
            let outside = full & !st.set;
            if outside == 0 {
                break;
            }
            let pick = nth_bit(outside, rng.gen_range(0..outside.count_ones()));
            st.add(pick);
            st.repair(1 << pick, &mut rng);
            st.fill(&mut rng);
        }
        restarts += 1;
        progress(&HuntProgress {
            nodes: st.nodes,
            restarts,
            current_size: st.set.count_ones(),
            best_size: best.count_ones(),
        });
    }
    Ok(HuntReport { found: None, best: mask_to_set(n, best), nodes: st.nodes, restarts })
}

fn nth_bit(mut bits: u64, mut index: u32) -> usize {
    loop {
        let v = bits.trailing_zeros();
        if index == 0 {
            return v as usize;
        }
        bits &= bits - 1;
        index -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(n: u32, k: usize, mode: Mode) -> ThresholdResult {
        let a = max_witnessfree(n, k, mode, Strategy::Exhaustive).unwrap();
        let b = max_witnessfree(n, k, mode, Strategy::BranchAndBound).unwrap();
        assert_eq!(a.extremal_set, b.extremal_set, "n={n} k={k} {mode}");
        b
    }

    #[test]
    fn examples() {
        let r = both(3, 3, Mode::Integer);
        assert_eq!(r.extremal_set.len(), 3);
        assert!(!find_witness(&r.extremal_set, 3, Mode::Integer).unwrap().is_found());
        // {2, 3, 4} is also optimal; {1, 2, 4} is lexicographically first
        let r = both(2, 3, Mode::Integer);
        assert_eq!(r.extremal_set.members(), vec![1, 2, 4]);
        assert_eq!(r.threshold, 2);
        let other_optimum = SumSet::from_members(2, [2, 3, 4]).unwrap();
        assert!(!find_witness(&other_optimum, 3, Mode::Integer).unwrap().is_found());
        let r = both(5, 5, Mode::Integer);
        assert_eq!(r.extremal_set.members(), vec![1, 2, 3, 4, 5, 6, 8, 9, 10]);
        let point = SumSet::from_members(5, [1, 2, 4, 5, 6, 7, 8, 9, 10]).unwrap();
        assert!(!find_witness(&point, 5, Mode::Integer).unwrap().is_found());
        assert_eq!(r.threshold, 5);
        assert_eq!(exact_threshold(4, 3, Mode::Integer).unwrap(), 1);
        assert_eq!(exact_threshold(5, 4, Mode::Integer).unwrap(), 3);
        assert_eq!(exact_threshold(5, 3, Mode::Positive).unwrap(), 2);
    }

    #[test]
    fn table_rows_in_order() {
        let rows = threshold_table(3, Mode::Integer, 1..=8, Strategy::BranchAndBound).unwrap();
        let got: Vec<(u32, i64)> = rows.iter().map(|r| (r.n, r.threshold)).collect();
        assert_eq!(got, vec![(1, 2), (2, 2), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1), (8, 1)]);
    }

    #[test]
    fn vacuous_flag() {
        let r = both(1, 3, Mode::Integer);
        assert_eq!(r.extremal_set.len(), 2);
        assert!(r.vacuous_above);
        let r = both(2, 5, Mode::Positive);
        assert!(r.vacuous_above);
        assert!(!both(4, 3, Mode::Integer).vacuous_above);
    }

    #[test]
    fn strategies_agree() {
        for n in 1..=7 {
            for k in 3..=5 {
                for mode in [Mode::Integer, Mode::Positive] {
                    both(n, k, mode);
                }
            }
        }
    }

    /// The reduction to minimal masks does not change the answer.
    #[test]
    fn minimal_reduction_is_faithful() {
        for n in 2..=5 {
            for k in 3..=5 {
                for mode in [Mode::Integer, Mode::Positive] {
                    let fam = sum_masks(n, k, mode).unwrap();
                    let w = fam.width;
                    let best_raw = (0u64..1 << w)
                        .filter(|&s| !fam.distinct.iter().any(|&m| s & m == m))
                        .map(|s| s.count_ones())
                        .max()
                        .unwrap();
                    let best_min = (0u64..1 << w)
                        .filter(|&s| fam.is_free(s))
                        .map(|s| s.count_ones())
                        .max()
                        .unwrap();
                    assert_eq!(best_raw, best_min);
                    for s in 0u64..1 << w {
                        let set = SumSet::from_mask(n, s).unwrap();
                        assert_eq!(fam.is_free(s), !find_witness(&set, k, mode).unwrap().is_found());
                    }
                }
            }
        }
    }

    #[test]
    fn minimal_masks_basic() {
        assert_eq!(minimal_masks(&[0b111, 0b011, 0b110, 0b011]), vec![0b011, 0b110]);
        assert!(minimal_masks(&[]).is_empty());
    }

    #[test]
    fn budget_and_caps() {
        let opts = ExtremalOptions { max_nodes: Some(3), ..Default::default() };
        assert!(matches!(
            max_witnessfree_with(6, 3, Mode::Integer, Strategy::BranchAndBound, &opts),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            max_witnessfree(13, 3, Mode::Integer, Strategy::Exhaustive),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(sum_masks(33, 3, Mode::Integer), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn hunt_small() {
        let found = hunt(5, 5, Mode::Integer, 4, 1_000_000, 7).unwrap().unwrap();
        assert!(found.len() >= 9);
        assert!(!find_witness(&found, 5, Mode::Integer).unwrap().is_found());
        assert_eq!(hunt(3, 3, Mode::Integer, 2, 100_000, 7).unwrap(), None);
        assert!(matches!(hunt(3, 3, Mode::Integer, 0, 10, 1), Err(Error::PreconditionViolation(_))));
    }

    #[test]
    fn hunt_is_deterministic() {
        let run = |seed| {
            let mut log = Vec::new();
            let r = hunt_with_progress(6, 4, Mode::Integer, 5, 200_000, seed, |p| log.push(p.best_size)).unwrap();
            (r.best.members(), r.nodes, log)
        };
        assert_eq!(run(3), run(3));
    }
}
