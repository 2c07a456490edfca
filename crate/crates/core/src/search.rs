//! Witness verification and exhaustive witness search.
//!
//! A witness for `A` is a `k`-clique in the *sum graph*: vertices are the
//! integers of the candidate universe, and `u`–`v` is an edge iff `u != v`
//! and `u + v ∈ A`. Two non-positive integers can never be adjacent (their
//! sum is not in `A ⊆ {1..2n}`), so the "at most one non-positive value"
//! constraint of integer mode is enforced by the graph itself.
//!
//! The clique search visits vertices in ascending order, which makes the
//! first clique found the lexicographically smallest sorted tuple.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::sumset::{Certificate, Mode, Outcome, SumSet, Universe, Witness};

/// Interval containing every value of every valid witness for any
/// `A ⊆ {1..2n}`.
///
/// Integer mode: `b_2 <= n - 1` because `b_2 + b_3 <= 2n` with `b_3 > b_2`;
/// then `b_1 >= 1 - b_2 >= 2 - n`, and `b_k <= 2n - b_{k-1} <= 2n - k + 2`.
/// Positive mode: `[1, 2n - k + 1]`. The interval may be empty.
pub fn candidate_universe(n: u32, k: usize, mode: Mode) -> Result<Universe> {
    if k < 3 {
        return Err(Error::InvalidArity(k));
    }
    if n == 0 {
        return Err(Error::InvalidSet("n must be positive".into()));
    }
    let n = i64::from(n);
    let k = k as i64;
    Ok(match mode {
        Mode::Integer => Universe { lo: 2 - n, hi: 2 * n - k + 2 },
        Mode::Positive => Universe { lo: 1, hi: 2 * n - k + 1 },
    })
}

/// True iff every pairwise sum of `w` is a member of `a`.
pub fn verify_witness(a: &SumSet, w: &Witness) -> bool {
    w.pairwise_sums().all(|s| a.contains(s))
}

/// Limits for [`find_witness_with`].
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Refuse universes with more vertices than this.
    pub max_universe: usize,
    /// Abort with [`Error::BudgetExceeded`] after this many search nodes.
    pub max_nodes: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_universe: 1 << 16, max_nodes: None }
    }
}

/// Decides whether `a` has a `k`-witness in the given mode.
///
/// Returns the lexicographically smallest witness, or an exhaustive absence
/// over [`candidate_universe`].
pub fn find_witness(a: &SumSet, k: usize, mode: Mode) -> Result<Certificate> {
    find_witness_with(a, k, mode, &SearchOptions::default())
}

pub fn find_witness_with(
    a: &SumSet,
    k: usize,
    mode: Mode,
    opts: &SearchOptions,
) -> Result<Certificate> {
    let start = Instant::now();
    let universe = candidate_universe(a.n(), k, mode)?;
    if universe.len() > opts.max_universe {
        return Err(Error::BudgetExceeded(format!(
            "universe of {} values exceeds cap {}",
            universe.len(),
            opts.max_universe
        )));
    }
    let graph = SumGraph::build(universe, a);
    let mut found = None;
    let stats = graph.cliques(k, opts.max_nodes, |clique| {
        found = Some(clique.to_vec());
        true
    });
    if stats.budget_hit {
        return Err(Error::BudgetExceeded(format!(
            "search stopped after {} nodes",
            stats.nodes
        )));
    }
    let outcome = match found {
        Some(idx) => {
            let values = idx.iter().map(|&i| graph.value(i)).collect();
            let w = Witness::new(values, mode)?;
            debug_assert!(verify_witness(a, &w));
            Outcome::Found(w)
        }
        None => Outcome::Absent,
    };
    Ok(Certificate { outcome, universe, examined: stats.nodes, elapsed: start.elapsed() })
}

/// Every witness of `a`, in lexicographic order. Intended for debugging and
/// small instances; the output can be large.
pub fn enumerate_witnesses(a: &SumSet, k: usize, mode: Mode) -> Result<Vec<Witness>> {
    let universe = candidate_universe(a.n(), k, mode)?;
    let graph = SumGraph::build(universe, a);
    let mut out = Vec::new();
    graph.cliques(k, None, |clique| {
        let values = clique.iter().map(|&i| graph.value(i)).collect();
        out.push(Witness::new(values, mode).expect("clique is a witness"));
        false
    });
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CliqueStats {
    pub nodes: u64,
    pub budget_hit: bool,
}

/// Sum graph over a universe, one adjacency bit-row per vertex.
pub(crate) struct SumGraph {
    lo: i64,
    len: usize,
    words: usize,
    adj: Vec<u64>,
}

impl SumGraph {
    pub(crate) fn build(universe: Universe, a: &SumSet) -> Self {
        let len = universe.len();
        let words = len.div_ceil(64).max(1);
        let mut adj = vec![0u64; len * words];
        let members = a.members();
        for u in 0..len {
            let uv = universe.lo + u as i64;
            let row = &mut adj[u * words..(u + 1) * words];
            for &s in &members {
                let vv = s - uv;
                if vv != uv && universe.contains(vv) {
                    let v = (vv - universe.lo) as usize;
                    row[v / 64] |= 1 << (v % 64);
                }
            }
        }
        SumGraph { lo: universe.lo, len, words, adj }
    }

    #[inline]
    pub(crate) fn value(&self, idx: usize) -> i64 {
        self.lo + idx as i64
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    /// Vertices of the (k-1)-core: iteratively drop vertices of degree < k-1.
    fn core(&self, k: usize) -> Vec<u64> {
        let mut alive = vec![0u64; self.words];
        for v in 0..self.len {
            alive[v / 64] |= 1 << (v % 64);
        }
        loop {
            let mut changed = false;
            for v in 0..self.len {
                if alive[v / 64] >> (v % 64) & 1 == 0 {
                    continue;
                }
                let deg: u32 =
                    self.row(v).iter().zip(&alive).map(|(r, a)| (r & a).count_ones()).sum();
                if (deg as usize) + 1 < k {
                    alive[v / 64] &= !(1 << (v % 64));
                    changed = true;
                }
            }
            if !changed {
                return alive;
            }
        }
    }

    /// Greedy colouring of `p`; the number of colours bounds the clique size.
    fn colour_bound(&self, p: &[u64], scratch: &mut [u64], q: &mut [u64], cap: usize) -> usize {
        scratch.copy_from_slice(p);
        let mut colours = 0;
        while scratch.iter().any(|&w| w != 0) {
            colours += 1;
            if colours >= cap {
                return colours;
            }
            q.copy_from_slice(scratch);
            while let Some(v) = first_bit(q) {
                q[v / 64] &= !(1 << (v % 64));
                scratch[v / 64] &= !(1 << (v % 64));
                for (qw, rw) in q.iter_mut().zip(self.row(v)) {
                    *qw &= !rw;
                }
            }
        }
        colours
    }

    /// Enumerates `k`-cliques in ascending lexicographic order, calling
    /// `visit` on each (sorted vertex indices). `visit` returns true to stop.
    pub(crate) fn cliques<F>(&self, k: usize, max_nodes: Option<u64>, mut visit: F) -> CliqueStats
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut stats = CliqueStats::default();
        if self.len < k {
            return stats;
        }
        let mut levels = vec![0u64; (k + 1) * self.words];
        levels[..self.words].copy_from_slice(&self.core(k));
        let mut chosen = Vec::with_capacity(k);
        let mut scratch = vec![0u64; 2 * self.words];
        let (s1, s2) = scratch.split_at_mut(self.words);
        let mut ctx = Dfs {
            graph: self,
            levels: &mut levels,
            chosen: &mut chosen,
            scratch: s1,
            q: s2,
            stats: &mut stats,
            max_nodes,
        };
        ctx.run(0, k, &mut visit);
        stats
    }
}

struct Dfs<'a> {
    graph: &'a SumGraph,
    levels: &'a mut [u64],
    chosen: &'a mut Vec<usize>,
    scratch: &'a mut [u64],
    q: &'a mut [u64],
    stats: &'a mut CliqueStats,
    max_nodes: Option<u64>,
}

impl Dfs<'_> {
    /// Returns true when the search must stop (visitor asked, or budget hit).
    fn run<F: FnMut(&[usize]) -> bool>(&mut self, depth: usize, need: usize, visit: &mut F) -> bool {
        let w = self.graph.words;
        let base = depth * w;
        let mut avail: usize =
            self.levels[base..base + w].iter().map(|x| x.count_ones() as usize).sum();
        if avail < need {
            return false;
        }
        if need >= 3
            && self.graph.colour_bound(&self.levels[base..base + w], self.scratch, self.q, need)
                < need
        {
            return false;
        }
        // Deeper levels are written by children only, so this level stays intact.
        for wi in 0..w {
            let mut word = self.levels[base + wi];
            while word != 0 {
                if avail < need {
                    return false;
                }
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                avail -= 1;
                let u = wi * 64 + b;
                self.stats.nodes += 1;
                if let Some(limit) = self.max_nodes {
                    if self.stats.nodes > limit {
                        self.stats.budget_hit = true;
                        return true;
                    }
                }
                self.chosen.push(u);
                let stop = if need == 1 {
                    visit(self.chosen)
                } else {
                    let row = self.graph.row(u);
                    for i in 0..w {
                        let above = match i.cmp(&wi) {
                            std::cmp::Ordering::Less => 0,
                            std::cmp::Ordering::Equal if b == 63 => 0,
                            std::cmp::Ordering::Equal => !0u64 << (b + 1),
                            std::cmp::Ordering::Greater => !0,
                        };
                        self.levels[base + w + i] = self.levels[base + i] & row[i] & above;
                    }
                    self.run(depth + 1, need - 1, visit)
                };
                self.chosen.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn first_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, m: &[i64]) -> SumSet {
        SumSet::from_members(n, m.iter().copied()).unwrap()
    }

    /// Naive enumeration of increasing k-tuples over [lo, hi].
    fn brute(a: &SumSet, k: usize, mode: Mode, lo: i64, hi: i64) -> Option<Vec<i64>> {
        fn rec(a: &SumSet, k: usize, lo: i64, hi: i64, cur: &mut Vec<i64>) -> bool {
            if cur.len() == k {
                return true;
            }
            let start = cur.last().map_or(lo, |&x| x + 1);
            for v in start..=hi {
                if cur.iter().all(|&c| a.contains(c + v)) {
                    cur.push(v);
                    if rec(a, k, lo, hi, cur) {
                        return true;
                    }
                    cur.pop();
                }
            }
            false
        }
        let lo = if mode == Mode::Positive { lo.max(1) } else { lo };
        let mut cur = Vec::new();
        rec(a, k, lo, hi, &mut cur).then_some(cur)
    }

    #[test]
    fn universe_examples() {
        let u = candidate_universe(5, 3, Mode::Positive).unwrap();
        assert_eq!((u.lo, u.hi), (1, 8));
        let u = candidate_universe(5, 3, Mode::Integer).unwrap();
        assert_eq!((u.lo, u.hi), (-3, 9));
        let u = candidate_universe(1, 3, Mode::Positive).unwrap();
        assert_eq!((u.lo, u.hi), (1, 0));
        assert!(u.is_empty());
        assert_eq!(candidate_universe(5, 2, Mode::Integer), Err(Error::InvalidArity(2)));
    }

    /// Every value of every witness found by an oversized scan over
    /// [-20, 20] for n = 5, k = 3 lies inside the universe, and the
    /// universe endpoints are attained.
    #[test]
    fn universe_is_tight_at_n5_k3() {
        for mode in [Mode::Integer, Mode::Positive] {
            let full = SumSet::full(5).unwrap();
            let mut lo = i64::MAX;
            let mut hi = i64::MIN;
            for a in -20i64..=20 {
                for b in a + 1..=20 {
                    for c in b + 1..=20 {
                        if mode == Mode::Positive && a < 1 {
                            continue;
                        }
                        if full.contains(a + b) && full.contains(a + c) && full.contains(b + c) {
                            lo = lo.min(a);
                            hi = hi.max(c);
                        }
                    }
                }
            }
            let u = candidate_universe(5, 3, mode).unwrap();
            assert_eq!((lo, hi), (u.lo, u.hi), "{mode}");
        }
    }

    #[test]
    fn verify_examples() {
        let a = set(6, &[1, 3, 5, 7, 9, 11, 2, 4, 8]);
        let w = Witness::new(vec![-1, 2, 3, 5, 6], Mode::Integer).unwrap();
        assert!(verify_witness(&a, &w));
        let w = Witness::new(vec![0, 1, 2], Mode::Integer).unwrap();
        assert!(verify_witness(&set(2, &[1, 2, 3]), &w));
        assert!(!verify_witness(&set(3, &[1, 3, 5]), &w));
    }

    #[test]
    fn find_examples() {
        let a = set(2, &[1, 2, 3, 4]);
        let c = find_witness(&a, 3, Mode::Integer).unwrap();
        assert_eq!(c.witness().unwrap().values(), &[0, 1, 2]);
        let c = find_witness(&a, 3, Mode::Positive).unwrap();
        assert_eq!(c.outcome, Outcome::Absent);
        assert_eq!((c.universe.lo, c.universe.hi), (1, 2));
        for n in 1..=12 {
            let odds = SumSet::odds(n).unwrap();
            for k in 3..=5 {
                for mode in [Mode::Integer, Mode::Positive] {
                    assert!(!find_witness(&odds, k, mode).unwrap().is_found());
                }
            }
        }
        assert_eq!(find_witness(&a, 2, Mode::Integer).unwrap_err(), Error::InvalidArity(2));
    }

    #[test]
    fn budget_is_enforced() {
        let a = SumSet::full(20).unwrap();
        let opts = SearchOptions { max_nodes: Some(2), ..Default::default() };
        assert!(matches!(
            find_witness_with(&a, 4, Mode::Integer, &opts),
            Err(Error::BudgetExceeded(_))
        ));
        let opts = SearchOptions { max_universe: 10, ..Default::default() };
        assert!(matches!(
            find_witness_with(&a, 4, Mode::Integer, &opts),
            Err(Error::BudgetExceeded(_))
        ));
    }

    /// Exhaustive agreement with a naive scan over [-4n, 4n] for n <= 4,
    /// k in {3, 4}; the n = 5 sweep lives in the integration tests.
    #[test]
    fn agrees_with_brute_force_small() {
        for n in 1..=4u32 {
            for mask in 0u64..(1 << (2 * n)) {
                let a = SumSet::from_mask(n, mask).unwrap();
                for k in 3..=4 {
                    for mode in [Mode::Integer, Mode::Positive] {
                        let got = find_witness(&a, k, mode).unwrap();
                        let want = brute(&a, k, mode, -4 * n as i64, 4 * n as i64);
                        assert_eq!(got.witness().map(|w| w.values().to_vec()), want);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_lists_all() {
        let a = SumSet::full(3).unwrap();
        let all = enumerate_witnesses(&a, 3, Mode::Positive).unwrap();
        // positive triples with all sums in [1, 6]
        let mut want = Vec::new();
        for x in 1..=6 {
            for y in x + 1..=6 {
                for z in y + 1..=6 {
                    if y + z <= 6 {
                        want.push(vec![x, y, z]);
                    }
                }
            }
        }
        let got: Vec<Vec<i64>> = all.iter().map(|w| w.values().to_vec()).collect();
        assert_eq!(got, want);
    }
}
