//! Explicit witness constructions.
//!
//! Each builder checks its hypothesis on `A`, follows a fixed recipe to
//! produce a candidate tuple, and verifies it against `A` before returning.
//! Every pigeonhole choice is made deterministically, smallest values first.
//! Builders also return a JSON trace of the quantities they chose.

use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{eval_bound, BoundVariant};
use crate::error::{Error, Result};
use crate::search::verify_witness;
use crate::sidon::{max_disjoint_representations, representation_counts, weak_quadruple, DifferenceFamily};
use crate::sumset::{Mode, SumSet, Witness};

/// A verified witness together with an audit trace of the construction.
#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    pub witness: Witness,
    pub mode: Mode,
    pub trace: Value,
}

fn finish(a: &SumSet, values: Vec<i64>, mode: Mode, trace: Value) -> Result<Construction> {
    let witness = Witness::from_unsorted(values.clone(), mode)
        .map_err(|e| Error::InvalidConstruction(format!("{values:?}: {e}")))?;
    if !verify_witness(a, &witness) {
        return Err(Error::InvalidConstruction(format!(
            "{values:?} has a pairwise sum outside {a:?}"
        )));
    }
    Ok(Construction { witness, mode, trace })
}

fn require_size(a: &SumSet, extra: usize, what: &str) -> Result<()> {
    let n = a.n() as usize;
    if a.len() < n + extra {
        return Err(Error::HypothesisViolation(format!(
            "{what} needs |A| >= n + {extra} = {}, got {}",
            n + extra,
            a.len()
        )));
    }
    Ok(())
}

/// Integer 3-witness for `n >= 3`, `|A| >= n + 1`.
///
/// Some pair `{m, m+1}` with `m` odd lies in `A`. If every other member is
/// even then `{2, 4, 6} ⊆ A` and `(0, 2, 4)` works; otherwise another odd
/// `2j + 1 ∈ A` gives `(j, j + 1, m - j)` with sums `{2j+1, m, m+1}`.
pub fn construct_g3(a: &SumSet) -> Result<Construction> {
    let n = i64::from(a.n());
    if n < 3 {
        return Err(Error::HypothesisViolation(format!("n = {n} < 3")));
    }
    require_size(a, 1, "construct_g3")?;
    let m = (1..2 * n)
        .step_by(2)
        .find(|&m| a.contains(m) && a.contains(m + 1))
        .ok_or_else(|| Error::InvalidConstruction("no pair {m, m+1} despite |A| > n".into()))?;
    match a.iter().find(|&v| v % 2 == 1 && v != m) {
        None => finish(a, vec![0, 2, 4], Mode::Integer, json!({"m": m, "case": "evens"})),
        Some(odd) => {
            let j = (odd - 1) / 2;
            finish(a, vec![j, j + 1, m - j], Mode::Integer, json!({"m": m, "odd": odd, "j": j}))
        }
    }
}

/// Lexicographically smallest non-negative witness for every `A ⊆ {1..6}`
/// with `|A| >= 4`, keyed by membership mask (bit `i` is `i + 1`).
const NONNEG_BASE: [(u64, [i64; 3]); 22] = [
    (0b001111, [0, 1, 2]),
    (0b010111, [0, 1, 2]),
    (0b011011, [0, 1, 4]),
    (0b011101, [0, 1, 3]),
    (0b011110, [0, 2, 3]),
    (0b011111, [0, 1, 2]),
    (0b100111, [0, 1, 2]),
    (0b101011, [0, 2, 4]),
    (0b101101, [0, 1, 3]),
    (0b101110, [0, 2, 4]),
    (0b101111, [0, 1, 2]),
    (0b110011, [0, 1, 5]),
    (0b110101, [0, 1, 5]),
    (0b110110, [0, 2, 3]),
    (0b110111, [0, 1, 2]),
    (0b111001, [0, 1, 4]),
    (0b111010, [0, 2, 4]),
    (0b111011, [0, 1, 4]),
    (0b111100, [1, 2, 3]),
    (0b111101, [0, 1, 3]),
    (0b111110, [0, 2, 3]),
    (0b111111, [0, 1, 2]),
];

/// Integer 3-witness with all values `>= 0`, for `n >= 3`, `|A| >= n + 1`.
///
/// If `1 ∉ A`, shift `A` down by 2 (dropping 0), solve for `n - 1`, and add 1
/// to each value. If `1 ∈ A` and `{m, m+1} ⊆ A` for some `m >= 2`, return
/// `(0, 1, m)`. Otherwise `A = {1, 2, 4, ..., 2n}` and `(0, 2, 4)` works.
/// `n = 3` is a table lookup.
pub fn construct_g3_nonneg(a: &SumSet) -> Result<Construction> {
    let n = a.n();
    if n < 3 {
        return Err(Error::HypothesisViolation(format!("n = {n} < 3")));
    }
    require_size(a, 1, "construct_g3_nonneg")?;
    let mut cur = a.clone();
    let mut shifts = 0i64;
    let (base, case) = loop {
        if cur.n() == 3 {
            let mask = cur.to_mask().expect("n = 3 fits a word");
            let entry = NONNEG_BASE.iter().find(|(m, _)| *m == mask).ok_or_else(|| {
                Error::InvalidConstruction(format!("no base entry for {cur:?}"))
            })?;
            break (entry.1.to_vec(), "table");
        }
        if !cur.contains(1) {
            let shifted = cur.iter().map(|v| v - 2).filter(|&v| v != 0);
            cur = SumSet::from_members(cur.n() - 1, shifted)?;
            shifts += 1;
            continue;
        }
        let top = cur.upper();
        if let Some(m) = (2..top).find(|&m| cur.contains(m) && cur.contains(m + 1)) {
            break (vec![0, 1, m], "pair");
        }
        break (vec![0, 2, 4], "one-two-evens");
    };
    let values: Vec<i64> = base.iter().map(|b| b + shifts).collect();
    finish(a, values, Mode::Integer, json!({"shifts": shifts, "case": case, "base": base}))
}

/// Integer 4-witness for `n >= 3`, `|A| >= n + 3`.
///
/// Three even `a_1 < a_2 < a_3` have `{a_i, 2n+1-a_i} ⊆ A`; the half-sum
/// formulas give `b_1 + b_2 = a_1`, `b_1 + b_3 = a_2`, `b_2 + b_3 = a_3` and
/// the remaining sums `2n + 1 - a_i`. (`n = 2` cannot satisfy the size
/// hypothesis.)
pub fn construct_g4(a: &SumSet) -> Result<Construction> {
    let n = i64::from(a.n());
    if n < 3 {
        return Err(Error::HypothesisViolation(format!("n = {n} < 3")));
    }
    require_size(a, 3, "construct_g4")?;
    let picks: Vec<i64> = (2..=2 * n)
        .step_by(2)
        .filter(|&e| a.contains(e) && a.contains(2 * n + 1 - e))
        .take(3)
        .collect();
    let [a1, a2, a3] = picks[..] else {
        return Err(Error::InvalidConstruction(format!("only {} complementary pairs", picks.len())));
    };
    let b = vec![
        (a1 + a2 - a3) / 2,
        (a1 + a3 - a2) / 2,
        (a2 + a3 - a1) / 2,
        (4 * n + 2 - a1 - a2 - a3) / 2,
    ];
    finish(a, b, Mode::Integer, json!({"a": [a1, a2, a3]}))
}

fn half_sums(a1: i64, a2: i64, a3: i64) -> [i64; 3] {
    [(a1 + a2 - a3) / 2, (a1 + a3 - a2) / 2, (a2 + a3 - a1) / 2]
}

/// Integer 5-witness when every odd number up to `2n - 1` is in `A` and
/// `|A| >= n + 4`, using the four smallest even members.
pub fn construct_g5_allodds(a: &SumSet) -> Result<Construction> {
    let n = i64::from(a.n());
    if let Some(o) = (1..2 * n).step_by(2).find(|&o| !a.contains(o)) {
        return Err(Error::HypothesisViolation(format!("odd {o} missing from A")));
    }
    require_size(a, 4, "construct_g5_allodds")?;
    let evens = a.evens();
    let [a1, a2, a3, a4] = evens[..4] else { unreachable!("|A| >= n + 4 gives four evens") };
    let odd_top = 2 * n - 1;
    let (case, b) = if a2 + a3 <= 2 * n {
        let [b1, b2, b3] = half_sums(a1, a2, a3);
        let b4 = 1 - b1;
        (1, [b1, b2, b3, b4, a3 - b4])
    } else {
        let [b1, b2, b3] = half_sums(a2, a3, a4);
        let b5 = odd_top - b3;
        if a3 < 2 * n - 2 {
            (2, [b1, b2, b3, a2 + b3 - odd_top, b5])
        } else {
            (3, [b1, b2, b3, a1 + b3 - odd_top, b5])
        }
    };
    finish(a, b.to_vec(), Mode::Integer, json!({"a": [a1, a2, a3, a4], "case": case}))
}

/// Integers `c_1..c_k` (with `c_2..c_k` distinct and non-zero) such that every
/// subset sum containing `c_1` lies in the source even set, plus the
/// difference family chosen at each level (outermost first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvenChainSelection {
    /// Repeated difference at the outermost level.
    pub m: i64,
    pub starts: Vec<i64>,
    pub ends: Vec<i64>,
    pub c: Vec<i64>,
    pub levels: Vec<DifferenceFamily>,
}

impl EvenChainSelection {
    /// Witness values `c_1/2, c_1/2 + c_2, ..., c_1/2 + c_k` (unsorted).
    pub fn values(&self) -> Vec<i64> {
        let half = self.c[0] / 2;
        std::iter::once(half).chain(self.c[1..].iter().map(|c| half + c)).collect()
    }
}

fn normalise_evens(evens: &[i64]) -> Result<Vec<i64>> {
    let mut v = evens.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() {
        return Err(Error::PreconditionViolation("even set is empty".into()));
    }
    if let Some(x) = v.iter().find(|&&x| x < 2 || x % 2 != 0) {
        return Err(Error::PreconditionViolation(format!("{x} is not a positive even integer")));
    }
    Ok(v)
}

/// Whether `r >= bound_k(a_r - a_1)` holds for the even set; false when the
/// span is below 1 (a single element).
pub fn lemma_threshold_met(evens: &[i64], k: usize, variant: BoundVariant) -> Result<bool> {
    let v = normalise_evens(evens)?;
    let span = (v[v.len() - 1] - v[0]) as f64;
    if span < 1.0 {
        return Ok(false);
    }
    Ok(v.len() as f64 >= eval_bound(k, span, variant)?)
}

fn base_strict(v: &[i64]) -> Result<(Vec<i64>, DifferenceFamily)> {
    // disjoint pairs first, then any two representations with distinct starts
    let mut reps: Option<DifferenceFamily> = None;
    if v.len() >= 2 {
        let fam = max_disjoint_representations(v)?;
        if fam.s() >= 2 {
            reps = Some(DifferenceFamily { m: fam.m, pairs: fam.pairs[..2].to_vec() });
        }
    }
    if reps.is_none() {
        'outer: for &m in representation_counts(v).keys() {
            let pairs: Vec<(i64, i64)> = v
                .iter()
                .filter(|x| v.binary_search(&(*x + m)).is_ok())
                .map(|&x| (x, x + m))
                .take(2)
                .collect();
            if pairs.len() == 2 {
                reps = Some(DifferenceFamily { m, pairs });
                break 'outer;
            }
        }
    }
    let fam = reps.ok_or_else(|| {
        Error::StructureNotFound(format!("no difference repeats in {v:?} (half-set is Sidon)"))
    })?;
    let (s1, _) = fam.pairs[0];
    let (s2, _) = fam.pairs[1];
    Ok((vec![s2, s1 - s2, fam.m], fam))
}

fn base_weak(v: &[i64]) -> Result<(Vec<i64>, DifferenceFamily)> {
    let [a1, a2, a3, a4] = weak_quadruple(v).ok_or_else(|| {
        Error::StructureNotFound(format!("no a+d = b+c quadruple in {v:?} (half-set is weak Sidon)"))
    })?;
    let fam = DifferenceFamily { m: a2 - a1, pairs: vec![(a1, a2), (a3, a4)] };
    Ok((vec![a1, a2 - a1, a3 - a1], fam))
}

fn chain(v: &[i64], k: usize, variant: BoundVariant, levels: &mut Vec<DifferenceFamily>) -> Result<Vec<i64>> {
    if k == 3 {
        let (c, fam) = match variant {
            BoundVariant::Strict => base_strict(v)?,
            BoundVariant::Weak => base_weak(v)?,
        };
        levels.push(fam);
        return Ok(c);
    }
    if v.len() < 2 {
        return Err(Error::StructureNotFound(format!(
            "level k = {k}: {v:?} has no difference to repeat"
        )));
    }
    let fam = max_disjoint_representations(v)?;
    let starts = fam.starts();
    let m = fam.m;
    levels.push(fam);
    let mut c = chain(&starts, k - 1, variant, levels)?;
    c.push(m);
    Ok(c)
}

/// Selection of `c_1..c_k` for an even set, following the recursive
/// difference-repetition argument.
///
/// Base `k = 3`: strict variant takes a difference `m` with two
/// representations `(x_1, x_1 + m)`, `(x_2, x_2 + m)` and sets
/// `c = (x_2, x_1 - x_2, m)`; weak variant takes the lexicographically first
/// `a_1 < a_2 < a_3 < a_4` with `a_1 + a_4 = a_2 + a_3` and sets
/// `c = (a_1, a_2 - a_1, a_3 - a_1)`. Each inductive step takes the
/// difference with the most disjoint representations, recurses on their
/// starts, and appends the difference.
pub fn even_chain(evens: &[i64], k: usize, variant: BoundVariant) -> Result<EvenChainSelection> {
    if k < 3 {
        return Err(Error::InvalidArity(k));
    }
    let v = normalise_evens(evens)?;
    let mut levels = Vec::new();
    let c = chain(&v, k, variant, &mut levels)?;
    let tail = &c[1..];
    for (i, x) in tail.iter().enumerate() {
        if *x == 0 || tail[i + 1..].contains(x) {
            return Err(Error::InvalidConstruction(format!("c = {c:?} not distinct/non-zero")));
        }
    }
    let top = &levels[0];
    Ok(EvenChainSelection { m: top.m, starts: top.starts(), ends: top.ends(), c, levels })
}

/// `k`-witness inside an even set; integer mode for the strict variant,
/// positive mode for the weak variant.
///
/// Success is guaranteed when [`lemma_threshold_met`] holds; below the
/// threshold the builder still tries and may report
/// [`Error::StructureNotFound`].
pub fn construct_even_lemma(evens: &[i64], k: usize, variant: BoundVariant) -> Result<Construction> {
    if k < 3 {
        return Err(Error::InvalidArity(k));
    }
    let v = normalise_evens(evens)?;
    let threshold_met = lemma_threshold_met(&v, k, variant)?;
    let sel = even_chain(&v, k, variant)?;
    let n = (v[v.len() - 1] / 2) as u32;
    let a = SumSet::from_members(n, v.iter().copied())?;
    let mode = match variant {
        BoundVariant::Strict => Mode::Integer,
        BoundVariant::Weak => Mode::Positive,
    };
    let trace = json!({
        "variant": variant,
        "threshold_met": threshold_met,
        "c": sel.c,
        "levels": sel.levels.iter().map(|l| json!({"m": l.m, "s": l.s()})).collect::<Vec<_>>(),
    });
    finish(&a, sel.values(), mode, trace)
}

fn lemma_branch(a: &SumSet, evens: &[i64], k: usize, variant: BoundVariant, branch: &str, trace: &mut Value) -> Result<Construction> {
    let inner = construct_even_lemma(evens, k, variant).map_err(|e| match e {
        Error::InvalidConstruction(_) => e,
        other => Error::BranchGuaranteeFailed(format!("branch {branch}: {other}")),
    })?;
    trace["lemma"] = inner.trace;
    finish(a, inner.witness.values().to_vec(), inner.mode, trace.clone())
}

fn evens_in(evens: &[i64], lo: i64, hi: i64) -> Vec<i64> {
    evens.iter().copied().filter(|&e| lo <= e && e <= hi).collect()
}

/// Integer 5-witness for `|A| >= n + C`, following the three-branch argument
/// for the uniform five-term bound with `C` as a parameter.
///
/// With `t = |A_even| - C`: (i) `6t >= n` applies the even-set construction
/// to all even members; (ii) at most four even members in
/// `[6t+2, 2n-6t-2]` applies it to the denser end interval; (iii) otherwise
/// three evens in `[6t+2, n]` (preferred) or `[n, 2n-6t-2]` give `b_1..b_3`,
/// and a pair `p + q` equal to the outer even completes the witness.
///
/// For `C` below [`crate::bounds::solve_g5_constant`] the branch guarantees
/// can fail; this is reported as [`Error::BranchGuaranteeFailed`].
pub fn construct_g5_bounded(a: &SumSet, c: u64) -> Result<Construction> {
    let n = i64::from(a.n());
    require_size(a, c as usize, "construct_g5_bounded")?;
    let evens = a.evens();
    let t = evens.len() as i64 - c as i64;
    if t < 0 {
        return Err(Error::HypothesisViolation(format!("{} even members < C = {c}", evens.len())));
    }
    let mut trace = json!({"C": c, "t": t});
    if 6 * t >= n {
        trace["branch"] = json!("i");
        return lemma_branch(a, &evens, 5, BoundVariant::Strict, "i", &mut trace);
    }
    let middle = evens_in(&evens, 6 * t + 2, 2 * n - 6 * t - 2);
    if middle.len() <= 4 {
        let left = evens_in(&evens, 2, 6 * t);
        let right = evens_in(&evens, 2 * n - 6 * t, 2 * n);
        let (side, dense) = if left.len() >= right.len() { ("left", left) } else { ("right", right) };
        trace["branch"] = json!("ii");
        trace["side"] = json!(side);
        return lemma_branch(a, &dense, 5, BoundVariant::Strict, "ii", &mut trace);
    }
    trace["branch"] = json!("iii");
    let left = evens_in(&evens, 6 * t + 2, n);
    let right = evens_in(&evens, n, 2 * n - 6 * t - 2);
    let (side, a1, a2, a3, target) = if left.len() >= 3 {
        ("left", left[0], left[1], left[2], left[2])
    } else if right.len() >= 3 {
        ("right", right[0], right[1], right[2], right[0])
    } else {
        return Err(Error::BranchGuaranteeFailed(
            "branch iii: no window holds three even members".into(),
        ));
    };
    let bs = half_sums(a1, a2, a3);
    trace["side"] = json!(side);
    trace["a"] = json!([a1, a2, a3]);
    let centre = target / 2;
    let radius = 6 * t + 2;
    let mut candidates = 0;
    for p in centre - radius..centre {
        let q = target - p;
        if q > centre + radius || (p - bs[0]).rem_euclid(2) == 0 {
            continue;
        }
        candidates += 1;
        if bs.iter().all(|b| a.contains(b + p) && a.contains(b + q)) {
            trace["pair"] = json!([p, q]);
            trace["pairs_available"] = json!(candidates);
            return finish(a, vec![bs[0], bs[1], bs[2], p, q], Mode::Integer, trace);
        }
    }
    Err(Error::BranchGuaranteeFailed(format!(
        "branch iii: none of {candidates} pairs summing to {target} has all cross sums in A"
    )))
}

/// Positive 4-witness for `|A| >= n + C`, with `C` as a parameter.
///
/// With `t = |A_even| - C`: if some even `2m ∈ A` lies in
/// `[8t+6, 2n-8t-6]`, take `b_1 = m-1`, `b_2 = m+1` and scan
/// `b_3 ∈ [m-4t-2, m-2]` of the other parity with `b_4 = 2m - b_3`;
/// otherwise the even members crowd an end interval and the weak-variant
/// even-set construction applies there.
pub fn construct_h4_bounded(a: &SumSet, c: u64) -> Result<Construction> {
    let n = i64::from(a.n());
    require_size(a, c as usize, "construct_h4_bounded")?;
    let evens = a.evens();
    let t = evens.len() as i64 - c as i64;
    if t < 0 {
        return Err(Error::HypothesisViolation(format!("{} even members < C = {c}", evens.len())));
    }
    let mut trace = json!({"C": c, "t": t});
    let lo = 8 * t + 6;
    let hi = 2 * n - 8 * t - 6;
    if let Some(&two_m) = evens.iter().find(|&&e| lo <= e && e <= hi) {
        let m = two_m / 2;
        let (b1, b2) = (m - 1, m + 1);
        trace["branch"] = json!("centre");
        trace["2m"] = json!(two_m);
        for b3 in (m - 4 * t - 2..=m - 2).filter(|b3| (b3 - b1).rem_euclid(2) == 1) {
            let b4 = two_m - b3;
            if [b1 + b3, b1 + b4, b2 + b3, b2 + b4].iter().all(|&s| a.contains(s)) {
                trace["b3"] = json!(b3);
                return finish(a, vec![b1, b2, b3, b4], Mode::Positive, trace);
            }
        }
        return Err(Error::BranchGuaranteeFailed(format!(
            "centre branch: no b3 in [{}, {}] completes 2m = {two_m}",
            m - 4 * t - 2,
            m - 2
        )));
    }
    let left = evens_in(&evens, 2, lo - 2);
    let right = evens_in(&evens, hi + 2, 2 * n);
    let (side, dense) = if left.len() >= right.len() { ("left", left) } else { ("right", right) };
    trace["branch"] = json!("ends");
    trace["side"] = json!(side);
    lemma_branch(a, &dense, 4, BoundVariant::Weak, "ends", &mut trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::find_witness;

    fn set(n: u32, m: &[i64]) -> SumSet {
        SumSet::from_members(n, m.iter().copied()).unwrap()
    }

    fn odds_plus(n: u32, evens: &[i64]) -> SumSet {
        let mut a = SumSet::odds(n).unwrap();
        for &e in evens {
            a.insert(e);
        }
        a
    }

    fn vals(c: &Construction) -> Vec<i64> {
        c.witness.values().to_vec()
    }

    #[test]
    fn g3_examples() {
        assert_eq!(vals(&construct_g3(&set(3, &[3, 4, 5, 6])).unwrap()), vec![1, 2, 3]);
        assert_eq!(vals(&construct_g3(&set(3, &[1, 2, 4, 6])).unwrap()), vec![0, 2, 4]);
        assert!(matches!(construct_g3(&set(3, &[1, 3, 5])), Err(Error::HypothesisViolation(_))));
        assert!(matches!(construct_g3(&set(2, &[1, 2, 3])), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn g3_nonneg_examples() {
        assert_eq!(vals(&construct_g3_nonneg(&set(3, &[3, 4, 5, 6])).unwrap()), vec![1, 2, 3]);
        assert_eq!(vals(&construct_g3_nonneg(&set(3, &[1, 2, 4, 6])).unwrap()), vec![0, 2, 4]);
        assert_eq!(vals(&construct_g3_nonneg(&set(4, &[1, 2, 3, 5, 7])).unwrap()), vec![0, 1, 2]);
        // shifted once: {3,4,5,6,8} -> {1,2,3,4,6}
        let c = construct_g3_nonneg(&set(4, &[3, 4, 5, 6, 8])).unwrap();
        assert_eq!(c.trace["shifts"], 1);
    }

    /// The n = 3 table covers exactly the qualifying sets and each entry is
    /// the lexicographically smallest non-negative witness.
    #[test]
    fn nonneg_base_table_is_exhaustive() {
        let mut covered = 0;
        for mask in 0u64..64 {
            let a = SumSet::from_mask(3, mask).unwrap();
            if a.len() < 4 {
                continue;
            }
            covered += 1;
            let entry = NONNEG_BASE.iter().find(|(m, _)| *m == mask).unwrap().1;
            let mut first = None;
            'scan: for x in 0..=6 {
                for y in x + 1..=6 {
                    for z in y + 1..=6 {
                        if a.contains(x + y) && a.contains(x + z) && a.contains(y + z) {
                            first = Some([x, y, z]);
                            break 'scan;
                        }
                    }
                }
            }
            assert_eq!(Some(entry), first, "{a:?}");
        }
        assert_eq!(covered, NONNEG_BASE.len());
    }

    #[test]
    fn g4_examples() {
        let c = construct_g4(&SumSet::full(4).unwrap()).unwrap();
        assert!(verify_witness(&SumSet::full(4).unwrap(), &c.witness));
        assert_eq!(vals(&construct_g4(&set(5, &[1, 2, 3, 4, 5, 6, 7, 8])).unwrap()), vec![1, 2, 3, 5]);
        assert_eq!(vals(&construct_g4(&SumSet::full(3).unwrap()).unwrap()), vec![0, 1, 2, 4]);
        assert!(matches!(
            construct_g4(&set(5, &[1, 3, 5, 7, 9, 2, 4])),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn g5_allodds_cases() {
        let c = construct_g5_allodds(&odds_plus(5, &[2, 4, 6, 8])).unwrap();
        assert_eq!((vals(&c), c.trace["case"].as_i64()), (vec![0, 1, 2, 4, 5], Some(1)));
        let c = construct_g5_allodds(&odds_plus(7, &[2, 8, 10, 12])).unwrap();
        assert_eq!((vals(&c), c.trace["case"].as_i64()), (vec![2, 3, 5, 6, 7], Some(2)));
        let c = construct_g5_allodds(&odds_plus(5, &[2, 6, 8, 10])).unwrap();
        assert_eq!((vals(&c), c.trace["case"].as_i64()), (vec![-1, 2, 3, 4, 6], Some(3)));
        assert!(matches!(
            construct_g5_allodds(&set(5, &[1, 3, 5, 7, 2, 4, 6, 8, 10])),
            Err(Error::HypothesisViolation(_))
        ));
        assert!(matches!(
            construct_g5_allodds(&odds_plus(5, &[2, 4, 6])),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn even_lemma_examples() {
        let c = construct_even_lemma(&[2, 4, 6, 8], 3, BoundVariant::Strict).unwrap();
        assert_eq!(vals(&c), vec![-1, 3, 5]);
        assert_eq!(c.trace["c"], json!([6, -4, 2]));
        let c = construct_even_lemma(&[2, 4, 6, 8], 3, BoundVariant::Weak).unwrap();
        assert_eq!(vals(&c), vec![1, 3, 5]);
        assert_eq!(c.mode, Mode::Positive);
        let e = construct_even_lemma(&[2, 4, 8, 16], 3, BoundVariant::Strict).unwrap_err();
        assert!(matches!(e, Error::StructureNotFound(_)));
        assert!(!lemma_threshold_met(&[2, 4, 8, 16], 3, BoundVariant::Strict).unwrap());
        // overlapping representations only: (2,4), (4,6)
        let c = construct_even_lemma(&[2, 4, 6], 3, BoundVariant::Strict).unwrap();
        assert_eq!(vals(&c), vec![0, 2, 4]);
        assert!(matches!(
            construct_even_lemma(&[2, 5], 3, BoundVariant::Strict),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            construct_even_lemma(&[], 3, BoundVariant::Strict),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            construct_even_lemma(&[2, 4], 2, BoundVariant::Strict),
            Err(Error::InvalidArity(2))
        ));
    }

    #[test]
    fn chain_subset_sums() {
        let evens: Vec<i64> = (1..=40).map(|x| 2 * x).collect();
        for k in 3..=5 {
            for variant in [BoundVariant::Strict, BoundVariant::Weak] {
                let sel = even_chain(&evens, k, variant).unwrap();
                for mask in 0u32..(1 << (k - 1)) {
                    let s: i64 = sel.c[0]
                        + (0..k - 1).filter(|i| mask >> i & 1 == 1).map(|i| sel.c[i + 1]).sum::<i64>();
                    assert!(evens.contains(&s), "k={k} {variant} c={:?}", sel.c);
                }
            }
        }
    }

    #[test]
    fn bounded_examples() {
        let a = SumSet::full(12).unwrap();
        let c = construct_g5_bounded(&a, 12).unwrap();
        assert_eq!(vals(&c), vec![0, 1, 2, 4, 5]);
        assert_eq!(c.trace["branch"], "iii");
        assert_eq!(c.trace["pair"], json!([1, 5]));
        assert!(matches!(construct_g5_bounded(&a, 13), Err(Error::HypothesisViolation(_))));

        let a = SumSet::full(8).unwrap();
        let c = construct_h4_bounded(&a, 8).unwrap();
        assert_eq!(vals(&c), vec![1, 2, 4, 5]);
        assert_eq!(c.mode, Mode::Positive);
        assert!(matches!(construct_h4_bounded(&a, 9), Err(Error::HypothesisViolation(_))));
    }

    #[test]
    fn successes_agree_with_search() {
        for n in 3..=5u32 {
            for mask in 0u64..(1 << (2 * n)) {
                let a = SumSet::from_mask(n, mask).unwrap();
                let builders: [(fn(&SumSet) -> Result<Construction>, usize, Mode); 4] = [
                    (construct_g3, 3, Mode::Integer),
                    (construct_g3_nonneg, 3, Mode::Integer),
                    (construct_g4, 4, Mode::Integer),
                    (construct_g5_allodds, 5, Mode::Integer),
                ];
                for (build, k, mode) in builders {
                    if build(&a).is_ok() {
                        assert!(find_witness(&a, k, mode).unwrap().is_found());
                    }
                }
            }
        }
    }

    fn sweep(n_max: u32, k: usize, c: u64, mode: Mode, build: fn(&SumSet, u64) -> Result<Construction>) -> (usize, usize) {
        let (mut ok, mut failed) = (0, 0);
        for n in 1..=n_max {
            for mask in 0u64..(1 << (2 * n)) {
                if (mask.count_ones() as u64) < u64::from(n) + c {
                    continue;
                }
                let a = SumSet::from_mask(n, mask).unwrap();
                match build(&a, c) {
                    Ok(w) => {
                        assert!(verify_witness(&a, &w.witness));
                        assert!(find_witness(&a, k, mode).unwrap().is_found());
                        if mode == Mode::Positive {
                            assert!(w.witness.values()[0] >= 1);
                        }
                        ok += 1;
                    }
                    Err(Error::BranchGuaranteeFailed(_)) | Err(Error::HypothesisViolation(_)) => failed += 1,
                    Err(e) => panic!("{a:?}: unexpected {e}"),
                }
            }
        }
        (ok, failed)
    }

    #[test]
    fn g5_bounded_sweep() {
        let (ok, _) = sweep(6, 5, 5, Mode::Integer, construct_g5_bounded);
        assert!(ok > 0);
    }

    #[test]
    fn h4_bounded_sweep() {
        let (ok, _) = sweep(7, 4, 4, Mode::Positive, construct_h4_bounded);
        assert!(ok > 0);
    }

    #[test]
    fn g4_parity_split_and_nonneg() {
        for n in 3..=6u32 {
            for mask in 0u64..(1 << (2 * n)) {
                let a = SumSet::from_mask(n, mask).unwrap();
                if let Ok(c) = construct_g4(&a) {
                    let odd = c.witness.values().iter().filter(|v| v.rem_euclid(2) == 1).count();
                    assert!(odd == 1 || odd == 3, "{:?}", c.witness);
                }
                if let Ok(c) = construct_g3_nonneg(&a) {
                    assert!(c.witness.values()[0] >= 0);
                }
            }
        }
    }
}
