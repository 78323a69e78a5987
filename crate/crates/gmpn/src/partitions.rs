//! Set partitions of an element's cycles and the optimization behind
//! reflection length.
//!
//! A *null cycle partition* groups the cycles of `w` into blocks whose
//! weights each sum to `0 (mod p)`. Its value is the number of blocks plus
//! the number of blocks whose weight sum is `0 (mod m)`; reflection length
//! is `n + c(w)` minus the maximum value over all null cycle partitions
//! ([`crate::lengths::reflection_length`]).
//!
//! The maximum is computed by branch-and-bound over block choices, memoized
//! on the sorted weight multiset: the value depends only on `(m, p)` and the
//! multiset of cycle weights, which collapses symmetric cycles.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::{CycleData, GroupParams, WreathElement};
use crate::error::Error;
use crate::lengths::codim_fix;

/// Default bound on the cycle count for exhaustive partition enumeration
/// (Bell(12) is about 4.2 million).
pub const DEFAULT_PARTITION_CAP: usize = 12;

/// A set partition of the cycles of one element, with no weight constraint.
///
/// Blocks hold cycle indices (into the element's [`CycleData`]); each block
/// is sorted ascending and blocks are ordered by their first index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePartition {
    blocks: Vec<Vec<usize>>,
}

impl CyclePartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Renders as `[(1 2 3) | (4) | (5)(6 7)(8)]` with 1-indexed positions.
    pub fn display<'a>(&'a self, cycles: &'a CycleData) -> PartitionDisplay<'a> {
        PartitionDisplay {
            blocks: &self.blocks,
            cycles,
        }
    }
}

/// A set partition of the cycles of one element in which every block's
/// weights sum to `0 (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullCyclePartition {
    blocks: Vec<Vec<usize>>,
    block_weights: Vec<u64>,
    zero_weight_blocks: usize,
}

impl NullCyclePartition {
    /// Validates that `blocks` partitions the cycle index set and that each
    /// block's weight sum is `0 (mod p)`.
    pub fn new(
        cycles: &CycleData,
        params: &GroupParams,
        blocks: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        Self::from_blocks(cycles, params.m(), params.p(), blocks)
    }

    fn from_blocks(
        cycles: &CycleData,
        m: u64,
        p: u64,
        mut blocks: Vec<Vec<usize>>,
    ) -> Result<Self, Error> {
        let count = cycles.count();
        let mut seen = vec![false; count];
        for block in &mut blocks {
            block.sort_unstable();
            for &index in block.iter() {
                if index >= count || seen[index] {
                    return Err(Error::Precondition("blocks must partition the cycle set"));
                }
                seen[index] = true;
            }
            if block.is_empty() {
                return Err(Error::Precondition("blocks must be nonempty"));
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::Precondition("blocks must partition the cycle set"));
        }
        blocks.sort_unstable();
        let block_weights: Vec<u64> = blocks
            .iter()
            .map(|block| {
                block
                    .iter()
                    .fold(0, |acc, &i| (acc + cycles.cycles()[i].weight) % m)
            })
            .collect();
        if block_weights.iter().any(|&w| w % p != 0) {
            return Err(Error::Precondition("every block weight must be 0 mod p"));
        }
        let zero_weight_blocks = block_weights.iter().filter(|&&w| w == 0).count();
        Ok(NullCyclePartition {
            blocks,
            block_weights,
            zero_weight_blocks,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Per-block weight sums, mod `m`.
    pub fn block_weights(&self) -> &[u64] {
        &self.block_weights
    }

    /// Number of blocks whose weight sum is `0 (mod m)`.
    pub fn zero_weight_blocks(&self) -> usize {
        self.zero_weight_blocks
    }

    /// The value `|blocks| + #{blocks of weight 0 mod m}`.
    pub fn value(&self) -> u64 {
        (self.blocks.len() + self.zero_weight_blocks) as u64
    }

    pub fn display<'a>(&'a self, cycles: &'a CycleData) -> PartitionDisplay<'a> {
        PartitionDisplay {
            blocks: &self.blocks,
            cycles,
        }
    }
}

/// Bracket-and-bar rendering of a cycle partition.
pub struct PartitionDisplay<'a> {
    blocks: &'a [Vec<usize>],
    cycles: &'a CycleData,
}

impl fmt::Display for PartitionDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                write!(f, " | ")?;
            }
            for &index in block {
                write!(f, "(")?;
                for (k, &pos) in self.cycles.cycles()[index].support.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", pos + 1)?;
                }
                write!(f, ")")?;
            }
        }
        write!(f, "]")
    }
}

/// A maximum null cycle partition together with its value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vmax {
    pub value: u64,
    pub witness: NullCyclePartition,
}

/// Computes the maximum value over all null cycle partitions, with a
/// witness attaining it.
///
/// Fails with [`Error::NotAMember`] when the total weight is not
/// `0 (mod p)` (then no null cycle partition exists at all).
pub fn v_max(cycles: &CycleData, params: &GroupParams) -> Result<Vmax, Error> {
    VmaxSolver::new(params.m(), params.p()).v_max(cycles)
}

/// Reusable solver for [`v_max`]. The memo table is keyed by the sorted
/// weight multiset, so one solver instance amortizes across all elements of
/// a group; separate instances always produce identical values.
pub struct VmaxSolver {
    m: u64,
    p: u64,
    memo: BTreeMap<Vec<u64>, Option<u64>>,
}

impl VmaxSolver {
    pub fn new(m: u64, p: u64) -> Self {
        assert!(p >= 1 && m.is_multiple_of(p), "need p | m");
        VmaxSolver {
            m,
            p,
            memo: BTreeMap::new(),
        }
    }

    /// Maximum partition value for a bare weight multiset, or `None` when no
    /// block structure can make every block sum to `0 (mod p)`.
    pub fn max_value(&mut self, weights: &[u64]) -> Option<u64> {
        let mut key: Vec<u64> = weights.iter().map(|&w| w % self.m).collect();
        key.sort_unstable();
        self.best(key)
    }

    /// Maximum value plus a deterministic witness partition of the cycles.
    pub fn v_max(&mut self, cycles: &CycleData) -> Result<Vmax, Error> {
        let weights = cycles.weights();
        let total = weights.iter().fold(0, |acc, &w| (acc + w) % self.m);
        if total % self.p != 0 {
            return Err(Error::NotAMember {
                total_weight: total,
                p: self.p,
            });
        }
        let value = self
            .max_value(&weights)
            .expect("members always admit the one-block partition");
        let mut remaining: Vec<usize> = (0..weights.len()).collect();
        let mut blocks = Vec::new();
        while !remaining.is_empty() {
            let block = self.pick_block(&remaining, &weights);
            remaining.retain(|i| !block.contains(i));
            blocks.push(block);
        }
        let witness = NullCyclePartition::from_blocks(cycles, self.m, self.p, blocks)
            .expect("reconstructed blocks form a null cycle partition");
        debug_assert_eq!(witness.value(), value);
        Ok(Vmax { value, witness })
    }

    /// First block (in order of size, then lexicographic index list) that
    /// contains the lowest remaining cycle index and extends to an optimal
    /// partition of the rest.
    fn pick_block(&mut self, remaining: &[usize], weights: &[u64]) -> Vec<usize> {
        let target = {
            let multiset: Vec<u64> = remaining.iter().map(|&i| weights[i]).collect();
            self.max_value(&multiset)
                .expect("optimum exists for a reachable state")
        };
        let first = remaining[0];
        let rest = &remaining[1..];
        let mut tried: BTreeSet<Vec<u64>> = BTreeSet::new();
        for size in 0..=rest.len() {
            let mut chosen = None;
            for_each_combination(rest, size, &mut |subset| {
                let mut block_weights: Vec<u64> = subset.iter().map(|&i| weights[i]).collect();
                block_weights.push(weights[first]);
                block_weights.sort_unstable();
                if !tried.insert(block_weights.clone()) {
                    return false;
                }
                let sum = block_weights.iter().fold(0, |acc, &w| (acc + w) % self.m);
                if sum % self.p != 0 {
                    return false;
                }
                let in_block: BTreeSet<usize> = subset.iter().copied().collect();
                let mut leftover: Vec<u64> = rest
                    .iter()
                    .filter(|i| !in_block.contains(i))
                    .map(|&i| weights[i])
                    .collect();
                leftover.sort_unstable();
                let value = 1
                    + u64::from(sum == 0)
                    + match self.best(leftover) {
                        Some(v) => v,
                        None => return false,
                    };
                if value == target {
                    let mut block = vec![first];
                    block.extend_from_slice(subset);
                    chosen = Some(block);
                    true
                } else {
                    false
                }
            });
            if let Some(block) = chosen {
                return block;
            }
        }
        unreachable!("an optimal block containing the first cycle always exists")
    }

    /// Memoized maximum over null partitions of a sorted weight multiset.
    fn best(&mut self, key: Vec<u64>) -> Option<u64> {
        if key.is_empty() {
            return Some(0);
        }
        if let Some(&cached) = self.memo.get(&key) {
            return cached;
        }
        let first = key[0];
        let rest = &key[1..];
        // distinct (value, count) runs of the remaining multiset
        let mut runs: Vec<(u64, usize)> = Vec::new();
        for &w in rest {
            match runs.last_mut() {
                Some((value, count)) if *value == w => *count += 1,
                _ => runs.push((w, 1)),
            }
        }
        let mut best: Option<u64> = None;
        let mut counts = vec![0usize; runs.len()];
        loop {
            // block = {first} plus `counts[i]` copies of each run value
            let picked: usize = counts.iter().sum();
            let sum = counts
                .iter()
                .zip(&runs)
                .fold(first, |acc, (&c, &(value, _))| {
                    (acc + (c as u64 * value)) % self.m
                });
            // even the best continuation gives at most 2 per leftover cycle
            let bound = 2 + 2 * (rest.len() - picked) as u64;
            if sum % self.p == 0 && best.is_none_or(|b| b < bound) {
                let mut leftover = Vec::with_capacity(rest.len() - picked);
                for (&(value, count), &used) in runs.iter().zip(&counts) {
                    for _ in 0..(count - used) {
                        leftover.push(value);
                    }
                }
                if let Some(tail) = self.best(leftover) {
                    let value = 1 + u64::from(sum == 0) + tail;
                    if best.is_none_or(|b| b < value) {
                        best = Some(value);
                    }
                }
            }
            // odometer over counting vectors
            let mut idx = 0;
            loop {
                if idx == counts.len() {
                    self.memo.insert(key, best);
                    return best;
                }
                if counts[idx] < runs[idx].1 {
                    counts[idx] += 1;
                    break;
                }
                counts[idx] = 0;
                idx += 1;
            }
        }
    }
}

/// Calls `f` on every `size`-subset of `items`, in lexicographic order;
/// stops early when `f` returns true.
fn for_each_combination(
    items: &[usize],
    size: usize,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        items: &[usize],
        size: usize,
        start: usize,
        acc: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if acc.len() == size {
            return f(acc);
        }
        let needed = size - acc.len();
        for k in start..=items.len().saturating_sub(needed) {
            acc.push(items[k]);
            if go(items, size, k + 1, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    go(items, size, 0, &mut Vec::with_capacity(size), f)
}

/// Streams every null cycle partition of the given cycles, by
/// restricted-growth-string enumeration with per-block weight filtering.
pub fn all_null_partitions<'a>(
    cycles: &'a CycleData,
    params: &GroupParams,
    cap: usize,
) -> Result<NullPartitionIter<'a>, Error> {
    let count = cycles.count();
    if count > cap {
        return Err(Error::CapExceeded {
            required: count as u128,
            cap: cap as u128,
        });
    }
    Ok(NullPartitionIter {
        cycles,
        m: params.m(),
        p: params.p(),
        rgs: vec![0; count],
        exhausted: count == 0,
    })
}

/// Iterator produced by [`all_null_partitions`].
pub struct NullPartitionIter<'a> {
    cycles: &'a CycleData,
    m: u64,
    p: u64,
    rgs: Vec<usize>,
    exhausted: bool,
}

impl NullPartitionIter<'_> {
    fn advance(&mut self) -> bool {
        let k = self.rgs.len();
        for i in (1..k).rev() {
            let max_prefix = *self.rgs[..i].iter().max().expect("nonempty prefix");
            if self.rgs[i] <= max_prefix {
                self.rgs[i] += 1;
                self.rgs[i + 1..].fill(0);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Option<NullCyclePartition> {
        let block_count = self.rgs.iter().max().map_or(0, |&b| b + 1);
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
        let mut block_weights = vec![0u64; block_count];
        for (cycle, &block) in self.rgs.iter().enumerate() {
            blocks[block].push(cycle);
            block_weights[block] =
                (block_weights[block] + self.cycles.cycles()[cycle].weight) % self.m;
        }
        if block_weights.iter().any(|&w| w % self.p != 0) {
            return None;
        }
        let zero_weight_blocks = block_weights.iter().filter(|&&w| w == 0).count();
        Some(NullCyclePartition {
            blocks,
            block_weights,
            zero_weight_blocks,
        })
    }
}

impl Iterator for NullPartitionIter<'_> {
    type Item = NullCyclePartition;

    fn next(&mut self) -> Option<NullCyclePartition> {
        while !self.exhausted {
            let item = self.current();
            self.exhausted = !self.advance();
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// Perfect pairing of a weight multiset into pairs that sum to `0 (mod m)`,
/// when one exists.
///
/// Meant for the multiset of cycle weights that are not `0 (mod p)`: such a
/// pairing exists if and only if `count(x) = count(-x)` for every residue
/// with `x != -x`, and `count(x)` is even when `2x = 0 (mod m)`. Pairs come
/// out sorted, each with its smaller residue first.
pub fn zero_sum_pairing(weights: &[u64], m: u64) -> Option<Vec<(u64, u64)>> {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &w in weights {
        *counts.entry(w % m).or_insert(0) += 1;
    }
    let mut pairs = Vec::with_capacity(weights.len() / 2);
    for (&x, &count) in &counts {
        let partner = (m - x) % m;
        if partner == x {
            if count % 2 != 0 {
                return None;
            }
            for _ in 0..count / 2 {
                pairs.push((x, x));
            }
        } else if partner > x {
            if counts.get(&partner).copied().unwrap_or(0) != count {
                return None;
            }
            for _ in 0..count {
                pairs.push((x, partner));
            }
        } else if !counts.contains_key(&partner) {
            return None;
        }
    }
    Some(pairs)
}

/// The partition of the cycles of `w` induced by `u`: two cycles share a
/// block when some cycle of `u` meets both, closed transitively.
pub fn induced_cycle_partition(u: &WreathElement, w: &WreathElement) -> CyclePartition {
    assert_eq!(
        (u.params().m(), u.params().n()),
        (w.params().m(), w.params().n()),
        "elements must live in the same group"
    );
    let n = w.params().n();
    let mut dsu = DisjointSets::new(n);
    for x in [u, w] {
        for cycle in x.cycle_data().cycles() {
            for pair in cycle.support.windows(2) {
                dsu.union(pair[0], pair[1]);
            }
        }
    }
    let wd = w.cycle_data();
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (index, cycle) in wd.cycles().iter().enumerate() {
        by_root
            .entry(dsu.find(cycle.support[0]))
            .or_default()
            .push(index);
    }
    let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
    blocks.sort_unstable();
    CyclePartition { blocks }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Refines the blocks induced by `u` into a null cycle partition of `w`
/// with blocks of size at most 2.
///
/// Requires `u` to lie in the codimension interval below `w` and `w` to
/// satisfy both clauses of the interval-coincidence criterion; the three
/// construction steps then go through. Size-2 blocks end up with nonzero
/// weights summing to `0 (mod m)` and singletons with weight `0 (mod p)`.
/// Ties are broken deterministically: cycles are processed in increasing
/// order of minimal support position, and a weight `x` is always paired
/// with the unpaired candidate of weight `-x` whose minimal support
/// position is smallest.
pub fn null_pair_partition(
    u: &WreathElement,
    w: &WreathElement,
) -> Result<NullCyclePartition, Error> {
    assert_eq!(
        (u.params().m(), u.params().n()),
        (w.params().m(), w.params().n()),
        "elements must live in the same group"
    );
    let params = w.params();
    let (m, p) = (params.m(), params.p());
    for x in [u, w] {
        if !x.is_member() {
            return Err(Error::NotAMember {
                total_weight: x.total_weight(),
                p,
            });
        }
    }
    if codim_fix(u) + codim_fix(&u.inverse().compose(w)) != codim_fix(w) {
        return Err(Error::Precondition(
            "u is not in the codimension interval below w",
        ));
    }
    let wd = w.cycle_data();
    let nonzero_mod_p: Vec<u64> = wd
        .weights()
        .into_iter()
        .filter(|&weight| weight % p != 0)
        .collect();
    if zero_sum_pairing(&nonzero_mod_p, m).is_none() {
        return Err(Error::Precondition(
            "cycle weights of w do not pair to zero sums",
        ));
    }
    if crate::characterize::minimal_failing_subset(w)?.is_some() {
        return Err(Error::Precondition(
            "a zero-sum subset of the cycle weights of w does not pair",
        ));
    }

    let induced = induced_cycle_partition(u, w);
    let cycle_count = wd.count();
    let mut in_block = vec![false; cycle_count];
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    // step 1: the non-singleton induced blocks, which are zero-sum pairs
    for block in induced.blocks() {
        if block.len() >= 2 {
            assert_eq!(
                block.len(),
                2,
                "induced blocks in the interval are singletons or pairs"
            );
            for &c in block {
                in_block[c] = true;
            }
            blocks.push(block.clone());
        }
    }

    // cycles of w carried by u: a singleton block whose cycle weight is
    // nonzero and reappears as the weight of a u-cycle inside its support
    let ud = u.cycle_data();
    let mut carried = vec![false; cycle_count];
    for u_cycle in ud.cycles() {
        let host = wd.cycle_of(u_cycle.support[0]);
        if in_block[host] {
            // a u-cycle may span the two w-cycles of a pair block
            continue;
        }
        debug_assert!(u_cycle.support.iter().all(|&pos| wd.cycle_of(pos) == host));
        if u_cycle.weight != 0 && u_cycle.weight == wd.cycles()[host].weight {
            carried[host] = true;
        }
    }

    // step 2: pair up the carried cycles of weight not 0 (mod p)
    let carried_cycles: Vec<usize> = (0..cycle_count).filter(|&c| carried[c]).collect();
    pair_greedily(&carried_cycles, &wd, m, p, &mut in_block, &mut blocks);

    // step 3: everything left pairs among itself or stands alone
    let leftover: Vec<usize> = (0..cycle_count).filter(|&c| !in_block[c]).collect();
    pair_greedily(&leftover, &wd, m, p, &mut in_block, &mut blocks);
    for c in leftover {
        if !in_block[c] {
            debug_assert_eq!(wd.cycles()[c].weight % p, 0);
            blocks.push(vec![c]);
        }
    }

    NullCyclePartition::new(&wd, &params, blocks)
}

/// Pairs the listed cycles whose weights are not `0 (mod p)` into zero-sum
/// blocks, smallest minimal support position first. Cycles with weight
/// `0 (mod p)` are left untouched (they become singletons later).
fn pair_greedily(
    candidates: &[usize],
    wd: &CycleData,
    m: u64,
    p: u64,
    in_block: &mut [bool],
    blocks: &mut Vec<Vec<usize>>,
) {
    for (k, &c) in candidates.iter().enumerate() {
        if in_block[c] || wd.cycles()[c].weight.is_multiple_of(p) {
            continue;
        }
        let needed = (m - wd.cycles()[c].weight) % m;
        let partner = candidates[k + 1..]
            .iter()
            .copied()
            .find(|&d| !in_block[d] && wd.cycles()[d].weight == needed)
            .expect("a zero-sum partner exists by the subset condition");
        in_block[c] = true;
        in_block[partner] = true;
        blocks.push(vec![c, partner]);
    }
}
