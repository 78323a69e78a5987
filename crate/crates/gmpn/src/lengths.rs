//! The two subadditive statistics on `G(m, p, n)` and an independent
//! Cayley-graph oracle.
//!
//! Fixed-space codimension is `n` minus the number of weight-0 cycles.
//! Reflection length is evaluated through Shi's formula
//! `n + c(w) - v_max(w)`; the breadth-first table over the reflection
//! generating set gives the same numbers by direct shortest-word search and
//! is kept fully independent of the partition machinery so the two can be
//! checked against each other.

use alloc::vec;
use alloc::vec::Vec;

use crate::element::{GroupParams, WreathElement};
use crate::enumerate::{enumerate_group, reflections};
use crate::error::Error;
use crate::partitions::{zero_sum_pairing, VmaxSolver};

/// Fixed-space codimension: `n - c_0(w)`.
pub fn codim_fix(w: &WreathElement) -> u64 {
    let data = w.cycle_data();
    (w.params().n() - data.zero_weight_count()) as u64
}

/// Reflection length via Shi's formula `n + c(w) - v_max(w)`.
///
/// Refuses elements outside `G(m, p, n)`: the formula presumes membership.
pub fn reflection_length(w: &WreathElement) -> Result<u64, Error> {
    let mut solver = VmaxSolver::new(w.params().m(), w.params().p());
    reflection_length_with(&mut solver, w)
}

/// [`reflection_length`] against a caller-provided solver, so sweeps over a
/// whole group can share one memo table.
pub fn reflection_length_with(solver: &mut VmaxSolver, w: &WreathElement) -> Result<u64, Error> {
    let data = w.cycle_data();
    let result = solver.v_max(&data)?;
    Ok(w.params().n() as u64 + data.count() as u64 - result.value)
}

/// Whether `reflection_length(w) == codim_fix(w)`, decided by the pairing
/// criterion: the cycle weights that are not `0 (mod p)` admit a perfect
/// pairing into zero sums.
pub fn length_equals_codim(w: &WreathElement) -> Result<bool, Error> {
    if !w.is_member() {
        return Err(Error::NotAMember {
            total_weight: w.total_weight(),
            p: w.params().p(),
        });
    }
    let p = w.params().p();
    let weights: Vec<u64> = w
        .cycle_data()
        .weights()
        .into_iter()
        .filter(|&weight| weight % p != 0)
        .collect();
    Ok(zero_sum_pairing(&weights, w.params().m()).is_some())
}

/// Exact reflection-length table computed by breadth-first search from the
/// identity over the reflection generating set.
///
/// This is the oracle: it never consults the partition formula.
pub struct LengthTable {
    elements: Vec<WreathElement>,
    dist: Vec<u32>,
}

impl LengthTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Distance of `w` from the identity, if `w` belongs to the group.
    pub fn get(&self, w: &WreathElement) -> Option<u32> {
        let index = self.elements.binary_search(w).ok()?;
        Some(self.dist[index])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WreathElement, u32)> {
        self.elements.iter().zip(self.dist.iter().copied())
    }

    pub fn max_distance(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Builds the full Cayley-graph distance table of `G(m, p, n)` over its
/// reflections.
pub fn bfs_length_table(params: &GroupParams, cap: u128) -> Result<LengthTable, Error> {
    let elements: Vec<WreathElement> = enumerate_group(params, cap)?.collect();
    debug_assert!(elements.windows(2).all(|pair| pair[0] < pair[1]));
    let generators = reflections(params);
    let mut dist = vec![u32::MAX; elements.len()];
    let identity = WreathElement::identity(*params);
    let start = elements
        .binary_search(&identity)
        .expect("identity is a member");
    dist[start] = 0;
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &index in &frontier {
            let d = dist[index];
            for t in &generators {
                let neighbor = elements[index].compose(t);
                let at = elements
                    .binary_search(&neighbor)
                    .expect("the group is closed under multiplication");
                if dist[at] == u32::MAX {
                    dist[at] = d + 1;
                    next.push(at);
                }
            }
        }
        frontier = next;
    }
    if dist.contains(&u32::MAX) {
        return Err(Error::Precondition(
            "reflections fail to generate the group",
        ));
    }
    Ok(LengthTable { elements, dist })
}
