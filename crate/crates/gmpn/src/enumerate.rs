//! Deterministic enumeration of `G(m, p, n)` and its reflections.
//!
//! Elements come out in lexicographic order on `(image array, weight
//! vector)`, filtered to members of the subgroup. The order is part of the
//! crate's contract: scan reports and parallel sweeps rely on it for
//! reproducible output.

use alloc::vec;
use alloc::vec::Vec;

use crate::element::{GroupParams, WreathElement};
use crate::error::Error;

/// Default bound on the group order for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Streams every element of `G(m, p, n)` exactly once, refusing upfront if
/// the group order exceeds `cap`.
pub fn enumerate_group(params: &GroupParams, cap: u128) -> Result<ElementIter, Error> {
    let order = params.order().ok_or(Error::OrderOverflow)?;
    if order > cap {
        return Err(Error::CapExceeded {
            required: order,
            cap,
        });
    }
    Ok(ElementIter {
        params: *params,
        perm: (0..params.n()).collect(),
        weights: vec![0; params.n()],
        exhausted: false,
    })
}

/// Iterator over the elements of one group, in lexicographic order.
pub struct ElementIter {
    params: GroupParams,
    perm: Vec<usize>,
    weights: Vec<u64>,
    exhausted: bool,
}

impl ElementIter {
    /// Advances the `(perm, weights)` odometer by one step; returns false
    /// once every combination has been visited.
    fn step(&mut self) -> bool {
        let m = self.params.m();
        for w in self.weights.iter_mut().rev() {
            *w += 1;
            if *w < m {
                return true;
            }
            *w = 0;
        }
        next_permutation(&mut self.perm)
    }

    fn current_is_member(&self) -> bool {
        let total = self
            .weights
            .iter()
            .fold(0, |acc, &w| (acc + w) % self.params.m());
        total % self.params.p() == 0
    }
}

impl Iterator for ElementIter {
    type Item = WreathElement;

    fn next(&mut self) -> Option<WreathElement> {
        while !self.exhausted {
            let member = self.current_is_member();
            let item = member.then(|| {
                WreathElement::from_parts(self.params, self.perm.clone(), self.weights.clone())
            });
            self.exhausted = !self.step();
            if item.is_some() {
                return item;
            }
        }
        None
    }
}

/// Rewrites `perm` into its lexicographic successor; returns false (leaving
/// the array sorted ascending) when `perm` was the last permutation.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// All reflections of `G(m, p, n)`: the elements whose fixed space has
/// codimension 1.
///
/// These come in two families: for every pair of positions `i < j` and every
/// `a` in `Z/m`, the transposition-like reflection `[(i j); a_i = a,
/// a_j = -a]`; and, when `p < m`, for every position and every
/// `k = 1 .. m/p - 1`, the diagonal reflection `[id; kp at that position]`.
/// The list is deterministic: transposition-like reflections first, ordered
/// by `(i, j, a)`, then diagonal ones by `(position, k)`.
pub fn reflections(params: &GroupParams) -> Vec<WreathElement> {
    let (m, p, n) = (params.m(), params.p(), params.n());
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for a in 0..m {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(i, j);
                let mut weights = vec![0; n];
                weights[i] = a;
                weights[j] = (m - a) % m;
                out.push(WreathElement::from_parts(*params, perm, weights));
            }
        }
    }
    if p < m {
        for pos in 0..n {
            for k in 1..(m / p) {
                let mut weights = vec![0; n];
                weights[pos] = k * p;
                out.push(WreathElement::from_parts(
                    *params,
                    (0..n).collect(),
                    weights,
                ));
            }
        }
    }
    out
}
