//! Elements of the groups `G(m, p, n)` and their cycle structure.
//!
//! An element is a pair `[u; a]` of a permutation `u` of `{1..n}` and a
//! weight vector `a` over `Z/m`. Under the monomial action it sends the
//! basis vector `e_j` to `zeta^{a_j} e_{u(j)}` for `zeta` a primitive m-th
//! root of unity; that convention is what makes the number of weight-0
//! cycles equal to the fixed-space dimension. The root of unity itself is
//! never materialized — all semantics are carried by arithmetic in `Z/m`.
//!
//! Membership in `G(m, p, n)` (total weight `0 (mod p)`) is a queryable
//! predicate, not a construction-time requirement: restrictions of a member
//! to a subset of its cycles may land outside the subgroup, and several
//! constructions rely on that.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Parameters `(m, p, n)` of a group in the infinite family.
///
/// Weights live in `Z/m`, members have total weight `0 (mod p)` with
/// `p | m`, and elements permute `{1..n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupParams {
    m: u64,
    p: u64,
    n: usize,
}

impl GroupParams {
    pub fn new(m: u64, p: u64, n: usize) -> Result<Self, Error> {
        if m == 0 || p == 0 || n == 0 || !m.is_multiple_of(p) {
            return Err(Error::InvalidParams { m, p, n });
        }
        Ok(GroupParams { m, p, n })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Group order `m^n * n! / p`, or `None` if it overflows `u128`.
    pub fn order(&self) -> Option<u128> {
        let mut order: u128 = 1;
        for _ in 0..self.n {
            order = order.checked_mul(self.m as u128)?;
        }
        for k in 2..=self.n {
            order = order.checked_mul(k as u128)?;
        }
        Some(order / self.p as u128)
    }
}

/// An element `[u; a]` of the wreath product behind `G(m, p, n)`.
///
/// The permutation is stored as a 0-indexed image array (`perm[j]` is the
/// image of position `j`) and every weight is kept normalized to
/// `0..m`. Elements are plain values; equality, ordering, and hashing are
/// structural on `(m, n, perm, weights)` — the subgroup index `p` rides
/// along for membership queries and formatting but is not structural.
#[derive(Debug, Clone)]
pub struct WreathElement {
    params: GroupParams,
    perm: Vec<usize>,
    weights: Vec<u64>,
}

impl PartialEq for WreathElement {
    fn eq(&self, other: &Self) -> bool {
        self.params.m == other.params.m
            && self.params.n == other.params.n
            && self.perm == other.perm
            && self.weights == other.weights
    }
}

impl Eq for WreathElement {}

impl PartialOrd for WreathElement {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WreathElement {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.params.m, self.params.n, &self.perm, &self.weights).cmp(&(
            other.params.m,
            other.params.n,
            &other.perm,
            &other.weights,
        ))
    }
}

impl core::hash::Hash for WreathElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.params.m.hash(state);
        self.params.n.hash(state);
        self.perm.hash(state);
        self.weights.hash(state);
    }
}

impl WreathElement {
    /// Builds an element from a 0-indexed image array and arbitrary integer
    /// weights, which are reduced mod `m`.
    pub fn new(params: GroupParams, perm: Vec<usize>, weights: &[i64]) -> Result<Self, Error> {
        let n = params.n;
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        if weights.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: weights.len(),
            });
        }
        let mut seen = vec![false; n];
        for &image in &perm {
            if image >= n || seen[image] {
                return Err(Error::NotABijection);
            }
            seen[image] = true;
        }
        let m = params.m as i64;
        let weights = weights.iter().map(|&w| w.rem_euclid(m) as u64).collect();
        Ok(WreathElement {
            params,
            perm,
            weights,
        })
    }

    /// Internal constructor for parts already known to be normalized.
    pub(crate) fn from_parts(params: GroupParams, perm: Vec<usize>, weights: Vec<u64>) -> Self {
        debug_assert_eq!(perm.len(), params.n);
        debug_assert_eq!(weights.len(), params.n);
        debug_assert!(weights.iter().all(|&w| w < params.m));
        WreathElement {
            params,
            perm,
            weights,
        }
    }

    pub fn identity(params: GroupParams) -> Self {
        WreathElement {
            perm: (0..params.n).collect(),
            weights: vec![0; params.n],
            params,
        }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    /// 0-indexed image array of the underlying permutation.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Weights, normalized to `0..m`.
    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Total weight `wt(w)`, mod `m`.
    pub fn total_weight(&self) -> u64 {
        self.weights
            .iter()
            .fold(0, |acc, &w| (acc + w) % self.params.m)
    }

    /// Whether the element lies in `G(m, p, n)`, i.e. `wt(w) = 0 (mod p)`.
    pub fn is_member(&self) -> bool {
        self.total_weight().is_multiple_of(self.params.p)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &image)| j == image)
            && self.weights.iter().all(|&w| w == 0)
    }

    /// Group product `self * other` ("apply `other` first"): the image of
    /// `e_j` is `zeta^{b_j} zeta^{a_{v(j)}} e_{u(v(j))}` for `self = [u; a]`
    /// and `other = [v; b]`.
    ///
    /// Panics if the two elements have different `(m, n)`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            (self.params.m, self.params.n),
            (other.params.m, other.params.n),
            "cannot compose elements of different groups"
        );
        let m = self.params.m;
        let n = self.params.n;
        let mut perm = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for j in 0..n {
            perm.push(self.perm[other.perm[j]]);
            weights.push((other.weights[j] + self.weights[other.perm[j]]) % m);
        }
        WreathElement {
            params: self.params,
            perm,
            weights,
        }
    }

    pub fn inverse(&self) -> Self {
        let m = self.params.m;
        let n = self.params.n;
        let mut perm = vec![0; n];
        let mut weights = vec![0; n];
        for j in 0..n {
            perm[self.perm[j]] = j;
            weights[self.perm[j]] = (m - self.weights[j]) % m;
        }
        WreathElement {
            params: self.params,
            perm,
            weights,
        }
    }

    /// Conjugate `h * self * h^{-1}`.
    pub fn conjugated_by(&self, h: &Self) -> Self {
        h.compose(self).compose(&h.inverse())
    }

    pub fn pow(&self, exponent: u64) -> Self {
        let mut result = WreathElement::identity(self.params);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        result
    }

    /// Cycle structure of the underlying permutation, with per-cycle
    /// weights. Fixed points count as cycles of size 1.
    pub fn cycle_data(&self) -> CycleData {
        let n = self.params.n;
        let m = self.params.m;
        let mut cycle_of = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if cycle_of[start] != usize::MAX {
                continue;
            }
            let index = cycles.len();
            let mut support = Vec::new();
            let mut weight = 0u64;
            let mut pos = start;
            loop {
                cycle_of[pos] = index;
                support.push(pos);
                weight = (weight + self.weights[pos]) % m;
                pos = self.perm[pos];
                if pos == start {
                    break;
                }
            }
            cycles.push(Cycle { support, weight });
        }
        CycleData { cycles, cycle_of }
    }

    /// The element that agrees with `self` on the supports of the selected
    /// cycles and is the identity (with weight 0) elsewhere.
    ///
    /// `selected` holds indices into [`WreathElement::cycle_data`]. The
    /// result keeps this element's parameters but may leave the subgroup
    /// `G(m, p, n)`; check [`WreathElement::is_member`] when that matters.
    ///
    /// Panics if an index is out of range.
    pub fn restricted_to_cycles(&self, selected: &[usize]) -> Self {
        let data = self.cycle_data();
        let n = self.params.n;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut weights = vec![0; n];
        for &index in selected {
            let cycle = &data.cycles[index];
            for &pos in &cycle.support {
                perm[pos] = self.perm[pos];
                weights[pos] = self.weights[pos];
            }
        }
        WreathElement {
            params: self.params,
            perm,
            weights,
        }
    }
}

/// One cycle of an element: its support in cyclic order (starting at the
/// minimal position, 0-indexed) and its weight mod `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub support: Vec<usize>,
    pub weight: u64,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Minimal position of the support (the first entry, by construction).
    pub fn min_pos(&self) -> usize {
        self.support[0]
    }
}

/// The cycles of an element, ordered by minimal support position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleData {
    cycles: Vec<Cycle>,
    cycle_of: Vec<usize>,
}

impl CycleData {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    /// Number of cycles `c(w)`, fixed points included.
    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Number of weight-0 cycles `c_0(w)`.
    pub fn zero_weight_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.weight == 0).count()
    }

    /// Index of the cycle containing the given position.
    pub fn cycle_of(&self, pos: usize) -> usize {
        self.cycle_of[pos]
    }

    /// Cycle weights in cycle order.
    pub fn weights(&self) -> Vec<u64> {
        self.cycles.iter().map(|c| c.weight).collect()
    }

    /// Multiset of `(length, weight)` pairs, sorted. Conjugation-invariant.
    pub fn shape(&self) -> Vec<(usize, u64)> {
        let mut shape: Vec<(usize, u64)> = self
            .cycles
            .iter()
            .map(|c| (c.support.len(), c.weight))
            .collect();
        shape.sort_unstable();
        shape
    }
}
