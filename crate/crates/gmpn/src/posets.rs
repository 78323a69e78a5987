//! Finite posets induced by subadditive statistics on a group.
//!
//! A statistic `f` with `f(xy) <= f(x) + f(y)` and `f(x) = 0` exactly at
//! the identity orders the group by `x <= y  iff  f(x) + f(x^-1 y) = f(y)`.
//! This module materializes that order on an explicit carrier, computes
//! cover relations, gradedness, maximal elements, and the lattice property,
//! extracts lower intervals, and checks the two structural facts such
//! posets carry: the order is graded exactly when `f` is the word length
//! over `{f = 1}`, and intervals of class-function statistics admit the
//! reversal `y -> x y^-1 z`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::element::{GroupParams, WreathElement};
use crate::enumerate::enumerate_group;
use crate::error::Error;
use crate::lengths::{codim_fix, reflection_length};
use crate::symstats::{exc_of_element, SignedPermutation};

/// A nonnegative integer statistic on group elements, tagged with whether
/// it is constant on conjugacy classes.
pub struct Statistic {
    name: String,
    class_function: bool,
    eval: Box<dyn Fn(&WreathElement) -> u64 + Send + Sync>,
}

impl Statistic {
    pub fn new(
        name: &str,
        class_function: bool,
        eval: impl Fn(&WreathElement) -> u64 + Send + Sync + 'static,
    ) -> Self {
        Statistic {
            name: String::from(name),
            class_function,
            eval: Box::new(eval),
        }
    }

    /// Reflection length. Panics when evaluated outside the subgroup.
    pub fn reflection_length() -> Self {
        Statistic::new("lr", true, |w| {
            reflection_length(w).expect("carrier elements must be members")
        })
    }

    /// Fixed-space codimension.
    pub fn codim_fix() -> Self {
        Statistic::new("cdf", true, codim_fix)
    }

    /// Excedance count of the underlying permutation (for `G(1,1,n)`
    /// carriers).
    pub fn excedance() -> Self {
        Statistic::new("exc", false, |w| exc_of_element(w) as u64)
    }

    /// Signed-permutation excedance (for `G(2,1,n)` carriers).
    pub fn excedance_b() -> Self {
        Statistic::new("exc_b", false, |w| {
            exc_b_of_element(w).expect("carrier must consist of signed permutations")
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_class_function(&self) -> bool {
        self.class_function
    }

    pub fn eval(&self, w: &WreathElement) -> u64 {
        (self.eval)(w)
    }

    /// The defining relation: `x <= y` iff `f(x) + f(x^-1 y) = f(y)`.
    pub fn leq(&self, x: &WreathElement, y: &WreathElement) -> bool {
        self.eval(x) + self.eval(&x.inverse().compose(y)) == self.eval(y)
    }
}

fn exc_b_of_element(w: &WreathElement) -> Result<u64, Error> {
    Ok(crate::symstats::exc_b(&SignedPermutation::from_wreath(w)?))
}

/// Checks the subadditive-statistic contract on a carrier: zero exactly at
/// the identity, and `f(xy) <= f(x) + f(y)`. Subadditivity is exhaustive
/// for carriers of at most 500 elements and deterministically sampled
/// above that.
pub fn validate_statistic(carrier: &[WreathElement], stat: &Statistic) -> Result<(), Error> {
    for w in carrier {
        let value = stat.eval(w);
        if w.is_identity() && value != 0 {
            return Err(Error::InvalidStatistic("nonzero at the identity"));
        }
        if !w.is_identity() && value == 0 {
            return Err(Error::InvalidStatistic("zero away from the identity"));
        }
    }
    let size = carrier.len();
    let check = |x: &WreathElement, y: &WreathElement| {
        if stat.eval(&x.compose(y)) > stat.eval(x) + stat.eval(y) {
            return Err(Error::InvalidStatistic("subadditivity fails"));
        }
        Ok(())
    };
    if size <= 500 {
        for x in carrier {
            for y in carrier {
                check(x, y)?;
            }
        }
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        };
        for _ in 0..4 * size {
            let x = &carrier[(next() % size as u64) as usize];
            let y = &carrier[(next() % size as u64) as usize];
            check(x, y)?;
        }
    }
    Ok(())
}

/// Whole-carrier poset under `<=_f`, with the relation held as a bit
/// matrix.
pub struct FinitePoset {
    carrier: Vec<WreathElement>,
    values: Vec<u64>,
    rel: Vec<u64>,
    words: usize,
}

impl FinitePoset {
    /// Builds the poset, validating the statistic on the carrier first.
    pub fn build(carrier: Vec<WreathElement>, stat: &Statistic) -> Result<Self, Error> {
        validate_statistic(&carrier, stat)?;
        let size = carrier.len();
        let values: Vec<u64> = carrier.iter().map(|w| stat.eval(w)).collect();
        let inverses: Vec<WreathElement> = carrier.iter().map(|w| w.inverse()).collect();
        let words = size.div_ceil(64);
        let mut rel = vec![0u64; size * words];
        for i in 0..size {
            for j in 0..size {
                // f(x) + f(x^-1 y) == f(y), skipping the composition when
                // the values alone rule it out
                if values[i] > values[j] {
                    continue;
                }
                let step = stat.eval(&inverses[i].compose(&carrier[j]));
                if values[i] + step == values[j] {
                    rel[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Ok(FinitePoset {
            carrier,
            values,
            rel,
            words,
        })
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn carrier(&self) -> &[WreathElement] {
        &self.carrier
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    /// Cover relations `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                if !self.has_intermediate(i, j) {
                    covers.push((i, j));
                }
            }
        }
        covers
    }

    fn has_intermediate(&self, i: usize, j: usize) -> bool {
        (0..self.len()).any(|k| {
            k != i
                && k != j
                && self.values[i] < self.values[k]
                && self.values[k] < self.values[j]
                && self.leq(i, k)
                && self.leq(k, j)
        })
    }

    /// Whether every cover relation raises the statistic by exactly 1.
    ///
    /// Related pairs with a value gap of 1 are covers automatically (the
    /// statistic is strictly monotone along the strict order), so only
    /// wider related pairs need an intermediate element.
    pub fn is_graded(&self) -> bool {
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j
                    && self.leq(i, j)
                    && self.values[j] - self.values[i] >= 2
                    && !self.has_intermediate(i, j)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Indices of elements with nothing strictly above them.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| j == i || !self.leq(i, j)))
            .collect()
    }

    /// Element counts per statistic value, from 0 to the maximum value.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.values.iter().copied().max().unwrap_or(0) as usize;
        let mut sizes = vec![0; top + 1];
        for &value in &self.values {
            sizes[value as usize] += 1;
        }
        sizes
    }

    /// Whether every pair of elements has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        let size = self.len();
        let words = self.words;
        // columns of the relation, i.e. the down-sets
        let mut below = vec![0u64; size * words];
        for i in 0..size {
            for j in 0..size {
                if self.leq(i, j) {
                    below[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        let mut bounds = vec![0u64; words];
        let intersect = |bounds: &mut Vec<u64>, rows: &[u64], a: usize, b: usize| {
            for (w, slot) in bounds.iter_mut().enumerate() {
                *slot = rows[a * words + w] & rows[b * words + w];
            }
        };
        for a in 0..size {
            for b in (a + 1)..size {
                // least upper bound
                intersect(&mut bounds, &self.rel, a, b);
                if !self.has_least(&bounds, true) {
                    return false;
                }
                // greatest lower bound
                intersect(&mut bounds, &below, a, b);
                if !self.has_least(&bounds, false) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the member set in `bounds` has a least element (`upper` =
    /// true) or greatest element (`upper` = false) under the poset order.
    fn has_least(&self, bounds: &[u64], upper: bool) -> bool {
        let mut extreme: Option<usize> = None;
        for k in iter_bits(bounds) {
            let better = match extreme {
                None => true,
                Some(e) => {
                    if upper {
                        self.values[k] < self.values[e]
                    } else {
                        self.values[k] > self.values[e]
                    }
                }
            };
            if better {
                extreme = Some(k);
            }
        }
        let Some(e) = extreme else {
            return false;
        };
        // the candidate must relate to every bound
        for k in iter_bits(bounds) {
            let related = if upper {
                self.leq(e, k)
            } else {
                self.leq(k, e)
            };
            if !related {
                return false;
            }
        }
        true
    }
}

/// Indices of the set bits of a bit-vector.
fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(word, &value)| {
        core::iter::successors((value != 0).then_some(value), |&bits| {
            let rest = bits & (bits - 1);
            (rest != 0).then_some(rest)
        })
        .map(move |bits| word * 64 + bits.trailing_zeros() as usize)
    })
}

/// The lower interval `[id, top]` under a statistic: all `u` with
/// `f(u) + f(u^-1 top) = f(top)`, in enumeration order.
pub struct Interval {
    pub top: WreathElement,
    pub members: Vec<WreathElement>,
    pub values: Vec<u64>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &WreathElement) -> bool {
        self.members.binary_search(w).is_ok()
    }

    /// Cover relations of the interval as an induced subposet, as index
    /// pairs into `members`.
    pub fn hasse_edges(&self, stat: &Statistic) -> Vec<(usize, usize)> {
        let size = self.members.len();
        let mut rel = vec![false; size * size];
        for i in 0..size {
            for j in 0..size {
                if i != j && self.values[i] < self.values[j] {
                    rel[i * size + j] = stat.leq(&self.members[i], &self.members[j]);
                }
            }
        }
        let mut edges = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if rel[i * size + j] && !(0..size).any(|k| rel[i * size + k] && rel[k * size + j]) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

/// Computes `[id, top]` by one pass over the group.
pub fn interval(top: &WreathElement, stat: &Statistic, cap: u128) -> Result<Interval, Error> {
    let params = top.params();
    let top_value = stat.eval(top);
    let mut members = Vec::new();
    let mut values = Vec::new();
    for u in enumerate_group(&params, cap)? {
        let value = stat.eval(&u);
        if value + stat.eval(&u.inverse().compose(top)) == top_value {
            members.push(u);
            values.push(value);
        }
    }
    Ok(Interval {
        top: top.clone(),
        members,
        values,
    })
}

/// Outcome of checking whether a statistic is the word length over its
/// value-1 elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthFunctionCheck {
    pub is_length_function: bool,
    /// An element unreachable from the identity, when `{f = 1}` fails to
    /// generate the carrier.
    pub unreachable: Option<WreathElement>,
    /// An element whose word length differs from its statistic value, with
    /// the two values.
    pub mismatch: Option<(WreathElement, u64, u64)>,
}

/// Compares the statistic against breadth-first word length over
/// `T = {t : f(t) = 1}` on a carrier that must be a full group in
/// enumeration order.
pub fn length_function_check(carrier: &[WreathElement], stat: &Statistic) -> LengthFunctionCheck {
    let generators: Vec<&WreathElement> = carrier.iter().filter(|w| stat.eval(w) == 1).collect();
    let mut dist = vec![u64::MAX; carrier.len()];
    let start = carrier
        .iter()
        .position(|w| w.is_identity())
        .expect("carrier contains the identity");
    dist[start] = 0;
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &index in &frontier {
            for t in &generators {
                let neighbor = carrier[index].compose(t);
                let at = carrier
                    .binary_search(&neighbor)
                    .expect("carrier must be closed under multiplication");
                if dist[at] == u64::MAX {
                    dist[at] = dist[index] + 1;
                    next.push(at);
                }
            }
        }
        frontier = next;
    }
    for (index, w) in carrier.iter().enumerate() {
        if dist[index] == u64::MAX {
            return LengthFunctionCheck {
                is_length_function: false,
                unreachable: Some(w.clone()),
                mismatch: None,
            };
        }
        if dist[index] != stat.eval(w) {
            return LengthFunctionCheck {
                is_length_function: false,
                unreachable: None,
                mismatch: Some((w.clone(), dist[index], stat.eval(w))),
            };
        }
    }
    LengthFunctionCheck {
        is_length_function: true,
        unreachable: None,
        mismatch: None,
    }
}

/// Checks that `y -> y^-1 top` maps the interval onto itself reversing the
/// order. Requires the statistic to be declared (and spot-checked) constant
/// on conjugacy classes.
pub fn antiautomorphism_check(interval: &Interval, stat: &Statistic) -> Result<bool, Error> {
    if !stat.is_class_function() {
        return Err(Error::NotAClassFunction);
    }
    let members = &interval.members;
    let size = members.len();
    // spot-check the declaration on the interval itself
    let limit = size.min(40);
    for x in members.iter().take(limit) {
        for h in members.iter().take(limit) {
            if stat.eval(&x.conjugated_by(h)) != stat.eval(x) {
                return Err(Error::NotAClassFunction);
            }
        }
    }
    let mapped: Vec<usize> = {
        let mut mapped = Vec::with_capacity(size);
        for y in members {
            let image = y.inverse().compose(&interval.top);
            match members.binary_search(&image) {
                Ok(at) => mapped.push(at),
                Err(_) => return Ok(false),
            }
        }
        mapped
    };
    let mut rel = vec![false; size * size];
    for i in 0..size {
        for j in 0..size {
            rel[i * size + j] = stat.leq(&members[i], &members[j]);
        }
    }
    for i in 0..size {
        for j in 0..size {
            if rel[i * size + j] != rel[mapped[j] * size + mapped[i]] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convenience: the full group as a sorted carrier.
pub fn group_carrier(params: &GroupParams, cap: u128) -> Result<Vec<WreathElement>, Error> {
    Ok(enumerate_group(params, cap)?.collect())
}
