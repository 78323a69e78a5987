//! Excedance statistics on the symmetric group and on signed permutations.
//!
//! The excedance count is a subadditive statistic that vanishes only at the
//! identity, and it is in fact the word length over the permutations with a
//! single excedance; [`exc_factorize`] realizes the matching factorization
//! constructively. [`exc_b`] is the signed-permutation analog; its length
//! -function behavior is a reproduction target for small ranks only, not a
//! theorem.
//!
//! Plain permutations are handled as 0-indexed image slices; `G(1,1,n)`
//! elements work unchanged through [`exc_of_element`], and the signed group
//! is `G(2,1,n)` via [`SignedPermutation::from_wreath`].

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::{GroupParams, WreathElement};
use crate::error::Error;

/// Number of excedances `#{i : w(i) > i}` of a 0-indexed image array.
///
/// The last position can never be an excedance, so quantifying over all
/// positions or all but the last makes no difference.
pub fn exc(perm: &[usize]) -> usize {
    perm.iter()
        .enumerate()
        .filter(|&(i, &image)| image > i)
        .count()
}

/// [`exc`] of the underlying permutation of a wreath element.
pub fn exc_of_element(w: &WreathElement) -> usize {
    exc(w.perm())
}

/// Whether the permutation has exactly one excedance. Such permutations
/// are exactly the single nontrivial cycles that can be rotated into
/// strictly decreasing order.
pub fn is_one_excedance(perm: &[usize]) -> bool {
    exc(perm) == 1
}

/// Factors a permutation into exactly `exc(perm)` one-excedance
/// permutations whose ordered product (left to right, rightmost applied
/// first) is the input.
///
/// One factor is peeled per round: starting from the smallest excedance
/// position, repeatedly transpose with the smallest later position holding
/// a small enough value until the excedance disappears; the transpositions
/// form a descending cycle with a single excedance.
pub fn exc_factorize(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut v: Vec<usize> = perm.to_vec();
    let mut factors: Vec<Vec<usize>> = Vec::new();
    while let Some(first) = (0..n).find(|&i| v[i] > i) {
        let mut chain = vec![first];
        let mut pos = first;
        while v[pos] > pos {
            let next = (pos + 1..n)
                .find(|&b| v[b] <= pos)
                .expect("an excedance forces a later small value");
            v.swap(pos, next);
            chain.push(next);
            pos = next;
        }
        // factor is the cycle sending chain[0] -> chain.last and
        // chain[k] -> chain[k-1]: descending cyclic order, one excedance
        let mut factor: Vec<usize> = (0..n).collect();
        factor[chain[0]] = *chain.last().expect("chain is nonempty");
        for pair in chain.windows(2) {
            factor[pair[1]] = pair[0];
        }
        debug_assert_eq!(exc(&factor), 1);
        factors.push(factor);
    }
    factors.reverse();
    factors
}

/// Eulerian number `A(n, k)`: permutations of `n` with `k` excedances.
///
/// Panics when `k >= n`.
pub fn eulerian(n: usize, k: usize) -> u64 {
    assert!(n >= 1 && k < n, "eulerian numbers need 0 <= k < n");
    let mut row = vec![1u64];
    for size in 2..=n {
        let mut next = vec![0u64; size.min(k + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let keep = row.get(j).copied().unwrap_or(0);
            let grow = if j > 0 {
                row.get(j - 1).copied().unwrap_or(0)
            } else {
                0
            };
            *slot = (j as u64 + 1) * keep + (size as u64 - j as u64) * grow;
        }
        row = next;
    }
    row[k]
}

/// A signed permutation: a bijection `w` of `{±1, .., ±n}` with
/// `w(-i) = -w(i)`, stored as the images of `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i64>,
}

impl SignedPermutation {
    /// Builds from the images of `1..=n`; absolute values must form a
    /// permutation.
    pub fn new(images: Vec<i64>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &image in &images {
            let abs = image.unsigned_abs() as usize;
            if image == 0 || abs > n || seen[abs - 1] {
                return Err(Error::NotABijection);
            }
            seen[abs - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i64).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-indexed, positive).
    pub fn image(&self, i: usize) -> i64 {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    /// Product `self * other`, applying `other` first — the same
    /// convention as [`WreathElement::compose`].
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.n(),
            other.n(),
            "cannot compose signed permutations of different degree"
        );
        let images = other
            .images
            .iter()
            .map(|&image| {
                let target = self.images[image.unsigned_abs() as usize - 1];
                if image < 0 {
                    -target
                } else {
                    target
                }
            })
            .collect();
        SignedPermutation { images }
    }

    /// Reads a `G(2, 1, n)` element as a signed permutation: position `j`
    /// maps to `u(j)` with sign `(-1)^{a_j}`.
    pub fn from_wreath(w: &WreathElement) -> Result<Self, Error> {
        if w.params().m() != 2 {
            return Err(Error::Precondition(
                "signed permutations correspond to m = 2",
            ));
        }
        let images = w
            .perm()
            .iter()
            .zip(w.weights())
            .map(|(&image, &weight)| {
                let target = image as i64 + 1;
                if weight == 1 {
                    -target
                } else {
                    target
                }
            })
            .collect();
        Ok(SignedPermutation { images })
    }

    /// The corresponding element of `G(2, 1, n)`.
    pub fn to_wreath(&self) -> WreathElement {
        let n = self.n();
        let params = GroupParams::new(2, 1, n).expect("valid parameters");
        let perm = self
            .images
            .iter()
            .map(|&image| image.unsigned_abs() as usize - 1)
            .collect();
        let weights = self
            .images
            .iter()
            .map(|&image| i64::from(image < 0))
            .collect::<Vec<_>>();
        WreathElement::new(params, perm, &weights).expect("images form a permutation")
    }

    /// Parses one-line window notation: `"2 -1 3"`.
    pub fn parse_window(text: &str) -> Result<Self, Error> {
        let images = text
            .split_whitespace()
            .map(|token| {
                token
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(alloc::format!("bad window entry `{token}`")))
            })
            .collect::<Result<Vec<i64>, Error>>()?;
        SignedPermutation::new(images)
    }
}

impl fmt::Display for SignedPermutation {
    /// One-line window notation with bars rendered as leading minus signs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, image) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{image}")?;
        }
        Ok(())
    }
}

/// Window notation of a signed permutation.
pub fn window(w: &SignedPermutation) -> String {
    use alloc::string::ToString;
    w.to_string()
}

/// Signed-permutation excedance:
/// `floor((2 #{i in [n-1] : w(i) > i} + #{i in [n] : w(i) < 0} + 1) / 2)`.
pub fn exc_b(w: &SignedPermutation) -> u64 {
    let n = w.n();
    let type_a = (1..n).filter(|&i| w.image(i) > i as i64).count() as u64;
    let negatives = (1..=n).filter(|&i| w.image(i) < 0).count() as u64;
    (2 * type_a + negatives).div_ceil(2)
}
