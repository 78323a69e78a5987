//! Distinguished element families: regular elements and parabolic
//! quasi-Coxeter elements.
//!
//! Regularity (possessing an eigenvector off every reflecting hyperplane)
//! is decided purely combinatorially, by matching the cycle shape against
//! the powers of the two Coxeter-like elements `epsilon` and
//! `epsilon_prime`; no eigenvector is ever computed. The parabolic
//! quasi-Coxeter elements of `G(m,1,n)` and `G(m,m,n)` likewise have a
//! cycle-shape criterion: at most one (resp. two) cycles of nonzero weight,
//! each weight primitive mod `m`.

use alloc::vec;
use alloc::vec::Vec;

use crate::element::{GroupParams, WreathElement};
use crate::error::Error;

/// The element `[(1 2 .. n); (0, .., 0, 1)]` of `G(m, 1, n)`: a regular
/// element of order `m * n` (a Coxeter element for that group).
pub fn epsilon(m: u64, n: usize) -> WreathElement {
    let params = GroupParams::new(m, 1, n).expect("m, n >= 1");
    let mut perm: Vec<usize> = (1..n).collect();
    perm.push(0);
    let mut weights = vec![0; n];
    weights[n - 1] = 1 % m;
    WreathElement::from_parts(params, perm, weights)
}

/// The element `[(1 2 .. n-1)(n); (0, .., 0, 1, -1)]`: a Coxeter element of
/// `G(m, m, n)` (total weight 0). Needs `n >= 2`.
pub fn epsilon_prime(m: u64, n: usize) -> Result<WreathElement, Error> {
    if n < 2 {
        return Err(Error::Precondition("epsilon_prime needs n >= 2"));
    }
    let params = GroupParams::new(m, m, n).expect("m, n >= 1");
    let mut perm: Vec<usize> = (1..n - 1).collect();
    perm.push(0);
    perm.push(n - 1);
    let mut weights = vec![0; n];
    weights[n - 2] = 1 % m;
    weights[n - 1] = (m - 1) % m;
    Ok(WreathElement::from_parts(params, perm, weights))
}

/// Which power shape a regular element matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularShape {
    /// `gcd(r, n)` cycles, each of length `n / gcd(r, n)` and weight
    /// `r / gcd(r, n)`.
    EpsilonPower { r: u64, cycles: u64 },
    /// `gcd(r, n-1)` cycles of length `(n-1) / gcd(r, n-1)` and weight
    /// `r / gcd(r, n-1)`, plus one fixed point of weight `-r`. Only arises
    /// for `p = m`.
    EpsilonPrimePower { r: u64, cycles: u64 },
}

/// Verdict of the combinatorial regularity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub shape: Option<RegularShape>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Decides regularity of a member of `G(m, p, n)` by cycle shape.
///
/// For `p < m` the regular elements are exactly those shaped like a power
/// of [`epsilon`]; for `p = m` the powers of [`epsilon_prime`] join in.
/// The exponent `r` is searched up to the order of the base element
/// (`m * n`, resp. `m * (n - 1)`), which covers every power shape.
pub fn is_regular(w: &WreathElement) -> Result<RegularityVerdict, Error> {
    if !w.is_member() {
        return Err(Error::NotAMember {
            total_weight: w.total_weight(),
            p: w.params().p(),
        });
    }
    let params = w.params();
    let (m, p, n) = (params.m(), params.p(), params.n() as u64);
    let shape = w.cycle_data().shape();

    for r in 1..=m * n {
        let g = gcd(r, n);
        if shape.len() as u64 != g {
            continue;
        }
        let length = (n / g) as usize;
        let weight = (r / g) % m;
        if shape.iter().all(|&(len, wt)| len == length && wt == weight) {
            return Ok(RegularityVerdict {
                regular: true,
                shape: Some(RegularShape::EpsilonPower { r, cycles: g }),
            });
        }
    }
    if p == m && n >= 2 {
        for r in 1..=m * (n - 1) {
            let g = gcd(r, n - 1);
            if shape.len() as u64 != g + 1 {
                continue;
            }
            let length = ((n - 1) / g) as usize;
            let weight = (r / g) % m;
            let mut expected: Vec<(usize, u64)> = vec![(length, weight); g as usize];
            expected.push((1, (m - r % m) % m));
            expected.sort_unstable();
            if shape == expected {
                return Ok(RegularityVerdict {
                    regular: true,
                    shape: Some(RegularShape::EpsilonPrimePower { r, cycles: g }),
                });
            }
        }
    }
    Ok(RegularityVerdict {
        regular: false,
        shape: None,
    })
}

/// Combinatorial test for parabolic quasi-Coxeter elements.
///
/// In `G(m, 1, n)` these are the elements with at most one cycle of
/// nonzero weight, that weight primitive mod `m`; in `G(m, m, n)` at most
/// two such cycles, both weights primitive (their sum is 0 by membership).
/// No criterion is available for `1 < p < m`.
pub fn is_parabolic_quasi_coxeter(w: &WreathElement) -> Result<bool, Error> {
    let params = w.params();
    let (m, p) = (params.m(), params.p());
    if p != 1 && p != m {
        return Err(Error::UnsupportedParams { m, p });
    }
    if !w.is_member() {
        return Err(Error::NotAMember {
            total_weight: w.total_weight(),
            p,
        });
    }
    let nonzero: Vec<u64> = w
        .cycle_data()
        .weights()
        .into_iter()
        .filter(|&weight| weight != 0)
        .collect();
    let allowed = if p == 1 { 1 } else { 2 };
    Ok(nonzero.len() <= allowed && nonzero.iter().all(|&weight| gcd(weight, m) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_group;
    use crate::notation::parse;

    fn element(text: &str) -> WreathElement {
        parse(text).unwrap().1
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon(3, 3), element("G(3,1,3):[(1 2 3); 0,0,1]"));
        // m = 1: the plain n-cycle
        let eps = epsilon(1, 4);
        assert_eq!(eps.perm(), &[1, 2, 3, 0]);
        assert!(eps.weights().iter().all(|&w| w == 0));
        // order m * n
        for (m, n) in [(3u64, 3usize), (2, 4), (4, 2)] {
            let eps = epsilon(m, n);
            assert!(eps.pow(m * n as u64).is_identity());
            for r in 1..m * n as u64 {
                assert!(!eps.pow(r).is_identity());
            }
        }
    }

    #[test]
    fn epsilon_prime_examples() {
        let ep = epsilon_prime(3, 3).unwrap();
        assert_eq!(ep, element("G(3,3,3):[(1 2); 0,1,-1]"));
        assert_eq!(ep.total_weight(), 0);
        assert!(ep.is_member());
        assert!(matches!(epsilon_prime(3, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn epsilon_prime_power_shapes() {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let (m, n) = (4u64, 5usize);
        let ep = epsilon_prime(m, n).unwrap();
        for r in 1..=m * (n as u64 - 1) {
            let power = ep.pow(r);
            let g = gcd(r, n as u64 - 1);
            let data = power.cycle_data();
            assert_eq!(data.count() as u64, g + 1, "r={r}");
            let mut expected: Vec<(usize, u64)> =
                vec![((n as u64 - 1) as usize / g as usize, (r / g) % m); g as usize];
            expected.push((1, (m - r % m) % m));
            expected.sort_unstable();
            assert_eq!(data.shape(), expected, "r={r}");
        }
    }

    #[test]
    fn regularity_examples() {
        let w1 = element("G(3,3,3):[; 1,1,1]");
        let verdict = is_regular(&w1).unwrap();
        assert!(verdict.regular);
        assert_eq!(
            verdict.shape,
            Some(RegularShape::EpsilonPower { r: 3, cycles: 3 })
        );

        let eps = epsilon(3, 3);
        let verdict = is_regular(&eps).unwrap();
        assert_eq!(
            verdict.shape,
            Some(RegularShape::EpsilonPower { r: 1, cycles: 1 })
        );

        let t = element("G(3,1,4):[(1 2); 0,0,0,0]");
        assert!(!is_regular(&t).unwrap().regular);
    }

    #[test]
    fn powers_of_the_base_elements_are_regular() {
        for (m, n) in [(3u64, 3usize), (2, 4)] {
            let eps = epsilon(m, n);
            for r in 1..=m * n as u64 {
                assert!(is_regular(&eps.pow(r)).unwrap().regular, "eps^{r}");
            }
            let ep = epsilon_prime(m, n).unwrap();
            for r in 1..=m * (n as u64 - 1) {
                let power = ep.pow(r);
                assert!(power.is_member());
                assert!(is_regular(&power).unwrap().regular, "eps'^{r}");
            }
        }
    }

    #[test]
    fn regular_elements_match_a_computed_power_shape() {
        // shape matching agrees with the shapes of actual powers, computed
        // by direct exponentiation rather than the gcd formulas
        for (m, p, n) in [
            (3u64, 3u64, 3usize),
            (4, 4, 3),
            (4, 4, 4),
            (2, 1, 3),
            (4, 2, 2),
        ] {
            let params = GroupParams::new(m, p, n).unwrap();
            let mut power_shapes = alloc::collections::BTreeSet::new();
            let eps = epsilon(m, n);
            for r in 1..=m * n as u64 {
                power_shapes.insert(eps.pow(r).cycle_data().shape());
            }
            if p == m && n >= 2 {
                let ep = epsilon_prime(m, n).unwrap();
                for r in 1..=m * (n as u64 - 1) {
                    power_shapes.insert(ep.pow(r).cycle_data().shape());
                }
            }
            for w in enumerate_group(&params, 10_000).unwrap() {
                let by_shape = power_shapes.contains(&w.cycle_data().shape());
                assert_eq!(
                    is_regular(&w).unwrap().regular,
                    by_shape,
                    "G({m},{p},{n}) at {w}"
                );
            }
        }
    }

    #[test]
    fn regularity_is_constant_on_conjugacy_classes() {
        let params = GroupParams::new(3, 3, 3).unwrap();
        let all: Vec<WreathElement> = enumerate_group(&params, 1000).unwrap().collect();
        for w in &all {
            let verdict = is_regular(w).unwrap().regular;
            for h in &all {
                assert_eq!(is_regular(&w.conjugated_by(h)).unwrap().regular, verdict);
            }
        }
    }

    #[test]
    fn parabolic_quasi_coxeter_examples() {
        assert_eq!(is_parabolic_quasi_coxeter(&epsilon(4, 3)), Ok(true));
        let w2 = element("G(3,3,6):[; 1,1,1,-1,-1,-1]");
        assert_eq!(is_parabolic_quasi_coxeter(&w2), Ok(false));
        let id = crate::element::WreathElement::identity(GroupParams::new(6, 6, 2).unwrap());
        assert_eq!(is_parabolic_quasi_coxeter(&id), Ok(true));
        // weight not primitive mod m
        let bad = element("G(4,1,3):[(1 2 3); 0,0,2]");
        assert_eq!(is_parabolic_quasi_coxeter(&bad), Ok(false));
        // undefined strictly between the two extremes
        let mid = element("G(4,2,3):[; 0,0,0]");
        assert_eq!(
            is_parabolic_quasi_coxeter(&mid),
            Err(Error::UnsupportedParams { m: 4, p: 2 })
        );
    }
}
