//! Excedance poset analysis for the `exc` command.
//!
//! Type a builds `(S_n, <=_exc)` and checks gradedness, the Eulerian rank
//! sizes, the unique maximum `2 3 .. n 1`, the length-function property,
//! and (under the cap) the lattice property. Type b does the analogous run
//! for signed permutations under `exc_b`; its expected rank sizes are
//! whatever direct counting of `{w : exc_b(w) = k}` gives — reproducing the
//! reported small-rank computations, as a conjecture check rather than a
//! theorem.

use anyhow::{bail, Result};
use gmpn::posets::{group_carrier, length_function_check, FinitePoset, Statistic};
use gmpn::special::epsilon;
use gmpn::symstats::{eulerian, exc_b, SignedPermutation};
use gmpn::GroupParams;

use crate::config::Config;
use crate::report::{ExcReport, FORMAT_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcKind {
    A,
    B,
}

pub const TYPE_A_MAX_N: usize = 8;
pub const TYPE_B_MAX_N: usize = 5;

pub fn run_exc(kind: ExcKind, n: usize, config: &Config) -> Result<ExcReport> {
    let (params, stat, expected_max) = match kind {
        ExcKind::A => {
            if n == 0 || n > TYPE_A_MAX_N {
                bail!("type a supports 1 <= n <= {TYPE_A_MAX_N}");
            }
            // 2 3 .. n 1 as an element of G(1,1,n)
            (
                GroupParams::new(1, 1, n)?,
                Statistic::excedance(),
                epsilon(1, n),
            )
        }
        ExcKind::B => {
            if n == 0 || n > TYPE_B_MAX_N {
                bail!("type b supports 1 <= n <= {TYPE_B_MAX_N}");
            }
            // 2 3 .. n -1 corresponds to [(1 2 .. n); (0, .., 0, 1)]
            (
                GroupParams::new(2, 1, n)?,
                Statistic::excedance_b(),
                epsilon(2, n),
            )
        }
    };
    let carrier = group_carrier(&params, config.enumeration_cap)?;
    let length_check = length_function_check(&carrier, &stat);
    let poset = FinitePoset::build(carrier, &stat)?;
    let graded = poset.is_graded();

    let rank_sizes: Vec<u64> = poset.rank_sizes().into_iter().map(|s| s as u64).collect();
    let expected_rank_sizes: Vec<u64> = match kind {
        ExcKind::A => (0..n).map(|k| eulerian(n, k)).collect(),
        // direct counting, independent of the poset structure
        ExcKind::B => {
            let mut counts = vec![0u64; rank_sizes.len()];
            for w in gmpn::enumerate::enumerate_group(&params, config.enumeration_cap)? {
                let signed = SignedPermutation::from_wreath(&w)?;
                counts[exc_b(&signed) as usize] += 1;
            }
            counts
        }
    };

    let maximal = poset.maximal_elements();
    let unique_maximum = maximal.len() == 1;
    let maximum = maximal
        .iter()
        .map(|&i| render_element(kind, &poset.carrier()[i]))
        .collect::<Vec<_>>()
        .join(", ");
    let lattice = if poset.len() <= config.lattice_cap {
        Some(poset.is_lattice())
    } else {
        None
    };

    Ok(ExcReport {
        format_version: FORMAT_VERSION,
        kind: match kind {
            ExcKind::A => "a".into(),
            ExcKind::B => "b".into(),
        },
        n,
        carrier_size: poset.len() as u64,
        graded,
        is_length_function: length_check.is_length_function,
        rank_sizes_match: rank_sizes == expected_rank_sizes,
        rank_sizes,
        expected_rank_sizes,
        unique_maximum,
        maximum,
        expected_maximum: render_element(kind, &expected_max),
        lattice,
        conjecture_check: kind == ExcKind::B,
    })
}

/// One-line window notation: `"2 3 1"` for type a, `"2 3 -1"` for type b.
fn render_element(kind: ExcKind, w: &gmpn::WreathElement) -> String {
    match kind {
        ExcKind::A => w
            .perm()
            .iter()
            .map(|&image| (image + 1).to_string())
            .collect::<Vec<_>>()
            .join(" "),
        ExcKind::B => SignedPermutation::from_wreath(w)
            .expect("type b carriers have m = 2")
            .to_string(),
    }
}

/// Whether every check the report contains passed.
pub fn all_checks_pass(report: &ExcReport) -> bool {
    report.graded
        && report.is_length_function
        && report.rank_sizes_match
        && report.unique_maximum
        && report.maximum == report.expected_maximum
}
