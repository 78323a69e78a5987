//! Scan and oracle-check engines.
//!
//! A scan verifies, element by element, that the weight characterization of
//! interval coincidence agrees with brute-force set equality of the two
//! intervals. By default one representative per `(cycle length, cycle
//! weight)` multiset is checked — both statistics, the predicate, and the
//! interval cardinalities are constant on conjugacy classes, and classes of
//! the ambient wreath product refine to these shape classes — while
//! `--full` checks every element, which is how the reduction itself gets
//! validated.
//!
//! Workers are pure; results are merged in enumeration order, so the
//! parallelism level never changes the output bytes.

use std::collections::BTreeMap;
use std::time::Instant;

use gmpn::characterize::intervals_coincide;
use gmpn::enumerate::enumerate_group;
use gmpn::lengths::{bfs_length_table, codim_fix, reflection_length_with};
use gmpn::partitions::VmaxSolver;
use gmpn::{GroupParams, WreathElement};
use rayon::prelude::*;

use crate::config::{Config, MemoStrategy};
use crate::report::{
    GroupJson, ScanConfigJson, ScanRecord, ScanReport, ScanSummary, WitnessJson, FORMAT_VERSION,
};

pub struct ScanOutcome {
    pub report: ScanReport,
    /// False when some record has `predicate != brute_force_intervals_equal`.
    pub ok: bool,
}

/// Runs the scan inside a rayon pool sized by `config.parallel`.
pub fn run_scan(params: &GroupParams, config: &Config, full: bool) -> anyhow::Result<ScanOutcome> {
    let run = || scan_inner(params, config, full);
    let outcome = match config.parallel {
        0 => run()?,
        workers => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()?
            .install(run)?,
    };
    Ok(outcome)
}

fn scan_inner(params: &GroupParams, config: &Config, full: bool) -> anyhow::Result<ScanOutcome> {
    let started = Instant::now();
    let elements: Vec<WreathElement> = enumerate_group(params, config.enumeration_cap)?.collect();
    let inverses: Vec<WreathElement> = elements.par_iter().map(|w| w.inverse()).collect();
    let lengths: Vec<(u64, u64)> = elements
        .par_iter()
        .map_init(
            || VmaxSolver::new(params.m(), params.p()),
            |solver, w| {
                let lr = reflection_length_with(solver, w).expect("enumerated member");
                (lr, codim_fix(w))
            },
        )
        .collect();

    // representatives: one element per (length, weight) cycle multiset
    let representatives: Vec<(usize, u64)> = if full {
        (0..elements.len()).map(|index| (index, 1)).collect()
    } else {
        let mut classes: BTreeMap<Vec<(usize, u64)>, (usize, u64)> = BTreeMap::new();
        for (index, w) in elements.iter().enumerate() {
            let entry = classes.entry(w.cycle_data().shape()).or_insert((index, 0));
            entry.1 += 1;
        }
        let mut reps: Vec<(usize, u64)> = classes.into_values().collect();
        reps.sort_unstable();
        reps
    };

    let verify = |solver: &mut VmaxSolver, rep: usize| -> ScanRecord {
        let w = &elements[rep];
        let (lr_w, cdf_w) = lengths[rep];
        let verdict = intervals_coincide(w).expect("enumerated member");
        let mut equal = true;
        for (index, inverse) in inverses.iter().enumerate() {
            let rest = inverse.compose(w);
            let in_lr =
                lengths[index].0 + reflection_length_with(solver, &rest).expect("member") == lr_w;
            let in_cdf = lengths[index].1 + codim_fix(&rest) == cdf_w;
            if in_lr != in_cdf {
                equal = false;
                break;
            }
        }
        let witness = if verdict.holds() {
            None
        } else if !verdict.pairing {
            let t = gmpn::characterize::reflection_witness(w).expect("pairing clause fails");
            Some(WitnessJson {
                kind: "reflection".into(),
                element: t.to_string(),
            })
        } else {
            let u = gmpn::characterize::restriction_witness(w).expect("subset clause fails");
            Some(WitnessJson {
                kind: "restriction".into(),
                element: u.to_string(),
            })
        };
        ScanRecord {
            element: w.to_string(),
            class_size: 0, // filled by the caller
            cycle_weights: w.cycle_data().weights(),
            reflection_length: lr_w,
            codim_fix: cdf_w,
            condition1: verdict.pairing,
            condition2: verdict.subsets,
            predicate: verdict.holds(),
            brute_force_intervals_equal: equal,
            witness,
        }
    };

    let mut records: Vec<ScanRecord> = match config.memo {
        MemoStrategy::Shared => representatives
            .par_iter()
            .map_init(
                || VmaxSolver::new(params.m(), params.p()),
                |solver, &(rep, _)| verify(solver, rep),
            )
            .collect(),
        MemoStrategy::Fresh => representatives
            .par_iter()
            .map(|&(rep, _)| verify(&mut VmaxSolver::new(params.m(), params.p()), rep))
            .collect(),
    };
    for (record, &(_, class_size)) in records.iter_mut().zip(&representatives) {
        record.class_size = class_size;
    }

    let predicate_true = records.iter().filter(|r| r.predicate).count() as u64;
    let mismatches = records
        .iter()
        .filter(|r| r.predicate != r.brute_force_intervals_equal)
        .count() as u64;
    let summary = ScanSummary {
        representatives: records.len() as u64,
        elements: elements.len() as u64,
        predicate_true,
        predicate_false: records.len() as u64 - predicate_true,
        mismatches,
    };
    let report = ScanReport {
        format_version: FORMAT_VERSION,
        group: GroupJson::new(params),
        mode: if full {
            "full".into()
        } else {
            "classes".into()
        },
        config: ScanConfigJson {
            enumeration_cap: config.enumeration_cap.min(u64::MAX as u128) as u64,
            parallelism: config.parallel,
            memo: config.memo.as_str().into(),
        },
        records,
        summary,
        timing_ms: started.elapsed().as_millis() as u64,
    };
    Ok(ScanOutcome {
        ok: mismatches == 0,
        report,
    })
}

pub struct BfsCheckOutcome {
    pub elements: u64,
    pub max_length: u32,
    /// First disagreement `(element, formula value, oracle value)`.
    pub mismatch: Option<(String, u64, u32)>,
}

/// Compares the partition formula for reflection length against the
/// breadth-first oracle on every element of the group.
pub fn run_bfs_check(params: &GroupParams, config: &Config) -> anyhow::Result<BfsCheckOutcome> {
    let table = bfs_length_table(params, config.enumeration_cap)?;
    let mut solver = VmaxSolver::new(params.m(), params.p());
    let mut mismatch = None;
    for (w, oracle) in table.iter() {
        let formula = reflection_length_with(&mut solver, w)?;
        if formula != oracle as u64 {
            mismatch = Some((w.to_string(), formula, oracle));
            break;
        }
    }
    Ok(BfsCheckOutcome {
        elements: table.len() as u64,
        max_length: table.max_distance(),
        mismatch,
    })
}
