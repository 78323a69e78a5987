//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its headline numbers (visible under `--nocapture`; failures always
//! print).

use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config as PtConfig, TestRunner};

use gmpn::characterize::{heritability, intervals_coincide, restriction_witness, Condition};
use gmpn::enumerate::enumerate_group;
use gmpn::lengths::{codim_fix, length_equals_codim, reflection_length, reflection_length_with};
use gmpn::notation::parse;
use gmpn::partitions::{induced_cycle_partition, null_pair_partition, v_max, VmaxSolver};
use gmpn::posets::{antiautomorphism_check, interval, FinitePoset, Statistic};
use gmpn::special::{is_parabolic_quasi_coxeter, is_regular};
use gmpn::symstats::{exc, exc_factorize, SignedPermutation};
use gmpn::{GroupParams, WreathElement};
use gmpn_cli::config::Config;
use gmpn_cli::engine::{run_bfs_check, run_scan};
use gmpn_cli::exc::{all_checks_pass, run_exc, ExcKind};

fn params(m: u64, p: u64, n: usize) -> GroupParams {
    GroupParams::new(m, p, n).unwrap()
}

fn element(text: &str) -> WreathElement {
    parse(text).unwrap().1
}

/// Every group with m <= 6, n <= 4, and order at most 2000.
fn sweep_groups() -> Vec<GroupParams> {
    let mut groups = Vec::new();
    for m in 1..=6u64 {
        for p in 1..=m {
            if m % p != 0 {
                continue;
            }
            for n in 1..=4usize {
                let candidate = params(m, p, n);
                if candidate.order().unwrap() <= 2000 {
                    groups.push(candidate);
                }
            }
        }
    }
    groups
}

#[test]
fn criterion_1_reflection_length_formula_matches_bfs_oracle() {
    let started = Instant::now();
    let config = Config::default();
    let groups = [
        (3, 3, 3),
        (4, 2, 3),
        (2, 2, 4),
        (4, 4, 3),
        (6, 6, 2),
        (2, 1, 3),
        (3, 1, 3),
    ];
    let mut elements = 0;
    for (m, p, n) in groups {
        let outcome = run_bfs_check(&params(m, p, n), &config).unwrap();
        assert!(
            outcome.mismatch.is_none(),
            "G({m},{p},{n}): formula disagrees with the oracle: {:?}",
            outcome.mismatch
        );
        elements += outcome.elements;
    }
    println!(
        "criterion 1 PASS: formula == BFS oracle on {} groups, {elements} elements, {:?}",
        groups.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_2_characterization_matches_brute_force_everywhere() {
    let started = Instant::now();
    let config = Config::default();
    let groups = sweep_groups();
    for named in [(3, 3, 3), (2, 2, 4), (4, 4, 4), (4, 2, 3), (6, 6, 3)] {
        assert!(groups.contains(&params(named.0, named.1, named.2)));
    }
    let mut elements = 0;
    for group in &groups {
        let outcome = run_scan(group, &config, false).unwrap();
        assert!(outcome.ok, "mismatch in {group:?}");
        assert_eq!(outcome.report.summary.mismatches, 0);
        elements += outcome.report.summary.elements;
    }
    // validate the class reduction itself on one group
    let full = run_scan(&params(3, 3, 3), &config, true).unwrap();
    assert!(full.ok);
    assert_eq!(full.report.summary.representatives, 54);
    println!(
        "criterion 2 PASS: predicate == brute force on {} groups ({elements} elements), plus a --full scan of G(3,3,3), {:?}",
        groups.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_3_named_values_reproduce_exactly() {
    let started = Instant::now();
    let w1 = element("G(3,3,3):[; 1,1,1]");
    assert_eq!(reflection_length(&w1).unwrap(), 4);
    assert_eq!(codim_fix(&w1), 3);
    let cdf_interval = interval(&w1, &Statistic::codim_fix(), 1000).unwrap();
    let id3 = WreathElement::identity(w1.params());
    assert_eq!(cdf_interval.members, vec![id3, w1.clone()]);

    let w2 = element("G(3,3,6):[; 1,1,1,-1,-1,-1]");
    assert_eq!(reflection_length(&w2).unwrap(), 6);
    assert_eq!(codim_fix(&w2), 6);
    let vm = v_max(&w2.cycle_data(), &w2.params()).unwrap();
    assert_eq!(vm.value, 6);
    assert_eq!(
        vm.witness.display(&w2.cycle_data()).to_string(),
        "[(1)(4) | (2)(5) | (3)(6)]"
    );

    let u = restriction_witness(&w2).unwrap();
    assert_eq!(u, element("G(3,3,6):[; 1,1,1,0,0,0]"));
    let cdf_iv = interval(&w2, &Statistic::codim_fix(), 200_000).unwrap();
    let lr_iv = interval(&w2, &Statistic::reflection_length(), 200_000).unwrap();
    assert!(cdf_iv.contains(&u));
    assert!(!lr_iv.contains(&u));
    println!(
        "criterion 3 PASS: named lengths, intervals, and the separating witness reproduce (cdf interval {} members, lr interval {} members), {:?}",
        cdf_iv.len(),
        lr_iv.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_4_heritability_battery() {
    let started = Instant::now();
    let cap = Config::default().enumeration_cap;

    let w1 = element("G(3,3,3):[; 1,1,1]");
    let report = heritability(&w1, cap).unwrap();
    for condition in [Condition::J, Condition::K] {
        assert_eq!(report.holds(condition), Some(true));
    }
    for condition in [Condition::D, Condition::F, Condition::H] {
        assert_eq!(report.holds(condition), Some(false));
    }

    let scalar = element("G(4,4,4):[; 1,1,1,1]");
    let report = heritability(&scalar, cap).unwrap();
    for condition in [Condition::J, Condition::K] {
        assert_eq!(report.holds(condition), Some(true));
    }
    for condition in [Condition::F, Condition::G, Condition::H, Condition::I] {
        assert_eq!(report.holds(condition), Some(false));
    }
    // the named contradictory element: strictly below in length order with
    // diverging statistics
    let u = element("G(4,4,4):[; 0,2,1,1]");
    let rest = u.inverse().compose(&scalar);
    assert_eq!(
        reflection_length(&u).unwrap() + reflection_length(&rest).unwrap(),
        reflection_length(&scalar).unwrap()
    );
    assert_ne!(u, scalar);
    assert!(reflection_length(&u).unwrap() > codim_fix(&u));

    let w2 = element("G(3,3,6):[; 1,1,1,-1,-1,-1]");
    let report = heritability(&w2, cap).unwrap();
    for condition in [Condition::F, Condition::G, Condition::H, Condition::I] {
        assert_eq!(report.holds(condition), Some(true));
    }
    for condition in [Condition::J, Condition::K] {
        assert_eq!(report.holds(condition), Some(false));
    }

    // too large to enumerate: only the cheap condition is reported
    let big = element("G(9,3,7):[; 1,2,3,-1,-2,-3,3]");
    let report = heritability(&big, cap).unwrap();
    assert!(!report.enumerated);
    assert_eq!(report.holds(Condition::H), Some(true));
    assert!(length_equals_codim(&big).unwrap());
    for condition in Condition::ALL {
        if condition != Condition::H {
            assert_eq!(report.holds(condition), None);
        }
    }
    // the named witness separates the intervals below it and sits strictly
    // below the element in length order
    let witness = element("G(9,3,7):[; 1,2,3,-1,-2,-3,0]");
    let rest = witness.inverse().compose(&big);
    assert_eq!(
        reflection_length(&witness).unwrap() + reflection_length(&rest).unwrap(),
        reflection_length(&big).unwrap()
    );
    assert_ne!(witness, big);
    assert!(!intervals_coincide(&witness).unwrap().holds());
    println!(
        "criterion 4 PASS: heritability flags and contradictory elements reproduce on all four named cases, {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_5_worked_partition_examples_are_byte_exact() {
    let w = element("G(6,6,8):[(1 2 3)(6 7); 0,0,1,-1,-2,2,0,0]");
    let u = element("G(6,6,8):[(2 3)(5 6)(7 8); 0,0,0,3,0,3,0,0]");
    let induced = induced_cycle_partition(&u, &w);
    assert_eq!(
        induced.display(&w.cycle_data()).to_string(),
        "[(1 2 3) | (4) | (5)(6 7)(8)]"
    );

    let w = element("G(16,8,10):[(1 2); 0,1,-1,2,-2,4,-4,8,8,8]");
    let u = element("G(16,8,10):[(4 5)(8 9); 0,0,0,1,-1,4,-4,0,0,8]");
    let refined = null_pair_partition(&u, &w).unwrap();
    assert_eq!(
        refined.display(&w.cycle_data()).to_string(),
        "[(1 2)(3) | (4)(5) | (6)(7) | (8)(9) | (10)]"
    );
    println!("criterion 5 PASS: both worked partition renderings are byte-exact");
}

#[test]
fn criterion_6_degenerate_parameters_always_coincide() {
    let started = Instant::now();
    let config = Config::default();
    let mut groups = Vec::new();
    for m in 1..=4u64 {
        for n in 1..=4usize {
            groups.push(params(m, 1, n));
        }
    }
    for n in 1..=4usize {
        groups.push(params(2, 2, n));
    }
    for m in 1..=6u64 {
        groups.push(params(m, m, 2));
    }
    groups.sort_unstable();
    groups.dedup();
    let mut elements = 0;
    for group in &groups {
        let outcome = run_scan(group, &config, false).unwrap();
        assert!(outcome.ok, "{group:?}");
        for record in &outcome.report.records {
            assert!(record.predicate, "{group:?} at {}", record.element);
            assert!(record.brute_force_intervals_equal);
        }
        elements += outcome.report.summary.elements;
    }
    println!(
        "criterion 6 PASS: every element of {} degenerate-parameter groups ({elements} elements) has coinciding intervals, {:?}",
        groups.len(),
        started.elapsed()
    );
}

#[test]
fn criterion_7_regular_and_quasi_coxeter_elements() {
    let started = Instant::now();
    let config = Config::default();
    let mut regular_hits = 0u64;
    let mut pqc_hits = 0u64;
    for group in sweep_groups() {
        let outcome = run_scan(&group, &config, false).unwrap();
        for record in &outcome.report.records {
            let w = element(&record.element);
            if is_regular(&w).unwrap().regular && record.condition1 {
                assert!(
                    record.brute_force_intervals_equal,
                    "regular element {} of {group:?}",
                    record.element
                );
                regular_hits += record.class_size;
            }
            if (group.p() == 1 || group.p() == group.m()) && is_parabolic_quasi_coxeter(&w).unwrap()
            {
                assert!(record.condition1, "pqc element {}", record.element);
                assert!(
                    record.brute_force_intervals_equal,
                    "pqc element {} of {group:?}",
                    record.element
                );
                pqc_hits += record.class_size;
            }
        }
    }
    assert!(regular_hits > 0 && pqc_hits > 0);
    println!(
        "criterion 7 PASS: {regular_hits} regular elements with agreeing lengths and {pqc_hits} parabolic quasi-Coxeter elements all have coinciding intervals, {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_8_excedance_suite() {
    let started = Instant::now();
    let config = Config::default();
    for n in 1..=6 {
        let report = run_exc(ExcKind::A, n, &config).unwrap();
        assert!(all_checks_pass(&report), "type a, n = {n}: {report:?}");
        if n == 4 {
            assert_eq!(report.rank_sizes, vec![1, 11, 11, 1]);
            assert_eq!(report.maximum, "2 3 4 1");
        }
        if n >= 2 {
            let expected: Vec<String> = (2..=n)
                .map(|k| k.to_string())
                .chain(std::iter::once("1".into()))
                .collect();
            assert_eq!(report.maximum, expected.join(" "));
        }
    }
    // the constructive factorization, exhaustively through rank 7
    for n in 1..=7usize {
        for w in enumerate_group(&params(1, 1, n), 10_000).unwrap() {
            let factors = exc_factorize(w.perm());
            assert_eq!(factors.len(), exc(w.perm()));
            let mut product: Vec<usize> = (0..n).collect();
            for factor in &factors {
                assert_eq!(exc(factor), 1);
                product = (0..n).map(|j| product[factor[j]]).collect();
            }
            assert_eq!(&product, w.perm());
        }
    }
    for n in 1..=4 {
        let report = run_exc(ExcKind::B, n, &config).unwrap();
        assert!(all_checks_pass(&report), "type b, n = {n}: {report:?}");
        if n == 4 {
            assert_eq!(report.maximum, "2 3 4 -1");
            assert_eq!(report.rank_sizes, vec![1, 76, 230, 76, 1]);
        }
        if n >= 2 {
            let expected: Vec<String> = (2..=n)
                .map(|k| k.to_string())
                .chain(std::iter::once("-1".into()))
                .collect();
            assert_eq!(report.maximum, expected.join(" "));
        }
    }
    println!(
        "criterion 8 PASS: excedance posets check out for type a (n <= 6, factorizations n <= 7) and type b (n <= 4), {:?}",
        started.elapsed()
    );
}

#[test]
fn criterion_9_property_suites() {
    let started = Instant::now();
    // exhaustive group axioms on every sweep group of order at most 200
    for group in sweep_groups() {
        if group.order().unwrap() > 200 {
            continue;
        }
        let elements: Vec<WreathElement> = enumerate_group(&group, 10_000).unwrap().collect();
        let id = WreathElement::identity(group);
        for x in &elements {
            assert_eq!(&x.compose(&id), x);
            assert!(x.compose(&x.inverse()).is_identity());
            for y in &elements {
                for z in &elements {
                    assert_eq!(x.compose(y).compose(z), x.compose(&y.compose(z)));
                }
            }
        }
    }

    // subadditivity of both statistics, exhaustive for orders up to 500
    for group in sweep_groups() {
        if group.order().unwrap() > 500 {
            continue;
        }
        let elements: Vec<WreathElement> = enumerate_group(&group, 10_000).unwrap().collect();
        let mut solver = VmaxSolver::new(group.m(), group.p());
        let lr: Vec<u64> = elements
            .iter()
            .map(|w| reflection_length_with(&mut solver, w).unwrap())
            .collect();
        let cdf: Vec<u64> = elements.iter().map(codim_fix).collect();
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let at = elements.binary_search(&x.compose(y)).unwrap();
                assert!(lr[at] <= lr[i] + lr[j]);
                assert!(cdf[at] <= cdf[i] + cdf[j]);
            }
        }
    }

    // partial-order axioms for the induced relations
    for (group, stat) in [
        (params(3, 3, 3), Statistic::reflection_length()),
        (params(3, 3, 3), Statistic::codim_fix()),
        (params(1, 1, 4), Statistic::excedance()),
    ] {
        let carrier: Vec<WreathElement> = enumerate_group(&group, 10_000).unwrap().collect();
        let poset = FinitePoset::build(carrier, &stat).unwrap();
        let size = poset.len();
        for i in 0..size {
            assert!(poset.leq(i, i));
            for j in 0..size {
                if i != j && poset.leq(i, j) {
                    assert!(!poset.leq(j, i));
                }
                for k in 0..size {
                    if poset.leq(i, j) && poset.leq(j, k) {
                        assert!(poset.leq(i, k));
                    }
                }
            }
        }
    }

    // randomized suites under the proptest harness
    let pool: Vec<(GroupParams, Vec<WreathElement>)> = sweep_groups()
        .into_iter()
        .filter(|group| group.order().unwrap() <= 500)
        .map(|group| {
            let elements = enumerate_group(&group, 10_000).unwrap().collect();
            (group, elements)
        })
        .collect();
    let picker = {
        let sizes: Vec<usize> = pool.iter().map(|(_, elements)| elements.len()).collect();
        move |g: usize| sizes[g]
    };
    let indexed_pair = (0..pool.len()).prop_flat_map(move |g| {
        let size = picker(g);
        (Just(g), 0..size, 0..size)
    });

    // conjugation invariance of both statistics
    let mut runner = TestRunner::new(PtConfig {
        cases: 2000,
        ..PtConfig::default()
    });
    runner
        .run(&indexed_pair.clone(), |(g, i, j)| {
            let (_, elements) = &pool[g];
            let (w, h) = (&elements[i], &elements[j]);
            let conjugate = w.conjugated_by(h);
            prop_assert_eq!(
                reflection_length(&conjugate).unwrap(),
                reflection_length(w).unwrap()
            );
            prop_assert_eq!(codim_fix(&conjugate), codim_fix(w));
            Ok(())
        })
        .unwrap();

    // the general bound on induced partitions, 10^5 random (u, w) pairs
    let mut runner = TestRunner::new(PtConfig {
        cases: 100_000,
        ..PtConfig::default()
    });
    runner
        .run(&indexed_pair.clone(), |(g, i, j)| {
            let (group, elements) = &pool[g];
            let (u, w) = (&elements[i], &elements[j]);
            let induced = induced_cycle_partition(u, w);
            let wd = w.cycle_data();
            let nonzero_blocks = induced
                .blocks()
                .iter()
                .filter(|block| {
                    block
                        .iter()
                        .fold(0u64, |acc, &c| (acc + wd.cycles()[c].weight) % group.m())
                        != 0
                })
                .count() as i64;
            let lhs = (codim_fix(u) + codim_fix(&u.inverse().compose(w))) as i64;
            let rhs = group.n() as i64 + wd.count() as i64 - 2 * induced.block_count() as i64
                + nonzero_blocks;
            prop_assert!(lhs >= rhs, "u={} w={}", u, w);
            Ok(())
        })
        .unwrap();

    // order reversal on 100 random intervals
    let indexed_single = {
        let sizes: Vec<usize> = pool.iter().map(|(_, elements)| elements.len()).collect();
        (0..pool.len()).prop_flat_map(move |g| {
            let size = sizes[g];
            (Just(g), 0..size, proptest::bool::ANY)
        })
    };
    let mut runner = TestRunner::new(PtConfig {
        cases: 100,
        ..PtConfig::default()
    });
    runner
        .run(&indexed_single, |(g, i, use_lr)| {
            let (_, elements) = &pool[g];
            let stat = if use_lr {
                Statistic::reflection_length()
            } else {
                Statistic::codim_fix()
            };
            let iv = interval(&elements[i], &stat, 10_000).unwrap();
            prop_assert_eq!(antiautomorphism_check(&iv, &stat), Ok(true));
            Ok(())
        })
        .unwrap();

    // signed-permutation composition agrees with the wreath model, randomly
    let mut runner = TestRunner::new(PtConfig {
        cases: 1000,
        ..PtConfig::default()
    });
    let b3: Vec<WreathElement> = enumerate_group(&params(2, 1, 3), 1000).unwrap().collect();
    let size = b3.len();
    runner
        .run(&(0..size, 0..size), |(i, j)| {
            let (x, y) = (&b3[i], &b3[j]);
            let sx = SignedPermutation::from_wreath(x).unwrap();
            let sy = SignedPermutation::from_wreath(y).unwrap();
            prop_assert_eq!(
                sx.compose(&sy),
                SignedPermutation::from_wreath(&x.compose(y)).unwrap()
            );
            Ok(())
        })
        .unwrap();

    println!(
        "criterion 9 PASS: axiom, subadditivity, invariance, order, reversal, and bound suites all clean, {:?}",
        started.elapsed()
    );
}
