//! JSON report types. Every report carries `format_version` and round-trips
//! through serde unchanged.
//!
//! Output is byte-deterministic for a fixed (command, flags, config) with
//! one documented exception: `timing_ms` measures wall-clock time. Tests
//! comparing reports across runs zero that field first.

use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub m: u64,
    pub p: u64,
    pub n: usize,
    pub order: u64,
}

impl GroupJson {
    pub fn new(params: &gmpn::GroupParams) -> Self {
        GroupJson {
            m: params.m(),
            p: params.p(),
            n: params.n(),
            order: params
                .order()
                .map_or(u64::MAX, |order| order.min(u64::MAX as u128) as u64),
        }
    }
}

/// Per-representative record of a theorem scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub element: String,
    pub class_size: u64,
    pub cycle_weights: Vec<u64>,
    pub reflection_length: u64,
    pub codim_fix: u64,
    pub condition1: bool,
    pub condition2: bool,
    pub predicate: bool,
    pub brute_force_intervals_equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
}

/// A separating element attached to a failed predicate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    /// `"reflection"`: below the top in length order only;
    /// `"restriction"`: below it in codimension order only.
    pub kind: String,
    pub element: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub representatives: u64,
    pub elements: u64,
    pub predicate_true: u64,
    pub predicate_false: u64,
    pub mismatches: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfigJson {
    pub enumeration_cap: u64,
    pub parallelism: usize,
    pub memo: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub format_version: u32,
    pub group: GroupJson,
    pub mode: String,
    pub config: ScanConfigJson,
    pub records: Vec<ScanRecord>,
    pub summary: ScanSummary,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CycleJson {
    pub support: Vec<usize>,
    pub weight: u64,
}

/// Full per-element report behind `gmpn info`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InfoReport {
    pub format_version: u32,
    pub group: GroupJson,
    pub element: String,
    pub member: bool,
    pub cycles: Vec<CycleJson>,
    pub cycle_count: u64,
    pub zero_weight_cycles: u64,
    pub codim_fix: u64,
    pub reflection_length: u64,
    pub v_max: u64,
    pub v_max_witness: String,
    pub condition1: bool,
    pub condition2: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_subset: Option<Vec<u64>>,
    pub predicate: bool,
    pub regular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular_shape: Option<String>,
    /// Absent when the criterion is undefined (`1 < p < m`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic_quasi_coxeter: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub format_version: u32,
    pub group: GroupJson,
    pub top: String,
    pub order: String,
    pub size: u64,
    pub members: Vec<String>,
    pub member_values: Vec<u64>,
    /// Cover relations as index pairs into `members`; omitted (with
    /// `hasse_omitted = true`) above the configured cap.
    pub hasse_edges: Vec<(usize, usize)>,
    pub hasse_omitted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExcReport {
    pub format_version: u32,
    /// `"a"` for the symmetric group, `"b"` for signed permutations.
    pub kind: String,
    pub n: usize,
    pub carrier_size: u64,
    pub graded: bool,
    pub is_length_function: bool,
    pub rank_sizes: Vec<u64>,
    /// Expected rank sizes: Eulerian numbers for type a; for type b the
    /// reproduced small-rank counts (a conjecture check, not a theorem).
    pub expected_rank_sizes: Vec<u64>,
    pub rank_sizes_match: bool,
    pub unique_maximum: bool,
    pub maximum: String,
    pub expected_maximum: String,
    /// Absent when the carrier exceeds the lattice-check cap.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<bool>,
    pub conjecture_check: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeritabilityConditionJson {
    pub condition: String,
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub absent_reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeritabilityReportJson {
    pub format_version: u32,
    pub group: GroupJson,
    pub element: String,
    pub enumerated: bool,
    pub conditions: Vec<HeritabilityConditionJson>,
}
