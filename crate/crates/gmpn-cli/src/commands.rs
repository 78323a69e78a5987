//! The individual subcommands: element reports, interval queries, witness
//! construction, heritability reports, and their text/JSON/DOT rendering.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use gmpn::characterize::{
    heritability, intervals_coincide, reflection_witness, restriction_witness, Condition,
};
use gmpn::lengths::{codim_fix, reflection_length};
use gmpn::notation::parse;
use gmpn::partitions::v_max;
use gmpn::posets::{antiautomorphism_check, interval, Interval, Statistic};
use gmpn::special::{is_parabolic_quasi_coxeter, is_regular, RegularShape};
use gmpn::{Error, GroupParams, WreathElement};

use crate::config::Config;
use crate::report::{
    CycleJson, GroupJson, HeritabilityConditionJson, HeritabilityReportJson, InfoReport,
    IntervalReport, FORMAT_VERSION,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    ReflectionLength,
    CodimFix,
}

impl OrderKind {
    pub fn statistic(self) -> Statistic {
        match self {
            OrderKind::ReflectionLength => Statistic::reflection_length(),
            OrderKind::CodimFix => Statistic::codim_fix(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::ReflectionLength => "lr",
            OrderKind::CodimFix => "cdf",
        }
    }
}

/// Parses an element spec, insisting on subgroup membership.
pub fn parse_member(spec: &str) -> Result<(GroupParams, WreathElement)> {
    let (params, w) = parse(spec).with_context(|| format!("cannot parse `{spec}`"))?;
    if !w.is_member() {
        bail!(
            "element {w} is not a member of G({},{},{}): total weight {} is not 0 mod {}",
            params.m(),
            params.p(),
            params.n(),
            w.total_weight(),
            params.p()
        );
    }
    Ok((params, w))
}

pub fn cmd_info(spec: &str, format: OutputFormat, _config: &Config) -> Result<String> {
    let (params, w) = parse_member(spec)?;
    let data = w.cycle_data();
    let vm = v_max(&data, &params)?;
    let verdict = intervals_coincide(&w)?;
    let regularity = is_regular(&w)?;
    let pqc = match is_parabolic_quasi_coxeter(&w) {
        Ok(value) => Some(value),
        Err(Error::UnsupportedParams { .. }) => None,
        Err(other) => return Err(other.into()),
    };
    let report = InfoReport {
        format_version: FORMAT_VERSION,
        group: GroupJson::new(&params),
        element: w.to_string(),
        member: true,
        cycles: data
            .cycles()
            .iter()
            .map(|c| CycleJson {
                support: c.support.iter().map(|&pos| pos + 1).collect(),
                weight: c.weight,
            })
            .collect(),
        cycle_count: data.count() as u64,
        zero_weight_cycles: data.zero_weight_count() as u64,
        codim_fix: codim_fix(&w),
        reflection_length: reflection_length(&w)?,
        v_max: vm.value,
        v_max_witness: vm.witness.display(&data).to_string(),
        condition1: verdict.pairing,
        condition2: verdict.subsets,
        failing_subset: verdict.failing_subset.clone(),
        predicate: verdict.holds(),
        regular: regularity.regular,
        regular_shape: regularity.shape.map(|shape| match shape {
            RegularShape::EpsilonPower { r, cycles } => {
                format!("epsilon power (r = {r}, {cycles} cycles)")
            }
            RegularShape::EpsilonPrimePower { r, cycles } => {
                format!("epsilon' power (r = {r}, {cycles} + 1 cycles)")
            }
        }),
        parabolic_quasi_coxeter: pqc,
    };
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&report)?),
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "element: {}", report.element)?;
            writeln!(
                out,
                "group: G({},{},{}) of order {}",
                report.group.m, report.group.p, report.group.n, report.group.order
            )?;
            write!(out, "cycles:")?;
            for c in &report.cycles {
                write!(
                    out,
                    " ({})[{}]",
                    c.support
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    c.weight
                )?;
            }
            writeln!(out)?;
            writeln!(
                out,
                "c(w) = {}, c_0(w) = {}",
                report.cycle_count, report.zero_weight_cycles
            )?;
            writeln!(out, "codim_fix = {}", report.codim_fix)?;
            writeln!(out, "reflection_length = {}", report.reflection_length)?;
            writeln!(
                out,
                "v_max = {} with witness {}",
                report.v_max, report.v_max_witness
            )?;
            writeln!(
                out,
                "condition1 (weights pair to zero): {}",
                report.condition1
            )?;
            writeln!(
                out,
                "condition2 (zero-sum subsets pair): {}",
                report.condition2
            )?;
            if let Some(subset) = &report.failing_subset {
                writeln!(out, "minimal failing subset: {subset:?}")?;
            }
            writeln!(out, "intervals coincide: {}", report.predicate)?;
            match &report.regular_shape {
                Some(shape) => writeln!(out, "regular: yes, {shape}")?,
                None => writeln!(out, "regular: no")?,
            }
            match report.parabolic_quasi_coxeter {
                Some(value) => writeln!(out, "parabolic quasi-Coxeter: {value}")?,
                None => writeln!(out, "parabolic quasi-Coxeter: undefined for 1 < p < m")?,
            }
            Ok(out)
        }
    }
}

pub fn cmd_interval(
    spec: &str,
    order: OrderKind,
    format: IntervalFormat,
    config: &Config,
) -> Result<String> {
    let (params, w) = parse_member(spec)?;
    let stat = order.statistic();
    let iv = interval(&w, &stat, config.enumeration_cap)?;
    let (edges, omitted) = if iv.len() <= config.hasse_cap {
        (iv.hasse_edges(&stat), false)
    } else {
        (Vec::new(), true)
    };
    let report = IntervalReport {
        format_version: FORMAT_VERSION,
        group: GroupJson::new(&params),
        top: w.to_string(),
        order: order.as_str().into(),
        size: iv.len() as u64,
        members: iv.members.iter().map(|u| u.to_string()).collect(),
        member_values: iv.values.clone(),
        hasse_edges: edges,
        hasse_omitted: omitted,
    };
    match format {
        IntervalFormat::Json => Ok(serde_json::to_string_pretty(&report)?),
        IntervalFormat::Dot => Ok(render_dot(&report)),
        IntervalFormat::Text => {
            let mut out = String::new();
            writeln!(
                out,
                "interval [id, {}] under {} has {} members",
                report.top, report.order, report.size
            )?;
            for (member, value) in report.members.iter().zip(&report.member_values) {
                writeln!(out, "  {value}  {member}")?;
            }
            if report.hasse_omitted {
                writeln!(out, "hasse edges omitted (interval larger than hasse_cap)")?;
            } else {
                writeln!(out, "hasse edges: {:?}", report.hasse_edges)?;
            }
            Ok(out)
        }
    }
}

fn render_dot(report: &IntervalReport) -> String {
    let mut out = String::new();
    out.push_str("digraph interval {\n  rankdir=BT;\n  node [shape=box];\n");
    for (index, member) in report.members.iter().enumerate() {
        let label = member.replace('"', "\\\"");
        out.push_str(&format!("  {index} [label=\"{label}\"];\n"));
    }
    for &(a, b) in &report.hasse_edges {
        out.push_str(&format!("  {a} -> {b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Builds whichever separating witness applies to the element, verifying
/// its defining equations, and reports the antiautomorphism sanity check of
/// the codimension interval as a bonus when it is small enough.
pub fn cmd_witness(spec: &str, config: &Config) -> Result<String> {
    let (params, w) = parse_member(spec)?;
    let verdict = intervals_coincide(&w)?;
    let mut out = String::new();
    writeln!(out, "element: {w}")?;
    if verdict.holds() {
        writeln!(
            out,
            "the two intervals below the element coincide; no witness exists"
        )?;
        return Ok(out);
    }
    if !verdict.pairing {
        let t = reflection_witness(&w)?;
        let rest = t.inverse().compose(&w);
        writeln!(out, "reflection witness: {t}")?;
        writeln!(
            out,
            "  below in length order: {} + {} = {}",
            reflection_length(&t)?,
            reflection_length(&rest)?,
            reflection_length(&w)?
        )?;
        writeln!(
            out,
            "  not below in codimension order: {} + {} > {}",
            codim_fix(&t),
            codim_fix(&rest),
            codim_fix(&w)
        )?;
    } else {
        let u = restriction_witness(&w)?;
        let rest = u.inverse().compose(&w);
        writeln!(out, "restriction witness: {u}")?;
        writeln!(
            out,
            "  below in codimension order: {} + {} = {}",
            codim_fix(&u),
            codim_fix(&rest),
            codim_fix(&w)
        )?;
        writeln!(
            out,
            "  not below in length order: reflection_length {} > codim_fix {}",
            reflection_length(&u)?,
            codim_fix(&u)
        )?;
    }
    let order = params
        .order()
        .ok_or_else(|| anyhow!("group order overflow"))?;
    if order <= 1000 {
        let stat = Statistic::codim_fix();
        let iv: Interval = interval(&w, &stat, config.enumeration_cap)?;
        let reversal = antiautomorphism_check(&iv, &stat)?;
        writeln!(out, "codimension interval reversal symmetry: {reversal}")?;
    }
    Ok(out)
}

pub fn cmd_heritability(spec: &str, format: OutputFormat, config: &Config) -> Result<String> {
    let (params, w) = parse_member(spec)?;
    let report = heritability(&w, config.enumeration_cap)?;
    let json = HeritabilityReportJson {
        format_version: FORMAT_VERSION,
        group: GroupJson::new(&params),
        element: w.to_string(),
        enumerated: report.enumerated,
        conditions: Condition::ALL
            .iter()
            .map(|&condition| {
                let outcome = report.outcome(condition);
                HeritabilityConditionJson {
                    condition: condition.label().to_string(),
                    description: condition.describe().into(),
                    holds: outcome.holds,
                    counterexample: outcome.counterexample.as_ref().map(|u| u.to_string()),
                    absent_reason: if outcome.holds.is_none() {
                        Some("group order exceeds the enumeration cap".into())
                    } else {
                        None
                    },
                }
            })
            .collect(),
    };
    match format {
        OutputFormat::Json => Ok(serde_json::to_string_pretty(&json)?),
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "element: {}", json.element)?;
            writeln!(out, "interval conditions enumerated: {}", json.enumerated)?;
            for condition in &json.conditions {
                let value = match condition.holds {
                    Some(true) => "true",
                    Some(false) => "false",
                    None => "absent (group order exceeds the enumeration cap)",
                };
                writeln!(
                    out,
                    "({}) {}: {}",
                    condition.condition, condition.description, value
                )?;
                if let Some(counterexample) = &condition.counterexample {
                    writeln!(out, "    counterexample: {counterexample}")?;
                }
            }
            Ok(out)
        }
    }
}
