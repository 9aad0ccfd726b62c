//! Deterministic artifact rendering: decimal strings, CSV tables, and the
//! JSON document shared by `run` and `verify`.
//!
//! Data files never contain timestamps; identical configurations must
//! produce byte-identical bytes on every platform.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use kgvim_core::{BoundReport, IterationTrace, LemmaReport, Rational};

use crate::CliError;

/// Renders a rational in decimal with 17 significant digits, rounding
/// half to even. Plain notation is used for exponents in `-5..=16`,
/// scientific notation elsewhere; trailing zeros are trimmed.
pub fn decimal17(x: &Rational) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let numer = x.numer().abs();
    let denom = x.denom().clone();

    // decimal exponent: 10^e10 <= |x| < 10^(e10 + 1)
    let digit_gap = digit_count(&numer) as i64 - digit_count(&denom) as i64;
    let mut e10 = if at_least_pow10(&numer, &denom, digit_gap) {
        digit_gap
    } else {
        digit_gap - 1
    };

    // 17-digit mantissa of |x| via one exact division
    let shift = 16 - e10;
    let (scaled_numer, scaled_denom) = if shift >= 0 {
        (&numer * pow10(shift as u32), denom)
    } else {
        (numer, &denom * pow10((-shift) as u32))
    };
    let mut mantissa = round_half_even(&scaled_numer, &scaled_denom);
    if mantissa == pow10(17) {
        mantissa = pow10(16);
        e10 += 1;
    }

    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), 17);
    let sign = if x.is_negative() { "-" } else { "" };
    let body = if (0..=16).contains(&e10) {
        let split = (e10 + 1) as usize;
        let int_part = &digits[..split];
        let frac_part = digits[split..].trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_owned()
        } else {
            format!("{int_part}.{frac_part}")
        }
    } else if (-5..0).contains(&e10) {
        let zeros = "0".repeat((-e10 - 1) as usize);
        format!("0.{zeros}{}", digits.trim_end_matches('0'))
    } else {
        let rest = digits[1..].trim_end_matches('0');
        if rest.is_empty() {
            format!("{}e{}", &digits[..1], e10)
        } else {
            format!("{}.{}e{}", &digits[..1], rest, e10)
        }
    };
    format!("{sign}{body}")
}

fn digit_count(n: &BigInt) -> usize {
    n.to_string().trim_start_matches('-').len()
}

fn pow10(exp: u32) -> BigInt {
    BigInt::from(10u32).pow(exp)
}

/// Whether `numer/denom >= 10^e`.
fn at_least_pow10(numer: &BigInt, denom: &BigInt, e: i64) -> bool {
    if e >= 0 {
        *numer >= denom * pow10(e as u32)
    } else {
        numer * pow10((-e) as u32) >= *denom
    }
}

fn round_half_even(numer: &BigInt, denom: &BigInt) -> BigInt {
    let quotient = numer / denom;
    let remainder = numer - &quotient * denom;
    let doubled = &remainder * BigInt::from(2);
    match doubled.cmp(denom) {
        std::cmp::Ordering::Less => quotient,
        std::cmp::Ordering::Greater => quotient + 1,
        std::cmp::Ordering::Equal => {
            if (&quotient % BigInt::from(2)).is_zero() {
                quotient
            } else {
                quotient + 1
            }
        }
    }
}

/// CSV for a coefficient table: one `exact` and one `decimal` row per
/// iteration, columns `a0..aD` zero-padded to the table width.
pub fn run_csv(trace: &IterationTrace) -> String {
    let table = trace.coefficient_table();
    let width = table.first().map_or(0, Vec::len);
    let mut out = String::from("iter,rep");
    for k in 0..width {
        out.push_str(&format!(",a{k}"));
    }
    out.push('\n');
    for (n, row) in table.iter().enumerate() {
        out.push_str(&format!("{n},exact"));
        for value in row {
            out.push_str(&format!(",{value}"));
        }
        out.push('\n');
        out.push_str(&format!("{n},decimal"));
        for value in row {
            out.push_str(&format!(",{}", decimal17(value)));
        }
        out.push('\n');
    }
    out
}

fn table_values(trace: &IterationTrace) -> (Value, Value) {
    let table = trace.coefficient_table();
    let exact: Vec<Value> = table
        .iter()
        .map(|row| Value::Array(row.iter().map(|v| json!(v.to_string())).collect()))
        .collect();
    let decimal: Vec<Value> = table
        .iter()
        .map(|row| Value::Array(row.iter().map(|v| json!(decimal17(v))).collect()))
        .collect();
    (Value::Array(exact), Value::Array(decimal))
}

fn lemma_value(report: &LemmaReport) -> Value {
    json!({
        "prefix_growth": {
            "pass": report.prefix_growth_passes(),
            "prefix_lengths": report.prefix_lengths,
            "violations": report.prefix_violations.iter().map(|v| json!({
                "step": v.step, "before": v.before, "after": v.after,
            })).collect::<Vec<_>>(),
        },
        "support_growth": {
            "pass": report.support_growth_passes(),
            "violations": report.support_violations.iter().map(|v| json!({
                "step": v.step,
                "degree_before": v.degree_before,
                "degree_after": v.degree_after,
            })).collect::<Vec<_>>(),
        },
        "magnitude_bound": {
            "pass": report.magnitude_bound_passes(),
            "violations": report.magnitude_violations.iter().map(|v| json!({
                "iteration": v.iteration, "index": v.index, "value": v.value.to_string(),
            })).collect::<Vec<_>>(),
        },
    })
}

fn bound_value(report: &BoundReport) -> Value {
    json!({
        "pass": report.all_pass(),
        "checked": report.entries.len(),
        "entries": report.entries.iter().map(|e| json!({
            "iteration": e.iteration,
            "index": e.index,
            "value": e.value.to_string(),
            "bound": e.bound.to_string(),
            "pass": e.pass,
        })).collect::<Vec<_>>(),
    })
}

/// The JSON document `{config, table, table_decimal, reports}`. Rationals
/// are `p/q` strings; key order is alphabetical, so output is stable.
pub fn table_json(
    config: Value,
    trace: &IterationTrace,
    reports: Option<(&LemmaReport, &BoundReport)>,
) -> String {
    let (exact, decimal) = table_values(trace);
    let reports = match reports {
        Some((lemmas, bounds)) => json!({
            "lemmas": lemma_value(lemmas),
            "bounds": bound_value(bounds),
        }),
        None => Value::Null,
    };
    let mut doc = Map::new();
    doc.insert("config".into(), config);
    doc.insert("table".into(), exact);
    doc.insert("table_decimal".into(), decimal);
    doc.insert("reports".into(), reports);
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
    text.push('\n');
    text
}

/// Reads the `table` field of a JSON artifact back into exact rationals.
pub fn parse_table_json(text: &str) -> Result<Vec<Vec<Rational>>, CliError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| CliError::Json(format!("invalid JSON: {e}")))?;
    let rows = doc
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Json("missing 'table' array".into()))?;
    rows.iter()
        .map(|row| {
            let cells = row
                .as_array()
                .ok_or_else(|| CliError::Json("table row is not an array".into()))?;
            cells
                .iter()
                .map(|cell| {
                    let text = cell
                        .as_str()
                        .ok_or_else(|| CliError::Json("table cell is not a string".into()))?;
                    text.parse::<Rational>()
                        .map_err(|e| CliError::Json(e.to_string()))
                })
                .collect()
        })
        .collect()
}
