//! Batch evaluation of every admissible `(d, a, b)` up to a bound.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use tvcount_core::{degree_of_power_sum_locus, validate_from_degree, PowerSumProblem};

/// Environment variable capping the worker threads; `0` or unset means
/// automatic.
pub const THREADS_ENV: &str = "TVCOUNT_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub d: u64,
    pub a: u32,
    pub b: u32,
    pub m: u32,
    pub n: u32,
    pub gcd: u32,
    #[serde(serialize_with = "as_decimal")]
    pub degree: BigInt,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// All `(d, a, b)` with `d ≤ max_d`, `a ≥ b ≥ 2` dividing `d` and
/// `gcd(d/a, d/b) ∈ {1, 2}`, sorted by `(d, a, b)`.
///
/// Only `a ≥ b` is listed since the count is symmetric under `(a, b) ↔ (b, a)`.
pub fn admissible_problems(max_d: u64) -> Vec<PowerSumProblem> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        let divisors: Vec<u32> =
            (2..=d).filter(|x| d % x == 0).filter_map(|x| u32::try_from(x).ok()).collect();
        for &a in &divisors {
            for &b in divisors.iter().filter(|&&b| b <= a) {
                if let Ok(p) = validate_from_degree(d, a, b) {
                    out.push(p);
                }
            }
        }
    }
    out
}

pub fn evaluate(problems: &[PowerSumProblem]) -> Result<Vec<TableRow>, tvcount_core::Error> {
    problems
        .par_iter()
        .map(|p| {
            Ok(TableRow {
                d: p.d(),
                a: p.a(),
                b: p.b(),
                m: p.m(),
                n: p.n(),
                gcd: p.gcd(),
                degree: degree_of_power_sum_locus(p)?,
            })
        })
        .collect()
}

/// Reads [`THREADS_ENV`]; an unparsable value is an error.
pub fn thread_count() -> Result<usize, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(0),
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => {
            v.trim().parse().map_err(|_| format!("{THREADS_ENV} must be a nonnegative integer, got {v:?}"))
        }
    }
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut s = String::from("d,a,b,m,n,gcd,degree\n");
    for r in rows {
        s.push_str(&format!("{},{},{},{},{},{},{}\n", r.d, r.a, r.b, r.m, r.n, r.gcd, r.degree));
    }
    s
}

pub fn to_text(rows: &[TableRow]) -> String {
    let header = ["d", "a", "b", "m", "n", "gcd", "degree"];
    let cells: Vec<[String; 7]> = rows
        .iter()
        .map(|r| {
            [
                r.d.to_string(),
                r.a.to_string(),
                r.b.to_string(),
                r.m.to_string(),
                r.n.to_string(),
                r.gcd.to_string(),
                r.degree.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut s = String::new();
    let mut line = |fields: &[&str]| {
        let padded: Vec<String> = fields.iter().zip(widths).map(|(f, w)| format!("{f:>w$}")).collect();
        s.push_str(padded.join("  ").trim_end());
        s.push('\n');
    };
    line(&header);
    for row in &cells {
        line(&row.each_ref().map(String::as_str));
    }
    s
}
