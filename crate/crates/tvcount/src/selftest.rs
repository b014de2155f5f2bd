//! Reproduction check of the four published counts.

use std::fmt::Write as _;

use num_bigint::BigInt;
use tvcount_core::{validate, PowerSumProblem};

/// `(m, n, a, b, degree)`.
pub const PUBLISHED: [(u32, u32, u32, u32, u64); 4] =
    [(2, 3, 3, 2, 40), (4, 6, 3, 2, 3762), (3, 5, 5, 3, 29822), (4, 10, 5, 2, 626327)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub tuple: (u32, u32, u32, u32),
    pub expected: BigInt,
    pub actual: Result<BigInt, String>,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.actual.as_ref() == Ok(&self.expected)
    }
}

/// Runs every published tuple through `count`.
pub fn run_with<F>(count: F) -> Vec<CaseResult>
where
    F: Fn(&PowerSumProblem) -> tvcount_core::Result<BigInt>,
{
    PUBLISHED
        .iter()
        .map(|&(m, n, a, b, expected)| {
            let actual = validate(m, n, a, b).and_then(|p| count(&p)).map_err(|e| e.to_string());
            CaseResult { tuple: (m, n, a, b), expected: expected.into(), actual }
        })
        .collect()
}

pub fn run() -> Vec<CaseResult> {
    run_with(tvcount_core::degree_of_power_sum_locus)
}

pub fn report(results: &[CaseResult]) -> String {
    let mut s = String::new();
    for r in results {
        let (m, n, a, b) = r.tuple;
        let got = match &r.actual {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{verdict} (m,n,a,b) = ({m},{n},{a},{b}): expected {}, got {got}", r.expected);
    }
    s
}
