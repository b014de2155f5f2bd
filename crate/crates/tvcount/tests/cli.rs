use std::process::{Command, Output};

use serde_json::Value;
use tvcount::formats::{FormJson, PolynomialJson};
use tvcount_core::cycle_classes::{beta_explicit_sum, excess_correction};
use tvcount_core::{beta_pushforward, BinaryForm, TruncatedPolynomial};

fn tvcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvcount")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    tvcount(args).status.code().unwrap()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["count", "--m", "2", "--n", "3", "--a", "3", "--b", "2"], 0),
        (&["count", "--d", "12", "--a", "3", "--b", "2"], 0),
        (&["count", "--m", "4", "--n", "8", "--a", "4", "--b", "2"], 2),
        (&["count", "--m", "2", "--n", "3", "--a", "2", "--b", "2"], 2),
        (&["count", "--d", "12", "--a", "5", "--b", "2"], 2),
        (&["count", "--m", "2", "--a", "3", "--b", "2"], 1),
        (&["count", "--m", "x", "--n", "3", "--a", "3", "--b", "2"], 1),
        (&["class", "--m", "1", "--n", "1"], 0),
        (&["class", "--m", "3", "--n", "6"], 2),
        (&["class", "--m", "2", "--n", "2", "--format", "yaml"], 1),
        (&["transvect", "--f", "1,0,0", "--g", "0,1"], 0),
        (&["transvect", "--f", "1,a", "--g", "0,1"], 1),
        (&["transvect", "--f", "1/0", "--g", "0,1"], 1),
        (&["transvect", "--f", "5", "--g", "0,1"], 2),
        (&["table", "--max-d", "4"], 0),
        (&["table"], 1),
        (&["selftest"], 0),
        (&["frobnicate"], 1),
        (&[], 1),
        (&["--help"], 0),
    ];
    for (args, expected) in cases {
        assert_eq!(code(args), *expected, "{args:?}");
    }
}

#[test]
fn count_outputs() {
    let o = tvcount(&["count", "--m", "2", "--n", "3", "--a", "3", "--b", "2"]);
    assert_eq!(stdout(&o), "40\n");
    let o = tvcount(&["count", "--d", "12", "--a", "3", "--b", "2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["command"], "count");
    assert_eq!(v["inputs"]["d"], 12);
    assert_eq!(v["result"]["degree"], "3762");
    assert_eq!(v["result"]["gcd"], 2);
    assert_eq!((v["result"]["m"].as_u64(), v["result"]["n"].as_u64()), (Some(4), Some(6)));
    assert!(v["warnings"].as_array().unwrap().is_empty());

    let o = tvcount(&["count", "--m", "4", "--n", "8", "--a", "4", "--b", "2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported gcd"));
}

#[test]
fn swapped_input_is_normalized() {
    let o = tvcount(&["count", "--m", "6", "--n", "4", "--a", "2", "--b", "3", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["m"], 4);
    assert_eq!(v["result"]["a"], 3);
    assert_eq!(v["result"]["degree"], "3762");
}

#[test]
fn json_reserializes_byte_identically() {
    let commands: &[&[&str]] = &[
        &["count", "--m", "4", "--n", "10", "--a", "5", "--b", "2", "--json"],
        &["count", "--m", "1", "--n", "1", "--a", "3", "--b", "3", "--json"],
        &["class", "--m", "4", "--n", "6", "--format", "json"],
        &["transvect", "--f", "1/2,-3,0", "--g", "2,7", "--json"],
        &["table", "--max-d", "8", "--json"],
    ];
    for args in commands {
        let text = stdout(&tvcount(args));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap() + "\n", text, "{args:?}");
    }
}

#[test]
fn class_json_round_trips_through_schema() {
    for (m, n) in [(1, 1), (2, 2), (2, 5), (4, 6), (7, 3)] {
        let (ms, ns) = (m.to_string(), n.to_string());
        let text = stdout(&tvcount(&["class", "--m", &ms, "--n", &ns, "--format", "json"]));
        let v: Value = serde_json::from_str(&text).unwrap();
        let json: PolynomialJson = serde_json::from_value(v["result"].clone()).unwrap();
        let p = TruncatedPolynomial::try_from(&json).unwrap();
        assert_eq!(p, beta_pushforward(m, n).unwrap());
        assert_eq!(PolynomialJson::from(&p), json);
        let exps: Vec<_> = json.terms.iter().map(|t| t.exp.clone()).collect();
        let mut sorted = exps.clone();
        sorted.sort();
        assert_eq!(exps, sorted);
    }
}

#[test]
fn class_text_and_latex() {
    assert_eq!(stdout(&tvcount(&["class", "--m", "1", "--n", "1"])), "1\n");
    assert_eq!(
        stdout(&tvcount(&["class", "--m", "2", "--n", "2", "--format", "latex"])),
        "\\zeta_{3}^{2} + \\zeta_{2}\\zeta_{3} + \\zeta_{1}\\zeta_{3} + \\zeta_{1}\\zeta_{2}\n"
    );
}

#[test]
fn transvect_outputs() {
    assert_eq!(stdout(&tvcount(&["transvect", "--f", "1,0,0", "--g", "0,1"])), "2,0\n");
    assert_eq!(stdout(&tvcount(&["transvect", "--f", "1,1", "--g", "1,1"])), "0\n");
    assert_eq!(stdout(&tvcount(&["transvect", "--f", "1,0", "--g", "0,1"])), "1\n");
    assert_eq!(stdout(&tvcount(&["transvect", "--f", "-1,0", "--g", "0,1"])), "-1\n");
    // binomial coordinates: (1,1,1) is (x + y)^2 and {(x+y)^2, x} = -2(x + y)
    assert_eq!(stdout(&tvcount(&["transvect", "--f", "1,1,1", "--g", "1,0", "--binomial"])), "-2,-2\n");
    let text = stdout(&tvcount(&["transvect", "--f", "1,0,0", "--g", "0,1", "--json"]));
    let v: Value = serde_json::from_str(&text).unwrap();
    let t: FormJson = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(BinaryForm::try_from(&t).unwrap(), BinaryForm::from_integers(&[2, 0]).unwrap());
}

#[test]
fn table_rows() {
    let csv = stdout(&tvcount(&["table", "--max-d", "6", "--csv"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("d,a,b,m,n,gcd,degree"));
    let rows: Vec<Vec<u64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert!(rows.contains(&vec![6, 3, 2, 2, 3, 1, 40]));
    assert!(rows.iter().any(|r| r[..3] == [4, 2, 2]));
    assert!(rows.iter().all(|r| r[5] == 1 || r[5] == 2));
    assert!(rows.iter().all(|r| r[1] >= r[2] && r[2] >= 2));
    let keys: Vec<_> = rows.iter().map(|r| (r[0], r[1], r[2])).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(keys, sorted);
    assert!(!stdout(&tvcount(&["table", "--max-d", "5", "--csv"])).lines().any(|l| l.starts_with("6,")));
}

#[test]
fn table_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_tvcount"))
            .args(["table", "--max-d", "16", "--csv"])
            .env("TVCOUNT_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        stdout(&o)
    };
    let single = run("1");
    assert_eq!(run("4"), single);
    assert_eq!(run("0"), single);
    let bad = Command::new(env!("CARGO_BIN_EXE_tvcount"))
        .args(["table", "--max-d", "3"])
        .env("TVCOUNT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn selftest_is_stable() {
    let first = tvcount(&["selftest"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first).lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert_eq!(stdout(&tvcount(&["selftest"])), stdout(&first));
}

#[test]
fn selftest_isolates_a_broken_correction() {
    // subtract the excess term twice
    let faulty = |p: &tvcount_core::PowerSumProblem| {
        let mut beta = beta_explicit_sum(p.m(), p.n());
        if p.gcd() == 2 {
            let z = excess_correction(p.m(), p.n())?;
            let halved = TruncatedPolynomial::zero(z.spec()).add(&z)?.scale(&2.into());
            beta = beta.sub(&halved)?;
        }
        tvcount_core::counting::degree_with_class(p, &beta)
    };
    let results = tvcount::selftest::run_with(faulty);
    let verdicts: Vec<_> = results.iter().map(|r| (r.tuple, r.passed())).collect();
    assert_eq!(
        verdicts,
        vec![((2, 3, 3, 2), true), ((4, 6, 3, 2), false), ((3, 5, 5, 3), true), ((4, 10, 5, 2), false)]
    );
    assert!(tvcount::selftest::report(&results).contains("FAIL (m,n,a,b) = (4,6,3,2)"));
}
