//! End-to-end tests driving the compiled binary: golden outputs, exit
//! codes, the oracle bound override, and coverage of the closed-formula
//! identities in `verify --all`.

use std::collections::BTreeSet;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_composerie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_composerie"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn table_csv_golden_for_ordinary_compositions() {
    let out = run(&[
        "table", "--family", "all-ones", "--max-n", "4", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let expected = "\
0,0,1
1,0,0
1,1,1
2,0,0
2,1,1
2,2,1
3,0,0
3,1,1
3,2,2
3,3,1
4,0,0
4,1,1
4,2,3
4,3,3
4,4,1
0,,1
1,,1
2,,2
3,,4
4,,8
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_single_cell_at_max_n_zero() {
    let out = run(&[
        "table", "--family", "all-ones", "--max-n", "0", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0,0,1\n0,,1\n");
}

#[test]
fn table_rows_match_the_closed_no_two_formula() {
    let out = run(&[
        "table",
        "--family",
        "no-part:2",
        "--max-n",
        "6",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines() {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 3, "line `{line}`");
        if fields[1].is_empty() {
            continue;
        }
        let (n, k): (u64, u64) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        let value: u64 = fields[2].parse().unwrap();
        let closed = composerie::compositions::closed::closed_no_two(n, k);
        assert_eq!(composerie::BigInt::from(value), closed, "cell ({n},{k})");
    }
}

#[test]
fn table_json_values_reparse_exactly() {
    let out = run(&[
        "table", "--family", "squares", "--max-n", "12", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["family"], "squares");
    assert_eq!(doc["ring"], "int");
    let rule = "squares"
        .parse::<composerie::FamilySpec>()
        .unwrap()
        .to_weights()
        .unwrap();
    let table = composerie::build_table(&composerie::Integers, &rule, 12);
    for cell in doc["cells"].as_array().unwrap() {
        let (n, k) = (cell["n"].as_u64().unwrap(), cell["k"].as_u64().unwrap());
        let value: composerie::BigInt = cell["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(&value, table.cell(n, k), "cell ({n},{k})");
    }
    for total in doc["totals"].as_array().unwrap() {
        let n = total["n"].as_u64().unwrap();
        let value: composerie::BigInt = total["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(&value, table.row_total(n), "total n={n}");
    }
}

#[test]
fn count_examples() {
    let out = run(&["count", "--family", "one-or-m:2", "-n", "5", "-k", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n");

    let out = run(&["count", "--family", "two-type-ones:1", "-n", "3"]);
    assert_eq!(stdout(&out), "13\n");

    let out = run(&["count", "--family", "all-ones", "-n", "0"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn count_with_every_pipeline_agrees() {
    let out = run(&[
        "count",
        "--family",
        "all-ones",
        "-n",
        "6",
        "-k",
        "3",
        "--pipeline",
        "rec",
        "--pipeline",
        "gf",
        "--pipeline",
        "oracle",
        "--pipeline",
        "closed",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "10\n");
}

#[test]
fn count_more_parts_than_weight_is_zero_on_every_pipeline() {
    let out = run(&[
        "count",
        "--family",
        "squares",
        "-n",
        "3",
        "-k",
        "7",
        "--pipeline",
        "rec",
        "--pipeline",
        "gf",
        "--pipeline",
        "oracle",
        "--pipeline",
        "closed",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn count_mod_ring_reduces() {
    let out = run(&[
        "count", "--family", "squares", "-n", "16", "--ring", "mod:97",
    ]);
    assert_eq!(code(&out), 0);
    let native: u64 = stdout(&out).trim().parse().unwrap();
    let rule = "squares"
        .parse::<composerie::FamilySpec>()
        .unwrap()
        .to_weights()
        .unwrap();
    let over_z = composerie::count_all_rec(&composerie::Integers, &rule, 16);
    assert_eq!(native, composerie::ring_hom_mod(&over_z, 97));
}

#[test]
fn oracle_pipeline_respects_the_bound_and_env_override() {
    let out = run(&[
        "count",
        "--family",
        "all-ones",
        "-n",
        "19",
        "--pipeline",
        "oracle",
    ]);
    assert_eq!(code(&out), 2, "default bound 18 rejects n=19");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("oracle"), "stderr explains: {err}");

    let out = run_env(
        &[
            "count",
            "--family",
            "all-ones",
            "-n",
            "19",
            "--pipeline",
            "oracle",
        ],
        "COMPOSERIE_ORACLE_MAX",
        "19",
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), format!("{}\n", 1u64 << 18));

    let out = run(&[
        "count",
        "--family",
        "all-ones",
        "-n",
        "19",
        "--pipeline",
        "oracle",
        "--oracle-max",
        "19",
    ]);
    assert_eq!(code(&out), 0, "the flag overrides too");
}

#[test]
fn closed_pipeline_requires_a_formula() {
    let out = run(&[
        "count",
        "--family",
        "bounded:3",
        "-n",
        "6",
        "-k",
        "2",
        "--pipeline",
        "closed",
    ]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("no per-cell closed formula"), "{err}");
}

#[test]
fn bad_family_and_bad_ring_exit_two() {
    assert_eq!(code(&run(&["table", "--family", "na", "--max-n", "3"])), 2);
    assert_eq!(
        code(&run(&["table", "--family", "no-part:1", "--max-n", "3"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "table", "--family", "all-ones", "--max-n", "3", "--ring", "mod:1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&["count", "--family", "all-ones"])),
        2,
        "missing -n"
    );
}

#[test]
fn verify_single_family_passes() {
    let out = run(&["verify", "--family", "residue-1-mod:2", "--max-n", "20"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn verify_all_passes_and_covers_every_closed_formula() {
    let out = run(&["verify", "--all", "--max-n", "10", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["total_failures"], 0);
    let mut identities = BTreeSet::new();
    for report in doc["reports"].as_array().unwrap() {
        for entry in report["entries"].as_array().unwrap() {
            assert_eq!(entry["pass"], true);
            identities.insert(entry["identity"].as_str().unwrap().to_string());
        }
    }
    for required in [
        "rec-vs-gf",
        "rec-vs-oracle",
        "row-sum-vs-total-recurrence",
        "total-via-gf",
        "all-ones-doubling",
        "closed/all-ones",
        "closed/allowed-set",
        "closed/one-or-m-total",
        "closed/residue",
        "closed/no-2",
        "closed/no-3",
        "closed/no-m",
        "closed/two-type-ones",
        "closed/binomial-weights",
        "closed/pyramidal-weights",
        "closed/squares",
        "closed/no-2-shift-eight",
        "fib/odd-parts-sum",
        "fib/odd-parts-total",
        "fib/two-type-ones-sum",
        "fib/two-type-ones-total",
    ] {
        assert!(identities.contains(required), "missing identity {required}");
    }
}

#[test]
fn verify_csv_rows_have_seven_fields() {
    let out = run(&[
        "verify", "--family", "all-ones", "--max-n", "4", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines() {
        assert_eq!(line.split(',').count(), 7, "line `{line}`");
        assert!(line.ends_with(",true"), "all checks pass: `{line}`");
    }
}

#[test]
fn bench_reports_fewer_multiplications_for_squaring() {
    let out = run(&["bench", "--order", "64", "--power", "8", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut naive_muls = None;
    let mut square_muls = None;
    for line in text.lines() {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 6, "line `{line}`");
        match (fields[0], fields[3]) {
            ("int", "naive") => naive_muls = Some(fields[4].parse::<u64>().unwrap()),
            ("int", "squaring") => square_muls = Some(fields[4].parse::<u64>().unwrap()),
            _ => {}
        }
    }
    let (naive, squaring) = (naive_muls.unwrap(), square_muls.unwrap());
    assert_eq!(naive, 7, "k - 1 products");
    assert_eq!(squaring, 3, "floor(log2 k) + popcount(k) - 1");
    assert!(squaring < naive);
    // Both rings appear.
    assert!(text.lines().any(|l| l.starts_with("mod:2147483647,")));
}

#[test]
fn bench_json_shape() {
    let out = run(&["bench", "--order", "32", "--power", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["family"], "all-ones");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 4);
}
